#pragma once

#include <string>
#include <string_view>

#include "hskein/relskein.hpp"
#include "hskein/scalar.hpp"
#include "hskein/skein.hpp"
#include "hskein/tensor_series.hpp"

namespace hskein {

// Text forms. Terms are separated by " + " or " - ", tensor factors by " | ".
// With pretty set, coefficients are printed with z = s - s^-1 factored out.
std::string to_text(const SkeinElem<Scalar>& x, bool pretty = false);
std::string to_text(const TensorSeries<Scalar>& x, bool pretty = false);
std::string to_text(const RelElem<Scalar>& x, bool pretty = false);

// Parses `coeff * W[2,1] - P[1] + 3`. Coefficients may use z. A bare scalar
// term is a multiple of the empty partition. Mixed bases are converted to the
// first basis seen.
SkeinElem<Scalar> parse_skein_text(std::string_view text);

std::string to_json(const SkeinElem<Scalar>& x);
std::string to_json(const TensorSeries<Scalar>& x);
std::string to_json(const RelElem<Scalar>& x);

SkeinElem<Scalar> parse_skein_json(std::string_view text);
TensorSeries<Scalar> parse_series_json(std::string_view text);
RelElem<Scalar> parse_rel_json(std::string_view text);

// True if the JSON document has relative (c-graded) terms.
bool json_is_relative(std::string_view text);

}  // namespace hskein
