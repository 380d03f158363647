#pragma once

// Reference implementations used only by the tests. They share no code with
// the library beyond the Scalar field.

#include <map>
#include <vector>

#include "hskein/scalar.hpp"

namespace oracle {

using Parts = std::vector<int>;
using Monomials = std::map<std::vector<int>, long>;

// All partitions of n, generated recursively with parts bounded above.
std::vector<Parts> partitions(int n);

// Frobenius formula: coefficient of x^(lambda + delta) in a_delta(x) p_mu(x).
long character(const Parts& lambda, const Parts& mu);

// n! / product of hook lengths.
long dimension(const Parts& lambda);

std::vector<int> hooks(const Parts& lambda);
std::vector<int> contents(const Parts& lambda);

// Schur polynomial in k variables as a sum over semistandard tableaux.
Monomials schur(const Parts& lambda, int k);
Monomials multiply(const Monomials& x, const Monomials& y);

// Product over cells of (a s^c - a^-1 s^-c) / (s^h - s^-h).
hskein::Scalar hook_content_unknot(const Parts& lambda);

// Product over cells of s^(sign c) / (s^h - s^-h), times sign^|lambda|.
hskein::Scalar disk_coefficient(const Parts& lambda, int sign);

// Eigenvalue of the meridian map on W_lambda: unknot + a z sum s^(2c).
hskein::Scalar meridian_eigenvalue(const Parts& lambda);

}  // namespace oracle
