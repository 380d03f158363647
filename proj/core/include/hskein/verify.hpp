#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hskein {

enum class Mode { Exact, Randomized };

struct DegreeResidual {
  int degree = 0;
  bool zero = true;
  std::string witness;  // one offending term when nonzero
};

struct VerificationReport {
  std::string name;
  int degree = 0;
  Mode mode = Mode::Exact;
  std::vector<DegreeResidual> residuals;
  double seconds = 0.0;
  /// Set when the check itself threw; the report then fails.
  std::string error;
  /// Negative controls pass when the first nonzero residual sits at this degree.
  std::optional<int> expect_first_failure;

  std::optional<int> first_failure() const;
  bool passed() const;
};

struct VerifyOptions {
  Mode mode = Mode::Exact;
  std::uint64_t seed = 1;
  /// Number of random points in randomized mode.
  int points = 3;
};

/// Psi^{(g,l)} Psi^{-(g,l)} = 1 for each listed (g, l).
std::vector<VerificationReport> verify_inverse_pairs(int n, const VerifyOptions& opts,
                                                     const std::vector<std::pair<int, int>>& gl = {
                                                         {0, 1}, {1, 1}, {2, 1}, {0, 2}, {1, 2}, {0, 3}});
/// Disk series against the hook-content formula, both signs.
std::vector<VerificationReport> verify_disk_closed_form(int n, const VerifyOptions& opts);
/// Annulus series against sum W_lambda (x) W_lambda and its conjugate form.
std::vector<VerificationReport> verify_annulus_closed_form(int n, const VerifyOptions& opts);
/// Psi^{+-(1,1)} against 1 +- z sum C_i (mirrored for the minus sign).
std::vector<VerificationReport> verify_one_holed_torus(int n, const VerifyOptions& opts);
/// Psi^{+-(g,l-1)}(a t) Psi^{-+(g,l-1)}(a^-1 t) = (1 (x) U)(Psi^{+-(g,l)}).
std::vector<VerificationReport> verify_lagrangian_crossing(int n, const VerifyOptions& opts,
                                                           const std::vector<std::pair<int, int>>& gl = {
                                                               {0, 1}, {1, 1}, {0, 2}, {0, 3}});
/// Gluing along a boundary pair (all sign parities) and self-gluing along
/// single rows.
std::vector<VerificationReport> verify_gluing(int n, const VerifyOptions& opts);
/// Every Theorem-1 family above at one degree.
std::vector<VerificationReport> verify_theorem1(int n, const VerifyOptions& opts);

/// Relative recursions of the disk (both sides), inverse disk, one-holed torus,
/// annulus, mirror annulus and H(t), the extraction round trip, plus a
/// perturbed datum that must fail at degree 1.
std::vector<VerificationReport> verify_section4_recursions(int n, const VerifyOptions& opts);

/// Absolute solver (after capping) and exp/ln bridge solver agree with each
/// other and with the known series.
std::vector<VerificationReport> verify_solver_coherence(int n, const VerifyOptions& opts);

/// Character orthogonality, c_lambda = 1/z_lambda, W <-> P round trip for all
/// sizes <= n, and [P_i, e] = (s^i - s^-i) c^i for i <= commutator_max.
std::vector<VerificationReport> verify_foundations(int n, int commutator_max = 8);

std::string mode_name(Mode m);

}  // namespace hskein
