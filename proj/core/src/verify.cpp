#include "hskein/verify.hpp"

#include <chrono>
#include <map>
#include <random>

#include "hskein/bps.hpp"
#include "hskein/characters.hpp"
#include "hskein/error.hpp"
#include "hskein/field.hpp"

namespace hskein {

std::optional<int> VerificationReport::first_failure() const {
  for (const auto& r : residuals)
    if (!r.zero) return r.degree;
  return std::nullopt;
}

bool VerificationReport::passed() const {
  if (!error.empty()) return false;
  return first_failure() == expect_first_failure;
}

std::string mode_name(Mode m) { return m == Mode::Exact ? "exact" : "randomized"; }

namespace {

// Nonzero degrees of a residual, each with one witness term.
using Graded = std::map<int, std::string>;

std::string clip(std::string s) {
  constexpr std::size_t limit = 240;
  if (s.size() > limit) s = s.substr(0, limit) + "...";
  return s;
}

std::string tuple_text(const PartitionTuple& t, const std::vector<Basis>& bases) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += " | ";
    out += std::string(basis_name(bases[i])) + t[i].to_string();
  }
  return out.empty() ? "1" : out;
}

template <class K>
Graded graded(const TensorSeries<K>& r) {
  Graded g;
  for (const auto& [key, c] : r.terms())
    if (!g.count(key.degree))
      g[key.degree] = clip(c.to_string() + " * " + tuple_text(key.tuple, r.bases()) +
                           (r.rank() == 0 ? " t^" + std::to_string(key.degree) : ""));
  return g;
}

template <class K>
Graded graded(const RelElem<K>& r) {
  Graded g;
  const std::vector<Basis> bases(static_cast<std::size_t>(r.rank()), Basis::P);
  for (const auto& [key, c] : r.terms()) {
    const int d = key.relative_degree();
    if (!g.count(d)) g[d] = clip(c.to_string() + " * c^" + std::to_string(key.c) + " " + tuple_text(key.tuple, bases));
  }
  return g;
}

void merge(Graded& into, const Graded& from, const std::string& label = "") {
  for (const auto& [d, w] : from)
    if (!into.count(d)) into[d] = label.empty() ? w : label + ": " + w;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

BigRational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-10000, 10000);
  std::uniform_int_distribution<long> den(1, 10000);
  BigRational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

SamplePoint random_point(std::mt19937_64& rng) {
  while (true) {
    SamplePoint p{random_rational(rng), random_rational(rng)};
    if (sgn(p.a) != 0 && sgn(p.s) != 0 && p.s != 1 && p.s != -1) return p;
  }
}

// Runs a residual computation generic in the coefficient field, exactly or at
// random points, and turns the nonzero degrees into a report.
template <class F>
VerificationReport run_check(const std::string& name, int n, const VerifyOptions& opts, F&& f,
                             std::optional<int> expect_first_failure = std::nullopt) {
  VerificationReport rep;
  rep.name = name;
  rep.degree = n;
  rep.mode = opts.mode;
  rep.expect_first_failure = expect_first_failure;
  const auto start = std::chrono::steady_clock::now();
  Graded g;
  try {
    if (opts.mode == Mode::Exact) {
      g = f.template operator()<Scalar>();
    } else {
      std::mt19937_64 rng(opts.seed ^ fnv1a(name));
      for (int k = 0; k < opts.points; ++k) {
        for (int attempt = 0;; ++attempt) {
          try {
            SamplingScope scope(random_point(rng));
            merge(g, f.template operator()<SampledScalar>());
            break;
          } catch (const Error& e) {
            if (e.code() != ErrorCode::PoleAtPoint || attempt >= 20) throw;
          }
        }
      }
    }
  } catch (const std::exception& e) {
    rep.error = e.what();
  }
  for (int d = 0; d <= n; ++d) {
    auto it = g.find(d);
    rep.residuals.push_back({d, it == g.end(), it == g.end() ? "" : it->second});
  }
  for (const auto& [d, w] : g)
    if (d > n) rep.residuals.push_back({d, false, w});
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string sign_text(int sign) { return sign > 0 ? "+" : "-"; }

std::string gl_text(int sign, int g, int l) {
  return "Psi^" + sign_text(sign) + "(" + std::to_string(g) + "," + std::to_string(l) + ")";
}

}  // namespace

std::vector<VerificationReport> verify_inverse_pairs(int n, const VerifyOptions& opts,
                                                     const std::vector<std::pair<int, int>>& gl) {
  std::vector<VerificationReport> out;
  for (const auto& [g, l] : gl) {
    out.push_back(run_check("inverse " + gl_text(1, g, l) + " * " + gl_text(-1, g, l) + " = 1", n, opts,
                            [&, g = g, l = l]<class K>() {
                              const auto prod = make_psi<K>({g, l, 1, n}) * make_psi<K>({g, l, -1, n});
                              return graded(prod - TensorSeries<K>::one(l, n, Basis::P));
                            }));
  }
  return out;
}

std::vector<VerificationReport> verify_disk_closed_form(int n, const VerifyOptions& opts) {
  std::vector<VerificationReport> out;
  for (int sign : {1, -1}) {
    out.push_back(run_check("disk " + gl_text(sign, 0, 1) + " = hook-content formula", n, opts, [&]<class K>() {
      return graded(convert_all(make_psi<K>({0, 1, sign, n}), Basis::W) - disk_closed_form<K>(sign, n));
    }));
  }
  return out;
}

std::vector<VerificationReport> verify_annulus_closed_form(int n, const VerifyOptions& opts) {
  std::vector<VerificationReport> out;
  for (int sign : {1, -1}) {
    const std::string rhs = sign > 0 ? "1 + sum W_l (x) W_l" : "1 + sum (-1)^|l| W_l (x) W_l'";
    out.push_back(run_check("annulus " + gl_text(sign, 0, 2) + " = " + rhs, n, opts, [&]<class K>() {
      return graded(make_psi<K>({0, 2, sign, n}) - annulus_closed_form<K>(sign, n));
    }));
  }
  return out;
}

std::vector<VerificationReport> verify_one_holed_torus(int n, const VerifyOptions& opts) {
  std::vector<VerificationReport> out;
  for (int sign : {1, -1}) {
    const std::string rhs = sign > 0 ? "1 + z sum C_i" : "1 - z sum mirror(C_i)";
    out.push_back(run_check("one-holed torus " + gl_text(sign, 1, 1) + " = " + rhs, n, opts, [&]<class K>() {
      return graded(convert_all(make_psi<K>({1, 1, sign, n}), Basis::W) - one_holed_torus_closed_form<K>(sign, n));
    }));
  }
  return out;
}

std::vector<VerificationReport> verify_lagrangian_crossing(int n, const VerifyOptions& opts,
                                                           const std::vector<std::pair<int, int>>& gl) {
  std::vector<VerificationReport> out;
  for (const auto& [g, l] : gl) {
    for (int sign : {1, -1}) {
      const std::string name = "crossing: " + gl_text(sign, g, l - 1) + "(at) " + gl_text(-sign, g, l - 1) +
                               "(t/a) = (1 (x) U)" + gl_text(sign, g, l);
      out.push_back(run_check(name, n, opts, [&, g = g, l = l]<class K>() {
        const auto lhs = scale_variable(make_psi<K>({g, l - 1, sign, n}), 1) *
                         scale_variable(make_psi<K>({g, l - 1, -sign, n}), -1);
        const auto rhs = apply_factor_op(make_psi<K>({g, l, sign, n}), l - 1, FactorOp::unknot_eval());
        return graded(lhs - rhs);
      }));
    }
  }
  return out;
}

std::vector<VerificationReport> verify_gluing(int n, const VerifyOptions& opts) {
  std::vector<VerificationReport> out;
  struct Pair {
    int g1, l1, g2, l2;
  };
  for (const Pair& p : {Pair{0, 1, 0, 1}, Pair{0, 2, 0, 2}, Pair{1, 1, 0, 2}}) {
    for (int k1 : {0, 1}) {
      for (int k2 : {0, 1}) {
        const int s1 = k1 ? -1 : 1, s2 = k2 ? -1 : 1;
        const std::string name = "gluing " + gl_text(s1, p.g1, p.l1) + " with " + gl_text(s2, p.g2, p.l2) + " = " +
                                 gl_text(s1 * s2, p.g1 + p.g2, p.l1 + p.l2 - 2);
        out.push_back(run_check(name, n, opts, [&]<class K>() {
          const auto joined = tensor_concat(make_psi<K>({p.g1, p.l1, s1, n}), make_psi<K>({p.g2, p.l2, s2, n}));
          const auto glued = pair_factors(joined, p.l1 - 1, p.l1, PairingFamily::AllPartitions);
          return graded(glued - make_psi<K>({p.g1 + p.g2, p.l1 + p.l2 - 2, s1 * s2, n}));
        }));
      }
    }
  }
  for (const auto& [g, l] : std::vector<std::pair<int, int>>{{0, 2}, {0, 3}}) {
    for (int sign : {1, -1}) {
      const std::string name = "self-gluing " + gl_text(sign, g, l) + " along single rows = " + gl_text(sign, g + 1, l - 2);
      out.push_back(run_check(name, n, opts, [&, g = g, l = l]<class K>() {
        const auto glued = pair_factors(make_psi<K>({g, l, sign, n}), l - 2, l - 1, PairingFamily::SingleRows);
        return graded(glued - make_psi<K>({g + 1, l - 2, sign, n}));
      }));
    }
  }
  return out;
}

std::vector<VerificationReport> verify_theorem1(int n, const VerifyOptions& opts) {
  std::vector<VerificationReport> out;
  for (auto&& part : {verify_inverse_pairs(n, opts), verify_lagrangian_crossing(n, opts), verify_gluing(n, opts),
                      verify_disk_closed_form(n, opts), verify_annulus_closed_form(n, opts),
                      verify_one_holed_torus(n, opts)})
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

std::vector<VerificationReport> verify_section4_recursions(int n, const VerifyOptions& opts) {
  std::vector<VerificationReport> out;
  for (DatumKind kind : all_datum_kinds()) {
    const std::string label = recursion_datum<Scalar>(kind, 0).name;
    out.push_back(run_check("relative recursion: " + label, n, opts, [&]<class K>() {
      const auto d = recursion_datum<K>(kind, n);
      return graded(check_relative_recursion(d.phi, d.a, d.side).residual);
    }));
    if (kind == DatumKind::DiskLeft) continue;
    out.push_back(run_check("relative data extraction: " + label, n, opts, [&]<class K>() {
      const auto d = recursion_datum<K>(kind, n);
      return graded(extract_relative_data(d.phi) - d.a);
    }));
  }
  out.push_back(run_check(
      "negative control: disk with A_1 doubled", n, opts,
      [&]<class K>() {
        auto d = recursion_datum<K>(DatumKind::Disk, n);
        d.a += RelElem<K>::c_power(1, 1, n);
        return graded(check_relative_recursion(d.phi, d.a, d.side).residual);
      },
      1));
  return out;
}

std::vector<VerificationReport> verify_solver_coherence(int n, const VerifyOptions& opts) {
  std::vector<VerificationReport> out;
  for (DatumKind kind : all_datum_kinds()) {
    if (kind == DatumKind::DiskLeft) continue;
    const std::string label = recursion_datum<Scalar>(kind, 0).name;
    out.push_back(run_check("solver coherence: " + label, n, opts, [&]<class K>() {
      const auto d = recursion_datum<K>(kind, n);
      const auto absolute = solve_absolute(relative_to_absolute(d.a));
      const auto b = expln_bridge_A_to_B(c_coefficients(d.a));
      const auto bridged = solve_relative_via_bridge(b);
      Graded g;
      merge(g, graded(absolute - bridged), "absolute vs bridge");
      merge(g, graded(absolute - d.phi), "absolute vs known");
      merge(g, graded(check_relative_recursion(bridged, d.a, d.side).residual), "bridge recursion");
      merge(g, graded(check_relative_recursion(absolute, d.a, d.side).residual), "absolute recursion");
      for (std::size_t i = 1; i < b.size() && i < d.b.size(); ++i)
        if (!(b[i] == d.b[i])) merge(g, Graded{{static_cast<int>(i), "B_" + std::to_string(i) + " differs"}});
      return g;
    }));
  }
  return out;
}

std::vector<VerificationReport> verify_foundations(int n, int commutator_max) {
  const VerifyOptions exact;
  std::vector<VerificationReport> out;
  out.push_back(run_check("character orthogonality", n, exact, [&]<class K>() {
    Graded g;
    for (int m = 0; m <= n; ++m) {
      const CharTable& t = char_table(m);
      const auto& parts = t.partitions();
      const std::size_t dim = parts.size();
      BigInt fact;
      mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(m));
      BigInt squares = 0;
      for (std::size_t mu = 0; mu < dim; ++mu) {
        for (std::size_t nu = 0; nu < dim; ++nu) {
          // Both orthogonality relations, scaled to stay integral.
          BigInt col = 0, row = 0;
          for (std::size_t k = 0; k < dim; ++k) {
            col += BigInt(static_cast<long>(t.value(k, mu) * t.value(k, nu)));
            row += BigInt(static_cast<long>(t.value(mu, k) * t.value(nu, k))) * (fact / z_const(parts[k]));
          }
          const BigInt col_expected = mu == nu ? z_const(parts[mu]) : BigInt(0);
          const BigInt row_expected = mu == nu ? fact : BigInt(0);
          if (col != col_expected || row != row_expected)
            g.emplace(m, "chi pairing of " + parts[mu].to_string() + " and " + parts[nu].to_string());
        }
        squares += BigInt(static_cast<long>(t.value(mu, dim - 1) * t.value(mu, dim - 1)));
      }
      if (squares != fact) g.emplace(m, "sum of squared dimensions is not n!");
    }
    return g;
  }));
  out.push_back(run_check("c_lambda = 1/z_lambda from exp(sum x_i t^i / i)", n, exact, [&]<class K>() {
    TensorSeries<K> x(1, n, Basis::P);
    for (int i = 1; i <= n; ++i) x.add_term({Partition::row(i)}, K(BigRational(1, i)));
    TensorSeries<K> expected(1, n, Basis::P);
    for (int m = 0; m <= n; ++m)
      for (const Partition& p : partitions_of(m)) expected.add_term({p}, K(BigRational(BigInt(1), z_const(p))));
    return graded(series_exp(x) - expected);
  }));
  out.push_back(run_check("W <-> P round trip", n, exact, [&]<class K>() {
    Graded g;
    for (int m = 0; m <= n; ++m) {
      for (const Partition& p : partitions_of(m)) {
        for (Basis b : {Basis::W, Basis::P}) {
          const Basis other = b == Basis::W ? Basis::P : Basis::W;
          const auto e = SkeinElem<K>::basis_element(b, p);
          const auto back = basis_convert(basis_convert(e, other), b);
          if (back.terms() != e.terms()) g.emplace(m, std::string(basis_name(b)) + p.to_string() + " does not round trip");
        }
      }
    }
    return g;
  }));
  out.push_back(run_check("[P_i, e] = (s^i - s^-i) c^i", commutator_max, exact, [&]<class K>() {
    Graded g;
    for (int i = 1; i <= commutator_max; ++i) {
      const auto p = TensorSeries<K>::from_skein(SkeinElem<K>::power_sum(i), commutator_max);
      const auto expected = RelElem<K>::c_power(i, 1, commutator_max, z_power<K>(i));
      merge(g, graded(commutator_e(p) - expected));
    }
    return g;
  }));
  return out;
}

}  // namespace hskein
