#include "hskein/detail/poly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>

namespace hskein::detail {

// ---------------------------------------------------------------------------
// Z[s]
// ---------------------------------------------------------------------------

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

bool is_one(const UPoly& p) { return p.size() == 1 && p[0] == 1; }

UPoly upoly_add(const UPoly& x, const UPoly& y) {
  UPoly r(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
  for (std::size_t i = 0; i < y.size(); ++i) r[i] += y[i];
  trim(r);
  return r;
}

UPoly upoly_sub(const UPoly& x, const UPoly& y) {
  UPoly r(std::max(x.size(), y.size()));
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i];
  for (std::size_t i = 0; i < y.size(); ++i) r[i] -= y[i];
  trim(r);
  return r;
}

UPoly upoly_mul(const UPoly& x, const UPoly& y) {
  if (x.empty() || y.empty()) return {};
  if (x.size() == 1) return upoly_scale(y, x[0]);
  if (y.size() == 1) return upoly_scale(x, y[0]);
  UPoly r(x.size() + y.size() - 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
  }
  trim(r);
  return r;
}

UPoly upoly_scale(const UPoly& x, const mpz_class& c) {
  if (sgn(c) == 0) return {};
  UPoly r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] * c;
  return r;
}

UPoly upoly_shift(const UPoly& x, int k) {
  assert(k >= 0);
  if (x.empty() || k == 0) return x;
  UPoly r(x.size() + static_cast<std::size_t>(k));
  std::copy(x.begin(), x.end(), r.begin() + k);
  return r;
}

mpz_class upoly_content(const UPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

namespace {

UPoly exact_div_scalar(const UPoly& p, const mpz_class& c) {
  UPoly r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) mpz_divexact(r[i].get_mpz_t(), p[i].get_mpz_t(), c.get_mpz_t());
  return r;
}

UPoly primitive_positive(const UPoly& p) {
  if (p.empty()) return p;
  mpz_class c = upoly_content(p);
  if (sgn(p.back()) < 0) c = -c;
  if (c == 1) return p;
  return exact_div_scalar(p, c);
}

int lowest_index(const UPoly& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (sgn(p[i]) != 0) return static_cast<int>(i);
  return -1;
}

UPoly drop_low(const UPoly& p, int k) {
  if (k == 0) return p;
  return UPoly(p.begin() + k, p.end());
}

mpz_class max_norm(const UPoly& p) {
  mpz_class m = 0;
  for (const auto& c : p) {
    if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
  }
  return m;
}

mpz_class eval_at(const UPoly& p, const mpz_class& x) {
  mpz_class r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    r *= x;
    r += *it;
  }
  return r;
}

// Balanced x-adic expansion of h.
UPoly interpolate(mpz_class h, const mpz_class& x) {
  UPoly f;
  mpz_class half = x / 2;
  while (sgn(h) != 0) {
    mpz_class g;
    mpz_fdiv_r(g.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    if (g > half) g -= x;
    f.push_back(g);
    h -= g;
    mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
  }
  trim(f);
  return f;
}

UPoly upoly_prem(UPoly r, const UPoly& b) {
  const int db = degree(b);
  const mpz_class& lb = b.back();
  while (degree(r) >= db) {
    const int shift = degree(r) - db;
    mpz_class lr = r.back();
    for (auto& c : r) c *= lb;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(j + shift)] -= lr * b[static_cast<std::size_t>(j)];
    trim(r);
  }
  return r;
}

UPoly prs_gcd(UPoly a, UPoly b) {
  if (degree(a) < degree(b)) std::swap(a, b);
  while (!b.empty()) {
    UPoly r = upoly_prem(a, b);
    a = std::move(b);
    if (r.empty()) break;
    b = primitive_positive(r);
  }
  return primitive_positive(a);
}

// Heuristic gcd (evaluation at a large integer, integer gcd, balanced
// reconstruction) with trial division as the certificate. Inputs are
// primitive and have nonzero constant terms.
bool heuristic_gcd(const UPoly& f, const UPoly& g, UPoly& out) {
  mpz_class bound = std::min(max_norm(f), max_norm(g));
  mpz_class root = sqrt(bound);
  mpz_class x = std::min(bound, mpz_class(99 * root));
  mpz_class alt = 2 * std::min(mpz_class(max_norm(f) / abs(f.back())), mpz_class(max_norm(g) / abs(g.back()))) + 2;
  if (alt > x) x = alt;
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpz_class ff = eval_at(f, x);
    mpz_class gg = eval_at(g, x);
    if (sgn(ff) != 0 && sgn(gg) != 0) {
      mpz_class h;
      mpz_gcd(h.get_mpz_t(), ff.get_mpz_t(), gg.get_mpz_t());
      UPoly cand = primitive_positive(interpolate(h, x));
      UPoly q;
      if (!cand.empty() && upoly_divexact(f, cand, q) && upoly_divexact(g, cand, q)) {
        out = std::move(cand);
        return true;
      }
      mpz_class cf = ff / h;
      UPoly cof = interpolate(cf, x);
      UPoly q2;
      if (!cof.empty() && upoly_divexact(f, cof, q) && upoly_divexact(g, q, q2)) {
        out = primitive_positive(q);
        return true;
      }
    }
    mpz_class r4 = sqrt(sqrt(x));
    x = 73794 * x * r4 / 27011;
  }
  return false;
}

}  // namespace

bool upoly_divexact(const UPoly& x, const UPoly& y, UPoly& q) {
  if (y.empty()) throw std::domain_error("polynomial division by zero");
  q.clear();
  if (x.empty()) return true;
  const int dx = degree(x), dy = degree(y);
  if (dx < dy) return false;
  if (sgn(y[0]) != 0 && !mpz_divisible_p(x[0].get_mpz_t(), y[0].get_mpz_t())) return false;
  if (dy == 0) {
    if (!mpz_divisible_p(upoly_content(x).get_mpz_t(), y[0].get_mpz_t())) return false;
    q = exact_div_scalar(x, y[0]);
    return true;
  }
  UPoly r = x;
  q.assign(static_cast<std::size_t>(dx - dy + 1), mpz_class(0));
  const mpz_class& ly = y.back();
  mpz_class t;
  for (int i = dx; i >= dy; --i) {
    auto& ri = r[static_cast<std::size_t>(i)];
    if (sgn(ri) == 0) continue;
    if (!mpz_divisible_p(ri.get_mpz_t(), ly.get_mpz_t())) return false;
    mpz_divexact(t.get_mpz_t(), ri.get_mpz_t(), ly.get_mpz_t());
    q[static_cast<std::size_t>(i - dy)] = t;
    for (int j = 0; j <= dy; ++j) {
      mpz_submul(r[static_cast<std::size_t>(i - dy + j)].get_mpz_t(), t.get_mpz_t(), y[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  for (int i = 0; i < dy; ++i)
    if (sgn(r[static_cast<std::size_t>(i)]) != 0) return false;
  trim(q);
  return true;
}

UPoly upoly_gcd(const UPoly& x, const UPoly& y) {
  if (x.empty()) {
    UPoly r = y;
    if (!r.empty() && sgn(r.back()) < 0)
      for (auto& c : r) c = -c;
    return r;
  }
  if (y.empty()) return upoly_gcd(y, x);
  mpz_class cx = upoly_content(x), cy = upoly_content(y), c;
  mpz_gcd(c.get_mpz_t(), cx.get_mpz_t(), cy.get_mpz_t());
  if (x.size() == 1 || y.size() == 1) return {c};
  if (x == y) {
    UPoly r = exact_div_scalar(x, cx);
    if (sgn(r.back()) < 0)
      for (auto& v : r) v = -v;
    return upoly_scale(r, c);
  }
  UPoly px = exact_div_scalar(x, cx), py = exact_div_scalar(y, cy);
  const int kx = lowest_index(px), ky = lowest_index(py);
  const int k = std::min(kx, ky);
  px = drop_low(px, kx);
  py = drop_low(py, ky);
  UPoly g;
  if (px.size() == 1 || py.size() == 1) {
    g = {mpz_class(1)};
  } else if (!heuristic_gcd(px, py, g)) {
    g = prs_gcd(px, py);
  }
  return upoly_shift(upoly_scale(g, c), k);
}

// ---------------------------------------------------------------------------
// Z[s][a]
// ---------------------------------------------------------------------------

BiPoly BiPoly::one() { return constant(1); }

BiPoly BiPoly::constant(const mpz_class& c) {
  if (sgn(c) == 0) return {};
  BiPoly p;
  p.rows_.push_back(UPoly{c});
  return p;
}

BiPoly BiPoly::from_upoly(UPoly p) {
  std::vector<UPoly> rows;
  rows.push_back(std::move(p));
  return BiPoly(std::move(rows));
}

void BiPoly::trim_rows() {
  for (auto& r : rows_) trim(r);
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

bool BiPoly::is_one() const { return rows_.size() == 1 && detail::is_one(rows_[0]); }

int BiPoly::deg_s() const {
  int d = -1;
  for (const auto& r : rows_) d = std::max(d, degree(r));
  return d;
}

int BiPoly::min_s() const {
  int m = -1;
  for (const auto& r : rows_) {
    int k = lowest_index(r);
    if (k >= 0 && (m < 0 || k < m)) m = k;
  }
  return m;
}

const mpz_class& BiPoly::lex_lead() const { return rows_.back().back(); }

std::size_t BiPoly::term_count() const {
  std::size_t n = 0;
  for (const auto& r : rows_)
    for (const auto& c : r)
      if (sgn(c) != 0) ++n;
  return n;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& row : r.rows_)
    for (auto& c : row) c = -c;
  return r;
}

BiPoly operator+(const BiPoly& x, const BiPoly& y) {
  std::vector<UPoly> rows(std::max(x.rows_.size(), y.rows_.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i < x.rows_.size() && i < y.rows_.size())
      rows[i] = upoly_add(x.rows_[i], y.rows_[i]);
    else if (i < x.rows_.size())
      rows[i] = x.rows_[i];
    else
      rows[i] = y.rows_[i];
  }
  return BiPoly(std::move(rows));
}

BiPoly operator-(const BiPoly& x, const BiPoly& y) { return x + (-y); }

BiPoly operator*(const BiPoly& x, const BiPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (x.is_one()) return y;
  if (y.is_one()) return x;
  std::vector<UPoly> rows(x.rows_.size() + y.rows_.size() - 1);
  for (std::size_t i = 0; i < x.rows_.size(); ++i) {
    if (x.rows_[i].empty()) continue;
    for (std::size_t j = 0; j < y.rows_.size(); ++j) {
      if (y.rows_[j].empty()) continue;
      rows[i + j] = upoly_add(rows[i + j], upoly_mul(x.rows_[i], y.rows_[j]));
    }
  }
  return BiPoly(std::move(rows));
}

BiPoly BiPoly::scaled(const mpz_class& c) const {
  if (sgn(c) == 0) return {};
  BiPoly r = *this;
  for (auto& row : r.rows_)
    for (auto& v : row) v *= c;
  return r;
}

BiPoly BiPoly::times_upoly(const UPoly& c) const {
  if (c.empty()) return {};
  std::vector<UPoly> rows;
  rows.reserve(rows_.size());
  for (const auto& r : rows_) rows.push_back(upoly_mul(r, c));
  return BiPoly(std::move(rows));
}

BiPoly BiPoly::shifted(int ea, int es) const {
  assert(ea >= 0 && es >= 0);
  if (is_zero() || (ea == 0 && es == 0)) return *this;
  std::vector<UPoly> rows(static_cast<std::size_t>(ea));
  for (const auto& r : rows_) rows.push_back(upoly_shift(r, es));
  return BiPoly(std::move(rows));
}

void BiPoly::make_canonical(mpz_class& content, int& shift_a, int& shift_s) {
  shift_a = 0;
  shift_s = 0;
  content = 0;
  if (is_zero()) return;
  std::size_t first = 0;
  while (rows_[first].empty()) ++first;
  if (first > 0) rows_.erase(rows_.begin(), rows_.begin() + static_cast<std::ptrdiff_t>(first));
  shift_a = static_cast<int>(first);
  shift_s = min_s();
  if (shift_s > 0)
    for (auto& r : rows_)
      if (!r.empty()) r = drop_low(r, shift_s);
  content = 0;
  for (const auto& r : rows_) {
    mpz_class c = upoly_content(r);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
    if (content == 1) break;
  }
  if (sgn(lex_lead()) < 0) content = -content;
  if (content != 1)
    for (auto& r : rows_)
      for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
}

UPoly BiPoly::content_a() const {
  UPoly g;
  for (const auto& r : rows_) {
    if (r.empty()) continue;
    g = upoly_gcd(g, r);
    if (g.size() == 1) break;
  }
  return g;
}

bool BiPoly::divexact(const UPoly& y, BiPoly& q) const {
  std::vector<UPoly> rows(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) continue;
    if (!upoly_divexact(rows_[i], y, rows[i])) return false;
  }
  q = BiPoly(std::move(rows));
  return true;
}

bool BiPoly::divexact(const BiPoly& y, BiPoly& q) const {
  if (y.is_zero()) throw std::domain_error("polynomial division by zero");
  if (y.is_one()) {
    q = *this;
    return true;
  }
  if (is_zero()) {
    q = BiPoly();
    return true;
  }
  if (y.deg_a() == 0) return divexact(y.rows_[0], q);
  const int dx = deg_a(), dy = y.deg_a();
  if (dx < dy) return false;
  if (deg_s() < y.deg_s()) return false;
  std::vector<UPoly> r = rows_;
  std::vector<UPoly> qrows(static_cast<std::size_t>(dx - dy + 1));
  const UPoly& ly = y.rows_.back();
  for (int i = dx; i >= dy; --i) {
    auto& ri = r[static_cast<std::size_t>(i)];
    if (ri.empty()) continue;
    UPoly t;
    if (!upoly_divexact(ri, ly, t)) return false;
    for (int j = 0; j <= dy; ++j) {
      auto& target = r[static_cast<std::size_t>(i - dy + j)];
      target = upoly_sub(target, upoly_mul(t, y.rows_[static_cast<std::size_t>(j)]));
    }
    qrows[static_cast<std::size_t>(i - dy)] = std::move(t);
  }
  for (int i = 0; i < dy; ++i)
    if (!r[static_cast<std::size_t>(i)].empty()) return false;
  q = BiPoly(std::move(qrows));
  return true;
}

BiPoly BiPoly::reversed(bool flip_a, bool flip_s) const {
  std::vector<UPoly> rows = rows_;
  if (flip_s) {
    const int ds = deg_s();
    for (auto& r : rows) {
      if (r.empty()) continue;
      UPoly nr(static_cast<std::size_t>(ds + 1));
      for (std::size_t i = 0; i < r.size(); ++i) nr[static_cast<std::size_t>(ds) - i] = r[i];
      r = std::move(nr);
    }
  }
  if (flip_a) std::reverse(rows.begin(), rows.end());
  return BiPoly(std::move(rows));
}

mpq_class BiPoly::eval(const mpq_class& a0, const mpq_class& s0) const {
  mpq_class acc = 0;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    mpq_class row = 0;
    for (auto c = it->rbegin(); c != it->rend(); ++c) {
      row *= s0;
      row += *c;
    }
    acc *= a0;
    acc += row;
  }
  return acc;
}

namespace {

// Pseudo-remainder over Z[s][a] (variant that scales by lc(b) once per step).
BiPoly bipoly_prem(BiPoly a, const BiPoly& b) {
  const int db = b.deg_a();
  const UPoly& lb = b.rows().back();
  while (!a.is_zero() && a.deg_a() >= db) {
    const int shift = a.deg_a() - db;
    UPoly la = a.rows().back();
    a = a.times_upoly(lb) - b.times_upoly(la).shifted(shift, 0);
  }
  return a;
}

BiPoly primitive_in_a(const BiPoly& p) {
  UPoly c = p.content_a();
  if (!c.empty() && sgn(c.back()) < 0)
    for (auto& v : c) v = -v;
  BiPoly q;
  p.divexact(c, q);
  return q;
}

BiPoly canonical(BiPoly p) {
  mpz_class content;
  int sa = 0, ss = 0;
  p.make_canonical(content, sa, ss);
  return p;
}

}  // namespace

BiPoly gcd(const BiPoly& x, const BiPoly& y) {
  if (x.is_zero()) return canonical(y);
  if (y.is_zero()) return canonical(x);
  if (x.is_one() || y.is_one()) return BiPoly::one();
  if (x == y) return x;
  if (x.deg_a() == 0 && y.deg_a() == 0) return canonical(BiPoly::from_upoly(upoly_gcd(x.rows()[0], y.rows()[0])));
  // One divides the other: common when adding fractions over related denominators.
  {
    const BiPoly& small = (x.term_count() <= y.term_count()) ? x : y;
    const BiPoly& large = (&small == &x) ? y : x;
    BiPoly q;
    if (large.divexact(small, q)) return small;
  }
  UPoly cx = x.content_a(), cy = y.content_a();
  UPoly c = upoly_gcd(cx, cy);
  BiPoly px, py;
  x.divexact(cx, px);
  y.divexact(cy, py);
  BiPoly g = BiPoly::one();
  if (px.deg_a() > 0 && py.deg_a() > 0) {
    BiPoly a = std::move(px), b = std::move(py);
    if (a.deg_a() < b.deg_a()) std::swap(a, b);
    while (true) {
      BiPoly r = bipoly_prem(a, b);
      if (r.is_zero()) break;
      if (r.deg_a() == 0) {
        b = BiPoly::one();
        break;
      }
      a = std::move(b);
      b = primitive_in_a(r);
    }
    g = b.is_one() ? b : primitive_in_a(b);
  }
  return canonical(g.times_upoly(c));
}

}  // namespace hskein::detail
