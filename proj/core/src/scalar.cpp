#include "hskein/scalar.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "hskein/error.hpp"

namespace hskein {

using detail::BiPoly;
using detail::UPoly;

namespace {

struct CanonicalPart {
  BigRational content;
  int shift_a = 0;
  int shift_s = 0;
  BiPoly poly;
};

CanonicalPart to_canonical(const LaurentPoly& p) {
  CanonicalPart out;
  BigInt lcm = 1;
  for (const auto& t : p.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  const int ma = p.min_ea(), ms = p.min_es();
  std::vector<UPoly> rows;
  for (const auto& t : p.terms()) {
    const auto ra = static_cast<std::size_t>(checked_exp_add(t.ea, -ma));
    const auto rs = static_cast<std::size_t>(checked_exp_add(t.es, -ms));
    if (rows.size() <= ra) rows.resize(ra + 1);
    if (rows[ra].size() <= rs) rows[ra].resize(rs + 1);
    BigInt v = t.coeff.get_num() * (lcm / t.coeff.get_den());
    rows[ra][rs] = v;
  }
  out.poly = BiPoly(std::move(rows));
  BigInt content;
  int sa = 0, ss = 0;
  out.poly.make_canonical(content, sa, ss);
  out.content = BigRational(content, lcm);
  out.content.canonicalize();
  out.shift_a = checked_exp_add(ma, sa);
  out.shift_s = checked_exp_add(ms, ss);
  return out;
}

LaurentPoly to_laurent(const BigRational& c, int sa, int ss, const BiPoly& p) {
  std::vector<LaurentPoly::Term> terms;
  const auto& rows = p.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (sgn(rows[i][j]) != 0)
        terms.push_back({checked_exp_add(sa, static_cast<int>(i)), checked_exp_add(ss, static_cast<int>(j)),
                         c * BigRational(rows[i][j])});
  return LaurentPoly(std::move(terms));
}

BiPoly divide(const BiPoly& x, const BiPoly& y) {
  if (y.is_one()) return x;
  BiPoly q;
  if (!x.divexact(y, q)) throw std::logic_error("inexact polynomial division in Scalar");
  return q;
}

void fix_sign(BiPoly& p, BigRational& coef) {
  if (!p.is_zero() && sgn(p.lex_lead()) < 0) {
    p = -p;
    coef = -coef;
  }
}

const BiPoly& z_poly() {
  static const BiPoly zp = BiPoly::from_upoly(UPoly{-1, 0, 1});
  return zp;
}

}  // namespace

Scalar Scalar::normalize(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "denominator is zero");
  if (num.is_zero()) return Scalar();
  CanonicalPart n = to_canonical(num), d = to_canonical(den);
  BiPoly g = detail::gcd(n.poly, d.poly);
  Scalar r;
  r.coef_ = n.content / d.content;
  r.shift_a_ = checked_exp_add(n.shift_a, -d.shift_a);
  r.shift_s_ = checked_exp_add(n.shift_s, -d.shift_s);
  r.num_ = divide(n.poly, g);
  r.den_ = divide(d.poly, g);
  return r;
}

Scalar Scalar::monomial(int ea, int es, const BigRational& c) {
  Scalar r(c);
  if (sgn(c) != 0) {
    r.shift_a_ = ea;
    r.shift_s_ = es;
  }
  return r;
}

LaurentPoly Scalar::num() const {
  if (is_zero()) return {};
  return to_laurent(coef_, shift_a_, shift_s_, num_);
}

LaurentPoly Scalar::den() const { return to_laurent(1, 0, 0, den_); }

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.coef_ = -r.coef_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& y) {
  if (y.is_zero()) return *this;
  if (is_zero()) return *this = y;
  // Sums of two monomials over the same denominator with equal numerator
  // polynomial only change the rational coefficient.
  if (shift_a_ == y.shift_a_ && shift_s_ == y.shift_s_ && num_ == y.num_ && den_ == y.den_) {
    coef_ += y.coef_;
    if (sgn(coef_) == 0) *this = Scalar();
    return *this;
  }
  const BiPoly g = detail::gcd(den_, y.den_);
  const BiPoly dx = divide(den_, g);
  const BiPoly dy = divide(y.den_, g);
  const int ma = std::min(shift_a_, y.shift_a_);
  const int ms = std::min(shift_s_, y.shift_s_);
  const BigInt& px = coef_.get_num();
  const BigInt& qx = coef_.get_den();
  const BigInt& py = y.coef_.get_num();
  const BigInt& qy = y.coef_.get_den();
  BiPoly t = (num_.shifted(shift_a_ - ma, shift_s_ - ms) * dy).scaled(px * qy) +
             (y.num_.shifted(y.shift_a_ - ma, y.shift_s_ - ms) * dx).scaled(py * qx);
  if (t.is_zero()) return *this = Scalar();
  BigInt ct;
  int ta = 0, ts = 0;
  t.make_canonical(ct, ta, ts);
  BigRational c(ct, qx * qy);
  c.canonicalize();
  Scalar r;
  r.coef_ = c;
  r.shift_a_ = checked_exp_add(ma, ta);
  r.shift_s_ = checked_exp_add(ms, ts);
  if (g.is_one()) {
    r.num_ = std::move(t);
    r.den_ = den_ * y.den_;
  } else {
    const BiPoly g2 = detail::gcd(t, g);
    r.num_ = divide(t, g2);
    r.den_ = dx * divide(y.den_, g2);
  }
  return *this = std::move(r);
}

Scalar& Scalar::operator-=(const Scalar& y) { return *this += -y; }

Scalar& Scalar::operator*=(const Scalar& y) {
  if (is_zero()) return *this;
  if (y.is_zero()) return *this = Scalar();
  const BiPoly g1 = detail::gcd(num_, y.den_);
  const BiPoly g2 = detail::gcd(y.num_, den_);
  BiPoly n = divide(num_, g1) * divide(y.num_, g2);
  BiPoly d = divide(den_, g2) * divide(y.den_, g1);
  coef_ *= y.coef_;
  shift_a_ = checked_exp_add(shift_a_, y.shift_a_);
  shift_s_ = checked_exp_add(shift_s_, y.shift_s_);
  num_ = std::move(n);
  den_ = std::move(d);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& y) { return *this *= y.inverse(); }

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroDenominator, "inverse of zero");
  Scalar r;
  r.coef_ = 1 / coef_;
  r.shift_a_ = -shift_a_;
  r.shift_s_ = -shift_s_;
  r.num_ = den_;
  r.den_ = num_;
  return r;
}

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

void Scalar::canonicalize_after_substitution() {
  fix_sign(num_, coef_);
  BigRational unit = 1;
  fix_sign(den_, unit);
  coef_ *= unit;
}

Scalar Scalar::invert_vars(bool flip_a, bool flip_s) const {
  if (is_zero() || (!flip_a && !flip_s)) return *this;
  Scalar r = *this;
  if (flip_a) r.shift_a_ = checked_exp_add(-shift_a_, den_.deg_a() - num_.deg_a());
  if (flip_s) r.shift_s_ = checked_exp_add(-shift_s_, den_.deg_s() - num_.deg_s());
  r.num_ = num_.reversed(flip_a, flip_s);
  r.den_ = den_.reversed(flip_a, flip_s);
  r.canonicalize_after_substitution();
  return r;
}

BigRational Scalar::eval_at(const BigRational& a0, const BigRational& s0) const {
  if (sgn(a0) == 0 || sgn(s0) == 0 || s0 == 1 || s0 == -1)
    throw Error(ErrorCode::BadEvaluationPoint, "need a0 != 0 and s0 not in {0, 1, -1}");
  BigRational d = den_.eval(a0, s0);
  if (sgn(d) == 0) throw Error(ErrorCode::PoleAtPoint, "denominator vanishes at the evaluation point");
  if (is_zero()) return 0;
  auto power = [](const BigRational& b, int e) {
    BigRational base = e < 0 ? BigRational(1 / b) : b;
    BigRational r = 1;
    for (int k = 0; k < std::abs(e); ++k) r *= base;
    return r;
  };
  return coef_ * power(a0, shift_a_) * power(s0, shift_s_) * num_.eval(a0, s0) / d;
}

std::string Scalar::to_string() const {
  if (is_zero()) return "0";
  LaurentPoly p = to_laurent(BigRational(coef_.get_num()), shift_a_, shift_s_, num_);
  LaurentPoly q = to_laurent(BigRational(coef_.get_den()), 0, 0, den_);
  std::string ps = p.to_string();
  if (q.size() == 1 && q.terms()[0].coeff == 1) return ps;
  std::string qs = q.to_string();
  if (p.size() > 1) ps = "(" + ps + ")";
  if (q.size() > 1) qs = "(" + qs + ")";
  return ps + "/" + qs;
}

std::string Scalar::to_pretty_string() const {
  if (is_zero()) return "0";
  int kn = 0, kd = 0;
  BiPoly n = num_, d = den_;
  BiPoly q;
  while (n.deg_s() >= 2 && n.divexact(z_poly(), q)) {
    n = std::move(q);
    ++kn;
  }
  while (d.deg_s() >= 2 && d.divexact(z_poly(), q)) {
    d = std::move(q);
    ++kd;
  }
  const int k = kn - kd;
  if (k == 0) return to_string();
  // (s^2 - 1)^k = z^k s^k
  Scalar rest;
  rest.coef_ = coef_;
  rest.shift_a_ = shift_a_;
  rest.shift_s_ = checked_exp_add(shift_s_, k);
  rest.num_ = std::move(n);
  rest.den_ = std::move(d);
  const std::string zf = (k == 1) ? std::string("z") : "z^" + std::to_string(k);
  if (rest.is_one()) return zf;
  if (rest == Scalar(-1)) return "-" + zf;
  if (rest.den_.is_one() && rest.num_.is_one() && rest.coef_.get_den() == 1) {
    const bool neg = sgn(rest.coef_) < 0;
    std::string body = (neg ? -rest : rest).to_string();
    return (neg ? "-" : "") + zf + (body == "1" ? "" : "*" + body);
  }
  return zf + "*(" + rest.to_string() + ")";
}

namespace {

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v;
    if (accept('-')) {
      v = -term();
    } else {
      accept('+');
      v = term();
    }
    while (true) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = unary();
    while (true) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        Scalar d = unary();
        if (d.is_zero()) throw Error(ErrorCode::ZeroDenominator, "division by zero in '" + std::string(text_) + "'");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Scalar power() {
    Scalar base = primary();
    if (accept('^')) {
      skip_ws();
      bool neg = false;
      if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) neg = text_[pos_++] == '-';
      BigInt e = integer();
      if (e > 100000) fail("exponent too large");
      const int ei = static_cast<int>(e.get_si());
      if (neg && base.is_zero()) throw Error(ErrorCode::ZeroDenominator, "negative power of zero");
      return base.pow(neg ? -ei : ei);
    }
    return base;
  }

  BigInt integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  Scalar primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Scalar(BigRational(integer()));
    if (c == 'a' || c == 's' || c == 'z') {
      ++pos_;
      if (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) fail("unknown symbol");
      if (c == 'a') return Scalar::a();
      if (c == 's') return Scalar::s();
      return Scalar::monomial(0, 1) - Scalar::monomial(0, -1);
    }
    fail("unexpected character");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar Scalar::parse(std::string_view text) { return ScalarParser(text).parse(); }

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

}  // namespace hskein
