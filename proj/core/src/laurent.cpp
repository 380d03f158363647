#include "hskein/laurent.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "hskein/error.hpp"

namespace hskein {

int checked_exp_add(int x, int y) {
  int r = 0;
  if (__builtin_add_overflow(x, y, &r)) throw Error(ErrorCode::Overflow, "exponent overflow");
  return r;
}

int checked_exp_mul(int x, int y) {
  int r = 0;
  if (__builtin_mul_overflow(x, y, &r)) throw Error(ErrorCode::Overflow, "exponent overflow");
  return r;
}

LaurentPoly::LaurentPoly(std::vector<Term> terms) : terms_(std::move(terms)) { canonicalize(); }

void LaurentPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) {
    return x.ea != y.ea ? x.ea < y.ea : x.es < y.es;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().ea == t.ea && out.back().es == t.es) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return sgn(t.coeff) == 0; });
  terms_ = std::move(out);
}

LaurentPoly LaurentPoly::constant(const BigRational& c) { return monomial(0, 0, c); }

LaurentPoly LaurentPoly::monomial(int ea, int es, const BigRational& c) {
  LaurentPoly p;
  if (sgn(c) != 0) p.terms_.push_back(Term{ea, es, c});
  return p;
}

int LaurentPoly::min_ea() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& t : terms_) m = std::min(m, t.ea);
  return terms_.empty() ? 0 : m;
}

int LaurentPoly::min_es() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& t : terms_) m = std::min(m, t.es);
  return terms_.empty() ? 0 : m;
}

BigRational LaurentPoly::coeff(int ea, int es) const {
  for (const auto& t : terms_)
    if (t.ea == ea && t.es == es) return t.coeff;
  return 0;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly operator+(const LaurentPoly& x, const LaurentPoly& y) {
  std::vector<LaurentPoly::Term> t = x.terms_;
  t.insert(t.end(), y.terms_.begin(), y.terms_.end());
  return LaurentPoly(std::move(t));
}

LaurentPoly operator-(const LaurentPoly& x, const LaurentPoly& y) { return x + (-y); }

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
  std::vector<LaurentPoly::Term> t;
  t.reserve(x.terms_.size() * y.terms_.size());
  for (const auto& u : x.terms_)
    for (const auto& v : y.terms_)
      t.push_back({checked_exp_add(u.ea, v.ea), checked_exp_add(u.es, v.es), u.coeff * v.coeff});
  return LaurentPoly(std::move(t));
}

LaurentPoly operator*(const BigRational& c, const LaurentPoly& x) {
  if (sgn(c) == 0) return {};
  LaurentPoly r = x;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

LaurentPoly LaurentPoly::invert_vars(bool flip_a, bool flip_s) const {
  std::vector<Term> t = terms_;
  for (auto& u : t) {
    if (flip_a) u.ea = -u.ea;
    if (flip_s) u.es = -u.es;
  }
  return LaurentPoly(std::move(t));
}

BigRational LaurentPoly::eval(const BigRational& a0, const BigRational& s0) const {
  auto power = [](const BigRational& base, int e) {
    BigRational r = 1;
    BigRational b = e < 0 ? BigRational(1 / base) : base;
    for (int k = 0; k < std::abs(e); ++k) r *= b;
    return r;
  };
  BigRational acc = 0;
  for (const auto& t : terms_) acc += t.coeff * power(a0, t.ea) * power(s0, t.es);
  return acc;
}

namespace {

void write_var(std::ostream& os, char var, int e, bool& need_star) {
  if (e == 0) return;
  if (need_star) os << '*';
  os << var;
  if (e != 1) os << '^' << e;
  need_star = true;
}

}  // namespace

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    BigRational c = it->coeff;
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    const bool monic = (c == 1);
    bool need_star = false;
    if (!monic || (it->ea == 0 && it->es == 0)) {
      os << c.get_str();
      need_star = true;
    }
    write_var(os, 'a', it->ea, need_star);
    write_var(os, 's', it->es, need_star);
  }
  return os.str();
}

}  // namespace hskein
