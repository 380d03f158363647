#include "hskein/sampled.hpp"

#include "hskein/error.hpp"

namespace hskein {

namespace {

thread_local const SamplePoint* active_point = nullptr;

BigRational power(const BigRational& b, int e) {
  BigRational base = e < 0 ? BigRational(1 / b) : b;
  BigRational r = 1;
  for (int k = 0; k < std::abs(e); ++k) r *= base;
  return r;
}

}  // namespace

SamplingScope::SamplingScope(const SamplePoint& p) : previous_(active_point), point_(p) {
  if (sgn(p.a) == 0 || sgn(p.s) == 0 || p.s == 1 || p.s == -1)
    throw Error(ErrorCode::BadEvaluationPoint, "need a0 != 0 and s0 not in {0, 1, -1}");
  active_point = &point_;
}

SamplingScope::~SamplingScope() { active_point = previous_; }

const SamplePoint& current_sample_point() {
  if (active_point == nullptr) throw Error(ErrorCode::BadEvaluationPoint, "no sample point is active");
  return *active_point;
}

SampledScalar SampledScalar::monomial(int ea, int es, const BigRational& c) {
  const SamplePoint& p = current_sample_point();
  return {c * power(p.a, ea) * power(p.s, es), c * power(p.a, -ea) * power(p.s, -es)};
}

SampledScalar SampledScalar::from_scalar(const Scalar& x) {
  const SamplePoint& p = current_sample_point();
  return {x.eval_at(p.a, p.s), x.eval_at(1 / p.a, 1 / p.s)};
}

SampledScalar& SampledScalar::operator+=(const SampledScalar& y) {
  v_ += y.v_;
  m_ += y.m_;
  return *this;
}

SampledScalar& SampledScalar::operator-=(const SampledScalar& y) {
  v_ -= y.v_;
  m_ -= y.m_;
  return *this;
}

SampledScalar& SampledScalar::operator*=(const SampledScalar& y) {
  v_ *= y.v_;
  m_ *= y.m_;
  return *this;
}

SampledScalar& SampledScalar::operator/=(const SampledScalar& y) { return *this *= y.inverse(); }

SampledScalar SampledScalar::inverse() const {
  if (sgn(v_) == 0 || sgn(m_) == 0) throw Error(ErrorCode::PoleAtPoint, "division by a value vanishing at the sample point");
  return {1 / v_, 1 / m_};
}

SampledScalar SampledScalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  return {power(v_, e), power(m_, e)};
}

std::string SampledScalar::to_string() const { return "<" + v_.get_str() + "; " + m_.get_str() + ">"; }

}  // namespace hskein
