#pragma once

#include <string>

#include "hskein/laurent.hpp"
#include "hskein/scalar.hpp"

namespace hskein {

struct SamplePoint {
  BigRational a;
  BigRational s;
};

/// Installs a sample point for the current thread. Nested scopes shadow outer
/// ones; SampledScalar constants read the innermost point.
class SamplingScope {
 public:
  explicit SamplingScope(const SamplePoint& p);
  ~SamplingScope();
  SamplingScope(const SamplingScope&) = delete;
  SamplingScope& operator=(const SamplingScope&) = delete;

 private:
  const SamplePoint* previous_;
  SamplePoint point_;
};

/// Throws BadEvaluationPoint when no scope is active.
const SamplePoint& current_sample_point();

/// A Scalar replaced by its values at (a0, s0) and at the mirrored point
/// (1/a0, 1/s0). Keeping both values makes the mirror map a swap, so every
/// operation of the exact field has a sampled counterpart.
class SampledScalar {
 public:
  SampledScalar() = default;
  SampledScalar(long n) : v_(n), m_(n) {}  // NOLINT(google-explicit-constructor)
  explicit SampledScalar(const BigRational& q) : v_(q), m_(q) {}
  SampledScalar(const BigRational& value, const BigRational& mirror_value) : v_(value), m_(mirror_value) {}

  static SampledScalar monomial(int ea, int es, const BigRational& c = 1);
  static SampledScalar a() { return monomial(1, 0); }
  static SampledScalar s() { return monomial(0, 1); }
  /// Evaluates an exact scalar at the current point; PoleAtPoint if undefined there.
  static SampledScalar from_scalar(const Scalar& x);

  const BigRational& value() const { return v_; }
  const BigRational& mirror_value() const { return m_; }

  bool is_zero() const { return sgn(v_) == 0 && sgn(m_) == 0; }
  bool is_one() const { return v_ == 1 && m_ == 1; }
  friend bool operator==(const SampledScalar&, const SampledScalar&) = default;

  SampledScalar operator-() const { return {-v_, -m_}; }
  SampledScalar& operator+=(const SampledScalar& y);
  SampledScalar& operator-=(const SampledScalar& y);
  SampledScalar& operator*=(const SampledScalar& y);
  /// PoleAtPoint if y vanishes at either point.
  SampledScalar& operator/=(const SampledScalar& y);
  friend SampledScalar operator+(SampledScalar x, const SampledScalar& y) { return x += y; }
  friend SampledScalar operator-(SampledScalar x, const SampledScalar& y) { return x -= y; }
  friend SampledScalar operator*(SampledScalar x, const SampledScalar& y) { return x *= y; }
  friend SampledScalar operator/(SampledScalar x, const SampledScalar& y) { return x /= y; }

  SampledScalar inverse() const;
  SampledScalar pow(int e) const;
  SampledScalar mirror() const { return {m_, v_}; }

  /// `<v; m>`, e.g. `<3/2; -3/2>`.
  std::string to_string() const;
  std::string to_pretty_string() const { return to_string(); }

 private:
  BigRational v_ = 0;
  BigRational m_ = 0;
};

}  // namespace hskein
