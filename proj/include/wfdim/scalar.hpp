#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "wfdim/errors.hpp"

namespace wfdim {

/// The field a scalar lives in: ℚ, or ℚ(√d) for a squarefree d ∉ {0, 1}.
/// The Gaussian rationals are ℚ(√-1).
class FieldDescriptor {
 public:
  enum class Kind { Rational, Quadratic };

  FieldDescriptor() = default;

  static FieldDescriptor rational() { return {}; }
  static FieldDescriptor quadratic(std::int64_t d);
  static FieldDescriptor gaussian() { return quadratic(-1); }

  Kind kind() const noexcept { return kind_; }
  bool is_rational() const noexcept { return kind_ == Kind::Rational; }
  /// Radicand; 0 for the rational field.
  std::int64_t d() const noexcept { return d_; }

  std::string to_string() const;

  friend bool operator==(const FieldDescriptor&, const FieldDescriptor&) = default;

 private:
  FieldDescriptor(Kind kind, std::int64_t d) : kind_(kind), d_(d) {}

  Kind kind_ = Kind::Rational;
  std::int64_t d_ = 0;
};

bool is_squarefree(std::int64_t d);

/// Smallest field containing both arguments. ℚ embeds into every ℚ(√d);
/// two distinct quadratic fields raise FieldMismatch.
FieldDescriptor join(const FieldDescriptor& a, const FieldDescriptor& b);

/// a + b·√d with a, b ∈ ℚ. Immutable value type; all arithmetic is exact.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(const mpq_class& value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(mpq_class a, mpq_class b, FieldDescriptor field);

  static ExactScalar rational(long num, long den = 1);
  /// The principal √d of a quadratic field.
  static ExactScalar sqrt_d(const FieldDescriptor& field);

  const mpq_class& rational_part() const noexcept { return a_; }
  const mpq_class& radical_part() const noexcept { return b_; }
  const FieldDescriptor& field() const noexcept { return field_; }

  bool is_zero() const noexcept { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const noexcept { return a_ == 1 && sgn(b_) == 0; }
  bool is_rational() const noexcept { return sgn(b_) == 0; }

  /// Field norm a² − d·b².
  mpq_class norm() const;
  ExactScalar conjugate() const;
  ExactScalar inverse() const;
  ExactScalar in_field(const FieldDescriptor& field) const;

  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& rhs);
  ExactScalar& operator-=(const ExactScalar& rhs);
  ExactScalar& operator*=(const ExactScalar& rhs);
  ExactScalar& operator/=(const ExactScalar& rhs);

  friend ExactScalar operator+(ExactScalar lhs, const ExactScalar& rhs) { return lhs += rhs; }
  friend ExactScalar operator-(ExactScalar lhs, const ExactScalar& rhs) { return lhs -= rhs; }
  friend ExactScalar operator*(ExactScalar lhs, const ExactScalar& rhs) { return lhs *= rhs; }
  friend ExactScalar operator/(ExactScalar lhs, const ExactScalar& rhs) { return lhs /= rhs; }

  /// Value equality: 2 ∈ ℚ equals 2 + 0√3 ∈ ℚ(√3).
  friend bool operator==(const ExactScalar& x, const ExactScalar& y);

  /// Bit size of numerators and denominators, a rough growth measure.
  std::size_t height() const;

  /// "a", "a+b*sqrt(d)" style rendering with reduced fractions.
  std::string to_string() const;

 private:
  mpq_class a_;
  mpq_class b_;
  FieldDescriptor field_;
};

enum class ArithOp { Add, Sub, Mul, Div };

ExactScalar scalar_arith(const ExactScalar& x, const ExactScalar& y, ArithOp op);

ExactScalar pow(const ExactScalar& base, unsigned exponent);

}  // namespace wfdim
