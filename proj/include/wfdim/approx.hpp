#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "wfdim/scalar.hpp"

namespace wfdim {

inline constexpr int kMinPrecisionBits = 64;
inline constexpr int kDefaultPrecisionBits = 128;

/// Owning wrapper around an mpfr_t. Arithmetic results take the larger of the
/// operand precisions.
class BigFloat {
 public:
  explicit BigFloat(int precision_bits = kDefaultPrecisionBits);
  BigFloat(double value, int precision_bits);
  BigFloat(const mpq_class& value, int precision_bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  int precision() const noexcept { return static_cast<int>(mpfr_get_prec(value_)); }
  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  std::string to_string(int digits = 20) const;

  BigFloat operator-() const;
  friend BigFloat operator+(const BigFloat& x, const BigFloat& y);
  friend BigFloat operator-(const BigFloat& x, const BigFloat& y);
  friend BigFloat operator*(const BigFloat& x, const BigFloat& y);
  friend BigFloat operator/(const BigFloat& x, const BigFloat& y);
  friend bool operator<(const BigFloat& x, const BigFloat& y) { return mpfr_less_p(x.value_, y.value_) != 0; }
  friend bool operator>(const BigFloat& x, const BigFloat& y) { return y < x; }
  friend bool operator<=(const BigFloat& x, const BigFloat& y) { return !(y < x); }

  friend BigFloat sqrt(const BigFloat& x);
  friend BigFloat abs(const BigFloat& x);
  friend BigFloat hypot(const BigFloat& x, const BigFloat& y);

 private:
  mpfr_t value_;
};

/// Complex number with arbitrary-precision parts; the fallback for values
/// that do not live in any supported quadratic field.
class ApproxScalar {
 public:
  explicit ApproxScalar(int precision_bits = kDefaultPrecisionBits);
  ApproxScalar(BigFloat re, BigFloat im);

  static ApproxScalar from_double(double re, double im, int precision_bits);

  const BigFloat& re() const noexcept { return re_; }
  const BigFloat& im() const noexcept { return im_; }
  int precision_bits() const noexcept { return re_.precision(); }

  BigFloat magnitude() const { return hypot(re_, im_); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

  ApproxScalar operator-() const { return {-re_, -im_}; }
  friend ApproxScalar operator+(const ApproxScalar& x, const ApproxScalar& y);
  friend ApproxScalar operator-(const ApproxScalar& x, const ApproxScalar& y);
  friend ApproxScalar operator*(const ApproxScalar& x, const ApproxScalar& y);
  friend ApproxScalar operator/(const ApproxScalar& x, const ApproxScalar& y);

  std::string to_string(int digits = 20) const;

 private:
  BigFloat re_;
  BigFloat im_;
};

/// Embeds a + b√d with relative error at most 2^(1−precision_bits); √d is the
/// positive real root for d > 0 and the positive-imaginary root for d < 0.
ApproxScalar embed_to_approx(const ExactScalar& x, int precision_bits);

/// Precision for the approximate backend: WFDIM_PRECISION_BITS when set and
/// valid, else the default of 128.
int precision_bits_from_env();

class Poly;

/// All complex roots of a squarefree polynomial by Weierstrass (Durand–Kerner)
/// iteration followed by Newton polishing.
std::vector<ApproxScalar> approx_roots(const Poly& p, int precision_bits);

ApproxScalar approx_eval(const Poly& p, const ApproxScalar& x);

/// Numerical rank after scaling each column to unit max-magnitude; a pivot
/// counts as zero when its magnitude is at most `relative_threshold`.
std::size_t approx_rank(std::vector<std::vector<ApproxScalar>> rows, double relative_threshold);

}  // namespace wfdim
