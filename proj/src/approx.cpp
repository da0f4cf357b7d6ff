#include "wfdim/approx.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <memory>

#include "wfdim/poly.hpp"

namespace wfdim {

namespace {

int max_prec(const BigFloat& x, const BigFloat& y) { return std::max(x.precision(), y.precision()); }

BigFloat rounded(const BigFloat& x, int precision_bits) {
  BigFloat out(precision_bits);
  mpfr_set(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

BigFloat::BigFloat(int precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, int precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, int precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

std::string BigFloat::to_string(int digits) const {
  std::unique_ptr<char, void (*)(char*)> buf(nullptr, [](char* p) { mpfr_free_str(p); });
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", digits, value_);
  buf.reset(raw);
  return raw ? std::string(raw) : std::string();
}

BigFloat BigFloat::operator-() const {
  BigFloat out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

BigFloat operator+(const BigFloat& x, const BigFloat& y) {
  BigFloat out(max_prec(x, y));
  mpfr_add(out.value_, x.value_, y.value_, MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& x, const BigFloat& y) {
  BigFloat out(max_prec(x, y));
  mpfr_sub(out.value_, x.value_, y.value_, MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& x, const BigFloat& y) {
  BigFloat out(max_prec(x, y));
  mpfr_mul(out.value_, x.value_, y.value_, MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& x, const BigFloat& y) {
  BigFloat out(max_prec(x, y));
  mpfr_div(out.value_, x.value_, y.value_, MPFR_RNDN);
  return out;
}

BigFloat sqrt(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_sqrt(out.value_, x.value_, MPFR_RNDN);
  return out;
}

BigFloat abs(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_abs(out.value_, x.value_, MPFR_RNDN);
  return out;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
  BigFloat out(max_prec(x, y));
  mpfr_hypot(out.value_, x.value_, y.value_, MPFR_RNDN);
  return out;
}

ApproxScalar::ApproxScalar(int precision_bits) : re_(precision_bits), im_(precision_bits) {
  require(precision_bits >= kMinPrecisionBits, ErrorKind::InvalidArgument, "precision below 64 bits");
}

ApproxScalar::ApproxScalar(BigFloat re, BigFloat im) : re_(std::move(re)), im_(std::move(im)) {
  require(re_.precision() >= kMinPrecisionBits && im_.precision() >= kMinPrecisionBits,
          ErrorKind::InvalidArgument, "precision below 64 bits");
}

ApproxScalar ApproxScalar::from_double(double re, double im, int precision_bits) {
  return {BigFloat(re, precision_bits), BigFloat(im, precision_bits)};
}

ApproxScalar operator+(const ApproxScalar& x, const ApproxScalar& y) { return {x.re_ + y.re_, x.im_ + y.im_}; }

ApproxScalar operator-(const ApproxScalar& x, const ApproxScalar& y) { return {x.re_ - y.re_, x.im_ - y.im_}; }

ApproxScalar operator*(const ApproxScalar& x, const ApproxScalar& y) {
  return {x.re_ * y.re_ - x.im_ * y.im_, x.re_ * y.im_ + x.im_ * y.re_};
}

ApproxScalar operator/(const ApproxScalar& x, const ApproxScalar& y) {
  require(!y.is_zero(), ErrorKind::DivisionByZero, "approximate division by zero");
  const BigFloat den = y.re_ * y.re_ + y.im_ * y.im_;
  return {(x.re_ * y.re_ + x.im_ * y.im_) / den, (x.im_ * y.re_ - x.re_ * y.im_) / den};
}

std::string ApproxScalar::to_string(int digits) const {
  return re_.to_string(digits) + (im_.sign() < 0 ? "-" : "+") + abs(im_).to_string(digits) + "i";
}

ApproxScalar embed_to_approx(const ExactScalar& x, int precision_bits) {
  require(precision_bits >= kMinPrecisionBits, ErrorKind::InvalidArgument, "precision below 64 bits");
  const int work = precision_bits + 32;
  const BigFloat a(x.rational_part(), work);
  if (x.is_rational()) return {rounded(a, precision_bits), BigFloat(precision_bits)};

  const std::int64_t d = x.field().d();
  const BigFloat root = sqrt(BigFloat(mpq_class(d < 0 ? -d : d), work));
  const BigFloat b_root = BigFloat(x.radical_part(), work) * root;
  if (d < 0) return {rounded(a, precision_bits), rounded(b_root, precision_bits)};

  // a and b√d of opposite sign cancel; go through the exact norm instead.
  if (sgn(x.rational_part()) * sgn(x.radical_part()) < 0) {
    const BigFloat norm(x.norm(), work);
    return {rounded(norm / (a - b_root), precision_bits), BigFloat(precision_bits)};
  }
  return {rounded(a + b_root, precision_bits), BigFloat(precision_bits)};
}

int precision_bits_from_env() {
  const char* raw = std::getenv("WFDIM_PRECISION_BITS");
  if (raw == nullptr) return kDefaultPrecisionBits;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || value < kMinPrecisionBits || value > (1L << 20)) return kDefaultPrecisionBits;
  return static_cast<int>(value);
}

ApproxScalar approx_eval(const Poly& p, const ApproxScalar& x) {
  ApproxScalar acc(x.precision_bits());
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + embed_to_approx(*it, x.precision_bits());
  return acc;
}

std::vector<ApproxScalar> approx_roots(const Poly& p, int precision_bits) {
  require(!p.is_zero(), ErrorKind::InvalidArgument, "roots of the zero polynomial");
  const std::size_t n = p.degree().value();
  if (n == 0) return {};
  const Poly monic = make_monic(p);
  const Poly dp = derivative(monic);
  const int work = precision_bits + 32;

  // Start on a circle of radius 1 + max|c_i| rotated off the real axis.
  double bound = 1.0;
  for (const auto& c : monic.coeffs()) bound = std::max(bound, 1.0 + std::abs(embed_to_approx(c, 64).magnitude().to_double()));
  std::vector<ApproxScalar> z;
  const ApproxScalar seed = ApproxScalar::from_double(0.4, 0.9, work);
  ApproxScalar power = ApproxScalar::from_double(bound / 2.0, 0.0, work);
  for (std::size_t i = 0; i < n; ++i) {
    z.push_back(power);
    power = power * seed;
  }

  BigFloat tol(work);
  mpfr_set_ui_2exp(tol.get(), 1, -(precision_bits + 8), MPFR_RNDN);
  for (int iter = 0; iter < 2000; ++iter) {
    BigFloat max_step(work);
    for (std::size_t i = 0; i < n; ++i) {
      ApproxScalar den = ApproxScalar::from_double(1.0, 0.0, work);
      for (std::size_t j = 0; j < n; ++j)
        if (j != i) den = den * (z[i] - z[j]);
      const ApproxScalar step = approx_eval(monic, z[i]) / den;
      z[i] = z[i] - step;
      const BigFloat rel = step.magnitude() / (BigFloat(1.0, work) + z[i].magnitude());
      if (max_step < rel) max_step = rel;
    }
    if (max_step <= tol) break;
  }
  for (auto& root : z) {
    for (int k = 0; k < 4; ++k) {
      const ApproxScalar slope = approx_eval(dp, root);
      if (slope.is_zero()) break;
      root = root - approx_eval(monic, root) / slope;
    }
  }
  std::vector<ApproxScalar> out;
  out.reserve(n);
  for (const auto& root : z) out.emplace_back(rounded(root.re(), precision_bits), rounded(root.im(), precision_bits));
  return out;
}

std::size_t approx_rank(std::vector<std::vector<ApproxScalar>> rows, double relative_threshold) {
  if (rows.empty()) return 0;
  const std::size_t m = rows.size();
  const std::size_t n = rows.front().size();
  const int prec = rows.front().empty() ? kDefaultPrecisionBits : rows.front().front().precision_bits();

  for (std::size_t j = 0; j < n; ++j) {
    BigFloat scale(prec);
    for (std::size_t i = 0; i < m; ++i) {
      const BigFloat mag = rows[i][j].magnitude();
      if (scale < mag) scale = mag;
    }
    if (scale.is_zero()) continue;
    const ApproxScalar inv(BigFloat(1.0, prec) / scale, BigFloat(prec));
    for (std::size_t i = 0; i < m; ++i) rows[i][j] = rows[i][j] * inv;
  }

  const BigFloat threshold(relative_threshold, prec);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t best = rank;
    BigFloat best_mag = rows[rank][col].magnitude();
    for (std::size_t i = rank + 1; i < m; ++i) {
      const BigFloat mag = rows[i][col].magnitude();
      if (best_mag < mag) {
        best = i;
        best_mag = mag;
      }
    }
    if (best_mag <= threshold) continue;
    std::swap(rows[rank], rows[best]);
    for (std::size_t i = rank + 1; i < m; ++i) {
      const ApproxScalar factor = rows[i][col] / rows[rank][col];
      for (std::size_t j = col; j < n; ++j) rows[i][j] = rows[i][j] - factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace wfdim
