#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "wfdim/scalar.hpp"

namespace wfdim {

/// Polynomial degree with a distinct −∞ for the zero polynomial, so that
/// bounds such as `deg p <= n - 2` hold for p = 0 without special cases.
class Degree {
 public:
  static Degree neg_infinity() { return Degree(); }
  explicit Degree(std::size_t value) : value_(value) {}

  bool is_neg_infinity() const noexcept { return !value_.has_value(); }
  /// Throws InvalidArgument for −∞.
  std::size_t value() const;

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& lhs, const Degree& rhs);
  friend bool operator==(const Degree& lhs, long rhs) { return lhs.value_ && static_cast<long>(*lhs.value_) == rhs; }
  friend std::strong_ordering operator<=>(const Degree& lhs, long rhs);

  std::string to_string() const;

 private:
  Degree() = default;
  std::optional<std::size_t> value_;
};

/// Dense univariate polynomial, coefficients in ascending degree. Canonical:
/// no trailing zeros, every coefficient carries the polynomial's field.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<ExactScalar> coeffs);
  Poly(std::initializer_list<ExactScalar> coeffs) : Poly(std::vector<ExactScalar>(coeffs)) {}

  static Poly constant(const ExactScalar& c) { return Poly({c}); }
  static Poly monomial(const ExactScalar& c, std::size_t k);
  static Poly x() { return monomial(1, 1); }
  /// x − root
  static Poly linear_factor(const ExactScalar& root) { return Poly({-root, 1}); }

  const std::vector<ExactScalar>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^k; zero past the degree.
  ExactScalar coeff(std::size_t k) const;
  const FieldDescriptor& field() const noexcept { return field_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  Degree degree() const { return coeffs_.empty() ? Degree::neg_infinity() : Degree(coeffs_.size() - 1); }
  ExactScalar leading_coefficient() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  Poly& operator*=(const ExactScalar& rhs);

  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(Poly lhs, const ExactScalar& rhs) { return lhs *= rhs; }
  friend Poly operator*(const ExactScalar& lhs, Poly rhs) { return rhs *= lhs; }

  friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

  /// "x^2 - 5/6*x", "0" for the zero polynomial.
  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();

  std::vector<ExactScalar> coeffs_;
  FieldDescriptor field_;
};

enum class PolyOp { Add, Sub, Mul };

Poly poly_arith(const Poly& p, const Poly& q, PolyOp op);

Poly derivative(const Poly& p);
Poly derivative(const Poly& p, unsigned order);

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division: p = q·quotient + remainder with deg remainder < deg q.
DivMod divmod(const Poly& p, const Poly& q);

bool divides(const Poly& divisor, const Poly& p);

/// Horner evaluation.
ExactScalar eval(const Poly& p, const ExactScalar& x);

Poly pow(const Poly& p, unsigned exponent);

/// p(a·x + b)
Poly compose_affine(const Poly& p, const ExactScalar& a, const ExactScalar& b);

Poly make_monic(const Poly& p);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly p, Poly q);

/// Yun's square-free decomposition: entry m−1 is the monic product of the
/// distinct roots of multiplicity exactly m, so p = lc·∏ parts[m−1]^m.
std::vector<Poly> squarefree_parts(const Poly& p);

struct RootMultiplicity {
  ExactScalar root;
  unsigned multiplicity = 1;
};

/// f described by its distinct roots and their multiplicities. Degree ≥ 4.
class FactoredInput {
 public:
  explicit FactoredInput(std::vector<RootMultiplicity> roots, ExactScalar leading_coefficient = 1);

  const std::vector<RootMultiplicity>& roots() const noexcept { return roots_; }
  const ExactScalar& leading_coefficient() const noexcept { return leading_coefficient_; }
  std::size_t degree() const noexcept { return degree_; }
  FieldDescriptor field() const;

  /// Same roots under x ↦ a·x + b (roots map to a·ρ + b).
  FactoredInput affine_image(const ExactScalar& a, const ExactScalar& b) const;
  /// Adds one more simple root.
  FactoredInput with_simple_root(const ExactScalar& root) const;

 private:
  std::vector<RootMultiplicity> roots_;
  ExactScalar leading_coefficient_;
  std::size_t degree_ = 0;
};

/// leading_coefficient · ∏ (x − root)^multiplicity
Poly expand(const FactoredInput& fi);

/// ∏ (x − root) over the given roots.
Poly product_of_linear_factors(const std::vector<ExactScalar>& roots);

}  // namespace wfdim
