#include "wfdim/poly.hpp"

#include <sstream>

namespace wfdim {

std::size_t Degree::value() const {
  require(value_.has_value(), ErrorKind::InvalidArgument, "degree of the zero polynomial");
  return *value_;
}

std::strong_ordering operator<=>(const Degree& lhs, const Degree& rhs) {
  if (!lhs.value_ || !rhs.value_) return lhs.value_.has_value() <=> rhs.value_.has_value();
  return *lhs.value_ <=> *rhs.value_;
}

std::strong_ordering operator<=>(const Degree& lhs, long rhs) {
  if (!lhs.value_) return std::strong_ordering::less;
  return static_cast<long>(*lhs.value_) <=> rhs;
}

std::string Degree::to_string() const { return value_ ? std::to_string(*value_) : "-inf"; }

Poly::Poly(std::vector<ExactScalar> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  FieldDescriptor f = field_;
  for (const auto& c : coeffs_) f = join(f, c.field());
  field_ = f;
  for (auto& c : coeffs_) c = c.in_field(field_);
}

Poly Poly::monomial(const ExactScalar& c, std::size_t k) {
  std::vector<ExactScalar> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

ExactScalar Poly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : ExactScalar(0).in_field(field_);
}

ExactScalar Poly::leading_coefficient() const {
  require(!coeffs_.empty(), ErrorKind::InvalidArgument, "leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  field_ = join(field_, rhs.field_);
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  field_ = join(field_, rhs.field_);
  normalize();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) {
    Poly out;
    out.field_ = join(lhs.field_, rhs.field_);
    return out;
  }
  std::vector<ExactScalar> v(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  Poly out(std::move(v));
  out.field_ = join(out.field_, join(lhs.field_, rhs.field_));
  out.normalize();
  return out;
}

Poly& Poly::operator*=(const Poly& rhs) { return *this = *this * rhs; }

Poly& Poly::operator*=(const ExactScalar& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  field_ = join(field_, rhs.field());
  normalize();
  return *this;
}

std::string Poly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const ExactScalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string body;
    bool negative = false;
    if (c.is_rational()) {
      negative = sgn(c.rational_part()) < 0;
      const ExactScalar mag = negative ? -c : c;
      if (!(mag.is_one() && k > 0)) body = mag.to_string();
    } else {
      body = "(" + c.to_string() + ")";
    }
    if (k > 0) {
      if (!body.empty()) body += "*";
      body += var;
      if (k > 1) body += "^" + std::to_string(k);
    }
    if (first) os << (negative ? "-" : "") << body;
    else os << (negative ? " - " : " + ") << body;
    first = false;
  }
  return os.str();
}

Poly poly_arith(const Poly& p, const Poly& q, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return p + q;
    case PolyOp::Sub: return p - q;
    case PolyOp::Mul: return p * q;
  }
  raise(ErrorKind::InvalidArgument, "unknown polynomial operation");
}

Poly derivative(const Poly& p) {
  const auto& c = p.coeffs();
  if (c.size() <= 1) return Poly();
  std::vector<ExactScalar> v(c.size() - 1);
  for (std::size_t k = 1; k < c.size(); ++k) v[k - 1] = c[k] * ExactScalar(static_cast<long>(k));
  return Poly(std::move(v));
}

Poly derivative(const Poly& p, unsigned order) {
  Poly out = p;
  for (unsigned i = 0; i < order; ++i) out = derivative(out);
  return out;
}

DivMod divmod(const Poly& p, const Poly& q) {
  require(!q.is_zero(), ErrorKind::DivisionByZero, "polynomial division by zero");
  const std::size_t dq = q.degree().value();
  const ExactScalar lead_inv = q.leading_coefficient().inverse();
  std::vector<ExactScalar> rem = p.coeffs();
  if (rem.size() <= dq) return {Poly(), p};
  std::vector<ExactScalar> quot(rem.size() - dq);
  for (std::size_t k = rem.size(); k-- > dq;) {
    if (rem[k].is_zero()) continue;
    const ExactScalar t = rem[k] * lead_inv;
    quot[k - dq] = t;
    for (std::size_t j = 0; j <= dq; ++j) rem[k - dq + j] -= t * q.coeffs()[j];
  }
  rem.resize(dq);
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

bool divides(const Poly& divisor, const Poly& p) { return divmod(p, divisor).remainder.is_zero(); }

ExactScalar eval(const Poly& p, const ExactScalar& x) {
  ExactScalar acc = ExactScalar(0).in_field(join(p.field(), x.field()));
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly pow(const Poly& p, unsigned exponent) {
  Poly result = Poly::constant(1);
  Poly b = p;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

Poly compose_affine(const Poly& p, const ExactScalar& a, const ExactScalar& b) {
  const Poly inner({b, a});
  Poly acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Poly::constant(*it);
  return acc;
}

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p * p.leading_coefficient().inverse();
}

Poly gcd(Poly p, Poly q) {
  while (!q.is_zero()) {
    Poly r = divmod(p, q).remainder;
    p = std::move(q);
    q = std::move(r);
  }
  return make_monic(p);
}

std::vector<Poly> squarefree_parts(const Poly& p) {
  require(!p.is_zero(), ErrorKind::InvalidArgument, "square-free decomposition of zero");
  std::vector<Poly> parts;
  if (p.degree() == 0) return parts;
  const Poly dp = derivative(p);
  Poly a = gcd(p, dp);
  Poly b = divmod(p, a).quotient;
  Poly c = divmod(dp, a).quotient;
  Poly d = c - derivative(b);
  while (!(b.degree() == 0)) {
    const Poly g = gcd(b, d);
    parts.push_back(g);
    b = divmod(b, g).quotient;
    c = divmod(d, g).quotient;
    d = c - derivative(b);
  }
  while (!parts.empty() && parts.back().degree() == 0) parts.pop_back();
  return parts;
}

FactoredInput::FactoredInput(std::vector<RootMultiplicity> roots, ExactScalar leading_coefficient)
    : roots_(std::move(roots)), leading_coefficient_(std::move(leading_coefficient)) {
  require(!leading_coefficient_.is_zero(), ErrorKind::InvalidArgument, "leading coefficient is zero");
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    require(roots_[i].multiplicity >= 1, ErrorKind::InvalidArgument, "root multiplicity must be positive");
    for (std::size_t j = 0; j < i; ++j)
      require(!(roots_[i].root == roots_[j].root), ErrorKind::CoincidentPoints,
              "repeated root " + roots_[i].root.to_string());
    degree_ += roots_[i].multiplicity;
  }
  require(degree_ >= 4, ErrorKind::DegreeTooSmall, "degree " + std::to_string(degree_) + " is below 4");
  (void)field();
}

FieldDescriptor FactoredInput::field() const {
  FieldDescriptor f = leading_coefficient_.field();
  for (const auto& rm : roots_) f = join(f, rm.root.field());
  return f;
}

FactoredInput FactoredInput::affine_image(const ExactScalar& a, const ExactScalar& b) const {
  require(!a.is_zero(), ErrorKind::ZeroScale, "affine map with zero scale");
  std::vector<RootMultiplicity> mapped;
  mapped.reserve(roots_.size());
  for (const auto& rm : roots_) mapped.push_back({a * rm.root + b, rm.multiplicity});
  return FactoredInput(std::move(mapped), leading_coefficient_);
}

FactoredInput FactoredInput::with_simple_root(const ExactScalar& root) const {
  auto roots = roots_;
  roots.push_back({root, 1});
  return FactoredInput(std::move(roots), leading_coefficient_);
}

Poly expand(const FactoredInput& fi) {
  Poly out = Poly::constant(fi.leading_coefficient());
  for (const auto& rm : fi.roots()) out *= pow(Poly::linear_factor(rm.root), rm.multiplicity);
  return out;
}

Poly product_of_linear_factors(const std::vector<ExactScalar>& roots) {
  Poly out = Poly::constant(1);
  for (const auto& r : roots) out *= Poly::linear_factor(r);
  return out;
}

}  // namespace wfdim
