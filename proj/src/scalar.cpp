#include "wfdim/scalar.hpp"

#include <sstream>

namespace wfdim {

bool is_squarefree(std::int64_t d) {
  if (d == 0) return false;
  std::uint64_t m = d < 0 ? static_cast<std::uint64_t>(-(d + 1)) + 1 : static_cast<std::uint64_t>(d);
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % (p * p) == 0) return false;
    while (m % p == 0) m /= p;
  }
  return true;
}

FieldDescriptor FieldDescriptor::quadratic(std::int64_t d) {
  require(d != 0 && d != 1, ErrorKind::InvalidArgument, "radicand must differ from 0 and 1");
  require(is_squarefree(d), ErrorKind::InvalidArgument, "radicand " + std::to_string(d) + " is not squarefree");
  return FieldDescriptor(Kind::Quadratic, d);
}

std::string FieldDescriptor::to_string() const {
  if (is_rational()) return "Q";
  return "Q(sqrt(" + std::to_string(d_) + "))";
}

FieldDescriptor join(const FieldDescriptor& a, const FieldDescriptor& b) {
  if (a.is_rational()) return b;
  if (b.is_rational() || a == b) return a;
  raise(ErrorKind::FieldMismatch, a.to_string() + " vs " + b.to_string());
}

ExactScalar::ExactScalar(mpq_class a, mpq_class b, FieldDescriptor field)
    : a_(std::move(a)), b_(std::move(b)), field_(field) {
  a_.canonicalize();
  b_.canonicalize();
  require(!field_.is_rational() || sgn(b_) == 0, ErrorKind::InvalidArgument,
          "rational scalar with nonzero radical part");
}

ExactScalar ExactScalar::rational(long num, long den) {
  require(den != 0, ErrorKind::DivisionByZero, "zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return ExactScalar(q);
}

ExactScalar ExactScalar::sqrt_d(const FieldDescriptor& field) {
  require(!field.is_rational(), ErrorKind::InvalidArgument, "sqrt_d of the rational field");
  return ExactScalar(0, 1, field);
}

mpq_class ExactScalar::norm() const {
  mpq_class n = a_ * a_ - mpq_class(field_.d()) * b_ * b_;
  return n;
}

ExactScalar ExactScalar::conjugate() const { return ExactScalar(a_, -b_, field_); }

ExactScalar ExactScalar::inverse() const {
  require(!is_zero(), ErrorKind::DivisionByZero, "inverse of zero");
  const mpq_class n = norm();
  return ExactScalar(a_ / n, -b_ / n, field_);
}

ExactScalar ExactScalar::in_field(const FieldDescriptor& field) const {
  if (field == field_) return *this;
  const FieldDescriptor joined = join(field_, field);
  require(joined == field, ErrorKind::FieldMismatch, "cannot move " + field_.to_string() + " into " + field.to_string());
  ExactScalar out = *this;
  out.field_ = field;
  return out;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar out = *this;
  out.a_ = -a_;
  out.b_ = -b_;
  return out;
}

ExactScalar& ExactScalar::operator+=(const ExactScalar& rhs) {
  field_ = join(field_, rhs.field_);
  a_ += rhs.a_;
  b_ += rhs.b_;
  return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& rhs) {
  field_ = join(field_, rhs.field_);
  a_ -= rhs.a_;
  b_ -= rhs.b_;
  return *this;
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& rhs) {
  field_ = join(field_, rhs.field_);
  if (sgn(b_) == 0 && sgn(rhs.b_) == 0) {
    a_ *= rhs.a_;
    return *this;
  }
  // (a + b√d)(c + e√d) = (ac + d·be) + (ae + bc)√d
  mpq_class a = a_ * rhs.a_ + mpq_class(field_.d()) * b_ * rhs.b_;
  mpq_class b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& rhs) {
  require(!rhs.is_zero(), ErrorKind::DivisionByZero, "division by zero");
  field_ = join(field_, rhs.field_);
  if (sgn(rhs.b_) == 0) {
    a_ /= rhs.a_;
    b_ /= rhs.a_;
    return *this;
  }
  return *this *= rhs.inverse();
}

bool operator==(const ExactScalar& x, const ExactScalar& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return sgn(x.b_) == 0 || x.field_ == y.field_;
}

std::size_t ExactScalar::height() const {
  return mpz_sizeinbase(a_.get_num_mpz_t(), 2) + mpz_sizeinbase(a_.get_den_mpz_t(), 2) +
         mpz_sizeinbase(b_.get_num_mpz_t(), 2) + mpz_sizeinbase(b_.get_den_mpz_t(), 2);
}

std::string ExactScalar::to_string() const {
  std::ostringstream os;
  if (sgn(b_) == 0) {
    os << a_;
    return os.str();
  }
  const std::string root = "sqrt(" + std::to_string(field_.d()) + ")";
  if (sgn(a_) != 0) os << a_ << (sgn(b_) > 0 ? "+" : "-");
  else if (sgn(b_) < 0) os << "-";
  const mpq_class mag = abs(b_);
  if (mag == 1) os << root;
  else os << mag << "*" << root;
  return os.str();
}

ExactScalar scalar_arith(const ExactScalar& x, const ExactScalar& y, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
  }
  raise(ErrorKind::InvalidArgument, "unknown arithmetic operation");
}

ExactScalar pow(const ExactScalar& base, unsigned exponent) {
  ExactScalar result = ExactScalar(1).in_field(base.field());
  ExactScalar b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

}  // namespace wfdim
