#include "wfdim/zspace.hpp"

#include <algorithm>

namespace wfdim {

ZProblem::ZProblem(std::vector<ExactScalar> eta, std::vector<ExactScalar> omega, std::size_t k)
    : eta_(std::move(eta)), omega_(std::move(omega)), k_(k) {
  require(!omega_.empty(), ErrorKind::InvalidArgument, "Z problem needs at least one node");
  require(eta_.size() == omega_.size(), ErrorKind::InvalidArgument, "eta and omega lengths differ");
  for (std::size_t i = 0; i < omega_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      require(!(omega_[i] == omega_[j]), ErrorKind::CoincidentPoints, "repeated node " + omega_[i].to_string());
  (void)field();
}

FieldDescriptor ZProblem::field() const {
  FieldDescriptor f;
  for (const auto& x : eta_) f = join(f, x.field());
  for (const auto& x : omega_) f = join(f, x.field());
  return f;
}

AssociatedMatrix associated_matrix(const ZProblem& z) {
  ExactMatrix m(z.s(), z.k() + 1);
  for (std::size_t i = 0; i < z.s(); ++i) {
    const ExactScalar& w = z.omega()[i];
    ExactScalar prev = 0;  // ω^{j−1}
    ExactScalar cur = 1;   // ω^j
    for (std::size_t j = 0; j <= z.k(); ++j) {
      m.at(i, j) = z.eta()[i] * cur - ExactScalar(static_cast<long>(j)) * prev;
      prev = cur;
      cur *= w;
    }
  }
  return {std::move(m), z};
}

ZReport z_report(const ZProblem& z) {
  const AssociatedMatrix a = associated_matrix(z);
  const auto kernel = nullspace(a.entries);
  ZReport out;
  out.rank = z.k() + 1 - kernel.size();
  out.dimension = kernel.size();
  out.degenerate = out.rank < std::min(z.s(), z.k() + 1);
  std::vector<Poly> raw;
  for (const auto& v : kernel) raw.emplace_back(v);
  out.basis = canonical_basis(raw, z.k());

  require(out.dimension + z.s() >= z.k() + 1, ErrorKind::Internal, "Z dimension below k+1-s");
  if (z.k() >= 1) require(out.rank >= 1, ErrorKind::Internal, "associated matrix with k >= 1 has rank 0");
  return out;
}

bool in_z(const ZProblem& z, const Poly& p) {
  if (!p.is_zero() && p.degree().value() > z.k()) return false;
  const Poly dp = derivative(p);
  for (std::size_t i = 0; i < z.s(); ++i)
    if (!(eval(dp, z.omega()[i]) == z.eta()[i] * eval(p, z.omega()[i]))) return false;
  return true;
}

ZProblem reduce(const ZProblem& z, std::size_t i) {
  require(i < z.s(), ErrorKind::IndexOutOfRange, "node index " + std::to_string(i) + " out of range");
  require(z.s() >= 2, ErrorKind::InvalidArgument, "reduce needs at least two nodes");
  require(z.k() >= 2, ErrorKind::InvalidArgument, "reduce needs k >= 2");
  std::vector<ExactScalar> eta;
  std::vector<ExactScalar> omega;
  const ExactScalar& wi = z.omega()[i];
  for (std::size_t j = 0; j < z.s(); ++j) {
    if (j == i) continue;
    eta.push_back(z.eta()[j] - ExactScalar(2) / (z.omega()[j] - wi));
    omega.push_back(z.omega()[j]);
  }
  return ZProblem(std::move(eta), std::move(omega), z.k() - 2);
}

ZProblem affine_transport(const ZProblem& z, const ExactScalar& a, const ExactScalar& b) {
  require(!a.is_zero(), ErrorKind::ZeroScale, "affine transport with zero scale");
  std::vector<ExactScalar> eta;
  std::vector<ExactScalar> omega;
  for (std::size_t i = 0; i < z.s(); ++i) {
    eta.push_back(z.eta()[i] / a);
    omega.push_back(a * z.omega()[i] + b);
  }
  return ZProblem(std::move(eta), std::move(omega), z.k());
}

Poly transport_poly(const Poly& p, const ExactScalar& a, const ExactScalar& b) {
  require(!a.is_zero(), ErrorKind::ZeroScale, "affine transport with zero scale");
  const ExactScalar inv = a.inverse();
  return compose_affine(p, inv, -b * inv);
}

std::vector<ExactScalar> critical_eta(const std::vector<ExactScalar>& omega) {
  std::vector<ExactScalar> eta;
  for (std::size_t i = 0; i < omega.size(); ++i) {
    ExactScalar sum = 0;
    for (std::size_t j = 0; j < omega.size(); ++j) {
      if (j == i) continue;
      require(!(omega[i] == omega[j]), ErrorKind::CoincidentPoints, "repeated node " + omega[i].to_string());
      sum += ExactScalar(2) / (omega[i] - omega[j]);
    }
    eta.push_back(sum);
  }
  return eta;
}

ApproxZReport approx_z_report(const ApproxZProblem& z, double relative_threshold) {
  require(!z.omega.empty() && z.eta.size() == z.omega.size(), ErrorKind::InvalidArgument,
          "approximate Z problem needs matching nonempty eta and omega");
  const int prec = z.omega.front().precision_bits();
  std::vector<std::vector<ApproxScalar>> rows;
  for (std::size_t i = 0; i < z.omega.size(); ++i) {
    std::vector<ApproxScalar> row;
    ApproxScalar prev(prec);
    ApproxScalar cur = ApproxScalar::from_double(1.0, 0.0, prec);
    for (std::size_t j = 0; j <= z.k; ++j) {
      row.push_back(z.eta[i] * cur - ApproxScalar::from_double(static_cast<double>(j), 0.0, prec) * prev);
      prev = cur;
      cur = cur * z.omega[i];
    }
    rows.push_back(std::move(row));
  }
  ApproxZReport out;
  out.precision_bits = prec;
  out.rank = approx_rank(std::move(rows), relative_threshold);
  out.dimension = z.k + 1 - out.rank;
  out.degenerate = out.rank < std::min(z.omega.size(), z.k + 1);
  return out;
}

}  // namespace wfdim
