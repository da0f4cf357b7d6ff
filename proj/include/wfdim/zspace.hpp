#pragma once

#include <cstddef>
#include <vector>

#include "wfdim/approx.hpp"
#include "wfdim/linalg.hpp"
#include "wfdim/poly.hpp"

namespace wfdim {

/// Z(η, ω; s, k): polynomials p with deg p ≤ k and p′(ω_i) = η_i p(ω_i).
class ZProblem {
 public:
  ZProblem(std::vector<ExactScalar> eta, std::vector<ExactScalar> omega, std::size_t k);

  const std::vector<ExactScalar>& eta() const noexcept { return eta_; }
  const std::vector<ExactScalar>& omega() const noexcept { return omega_; }
  std::size_t s() const noexcept { return omega_.size(); }
  std::size_t k() const noexcept { return k_; }
  FieldDescriptor field() const;

 private:
  std::vector<ExactScalar> eta_;
  std::vector<ExactScalar> omega_;
  std::size_t k_;
};

struct AssociatedMatrix {
  ExactMatrix entries;  // s × (k+1), entry (i, j) = η_i ω_i^j − j ω_i^{j−1}
  ZProblem problem;
};

AssociatedMatrix associated_matrix(const ZProblem& z);

struct ZReport {
  std::size_t dimension = 0;
  std::size_t rank = 0;
  bool degenerate = false;
  std::vector<Poly> basis;
};

ZReport z_report(const ZProblem& z);

bool in_z(const ZProblem& z, const Poly& p);

/// Drops node i (0-based) and shifts the remaining η_j by −2/(ω_j − ω_i);
/// k decreases by 2. Requires s ≥ 2 and k ≥ 2.
ZProblem reduce(const ZProblem& z, std::size_t i);

/// η′ = η/a, ω′ = aω + b. p ∈ Z(η, ω) iff transport_poly(p, a, b) ∈ Z(η′, ω′).
ZProblem affine_transport(const ZProblem& z, const ExactScalar& a, const ExactScalar& b);

/// p(a⁻¹(x − b))
Poly transport_poly(const Poly& p, const ExactScalar& a, const ExactScalar& b);

/// η_i = Σ_{j≠i} 2/(ω_i − ω_j)
std::vector<ExactScalar> critical_eta(const std::vector<ExactScalar>& omega);

inline constexpr double kApproxRankThreshold = 1e-9;

struct ApproxZProblem {
  std::vector<ApproxScalar> eta;
  std::vector<ApproxScalar> omega;
  std::size_t k = 0;
};

struct ApproxZReport {
  std::size_t dimension = 0;
  std::size_t rank = 0;
  bool degenerate = false;
  int precision_bits = 0;
};

ApproxZReport approx_z_report(const ApproxZProblem& z, double relative_threshold = kApproxRankThreshold);

}  // namespace wfdim
