#pragma once

#include <cstddef>
#include <vector>

#include "wfdim/bridge.hpp"
#include "wfdim/poly.hpp"
#include "wfdim/zspace.hpp"

namespace wfdim {

/// 1/Q = Σ A_i/(x−α_i)² + Σ b′_j/(x−β_j) + Σ C_s/(x−γ_s)² for
/// Q = f_α² f_β f_γ², with deg A_i, deg C_s ≤ 1.
struct QPartialFractions {
  Poly q;
  std::vector<Poly> a;                // per simple root
  std::vector<ExactScalar> b_prime;   // per double root
  std::vector<Poly> c;                // per higher root
};

/// Throws Internal if the terms do not recombine to 1/Q.
QPartialFractions partial_fractions_q(const FactoredInput& fi);

/// Residues to hit: d_i p(α_i) − p′(α_i) = a_i, p(β_j) = b_j,
/// p ≡ c_l mod (x−γ_l)².
struct CongruenceTarget {
  std::vector<ExactScalar> a;
  std::vector<ExactScalar> b;
  std::vector<Poly> c;
};

/// d_i = f″(α_i)/f′(α_i) for each simple root, in grouping order.
std::vector<ExactScalar> simple_root_ratios(const FactoredInput& fi);

/// Polynomial of degree ≤ 2n1 + n2 + 2N3 − 1 meeting every target, built
/// from the partial fractions of 1/Q. Requires r ≥ 2n1 − 1.
Poly crt_construct(const FactoredInput& fi, const CongruenceTarget& t);

bool check_congruences(const FactoredInput& fi, const CongruenceTarget& t, const Poly& p);

struct HermiteData {
  std::vector<ExactScalar> eta;
  std::vector<ExactScalar> omega;
  std::vector<ExactScalar> y;
};

/// The unique p with deg p ≤ 2s−1, p(ω_i) = y_i and p′(ω_i) = η_i y_i.
Poly hermite_basis(const HermiteData& h);

/// dim of the kernel of p ↦ (p(ω_i))_i on Z(η, ω; s, k), i.e. k − 2s + 1.
/// Requires k ≥ 2s − 1; cross-checked against z_report.
std::size_t ev_kernel_dim(const ZProblem& z);

}  // namespace wfdim
