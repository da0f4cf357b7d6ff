#pragma once

#include <cstddef>
#include <vector>

#include "wfdim/approx.hpp"
#include "wfdim/poly.hpp"
#include "wfdim/zspace.hpp"

namespace wfdim {

/// Distinct roots split by multiplicity: α simple, β double, γ of
/// multiplicity ≥ 3.
struct RootGrouping {
  std::vector<ExactScalar> alpha;
  std::vector<ExactScalar> beta;
  std::vector<RootMultiplicity> gamma;
  std::size_t n = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t N3 = 0;
  long r = 0;   // n − 2 − (n2 + 2·N3)
  long mu = 0;  // r + 1 − n1
};

RootGrouping group_roots(const FactoredInput& fi);

struct RootFactors {
  Poly f_alpha;        // ∏ (x − α_i)
  Poly f_beta;         // ∏ (x − β_j)
  Poly f_gamma;        // ∏ (x − γ_s)
  Poly f_gamma_tilde;  // ∏ (x − γ_s)^{k_s}
};

RootFactors root_factors(const RootGrouping& g);

/// f_β · f_γ², the factor every element of W(f) carries.
Poly multiple_root_factor(const RootGrouping& g);

/// d(x0) = f_α″/f_α′ + Σ 3/(x0 − β_j) + Σ 2(k_s − 1)/(x0 − γ_s), also
/// evaluated through the logarithmic-derivative form and checked equal.
/// The f_α term is taken as 0 when n1 ≤ 1.
ExactScalar d_at(const FactoredInput& fi, const ExactScalar& x0);

/// d(x0) without the f_α term.
ExactScalar d_tilde_at(const FactoredInput& fi, const ExactScalar& x0);

/// d(α_i) for every simple root, in input order.
std::vector<ExactScalar> delta_vector(const FactoredInput& fi);

/// p / (f_β f_γ²); NotDivisible when the division leaves a remainder.
Poly phi(const FactoredInput& fi, const Poly& p);

/// f_β f_γ² · q; NotInZ unless deg q ≤ r and q satisfies the Z conditions.
Poly psi(const FactoredInput& fi, const Poly& q);

/// Z(δ, α; n1, r). NoSimpleRoots when n1 = 0, HypothesisViolated when r < 0.
ZProblem to_z_problem(const FactoredInput& fi);

/// (x−β)² | R(f,p) ⇔ (x−β) | p for each double root and
/// (x−γ)^k | R(f,p) ⇔ (x−γ)² | p for each higher root.
bool multiplicity_reduction_check(const FactoredInput& fi, const Poly& p);

/// f whose multiple roots (and possibly some simple roots) are exact while
/// the remaining simple roots are only known numerically. Multiplicities are
/// always declared, never inferred.
struct MixedRootInput {
  std::vector<RootMultiplicity> exact_roots;
  std::vector<ApproxScalar> approx_simple_roots;
};

/// Z(δ, α; n1, r) on the approximate backend.
ApproxZProblem to_approx_z_problem(const MixedRootInput& in, int precision_bits);

}  // namespace wfdim
