#include "wfdim/bridge.hpp"

#include "wfdim/oracle.hpp"

namespace wfdim {

RootGrouping group_roots(const FactoredInput& fi) {
  RootGrouping g;
  for (const auto& rm : fi.roots()) {
    if (rm.multiplicity == 1) g.alpha.push_back(rm.root);
    else if (rm.multiplicity == 2) g.beta.push_back(rm.root);
    else g.gamma.push_back(rm);
  }
  g.n = fi.degree();
  g.n1 = g.alpha.size();
  g.n2 = g.beta.size();
  g.N3 = g.gamma.size();
  g.r = static_cast<long>(g.n) - 2 - static_cast<long>(g.n2 + 2 * g.N3);
  g.mu = g.r + 1 - static_cast<long>(g.n1);

  long check = static_cast<long>(g.n1) + static_cast<long>(g.n2) - 2;
  for (const auto& rm : g.gamma) check += static_cast<long>(rm.multiplicity) - 2;
  require(check == g.r, ErrorKind::Internal, "root count identity for r failed");
  return g;
}

RootFactors root_factors(const RootGrouping& g) {
  RootFactors out{product_of_linear_factors(g.alpha), product_of_linear_factors(g.beta), Poly::constant(1),
                  Poly::constant(1)};
  for (const auto& rm : g.gamma) {
    const Poly lin = Poly::linear_factor(rm.root);
    out.f_gamma *= lin;
    out.f_gamma_tilde *= pow(lin, rm.multiplicity);
  }
  return out;
}

Poly multiple_root_factor(const RootGrouping& g) {
  const RootFactors rf = root_factors(g);
  return rf.f_beta * rf.f_gamma * rf.f_gamma;
}

namespace {

bool is_listed_root(const RootGrouping& g, const ExactScalar& x0) {
  for (const auto& b : g.beta)
    if (b == x0) return true;
  for (const auto& rm : g.gamma)
    if (rm.root == x0) return true;
  return false;
}

ExactScalar alpha_term(const RootGrouping& g, const RootFactors& rf, const ExactScalar& x0) {
  if (g.n1 <= 1) return 0;
  const ExactScalar den = eval(derivative(rf.f_alpha), x0);
  require(!den.is_zero(), ErrorKind::PoleAtPoint, "f_alpha' vanishes at " + x0.to_string());
  return eval(derivative(rf.f_alpha, 2), x0) / den;
}

ExactScalar log_derivative(const Poly& p, const ExactScalar& x0) {
  return eval(derivative(p), x0) / eval(p, x0);
}

}  // namespace

ExactScalar d_tilde_at(const FactoredInput& fi, const ExactScalar& x0) {
  const RootGrouping g = group_roots(fi);
  require(!is_listed_root(g, x0), ErrorKind::PoleAtPoint, "d has a pole at " + x0.to_string());
  ExactScalar sum = 0;
  for (const auto& b : g.beta) sum += ExactScalar(3) / (x0 - b);
  for (const auto& rm : g.gamma) sum += ExactScalar(2 * (static_cast<long>(rm.multiplicity) - 1)) / (x0 - rm.root);
  return sum;
}

ExactScalar d_at(const FactoredInput& fi, const ExactScalar& x0) {
  const RootGrouping g = group_roots(fi);
  const RootFactors rf = root_factors(g);
  const ExactScalar head = alpha_term(g, rf, x0);
  const ExactScalar direct = head + d_tilde_at(fi, x0);

  ExactScalar logform = head;
  if (g.n2 > 0) logform += ExactScalar(3) * log_derivative(rf.f_beta, x0);
  if (g.N3 > 0)
    logform += ExactScalar(2) * log_derivative(rf.f_gamma_tilde, x0) - ExactScalar(2) * log_derivative(rf.f_gamma, x0);
  require(direct == logform, ErrorKind::Internal, "the two forms of d disagree at " + x0.to_string());
  return direct;
}

std::vector<ExactScalar> delta_vector(const FactoredInput& fi) {
  const RootGrouping g = group_roots(fi);
  std::vector<ExactScalar> out;
  out.reserve(g.n1);
  for (const auto& a : g.alpha) out.push_back(d_at(fi, a));
  return out;
}

Poly phi(const FactoredInput& fi, const Poly& p) {
  const RootGrouping g = group_roots(fi);
  const DivMod qr = divmod(p, multiple_root_factor(g));
  require(qr.remainder.is_zero(), ErrorKind::NotDivisible, "p is not divisible by f_beta*f_gamma^2");
  require(qr.quotient.is_zero() || static_cast<long>(qr.quotient.degree().value()) <= g.r, ErrorKind::NotDivisible,
          "quotient degree exceeds r");
  return qr.quotient;
}

Poly psi(const FactoredInput& fi, const Poly& q) {
  const RootGrouping g = group_roots(fi);
  require(q.is_zero() || static_cast<long>(q.degree().value()) <= g.r, ErrorKind::NotInZ, "deg q exceeds r");
  if (g.n1 > 0) require(in_z(to_z_problem(fi), q), ErrorKind::NotInZ, "q violates the interpolation conditions");
  return multiple_root_factor(g) * q;
}

ZProblem to_z_problem(const FactoredInput& fi) {
  const RootGrouping g = group_roots(fi);
  require(g.n1 >= 1, ErrorKind::NoSimpleRoots, "f has no simple roots");
  require(g.r >= 0, ErrorKind::HypothesisViolated, "r is negative");
  return ZProblem(delta_vector(fi), g.alpha, static_cast<std::size_t>(g.r));
}

bool multiplicity_reduction_check(const FactoredInput& fi, const Poly& p) {
  const RootGrouping g = group_roots(fi);
  const Poly r = r_of(expand(fi), p);
  for (const auto& b : g.beta) {
    const Poly lin = Poly::linear_factor(b);
    if (divides(lin * lin, r) != divides(lin, p)) return false;
  }
  for (const auto& rm : g.gamma) {
    const Poly lin = Poly::linear_factor(rm.root);
    if (divides(pow(lin, rm.multiplicity), r) != divides(lin * lin, p)) return false;
  }
  return true;
}

ApproxZProblem to_approx_z_problem(const MixedRootInput& in, int precision_bits) {
  std::vector<ApproxScalar> alpha;
  std::vector<std::pair<ApproxScalar, long>> poles;  // (root, weight) of the d̃ terms
  std::size_t n = 0, n2 = 0, N3 = 0;
  for (const auto& rm : in.exact_roots) {
    n += rm.multiplicity;
    const ApproxScalar z = embed_to_approx(rm.root, precision_bits);
    if (rm.multiplicity == 1) alpha.push_back(z);
    else if (rm.multiplicity == 2) {
      ++n2;
      poles.emplace_back(z, 3);
    } else {
      ++N3;
      poles.emplace_back(z, 2 * (static_cast<long>(rm.multiplicity) - 1));
    }
  }
  for (const auto& z : in.approx_simple_roots) alpha.push_back(z);
  n += in.approx_simple_roots.size();
  require(n >= 4, ErrorKind::DegreeTooSmall, "degree below 4");
  require(!alpha.empty(), ErrorKind::NoSimpleRoots, "f has no simple roots");
  const long r = static_cast<long>(n) - 2 - static_cast<long>(n2 + 2 * N3);
  require(r >= 0, ErrorKind::HypothesisViolated, "r is negative");

  // f_α″/f_α′ at α_i equals Σ_{j≠i} 2/(α_i − α_j).
  ApproxZProblem out;
  out.k = static_cast<std::size_t>(r);
  out.omega = alpha;
  const ApproxScalar two = ApproxScalar::from_double(2.0, 0.0, precision_bits);
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    ApproxScalar sum(precision_bits);
    for (std::size_t j = 0; j < alpha.size(); ++j)
      if (j != i) sum = sum + two / (alpha[i] - alpha[j]);
    for (const auto& [root, weight] : poles)
      sum = sum + ApproxScalar::from_double(static_cast<double>(weight), 0.0, precision_bits) / (alpha[i] - root);
    out.eta.push_back(sum);
  }
  return out;
}

}  // namespace wfdim
