#include "wfdim/constructions.hpp"

#include "wfdim/linalg.hpp"

namespace wfdim {

namespace {

/// Numerator over (x−ρ)^m of the partial fraction of 1/((x−ρ)^m · H), m ∈ {1, 2}.
Poly local_numerator(const Poly& cofactor, const ExactScalar& rho, unsigned m) {
  const ExactScalar h = eval(cofactor, rho);
  const ExactScalar u = h.inverse();
  if (m == 1) return Poly::constant(u);
  const ExactScalar v = -eval(derivative(cofactor), rho) * u * u;
  return Poly::constant(u) + Poly::constant(v) * Poly::linear_factor(rho);
}

Poly residue_mod_square(const Poly& p, const ExactScalar& rho) {
  const Poly lin = Poly::linear_factor(rho);
  return divmod(p, lin * lin).remainder;
}

}  // namespace

QPartialFractions partial_fractions_q(const FactoredInput& fi) {
  const RootGrouping g = group_roots(fi);
  const RootFactors rf = root_factors(g);
  QPartialFractions out;
  out.q = rf.f_alpha * rf.f_alpha * rf.f_beta * rf.f_gamma * rf.f_gamma;

  Poly sum;
  auto add_term = [&](const ExactScalar& rho, unsigned m) {
    const Poly local = pow(Poly::linear_factor(rho), m);
    const Poly cofactor = divmod(out.q, local).quotient;
    const Poly num = local_numerator(cofactor, rho, m);
    sum += num * cofactor;
    return num;
  };
  for (const auto& a : g.alpha) out.a.push_back(add_term(a, 2));
  for (const auto& b : g.beta) out.b_prime.push_back(add_term(b, 1).coeff(0));
  for (const auto& rm : g.gamma) out.c.push_back(add_term(rm.root, 2));

  require(sum == Poly::constant(1), ErrorKind::Internal, "partial fractions of 1/Q do not recombine");
  return out;
}

std::vector<ExactScalar> simple_root_ratios(const FactoredInput& fi) {
  const RootGrouping g = group_roots(fi);
  const Poly f = expand(fi);
  const Poly df = derivative(f);
  const Poly ddf = derivative(df);
  std::vector<ExactScalar> out;
  for (const auto& a : g.alpha) out.push_back(eval(ddf, a) / eval(df, a));
  return out;
}

Poly crt_construct(const FactoredInput& fi, const CongruenceTarget& t) {
  const RootGrouping g = group_roots(fi);
  require(g.r >= 2 * static_cast<long>(g.n1) - 1, ErrorKind::HypothesisViolated, "construction needs r >= 2*n1 - 1");
  require(t.a.size() == g.n1 && t.b.size() == g.n2 && t.c.size() == g.N3, ErrorKind::InvalidArgument,
          "congruence target lengths do not match the root grouping");
  for (const auto& c : t.c)
    require(c.is_zero() || c.degree() <= 1, ErrorKind::InvalidArgument, "target c_l must have degree <= 1");

  const QPartialFractions pf = partial_fractions_q(fi);
  const std::vector<ExactScalar> d = simple_root_ratios(fi);
  Poly p;
  for (std::size_t i = 0; i < g.n1; ++i) {
    const ExactScalar& a = t.a[i];
    const ExactScalar& alpha = g.alpha[i];
    Poly h;
    if (d[i].is_zero()) {
      h = Poly({0, -a});
    } else {
      const ExactScalar a_tilde = ExactScalar(2) * a / d[i] - alpha * a;
      h = Poly({a_tilde, a});
    }
    const Poly lin = Poly::linear_factor(alpha);
    const Poly a_res = residue_mod_square(pf.a[i] * h, alpha);
    p += a_res * divmod(pf.q, lin * lin).quotient;
  }
  for (std::size_t j = 0; j < g.n2; ++j)
    p += Poly::constant(pf.b_prime[j] * t.b[j]) * divmod(pf.q, Poly::linear_factor(g.beta[j])).quotient;
  for (std::size_t l = 0; l < g.N3; ++l) {
    const ExactScalar& gamma = g.gamma[l].root;
    const Poly lin = Poly::linear_factor(gamma);
    p += residue_mod_square(pf.c[l] * t.c[l], gamma) * divmod(pf.q, lin * lin).quotient;
  }

  const long bound = 2 * static_cast<long>(g.n1) + static_cast<long>(g.n2) + 2 * static_cast<long>(g.N3) - 1;
  require(p.degree() <= bound, ErrorKind::Internal, "constructed polynomial exceeds its degree bound");
  require(check_congruences(fi, t, p), ErrorKind::Internal, "constructed polynomial misses a congruence");
  return p;
}

bool check_congruences(const FactoredInput& fi, const CongruenceTarget& t, const Poly& p) {
  const RootGrouping g = group_roots(fi);
  if (t.a.size() != g.n1 || t.b.size() != g.n2 || t.c.size() != g.N3) return false;
  const std::vector<ExactScalar> d = simple_root_ratios(fi);
  const Poly dp = derivative(p);
  for (std::size_t i = 0; i < g.n1; ++i)
    if (!(d[i] * eval(p, g.alpha[i]) - eval(dp, g.alpha[i]) == t.a[i])) return false;
  for (std::size_t j = 0; j < g.n2; ++j)
    if (!(eval(p, g.beta[j]) == t.b[j])) return false;
  for (std::size_t l = 0; l < g.N3; ++l)
    if (!(residue_mod_square(p - t.c[l], g.gamma[l].root).is_zero())) return false;
  return true;
}

Poly hermite_basis(const HermiteData& h) {
  const std::size_t s = h.omega.size();
  require(s >= 1 && h.eta.size() == s && h.y.size() == s, ErrorKind::InvalidArgument,
          "Hermite data needs matching nonempty eta, omega and y");
  // The confluent Vandermonde system for values and first derivatives.
  ExactMatrix m(2 * s, 2 * s);
  for (std::size_t i = 0; i < s; ++i) {
    ExactScalar prev = 0;
    ExactScalar cur = 1;
    for (std::size_t j = 0; j < 2 * s; ++j) {
      m.at(2 * i, j) = cur;
      m.at(2 * i + 1, j) = ExactScalar(static_cast<long>(j)) * prev;
      prev = cur;
      cur *= h.omega[i];
    }
  }
  require(!determinant(m).is_zero(), ErrorKind::CoincidentPoints, "Hermite nodes are not distinct");

  Poly p;
  for (std::size_t i = 0; i < s; ++i) {
    Poly li = Poly::constant(1);
    for (std::size_t j = 0; j < s; ++j) {
      if (j == i) continue;
      li *= Poly::linear_factor(h.omega[j]) * (h.omega[i] - h.omega[j]).inverse();
    }
    const Poly li2 = li * li;
    const Poly lin = Poly::linear_factor(h.omega[i]);
    const ExactScalar slope = eval(derivative(li), h.omega[i]);
    const Poly value_basis = (Poly::constant(1) - Poly::constant(ExactScalar(2) * slope) * lin) * li2;
    const Poly slope_basis = lin * li2;
    p += value_basis * h.y[i] + slope_basis * (h.eta[i] * h.y[i]);
  }

  const Poly dp = derivative(p);
  for (std::size_t i = 0; i < s; ++i) {
    require(eval(p, h.omega[i]) == h.y[i], ErrorKind::Internal, "Hermite value condition failed");
    require(eval(dp, h.omega[i]) == h.eta[i] * h.y[i], ErrorKind::Internal, "Hermite slope condition failed");
  }
  return p;
}

std::size_t ev_kernel_dim(const ZProblem& z) {
  require(z.k() + 1 >= 2 * z.s(), ErrorKind::HypothesisViolated, "ev kernel formula needs k >= 2s - 1");
  const std::size_t dim = z.k() + 1 - 2 * z.s();
  require(z_report(z).dimension == dim + z.s(), ErrorKind::Internal, "ev kernel dimension disagrees with z_report");
  return dim;
}

}  // namespace wfdim
