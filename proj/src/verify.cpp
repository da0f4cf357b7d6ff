#include "wfdim/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "wfdim/approx.hpp"
#include "wfdim/bridge.hpp"
#include "wfdim/classifier.hpp"
#include "wfdim/constructions.hpp"
#include "wfdim/corpus.hpp"
#include "wfdim/linalg.hpp"
#include "wfdim/oracle.hpp"
#include "wfdim/zspace.hpp"

namespace wfdim {

namespace {

constexpr std::size_t kMaxRecordedFailures = 20;

class Suite {
 public:
  Suite(std::string name, const VerifyOptions& opts)
      : opts_(opts), rng_(opts.seed ^ std::hash<std::string>{}(name)) {
    result_.name = std::move(name);
  }

  void check(bool ok, const std::string& what) {
    if (ok) {
      ++result_.passed;
      return;
    }
    ++result_.failed;
    if (result_.failures.size() < kMaxRecordedFailures) result_.failures.push_back(what);
  }

  // Runs body, turning an unexpected Error into a failure.
  template <typename F>
  void guarded(const std::string& what, F&& body) {
    try {
      body();
    } catch (const Error& e) {
      check(false, what + ": " + e.what());
    }
  }

  void note(std::string msg) { result_.notes.push_back(std::move(msg)); }

  template <typename F>
  void expect_error(ErrorKind kind, const std::string& what, F&& body) {
    try {
      body();
      check(false, what + ": no error raised");
    } catch (const Error& e) {
      check(e.kind() == kind, what + ": raised " + std::string(to_string(e.kind())));
    }
  }

  Rng& rng() { return rng_; }
  std::size_t n() const { return opts_.corpus_size; }
  const VerifyOptions& opts() const { return opts_; }
  SuiteResult take() { return std::move(result_); }

 private:
  const VerifyOptions& opts_;
  Rng rng_;
  SuiteResult result_;
};

const std::int64_t kRadicands[] = {-1, 2, 3, -3, 5, -33, 33};

ExactScalar random_quadratic(Rng& rng, const FieldDescriptor& field) {
  const ExactScalar a = random_rational(rng, 9, 5);
  const ExactScalar b = random_rational(rng, 9, 5);
  return ExactScalar(a.rational_part(), b.rational_part(), field);
}

Poly random_poly(Rng& rng, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<ExactScalar> c;
  const std::size_t d = deg(rng);
  for (std::size_t i = 0; i <= d; ++i) c.push_back(random_rational(rng, 9, 4));
  return Poly(std::move(c));
}

std::string describe(const FactoredInput& fi) { return expand(fi).to_string(); }

// Brute search for a quadratic q with q² | f, using only divisibility tests.
bool has_square_quadratic_divisor(const FactoredInput& fi) {
  const Poly f = expand(fi);
  const auto& roots = fi.roots();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const Poly li = Poly::linear_factor(roots[i].root);
    if (divides(pow(li * li, 2), f)) return true;
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (divides(pow(li * Poly::linear_factor(roots[j].root), 2), f)) return true;
  }
  return false;
}

// The counting form of the same condition.
bool square_quadratic_by_counts(const RootGrouping& g) {
  const bool quartic_root = std::any_of(g.gamma.begin(), g.gamma.end(), [](const RootMultiplicity& rm) {
    return rm.multiplicity >= 4;
  });
  return g.n2 >= 2 || quartic_root || (g.n2 >= 1 && g.N3 >= 1) || g.N3 >= 2;
}

CongruenceTarget random_target(Rng& rng, const RootGrouping& g) {
  CongruenceTarget t;
  for (std::size_t i = 0; i < g.n1; ++i) t.a.push_back(random_rational(rng, 9, 4));
  for (std::size_t i = 0; i < g.n2; ++i) t.b.push_back(random_rational(rng, 9, 4));
  for (std::size_t i = 0; i < g.N3; ++i) t.c.push_back(Poly({random_rational(rng, 9, 4), random_rational(rng, 9, 4)}));
  return t;
}

// ---------------------------------------------------------------------------

void scalar_suite(Suite& s) {
  for (std::int64_t d : kRadicands) {
    const FieldDescriptor field = FieldDescriptor::quadratic(d);
    const ExactScalar root = ExactScalar::sqrt_d(field);
    s.check(root * root == ExactScalar(d), "sqrt(d)^2 = d for d = " + std::to_string(d));
  }
  std::uniform_int_distribution<std::size_t> pick(0, std::size(kRadicands) - 1);
  for (std::size_t t = 0; t < s.n(); ++t) {
    const FieldDescriptor field = FieldDescriptor::quadratic(kRadicands[pick(s.rng())]);
    const ExactScalar x = random_quadratic(s.rng(), field);
    const ExactScalar y = random_quadratic(s.rng(), field);
    const ExactScalar z = random_quadratic(s.rng(), field);
    if (!x.is_zero()) s.check(x * x.inverse() == ExactScalar(1), "x * (1/x) = 1 for x = " + x.to_string());
    s.check(x * (y + z) == x * y + x * z, "distributivity");
    s.check((x * x.conjugate()).is_rational() && (x * x.conjugate()) == ExactScalar(x.norm()), "x * conj(x) = norm");
    if (!y.is_zero()) s.check((x / y) * y == x, "division inverts multiplication");

    const int bits = s.opts().precision_bits;
    const ApproxScalar lhs = embed_to_approx(x * y, bits);
    const ApproxScalar rhs = embed_to_approx(x, bits) * embed_to_approx(y, bits);
    const BigFloat err = (lhs - rhs).magnitude();
    BigFloat bound(bits);
    mpfr_set_ui_2exp(bound.get(), 1, -(bits - 8), MPFR_RNDN);
    s.check(err <= bound * (BigFloat(1.0, bits) + rhs.magnitude()), "embed_to_approx multiplicative");
  }
  s.expect_error(ErrorKind::FieldMismatch, "mixing Q(sqrt(2)) and Q(sqrt(3))", [] {
    (void)(ExactScalar::sqrt_d(FieldDescriptor::quadratic(2)) + ExactScalar::sqrt_d(FieldDescriptor::quadratic(3)));
  });
  s.expect_error(ErrorKind::DivisionByZero, "inverse of zero", [] { (void)ExactScalar(0).inverse(); });
}

void poly_suite(Suite& s) {
  for (std::size_t t = 0; t < s.n(); ++t) {
    const Poly p = random_poly(s.rng(), 7);
    const Poly q = random_poly(s.rng(), 5);
    s.check(derivative(p * q) == derivative(p) * q + p * derivative(q), "product rule");
    if (!q.is_zero()) {
      const DivMod dm = divmod(p, q);
      s.check(dm.quotient * q + dm.remainder == p && dm.remainder.degree() < q.degree(), "divmod reconstruction");
    }
    const ExactScalar a = random_rational(s.rng(), 5, 3, true);
    const ExactScalar b = random_rational(s.rng(), 5, 3);
    const ExactScalar x0 = random_rational(s.rng(), 5, 3);
    s.check(eval(compose_affine(p, a, b), x0) == eval(p, a * x0 + b), "compose_affine evaluates p(a x + b)");
  }
  for (std::size_t t = 0; t < s.n(); ++t) {
    const FactoredInput fi = random_factored_input(s.rng());
    const Poly f = expand(fi);
    for (const auto& rm : fi.roots())
      for (unsigned k = 0; k < rm.multiplicity; ++k)
        s.check(eval(derivative(f, k), rm.root).is_zero(), "derivative " + std::to_string(k) + " vanishes at a root of " + f.to_string());
    const std::vector<Poly> parts = squarefree_parts(f);
    Poly rebuilt = Poly::constant(fi.leading_coefficient());
    for (std::size_t m = 0; m < parts.size(); ++m) rebuilt *= pow(parts[m], static_cast<unsigned>(m + 1));
    s.check(rebuilt == f, "square-free parts rebuild " + f.to_string());
  }
}

void oracle_suite(Suite& s) {
  const auto corpus = random_corpus(s.opts().seed, s.n());
  for (const auto& fi : corpus) {
    s.guarded("oracle on " + describe(fi), [&] {
      const Poly f = expand(fi);
      const WfKernel ker = wf_kernel(f);
      for (const auto& b : ker.basis) s.check(in_wf(f, b), "basis element in W(f) for " + f.to_string());
      s.check(ker.dimension == ker.basis.size(), "dimension counts the basis");

      const ExactScalar a = random_rational(s.rng(), 5, 3, true);
      const ExactScalar b = random_rational(s.rng(), 5, 3);
      const FactoredInput moved = fi.affine_image(a, b);
      const Poly g = expand(moved);
      const WfKernel moved_ker = wf_kernel(g);
      s.check(moved_ker.dimension == ker.dimension, "affine invariance of dim for " + f.to_string());
      for (const auto& p : ker.basis)
        s.check(in_wf(g, transport_poly(p, a, b)), "transported basis stays in W for " + f.to_string());

      const RootGrouping grp = group_roots(fi);
      if (!square_quadratic_by_counts(grp)) s.check(ker.dimension == 0, "no square quadratic divisor gives W = 0");
      else s.check(ker.dimension >= 1, "square quadratic divisor gives W != 0");
    });
  }
}

void zspace_suite(Suite& s) {
  std::uniform_int_distribution<std::size_t> s_dist(1, 5), k_dist(0, 10);
  std::size_t critical_seen = 0, critical_degenerate = 0;
  for (std::size_t t = 0; t < s.n(); ++t) {
    const std::size_t ns = s_dist(s.rng()), k = k_dist(s.rng());
    const ZProblem z = random_z_problem(s.rng(), ns, k);
    const ZReport rep = z_report(z);
    s.check(rep.dimension == k + 1 - rep.rank, "dim = k + 1 - rank");
    for (const auto& p : rep.basis) s.check(in_z(z, p) && p.degree() <= static_cast<long>(k), "basis element in Z");
    if (k + 1 >= ns) s.check(rep.dimension + ns >= k + 1, "k + 1 - s <= dim");
    // At k = 0 with η = 0 the constants survive, so the upper bound starts at k = 1.
    if (k + 1 >= ns && k >= 1) s.check(rep.dimension <= k, "dim <= k");

    // Monotonicity in k and the embedding chain.
    const ZProblem wider(z.eta(), z.omega(), k + 2);
    const ZReport wrep = z_report(wider);
    s.check(wrep.dimension <= rep.dimension + 2, "dim grows by at most k'' - k");
    for (const auto& p : rep.basis) s.check(in_z(wider, p), "Z(s, k) embeds in Z(s, k + 2)");
    if (ns >= 2) {
      const ZProblem fewer(std::vector<ExactScalar>(z.eta().begin(), z.eta().end() - 1),
                           std::vector<ExactScalar>(z.omega().begin(), z.omega().end() - 1), k);
      for (const auto& p : rep.basis) s.check(in_z(fewer, p), "Z(s, k) embeds in Z(s - 1, k)");
    }

    const ExactScalar a = random_rational(s.rng(), 5, 3, true);
    const ExactScalar b = random_rational(s.rng(), 5, 3);
    const ZProblem moved = affine_transport(z, a, b);
    s.check(z_report(moved).dimension == rep.dimension, "affine transport keeps dim");
    for (const auto& p : rep.basis) s.check(in_z(moved, transport_poly(p, a, b)), "affine transport maps the basis");

    if (ns >= 2 && k >= ns && k <= 2 * ns - 1) {
      std::uniform_int_distribution<std::size_t> idx(0, ns - 1);
      const ZReport red = z_report(reduce(z, idx(s.rng())));
      s.check(rep.dimension == 1 + red.dimension, "dim Z(s+1, k) = 1 + dim Z(s, k-2) on random data");
    }
  }

  // Necessary condition for degeneracy when k >= 2s - 2.
  std::uniform_int_distribution<std::size_t> s2(2, 5), extra(0, 3);
  for (std::size_t t = 0; t < s.n(); ++t) {
    const std::size_t ns = s2(s.rng());
    const std::size_t k = 2 * ns - 2 + extra(s.rng());
    const ZProblem z = random_z_problem(s.rng(), ns, k);
    if (z.eta() == critical_eta(z.omega())) continue;
    s.check(!z_report(z).degenerate, "non-critical eta with k >= 2s - 2 is non-degenerate");
  }
  for (std::size_t t = 0; t < s.n() / 4 + 1; ++t) {
    const std::size_t ns = s2(s.rng());
    const std::size_t k = 2 * ns - 2 + extra(s.rng());
    std::vector<ExactScalar> omega = distinct_rationals(s.rng(), ns, 12, 5);
    const ZProblem z(critical_eta(omega), omega, k);
    ++critical_seen;
    if (z_report(z).degenerate) ++critical_degenerate;
  }
  s.note("critical eta: " + std::to_string(critical_degenerate) + " of " + std::to_string(critical_seen) +
         " sampled instances degenerate");

  // Fixed points.
  const ZReport ex = z_report(ZProblem({1, -1}, {1, -1}, 2));
  s.check(ex.rank == 1 && ex.dimension == 2 && ex.degenerate, "eta = omega = (1, -1), k = 2 is degenerate");
  s.check(critical_eta({1, -1}) == std::vector<ExactScalar>{1, -1}, "critical_eta(1, -1)");
  s.check(critical_eta({0, 1, -1}) == std::vector<ExactScalar>{0, 3, -3}, "critical_eta(0, 1, -1)");
  s.check(z_report(ZProblem({0, 0, 0}, {0, 1, 2}, 5)).dimension == 3, "eta = 0 gives k + 1 - s");
  s.expect_error(ErrorKind::CoincidentPoints, "repeated omega", [] { ZProblem({0, 0}, {1, 1}, 2); });
  s.expect_error(ErrorKind::ZeroScale, "zero scale transport", [] {
    (void)affine_transport(ZProblem({0}, {0}, 1), 0, 1);
  });

  // The approximate backend agrees with the exact one on rational data.
  for (std::size_t t = 0; t < s.n() / 4 + 1; ++t) {
    const ZProblem z = random_z_problem(s.rng(), s_dist(s.rng()), k_dist(s.rng()));
    ApproxZProblem az;
    az.k = z.k();
    for (const auto& e : z.eta()) az.eta.push_back(embed_to_approx(e, s.opts().precision_bits));
    for (const auto& w : z.omega()) az.omega.push_back(embed_to_approx(w, s.opts().precision_bits));
    s.check(approx_z_report(az).dimension == z_report(z).dimension, "approximate rank matches exact rank");
  }
}

void bridge_suite(Suite& s) {
  const auto corpus = random_corpus(s.opts().seed + 1, s.n());
  for (const auto& fi : corpus) {
    s.guarded("bridge on " + describe(fi), [&] {
      const RootGrouping g = group_roots(fi);
      const Poly f = expand(fi);
      const WfKernel ker = wf_kernel(f);
      for (const auto& p : ker.basis) {
        s.check(multiplicity_reduction_check(fi, p), "multiplicity reduction on a W element");
        const Poly q = phi(fi, p);
        s.check(psi(fi, q) == p, "psi inverts phi");
      }
      // Random p: the reduction equivalences hold for arbitrary p as well.
      s.check(multiplicity_reduction_check(fi, random_poly(s.rng(), g.n - 2)), "multiplicity reduction on random p");

      if (g.n1 == 0) {
        const long r = g.r;
        s.check(static_cast<long>(ker.dimension) == r + 1, "n1 = 0 gives dim r + 1");
        for (const auto& p : ker.basis) s.check(divides(multiple_root_factor(g), p), "n1 = 0 basis carries f_beta f_gamma^2");
      } else if (g.r >= 0) {
        const ZReport zr = z_report(to_z_problem(fi));
        s.check(zr.dimension == ker.dimension, "bridge dim = oracle dim for " + f.to_string());
      }
      // d = f''/f' - m'/m at simple roots, m = f_beta f_gamma^2.
      const Poly m = multiple_root_factor(g);
      for (const auto& a : g.alpha) {
        const ExactScalar expected =
            eval(derivative(f, 2), a) / eval(derivative(f), a) - eval(derivative(m), a) / eval(m, a);
        if (g.n1 >= 2) s.check(d_at(fi, a) == expected, "d at a simple root of " + f.to_string());
      }

      const bool search = has_square_quadratic_divisor(fi);
      s.check(search == square_quadratic_by_counts(g), "square quadratic divisor: search vs counts");
      s.check((ker.dimension > 0) == search, "dim > 0 iff some q^2 | f, for " + f.to_string());
    });
  }
  s.expect_error(ErrorKind::NoSimpleRoots, "Z problem without simple roots",
                 [] { (void)to_z_problem(FactoredInput({{0, 5}})); });
}

void constructions_suite(Suite& s) {
  Rng& rng = s.rng();
  std::size_t done = 0;
  for (std::size_t attempts = 0; done < s.n() && attempts < 50 * s.n(); ++attempts) {
    const FactoredInput fi = random_factored_input(rng, 10);
    const RootGrouping g = group_roots(fi);
    if (g.r < 2 * static_cast<long>(g.n1) - 1) continue;
    ++done;
    s.guarded("crt on " + describe(fi), [&] {
      const CongruenceTarget t = random_target(rng, g);
      const Poly p = crt_construct(fi, t);
      s.check(check_congruences(fi, t, p), "crt output meets every congruence");
      s.check(p.degree() <= static_cast<long>(2 * g.n1 + g.n2 + 2 * g.N3) - 1, "crt degree bound");
      s.check(wf_kernel(expand(fi)).dimension == static_cast<std::size_t>(std::max(g.mu, 0L)),
              "r >= 2 n1 - 1 gives dim mu");
    });
  }
  s.note("crt instances: " + std::to_string(done));

  std::uniform_int_distribution<std::size_t> s_dist(1, 6), extra(0, 4);
  for (std::size_t t = 0; t < s.n(); ++t) {
    const std::size_t ns = s_dist(rng);
    const ZProblem hermite = random_z_problem(rng, ns, 2 * ns - 1);
    s.check(z_report(hermite).dimension == ns, "k = 2s - 1 gives dim s");
    const std::size_t k = 2 * ns - 1 + extra(rng);
    const ZProblem wide(hermite.eta(), hermite.omega(), k);
    s.check(z_report(wide).dimension == k + 1 - ns, "k >= 2s - 1 gives dim k + 1 - s");
    s.check(ev_kernel_dim(wide) == k - 2 * ns + 1, "evaluation kernel dim k - 2s + 1");

    HermiteData h{hermite.eta(), hermite.omega(), {}};
    for (std::size_t i = 0; i < ns; ++i) h.y.push_back(random_rational(rng, 9, 4));
    const Poly p = hermite_basis(h);
    bool ok = p.degree() <= static_cast<long>(2 * ns - 1);
    for (std::size_t i = 0; i < ns; ++i) {
      ok = ok && eval(p, h.omega[i]) == h.y[i];
      ok = ok && eval(derivative(p), h.omega[i]) == h.eta[i] * h.y[i];
    }
    s.check(ok, "hermite interpolant meets its conditions");
  }

  for (std::size_t t = 0; t < s.n() / 4 + 1; ++t) {
    const FactoredInput fi = random_factored_input(rng, 10);
    s.guarded("partial fractions on " + describe(fi), [&] { (void)partial_fractions_q(fi); s.check(true, ""); });
  }
  s.expect_error(ErrorKind::HypothesisViolated, "crt below its range", [] {
    const FactoredInput fi({{0, 4}, {1, 1}, {2, 1}, {3, 1}});
    (void)crt_construct(fi, CongruenceTarget{{0, 0, 0}, {}, {Poly()}});
  });
}

void classifier_suite(Suite& s) {
  for (const auto& col : table_columns(s.opts().seed)) {
    s.guarded("table column", [&] {
      const WfReport rep = classify(col.witness);
      const RootGrouping& g = rep.grouping;
      s.check(g.n == col.degree && g.n2 == col.n2 && g.N3 == col.N3 && g.r == col.r && g.n1 == col.n1 && g.mu == col.mu,
              "table counts for " + rep.f.to_string());
      s.check(rep.dim_oracle == col.dim && rep.routes_agree, "table dim for " + rep.f.to_string());
    });
  }

  const auto corpus = random_corpus(s.opts().seed + 2, s.n());
  std::size_t by_case[5] = {0, 0, 0, 0, 0};
  for (const auto& fi : corpus) {
    s.guarded("classify " + describe(fi), [&] {
      const WfReport rep = classify(fi);
      const RootGrouping& g = rep.grouping;
      const long n1 = static_cast<long>(g.n1);
      ++by_case[static_cast<int>(rep.case_tag)];
      s.check(rep.routes_agree, "routes agree on " + rep.f.to_string());
      if (rep.dim_theorem) s.check(*rep.dim_theorem == rep.dim_oracle, "closed form on " + rep.f.to_string());
      const long dim = static_cast<long>(rep.dim_oracle);
      if (g.r >= n1 - 1) {
        s.check(dim >= g.mu, "mu <= dim");
        if (g.n1 >= 1) s.check(dim <= g.r, "dim <= r");
      }
      if (g.n1 >= 1 && g.r == 2 * n1 - 2) s.check(!rep.degenerate, "r = 2 n1 - 2 is non-degenerate");
      if (g.n1 == 4 && g.r >= 6) s.check(dim == g.r - 3, "n1 = 4, r >= 6 gives r - 3");
      if (g.n1 == 4 && g.r == 5) s.check(dim == 2 && !rep.degenerate, "n1 = 4, r = 5 gives 2");
      if (g.n1 == 4 && g.r == 4) s.check(dim == 1 || dim == 2, "n1 = 4, r = 4 gives 1 or 2");

      const WfReport coeff = classify_coefficients(rep.f);
      s.check(coeff.dim_oracle == rep.dim_oracle && coeff.case_tag == rep.case_tag &&
                  coeff.dim_theorem == rep.dim_theorem,
              "coefficient input matches root input");
    });
  }
  s.note("cases: N1Zero " + std::to_string(by_case[0]) + ", SmallN1 " + std::to_string(by_case[1]) + ", WideR " +
         std::to_string(by_case[2]) + ", Exceptional44 " + std::to_string(by_case[3]) + ", BruteForce " +
         std::to_string(by_case[4]));

  // n1 = 4 with r = 5, built directly since random draws rarely land there.
  for (std::size_t t = 0; t < s.n() / 20 + 2; ++t) {
    const auto roots = distinct_rationals(s.rng(), 6, 9, 3);
    const FactoredInput fi({{roots[0], 4}, {roots[1], 3}, {roots[2], 1}, {roots[3], 1}, {roots[4], 1}, {roots[5], 1}});
    const WfReport rep = classify(fi);
    s.check(rep.grouping.r == 5 && rep.dim_oracle == 2 && !rep.degenerate && rep.routes_agree, "n1 = 4, r = 5 family");
  }
  s.check(classify(quadruple_root_family()).dim_oracle == 1, "x^4 (x-1)(x-2)(x-3)(x-4) gives 1");

  for (std::size_t t = 0; t < s.n() / 4 + 1; ++t) {
    s.check(verify_det_identities(distinct_rationals(s.rng(), 3, 9, 4)).holds(), "3x3 determinant identity");
    s.check(verify_det_identities(distinct_rationals(s.rng(), 4, 9, 4)).holds(), "6x6 determinant identity");
    const HCheck h = h_ratio_check(distinct_rationals(s.rng(), 3, 9, 4));
    s.check(h.ratio == ExactScalar(-1), "h / discriminant product = -1");
  }

  // Pair form: numerator identity and the 2x2 truncation determinant.
  for (std::size_t t = 0; t < s.n() / 4 + 1; ++t) {
    const auto roots = distinct_rationals(s.rng(), 4, 9, 3);
    std::uniform_int_distribution<unsigned> m(2, 5);
    const bool two = s.rng()() % 2 == 0;
    std::vector<RootMultiplicity> rm{{roots[0], m(s.rng())}};
    if (two) rm.push_back({roots[1], m(s.rng())});
    rm.push_back({roots[2], 1});
    rm.push_back({roots[3], 1});
    const FactoredInput fi(rm);
    s.guarded("pair form on " + describe(fi), [&] {
      const DTildeCoefficients k = dtilde_coefficients(fi);
      const PairNumeratorForm form = pair_numerator_form(k);
      const ExactScalar t1 = roots[2], t2 = roots[3];
      const ExactScalar q1 = t1 * t1 + k.c * t1 + k.d, q2 = t2 * t2 + k.c * t2 + k.d;
      if (q1.is_zero() || q2.is_zero()) return;
      s.check(d_pair_form(fi, t1, t2) * q1 * q2 == eval_pair_numerator(form, t1, t2), "pair numerator form");
      s.check(pair_truncation_check(fi, t1, t2).holds(), "2x2 truncation determinant");
    });
  }

  for (const auto& fam : exceptional_cubics(std::max(256, s.opts().precision_bits))) {
    if (!fam.exact) {
      const ApproxZReport lo = approx_z_report(to_approx_z_problem(fam.mixed, 256));
      const ApproxZReport hi = approx_z_report(to_approx_z_problem(fam.mixed, 512));
      s.check(lo.dimension == hi.dimension, fam.label + ": rank stable from 256 to 512 bits");
      s.note(fam.label + ": approximate dim " + std::to_string(lo.dimension));
      continue;
    }
    const WfReport rep = classify(*fam.exact);
    s.check(rep.routes_agree, fam.label + ": routes agree");
    s.note(fam.label + ": dim " + std::to_string(rep.dim_oracle) + ", ode " + (fam.ode_holds ? "holds" : "fails"));
  }
  s.check(ode_consistent_second_family().ode_holds, "x^3 - 3x/11 solves its ODE");
}

using SuiteFn = void (*)(Suite&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"scalar", scalar_suite},       {"poly", poly_suite},
      {"oracle", oracle_suite},       {"zspace", zspace_suite},
      {"bridge", bridge_suite},       {"constructions", constructions_suite},
      {"classifier", classifier_suite},
  };
  return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

std::vector<SuiteResult> run_verify(const VerifyOptions& options) {
  if (options.suite) {
    const auto names = suite_names();
    require(std::find(names.begin(), names.end(), *options.suite) != names.end(), ErrorKind::InvalidArgument,
            "unknown suite \"" + *options.suite + "\"");
  }
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : registry()) {
    if (options.suite && *options.suite != name) continue;
    Suite suite(name, options);
    try {
      fn(suite);
    } catch (const Error& e) {
      suite.check(false, std::string("suite aborted: ") + e.what());
    }
    out.push_back(suite.take());
  }
  return out;
}

}  // namespace wfdim
