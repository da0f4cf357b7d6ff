#include "helpers.hpp"
#include "wfdim/bridge.hpp"
#include "wfdim/corpus.hpp"
#include "wfdim/linalg.hpp"
#include "wfdim/oracle.hpp"

using namespace wfdim;
using namespace testing;

TEST_SUITE("bridge") {
  TEST_CASE("root grouping") {
    const RootGrouping a = group_roots(FactoredInput({{0, 4}, {3, 1}}));
    CHECK((a.n1 == 1 && a.n2 == 0 && a.N3 == 1 && a.r == 1 && a.mu == 1));
    const RootGrouping b = group_roots(FactoredInput({{0, 5}}));
    CHECK((b.n1 == 0 && b.N3 == 1 && b.r == 1 && b.mu == 2));
    const RootGrouping c = group_roots(FactoredInput({{1, 2}, {-1, 2}}));
    CHECK((c.n2 == 2 && c.r == 0 && c.mu == 1));
  }

  TEST_CASE("d at simple roots") {
    for (long c : {2L, 3L, -5L}) {
      const FactoredInput fi({{1, 2}, {-1, 2}, {c, 1}});
      CHECK(d_at(fi, c) == ExactScalar(6 * c) / ExactScalar(c * c - 1));
      CHECK(d_at(FactoredInput({{0, 4}, {c, 1}}), c) == ExactScalar(6) / ExactScalar(c));
    }
    CHECK(error_kind([] { (void)d_at(FactoredInput({{0, 4}, {1, 1}}), 0); }) == ErrorKind::PoleAtPoint);

    // d = f''/f' − m'/m at simple roots, m = f_β f_γ²
    Rng rng(6);
    for (int i = 0; i < 50; ++i) {
      const FactoredInput fi = random_factored_input(rng, 10);
      const RootGrouping g = group_roots(fi);
      if (g.n1 < 2) continue;
      const auto f = oracle::from_roots(oracle_roots(fi));
      oracle::QPoly m{1};
      for (const auto& b : g.beta) m = oracle::multiply(m, {-b.rational_part(), 1});
      for (const auto& rm : g.gamma)
        m = oracle::multiply(m, oracle::multiply({-rm.root.rational_part(), 1}, {-rm.root.rational_part(), 1}));
      for (const auto& a : g.alpha) {
        const mpq_class x = a.rational_part();
        const mpq_class expected = oracle::evaluate(oracle::diff(oracle::diff(f)), x) / oracle::evaluate(oracle::diff(f), x) -
                                   oracle::evaluate(oracle::diff(m), x) / oracle::evaluate(m, x);
        CHECK(d_at(fi, a) == ExactScalar(expected));
      }
    }
  }

  TEST_CASE("phi and psi") {
    for (long c : {2L, 3L}) {
      const FactoredInput fi({{1, 2}, {-1, 2}, {c, 1}});
      const Poly pa({q(-5 * c * c - 1), q(6 * c)});
      const Poly p = Poly({q(-1), q(0), q(1)}) * pa;
      CHECK(phi(fi, p) == pa);
      CHECK(psi(fi, pa) == p);
    }
    const FactoredInput x5({{0, 5}});
    CHECK(phi(x5, Poly::monomial(1, 3)) == Poly::x());
    CHECK(error_kind([&] { (void)phi(x5, Poly::x()); }) == ErrorKind::NotDivisible);

    const FactoredInput x4c({{0, 4}, {1, 1}});
    CHECK(error_kind([&] { (void)psi(x4c, Poly::constant(1)); }) == ErrorKind::NotInZ);

    Rng rng(9);
    for (int i = 0; i < 60; ++i) {
      const FactoredInput fi = random_factored_input(rng, 10);
      for (const auto& b : wf_kernel(expand(fi)).basis) CHECK(psi(fi, phi(fi, b)) == b);
    }
  }

  TEST_CASE("Z problem of f") {
    const ZProblem z = to_z_problem(FactoredInput({{0, 4}, {1, 1}}));
    CHECK(z.eta() == std::vector<ExactScalar>{6});
    CHECK(z.omega() == std::vector<ExactScalar>{1});
    CHECK(z.k() == 1);
    CHECK(error_kind([] { (void)to_z_problem(FactoredInput({{0, 5}})); }) == ErrorKind::NoSimpleRoots);
    CHECK(to_z_problem(FactoredInput({{0, 3}, {1, 1}, {2, 1}})).k() == 1);

    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
      const FactoredInput fi = random_factored_input(rng, 11);
      const RootGrouping g = group_roots(fi);
      if (g.n1 == 0 || g.r < 0) continue;
      CHECK(z_report(to_z_problem(fi)).dimension == oracle::w_dimension(oracle_roots(fi)));
    }
  }

  TEST_CASE("multiplicity reduction") {
    CHECK(multiplicity_reduction_check(FactoredInput({{0, 5}}), Poly::monomial(1, 2)));
    CHECK(multiplicity_reduction_check(FactoredInput({{1, 2}, {-1, 2}, {3, 1}}), Poly::x()));

    // Both sides of each equivalence computed with the vanishing oracle.
    Rng rng(14);
    for (int i = 0; i < 100; ++i) {
      const FactoredInput fi = random_factored_input(rng, 9);
      oracle::QPoly p;
      for (std::size_t k = 0; k + 1 < fi.degree(); ++k) p.push_back(random_rational(rng, 4, 2).rational_part());
      // Bias towards hitting the multiple roots so both outcomes occur.
      if (i % 2 == 0)
        for (const auto& rm : fi.roots())
          if (rm.multiplicity >= 2) p = oracle::multiply(p, {-rm.root.rational_part(), 1});
      p = oracle::trim(p);
      const auto r = oracle::r_of(oracle::from_roots(oracle_roots(fi)), p);
      bool expected = true;
      for (const auto& rm : fi.roots()) {
        if (rm.multiplicity < 2) continue;
        const unsigned need = rm.multiplicity == 2 ? 1 : 2;
        const bool lhs = oracle::divisible_by_roots({{rm.root.rational_part(), rm.multiplicity}}, r);
        const bool rhs = oracle::divisible_by_roots({{rm.root.rational_part(), need}}, p);
        expected = expected && lhs == rhs;
      }
      CHECK(expected);
      CHECK(multiplicity_reduction_check(fi, from_oracle(p)));
    }
  }

  TEST_CASE("approximate Z problem matches the exact one on rational roots") {
    Rng rng(15);
    for (int i = 0; i < 30; ++i) {
      const FactoredInput fi = random_factored_input(rng, 10);
      const RootGrouping g = group_roots(fi);
      if (g.n1 == 0 || g.r < 0) continue;
      MixedRootInput mixed;
      for (const auto& rm : fi.roots()) {
        if (rm.multiplicity == 1 && mixed.approx_simple_roots.size() < 2)
          mixed.approx_simple_roots.push_back(embed_to_approx(rm.root, 128));
        else
          mixed.exact_roots.push_back(rm);
      }
      CHECK(approx_z_report(to_approx_z_problem(mixed, 128)).dimension == z_report(to_z_problem(fi)).dimension);
    }
  }
}
