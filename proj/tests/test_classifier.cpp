#include "helpers.hpp"
#include "wfdim/classifier.hpp"
#include "wfdim/corpus.hpp"
#include "wfdim/linalg.hpp"
#include "wfdim/oracle.hpp"

using namespace wfdim;
using namespace testing;

namespace {

ExactScalar pair_det_by_leibniz(const std::vector<ExactScalar>& alphas) {
  std::vector<std::vector<ExactScalar>> rows;
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = i + 1; j < alphas.size(); ++j) {
      const ExactScalar u = alphas[i], v = alphas[j];
      if (alphas.size() == 3) rows.push_back({1, u + v, u * v});
      else rows.push_back({1, u + v, u * v, u * u + v * v, u * u * v + u * v * v, u * u * v * v});
    }
  return oracle::leibniz_det(rows);
}

}  // namespace

TEST_SUITE("classifier") {
  TEST_CASE("summary table") {
    for (std::uint64_t seed : {0ULL, 5ULL, 99ULL}) {
      const auto cols = table_columns(seed);
      REQUIRE(cols.size() == 13);
      for (const auto& c : cols) {
        const WfReport rep = classify(c.witness);
        CHECK(rep.routes_agree);
        CHECK(rep.dim_oracle == c.dim);
        CHECK(static_cast<long>(c.dim) == c.mu);
        CHECK(rep.grouping.n2 == c.n2);
        CHECK(rep.grouping.N3 == c.N3);
        CHECK(rep.grouping.n1 == c.n1);
        CHECK(rep.grouping.r == c.r);
      }
    }
    const auto cols = table_columns(0);
    const auto col = std::find_if(cols.begin(), cols.end(), [](const TableColumn& c) { return c.n2 == 3; });
    REQUIRE(col != cols.end());
    CHECK(col->dim == 2);
  }

  TEST_CASE("case dispatch") {
    CHECK(classify(FactoredInput({{0, 5}})).case_tag == CaseTag::N1Zero);
    CHECK(classify(FactoredInput({{0, 4}, {1, 1}})).case_tag == CaseTag::SmallN1);
    // n1 = 4, r = 6: x⁵(x−1)³ plus four simple roots
    const WfReport wide = classify(FactoredInput({{0, 5}, {1, 3}, {2, 1}, {3, 1}, {4, 1}, {5, 1}}));
    CHECK(wide.case_tag == CaseTag::WideR);
    CHECK(wide.dim_theorem == std::optional<std::size_t>(3));
    CHECK(wide.dim_oracle == 3);
  }

  TEST_CASE("quadruple root with four simple roots") {
    const WfReport rep = classify(quadruple_root_family());
    CHECK(rep.grouping.n1 == 4);
    CHECK(rep.grouping.r == 4);
    CHECK(rep.dim_oracle == 1);
    CHECK(rep.case_tag == CaseTag::Exceptional44);
    REQUIRE(rep.normalization.has_value());
    CHECK(rep.normalization->shape == MultipleRootShape::XFourth);
    CHECK(rep.dim_theorem == std::optional<std::size_t>(1));
    CHECK(rep.routes_agree);
  }

  TEST_CASE("shape normalization") {
    const auto n = normalize_shape(FactoredInput({{3, 2}, {5, 3}, {7, 1}, {8, 1}, {9, 1}}));
    REQUIRE(n.has_value());
    CHECK(n->shape == MultipleRootShape::XSquaredXMinusOneCubed);
    CHECK(n->a * ExactScalar(3) + n->b == ExactScalar(0));
    CHECK(n->a * ExactScalar(5) + n->b == ExactScalar(1));
    const auto m = normalize_shape(FactoredInput({{1, 2}, {3, 2}, {0, 1}, {4, 1}, {5, 1}, {6, 1}}));
    REQUIRE(m.has_value());
    CHECK(m->shape == MultipleRootShape::SquareMinusOneSquared);
    CHECK(m->a * ExactScalar(1) + m->b == ExactScalar(1));
    CHECK(m->a * ExactScalar(3) + m->b == ExactScalar(-1));
    CHECK_FALSE(normalize_shape(FactoredInput({{0, 5}})).has_value());
  }

  TEST_CASE("d~ coefficients of the four shapes") {
    const auto sq2 = dtilde_coefficients(FactoredInput({{1, 2}, {-1, 2}, {2, 1}}));
    CHECK((sq2.a == ExactScalar(6) && sq2.b == ExactScalar(0) && sq2.c == ExactScalar(0) && sq2.d == ExactScalar(-1)));
    const auto x2x13 = dtilde_coefficients(FactoredInput({{0, 2}, {1, 3}, {2, 1}}));
    CHECK((x2x13.a == ExactScalar(7) && x2x13.b == ExactScalar(-3)));
    CHECK(dtilde_coefficients(FactoredInput({{1, 3}, {-1, 3}, {2, 1}})).a == ExactScalar(8));
    CHECK(leading_coeff_dtilde(FactoredInput({{0, 2}, {1, 3}, {2, 1}})) == ExactScalar(7));
    const auto x4 = dtilde_coefficients(FactoredInput({{0, 4}, {1, 1}}));
    CHECK((x4.a == ExactScalar(6) && x4.b == ExactScalar(0) && x4.c == ExactScalar(0) && x4.d == ExactScalar(0)));
  }

  TEST_CASE("pair form") {
    // d~ = 6x/(x²−1): D(0, 2) = (0 − 4)/(0 − 2) − 0 = 2
    const FactoredInput fi({{1, 2}, {-1, 2}, {0, 1}, {2, 1}});
    CHECK(d_pair_form(fi, 0, 2) == ExactScalar(2));
    CHECK(d_pair_form(fi, 0, 2) == d_pair_form(fi, 2, 0));

    // Numerator form including the −b² term, which matters only when b ≠ 0.
    Rng rng(40);
    for (const auto& base : {FactoredInput({{0, 2}, {1, 3}, {5, 1}}), FactoredInput({{1, 2}, {-1, 2}, {5, 1}}),
                             FactoredInput({{1, 3}, {-1, 3}, {5, 1}}), FactoredInput({{0, 4}, {5, 1}}),
                             FactoredInput({{q(2, 3), 2}, {-4, 5}, {5, 1}})}) {
      const DTildeCoefficients k = dtilde_coefficients(base);
      const PairNumeratorForm form = pair_numerator_form(k);
      CHECK(form.x00 == k.a * k.d - k.b * k.c - k.b * k.b);
      for (int i = 0; i < 20; ++i) {
        const auto t = distinct_rationals(rng, 2, 20, 7);
        const ExactScalar q1 = t[0] * t[0] + k.c * t[0] + k.d, q2 = t[1] * t[1] + k.c * t[1] + k.d;
        if (q1.is_zero() || q2.is_zero()) continue;
        bool on_root = false;
        for (const auto& rm : base.roots()) on_root = on_root || rm.root == t[0] || rm.root == t[1];
        if (on_root) continue;
        CHECK(d_pair_form(base, t[0], t[1]) * q1 * q2 == eval_pair_numerator(form, t[0], t[1]));
        CHECK(d_pair_form(base, t[0], t[1]) == d_pair_form(base, t[1], t[0]));
        CHECK(pair_truncation_check(base, t[0], t[1]).holds());
      }
    }
    // x²(x−1)³ has b = −3: dropping −b² would be off by 9.
    const DTildeCoefficients k = dtilde_coefficients(FactoredInput({{0, 2}, {1, 3}, {5, 1}}));
    CHECK(pair_numerator_form(k).x00 != k.a * k.d - k.b * k.c);
  }

  TEST_CASE("determinant identities") {
    const SymmetricCheck three = verify_det_identities({0, 1, 2});
    CHECK(three.lhs == ExactScalar(2));
    CHECK(three.holds());
    const SymmetricCheck four = verify_det_identities({0, 1, -1, 2});
    CHECK(four.holds());
    CHECK(four.lhs == pair_det_by_leibniz({0, 1, -1, 2}));

    Rng rng(50);
    for (int i = 0; i < 50; ++i) {
      const auto a3 = distinct_rationals(rng, 3, 12, 5);
      const auto a4 = distinct_rationals(rng, 4, 12, 5);
      const SymmetricCheck c3 = verify_det_identities(a3), c4 = verify_det_identities(a4);
      CHECK(c3.holds());
      CHECK(c4.holds());
      CHECK(c3.lhs == pair_det_by_leibniz(a3));
      CHECK(c4.lhs == pair_det_by_leibniz(a4));
    }
    CHECK(error_kind([] { (void)verify_det_identities({0, 1, 1}); }) == ErrorKind::CoincidentPoints);
  }

  TEST_CASE("h against the discriminant product") {
    const HCheck a = h_ratio_check({0, 1, -1});
    CHECK(a.values.lhs == ExactScalar(-4));
    CHECK(a.values.rhs == ExactScalar(4));
    CHECK(a.ratio == ExactScalar(-1));
    const HCheck b = h_ratio_check({0, 1, 2});
    CHECK(b.values.lhs == ExactScalar(-4));
    CHECK(b.ratio == ExactScalar(-1));
    Rng rng(51);
    for (int i = 0; i < 50; ++i) CHECK(h_ratio_check(distinct_rationals(rng, 3, 12, 5)).ratio == ExactScalar(-1));
    // h is the negated discriminant of the monic cubic with those roots.
    CHECK(cubic_discriminant(product_of_linear_factors({0, 1, 2})) == ExactScalar(4));
  }

  TEST_CASE("exceptional cubics") {
    const auto fams = exceptional_cubics();
    REQUIRE(fams.size() == 3);

    // (x²−1)²(x³ − x/3): d vanishes at every simple root, λ = 24.
    CHECK(fams[0].ode_holds);
    CHECK(fams[0].lambda == ExactScalar(24));
    REQUIRE(fams[0].exact.has_value());
    const WfReport r0 = classify(*fams[0].exact);
    CHECK(r0.dim_oracle == 1);
    CHECK(strings(r0.basis) == std::vector<std::string>{"x^2 - 1"});

    // (x²−1)³(x³ + 3x/11) as stated does not solve its ODE; W is spanned by
    // (x²−1)²(121x² + 19).
    CHECK_FALSE(fams[1].ode_holds);
    REQUIRE(fams[1].exact.has_value());
    CHECK(fams[1].exact->field() == FieldDescriptor::quadratic(-33));
    const WfReport r1 = classify(*fams[1].exact);
    REQUIRE(r1.dim_oracle == 1);
    CHECK(r1.basis[0] == make_monic(pow(Poly({q(-1), q(0), q(1)}), 2) * Poly({q(19), q(0), q(121)})));
    CHECK(r1.routes_agree);

    // The cubic that does solve it: x³ − 3x/11, λ = 30, constant p_α.
    const ExceptionalCubic alt = ode_consistent_second_family();
    CHECK(alt.ode_holds);
    CHECK(alt.lambda == ExactScalar(30));
    const WfReport ra = classify(*alt.exact);
    REQUIRE(ra.dim_oracle == 1);
    CHECK(ra.basis[0] == pow(Poly({q(-1), q(0), q(1)}), 2));

    // x²(x−1)³(x³ − 15x²/11 + 6x/11 − 2/33): λ = 27, disc 24/14641.
    CHECK(fams[2].ode_holds);
    CHECK(fams[2].lambda == ExactScalar(27));
    CHECK(fams[2].discriminant == q(24, 14641));
    CHECK_FALSE(fams[2].exact.has_value());
    // −5736/14641 belongs to the cubic with +2/33, which fails the ODE.
    const Poly flipped({q(2, 33), q(6, 11), q(-15, 11), q(1)});
    CHECK(cubic_discriminant(flipped) == q(-5736, 14641));
    const ApproxZReport lo = approx_z_report(to_approx_z_problem(fams[2].mixed, 256));
    const ApproxZReport hi = approx_z_report(to_approx_z_problem(exceptional_cubics(512)[2].mixed, 512));
    CHECK(lo.dimension == hi.dimension);
    CHECK(lo.dimension == 1);
  }

  TEST_CASE("families extended by one more simple root stay at dim 1") {
    // With n1 = r = 4 and two multiple roots, the evaluation at the added root
    // kills (x − α₄)²-type elements, so dim Z(4, 4) is 1 for admissible α₄.
    for (long a4 : {2L, 3L, 5L}) {
      for (const auto& fam : {exceptional_cubics()[0], exceptional_cubics()[1]}) {
        const WfReport rep = classify(fam.exact->with_simple_root(a4));
        CHECK(rep.grouping.n1 == 4);
        CHECK(rep.grouping.r == 4);
        CHECK(rep.dim_oracle == 1);
        CHECK(rep.case_tag == CaseTag::Exceptional44);
        CHECK_FALSE(rep.dim_theorem.has_value());
        CHECK(rep.routes_agree);
      }
    }
  }

  TEST_CASE("three routes on a random corpus") {
    for (const auto& fi : random_corpus(77, 150)) {
      const WfReport rep = classify(fi);
      CHECK(rep.routes_agree);
      CHECK(rep.dim_oracle == oracle::w_dimension(oracle_roots(fi)));
      if (rep.dim_structural) CHECK(*rep.dim_structural == rep.dim_oracle);
      if (rep.dim_theorem) CHECK(*rep.dim_theorem == rep.dim_oracle);
      const RootGrouping& g = rep.grouping;
      if (g.r >= static_cast<long>(g.n1) - 1) CHECK(static_cast<long>(rep.dim_oracle) >= g.mu);
      if (g.n1 >= 1 && g.r >= static_cast<long>(g.n1) - 1) CHECK(static_cast<long>(rep.dim_oracle) <= g.r);
    }
  }

  TEST_CASE("n1 = 0 allows dim r + 1 above r") {
    const WfReport rep = classify(FactoredInput({{0, 5}}));
    CHECK(rep.grouping.r == 1);
    CHECK(rep.dim_oracle == 2);
  }

  TEST_CASE("coefficient input") {
    const WfReport rep = classify_coefficients(expand(quadruple_root_family()));
    CHECK(rep.dim_oracle == 1);
    CHECK(rep.case_tag == CaseTag::Exceptional44);
    CHECK(rep.dim_theorem == std::optional<std::size_t>(1));
    CHECK_FALSE(rep.dim_structural.has_value());
    CHECK(error_kind([] { (void)classify_coefficients(Poly::monomial(1, 3)); }) == ErrorKind::DegreeTooSmall);
  }
}
