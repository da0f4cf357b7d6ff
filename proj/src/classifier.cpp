#include "wfdim/classifier.hpp"

#include <algorithm>

#include "wfdim/linalg.hpp"

namespace wfdim {

std::string to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::N1Zero: return "N1Zero";
    case CaseTag::SmallN1: return "SmallN1";
    case CaseTag::WideR: return "WideR";
    case CaseTag::Exceptional44: return "Exceptional44";
    case CaseTag::BruteForce: return "BruteForce";
  }
  return "BruteForce";
}

std::string to_string(MultipleRootShape shape) {
  switch (shape) {
    case MultipleRootShape::XFourth: return "x^4";
    case MultipleRootShape::SquareMinusOneSquared: return "(x^2-1)^2";
    case MultipleRootShape::XSquaredXMinusOneCubed: return "x^2(x-1)^3";
    case MultipleRootShape::SquareMinusOneCubed: return "(x^2-1)^3";
  }
  return "";
}

namespace {

// x ↦ a x + b with p ↦ 1 and q ↦ −1.
ShapeNormalization to_plus_minus_one(MultipleRootShape shape, const ExactScalar& p, const ExactScalar& q) {
  const ExactScalar span = p - q;
  return {shape, ExactScalar(2) / span, -(p + q) / span};
}

}  // namespace

std::optional<ShapeNormalization> normalize_shape(const FactoredInput& fi) {
  const RootGrouping g = group_roots(fi);
  if (static_cast<long>(g.n1) != g.r) return std::nullopt;
  if (g.n2 == 0 && g.N3 == 1 && g.gamma[0].multiplicity == 4)
    return ShapeNormalization{MultipleRootShape::XFourth, 1, -g.gamma[0].root};
  if (g.n2 == 2 && g.N3 == 0) return to_plus_minus_one(MultipleRootShape::SquareMinusOneSquared, g.beta[0], g.beta[1]);
  if (g.n2 == 0 && g.N3 == 2 && g.gamma[0].multiplicity == 3 && g.gamma[1].multiplicity == 3)
    return to_plus_minus_one(MultipleRootShape::SquareMinusOneCubed, g.gamma[0].root, g.gamma[1].root);
  if (g.n2 == 1 && g.N3 == 1 && g.gamma[0].multiplicity == 3) {
    // β ↦ 0, γ ↦ 1
    const ExactScalar span = g.gamma[0].root - g.beta[0];
    return ShapeNormalization{MultipleRootShape::XSquaredXMinusOneCubed, span.inverse(), -g.beta[0] / span};
  }
  return std::nullopt;
}

namespace {

template <typename Flag>
void apply_closed_form(WfReport& rep, bool x4_shape, Flag&& flag) {
  const RootGrouping& g = rep.grouping;
  const long n1 = static_cast<long>(g.n1);
  if (g.n1 == 0) {
    rep.case_tag = CaseTag::N1Zero;
    rep.dim_theorem = static_cast<std::size_t>(g.r + 1);
  } else if (g.n1 <= 3) {
    rep.case_tag = CaseTag::SmallN1;
    rep.dim_theorem = static_cast<std::size_t>(std::max(g.mu, 0L));
  } else if (g.r >= 2 * n1 - 2) {
    rep.case_tag = CaseTag::WideR;
    rep.dim_theorem = static_cast<std::size_t>(g.mu);
  } else if (g.n1 == 4 && g.r == 4) {
    rep.case_tag = CaseTag::Exceptional44;
    // Only the single quadruple root case has a closed form that survives
    // checking; the two-multiple-root shapes stay with the computed routes.
    if (x4_shape) rep.dim_theorem = 1;
  } else {
    rep.case_tag = CaseTag::BruteForce;
  }
  if (rep.dim_theorem && *rep.dim_theorem != rep.dim_oracle)
    flag("closed form dim " + std::to_string(*rep.dim_theorem) + " vs oracle dim " + std::to_string(rep.dim_oracle));

  const long dim = static_cast<long>(rep.dim_oracle);
  if (g.r >= n1 - 1) {
    if (dim < g.mu) flag("dim below mu");
    if (g.n1 >= 1 && dim > g.r) flag("dim above r");
  }
}

}  // namespace

WfReport classify(const FactoredInput& fi) {
  WfReport rep;
  rep.grouping = group_roots(fi);
  const RootGrouping& g = rep.grouping;
  rep.f = expand(fi);
  auto flag = [&rep](std::string msg) {
    rep.routes_agree = false;
    rep.issues.push_back(std::move(msg));
  };

  const WfKernel ker = wf_kernel(rep.f);
  rep.dim_oracle = ker.dimension;
  rep.basis = ker.basis;
  for (const auto& b : ker.basis)
    if (!in_wf(rep.f, b)) flag("kernel element " + b.to_string() + " fails the divisibility condition");

  const std::size_t r = static_cast<std::size_t>(std::max(g.r, 0L));
  std::vector<Poly> z_basis;
  if (g.n1 == 0) {
    for (std::size_t j = 0; j <= r; ++j) z_basis.push_back(Poly::monomial(1, j));
    rep.dim_structural = r + 1;
  } else {
    const ZReport zr = z_report(to_z_problem(fi));
    rep.dim_structural = zr.dimension;
    rep.degenerate = zr.degenerate;
    z_basis = zr.basis;
  }
  if (*rep.dim_structural != rep.dim_oracle)
    flag("structural dim " + std::to_string(*rep.dim_structural) + " vs oracle dim " + std::to_string(rep.dim_oracle));

  try {
    std::vector<Poly> forward;
    for (const auto& b : ker.basis) forward.push_back(phi(fi, b));
    if (canonical_basis(forward, r) != z_basis) flag("phi does not map the kernel basis onto the Z basis");
    std::vector<Poly> back;
    for (const auto& q : z_basis) back.push_back(psi(fi, q));
    if (canonical_basis(back, g.n - 2) != ker.basis) flag("psi does not map the Z basis onto the kernel basis");
  } catch (const Error& e) {
    flag(std::string("bridge map failed: ") + e.what());
  }

  rep.normalization = normalize_shape(fi);
  const bool x4_shape = rep.normalization && rep.normalization->shape == MultipleRootShape::XFourth;
  apply_closed_form(rep, x4_shape, flag);
  return rep;
}

WfReport classify_coefficients(const Poly& f) {
  require(!f.is_zero() && f.degree() >= 4, ErrorKind::DegreeTooSmall, "W(f) needs deg f >= 4");
  WfReport rep;
  rep.f = f;
  auto flag = [&rep](std::string msg) {
    rep.routes_agree = false;
    rep.issues.push_back(std::move(msg));
  };
  const std::vector<Poly> parts = squarefree_parts(f);
  RootGrouping& g = rep.grouping;
  g.n = f.degree().value();
  for (std::size_t m = 1; m <= parts.size(); ++m) {
    const std::size_t count = parts[m - 1].degree().value();
    if (m == 1) g.n1 = count;
    else if (m == 2) g.n2 = count;
    else g.N3 += count;
  }
  g.r = static_cast<long>(g.n) - 2 - static_cast<long>(g.n2 + 2 * g.N3);
  g.mu = g.r + 1 - static_cast<long>(g.n1);

  const WfKernel ker = wf_kernel(f);
  rep.dim_oracle = ker.dimension;
  rep.basis = ker.basis;
  rep.degenerate = static_cast<long>(rep.dim_oracle) > std::max(g.mu, 0L);
  const bool x4_shape = static_cast<long>(g.n1) == g.r && g.n2 == 0 && g.N3 == 1 && parts.size() == 4;
  apply_closed_form(rep, x4_shape, flag);
  return rep;
}

DTildeRational dtilde_rational(const FactoredInput& fi) {
  const RootGrouping g = group_roots(fi);
  const RootFactors rf = root_factors(g);
  DTildeRational out{Poly(), rf.f_beta * rf.f_gamma};
  for (const auto& b : g.beta)
    out.numerator += Poly::constant(3) * divmod(out.denominator, Poly::linear_factor(b)).quotient;
  for (const auto& rm : g.gamma)
    out.numerator += Poly::constant(2 * (static_cast<long>(rm.multiplicity) - 1)) *
                     divmod(out.denominator, Poly::linear_factor(rm.root)).quotient;
  return out;
}

DTildeCoefficients dtilde_coefficients(const FactoredInput& fi) {
  const RootGrouping g = group_roots(fi);
  const std::size_t m = g.n2 + g.N3;
  require(m == 1 || m == 2, ErrorKind::InvalidArgument, "d~ has a quadratic denominator only for one or two multiple roots");
  DTildeRational q = dtilde_rational(fi);
  if (m == 1) {
    const Poly lin = Poly::linear_factor(g.n2 == 1 ? g.beta[0] : g.gamma[0].root);
    q.numerator *= lin;
    q.denominator *= lin;
  }
  return {q.numerator.coeff(1), q.numerator.coeff(0), q.denominator.coeff(1), q.denominator.coeff(0)};
}

ExactScalar d_pair_form(const FactoredInput& fi, const ExactScalar& t1, const ExactScalar& t2) {
  require(!(t1 == t2), ErrorKind::CoincidentPoints, "pair form needs distinct points");
  const ExactScalar d1 = d_tilde_at(fi, t1);
  const ExactScalar d2 = d_tilde_at(fi, t2);
  return (d1 - d2) / (t1 - t2) - d1 * d2;
}

PairNumeratorForm pair_numerator_form(const DTildeCoefficients& k) {
  const ExactScalar a1 = k.a + ExactScalar(1);
  return {-k.a * a1, -k.b * a1, k.a * k.d - k.b * k.c - k.b * k.b};
}

ExactScalar eval_pair_numerator(const PairNumeratorForm& form, const ExactScalar& t1, const ExactScalar& t2) {
  return form.x11 * t1 * t2 + form.x10 * (t1 + t2) + form.x00;
}

ExactScalar leading_coeff_dtilde(const FactoredInput& fi) {
  const RootGrouping g = group_roots(fi);
  require(g.n2 + g.N3 >= 1, ErrorKind::InvalidArgument, "d~ vanishes without multiple roots");
  long a = 3 * static_cast<long>(g.n2);
  for (const auto& rm : g.gamma) a += 2 * (static_cast<long>(rm.multiplicity) - 1);
  const DTildeRational q = dtilde_rational(fi);
  require(q.numerator.degree() == static_cast<long>(g.n2 + g.N3) - 1 && q.numerator.leading_coefficient() == ExactScalar(a),
          ErrorKind::Internal, "leading coefficient of d~ numerator disagrees with the multiplicity count");
  require(a >= 3 * static_cast<long>(g.n2) + 4 * static_cast<long>(g.N3), ErrorKind::Internal,
          "leading coefficient below 3*n2 + 4*N3");
  return a;
}

namespace {

void require_distinct(const std::vector<ExactScalar>& alphas) {
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      require(!(alphas[i] == alphas[j]), ErrorKind::CoincidentPoints, "repeated point " + alphas[i].to_string());
}

ExactScalar discriminant_product(const std::vector<ExactScalar>& alphas) {
  ExactScalar out = 1;
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = i + 1; j < alphas.size(); ++j) {
      const ExactScalar diff = alphas[i] - alphas[j];
      out *= diff * diff;
    }
  return out;
}

}  // namespace

SymmetricCheck verify_det_identities(const std::vector<ExactScalar>& alphas) {
  require(alphas.size() == 3 || alphas.size() == 4, ErrorKind::InvalidArgument, "determinant identities need 3 or 4 points");
  require_distinct(alphas);
  std::vector<std::vector<ExactScalar>> rows;
  for (std::size_t i = 0; i < alphas.size(); ++i)
    for (std::size_t j = i + 1; j < alphas.size(); ++j) {
      const ExactScalar& u = alphas[i];
      const ExactScalar& v = alphas[j];
      if (alphas.size() == 3) rows.push_back({1, u + v, u * v});
      else rows.push_back({1, u + v, u * v, u * u + v * v, u * u * v + u * v * v, u * u * v * v});
    }
  SymmetricCheck out{alphas, determinant(ExactMatrix(std::move(rows))), 0};
  if (alphas.size() == 3) out.rhs = (alphas[2] - alphas[0]) * (alphas[2] - alphas[1]) * (alphas[1] - alphas[0]);
  else out.rhs = -discriminant_product(alphas);
  return out;
}

SymmetricCheck pair_truncation_check(const FactoredInput& fi, const ExactScalar& t1, const ExactScalar& t2) {
  require(!(t1 == t2), ErrorKind::CoincidentPoints, "pair check needs distinct points");
  const ExactScalar dg1 = d_tilde_at(fi, t1) + ExactScalar(2) / (t1 - t2);
  const ExactScalar dg2 = d_tilde_at(fi, t2) + ExactScalar(2) / (t2 - t1);
  const AssociatedMatrix m = associated_matrix(ZProblem({dg1, dg2}, {t1, t2}, 1));
  return {{t1, t2}, determinant(m.entries), (t1 - t2) * d_pair_form(fi, t1, t2)};
}

HCheck h_ratio_check(const std::vector<ExactScalar>& alphas) {
  require(alphas.size() == 3, ErrorKind::InvalidArgument, "h check needs three points");
  require_distinct(alphas);
  const ExactScalar& u = alphas[0];
  const ExactScalar& v = alphas[1];
  const ExactScalar& w = alphas[2];
  const ExactScalar e1 = u + v + w;
  const ExactScalar e2 = u * v + u * w + v * w;
  const ExactScalar e3 = u * v * w;
  const ExactScalar h = ExactScalar(27) * e3 * e3 - ExactScalar(18) * e1 * e2 * e3 +
                        ExactScalar(4) * (e2 * e2 * e2 + e1 * e1 * e1 * e3) - e1 * e1 * e2 * e2;
  const ExactScalar prod = discriminant_product(alphas);
  require(!h.is_zero(), ErrorKind::Internal, "h vanishes at distinct points");
  return {{alphas, h, prod}, h / prod};
}

ExactScalar cubic_discriminant(const Poly& cubic) {
  require(cubic.degree() == 3, ErrorKind::InvalidArgument, "cubic discriminant needs degree 3");
  const ExactScalar a = cubic.coeff(3), b = cubic.coeff(2), c = cubic.coeff(1), d = cubic.coeff(0);
  return b * b * c * c - ExactScalar(4) * a * c * c * c - ExactScalar(4) * b * b * b * d -
         ExactScalar(27) * a * a * d * d + ExactScalar(18) * a * b * c * d;
}

namespace {

ExceptionalCubic make_family(std::string label, std::vector<RootMultiplicity> multiple, Poly cubic,
                             std::optional<std::vector<ExactScalar>> exact_alphas, int precision_bits) {
  ExceptionalCubic fam;
  fam.label = std::move(label);
  fam.multiple_part = Poly::constant(1);
  for (const auto& rm : multiple) fam.multiple_part *= pow(Poly::linear_factor(rm.root), rm.multiplicity);
  fam.cubic = cubic;
  fam.discriminant = cubic_discriminant(cubic);

  // d vanishes at every root of g exactly when q g″ + P g′ = λ g, where
  // d̃ = P/q comes from the multiple roots.
  const DTildeRational dt = dtilde_rational(FactoredInput(multiple));
  const Poly lhs = dt.denominator * derivative(cubic, 2) + dt.numerator * derivative(cubic);
  fam.lambda = lhs.leading_coefficient() / cubic.leading_coefficient();
  fam.ode_holds = lhs == cubic * fam.lambda;

  fam.mixed.exact_roots = multiple;
  if (exact_alphas) {
    auto roots = multiple;
    for (const auto& a : *exact_alphas) roots.push_back({a, 1});
    fam.exact = FactoredInput(std::move(roots));
    for (const auto& a : *exact_alphas) fam.mixed.approx_simple_roots.push_back(embed_to_approx(a, precision_bits));
  } else {
    fam.mixed.approx_simple_roots = approx_roots(cubic, precision_bits);
  }
  return fam;
}

}  // namespace

std::vector<ExceptionalCubic> exceptional_cubics(int precision_bits) {
  const FieldDescriptor q3 = FieldDescriptor::quadratic(3);
  const FieldDescriptor qm33 = FieldDescriptor::quadratic(-33);
  const ExactScalar r3 = ExactScalar(0, mpq_class(1, 3), q3);      // 1/√3
  const ExactScalar rm33 = ExactScalar(0, mpq_class(1, 11), qm33);  // 3i/√33
  std::vector<ExceptionalCubic> out;
  out.push_back(make_family("(x^2-1)^2 (x^3 - x/3)", {{1, 2}, {-1, 2}}, Poly({0, ExactScalar::rational(-1, 3), 0, 1}),
                std::vector<ExactScalar>{0, r3, -r3}, precision_bits));
  out.push_back(make_family("(x^2-1)^3 (x^3 + 3x/11)", {{1, 3}, {-1, 3}}, Poly({0, ExactScalar::rational(3, 11), 0, 1}),
                std::vector<ExactScalar>{0, rm33, -rm33}, precision_bits));
  out.push_back(make_family("x^2 (x-1)^3 (x^3 - 15x^2/11 + 6x/11 - 2/33)", {{0, 2}, {1, 3}},
                            Poly({ExactScalar::rational(-2, 33), ExactScalar::rational(6, 11),
                                  ExactScalar::rational(-15, 11), 1}),
                            std::nullopt, precision_bits));
  return out;
}

ExceptionalCubic ode_consistent_second_family() {
  const ExactScalar r = ExactScalar(0, mpq_class(1, 11), FieldDescriptor::quadratic(33));  // √33/11
  return make_family("(x^2-1)^3 (x^3 - 3x/11)", {{1, 3}, {-1, 3}}, Poly({0, ExactScalar::rational(-3, 11), 0, 1}),
                     std::vector<ExactScalar>{0, r, -r}, 256);
}

}  // namespace wfdim
