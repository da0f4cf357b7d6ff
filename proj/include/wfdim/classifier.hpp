#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wfdim/bridge.hpp"
#include "wfdim/oracle.hpp"
#include "wfdim/poly.hpp"
#include "wfdim/zspace.hpp"

namespace wfdim {

enum class CaseTag { N1Zero, SmallN1, WideR, Exceptional44, BruteForce };

std::string to_string(CaseTag tag);

/// The four multiple-root shapes f/f_α can take when n1 = r.
enum class MultipleRootShape { XFourth, SquareMinusOneSquared, XSquaredXMinusOneCubed, SquareMinusOneCubed };

std::string to_string(MultipleRootShape shape);

/// x ↦ a·x + b sends the multiple roots of f onto those of `shape`.
struct ShapeNormalization {
  MultipleRootShape shape;
  ExactScalar a;
  ExactScalar b;
};

/// Defined when n1 = r (the only situation where the shapes are exhaustive)
/// and the multiple-root part matches one of the four shapes.
std::optional<ShapeNormalization> normalize_shape(const FactoredInput& fi);

struct WfReport {
  RootGrouping grouping;
  Poly f;
  std::size_t dim_oracle = 0;
  std::optional<std::size_t> dim_structural;  // absent when the roots are unknown
  std::optional<std::size_t> dim_theorem;
  bool degenerate = false;
  std::vector<Poly> basis;  // canonical basis of W(f)
  CaseTag case_tag = CaseTag::BruteForce;
  std::optional<ShapeNormalization> normalization;
  bool routes_agree = true;
  std::vector<std::string> issues;
};

/// Dimension and basis of W(f) by the brute-force kernel, by the Z-space
/// bridge and, when a closed form applies, by the classification. Route
/// disagreements are recorded in `issues`, never thrown.
WfReport classify(const FactoredInput& fi);

/// Same report for f given only by coefficients: the root counts come from a
/// square-free decomposition, so the oracle and the closed form run but the
/// structural route (which needs the roots themselves) does not.
WfReport classify_coefficients(const Poly& f);

/// d̃ = d − f_α″/f_α′ as numerator/denominator with denominator f_β f_γ.
struct DTildeRational {
  Poly numerator;
  Poly denominator;
};

DTildeRational dtilde_rational(const FactoredInput& fi);

/// (a, b, c, d) with d̃ = (a x + b)/(x² + c x + d); defined for
/// n2 + N3 ∈ {1, 2}. A single multiple root ρ is written over (x − ρ)².
struct DTildeCoefficients {
  ExactScalar a, b, c, d;
};

DTildeCoefficients dtilde_coefficients(const FactoredInput& fi);

/// D(t1, t2) = (d̃(t1) − d̃(t2))/(t1 − t2) − d̃(t1) d̃(t2)
ExactScalar d_pair_form(const FactoredInput& fi, const ExactScalar& t1, const ExactScalar& t2);

/// Numerator of D over (T1² + cT1 + d)(T2² + cT2 + d):
/// x11 T1T2 + x10 (T1 + T2) + x00.
struct PairNumeratorForm {
  ExactScalar x11, x10, x00;
};

/// x11 = −a(a+1), x10 = −b(a+1), x00 = ad − bc − b².
PairNumeratorForm pair_numerator_form(const DTildeCoefficients& k);

ExactScalar eval_pair_numerator(const PairNumeratorForm& form, const ExactScalar& t1, const ExactScalar& t2);

/// 3 n2 + 2 Σ (k_s − 1), checked against the actual numerator and against
/// the lower bound 3 n2 + 4 N3.
ExactScalar leading_coeff_dtilde(const FactoredInput& fi);

/// Generic identity check: `lhs` and `rhs` evaluated on `alphas`.
struct SymmetricCheck {
  std::vector<ExactScalar> alphas;
  ExactScalar lhs;
  ExactScalar rhs;
  bool holds() const { return lhs == rhs; }
};

/// Length 3: det of rows (1, α_i+α_j, α_iα_j) vs (α3−α1)(α3−α2)(α2−α1).
/// Length 4: det of the 6×6 pair matrix vs −∏_{i<j}(α_i−α_j)².
SymmetricCheck verify_det_identities(const std::vector<ExactScalar>& alphas);

/// The 2×2 associated matrix of Z((d_g(α1), d_g(α2)), (α1, α2); 2, 1) with
/// d_g = d̃ + 2/(α − α′): lhs its determinant, rhs (α1 − α2) D(α1, α2).
SymmetricCheck pair_truncation_check(const FactoredInput& fi, const ExactScalar& t1, const ExactScalar& t2);

/// h = 27e3² − 18e1e2e3 + 4(e2³ + e1³e3) − e1²e2² (lhs) against the
/// discriminant product ∏_{i<j}(α_i − α_j)² (rhs). `ratio` is lhs/rhs.
struct HCheck {
  SymmetricCheck values;
  ExactScalar ratio;
};

HCheck h_ratio_check(const std::vector<ExactScalar>& alphas);

/// Discriminant of a cubic c3 x³ + c2 x² + c1 x + c0.
ExactScalar cubic_discriminant(const Poly& cubic);

struct ExceptionalCubic {
  std::string label;
  Poly multiple_part;       // (x²−1)², (x²−1)³ or x²(x−1)³
  Poly cubic;               // g_α
  ExactScalar lambda;       // leading coefficient ratio of q g″ + P g′ to g (d̃ = P/q)
  bool ode_holds = false;   // q g″ + P g′ = λ g, i.e. d vanishes at every root of g
  ExactScalar discriminant; // exact, of g_α
  std::optional<FactoredInput> exact;  // f = multiple_part · g_α when the roots live in a quadratic field
  MixedRootInput mixed;                // same f with g_α's roots on the approximate backend
};

/// The three families whose cubic factor makes d vanish at every simple
/// root, as stated, plus `ode_consistent_second_family()`.
std::vector<ExceptionalCubic> exceptional_cubics(int precision_bits = 256);

/// (x²−1)³(x³ − 3x/11): the cubic actually solving (x²−1)g″ + 8xg′ = λg.
ExceptionalCubic ode_consistent_second_family();

}  // namespace wfdim
