#pragma once

#include <cstddef>
#include <vector>

#include "wfdim/linalg.hpp"
#include "wfdim/poly.hpp"

namespace wfdim {

/// f″p − f′p′
Poly r_of(const Poly& f, const Poly& p);

struct WfKernel {
  std::size_t dimension = 0;
  std::vector<Poly> basis;  // canonical, see canonical_basis
  Poly f;
};

/// Matrix of p ↦ R(f, p) mod f on P_{n−2} in the monomial basis: column j is
/// the remainder of R(f, x^j), rows index coefficients of 1 .. x^{n−1}.
ExactMatrix wf_matrix(const Poly& f);

/// Kernel of p ↦ R(f, p) mod f on P_{n−2} by exact elimination.
WfKernel wf_kernel(const Poly& f);

bool in_wf(const Poly& f, const Poly& p);

}  // namespace wfdim
