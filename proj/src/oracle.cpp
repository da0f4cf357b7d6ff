#include "wfdim/oracle.hpp"

namespace wfdim {

Poly r_of(const Poly& f, const Poly& p) { return derivative(f, 2) * p - derivative(f) * derivative(p); }

ExactMatrix wf_matrix(const Poly& f) {
  require(!f.is_zero() && f.degree() >= 4, ErrorKind::DegreeTooSmall, "W(f) needs deg f >= 4");
  const std::size_t n = f.degree().value();
  // The remainder has degree < n; the kernel condition is that all n
  // coefficients vanish, so the matrix is n × (n−1).
  ExactMatrix m(n, n - 1);
  for (std::size_t j = 0; j + 2 <= n; ++j) {
    const Poly rem = divmod(r_of(f, Poly::monomial(1, j)), f).remainder;
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = rem.coeff(i);
  }
  return m;
}

WfKernel wf_kernel(const Poly& f) {
  const ExactMatrix m = wf_matrix(f);
  const std::size_t n = f.degree().value();
  std::vector<Poly> raw;
  for (auto& v : nullspace(m)) raw.emplace_back(std::move(v));
  WfKernel out;
  out.basis = canonical_basis(raw, n - 2);
  out.dimension = out.basis.size();
  out.f = f;
  return out;
}

bool in_wf(const Poly& f, const Poly& p) {
  if (!p.is_zero() && p.degree().value() + 2 > f.degree().value()) return false;
  return divides(f, r_of(f, p));
}

}  // namespace wfdim
