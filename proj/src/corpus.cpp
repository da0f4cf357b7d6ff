#include "wfdim/corpus.hpp"

#include <algorithm>

namespace wfdim {

ExactScalar random_rational(Rng& rng, long max_num, long max_den, bool nonzero) {
  std::uniform_int_distribution<long> num(-max_num, max_num);
  std::uniform_int_distribution<long> den(1, max_den);
  for (;;) {
    const long n = num(rng);
    if (nonzero && n == 0) continue;
    return ExactScalar::rational(n, den(rng));
  }
}

std::vector<ExactScalar> distinct_rationals(Rng& rng, std::size_t count, long max_num, long max_den) {
  std::vector<ExactScalar> out;
  while (out.size() < count) {
    ExactScalar x = random_rational(rng, max_num, max_den);
    if (std::none_of(out.begin(), out.end(), [&](const ExactScalar& y) { return y == x; })) out.push_back(std::move(x));
  }
  return out;
}

FactoredInput random_factored_input(Rng& rng, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> degree(4, std::max<std::size_t>(4, max_degree));
  std::discrete_distribution<unsigned> mult({0, 5, 3, 2, 1, 1});
  const std::size_t n = degree(rng);
  std::vector<RootMultiplicity> roots;
  std::vector<ExactScalar> seen;
  std::size_t total = 0;
  while (total < n) {
    const unsigned m = std::min<unsigned>(mult(rng), static_cast<unsigned>(n - total));
    ExactScalar root = random_rational(rng, 9, 4);
    if (std::any_of(seen.begin(), seen.end(), [&](const ExactScalar& y) { return y == root; })) continue;
    seen.push_back(root);
    roots.push_back({std::move(root), m});
    total += m;
  }
  return FactoredInput(std::move(roots), random_rational(rng, 5, 3, true));
}

std::vector<FactoredInput> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_degree) {
  Rng rng(seed);
  std::vector<FactoredInput> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_factored_input(rng, max_degree));
  return out;
}

ZProblem random_z_problem(Rng& rng, std::size_t s, std::size_t k) {
  std::vector<ExactScalar> omega = distinct_rationals(rng, s, 12, 5);
  std::vector<ExactScalar> eta;
  for (std::size_t i = 0; i < s; ++i) eta.push_back(random_rational(rng, 12, 5));
  return ZProblem(std::move(eta), std::move(omega), k);
}

std::vector<TableColumn> table_columns(std::uint64_t seed) {
  auto fi = [](std::vector<RootMultiplicity> roots) { return FactoredInput(std::move(roots)); };
  std::vector<TableColumn> cols = {
      {4, 0, 1, 0, 0, 1, 1, fi({{0, 4}})},
      {4, 2, 0, 0, 0, 1, 1, fi({{1, 2}, {-1, 2}})},
      {5, 0, 1, 1, 1, 1, 1, fi({{0, 4}, {1, 1}})},
      {5, 0, 1, 1, 0, 2, 2, fi({{0, 5}})},
      {5, 2, 0, 1, 1, 1, 1, fi({{1, 2}, {-1, 2}, {2, 1}})},
      {5, 1, 1, 0, 0, 1, 1, fi({{1, 3}, {-1, 2}})},
      {6, 0, 1, 2, 0, 3, 3, fi({{0, 6}})},
      {6, 1, 1, 1, 0, 2, 2, fi({{0, 4}, {1, 2}})},
      {6, 0, 1, 2, 1, 2, 2, fi({{0, 5}, {1, 1}})},
      {6, 0, 1, 2, 2, 1, 1, fi({{0, 4}, {1, 1}, {2, 1}})},
      {6, 3, 0, 1, 0, 2, 2, fi({{1, 2}, {-1, 2}, {2, 2}})},
      {6, 1, 1, 1, 1, 1, 1, fi({{0, 3}, {1, 2}, {2, 1}})},
      {6, 2, 0, 2, 2, 1, 1, fi({{1, 2}, {-1, 2}, {2, 1}, {3, 1}})},
  };
  if (seed != 0) {
    Rng rng(seed);
    for (auto& c : cols) {
      const ExactScalar a = random_rational(rng, 7, 4, true);
      const ExactScalar b = random_rational(rng, 7, 4);
      c.witness = c.witness.affine_image(a, b);
    }
  }
  return cols;
}

FactoredInput quadruple_root_family() { return FactoredInput({{0, 4}, {1, 1}, {2, 1}, {3, 1}, {4, 1}}); }

}  // namespace wfdim
