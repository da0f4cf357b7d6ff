#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wfdim/poly.hpp"
#include "wfdim/zspace.hpp"

namespace wfdim {

using Rng = std::mt19937_64;

/// num/den with |num| ≤ max_num and 1 ≤ den ≤ max_den.
ExactScalar random_rational(Rng& rng, long max_num, long max_den, bool nonzero = false);

std::vector<ExactScalar> distinct_rationals(Rng& rng, std::size_t count, long max_num, long max_den);

/// Rational roots with random multiplicities, 4 ≤ degree ≤ max_degree.
FactoredInput random_factored_input(Rng& rng, std::size_t max_degree = 12);

std::vector<FactoredInput> random_corpus(std::uint64_t seed, std::size_t count, std::size_t max_degree = 12);

/// Random Z(η, ω; s, k) with distinct rational nodes.
ZProblem random_z_problem(Rng& rng, std::size_t s, std::size_t k);

/// One column of the small-degree summary table: the expected counts and
/// dimension, and a witness f realizing them.
struct TableColumn {
  std::size_t degree;
  std::size_t n2;
  std::size_t N3;
  long r;
  std::size_t n1;
  long mu;
  std::size_t dim;
  FactoredInput witness;
};

/// The thirteen columns for degrees 4, 5, 6. seed 0 keeps the plain
/// witnesses; any other seed moves them by a random affine change x ↦ ax+b.
std::vector<TableColumn> table_columns(std::uint64_t seed = 0);

/// x⁴(x−1)(x−2)(x−3)(x−4)
FactoredInput quadruple_root_family();

}  // namespace wfdim
