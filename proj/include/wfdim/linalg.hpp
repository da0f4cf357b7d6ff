#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wfdim/poly.hpp"

namespace wfdim {

/// Dense row-major matrix over one of the exact scalar fields.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols);
  explicit ExactMatrix(std::vector<std::vector<ExactScalar>> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  ExactScalar& at(std::size_t i, std::size_t j);
  const ExactScalar& at(std::size_t i, std::size_t j) const;
  std::vector<ExactScalar> row(std::size_t i) const;

  FieldDescriptor field() const;
  std::string to_string() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExactScalar> data_;
};

struct RrefResult {
  ExactMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Reduced row echelon form by Gauss–Jordan elimination. The pivot in each
/// column is the first nonzero entry at or below the current row.
RrefResult rref(ExactMatrix m);

std::size_t rank(const ExactMatrix& m);

/// Basis of {v : M v = 0}: one vector per free column, 1 in that column.
std::vector<std::vector<ExactScalar>> nullspace(const ExactMatrix& m);

ExactScalar determinant(ExactMatrix m);

/// Unique basis of span(polys) ⊆ P_{max_degree}: reduced echelon form with
/// columns ordered from x^max_degree down, so each element is monic and its
/// leading monomial appears in no other element. Sorted by ascending degree.
std::vector<Poly> canonical_basis(const std::vector<Poly>& polys, std::size_t max_degree);

/// Coefficient vector of p, ascending, padded to `length`.
std::vector<ExactScalar> coefficient_vector(const Poly& p, std::size_t length);

}  // namespace wfdim
