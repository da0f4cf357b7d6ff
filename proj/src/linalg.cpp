#include "wfdim/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace wfdim {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix::ExactMatrix(std::vector<std::vector<ExactScalar>> rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (auto& r : rows) {
    require(r.size() == cols_, ErrorKind::InvalidArgument, "ragged matrix rows");
    for (auto& x : r) data_.push_back(std::move(x));
  }
}

ExactScalar& ExactMatrix::at(std::size_t i, std::size_t j) {
  require(i < rows_ && j < cols_, ErrorKind::IndexOutOfRange, "matrix index out of range");
  return data_[i * cols_ + j];
}

const ExactScalar& ExactMatrix::at(std::size_t i, std::size_t j) const {
  require(i < rows_ && j < cols_, ErrorKind::IndexOutOfRange, "matrix index out of range");
  return data_[i * cols_ + j];
}

std::vector<ExactScalar> ExactMatrix::row(std::size_t i) const {
  require(i < rows_, ErrorKind::IndexOutOfRange, "matrix row out of range");
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

FieldDescriptor ExactMatrix::field() const {
  FieldDescriptor f;
  for (const auto& x : data_) f = join(f, x.field());
  return f;
}

std::string ExactMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << data_[i * cols_ + j].to_string();
    os << "]\n";
  }
  return os.str();
}

RrefResult rref(ExactMatrix m) {
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    const ExactScalar inv = m.at(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const ExactScalar factor = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(r, j);
    }
    out.pivot_columns.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).pivot_columns.size(); }

std::vector<std::vector<ExactScalar>> nullspace(const ExactMatrix& m) {
  const RrefResult rr = rref(m);
  const auto& piv = rr.pivot_columns;
  std::vector<std::vector<ExactScalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (std::find(piv.begin(), piv.end(), free) != piv.end()) continue;
    std::vector<ExactScalar> v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -rr.reduced.at(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

ExactScalar determinant(ExactMatrix m) {
  require(m.rows() == m.cols(), ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  ExactScalar det = 1;
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m.at(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    const ExactScalar inv = m.at(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m.at(i, c).is_zero()) continue;
      const ExactScalar factor = m.at(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m.at(i, j) -= factor * m.at(c, j);
    }
  }
  return det;
}

std::vector<ExactScalar> coefficient_vector(const Poly& p, std::size_t length) {
  require(p.is_zero() || p.degree().value() < length, ErrorKind::InvalidArgument,
          "polynomial degree exceeds coefficient vector length");
  std::vector<ExactScalar> v(length);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) v[k] = p.coeffs()[k];
  return v;
}

std::vector<Poly> canonical_basis(const std::vector<Poly>& polys, std::size_t max_degree) {
  if (polys.empty()) return {};
  const std::size_t width = max_degree + 1;
  ExactMatrix m(polys.size(), width);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto v = coefficient_vector(polys[i], width);
    for (std::size_t k = 0; k < width; ++k) m.at(i, max_degree - k) = v[k];
  }
  const RrefResult rr = rref(std::move(m));
  std::vector<Poly> out;
  for (std::size_t i = 0; i < rr.pivot_columns.size(); ++i) {
    std::vector<ExactScalar> c(width);
    for (std::size_t k = 0; k < width; ++k) c[k] = rr.reduced.at(i, max_degree - k);
    out.emplace_back(std::move(c));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace wfdim
