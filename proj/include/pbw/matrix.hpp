#pragma once

#include <cstddef>
#include <vector>

#include "pbw/lincomb.hpp"
#include "pbw/rational.hpp"

namespace pbw {

/// Dense exact matrix, row-major. Used for rank, kernel and inverse; the
/// algebraic maps themselves live in sparse LinearMap form.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix operator*(const Matrix& other) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix scaled(const Rational& s) const;
  Matrix transposed() const;
  bool operator==(const Matrix& other) const = default;
  bool is_zero() const;

  /// Horizontal concatenation [this | other].
  Matrix hcat(const Matrix& other) const;
  /// Vertical concatenation.
  Matrix vcat(const Matrix& other) const;
  Matrix columns(std::size_t first, std::size_t count) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by fraction-free (Bareiss) elimination over the integers after
/// clearing row denominators.
std::size_t rank(const Matrix& m);

/// Columns form a basis of the right kernel: column f is 1 at the f-th free
/// (non-pivot) column of the echelon form and 0 at the other free columns.
Matrix kernel(const Matrix& m, std::vector<std::size_t>* free_columns = nullptr);

/// Inverse of a square matrix; throws std::domain_error if singular.
Matrix inverse(const Matrix& m);

/// Dense view of a sparse map between two enumerated bases. Keys in the image
/// that are not in `codomain` raise std::out_of_range.
template <class In, class Out>
Matrix to_matrix(const LinearMap<In, Out>& map, const std::vector<In>& domain,
                 const std::vector<Out>& codomain) {
  std::map<Out, std::size_t> index;
  for (std::size_t i = 0; i < codomain.size(); ++i) index.emplace(codomain[i], i);
  Matrix m(codomain.size(), domain.size());
  for (std::size_t j = 0; j < domain.size(); ++j)
    for (const auto& [k, c] : map.apply(domain[j])) m(index.at(k), j) = c;
  return m;
}

}  // namespace pbw
