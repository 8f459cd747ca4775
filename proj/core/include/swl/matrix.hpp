#pragma once

// Dense matrices over Q and over the polynomial ring, with exact
// determinants, rank, reduced row echelon form and kernels.

#include <map>
#include <string>
#include <vector>

#include "swl/mpoly.hpp"

namespace swl {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static QMatrix identity(std::size_t n);
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  QMatrix transpose() const;
  /// Columns in the given (0-based) order.
  QMatrix select_columns(const std::vector<int>& cols) const;
  QMatrix operator*(const QMatrix& o) const;
  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  std::string to_csv() const;
  static QMatrix from_csv(const std::string& text);
  std::string to_json() const;
  static QMatrix from_json(const std::string& text);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

Rational det(const QMatrix& a);
std::size_t rank(const QMatrix& a);

struct Rref {
  QMatrix matrix;
  std::vector<std::size_t> pivots;
};
Rref rref(const QMatrix& a);

/// Rows form a basis of the right kernel {x : a x = 0}.
QMatrix kernel_basis(const QMatrix& a);

using PolyMatrix = std::vector<std::vector<MPoly>>;

PolyMatrix identity_poly_matrix(std::size_t n);
QMatrix evaluate(const PolyMatrix& m, const std::map<VarId, Rational>& values);
PolyMatrix to_poly_matrix(const QMatrix& q);
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

/// Fraction-free Bareiss elimination. Pivots are chosen among the nonzero
/// candidates with the fewest terms; row swaps are tracked in the sign.
MPoly det_bareiss(PolyMatrix m);

/// Laplace expansion organised column by column over row subsets
/// (2^k states). Independent of det_bareiss; used as an oracle.
MPoly det_expansion(const PolyMatrix& m);

/// Exact polynomial determinant, square matrices up to 12x12.
MPoly det_poly(const PolyMatrix& m);

}  // namespace swl
