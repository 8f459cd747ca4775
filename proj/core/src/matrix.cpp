#include "swl/matrix.hpp"

#include <bit>
#include <sstream>

#include "json.hpp"

namespace swl {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  QMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw UsageError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::select_columns(const std::vector<int>& cols) const {
  QMatrix out(rows_, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] < 0 || static_cast<std::size_t>(cols[j]) >= cols_) throw UsageError("column index out of range");
    for (std::size_t i = 0; i < rows_; ++i) out(i, j) = (*this)(i, cols[j]);
  }
  return out;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw UsageError("matrix product shape mismatch");
  QMatrix out(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += (*this)(i, k) * o(k, j);
    }
  return out;
}

std::string QMatrix::to_csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ',';
      out << swl::to_string((*this)(i, j));
    }
    out << '\n';
  }
  return out.str();
}

QMatrix QMatrix::from_csv(const std::string& text) {
  std::vector<std::vector<Rational>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line[line.find_first_not_of(" \t")] == '#') continue;
    std::vector<Rational> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(parse_rational(cell));
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

std::string QMatrix::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < rows_; ++i) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < cols_; ++k) row.push_back(swl::to_string((*this)(i, k)));
    j.push_back(row);
  }
  return j.dump();
}

QMatrix QMatrix::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad matrix JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("matrix")) j = j["matrix"];
  if (!j.is_array()) throw UsageError("matrix JSON must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw UsageError("matrix JSON rows must be arrays");
    std::vector<Rational> row;
    for (const auto& c : r) row.push_back(parse_rational(c.is_string() ? c.get<std::string>() : c.dump()));
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

Rational det(const QMatrix& input) {
  if (input.rows() != input.cols()) throw UsageError("determinant of a non-square matrix");
  QMatrix a = input;
  const std::size_t n = a.rows();
  Rational d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(p, j), a(k, j));
      d = -d;
    }
    d *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return d;
}

Rref rref(const QMatrix& input) {
  Rref out{input, {}};
  QMatrix& a = out.matrix;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(row, j));
    Rational inv = Rational(1) / a(row, col);
    for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const QMatrix& a) { return rref(a).pivots.size(); }

QMatrix kernel_basis(const QMatrix& a) {
  Rref r = rref(a);
  std::vector<char> is_pivot(a.cols(), 0);
  for (auto p : r.pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  QMatrix basis(free.size(), a.cols());
  for (std::size_t f = 0; f < free.size(); ++f) {
    basis(f, free[f]) = 1;
    for (std::size_t k = 0; k < r.pivots.size(); ++k) basis(f, r.pivots[k]) = -r.matrix(k, free[f]);
  }
  return basis;
}

PolyMatrix identity_poly_matrix(std::size_t n) {
  PolyMatrix m(n, std::vector<MPoly>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = MPoly(1);
  return m;
}

QMatrix evaluate(const PolyMatrix& m, const std::map<VarId, Rational>& values) {
  QMatrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = m[i][j].evaluate(values);
  return out;
}

PolyMatrix to_poly_matrix(const QMatrix& q) {
  PolyMatrix m(q.rows(), std::vector<MPoly>(q.cols()));
  for (std::size_t i = 0; i < q.rows(); ++i)
    for (std::size_t j = 0; j < q.cols(); ++j) m[i][j] = MPoly(q(i, j));
  return m;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  std::size_t inner = a.empty() ? 0 : a[0].size();
  if (inner != b.size()) throw UsageError("polynomial matrix product shape mismatch");
  std::size_t cols = b.empty() ? 0 : b[0].size();
  PolyMatrix out(a.size(), std::vector<MPoly>(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

namespace {

void check_square(const PolyMatrix& m, std::size_t limit) {
  for (const auto& row : m)
    if (row.size() != m.size()) throw UsageError("determinant of a non-square matrix");
  if (m.size() > limit) throw UsageError("determinant size " + std::to_string(m.size()) + " above limit " + std::to_string(limit));
}

}  // namespace

MPoly det_bareiss(PolyMatrix m) {
  check_square(m, 16);
  const std::size_t n = m.size();
  if (n == 0) return MPoly(1);
  int sign = 1;
  MPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i)
      if (!m[i][k].is_zero() && (best == n || m[i][k].size() < m[best][k].size())) best = i;
    if (best == n) return MPoly();
    if (best != k) {
      std::swap(m[best], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? num * (Rational(1) / prev.constant_value()) : exact_divide(num, prev);
      }
      m[i][k] = MPoly();
    }
    prev = m[k][k];
  }
  MPoly d = m[n - 1][n - 1];
  if (sign < 0) d = -d;
  return d;
}

MPoly det_expansion(const PolyMatrix& m) {
  check_square(m, 20);
  const std::size_t n = m.size();
  if (n == 0) return MPoly(1);
  // partial[S] = signed sum over injections of the first |S| columns into S.
  std::vector<MPoly> partial(std::size_t{1} << n);
  std::vector<char> live(partial.size(), 0);
  partial[0] = MPoly(1);
  live[0] = 1;
  for (std::size_t s = 0; s < partial.size(); ++s) {
    if (!live[s] || partial[s].is_zero()) continue;
    std::size_t col = std::popcount(s);
    if (col == n) continue;
    for (std::size_t row = 0; row < n; ++row) {
      if (s & (std::size_t{1} << row)) continue;
      const MPoly& entry = m[row][col];
      if (entry.is_zero()) continue;
      // rows already used that sit below `row` each add one inversion
      int above = std::popcount(s >> (row + 1));
      std::size_t t = s | (std::size_t{1} << row);
      for (const auto& term : entry.terms())
        partial[t].add_scaled(partial[s], above % 2 ? -term.coeff : term.coeff, term.monomial);
      live[t] = 1;
    }
    if (col + 1 < n) partial[s] = MPoly();  // no longer needed
  }
  return partial.back();
}

MPoly det_poly(const PolyMatrix& m) {
  check_square(m, 12);
  return det_bareiss(m);
}

}  // namespace swl
