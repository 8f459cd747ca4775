#pragma once

// Partitions, Schur polynomials as bialternants, partial Schur functions and
// Vandermonde products.

#include <string>
#include <vector>

#include "swl/coxeter.hpp"
#include "swl/matrix.hpp"
#include "swl/mpoly.hpp"
#include "swl/words.hpp"

namespace swl {

/// Weakly decreasing sequence of non-negative parts with a fixed length.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  std::size_t length() const { return parts_.size(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // |lambda|
  bool is_zero() const;
  std::string to_string() const;  // "(3,1)"

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Conjugate partition padded or truncated to `length` parts.
Partition conjugate(const Partition& lambda, std::size_t length);

/// All partitions with `length` parts, each at most `max_part`.
std::vector<Partition> partitions_in_box(std::size_t length, int max_part);

/// prod_{i<j} (x_{J_j} - x_{J_i})
MPoly vandermonde(const std::vector<VarId>& vars);
/// Rows x_j^{i-1}, i = 1..|vars|.
PolyMatrix vandermonde_matrix(const std::vector<VarId>& vars);

/// Alternant det(x_{J_j}^{i-1+lambda_{d-i+1}}).
MPoly bialternant(const Partition& lambda, const std::vector<VarId>& vars);

/// Schur polynomial: bialternant divided exactly by the Vandermonde.
MPoly schur(const Partition& lambda, const std::vector<VarId>& vars);

/// Schur polynomial as the generating function of semistandard tableaux.
MPoly schur_by_tableaux(const Partition& lambda, const std::vector<VarId>& vars);

/// prod_i s_{lambda^i, p_i} with p_i a set of 1-based positions (variable x_p).
MPoly partial_schur(const std::vector<Partition>& lambdas, const OrderedSetPartition& parts);

/// prod over equal-letter position pairs j<k of (x_k - x_j).
MPoly vandermonde_divisor(const Word& v);

/// Value of the Vandermonde divisor at x (x[0] is x_1).
Rational vandermonde_divisor_value(const Word& v, const std::vector<Rational>& x);

}  // namespace swl
