#pragma once

// Parameter tensors, coefficient and variables tensors, model matrices and
// the factorisation of model determinants through partial Schur functions.

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "swl/coxeter.hpp"
#include "swl/matrix.hpp"
#include "swl/mpoly.hpp"
#include "swl/schur.hpp"
#include "swl/words.hpp"

namespace swl {

/// Entries p^i_{s,k}: row i in [0,N), letter s in [1,n], degree k in [0,d).
/// Columns are flattened as c = (s-1)*d + k.
class ParameterTensor {
 public:
  ParameterTensor() = default;
  ParameterTensor(int rows, int letters, int degree_bound);

  int rows() const { return rows_; }
  int letters() const { return letters_; }
  int degree_bound() const { return d_; }
  int column_count() const { return letters_ * d_; }
  int column_index(int s, int k) const { return (s - 1) * d_ + k; }

  const MPoly& at(int i, int s, int k) const;
  void set(int i, int s, int k, MPoly value);

  /// N x (n d) matrix of the flattened tensor.
  PolyMatrix as_matrix() const;
  bool is_rational() const;
  ParameterTensor specialize(VarId v, const Rational& value) const;

  /// Uniform random entries num/den with |num| <= max_num, 1 <= den <= max_den.
  static ParameterTensor random(int rows, int letters, int degree_bound, std::mt19937_64& rng, int max_num = 5,
                                int max_den = 3);

  friend bool operator==(const ParameterTensor& a, const ParameterTensor& b) {
    return a.rows_ == b.rows_ && a.letters_ == b.letters_ && a.d_ == b.d_ && a.entries_ == b.entries_;
  }

 private:
  void check(int i, int s, int k) const;
  int rows_ = 0, letters_ = 0, d_ = 0;
  std::vector<MPoly> entries_;
};

/// Sorted flattened column indices of a minor of the parameter tensor.
using ColumnSet = std::vector<int>;

/// M[i][l] = sum_k p^i_{v_l,k} x_l^k
PolyMatrix model_matrix(const Word& v, const ParameterTensor& p);

/// C^i_{(j,k)} = p^i_{v_j,k}, as an N x (N d) matrix with columns j-major.
PolyMatrix coefficients_matrix(const Word& v, const ParameterTensor& p);

/// T_{(j,k), l} = x_l^k when j == l, else 0; an (N d) x N matrix.
PolyMatrix variables_matrix(int d, int n_positions);

/// Column sets with exactly c_i columns of letter i; throws when c_i > d.
std::vector<ColumnSet> minor_support(const AbelianVector& alpha, int d);

/// Lambda_z: per letter, sort the chosen degrees decreasingly and subtract
/// the staircase (c_i - j).
std::vector<Partition> standard_partitions(const ColumnSet& z, const AbelianVector& alpha, int d);

/// det of the N x N submatrix on the columns of z, in increasing order.
MPoly minor_det(const ParameterTensor& p, const ColumnSet& z);

struct TheoremBTerm {
  ColumnSet z;
  MPoly minor;                    // det[P]_z
  std::vector<Partition> lambda;  // Lambda_z
  MPoly schur_product;            // S_{Lambda_z, Omega_v}
};

struct TheoremBCertificate {
  Word v;
  int sigma = 1;
  std::vector<std::pair<int, int>> divisor_factors;  // (k, j): factor x_k - x_j
  MPoly divisor;
  std::size_t support_size = 0;     // |X_alpha|
  std::vector<TheoremBTerm> terms;  // nonzero minors only, z in lex order
  MPoly schur_sum;
  MPoly determinant;  // sigma * divisor * schur_sum

  std::string to_json() const;
};

TheoremBCertificate det_via_theorem_B(const Word& v, const ParameterTensor& p);

/// det of the coefficient tensor restricted to Z (columns taken in the order
/// of the positions j), for a choice of degrees r_j per position.
MPoly coefficient_minor(const Word& v, const ParameterTensor& p, const std::vector<int>& r);

/// Sign of the permutation sorting the chosen degrees inside every letter class.
int pi_sign(const Word& v, const std::vector<int>& r);

/// The column set z of P reached by the degree choice r.
ColumnSet column_set_of(const Word& v, const ParameterTensor& p, const std::vector<int>& r);

/// Unfactored Binet-Cauchy sum over Z_v, computed independently.
MPoly determinant_via_zv(const Word& v, const ParameterTensor& p);

/// Sum_z det[P]_z S_{Lambda_z} in abstract variables: letter i uses the
/// variables slot_base(i) + t for its t-th occurrence. Depends only on alpha.
struct SchurSumTemplate {
  AbelianVector alpha;
  int d = 0;
  std::vector<int> slot_base;
  MPoly polynomial;
  std::size_t nonzero_minors = 0;

  /// Value for the x-values of the occurrence, x[j] for position j of v.
  Rational evaluate(const Word& v, const std::vector<Rational>& x) const;
};

SchurSumTemplate schur_sum_template(const AbelianVector& alpha, const ParameterTensor& p);

struct ModelSign {
  int sign = 0;                // sign of det M(v,P)(x)
  Rational schur_sum;          // value of the Schur sum at x
  Rational determinant_value;  // det M(v,P)(x), computed directly
};

/// Requires x_i > 0 and x strictly increasing along each letter class.
ModelSign sign_of_model_det(const Word& v, const ParameterTensor& p, const std::vector<Rational>& x);

/// Checks x_i > 0 and increasing on letter classes; returns an explanation or nullopt.
std::optional<std::string> model_sign_hypothesis_violation(const Word& v, const std::vector<Rational>& x);

enum class BclTensor { A1, A2, A3_123, A3_213 };
BclTensor parse_bcl_tensor(const std::string& name);  // "A1", "A2", "A3:123", "A3:213"
std::string bcl_tensor_name(BclTensor kind);
Word bcl_tensor_word(BclTensor kind);  // the Coxeter word the tensor is attached to
std::string bcl_tensor_type(BclTensor kind);  // Coxeter type string

/// The counting parameter tensors; m stays symbolic unless a value is given.
ParameterTensor bcl_parameter_tensor(BclTensor kind, std::optional<Rational> m = std::nullopt);

/// The tensor of the four-row B2 example: curves (1,0,-x,x^2), (0,1,x,-x^2).
ParameterTensor example_model4_tensor();

/// Word s_1^a s_2^b and the tensor giving the dual Cauchy matrix M_{a,b}.
Word dual_cauchy_word(int a, int b);
ParameterTensor dual_cauchy_tensor(int a, int b);
/// Renames x_{a+j} to y_j.
MPoly to_dual_cauchy_variables(const MPoly& p, int a, int b);
/// prod (1 + x_i y_j)
MPoly dual_cauchy_product(int a, int b);
/// sum over partitions lambda in an a x b box of s_lambda(x) s_lambda'(y)
MPoly dual_cauchy_schur_sum(int a, int b);

}  // namespace swl
