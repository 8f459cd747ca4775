#pragma once

// Sparse multivariate polynomials with exact rational coefficients.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swl/error.hpp"
#include "swl/rational.hpp"

namespace swl {

using VarId = std::uint16_t;

/// Variable ids: x_i -> i-1, y_j -> 1000+j-1, the parameter m -> 2000.
namespace var {
inline VarId x(int i) { return static_cast<VarId>(i - 1); }
inline VarId y(int j) { return static_cast<VarId>(1000 + j - 1); }
inline constexpr VarId m = 2000;
std::string name(VarId id);
VarId parse(std::string_view name);
}  // namespace var

/// Power product stored as (variable, exponent) pairs sorted by variable.
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint16_t>;

  Monomial() = default;
  explicit Monomial(std::vector<Factor> factors);
  static Monomial of(VarId v, unsigned exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  unsigned degree() const { return degree_; }
  unsigned exponent(VarId v) const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;

  std::string to_string() const;

  /// Graded lex: higher total degree first, then lex with x1 > x2 > ...
  friend int compare(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<Factor> factors_;
  unsigned degree_ = 0;
};

struct Term {
  Monomial monomial;
  Rational coeff;
};

class MPoly {
 public:
  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(implicit)
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT(implicit)
  MPoly(int c) : MPoly(Rational(c)) {}   // NOLINT(implicit)
  static MPoly variable(VarId v);
  static MPoly monomial(const Monomial& m, const Rational& c = 1);
  /// Terms in any order; duplicates are merged and zeros dropped.
  static MPoly from_terms(std::vector<Term> terms);

  /// Terms in decreasing graded-lex order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial; throws UsageError otherwise.
  Rational constant_value() const;
  const Term& leading_term() const;
  unsigned total_degree() const;
  unsigned degree_in(VarId v) const;
  std::set<VarId> variables() const;
  /// Coefficient of v^k, as a polynomial in the remaining variables.
  MPoly coefficient_of(VarId v, unsigned k) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  /// this + c * m * p, computed by a single merge.
  void add_scaled(const MPoly& p, const Rational& c, const Monomial& m);

  MPoly pow(unsigned e) const;
  /// Exact value; every variable of the polynomial must be assigned.
  Rational evaluate(const std::map<VarId, Rational>& values) const;
  MPoly substitute(VarId v, const MPoly& value) const;
  MPoly substitute(const std::map<VarId, MPoly>& values) const;
  MPoly rename(const std::map<VarId, VarId>& renaming) const;

  /// Canonical text, e.g. "x1^2*x2 - 1/2*x3 + 4".
  std::string to_string() const;
  /// Accepts +, -, *, ^, parentheses and rational literals "a/b".
  static MPoly parse(std::string_view text);
  /// JSON term list [{"coeff":"a/b","monomial":[["x1",2],...]},...].
  std::string to_json() const;
  static MPoly from_json(std::string_view text);

  std::size_t hash() const;

 private:
  std::vector<Term> terms_;
};

/// Polynomial division by a single divisor: num = q*den + r, no term of r
/// divisible by the leading monomial of den.
std::pair<MPoly, MPoly> divide_with_remainder(const MPoly& num, const MPoly& den);

class NonExactDivision : public std::runtime_error {
 public:
  NonExactDivision(MPoly remainder)
      : std::runtime_error("division is not exact, remainder " + remainder.to_string()), remainder_(std::move(remainder)) {}
  const MPoly& remainder() const { return remainder_; }

 private:
  MPoly remainder_;
};

/// Quotient q with q*den == num; throws NonExactDivision with the remainder.
MPoly exact_divide(const MPoly& num, const MPoly& den);

}  // namespace swl
