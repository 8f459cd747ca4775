#pragma once

// Subword complexes, signature-matrix verification, extraction of parameter
// tensors from Gale matrices, the Schur-sum sign conditions, chirotopes and
// Gale transforms.

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "swl/coxeter.hpp"
#include "swl/matrix.hpp"
#include "swl/redgraph.hpp"
#include "swl/tensors.hpp"

namespace swl {

/// Positions (1-based, increasing) of a reduced word of w_0 inside p.
struct Occurrence {
  std::vector<int> positions;
  Word word;
};

/// All occurrences of reduced words of w_0 in p, positions in lex order.
std::vector<Occurrence> occurrences(const CoxeterSystem& sys, const Word& p, Budget budget = {});

struct SubwordComplex {
  std::string type;
  Word p;
  int n_positions = 0;
  std::vector<std::vector<int>> facets;  // sorted 1-based position sets, lex order
  std::vector<int> non_vertices;

  /// p restricted to the complement of the facet.
  Word combinatorial_type(const std::vector<int>& facet) const;
  /// Abelian vector of the combinatorial type.
  AbelianVector facet_abelian_vector(const std::vector<int>& facet, int rank) const;
  std::string to_json() const;
};

SubwordComplex build_complex(const CoxeterSystem& sys, const Word& p, Budget budget = {});

/// Gale-side data: an N x m rational matrix, the word p and the x-values.
struct GaleMatrixData {
  QMatrix B;
  Word p;
  std::vector<Rational> x;
};

/// Columns B(.,i) = sum_k P(., p_i, k) x_i^k.
GaleMatrixData curve_gale_data(const ParameterTensor& tensor, const Word& p, const std::vector<Rational>& x);

/// The word c^k w_0(c) for c = s_1 s_2 in B_2: (12)^k 1212.
Word cyclic_b2_word(int k);

struct SignWitness {
  Word v;
  std::vector<int> positions;
  int expected = 0;
  int observed = 0;
  Rational value;
};

struct ClassSummary {
  AbelianVector alpha;
  std::size_t occurrences = 0;
  std::size_t failures = 0;
};

struct Verdict {
  bool yes = true;
  std::string check;      // "signature" or "theorem-c"
  std::string condition;  // "ok", "basis", "sign", "sum-zero", "no-occurrence"
  std::optional<SignWitness> witness;  // first failure
  std::size_t occurrences_checked = 0;
  std::size_t failures = 0;
  std::vector<ClassSummary> classes;

  std::string to_json() const;
};

/// sign det [B]_Z == tau(v) for every occurrence Z of every reduced word v.
Verdict check_signature_matrix(const GaleMatrixData& data, const CoxeterSystem& sys, TSignOptions options = {});

/// Lagrange interpolation per letter through (x_i, B(k,i)); degree bound is
/// max_j |p|_j. Throws when two positions of one letter share an x-value.
ParameterTensor extract_parameter_tensor(const GaleMatrixData& data, int letters);

/// sign of the Schur sum at x_Z equals sigma(v) tau(v) for every occurrence.
Verdict check_theorem_C(const ParameterTensor& tensor, const Word& p, const std::vector<Rational>& x,
                        const CoxeterSystem& sys, TSignOptions options = {});

/// Sign map on sorted r-subsets of a ground set {1..m}.
struct ChirotopeData {
  int rank = 0;
  int ground = 0;
  std::map<std::vector<int>, int> signs;

  /// Alternating extension to arbitrary tuples; repeated elements give 0.
  int chi(const std::vector<int>& tuple) const;
  std::vector<std::vector<int>> bases() const;
  std::string to_json() const;
};

ChirotopeData chirotope_from_matrix(const QMatrix& a);

/// Three-term Grassmann-Pluecker relation for (sigma, a, b, c, d).
bool three_term_relation_holds(const ChirotopeData& chi, const std::vector<int>& sigma, int a, int b, int c, int d);

/// Samples tuples and checks the alternating law against determinants of
/// `a` and the three-term relations. Returns a description of the first failure.
std::optional<std::string> check_chirotope_axioms(const ChirotopeData& chi, const QMatrix& a, std::mt19937_64& rng,
                                                  int samples);

/// Rows span the right kernel of a; requires full row rank.
QMatrix gale_transform(const QMatrix& a);

}  // namespace swl
