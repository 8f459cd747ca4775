#pragma once

// Inversions, S-sign and standardization of words, and the sign law for a
// single braid move.

#include <cstdint>
#include <vector>

#include "swl/coxeter.hpp"

namespace swl {

/// Number of pairs i<j with w_j < w_i (equal letters never count).
std::uint64_t inversion_number(const Word& w);

/// sigma(w) = (-1)^inv(w)
int s_sign(const Word& w);

/// One-line notation of std(w): position i goes to its stable rank in the
/// sorted word. Entries are 1-based.
std::vector<int> standardization(const Word& w);

/// Parity sign of a permutation in one-line notation (1-based entries).
int permutation_sign(const std::vector<int>& perm);

/// phi(s_i) = s_{n-i+1}
Word reverse_alphabet(const Word& w, int rank);

/// Inversions counted with the alphabet order reversed.
std::uint64_t inversion_number_reversed_order(const Word& w);

/// Omega_w: part i holds the 1-based positions of letter s_i.
struct OrderedSetPartition {
  std::vector<std::vector<int>> parts;

  std::size_t ground_size() const;
  bool valid() const;  // disjoint parts covering 1..ground_size
};

OrderedSetPartition omega(const Word& w, int rank);

/// Prefix u, alternating factor b_{i,j} (i<j) and suffix v of a braid move.
struct BraidMoveContext {
  Word u;
  int i = 0;
  int j = 0;
  Word v;

  /// number of letters s_k in u with i < k <= j
  int kappa() const;
  /// number of letters s_k in v with i <= k < j
  int mu() const;
};

/// Context of a move found by braid_move_targets.
BraidMoveContext context_of(const Word& w, const BraidMove& move);

/// Predicted sigma(u b_{i,j} v) / sigma(u b_{j,i} v).
int theorem_a_ratio(const BraidMoveContext& ctx, int m_ij);

}  // namespace swl
