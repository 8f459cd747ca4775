#pragma once

// Finite Coxeter systems, words over their generators, reduced-word
// enumeration and the abelian-vector statistics of reduced expressions.

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "swl/error.hpp"

namespace swl {

/// A word over the generators s_1..s_n, stored as 1-based generator indices.
class Word {
 public:
  using value_type = std::uint8_t;

  Word() = default;
  Word(std::initializer_list<int> letters);
  explicit Word(std::vector<value_type> letters) : letters_(std::move(letters)) {}

  /// Parses "121321" (digits, n <= 9) or "1,2,10,3" (comma separated).
  static Word parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  void push_back(int letter) { letters_.push_back(static_cast<value_type>(letter)); }
  void pop_back() { letters_.pop_back(); }
  const std::vector<value_type>& letters() const { return letters_; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  int max_letter() const;
  Word reversed() const;
  /// Subword at the given 1-based positions, in increasing order.
  Word at_positions(const std::vector<int>& positions) const;
  Word operator+(const Word& other) const;

  /// Digit string when every letter is <= 9, comma separated otherwise.
  std::string to_string() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<value_type> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

/// Occurrence counts (|w|_1, ..., |w|_n).
class AbelianVector {
 public:
  AbelianVector() = default;
  explicit AbelianVector(std::vector<int> counts) : counts_(std::move(counts)) {}

  std::size_t size() const { return counts_.size(); }
  int operator[](std::size_t i) const { return counts_[i]; }
  const std::vector<int>& counts() const { return counts_; }
  int total() const;
  int max_entry() const;

  AbelianVector operator+(const AbelianVector& other) const;
  std::string to_string() const;  // "(3,2,1)"

  friend auto operator<=>(const AbelianVector&, const AbelianVector&) = default;
  friend bool operator==(const AbelianVector&, const AbelianVector&) = default;

 private:
  std::vector<int> counts_;
};

AbelianVector abelian_vector(const Word& w, int rank);

enum class Family { A, B, D, H, I2 };

/// Group element in the root-permutation model: image of every root.
/// The first `rank` entries are the images of the simple roots and already
/// determine the element.
struct Element {
  std::vector<std::uint16_t> image;

  friend bool operator==(const Element&, const Element&) = default;
};

struct ElementKeyHash {
  std::size_t rank;
  std::size_t operator()(const Element& e) const noexcept;
};

/// Finite irreducible Coxeter system of type A_n, B_n, D_n, H_3 or I_2(m).
///
/// Generator numbering follows the usual diagrams: B_n has m_{1,2}=4, D_n has
/// s_1 and s_2 both joined to s_3, H_3 has m_{1,2}=5.
class CoxeterSystem {
 public:
  static CoxeterSystem make(Family family, int rank, int dihedral_m = 0);
  /// Type strings: "A3", "B4", "D5", "H3", "I2:7".
  static CoxeterSystem parse(std::string_view type);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  /// m_{i,j} with 1-based generator indices.
  int m(int i, int j) const { return matrix_[(i - 1) * rank_ + (j - 1)]; }
  const std::vector<int>& coxeter_matrix() const { return matrix_; }
  /// N = l(w_0), the number of positive roots.
  int longest_length() const { return positive_count_; }
  std::string name() const;

  Element identity() const;
  Element longest_element() const;
  Element element_of(const Word& w) const;
  Element inverse(const Element& w) const;
  /// w * s_i
  Element mul_right(const Element& w, int s) const;
  /// s_i * w
  Element mul_left(int s, const Element& w) const;
  int length(const Element& w) const;
  bool is_right_descent(const Element& w, int s) const;
  bool is_left_descent(const Element& w, int s) const;
  /// Lexicographically first reduced word of w.
  Word lex_first_reduced_word(const Element& w) const;

  std::size_t root_count() const { return positive_.size(); }
  bool root_is_positive(std::size_t r) const { return positive_[r] != 0; }

 private:
  CoxeterSystem() = default;
  void build_roots();

  Family family_ = Family::A;
  int rank_ = 0;
  int dihedral_m_ = 0;
  std::vector<int> matrix_;
  // action_[s-1][r] = index of s(root r)
  std::vector<std::vector<std::uint16_t>> action_;
  std::vector<std::uint8_t> positive_;
  int positive_count_ = 0;
};

/// Expected l(w_0) for the type, from the classical closed forms.
int expected_longest_length(Family family, int rank, int dihedral_m);

/// One occurrence of a braid move in a word.
struct BraidMove {
  int start = 0;   // 0-based position of the alternating factor
  int length = 0;  // m_{i,j}
  int first = 0;   // letter the factor starts with
  int second = 0;
  Word result;     // word after the swap
};

std::vector<BraidMove> braid_move_targets(const CoxeterSystem& sys, const Word& w);

bool is_reduced(const CoxeterSystem& sys, const Word& w);

/// Throws UsageError unless every letter lies in [1, rank].
void check_letters(const CoxeterSystem& sys, const Word& w);

struct Budget {
  std::uint64_t max_words = 100'000'000;
  double max_seconds = 600.0;
};

/// Tracks elapsed time and work against a Budget.
class BudgetClock {
 public:
  explicit BudgetClock(Budget budget);
  /// Counts one unit of work and throws ResourceLimitError when exhausted.
  void tick(std::string_view what);
  std::uint64_t processed() const { return processed_; }

 private:
  Budget budget_;
  std::uint64_t processed_ = 0;
  std::chrono::steady_clock::time_point start_;
};

/// Lexicographic stream of R(w). Memory is O(l(w) * roots); words are
/// produced one at a time and never stored.
class ReducedWordStream {
 public:
  ReducedWordStream(const CoxeterSystem& sys, const Element& w);
  std::optional<Word> next();

 private:
  struct Frame {
    Element remaining_inverse;
    int next_letter;
  };
  const CoxeterSystem* sys_;
  std::vector<Frame> stack_;
  Word prefix_;
  std::size_t target_length_ = 0;
};

/// Calls `visit` for every reduced word of w in lexicographic order; stops
/// early when `visit` returns false. Returns the number of words visited.
std::uint64_t for_each_reduced_word(const CoxeterSystem& sys, const Element& w,
                                    const std::function<bool(const Word&)>& visit,
                                    Budget budget = {});

std::vector<Word> reduced_words(const CoxeterSystem& sys, const Element& w, Budget budget = {});
std::vector<Word> longest_element_reduced_words(const CoxeterSystem& sys, Budget budget = {});

enum class SpectrumMode {
  Aggregate,  // dynamic programming over the weak order, no words stored
  Streaming,  // folds over the word stream
};

struct AbelianSpectrum {
  std::vector<AbelianVector> vectors;  // sorted decreasingly
  int nu = 0;                          // max letter multiplicity
  AbelianVector mu;                    // coordinatewise minimum
  AbelianVector coordinatewise_max;
  mpz_class word_count;                // |R(w)|
};

AbelianSpectrum abelian_spectrum(const CoxeterSystem& sys, const Element& w,
                                 SpectrumMode mode = SpectrumMode::Aggregate,
                                 Budget budget = {});

/// Counts |R(w)| by dynamic programming over the weak order.
mpz_class count_reduced_words(const CoxeterSystem& sys, const Element& w);

/// Closed form of mu(w_0) in type A_n.
AbelianVector type_a_mu_formula(int n);

}  // namespace swl
