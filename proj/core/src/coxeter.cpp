#include "swl/coxeter.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <unordered_map>

namespace swl {

// ---------------------------------------------------------------- Word

Word::Word(std::initializer_list<int> letters) {
  letters_.reserve(letters.size());
  for (int a : letters) {
    if (a < 1 || a > 255) throw UsageError("letter out of range: " + std::to_string(a));
    letters_.push_back(static_cast<value_type>(a));
  }
}

Word Word::parse(std::string_view text) {
  Word w;
  if (text == "e" || text.empty()) return w;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string_view tok = text.substr(pos, next - pos);
      if (tok.empty()) throw UsageError("empty letter in word '" + std::string(text) + "'");
      int v = 0;
      for (char c : tok) {
        if (c < '0' || c > '9') throw UsageError("bad letter in word '" + std::string(text) + "'");
        v = v * 10 + (c - '0');
        if (v > 255) throw UsageError("letter too large in '" + std::string(text) + "'");
      }
      if (v == 0) throw UsageError("letters are 1-based: '" + std::string(text) + "'");
      w.push_back(v);
      pos = next + 1;
    }
    return w;
  }
  for (char c : text) {
    if (c < '1' || c > '9') throw UsageError("bad letter '" + std::string(1, c) + "' in word '" + std::string(text) + "'");
    w.push_back(c - '0');
  }
  return w;
}

int Word::max_letter() const {
  int m = 0;
  for (auto a : letters_) m = std::max<int>(m, a);
  return m;
}

Word Word::reversed() const {
  return Word(std::vector<value_type>(letters_.rbegin(), letters_.rend()));
}

Word Word::at_positions(const std::vector<int>& positions) const {
  Word out;
  for (int p : positions) {
    if (p < 1 || static_cast<std::size_t>(p) > letters_.size()) throw UsageError("position out of range");
    out.push_back(letters_[p - 1]);
  }
  return out;
}

Word Word::operator+(const Word& other) const {
  std::vector<value_type> v = letters_;
  v.insert(v.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(v));
}

std::string Word::to_string() const {
  if (letters_.empty()) return "e";
  std::string out;
  if (max_letter() <= 9) {
    for (auto a : letters_) out.push_back(static_cast<char>('0' + a));
    return out;
  }
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(letters_[i]);
  }
  return out;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto a : w.letters()) h = (h ^ a) * 1099511628211ull;
  return h;
}

// ------------------------------------------------------- AbelianVector

int AbelianVector::total() const {
  int t = 0;
  for (int c : counts_) t += c;
  return t;
}

int AbelianVector::max_entry() const {
  int m = 0;
  for (int c : counts_) m = std::max(m, c);
  return m;
}

AbelianVector AbelianVector::operator+(const AbelianVector& other) const {
  std::vector<int> out(std::max(counts_.size(), other.counts_.size()), 0);
  for (std::size_t i = 0; i < counts_.size(); ++i) out[i] += counts_[i];
  for (std::size_t i = 0; i < other.counts_.size(); ++i) out[i] += other.counts_[i];
  return AbelianVector(std::move(out));
}

std::string AbelianVector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(counts_[i]);
  }
  return out + ")";
}

AbelianVector abelian_vector(const Word& w, int rank) {
  std::vector<int> c(rank, 0);
  for (int a : w) {
    if (a < 1 || a > rank) throw UsageError("letter " + std::to_string(a) + " outside [1," + std::to_string(rank) + "]");
    ++c[a - 1];
  }
  return AbelianVector(std::move(c));
}

// ------------------------------------------------------------ Elements

std::size_t ElementKeyHash::operator()(const Element& e) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < rank && i < e.image.size(); ++i) h = (h ^ e.image[i]) * 1099511628211ull;
  return h;
}

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint16_t>& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto a : k) h = (h ^ a) * 1099511628211ull;
    return h;
  }
};

std::vector<std::uint16_t> key_of(const Element& e, int rank) {
  return std::vector<std::uint16_t>(e.image.begin(), e.image.begin() + rank);
}

}  // namespace

// ------------------------------------------------------ CoxeterSystem

int expected_longest_length(Family family, int rank, int dihedral_m) {
  switch (family) {
    case Family::A: return rank * (rank + 1) / 2;
    case Family::B: return rank * rank;
    case Family::D: return rank * (rank - 1);
    case Family::H: return rank == 3 ? 15 : (rank == 4 ? 60 : 0);
    case Family::I2: return dihedral_m;
  }
  return 0;
}

CoxeterSystem CoxeterSystem::make(Family family, int rank, int dihedral_m) {
  switch (family) {
    case Family::A:
      if (rank < 1) throw UsageError("A_n needs n >= 1");
      break;
    case Family::B:
      if (rank < 2) throw UsageError("B_n needs n >= 2");
      break;
    case Family::D:
      if (rank < 4) throw UsageError("D_n needs n >= 4");
      break;
    case Family::H:
      if (rank != 3) throw UsageError("only H3 is supported");
      break;
    case Family::I2:
      if (rank != 2) throw UsageError("I2 has rank 2");
      if (dihedral_m < 2) throw UsageError("I2(m) needs m >= 2");
      if (dihedral_m > 1000) throw UsageError("I2(m) parameter too large");
      break;
  }
  if (rank > 16) throw UsageError("rank above 16 is not supported");

  CoxeterSystem sys;
  sys.family_ = family;
  sys.rank_ = rank;
  sys.dihedral_m_ = family == Family::I2 ? dihedral_m : 0;
  sys.matrix_.assign(rank * rank, 2);
  for (int i = 0; i < rank; ++i) sys.matrix_[i * rank + i] = 1;
  auto link = [&](int i, int j, int m) {  // 1-based
    sys.matrix_[(i - 1) * rank + (j - 1)] = m;
    sys.matrix_[(j - 1) * rank + (i - 1)] = m;
  };
  switch (family) {
    case Family::A:
      for (int i = 1; i < rank; ++i) link(i, i + 1, 3);
      break;
    case Family::B:
      link(1, 2, 4);
      for (int i = 2; i < rank; ++i) link(i, i + 1, 3);
      break;
    case Family::D:
      link(1, 3, 3);
      link(2, 3, 3);
      for (int i = 3; i < rank; ++i) link(i, i + 1, 3);
      break;
    case Family::H:
      link(1, 2, 5);
      link(2, 3, 3);
      break;
    case Family::I2:
      link(1, 2, dihedral_m);
      break;
  }
  sys.build_roots();
  int expected = expected_longest_length(family, rank, sys.dihedral_m_);
  if (sys.positive_count_ != expected)
    throw InvariantViolation("root system of " + sys.name() + " has " + std::to_string(sys.positive_count_) +
                             " positive roots, expected " + std::to_string(expected));
  return sys;
}

CoxeterSystem CoxeterSystem::parse(std::string_view type) {
  auto bad = [&] { return UsageError("bad Coxeter type '" + std::string(type) + "' (expected A3, B4, D5, H3, I2:7)"); };
  if (type.size() < 2) throw bad();
  auto number = [&](std::string_view s) {
    if (s.empty() || s.size() > 4) throw bad();
    int v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') throw bad();
      v = v * 10 + (c - '0');
    }
    return v;
  };
  char f = type[0];
  if (f == 'I' || f == 'i') {
    if (type.substr(0, 3) != "I2:" && type.substr(0, 3) != "i2:") throw bad();
    return make(Family::I2, 2, number(type.substr(3)));
  }
  int rank = number(type.substr(1));
  switch (f) {
    case 'A': case 'a': return make(Family::A, rank);
    case 'B': case 'b': return make(Family::B, rank);
    case 'D': case 'd': return make(Family::D, rank);
    case 'H': case 'h': return make(Family::H, rank);
    default: throw bad();
  }
}

std::string CoxeterSystem::name() const {
  switch (family_) {
    case Family::A: return "A" + std::to_string(rank_);
    case Family::B: return "B" + std::to_string(rank_);
    case Family::D: return "D" + std::to_string(rank_);
    case Family::H: return "H" + std::to_string(rank_);
    case Family::I2: return "I2:" + std::to_string(dihedral_m_);
  }
  return "?";
}

// Roots are generated numerically from the Tits form and deduplicated on a
// rounded key; everything afterwards works on root indices only.
void CoxeterSystem::build_roots() {
  const int n = rank_;
  std::vector<double> form(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      form[i * n + j] = i == j ? 1.0 : -std::cos(std::numbers::pi / matrix_[i * n + j]);

  using Vec = std::vector<double>;
  auto reflect = [&](int s, const Vec& v) {
    double c = 0;
    for (int k = 0; k < n; ++k) c += form[s * n + k] * v[k];
    Vec w = v;
    w[s] -= 2 * c;
    return w;
  };
  auto key = [&](const Vec& v) {
    std::vector<long long> k(n);
    for (int i = 0; i < n; ++i) k[i] = std::llround(v[i] * 1e6);
    return k;
  };

  std::vector<Vec> roots;
  std::map<std::vector<long long>, int> index;
  for (int i = 0; i < n; ++i) {
    Vec e(n, 0.0);
    e[i] = 1.0;
    index[key(e)] = static_cast<int>(roots.size());
    roots.push_back(e);
  }
  for (std::size_t h = 0; h < roots.size(); ++h) {
    for (int s = 0; s < n; ++s) {
      Vec w = reflect(s, roots[h]);
      auto k = key(w);
      if (!index.count(k)) {
        if (roots.size() >= 60000) throw UsageError("root system too large");
        index[k] = static_cast<int>(roots.size());
        roots.push_back(std::move(w));
      }
    }
  }
  action_.assign(n, std::vector<std::uint16_t>(roots.size()));
  for (int s = 0; s < n; ++s)
    for (std::size_t r = 0; r < roots.size(); ++r)
      action_[s][r] = static_cast<std::uint16_t>(index.at(key(reflect(s, roots[r]))));
  positive_.assign(roots.size(), 0);
  positive_count_ = 0;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    bool pos = std::all_of(roots[r].begin(), roots[r].end(), [](double x) { return x > -1e-9; });
    bool neg = std::all_of(roots[r].begin(), roots[r].end(), [](double x) { return x < 1e-9; });
    if (pos == neg) throw InvariantViolation("root neither positive nor negative in " + name());
    positive_[r] = pos ? 1 : 0;
    positive_count_ += pos;
  }
}

Element CoxeterSystem::identity() const {
  Element e;
  e.image.resize(root_count());
  for (std::size_t r = 0; r < e.image.size(); ++r) e.image[r] = static_cast<std::uint16_t>(r);
  return e;
}

Element CoxeterSystem::mul_right(const Element& w, int s) const {
  const auto& act = action_[s - 1];
  Element out;
  out.image.resize(w.image.size());
  for (std::size_t r = 0; r < w.image.size(); ++r) out.image[r] = w.image[act[r]];
  return out;
}

Element CoxeterSystem::mul_left(int s, const Element& w) const {
  const auto& act = action_[s - 1];
  Element out;
  out.image.resize(w.image.size());
  for (std::size_t r = 0; r < w.image.size(); ++r) out.image[r] = act[w.image[r]];
  return out;
}

Element CoxeterSystem::inverse(const Element& w) const {
  Element out;
  out.image.resize(w.image.size());
  for (std::size_t r = 0; r < w.image.size(); ++r) out.image[w.image[r]] = static_cast<std::uint16_t>(r);
  return out;
}

Element CoxeterSystem::element_of(const Word& w) const {
  check_letters(*this, w);
  Element g = identity();
  for (int a : w) g = mul_right(g, a);
  return g;
}

int CoxeterSystem::length(const Element& w) const {
  int l = 0;
  for (std::size_t r = 0; r < w.image.size(); ++r)
    if (positive_[r] && !positive_[w.image[r]]) ++l;
  return l;
}

bool CoxeterSystem::is_right_descent(const Element& w, int s) const {
  return !positive_[w.image[s - 1]];
}

bool CoxeterSystem::is_left_descent(const Element& w, int s) const {
  // s is a left descent of w iff w^{-1}(alpha_s) < 0, i.e. alpha_s = w(beta)
  // for a negative root beta.
  for (std::size_t r = 0; r < w.image.size(); ++r)
    if (w.image[r] == s - 1) return !positive_[r];
  return false;
}

Element CoxeterSystem::longest_element() const {
  Element g = identity();
  for (bool grew = true; grew;) {
    grew = false;
    for (int s = 1; s <= rank_; ++s) {
      if (!is_right_descent(g, s)) {
        g = mul_right(g, s);
        grew = true;
        break;
      }
    }
  }
  return g;
}

Word CoxeterSystem::lex_first_reduced_word(const Element& w) const {
  Element u = inverse(w);  // u = r^{-1} for the unread remainder r
  Word out;
  for (bool found = true; found;) {
    found = false;
    for (int s = 1; s <= rank_; ++s) {
      if (!positive_[u.image[s - 1]]) {
        out.push_back(s);
        u = mul_right(u, s);
        found = true;
        break;
      }
    }
  }
  return out;
}

// ------------------------------------------------ braid moves, reduction

void check_letters(const CoxeterSystem& sys, const Word& w) {
  for (int a : w)
    if (a < 1 || a > sys.rank())
      throw UsageError("letter " + std::to_string(a) + " outside [1," + std::to_string(sys.rank()) + "] for " + sys.name());
}

std::vector<BraidMove> braid_move_targets(const CoxeterSystem& sys, const Word& w) {
  check_letters(sys, w);
  std::vector<BraidMove> out;
  const int len = static_cast<int>(w.size());
  for (int p = 0; p + 1 < len; ++p) {
    int i = w[p], j = w[p + 1];
    if (i == j) continue;
    int m = sys.m(i, j);
    if (p + m > len) continue;
    bool alternating = true;
    for (int t = 0; t < m && alternating; ++t) alternating = w[p + t] == (t % 2 == 0 ? i : j);
    if (!alternating) continue;
    std::vector<Word::value_type> letters = w.letters();
    for (int t = 0; t < m; ++t) letters[p + t] = static_cast<Word::value_type>(t % 2 == 0 ? j : i);
    out.push_back(BraidMove{p, m, i, j, Word(std::move(letters))});
  }
  return out;
}

bool is_reduced(const CoxeterSystem& sys, const Word& w) {
  check_letters(sys, w);
  Element g = sys.identity();
  for (int a : w) {
    if (sys.is_right_descent(g, a)) return false;
    g = sys.mul_right(g, a);
  }
  return true;
}

// ------------------------------------------------------------ budgets

BudgetClock::BudgetClock(Budget budget) : budget_(budget), start_(std::chrono::steady_clock::now()) {}

void BudgetClock::tick(std::string_view what) {
  ++processed_;
  if (processed_ > budget_.max_words)
    throw ResourceLimitError(std::string(what) + ": word budget of " + std::to_string(budget_.max_words) + " exceeded",
                             processed_ - 1);
  if ((processed_ & 1023) == 0) {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (secs > budget_.max_seconds)
      throw ResourceLimitError(std::string(what) + ": time budget of " + std::to_string(budget_.max_seconds) +
                                   " s exceeded",
                               processed_);
  }
}

// ------------------------------------------------------ enumeration

ReducedWordStream::ReducedWordStream(const CoxeterSystem& sys, const Element& w) : sys_(&sys) {
  target_length_ = static_cast<std::size_t>(sys.length(w));
  stack_.push_back(Frame{sys.inverse(w), 1});
}

std::optional<Word> ReducedWordStream::next() {
  while (!stack_.empty()) {
    if (prefix_.size() == target_length_) {
      Word out = prefix_;
      stack_.pop_back();
      if (!prefix_.empty()) prefix_.pop_back();
      return out;
    }
    Frame& top = stack_.back();
    bool descended = false;
    while (top.next_letter <= sys_->rank()) {
      int a = top.next_letter++;
      if (!sys_->root_is_positive(top.remaining_inverse.image[a - 1])) {
        Element u = sys_->mul_right(top.remaining_inverse, a);
        prefix_.push_back(a);
        stack_.push_back(Frame{std::move(u), 1});
        descended = true;
        break;
      }
    }
    if (!descended) {
      stack_.pop_back();
      if (!prefix_.empty()) prefix_.pop_back();
    }
  }
  return std::nullopt;
}

std::uint64_t for_each_reduced_word(const CoxeterSystem& sys, const Element& w,
                                    const std::function<bool(const Word&)>& visit, Budget budget) {
  BudgetClock clock(budget);
  ReducedWordStream stream(sys, w);
  std::uint64_t count = 0;
  while (auto word = stream.next()) {
    clock.tick("reduced-word enumeration");
    ++count;
    if (!visit(*word)) break;
  }
  return count;
}

std::vector<Word> reduced_words(const CoxeterSystem& sys, const Element& w, Budget budget) {
  std::vector<Word> out;
  for_each_reduced_word(sys, w, [&](const Word& v) { out.push_back(v); return true; }, budget);
  return out;
}

std::vector<Word> longest_element_reduced_words(const CoxeterSystem& sys, Budget budget) {
  return reduced_words(sys, sys.longest_element(), budget);
}

// ------------------------------------------------ abelian spectrum

namespace {

struct SpectrumNode {
  std::vector<std::vector<int>> vectors;  // sorted, unique
  mpz_class count;
};

class SpectrumDp {
 public:
  SpectrumDp(const CoxeterSystem& sys, Budget budget) : sys_(sys), clock_(budget) {}

  // `u` is the inverse of the element still to be written.
  const SpectrumNode& solve(const Element& u) {
    auto key = key_of(u, sys_.rank());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    clock_.tick("abelian spectrum");
    SpectrumNode node;
    bool any = false;
    std::vector<std::vector<int>> merged;
    for (int s = 1; s <= sys_.rank(); ++s) {
      if (sys_.root_is_positive(u.image[s - 1])) continue;
      any = true;
      const SpectrumNode& child = solve(sys_.mul_right(u, s));
      node.count += child.count;
      for (auto v : child.vectors) {
        ++v[s - 1];
        merged.push_back(std::move(v));
      }
    }
    if (!any) {
      node.count = 1;
      merged.emplace_back(sys_.rank(), 0);
    }
    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    node.vectors = std::move(merged);
    return memo_.emplace(std::move(key), std::move(node)).first->second;
  }

 private:
  const CoxeterSystem& sys_;
  BudgetClock clock_;
  std::unordered_map<std::vector<std::uint16_t>, SpectrumNode, KeyHash> memo_;
};

AbelianSpectrum finish_spectrum(std::vector<std::vector<int>> raw, mpz_class count, int rank) {
  AbelianSpectrum out;
  std::sort(raw.begin(), raw.end(), std::greater<>());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  std::vector<int> lo(rank, 0), hi(rank, 0);
  for (std::size_t k = 0; k < raw.size(); ++k) {
    for (int i = 0; i < rank; ++i) {
      lo[i] = k == 0 ? raw[k][i] : std::min(lo[i], raw[k][i]);
      hi[i] = std::max(hi[i], raw[k][i]);
      out.nu = std::max(out.nu, raw[k][i]);
    }
  }
  for (auto& v : raw) out.vectors.emplace_back(std::move(v));
  out.mu = AbelianVector(lo);
  out.coordinatewise_max = AbelianVector(hi);
  out.word_count = std::move(count);
  return out;
}

}  // namespace

AbelianSpectrum abelian_spectrum(const CoxeterSystem& sys, const Element& w, SpectrumMode mode, Budget budget) {
  if (mode == SpectrumMode::Aggregate) {
    SpectrumDp dp(sys, budget);
    const SpectrumNode& root = dp.solve(sys.inverse(w));
    return finish_spectrum(root.vectors, root.count, sys.rank());
  }
  std::vector<std::vector<int>> seen;
  std::map<std::vector<int>, bool> index;
  mpz_class count = 0;
  for_each_reduced_word(
      sys, w,
      [&](const Word& v) {
        ++count;
        auto a = abelian_vector(v, sys.rank()).counts();
        if (index.emplace(a, true).second) seen.push_back(std::move(a));
        return true;
      },
      budget);
  return finish_spectrum(std::move(seen), count, sys.rank());
}

mpz_class count_reduced_words(const CoxeterSystem& sys, const Element& w) {
  std::unordered_map<std::vector<std::uint16_t>, mpz_class, KeyHash> memo;
  std::function<mpz_class(const Element&)> go = [&](const Element& u) -> mpz_class {
    auto key = key_of(u, sys.rank());
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    mpz_class total = 0;
    bool any = false;
    for (int s = 1; s <= sys.rank(); ++s) {
      if (sys.root_is_positive(u.image[s - 1])) continue;
      any = true;
      total += go(sys.mul_right(u, s));
    }
    if (!any) total = 1;
    memo.emplace(std::move(key), total);
    return total;
  };
  return go(sys.inverse(w));
}

AbelianVector type_a_mu_formula(int n) {
  std::vector<int> mu(n);
  for (int i = 1; i <= n; ++i) mu[i - 1] = std::min(i, n + 1 - i);
  return AbelianVector(std::move(mu));
}

}  // namespace swl
