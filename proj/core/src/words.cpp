#include "swl/words.hpp"

#include <algorithm>

namespace swl {

std::uint64_t inversion_number(const Word& w) {
  // counts[a] = letters equal to a seen so far; fine for small alphabets
  std::vector<std::uint64_t> seen(256, 0);
  std::uint64_t inv = 0;
  for (int a : w) {
    for (int b = a + 1; b < 256; ++b) inv += seen[b];
    ++seen[a];
  }
  return inv;
}

int s_sign(const Word& w) { return inversion_number(w) % 2 == 0 ? 1 : -1; }

std::vector<int> standardization(const Word& w) {
  std::vector<int> order(w.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });
  std::vector<int> perm(w.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) perm[order[rank]] = static_cast<int>(rank) + 1;
  return perm;
}

int permutation_sign(const std::vector<int>& perm) {
  std::vector<char> visited(perm.size(), 0);
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (visited[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !visited[j]; j = perm[j] - 1) {
      visited[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

Word reverse_alphabet(const Word& w, int rank) {
  Word out;
  for (int a : w) out.push_back(rank + 1 - a);
  return out;
}

std::uint64_t inversion_number_reversed_order(const Word& w) {
  std::vector<std::uint64_t> seen(256, 0);
  std::uint64_t inv = 0;
  for (int a : w) {
    for (int b = 1; b < a; ++b) inv += seen[b];
    ++seen[a];
  }
  return inv;
}

std::size_t OrderedSetPartition::ground_size() const {
  std::size_t n = 0;
  for (const auto& p : parts) n += p.size();
  return n;
}

bool OrderedSetPartition::valid() const {
  std::vector<int> all;
  for (const auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (all[i] != static_cast<int>(i) + 1) return false;
  return true;
}

OrderedSetPartition omega(const Word& w, int rank) {
  OrderedSetPartition out;
  out.parts.resize(rank);
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    if (w[pos] < 1 || w[pos] > rank) throw UsageError("letter outside alphabet in omega");
    out.parts[w[pos] - 1].push_back(static_cast<int>(pos) + 1);
  }
  return out;
}

int BraidMoveContext::kappa() const {
  int k = 0;
  for (int a : u)
    if (a > i && a <= j) ++k;
  return k;
}

int BraidMoveContext::mu() const {
  int k = 0;
  for (int a : v)
    if (a >= i && a < j) ++k;
  return k;
}

BraidMoveContext context_of(const Word& w, const BraidMove& move) {
  BraidMoveContext ctx;
  ctx.i = std::min(move.first, move.second);
  ctx.j = std::max(move.first, move.second);
  for (int p = 0; p < move.start; ++p) ctx.u.push_back(w[p]);
  for (std::size_t p = move.start + move.length; p < w.size(); ++p) ctx.v.push_back(w[p]);
  return ctx;
}

int theorem_a_ratio(const BraidMoveContext& ctx, int m_ij) {
  if (ctx.i >= ctx.j) throw UsageError("braid context needs i < j");
  if (m_ij < 2) throw UsageError("braid length must be at least 2");
  if (m_ij % 2 == 0) return (m_ij / 2) % 2 == 0 ? 1 : -1;
  return (ctx.kappa() + ctx.mu()) % 2 == 0 ? 1 : -1;
}

}  // namespace swl
