#include "swl/schur.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace swl {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw UsageError("partition parts must be non-negative");
    if (i && parts_[i] > parts_[i - 1]) throw UsageError("partition parts must be weakly decreasing: " + to_string());
  }
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

bool Partition::is_zero() const { return size() == 0; }

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Partition conjugate(const Partition& lambda, std::size_t length) {
  std::vector<int> out(length, 0);
  for (std::size_t c = 0; c < length; ++c) {
    int count = 0;
    for (int p : lambda.parts())
      if (p > static_cast<int>(c)) ++count;
    out[c] = count;
  }
  return Partition(std::move(out));
}

std::vector<Partition> partitions_in_box(std::size_t length, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur(length, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int bound) {
    if (i == length) {
      out.emplace_back(cur);
      return;
    }
    for (int p = bound; p >= 0; --p) {
      cur[i] = p;
      rec(i + 1, p);
    }
  };
  rec(0, max_part);
  return out;
}

MPoly vandermonde(const std::vector<VarId>& vars) {
  MPoly out(1);
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j) out *= MPoly::variable(vars[j]) - MPoly::variable(vars[i]);
  return out;
}

PolyMatrix vandermonde_matrix(const std::vector<VarId>& vars) {
  const std::size_t d = vars.size();
  PolyMatrix m(d, std::vector<MPoly>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m[i][j] = MPoly::monomial(Monomial::of(vars[j], static_cast<unsigned>(i)));
  return m;
}

MPoly bialternant(const Partition& lambda, const std::vector<VarId>& vars) {
  const std::size_t d = vars.size();
  if (lambda.length() != d) throw UsageError("partition length " + std::to_string(lambda.length()) +
                                             " does not match " + std::to_string(d) + " variables");
  PolyMatrix m(d, std::vector<MPoly>(d));
  for (std::size_t i = 0; i < d; ++i) {
    unsigned e = static_cast<unsigned>(i + lambda[d - 1 - i]);
    for (std::size_t j = 0; j < d; ++j) m[i][j] = MPoly::monomial(Monomial::of(vars[j], e));
  }
  return det_poly(m);
}

MPoly schur(const Partition& lambda, const std::vector<VarId>& vars) {
  if (lambda.length() != vars.size()) throw UsageError("partition length does not match variable count");
  if (lambda.is_zero()) return MPoly(1);
  static std::mutex mutex;
  static std::map<std::pair<std::vector<int>, std::vector<VarId>>, MPoly> cache;
  auto key = std::make_pair(lambda.parts(), vars);
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  MPoly q = bialternant(lambda, vars);
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      q = exact_divide(q, MPoly::variable(vars[j]) - MPoly::variable(vars[i]));
  std::lock_guard<std::mutex> lock(mutex);
  if (cache.size() > 200000) cache.clear();
  cache.emplace(std::move(key), q);
  return q;
}

MPoly schur_by_tableaux(const Partition& lambda, const std::vector<VarId>& vars) {
  std::vector<int> shape;
  for (int p : lambda.parts())
    if (p > 0) shape.push_back(p);
  const int letters = static_cast<int>(vars.size());
  if (static_cast<int>(shape.size()) > letters) return MPoly();
  std::vector<std::pair<int, int>> cells;  // row-major fill order
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.push_back({static_cast<int>(r), c});
  std::vector<std::vector<int>> t(shape.size());
  for (std::size_t r = 0; r < shape.size(); ++r) t[r].assign(shape[r], 0);
  std::vector<int> content(letters, 0);
  std::vector<Term> terms;
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      std::vector<Monomial::Factor> f;
      for (int i = 0; i < letters; ++i)
        if (content[i]) f.push_back({vars[i], static_cast<std::uint16_t>(content[i])});
      terms.push_back(Term{Monomial(std::move(f)), 1});
      return;
    }
    auto [r, c] = cells[k];
    int lo = 0;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);          // rows weakly increase
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);      // columns strictly increase
    for (int v = lo; v < letters; ++v) {
      t[r][c] = v;
      ++content[v];
      fill(k + 1);
      --content[v];
    }
  };
  fill(0);
  return MPoly::from_terms(std::move(terms));
}

MPoly partial_schur(const std::vector<Partition>& lambdas, const OrderedSetPartition& parts) {
  if (lambdas.size() != parts.parts.size()) throw UsageError("partial Schur: number of partitions and parts differ");
  MPoly out(1);
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    if (lambdas[i].length() != parts.parts[i].size())
      throw UsageError("partial Schur: partition " + lambdas[i].to_string() + " does not fit part " + std::to_string(i + 1));
    if (parts.parts[i].empty() || lambdas[i].is_zero()) continue;
    std::vector<VarId> vars;
    for (int p : parts.parts[i]) vars.push_back(var::x(p));
    out *= schur(lambdas[i], vars);
  }
  return out;
}

MPoly vandermonde_divisor(const Word& v) {
  MPoly out(1);
  for (std::size_t k = 0; k < v.size(); ++k)
    for (std::size_t j = 0; j < k; ++j)
      if (v[j] == v[k]) out *= MPoly::variable(var::x(static_cast<int>(k) + 1)) - MPoly::variable(var::x(static_cast<int>(j) + 1));
  return out;
}

Rational vandermonde_divisor_value(const Word& v, const std::vector<Rational>& x) {
  if (x.size() != v.size()) throw UsageError("need one x value per position");
  Rational out = 1;
  for (std::size_t k = 0; k < v.size(); ++k)
    for (std::size_t j = 0; j < k; ++j)
      if (v[j] == v[k]) out *= x[k] - x[j];
  return out;
}

}  // namespace swl
