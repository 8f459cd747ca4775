#include "swl/complexes.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "json.hpp"

#include "swl/parallel.hpp"
#include "swl/words.hpp"

namespace swl {

std::vector<Occurrence> occurrences(const CoxeterSystem& sys, const Word& p, Budget budget) {
  check_letters(sys, p);
  const int n = sys.longest_length();
  const int m = static_cast<int>(p.size());
  BudgetClock clock(budget);
  std::vector<Occurrence> out;
  std::vector<int> chosen;
  Word prefix;
  // DFS over increasing positions keeping the chosen prefix reduced.
  std::function<void(int, const Element&)> rec = [&](int start, const Element& g) {
    if (static_cast<int>(chosen.size()) == n) {
      clock.tick("occurrence enumeration");
      out.push_back(Occurrence{chosen, prefix});
      return;
    }
    int still_needed = n - static_cast<int>(chosen.size());
    for (int i = start; i + still_needed <= m; ++i) {
      int a = p[i];
      if (sys.is_right_descent(g, a)) continue;
      chosen.push_back(i + 1);
      prefix.push_back(a);
      rec(i + 1, sys.mul_right(g, a));
      chosen.pop_back();
      prefix.pop_back();
    }
  };
  rec(0, sys.identity());
  return out;
}

Word SubwordComplex::combinatorial_type(const std::vector<int>& facet) const {
  std::vector<int> rest;
  std::set<int> f(facet.begin(), facet.end());
  for (int i = 1; i <= n_positions; ++i)
    if (!f.count(i)) rest.push_back(i);
  return p.at_positions(rest);
}

AbelianVector SubwordComplex::facet_abelian_vector(const std::vector<int>& facet, int rank) const {
  return abelian_vector(combinatorial_type(facet), rank);
}

std::string SubwordComplex::to_json() const {
  nlohmann::ordered_json j;
  j["type"] = type;
  j["word"] = p.to_string();
  j["facets"] = facets;
  j["non_vertices"] = non_vertices;
  return j.dump(2) + "\n";
}

SubwordComplex build_complex(const CoxeterSystem& sys, const Word& p, Budget budget) {
  SubwordComplex c;
  c.type = sys.name();
  c.p = p;
  c.n_positions = static_cast<int>(p.size());
  std::set<int> used;
  for (const auto& occ : occurrences(sys, p, budget)) {
    std::vector<int> facet;
    std::set<int> in(occ.positions.begin(), occ.positions.end());
    for (int i = 1; i <= c.n_positions; ++i) {
      if (in.count(i)) continue;
      facet.push_back(i);
      used.insert(i);
    }
    c.facets.push_back(std::move(facet));
  }
  std::sort(c.facets.begin(), c.facets.end());
  c.facets.erase(std::unique(c.facets.begin(), c.facets.end()), c.facets.end());
  for (int i = 1; i <= c.n_positions; ++i)
    if (!used.count(i)) c.non_vertices.push_back(i);
  return c;
}

GaleMatrixData curve_gale_data(const ParameterTensor& tensor, const Word& p, const std::vector<Rational>& x) {
  if (x.size() != p.size()) throw UsageError("need one x value per letter of p");
  GaleMatrixData data;
  data.p = p;
  data.x = x;
  data.B = QMatrix(tensor.rows(), p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > tensor.letters()) throw UsageError("letter of p not covered by the tensor");
    for (int k = 0; k < tensor.rows(); ++k) {
      Rational value = 0, power = 1;
      for (int e = 0; e < tensor.degree_bound(); ++e) {
        value += tensor.at(k, p[i], e).constant_value() * power;
        power *= x[i];
      }
      data.B(k, i) = value;
    }
  }
  return data;
}

Word cyclic_b2_word(int k) {
  if (k < 0) throw UsageError("k must be non-negative");
  Word w;
  for (int i = 0; i < k; ++i) {
    w.push_back(1);
    w.push_back(2);
  }
  return w + Word{1, 2, 1, 2};
}

std::string Verdict::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["verdict"] = yes ? "yes" : "no";
  j["condition"] = condition;
  j["occurrences_checked"] = occurrences_checked;
  j["failures"] = failures;
  if (witness) {
    j["witness"] = {{"word", witness->v.to_string()},
                    {"positions", witness->positions},
                    {"expected_sign", witness->expected},
                    {"observed_sign", witness->observed},
                    {"value", to_string(witness->value)}};
  }
  nlohmann::ordered_json cls = nlohmann::ordered_json::array();
  for (const auto& c : classes)
    cls.push_back({{"abelian_vector", c.alpha.counts()}, {"occurrences", c.occurrences}, {"failures", c.failures}});
  j["classes"] = cls;
  return j.dump(2) + "\n";
}

namespace {

void record(Verdict& verdict, std::map<AbelianVector, ClassSummary>& classes, const Occurrence& occ, int rank,
            int expected, const Rational& value) {
  AbelianVector alpha = abelian_vector(occ.word, rank);
  auto& summary = classes[alpha];
  summary.alpha = alpha;
  ++summary.occurrences;
  ++verdict.occurrences_checked;
  int observed = sign_of(value);
  if (observed == expected) return;
  ++summary.failures;
  ++verdict.failures;
  if (verdict.yes) {
    verdict.yes = false;
    verdict.condition = observed == 0 ? (verdict.check == "signature" ? "basis" : "sum-zero") : "sign";
    verdict.witness = SignWitness{occ.word, occ.positions, expected, observed, value};
  }
}

void finish(Verdict& verdict, std::map<AbelianVector, ClassSummary>& classes) {
  if (verdict.occurrences_checked == 0) {
    verdict.yes = false;
    verdict.condition = "no-occurrence";
  }
  for (auto it = classes.rbegin(); it != classes.rend(); ++it) verdict.classes.push_back(it->second);
}

}  // namespace

Verdict check_signature_matrix(const GaleMatrixData& data, const CoxeterSystem& sys, TSignOptions options) {
  const int n = sys.longest_length();
  if (static_cast<int>(data.B.rows()) != n) throw UsageError("B must have N = " + std::to_string(n) + " rows");
  if (data.B.cols() != data.p.size()) throw UsageError("B must have one column per letter of p");
  SignAssignment tau = t_sign(sys, options);
  auto occ = occurrences(sys, data.p);
  std::vector<Rational> dets(occ.size());
  parallel_for(occ.size(), [&](std::size_t i) {
    std::vector<int> cols;
    for (int pos : occ[i].positions) cols.push_back(pos - 1);
    dets[i] = det(data.B.select_columns(cols));
  });
  Verdict verdict;
  verdict.check = "signature";
  verdict.condition = "ok";
  std::map<AbelianVector, ClassSummary> classes;
  for (std::size_t i = 0; i < occ.size(); ++i) record(verdict, classes, occ[i], sys.rank(), tau.at(occ[i].word), dets[i]);
  finish(verdict, classes);
  return verdict;
}

ParameterTensor extract_parameter_tensor(const GaleMatrixData& data, int letters) {
  const Word& p = data.p;
  if (data.B.cols() != p.size() || data.x.size() != p.size()) throw UsageError("B, p and x sizes disagree");
  if (p.max_letter() > letters) throw UsageError("p uses letters beyond the alphabet");
  std::vector<std::vector<int>> cls(letters);
  for (std::size_t i = 0; i < p.size(); ++i) cls[p[i] - 1].push_back(static_cast<int>(i));
  int d = 1;
  for (const auto& c : cls) d = std::max<int>(d, c.size());
  const int n = static_cast<int>(data.B.rows());
  ParameterTensor tensor(n, letters, d);
  for (int j = 0; j < letters; ++j) {
    const auto& idx = cls[j];
    const std::size_t c = idx.size();
    if (c == 0) continue;
    for (std::size_t a = 0; a < c; ++a)
      for (std::size_t b = a + 1; b < c; ++b)
        if (data.x[idx[a]] == data.x[idx[b]])
          throw UsageError("positions " + std::to_string(idx[a] + 1) + " and " + std::to_string(idx[b] + 1) +
                           " of letter " + std::to_string(j + 1) + " share the x-value " + to_string(data.x[idx[a]]));
    // Solve the Vandermonde system for all N coordinates at once.
    QMatrix aug(c, c + n);
    for (std::size_t t = 0; t < c; ++t) {
      Rational power = 1;
      for (std::size_t e = 0; e < c; ++e) {
        aug(t, e) = power;
        power *= data.x[idx[t]];
      }
      for (int k = 0; k < n; ++k) aug(t, c + k) = data.B(k, idx[t]);
    }
    Rref r = rref(aug);
    for (std::size_t e = 0; e < c; ++e)
      for (int k = 0; k < n; ++k) tensor.set(k, j + 1, static_cast<int>(e), MPoly(r.matrix(e, c + k)));
  }
  GaleMatrixData back = curve_gale_data(tensor, p, data.x);
  if (!(back.B == data.B)) throw InvariantViolation("interpolated tensor does not reproduce the Gale matrix");
  return tensor;
}

Verdict check_theorem_C(const ParameterTensor& tensor, const Word& p, const std::vector<Rational>& x,
                        const CoxeterSystem& sys, TSignOptions options) {
  if (tensor.rows() != sys.longest_length()) throw UsageError("tensor must have N rows");
  if (tensor.letters() < sys.rank()) throw UsageError("tensor must cover every generator");
  if (!tensor.is_rational()) throw UsageError("tensor has symbolic parameters; specialise them first");
  if (auto why = model_sign_hypothesis_violation(p, x)) throw UsageError(*why);
  SignAssignment s_and_t = punctual_sign(sys, options);
  auto occ = occurrences(sys, p);
  std::map<AbelianVector, SchurSumTemplate> templates;
  for (const auto& o : occ) {
    AbelianVector alpha = abelian_vector(o.word, tensor.letters());
    if (!templates.count(alpha)) templates.emplace(alpha, schur_sum_template(alpha, tensor));
  }
  std::vector<Rational> values(occ.size());
  parallel_for(occ.size(), [&](std::size_t i) {
    std::vector<Rational> xz;
    for (int pos : occ[i].positions) xz.push_back(x[pos - 1]);
    values[i] = templates.at(abelian_vector(occ[i].word, tensor.letters())).evaluate(occ[i].word, xz);
  });
  Verdict verdict;
  verdict.check = "theorem-c";
  verdict.condition = "ok";
  std::map<AbelianVector, ClassSummary> classes;
  for (std::size_t i = 0; i < occ.size(); ++i)
    record(verdict, classes, occ[i], sys.rank(), s_and_t.at(occ[i].word), values[i]);
  finish(verdict, classes);
  return verdict;
}

// ------------------------------------------------------------ chirotopes

int ChirotopeData::chi(const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != rank) throw UsageError("chirotope tuples have exactly r entries");
  std::vector<int> sorted = tuple;
  int sign = 1;
  // insertion sort counting transpositions
  for (std::size_t i = 1; i < sorted.size(); ++i)
    for (std::size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
      std::swap(sorted[j - 1], sorted[j]);
      sign = -sign;
    }
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1]) return 0;
  auto it = signs.find(sorted);
  if (it == signs.end()) throw UsageError("chirotope value undefined for this tuple");
  return sign * it->second;
}

std::vector<std::vector<int>> ChirotopeData::bases() const {
  std::vector<std::vector<int>> out;
  for (const auto& [t, s] : signs)
    if (s) out.push_back(t);
  return out;
}

std::string ChirotopeData::to_json() const {
  nlohmann::ordered_json j;
  j["rank"] = rank;
  j["ground"] = ground;
  nlohmann::ordered_json s = nlohmann::ordered_json::array();
  for (const auto& [t, v] : signs) s.push_back({{"tuple", t}, {"sign", v}});
  j["signs"] = s;
  return j.dump(2) + "\n";
}

ChirotopeData chirotope_from_matrix(const QMatrix& a) {
  ChirotopeData out;
  out.rank = static_cast<int>(a.rows());
  out.ground = static_cast<int>(a.cols());
  if (out.rank > out.ground) return out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(cur.size()) == out.rank) {
      std::vector<int> cols;
      for (int c : cur) cols.push_back(c - 1);
      out.signs[cur] = sign_of(det(a.select_columns(cols)));
      return;
    }
    for (int i = start; i <= out.ground; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

bool three_term_relation_holds(const ChirotopeData& chi, const std::vector<int>& sigma, int a, int b, int c, int d) {
  auto with = [&](int u, int v) {
    std::vector<int> t = sigma;
    t.push_back(u);
    t.push_back(v);
    return chi.chi(t);
  };
  int t1 = with(a, b) * with(c, d);
  int t2 = -with(a, c) * with(b, d);
  int t3 = with(a, d) * with(b, c);
  bool has_pos = t1 > 0 || t2 > 0 || t3 > 0;
  bool has_neg = t1 < 0 || t2 < 0 || t3 < 0;
  return (has_pos && has_neg) || (t1 == 0 && t2 == 0 && t3 == 0);
}

std::optional<std::string> check_chirotope_axioms(const ChirotopeData& chi, const QMatrix& a, std::mt19937_64& rng,
                                                  int samples) {
  if (chi.rank < 1 || chi.ground < chi.rank) return std::nullopt;
  std::uniform_int_distribution<int> pick(1, chi.ground);
  for (int s = 0; s < samples; ++s) {
    std::vector<int> tuple(chi.rank);
    for (auto& t : tuple) t = pick(rng);
    std::vector<int> cols;
    for (int t : tuple) cols.push_back(t - 1);
    if (chi.chi(tuple) != sign_of(det(a.select_columns(cols)))) {
      std::string msg = "alternating law fails on (";
      for (std::size_t i = 0; i < tuple.size(); ++i) msg += (i ? "," : "") + std::to_string(tuple[i]);
      return msg + ")";
    }
    if (chi.ground < chi.rank + 2 || chi.rank < 2) continue;
    // distinct sigma of size r-2 and four further elements
    std::vector<int> ground(chi.ground);
    std::iota(ground.begin(), ground.end(), 1);
    std::shuffle(ground.begin(), ground.end(), rng);
    std::vector<int> sigma(ground.begin(), ground.begin() + (chi.rank - 2));
    int a1 = ground[chi.rank - 2], b1 = ground[chi.rank - 1], c1 = ground[chi.rank], d1 = ground[chi.rank + 1];
    if (!three_term_relation_holds(chi, sigma, a1, b1, c1, d1))
      return "three-term relation fails for a=" + std::to_string(a1) + " b=" + std::to_string(b1) +
             " c=" + std::to_string(c1) + " d=" + std::to_string(d1);
  }
  return std::nullopt;
}

QMatrix gale_transform(const QMatrix& a) {
  if (rank(a) != a.rows()) throw UsageError("Gale transform needs a matrix of full row rank");
  return kernel_basis(a);
}

}  // namespace swl
