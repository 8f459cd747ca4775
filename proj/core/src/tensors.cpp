#include "swl/tensors.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

namespace swl {

// ------------------------------------------------------ ParameterTensor

ParameterTensor::ParameterTensor(int rows, int letters, int degree_bound)
    : rows_(rows), letters_(letters), d_(degree_bound) {
  if (rows < 1 || letters < 1 || degree_bound < 1) throw UsageError("parameter tensor dimensions must be positive");
  if (static_cast<long>(rows) * letters * degree_bound > 1'000'000) throw UsageError("parameter tensor too large");
  entries_.assign(static_cast<std::size_t>(rows) * letters * degree_bound, MPoly());
}

void ParameterTensor::check(int i, int s, int k) const {
  if (i < 0 || i >= rows_ || s < 1 || s > letters_ || k < 0 || k >= d_)
    throw UsageError("parameter tensor index (" + std::to_string(i) + "," + std::to_string(s) + "," + std::to_string(k) +
                     ") out of range");
}

const MPoly& ParameterTensor::at(int i, int s, int k) const {
  check(i, s, k);
  return entries_[static_cast<std::size_t>(i) * column_count() + column_index(s, k)];
}

void ParameterTensor::set(int i, int s, int k, MPoly value) {
  check(i, s, k);
  entries_[static_cast<std::size_t>(i) * column_count() + column_index(s, k)] = std::move(value);
}

PolyMatrix ParameterTensor::as_matrix() const {
  PolyMatrix m(rows_, std::vector<MPoly>(column_count()));
  for (int i = 0; i < rows_; ++i)
    for (int c = 0; c < column_count(); ++c) m[i][c] = entries_[static_cast<std::size_t>(i) * column_count() + c];
  return m;
}

bool ParameterTensor::is_rational() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const MPoly& p) { return p.is_constant(); });
}

ParameterTensor ParameterTensor::specialize(VarId v, const Rational& value) const {
  ParameterTensor out = *this;
  for (auto& e : out.entries_) e = e.substitute(v, MPoly(value));
  return out;
}

ParameterTensor ParameterTensor::random(int rows, int letters, int degree_bound, std::mt19937_64& rng, int max_num,
                                        int max_den) {
  ParameterTensor p(rows, letters, degree_bound);
  std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
  for (auto& e : p.entries_) {
    int a = num(rng);
    int b = den(rng);
    Rational q(a, b);
    q.canonicalize();
    e = MPoly(q);
  }
  return p;
}

// -------------------------------------------------------- model matrices

namespace {

void check_word_against(const Word& v, const ParameterTensor& p) {
  if (static_cast<int>(v.size()) != p.rows())
    throw UsageError("word length " + std::to_string(v.size()) + " differs from tensor rows " + std::to_string(p.rows()));
  for (int a : v)
    if (a < 1 || a > p.letters()) throw UsageError("letter " + std::to_string(a) + " not covered by the tensor");
}

MPoly determinant_of(const PolyMatrix& m) {
  bool constant = true;
  for (const auto& row : m)
    for (const auto& e : row) constant = constant && e.is_constant();
  if (!constant) return det_poly(m);
  QMatrix q(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) q(i, j) = m[i][j].constant_value();
  return MPoly(det(q));
}

}  // namespace

PolyMatrix model_matrix(const Word& v, const ParameterTensor& p) {
  check_word_against(v, p);
  const int n = p.rows();
  PolyMatrix m(n, std::vector<MPoly>(n));
  for (int l = 0; l < n; ++l) {
    VarId x = var::x(l + 1);
    for (int i = 0; i < n; ++i) {
      MPoly entry;
      for (int k = 0; k < p.degree_bound(); ++k) {
        const MPoly& c = p.at(i, v[l], k);
        if (!c.is_zero()) entry.add_scaled(c, 1, Monomial::of(x, k));
      }
      m[i][l] = std::move(entry);
    }
  }
  return m;
}

PolyMatrix coefficients_matrix(const Word& v, const ParameterTensor& p) {
  check_word_against(v, p);
  const int n = p.rows(), d = p.degree_bound();
  PolyMatrix c(n, std::vector<MPoly>(static_cast<std::size_t>(n) * d));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < d; ++k) c[i][static_cast<std::size_t>(j) * d + k] = p.at(i, v[j], k);
  return c;
}

PolyMatrix variables_matrix(int d, int n_positions) {
  PolyMatrix t(static_cast<std::size_t>(n_positions) * d, std::vector<MPoly>(n_positions));
  for (int j = 0; j < n_positions; ++j)
    for (int k = 0; k < d; ++k) t[static_cast<std::size_t>(j) * d + k][j] = MPoly::monomial(Monomial::of(var::x(j + 1), k));
  return t;
}

std::vector<ColumnSet> minor_support(const AbelianVector& alpha, int d) {
  const int n = static_cast<int>(alpha.size());
  for (int i = 0; i < n; ++i)
    if (alpha[i] > d)
      throw UsageError("letter " + std::to_string(i + 1) + " occurs " + std::to_string(alpha[i]) + " times, more than d = " +
                       std::to_string(d) + ": no valid minors");
  // Per letter, all c_i-subsets of {0..d-1} in lex order; then the product.
  std::vector<std::vector<std::vector<int>>> per_letter(n);
  for (int i = 0; i < n; ++i) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
      if (static_cast<int>(cur.size()) == alpha[i]) {
        per_letter[i].push_back(cur);
        return;
      }
      for (int k = start; k < d; ++k) {
        cur.push_back(k);
        rec(k + 1);
        cur.pop_back();
      }
    };
    rec(0);
  }
  std::vector<ColumnSet> out;
  ColumnSet cur;
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (const auto& choice : per_letter[i]) {
      for (int k : choice) cur.push_back(i * d + k);
      rec(i + 1);
      cur.resize(cur.size() - choice.size());
    }
  };
  rec(0);
  return out;
}

std::vector<Partition> standard_partitions(const ColumnSet& z, const AbelianVector& alpha, int d) {
  const int n = static_cast<int>(alpha.size());
  std::vector<std::vector<int>> r(n);
  for (int c : z) {
    int s = c / d;
    if (s < 0 || s >= n) throw UsageError("column " + std::to_string(c) + " outside the alphabet");
    r[s].push_back(c % d);
  }
  std::vector<Partition> out;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(r[i].size()) != alpha[i]) throw UsageError("column set does not match the abelian vector");
    std::sort(r[i].begin(), r[i].end(), std::greater<>());
    std::vector<int> lambda(r[i].size());
    const int c = alpha[i];
    for (int j = 0; j < c; ++j) lambda[j] = r[i][j] - (c - 1 - j);
    out.emplace_back(std::move(lambda));
  }
  return out;
}

MPoly minor_det(const ParameterTensor& p, const ColumnSet& z) {
  if (static_cast<int>(z.size()) != p.rows()) throw UsageError("a minor needs exactly N columns");
  PolyMatrix m(p.rows(), std::vector<MPoly>(z.size()));
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (z[j] < 0 || z[j] >= p.column_count()) throw UsageError("column index out of range");
    if (j && z[j] <= z[j - 1]) throw UsageError("column sets must be strictly increasing");
    int s = z[j] / p.degree_bound() + 1, k = z[j] % p.degree_bound();
    for (int i = 0; i < p.rows(); ++i) m[i][j] = p.at(i, s, k);
  }
  return determinant_of(m);
}

// ------------------------------------------------------------ Theorem B

std::string TheoremBCertificate::to_json() const {
  nlohmann::ordered_json j;
  j["word"] = v.to_string();
  j["sigma"] = sigma;
  nlohmann::ordered_json factors = nlohmann::ordered_json::array();
  for (auto [k, jj] : divisor_factors) factors.push_back("x" + std::to_string(k) + " - x" + std::to_string(jj));
  j["divisor_factors"] = factors;
  j["support_size"] = support_size;
  nlohmann::ordered_json terms_json = nlohmann::ordered_json::array();
  for (const auto& t : terms) {
    nlohmann::ordered_json tj;
    tj["columns"] = t.z;
    tj["minor"] = t.minor.to_string();
    nlohmann::ordered_json lam = nlohmann::ordered_json::array();
    for (const auto& l : t.lambda) lam.push_back(l.parts());
    tj["partitions"] = lam;
    tj["partial_schur"] = t.schur_product.to_string();
    terms_json.push_back(tj);
  }
  j["terms"] = terms_json;
  j["schur_sum"] = schur_sum.to_string();
  j["determinant"] = determinant.to_string();
  return j.dump(2) + "\n";
}

TheoremBCertificate det_via_theorem_B(const Word& v, const ParameterTensor& p) {
  check_word_against(v, p);
  TheoremBCertificate cert;
  cert.v = v;
  cert.sigma = s_sign(v);
  for (std::size_t k = 0; k < v.size(); ++k)
    for (std::size_t j = 0; j < k; ++j)
      if (v[j] == v[k]) cert.divisor_factors.push_back({static_cast<int>(k) + 1, static_cast<int>(j) + 1});
  cert.divisor = vandermonde_divisor(v);
  AbelianVector alpha = abelian_vector(v, p.letters());
  const int d = p.degree_bound();
  if (alpha.max_entry() > d) {
    // Equal columns are forced: every minor in the Binet-Cauchy sum vanishes.
    return cert;
  }
  OrderedSetPartition parts = omega(v, p.letters());
  auto support = minor_support(alpha, d);
  cert.support_size = support.size();
  for (const auto& z : support) {
    MPoly minor = minor_det(p, z);
    if (minor.is_zero()) continue;
    TheoremBTerm term;
    term.z = z;
    term.lambda = standard_partitions(z, alpha, d);
    term.schur_product = partial_schur(term.lambda, parts);
    term.minor = std::move(minor);
    cert.schur_sum += term.minor * term.schur_product;
    cert.terms.push_back(std::move(term));
  }
  cert.determinant = cert.divisor * cert.schur_sum;
  if (cert.sigma < 0) cert.determinant = -cert.determinant;
  return cert;
}

MPoly coefficient_minor(const Word& v, const ParameterTensor& p, const std::vector<int>& r) {
  check_word_against(v, p);
  if (r.size() != v.size()) throw UsageError("need one degree per position");
  PolyMatrix m(p.rows(), std::vector<MPoly>(v.size()));
  for (std::size_t j = 0; j < v.size(); ++j)
    for (int i = 0; i < p.rows(); ++i) m[i][j] = p.at(i, v[j], r[j]);
  return determinant_of(m);
}

int pi_sign(const Word& v, const std::vector<int>& r) {
  int sign = 1;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      if (v[a] == v[b] && r[a] > r[b]) sign = -sign;
  return sign;
}

ColumnSet column_set_of(const Word& v, const ParameterTensor& p, const std::vector<int>& r) {
  ColumnSet z;
  for (std::size_t j = 0; j < v.size(); ++j) z.push_back(p.column_index(v[j], r[j]));
  std::sort(z.begin(), z.end());
  return z;
}

MPoly determinant_via_zv(const Word& v, const ParameterTensor& p) {
  check_word_against(v, p);
  const int n = p.rows(), d = p.degree_bound();
  std::vector<int> r(n, 0);
  std::vector<Term> rational_terms;
  MPoly symbolic;
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      MPoly c = coefficient_minor(v, p, r);
      if (c.is_zero()) return;
      std::vector<Monomial::Factor> f;
      for (int l = 0; l < n; ++l)
        if (r[l]) f.push_back({var::x(l + 1), static_cast<std::uint16_t>(r[l])});
      Monomial mono(std::move(f));
      if (c.is_constant()) {
        rational_terms.push_back(Term{std::move(mono), c.constant_value()});
      } else {
        symbolic.add_scaled(c, 1, mono);
      }
      return;
    }
    for (int k = 0; k < d; ++k) {
      bool clash = false;
      for (int l = 0; l < j && !clash; ++l) clash = v[l] == v[j] && r[l] == k;
      if (clash) continue;
      r[j] = k;
      rec(j + 1);
    }
  };
  rec(0);
  return MPoly::from_terms(std::move(rational_terms)) + symbolic;
}

// --------------------------------------------------- Schur sum templates

namespace {
constexpr VarId kSlotBase = 3000;
}

Rational SchurSumTemplate::evaluate(const Word& v, const std::vector<Rational>& x) const {
  if (x.size() != v.size()) throw UsageError("need one x value per position");
  if (abelian_vector(v, static_cast<int>(alpha.size())) != alpha) throw UsageError("word does not have the template's abelian vector");
  std::map<VarId, Rational> values;
  std::vector<int> seen(alpha.size(), 0);
  for (std::size_t j = 0; j < v.size(); ++j) {
    int i = v[j] - 1;
    values[static_cast<VarId>(kSlotBase + slot_base[i] + seen[i]++)] = x[j];
  }
  return polynomial.evaluate(values);
}

SchurSumTemplate schur_sum_template(const AbelianVector& alpha, const ParameterTensor& p) {
  SchurSumTemplate t;
  t.alpha = alpha;
  t.d = p.degree_bound();
  const int n = static_cast<int>(alpha.size());
  if (n != p.letters()) throw UsageError("abelian vector length differs from the tensor's letters");
  t.slot_base.assign(n, 0);
  for (int i = 1; i < n; ++i) t.slot_base[i] = t.slot_base[i - 1] + alpha[i - 1];
  if (alpha.max_entry() > t.d) return t;
  for (const auto& z : minor_support(alpha, t.d)) {
    MPoly minor = minor_det(p, z);
    if (minor.is_zero()) continue;
    ++t.nonzero_minors;
    auto lambdas = standard_partitions(z, alpha, t.d);
    MPoly prod = minor;
    for (int i = 0; i < n; ++i) {
      if (lambdas[i].is_zero()) continue;
      std::vector<VarId> vars;
      for (int s = 0; s < alpha[i]; ++s) vars.push_back(static_cast<VarId>(kSlotBase + t.slot_base[i] + s));
      prod *= schur(lambdas[i], vars);
    }
    t.polynomial += prod;
  }
  return t;
}

std::optional<std::string> model_sign_hypothesis_violation(const Word& v, const std::vector<Rational>& x) {
  if (x.size() != v.size()) return "need " + std::to_string(v.size()) + " x values, got " + std::to_string(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] <= 0) return "x_" + std::to_string(i + 1) + " = " + to_string(x[i]) + " is not positive";
  for (std::size_t k = 0; k < v.size(); ++k)
    for (std::size_t j = 0; j < k; ++j)
      if (v[j] == v[k] && !(x[j] < x[k]))
        return "positions " + std::to_string(j + 1) + " and " + std::to_string(k + 1) + " carry the same letter but x_" +
               std::to_string(j + 1) + " >= x_" + std::to_string(k + 1);
  return std::nullopt;
}

ModelSign sign_of_model_det(const Word& v, const ParameterTensor& p, const std::vector<Rational>& x) {
  check_word_against(v, p);
  if (auto why = model_sign_hypothesis_violation(v, x)) throw UsageError(*why);
  if (!p.is_rational()) throw UsageError("the tensor still has symbolic parameters; specialise them first");
  ModelSign out;
  SchurSumTemplate t = schur_sum_template(abelian_vector(v, p.letters()), p);
  out.schur_sum = t.evaluate(v, x);
  out.sign = s_sign(v) * sgn(out.schur_sum);
  std::map<VarId, Rational> values;
  for (std::size_t j = 0; j < x.size(); ++j) values[var::x(static_cast<int>(j) + 1)] = x[j];
  out.determinant_value = det(evaluate(model_matrix(v, p), values));
  if (sgn(out.determinant_value) != out.sign)
    throw InvariantViolation("sign from the Schur sum (" + std::to_string(out.sign) + ") disagrees with the determinant " +
                             to_string(out.determinant_value) + " for " + v.to_string());
  return out;
}

// ------------------------------------------------------- named tensors

BclTensor parse_bcl_tensor(const std::string& name) {
  if (name == "A1") return BclTensor::A1;
  if (name == "A2") return BclTensor::A2;
  if (name == "A3:123" || name == "A3") return BclTensor::A3_123;
  if (name == "A3:213") return BclTensor::A3_213;
  throw UsageError("unknown counting tensor '" + name + "' (A1, A2, A3:123, A3:213)");
}

std::string bcl_tensor_name(BclTensor kind) {
  switch (kind) {
    case BclTensor::A1: return "A1";
    case BclTensor::A2: return "A2";
    case BclTensor::A3_123: return "A3:123";
    case BclTensor::A3_213: return "A3:213";
  }
  return "?";
}

Word bcl_tensor_word(BclTensor kind) {
  switch (kind) {
    case BclTensor::A1: return Word{1};
    case BclTensor::A2: return Word{1, 2};
    case BclTensor::A3_123: return Word{1, 2, 3};
    case BclTensor::A3_213: return Word{2, 1, 3};
  }
  return {};
}

std::string bcl_tensor_type(BclTensor kind) {
  switch (kind) {
    case BclTensor::A1: return "A1";
    case BclTensor::A2: return "A2";
    default: return "A3";
  }
}

namespace {

ParameterTensor from_rows(int letters, int d, const std::vector<std::vector<MPoly>>& rows) {
  ParameterTensor p(static_cast<int>(rows.size()), letters, d);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != letters * d) throw InvariantViolation("bad hard-coded tensor row");
    for (int c = 0; c < letters * d; ++c) p.set(static_cast<int>(i), c / d + 1, c % d, rows[i][c]);
  }
  return p;
}

}  // namespace

ParameterTensor bcl_parameter_tensor(BclTensor kind, std::optional<Rational> m_value) {
  const MPoly m = MPoly::variable(var::m);
  const MPoly one(1), zero;
  const MPoly half(Rational(1, 2));
  ParameterTensor p;
  switch (kind) {
    case BclTensor::A1:
      p = from_rows(1, 1, {{one}});
      break;
    case BclTensor::A2:
      p = from_rows(2, 2, {
                              {one, zero, zero, zero},
                              {m, -one, zero, one},
                              {zero, zero, one, zero},
                          });
      break;
    case BclTensor::A3_123: {
      MPoly binom_m2 = (m + 2) * (m + 1) * Rational(1, 2);
      p = from_rows(3, 3, {
                              {one, zero, zero, zero, zero, zero, zero, zero, zero},
                              {zero, one, zero, m + 1, -one, zero, zero, zero, zero},
                              {zero, half, half, zero, m + 1, -one, binom_m2, -m - MPoly(Rational(3, 2)), half},
                              {zero, zero, zero, one, zero, zero, zero, zero, zero},
                              {zero, zero, zero, zero, one, zero, m + 1, -one, zero},
                              {zero, zero, zero, zero, zero, zero, one, zero, zero},
                          });
      break;
    }
    case BclTensor::A3_213: {
      MPoly binom_m1 = (m + 1) * m * Rational(1, 2);
      p = from_rows(3, 3, {
                              {zero, zero, zero, one, zero, zero, zero, zero, zero},
                              {m + 1, -one, zero, zero, one, zero, zero, zero, zero},
                              {zero, zero, zero, zero, one, zero, m + 1, -one, zero},
                              {binom_m1, half, -half, zero, zero, one, binom_m1, half, -half},
                              {zero, zero, zero, zero, zero, zero, one, zero, zero},
                              {one, zero, zero, zero, zero, zero, zero, zero, zero},
                          });
      break;
    }
  }
  if (m_value) p = p.specialize(var::m, *m_value);
  return p;
}

ParameterTensor example_model4_tensor() {
  ParameterTensor p(4, 2, 3);
  p.set(0, 1, 0, 1);
  p.set(2, 1, 1, -1);
  p.set(3, 1, 2, 1);
  p.set(1, 2, 0, 1);
  p.set(2, 2, 1, 1);
  p.set(3, 2, 2, -1);
  return p;
}

Word dual_cauchy_word(int a, int b) {
  if (a < 0 || b < 0 || a + b < 1) throw UsageError("dual Cauchy needs a, b >= 0 with a + b >= 1");
  Word w;
  for (int i = 0; i < a; ++i) w.push_back(1);
  for (int j = 0; j < b; ++j) w.push_back(2);
  return w;
}

ParameterTensor dual_cauchy_tensor(int a, int b) {
  dual_cauchy_word(a, b);
  const int n = a + b;
  if (n > 12) throw UsageError("dual Cauchy example limited to a + b <= 12");
  ParameterTensor p(n, 2, n);
  for (int k = 0; k < n; ++k) p.set(k, 1, k, 1);
  for (int i = 0; i < n; ++i) {
    int k = n - 1 - i;  // row i+1 carries degree N-(i+1)
    p.set(i, 2, k, k % 2 == 0 ? 1 : -1);
  }
  return p;
}

MPoly to_dual_cauchy_variables(const MPoly& p, int a, int b) {
  std::map<VarId, VarId> renaming;
  for (int j = 1; j <= b; ++j) renaming[var::x(a + j)] = var::y(j);
  return p.rename(renaming);
}

MPoly dual_cauchy_product(int a, int b) {
  MPoly out(1);
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) out *= MPoly(1) + MPoly::variable(var::x(i)) * MPoly::variable(var::y(j));
  return out;
}

MPoly dual_cauchy_schur_sum(int a, int b) {
  std::vector<VarId> xs, ys;
  for (int i = 1; i <= a; ++i) xs.push_back(var::x(i));
  for (int j = 1; j <= b; ++j) ys.push_back(var::y(j));
  MPoly out;
  for (const auto& lambda : partitions_in_box(a, b)) {
    Partition dual = conjugate(lambda, b);
    MPoly sx = a ? schur(lambda, xs) : MPoly(1);
    MPoly sy = b ? schur(dual, ys) : MPoly(1);
    out += sx * sy;
  }
  return out;
}

}  // namespace swl
