#include "swl/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "json.hpp"

namespace swl {

// ------------------------------------------------------------ variables

std::string var::name(VarId id) {
  if (id < 1000) return "x" + std::to_string(id + 1);
  if (id < 2000) return "y" + std::to_string(id - 1000 + 1);
  if (id == var::m) return "m";
  return "z" + std::to_string(id);
}

VarId var::parse(std::string_view name) {
  if (name == "m") return var::m;
  if (name.size() < 2) throw UsageError("bad variable '" + std::string(name) + "'");
  long idx = 0;
  for (char c : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw UsageError("bad variable '" + std::string(name) + "'");
    idx = idx * 10 + (c - '0');
    if (idx > 65535) throw UsageError("variable index too large in '" + std::string(name) + "'");
  }
  switch (name[0]) {
    case 'x':
      if (idx < 1 || idx > 1000) break;
      return var::x(static_cast<int>(idx));
    case 'y':
      if (idx < 1 || idx > 1000) break;
      return var::y(static_cast<int>(idx));
    case 'z':
      if (idx <= var::m) break;
      return static_cast<VarId>(idx);
    default:
      break;
  }
  throw UsageError("bad variable '" + std::string(name) + "'");
}

// ------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  for (const auto& [v, e] : factors) {
    if (e == 0) continue;
    if (!factors_.empty() && factors_.back().first == v) {
      factors_.back().second = static_cast<std::uint16_t>(factors_.back().second + e);
    } else {
      factors_.push_back({v, e});
    }
    degree_ += e;
  }
}

Monomial Monomial::of(VarId v, unsigned exponent) {
  Monomial m;
  if (exponent) {
    m.factors_.push_back({v, static_cast<std::uint16_t>(exponent)});
    m.degree_ = exponent;
  }
  return m;
}

unsigned Monomial::exponent(VarId v) const {
  for (const auto& [w, e] : factors_)
    if (w == v) return e;
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  std::size_t i = 0, j = 0;
  while (i < factors_.size() || j < other.factors_.size()) {
    if (j == other.factors_.size() || (i < factors_.size() && factors_[i].first < other.factors_[j].first)) {
      out.factors_.push_back(factors_[i++]);
    } else if (i == factors_.size() || other.factors_[j].first < factors_[i].first) {
      out.factors_.push_back(other.factors_[j++]);
    } else {
      out.factors_.push_back({factors_[i].first, static_cast<std::uint16_t>(factors_[i].second + other.factors_[j].second)});
      ++i;
      ++j;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  std::size_t j = 0;
  for (const auto& [v, e] : factors_) {
    while (j < other.factors_.size() && other.factors_[j].first < v) ++j;
    if (j == other.factors_.size() || other.factors_[j].first != v || other.factors_[j].second < e) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out;
  std::size_t i = 0;
  for (const auto& [v, e] : other.factors_) {
    unsigned sub = 0;
    if (i < factors_.size() && factors_[i].first == v) sub = factors_[i++].second;
    if (e > sub) out.factors_.push_back({v, static_cast<std::uint16_t>(e - sub)});
  }
  out.degree_ = other.degree_ - degree_;
  return out;
}

std::string Monomial::to_string() const {
  std::string out;
  for (const auto& [v, e] : factors_) {
    if (!out.empty()) out += "*";
    out += var::name(v);
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

int compare(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ > b.degree_ ? 1 : -1;
  std::size_t i = 0;
  for (; i < a.factors_.size() && i < b.factors_.size(); ++i) {
    const auto& fa = a.factors_[i];
    const auto& fb = b.factors_[i];
    if (fa.first != fb.first) return fa.first < fb.first ? 1 : -1;
    if (fa.second != fb.second) return fa.second > fb.second ? 1 : -1;
  }
  if (i < a.factors_.size()) return 1;
  if (i < b.factors_.size()) return -1;
  return 0;
}

// ---------------------------------------------------------------- MPoly

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_.push_back(Term{Monomial(), c});
}

MPoly MPoly::variable(VarId v) { return monomial(Monomial::of(v), 1); }

MPoly MPoly::monomial(const Monomial& m, const Rational& c) {
  MPoly p;
  if (c != 0) p.terms_.push_back(Term{m, c});
  return p;
}

MPoly MPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return compare(a.monomial, b.monomial) > 0; });
  MPoly p;
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
  return p;
}

bool MPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

Rational MPoly::constant_value() const {
  if (!is_constant()) throw UsageError("polynomial " + to_string() + " is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

const Term& MPoly::leading_term() const {
  if (terms_.empty()) throw UsageError("zero polynomial has no leading term");
  return terms_.front();
}

unsigned MPoly::total_degree() const { return terms_.empty() ? 0 : terms_.front().monomial.degree(); }

unsigned MPoly::degree_in(VarId v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.exponent(v));
  return d;
}

std::set<VarId> MPoly::variables() const {
  std::set<VarId> out;
  for (const auto& t : terms_)
    for (const auto& f : t.monomial.factors()) out.insert(f.first);
  return out;
}

MPoly MPoly::coefficient_of(VarId v, unsigned k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.monomial.exponent(v) != k) continue;
    std::vector<Monomial::Factor> rest;
    for (const auto& f : t.monomial.factors())
      if (f.first != v) rest.push_back(f);
    out.push_back(Term{Monomial(std::move(rest)), t.coeff});
  }
  return from_terms(std::move(out));
}

MPoly MPoly::operator-() const {
  MPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

void MPoly::add_scaled(const MPoly& p, const Rational& c, const Monomial& m) {
  if (c == 0 || p.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + p.terms_.size());
  std::size_t i = 0, j = 0;
  const bool shift = !m.is_one();
  while (i < terms_.size() || j < p.terms_.size()) {
    if (j == p.terms_.size()) {
      out.push_back(std::move(terms_[i++]));
      continue;
    }
    Monomial mj = shift ? p.terms_[j].monomial * m : p.terms_[j].monomial;
    int cmp = i == terms_.size() ? -1 : compare(terms_[i].monomial, mj);
    if (cmp > 0) {
      out.push_back(std::move(terms_[i++]));
    } else if (cmp < 0) {
      out.push_back(Term{std::move(mj), p.terms_[j++].coeff * c});
    } else {
      Rational s = terms_[i].coeff + p.terms_[j].coeff * c;
      if (s != 0) out.push_back(Term{std::move(mj), std::move(s)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
}

MPoly& MPoly::operator+=(const MPoly& o) {
  add_scaled(o, 1, Monomial());
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  add_scaled(o, -1, Monomial());
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  const MPoly& small = a.size() <= b.size() ? a : b;
  const MPoly& large = a.size() <= b.size() ? b : a;
  if (small.is_zero()) return MPoly();
  if (small.size() <= 8) {
    MPoly out;
    for (const auto& t : small.terms()) out.add_scaled(large, t.coeff, t.monomial);
    return out;
  }
  std::vector<Term> all;
  all.reserve(small.size() * large.size());
  for (const auto& s : small.terms())
    for (const auto& l : large.terms()) all.push_back(Term{s.monomial * l.monomial, s.coeff * l.coeff});
  return MPoly::from_terms(std::move(all));
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Rational MPoly::evaluate(const std::map<VarId, Rational>& values) const {
  std::map<VarId, std::vector<Rational>> powers;
  auto power = [&](VarId v, unsigned e) -> const Rational& {
    auto it = values.find(v);
    if (it == values.end()) throw UsageError("no value for variable " + var::name(v));
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(1);
    while (cache.size() <= e) cache.push_back(cache.back() * it->second);
    return cache[e];
  };
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    for (const auto& [v, e] : t.monomial.factors()) c *= power(v, e);
    total += c;
  }
  return total;
}

MPoly MPoly::substitute(const std::map<VarId, MPoly>& values) const {
  std::map<VarId, std::vector<MPoly>> powers;
  auto power = [&](VarId v, unsigned e) -> const MPoly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(MPoly(1));
    while (cache.size() <= e) cache.push_back(cache.back() * values.at(v));
    return cache[e];
  };
  MPoly out;
  for (const auto& t : terms_) {
    std::vector<Monomial::Factor> kept;
    std::vector<std::pair<VarId, unsigned>> replaced;
    for (const auto& f : t.monomial.factors()) {
      if (values.count(f.first)) {
        replaced.push_back({f.first, f.second});
      } else {
        kept.push_back(f);
      }
    }
    MPoly piece = MPoly::monomial(Monomial(std::move(kept)), t.coeff);
    for (const auto& [v, e] : replaced) piece = piece * power(v, e);
    out += piece;
  }
  return out;
}

MPoly MPoly::substitute(VarId v, const MPoly& value) const { return substitute(std::map<VarId, MPoly>{{v, value}}); }

MPoly MPoly::rename(const std::map<VarId, VarId>& renaming) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<Monomial::Factor> f = t.monomial.factors();
    for (auto& [v, e] : f) {
      auto it = renaming.find(v);
      if (it != renaming.end()) v = it->second;
    }
    out.push_back(Term{Monomial(std::move(f)), t.coeff});
  }
  return from_terms(std::move(out));
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    Rational c = t.coeff;
    bool negative = c < 0;
    if (negative) c = -c;
    if (i == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (t.monomial.is_one()) {
      out += swl::to_string(c);
    } else if (c == 1) {
      out += t.monomial.to_string();
    } else {
      out += swl::to_string(c) + "*" + t.monomial.to_string();
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  MPoly parse_all() {
    MPoly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("cannot parse polynomial '" + std::string(s_) + "': " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  MPoly expr() {
    MPoly acc;
    bool first = true;
    for (;;) {
      skip();
      bool neg = false;
      if (eat('+')) {
      } else if (eat('-')) {
        neg = true;
      } else if (!first) {
        break;
      }
      MPoly t = term();
      if (neg) t = -t;
      acc += t;
      first = false;
    }
    return acc;
  }
  MPoly term() {
    MPoly acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        MPoly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
        acc *= Rational(1) / d.constant_value();
      } else {
        break;
      }
    }
    return acc;
  }
  MPoly factor() {
    if (eat('-')) return -factor();
    MPoly base = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("missing exponent");
      unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
      if (e > 1000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }
  MPoly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = expr();
      if (!eat(')')) fail("missing ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      return MPoly(parse_rational(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MPoly::variable(var::parse(s_.substr(start, pos_ - start)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly MPoly::parse(std::string_view text) { return Parser(text).parse_all(); }

std::string MPoly::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& t : terms_) {
    nlohmann::ordered_json mono = nlohmann::ordered_json::array();
    for (const auto& [v, e] : t.monomial.factors()) mono.push_back({var::name(v), e});
    j.push_back({{"coeff", swl::to_string(t.coeff)}, {"monomial", mono}});
  }
  return j.dump();
}

MPoly MPoly::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad polynomial JSON: ") + e.what());
  }
  if (!j.is_array()) throw UsageError("polynomial JSON must be an array of terms");
  std::vector<Term> terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("monomial")) throw UsageError("bad polynomial term JSON");
    std::vector<Monomial::Factor> f;
    for (const auto& pair : t["monomial"]) {
      if (!pair.is_array() || pair.size() != 2) throw UsageError("bad monomial JSON");
      int e = pair[1].get<int>();
      if (e < 0 || e > 65535) throw UsageError("bad exponent in monomial JSON");
      f.push_back({var::parse(pair[0].get<std::string>()), static_cast<std::uint16_t>(e)});
    }
    terms.push_back(Term{Monomial(std::move(f)), parse_rational(t["coeff"].get<std::string>())});
  }
  return from_terms(std::move(terms));
}

std::size_t MPoly::hash() const {
  std::size_t h = 1469598103934665603ull;
  auto mix = [&](std::size_t v) { h = (h ^ v) * 1099511628211ull; };
  for (const auto& t : terms_) {
    for (const auto& [v, e] : t.monomial.factors()) {
      mix(v);
      mix(e);
    }
    mix(std::hash<std::string>{}(t.coeff.get_str()));
  }
  return h;
}

std::pair<MPoly, MPoly> divide_with_remainder(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw UsageError("division by the zero polynomial");
  const Term& lead = den.leading_term();
  // the running dividend lives in an ordered map so each step only touches |den| entries
  struct Descending {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  };
  std::map<Monomial, Rational, Descending> p;
  for (const auto& t : num.terms()) p.emplace(t.monomial, t.coeff);
  std::vector<Term> quotient_terms, remainder_terms;
  while (!p.empty()) {
    auto it = p.begin();
    if (!lead.monomial.divides(it->first)) {
      remainder_terms.push_back(Term{it->first, it->second});
      p.erase(it);
      continue;
    }
    Monomial qm = lead.monomial.quotient_of(it->first);
    Rational qc = it->second / lead.coeff;
    for (const auto& d : den.terms()) {
      Rational delta = qc * d.coeff;
      auto [jt, fresh] = p.try_emplace(d.monomial * qm, -delta);
      if (!fresh) {
        jt->second -= delta;
        if (jt->second == 0) p.erase(jt);
      }
    }
    quotient_terms.push_back(Term{std::move(qm), std::move(qc)});
  }
  return {MPoly::from_terms(std::move(quotient_terms)), MPoly::from_terms(std::move(remainder_terms))};
}

MPoly exact_divide(const MPoly& num, const MPoly& den) {
  auto [q, r] = divide_with_remainder(num, den);
  if (!r.is_zero()) throw NonExactDivision(r);
  return q;
}

}  // namespace swl
