#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "json.hpp"
#include "swl/complexes.hpp"

using namespace swl;

namespace {

std::vector<Rational> iota_x(std::size_t m) {
  std::vector<Rational> x;
  for (std::size_t i = 1; i <= m; ++i) x.emplace_back(static_cast<long>(i));
  return x;
}

QMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng, int bound = 6) {
  std::uniform_int_distribution<int> d(-bound, bound);
  QMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = d(rng);
  return a;
}

// facets by brute force: complements of position sets spelling a reduced word of w_0
std::vector<std::vector<int>> brute_facets(const CoxeterSystem& sys, const Word& p) {
  int m = static_cast<int>(p.size()), n = sys.longest_length();
  std::vector<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != m - n) continue;
    std::vector<int> facet, rest;
    for (int i = 0; i < m; ++i) (mask >> i & 1 ? facet : rest).push_back(i + 1);
    Word w = p.at_positions(rest);
    if (is_reduced(sys, w) && sys.element_of(w) == sys.longest_element()) out.push_back(facet);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Word random_word(std::mt19937_64& rng, int rank, int len) {
  std::uniform_int_distribution<int> letter(1, rank);
  Word w;
  for (int i = 0; i < len; ++i) w.push_back(letter(rng));
  return w;
}

}  // namespace

TEST_CASE("occurrences and facets on small words") {
  auto a2 = CoxeterSystem::parse("A2");
  SubwordComplex pentagon = build_complex(a2, Word::parse("12121"));
  CHECK(pentagon.facets == std::vector<std::vector<int>>{{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});
  CHECK(pentagon.non_vertices.empty());
  CHECK(pentagon.combinatorial_type({1, 2}) == Word::parse("121"));
  CHECK(pentagon.combinatorial_type({2, 3}) == Word::parse("121"));
  CHECK(pentagon.combinatorial_type({3, 4}) == Word::parse("121"));
  CHECK(pentagon.combinatorial_type({1, 5}) == Word::parse("212"));
  CHECK(pentagon.facet_abelian_vector({1, 5}, 2) == AbelianVector({1, 2}));

  SubwordComplex point = build_complex(a2, Word::parse("121"));
  CHECK(point.facets == std::vector<std::vector<int>>{{}});

  auto b2 = CoxeterSystem::parse("B2");
  SubwordComplex hexagon = build_complex(b2, Word::parse("121212"));
  CHECK(hexagon.facets.size() == 6);
  CHECK(occurrences(b2, Word::parse("121212")).size() == 6);
  CHECK(occurrences(b2, Word::parse("1122")).empty());

  auto j = nlohmann::json::parse(hexagon.to_json());
  CHECK(j["facets"].size() == 6);
}

TEST_CASE("facets agree with brute force") {
  std::mt19937_64 rng(61);
  for (auto t : {"A2", "B2", "A3", "I2:5"}) {
    auto sys = CoxeterSystem::parse(t);
    for (int trial = 0; trial < 12; ++trial) {
      int len = sys.longest_length() + static_cast<int>(rng() % 6);
      if (len > 14) len = 14;
      Word p = random_word(rng, sys.rank(), len);
      CAPTURE(p.to_string());
      SubwordComplex c = build_complex(sys, p);
      CHECK(c.facets == brute_facets(sys, p));
      std::set<int> used;
      for (const auto& f : c.facets) used.insert(f.begin(), f.end());
      for (int v : c.non_vertices) CHECK(used.count(v) == 0);
      CHECK(used.size() + c.non_vertices.size() == static_cast<std::size_t>(len));
    }
  }
}

TEST_CASE("occurrence words are reduced words of w0") {
  auto b2 = CoxeterSystem::parse("B2");
  for (int k = 0; k <= 3; ++k) {
    Word p = cyclic_b2_word(k);
    CHECK(p.size() == static_cast<std::size_t>(2 * k + 4));
    for (const auto& occ : occurrences(b2, p)) {
      CHECK(occ.word == p.at_positions(occ.positions));
      CHECK(is_reduced(b2, occ.word));
      CHECK(occ.word.size() == 4);
    }
  }
  CHECK_THROWS_AS(cyclic_b2_word(-1), UsageError);
}

TEST_CASE("cyclic B2 words: the curve tensor passes the signature check") {
  auto b2 = CoxeterSystem::parse("B2");
  for (int k = 1; k <= 5; ++k) {
    Word p = cyclic_b2_word(k);
    GaleMatrixData data = curve_gale_data(example_model4_tensor(), p, iota_x(p.size()));
    Verdict v = check_signature_matrix(data, b2);
    CAPTURE(k);
    CHECK(v.yes);
    CHECK(v.condition == "ok");
    CHECK(v.failures == 0);
    CHECK(v.occurrences_checked == occurrences(b2, p).size());
  }
}

TEST_CASE("breaking global monotonicity produces a sign witness") {
  auto b2 = CoxeterSystem::parse("B2");
  for (int k = 1; k <= 5; ++k) {
    Word p = cyclic_b2_word(k);
    auto x = iota_x(p.size());
    // position m-1 moves past position m by 3/2; half-integers keep every minor nonzero
    x[p.size() - 2] = Rational(static_cast<long>(2 * p.size() + 3), 2);
    Verdict v = check_signature_matrix(curve_gale_data(example_model4_tensor(), p, x), b2);
    CAPTURE(k);
    CHECK_FALSE(v.yes);
    CHECK(v.condition == "sign");
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->observed == -v.witness->expected);
    CHECK(v.witness->value != 0);
    auto j = nlohmann::json::parse(v.to_json());
    CHECK(j["verdict"] == "no");
    CHECK(j["witness"]["positions"].size() == 4);
  }
}

TEST_CASE("repeated columns give a basis failure") {
  auto b2 = CoxeterSystem::parse("B2");
  Word p = cyclic_b2_word(1);
  auto x = iota_x(p.size());
  x[2] = x[0];  // positions 1 and 3 carry letter 1
  Verdict v = check_signature_matrix(curve_gale_data(example_model4_tensor(), p, x), b2);
  CHECK_FALSE(v.yes);
  CHECK(v.condition == "basis");
}

TEST_CASE("flipping tau complements the failures") {
  auto b2 = CoxeterSystem::parse("B2");
  std::mt19937_64 rng(62);
  for (int t = 0; t < 5; ++t) {
    Word p = cyclic_b2_word(2);
    GaleMatrixData data{random_matrix(4, p.size(), rng), p, iota_x(p.size())};
    Verdict a = check_signature_matrix(data, b2);
    Verdict b = check_signature_matrix(data, b2, TSignOptions{TNormalization::GreedyOccurrence, true});
    std::size_t zeros = 0;
    for (const auto& occ : occurrences(b2, p)) {
      std::vector<int> cols;
      for (int q : occ.positions) cols.push_back(q - 1);
      zeros += det(data.B.select_columns(cols)) == 0;
    }
    CHECK(a.failures + b.failures == a.occurrences_checked + zeros);
  }
}

TEST_CASE("extraction of parameter tensors") {
  // constant rows give degree-zero coefficients
  Word p = Word::parse("12");
  QMatrix b = QMatrix::from_rows({{Rational(3), Rational(-1)}});
  ParameterTensor e = extract_parameter_tensor(GaleMatrixData{b, p, {Rational(1), Rational(2)}}, 2);
  CHECK(e.degree_bound() == 1);
  CHECK(e.at(0, 1, 0) == MPoly(3));
  CHECK(e.at(0, 2, 0) == MPoly(-1));

  // model4 is recovered once each letter has three positions
  for (int k = 1; k <= 3; ++k) {
    Word w = cyclic_b2_word(k);
    ParameterTensor model = example_model4_tensor();
    ParameterTensor back = extract_parameter_tensor(curve_gale_data(model, w, iota_x(w.size())), 2);
    CHECK(back.degree_bound() == k + 2);
    for (int i = 0; i < 4; ++i)
      for (int s = 1; s <= 2; ++s)
        for (int deg = 0; deg < back.degree_bound(); ++deg)
          CHECK(back.at(i, s, deg) == (deg < model.degree_bound() ? model.at(i, s, deg) : MPoly()));
  }

  // random round trip
  std::mt19937_64 rng(63);
  for (int t = 0; t < 10; ++t) {
    Word w = random_word(rng, 3, 7);
    GaleMatrixData data{random_matrix(5, w.size(), rng), w, iota_x(w.size())};
    ParameterTensor tensor = extract_parameter_tensor(data, 3);
    GaleMatrixData again = curve_gale_data(tensor, w, data.x);
    CHECK(again.B == data.B);
  }

  // two positions of one letter sharing x
  GaleMatrixData clash{random_matrix(2, 3, rng), Word::parse("121"), {Rational(1), Rational(2), Rational(1)}};
  CHECK_THROWS_AS(extract_parameter_tensor(clash, 2), UsageError);
  // different letters may share x
  GaleMatrixData fine{random_matrix(2, 3, rng), Word::parse("121"), {Rational(1), Rational(1), Rational(3)}};
  CHECK_NOTHROW(extract_parameter_tensor(fine, 2));
}

TEST_CASE("signature check and Schur-sum check agree on random Gale matrices") {
  std::mt19937_64 rng(64);
  struct Case {
    const char* type;
    Word p;
  };
  std::vector<Case> cases{{"B2", cyclic_b2_word(0)}, {"B2", cyclic_b2_word(1)}, {"B2", cyclic_b2_word(2)},
                          {"A2", Word::parse("12121")}, {"A2", Word::parse("1212112")}};
  for (const auto& c : cases) {
    auto sys = CoxeterSystem::parse(c.type);
    for (int t = 0; t < 6; ++t) {
      GaleMatrixData data{random_matrix(sys.longest_length(), c.p.size(), rng), c.p, iota_x(c.p.size())};
      Verdict sig = check_signature_matrix(data, sys);
      Verdict thc = check_theorem_C(extract_parameter_tensor(data, sys.rank()), c.p, data.x, sys);
      CAPTURE(c.p.to_string());
      CHECK(sig.yes == thc.yes);
      CHECK(sig.failures == thc.failures);
      CHECK(sig.occurrences_checked == thc.occurrences_checked);
      CHECK(thc.check == "theorem-c");
    }
  }
}

TEST_CASE("Schur-sum check on the type A3 tensor") {
  auto a3 = CoxeterSystem::parse("A3");
  ParameterTensor p = bcl_parameter_tensor(BclTensor::A3_213, Rational(3));
  for (auto word : {"213231", "2132312", "1213231", "21323121"}) {
    Word w = Word::parse(word);
    auto x = iota_x(w.size());
    Verdict thc = check_theorem_C(p, w, x, a3);
    Verdict sig = check_signature_matrix(curve_gale_data(p, w, x), a3);
    CAPTURE(word);
    CHECK(thc.yes == sig.yes);
    CHECK(thc.failures == sig.failures);
    CHECK(thc.occurrences_checked > 0);
  }
  // hypothesis failure on the x-values
  Word w = Word::parse("213231");
  std::vector<Rational> bad{Rational(1), Rational(2), Rational(3), Rational(4), Rational(5), Rational(0)};
  CHECK_THROWS_AS(check_theorem_C(p, w, bad, a3), UsageError);
  CHECK_THROWS_AS(check_theorem_C(bcl_parameter_tensor(BclTensor::A3_213), w, iota_x(6), a3), UsageError);
}

TEST_CASE("no occurrence verdict") {
  auto b2 = CoxeterSystem::parse("B2");
  Word p = Word::parse("1122");
  Verdict v = check_signature_matrix(GaleMatrixData{QMatrix(4, 4), p, iota_x(4)}, b2);
  CHECK_FALSE(v.yes);
  CHECK(v.condition == "no-occurrence");
}

TEST_CASE("chirotopes") {
  ChirotopeData id = chirotope_from_matrix(QMatrix::identity(3));
  CHECK(id.bases().size() == 1);
  CHECK(id.chi({1, 2, 3}) == 1);
  CHECK(id.chi({2, 1, 3}) == -1);
  CHECK(id.chi({3, 1, 2}) == 1);
  CHECK(id.chi({1, 1, 2}) == 0);

  QMatrix vand(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Rational v = 1;
      for (int e = 0; e < i; ++e) v *= j + 1;
      vand(i, j) = v;
    }
  CHECK(chirotope_from_matrix(vand).chi({1, 2, 3}) == 1);

  QMatrix line = QMatrix::from_rows({{1, 1, 1, 1}, {1, 2, 3, 4}});
  ChirotopeData c = chirotope_from_matrix(line);
  CHECK(c.signs.size() == 6);
  for (const auto& [tuple, s] : c.signs) CHECK(s == 1);
  CHECK(nlohmann::json::parse(c.to_json())["rank"] == 2);

  std::mt19937_64 rng(65);
  QMatrix a = random_matrix(3, 6, rng, 3);
  ChirotopeData chi = chirotope_from_matrix(a);
  CHECK_FALSE(check_chirotope_axioms(chi, a, rng, 1000).has_value());
  for (int s = 0; s < 200; ++s) {
    std::vector<int> all{1, 2, 3, 4, 5, 6};
    std::shuffle(all.begin(), all.end(), rng);
    CHECK(three_term_relation_holds(chi, {all[0]}, all[1], all[2], all[3], all[4]));
  }
  // corrupting one sign breaks the axioms somewhere
  ChirotopeData broken = chirotope_from_matrix(line);
  broken.signs[{1, 3}] = -1;
  CHECK(check_chirotope_axioms(broken, line, rng, 1000).has_value());
}

TEST_CASE("Gale transforms") {
  QMatrix g = gale_transform(QMatrix::from_rows({{1, 1}}));
  REQUIRE(g.rows() == 1);
  CHECK(g(0, 0) == -g(0, 1));
  CHECK(g(0, 0) != 0);

  QMatrix a = QMatrix::from_rows({{1, 0, 0}, {0, 1, 0}});
  QMatrix k = gale_transform(a);
  REQUIRE(k.rows() == 1);
  CHECK(k(0, 0) == 0);
  CHECK(k(0, 1) == 0);
  CHECK(k(0, 2) != 0);

  std::mt19937_64 rng(66);
  for (int t = 0; t < 10; ++t) {
    QMatrix r = random_matrix(2, 5, rng);
    if (rank(r) < 2) continue;
    QMatrix b = gale_transform(r);
    CHECK(b.rows() == 3);
    CHECK(rank(b) == 3);
    CHECK(r * b.transpose() == QMatrix(2, 3));
  }
  CHECK_THROWS_AS(gale_transform(QMatrix::from_rows({{1, 2}, {2, 4}})), UsageError);
}
