#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <random>
#include <set>
#include <unordered_set>

#include "figures.hpp"
#include "swl/coxeter.hpp"

using namespace swl;

namespace {

std::vector<std::string> small_types() {
  return {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "D4", "H3", "I2:2", "I2:5", "I2:8"};
}

// hook lengths of the staircase (n, n-1, ..., 1)
mpz_class staircase_hook_count(int n) {
  int cells = n * (n + 1) / 2;
  mpz_class num = 1;
  for (int i = 2; i <= cells; ++i) num *= i;
  mpz_class hooks = 1;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n - r; ++c) hooks *= 2 * (n - r - c) - 1;
  return num / hooks;
}

}  // namespace

TEST_CASE("type strings and Coxeter matrices") {
  auto b3 = CoxeterSystem::parse("B3");
  CHECK(b3.rank() == 3);
  CHECK(b3.m(1, 2) == 4);
  CHECK(b3.m(2, 3) == 3);
  CHECK(b3.m(1, 3) == 2);
  auto d4 = CoxeterSystem::parse("D4");
  CHECK(d4.m(1, 3) == 3);
  CHECK(d4.m(2, 3) == 3);
  CHECK(d4.m(1, 2) == 2);
  CHECK(d4.m(3, 4) == 3);
  auto h3 = CoxeterSystem::parse("H3");
  CHECK(h3.m(1, 2) == 5);
  CHECK(h3.m(2, 3) == 3);
  CHECK(CoxeterSystem::parse("I2:7").m(1, 2) == 7);
  CHECK(CoxeterSystem::parse("I2:7").name() == "I2:7");
  for (auto bad : {"", "X3", "A0", "B1", "D3", "H4", "I2:1", "I2", "A", "A3x"})
    CHECK_THROWS_AS(CoxeterSystem::parse(bad), UsageError);
}

TEST_CASE("Coxeter matrix is symmetric with unit diagonal") {
  for (const auto& t : small_types()) {
    auto sys = CoxeterSystem::parse(t);
    for (int i = 1; i <= sys.rank(); ++i)
      for (int j = 1; j <= sys.rank(); ++j) {
        if (i == j)
          CHECK(sys.m(i, j) == 1);
        else
          CHECK((sys.m(i, j) == sys.m(j, i) && sys.m(i, j) >= 2));
      }
  }
}

TEST_CASE("longest length matches the closed forms") {
  for (int n = 1; n <= 7; ++n) CHECK(CoxeterSystem::make(Family::A, n).longest_length() == n * (n + 1) / 2);
  for (int n = 2; n <= 6; ++n) CHECK(CoxeterSystem::make(Family::B, n).longest_length() == n * n);
  for (int n = 4; n <= 6; ++n) CHECK(CoxeterSystem::make(Family::D, n).longest_length() == n * (n - 1));
  CHECK(CoxeterSystem::parse("H3").longest_length() == 15);
  for (int m = 2; m <= 12; ++m) CHECK(CoxeterSystem::make(Family::I2, 2, m).longest_length() == m);
}

TEST_CASE("word parsing and display") {
  CHECK(Word::parse("121321").to_string() == "121321");
  CHECK(Word::parse("1,10,2").to_string() == "1,10,2");
  CHECK(Word().to_string() == "e");
  CHECK(Word::parse("e").empty());
  CHECK(Word::parse("").empty());
  CHECK(Word::parse("1213").reversed() == Word::parse("3121"));
  CHECK(Word::parse("12122").at_positions({1, 4, 5}) == Word::parse("122"));
  CHECK_THROWS_AS(Word::parse("12a"), UsageError);
  CHECK_THROWS_AS(Word::parse("102"), UsageError);
}

TEST_CASE("abelian vectors") {
  CHECK(abelian_vector(Word::parse("121"), 2) == AbelianVector({2, 1}));
  CHECK(abelian_vector(Word(), 3) == AbelianVector({0, 0, 0}));
  CHECK(abelian_vector(Word::parse("123121"), 3) == AbelianVector({3, 2, 1}));
  CHECK(AbelianVector({3, 2, 1}).to_string() == "(3,2,1)");
}

TEST_CASE("abelian_vector is a monoid morphism") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> letter(1, 5), len(0, 12);
  for (int t = 0; t < 200; ++t) {
    Word u, v;
    for (int i = len(rng); i > 0; --i) u.push_back(letter(rng));
    for (int i = len(rng); i > 0; --i) v.push_back(letter(rng));
    CHECK(abelian_vector(u + v, 5) == abelian_vector(u, 5) + abelian_vector(v, 5));
    CHECK(abelian_vector(u + v, 5).total() == static_cast<int>(u.size() + v.size()));
  }
}

TEST_CASE("braid move targets") {
  auto a2 = CoxeterSystem::parse("A2");
  auto moves = braid_move_targets(a2, Word::parse("121"));
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].start == 0);
  CHECK(moves[0].length == 3);
  CHECK(moves[0].result == Word::parse("212"));

  auto a3 = CoxeterSystem::parse("A3");
  std::set<std::pair<int, std::string>> got;
  for (const auto& m : braid_move_targets(a3, Word::parse("123121")))
    got.insert({m.start, m.result.to_string()});
  // 123121: commutation 31 -> 13 at positions 3-4 (0-based 2), braid 121 -> 212 at 4-6 (0-based 3)
  std::set<std::pair<int, std::string>> expected{{2, "121321"}, {3, "123212"}};
  CHECK(got == expected);
  CHECK(braid_move_targets(a3, Word()).empty());

  // every target keeps length and abelian vector up to the swapped letters
  for (const auto& m : braid_move_targets(a3, Word::parse("213231"))) {
    CHECK(m.result.size() == 6);
    CHECK(is_reduced(a3, m.result));
  }
}

TEST_CASE("is_reduced") {
  auto a3 = CoxeterSystem::parse("A3");
  CHECK_FALSE(is_reduced(a3, Word::parse("123123")));
  CHECK(is_reduced(a3, Word::parse("123121")));
  CHECK_FALSE(is_reduced(CoxeterSystem::parse("A1"), Word::parse("11")));
  CHECK(is_reduced(a3, Word()));
  CHECK_THROWS_AS(is_reduced(a3, Word::parse("124")), UsageError);
}

TEST_CASE("group model: multiplication, inverses and descents") {
  std::mt19937_64 rng(11);
  for (const auto& t : small_types()) {
    auto sys = CoxeterSystem::parse(t);
    std::uniform_int_distribution<int> letter(1, sys.rank());
    for (int trial = 0; trial < 30; ++trial) {
      Word u, v;
      for (int i = 0; i < 6; ++i) u.push_back(letter(rng));
      for (int i = 0; i < 5; ++i) v.push_back(letter(rng));
      Element eu = sys.element_of(u), ev = sys.element_of(v);
      Element uv = sys.element_of(u + v);
      // left multiplication by the letters of u, right to left, reproduces u v
      Element left = ev;
      for (std::size_t i = u.size(); i-- > 0;) left = sys.mul_left(u[i], left);
      CHECK(left == uv);
      Element inv = sys.inverse(eu);
      Element prod = eu;
      for (int a : sys.lex_first_reduced_word(inv)) prod = sys.mul_right(prod, a);
      CHECK(prod == sys.identity());
      CHECK(sys.length(eu) == static_cast<int>(sys.lex_first_reduced_word(eu).size()));
      for (int s = 1; s <= sys.rank(); ++s)
        CHECK(sys.is_right_descent(eu, s) == (sys.length(sys.mul_right(eu, s)) < sys.length(eu)));
    }
    CHECK(sys.length(sys.longest_element()) == sys.longest_length());
    for (int s = 1; s <= sys.rank(); ++s) CHECK(sys.is_left_descent(sys.longest_element(), s));
  }
}

TEST_CASE("reduced word counts") {
  auto count = [](const std::string& t) { return longest_element_reduced_words(CoxeterSystem::parse(t)).size(); };
  CHECK(count("A1") == 1);
  CHECK(count("A2") == 2);
  CHECK(count("A3") == 16);
  CHECK(count("B2") == 2);
  CHECK(count("B3") == 42);
  CHECK(count("H3") == 286);
  CHECK(count("A4") == 768);
  CHECK(count("D4") == 2316);
  for (int m = 2; m <= 9; ++m) CHECK(reduced_words(CoxeterSystem::make(Family::I2, 2, m), CoxeterSystem::make(Family::I2, 2, m).longest_element()).size() == 2);
  CHECK(count_reduced_words(CoxeterSystem::parse("B4"), CoxeterSystem::parse("B4").longest_element()) == 24024);
}

TEST_CASE("type A counts agree with the hook-length formula") {
  for (int n = 1; n <= 6; ++n) {
    auto sys = CoxeterSystem::make(Family::A, n);
    CHECK(count_reduced_words(sys, sys.longest_element()) == staircase_hook_count(n));
  }
}

TEST_CASE("word stream: reduced, distinct, lexicographic, complete") {
  for (const auto& t : small_types()) {
    auto sys = CoxeterSystem::parse(t);
    Element w0 = sys.longest_element();
    std::vector<Word> words = longest_element_reduced_words(sys);
    CHECK(mpz_class(static_cast<unsigned long>(words.size())) == count_reduced_words(sys, w0));
    for (std::size_t i = 0; i < words.size(); ++i) {
      CHECK(static_cast<int>(words[i].size()) == sys.longest_length());
      CHECK(is_reduced(sys, words[i]));
      CHECK(sys.element_of(words[i]) == w0);
      if (i) CHECK(words[i - 1] < words[i]);
    }
  }
}

TEST_CASE("Matsumoto: braid-move closure of one word is all of R(w)") {
  std::mt19937_64 rng(3);
  for (const auto& t : small_types()) {
    auto sys = CoxeterSystem::parse(t);
    std::uniform_int_distribution<int> letter(1, sys.rank());
    for (int trial = 0; trial < 5; ++trial) {
      Word g;
      for (int i = 0; i < 8; ++i) g.push_back(letter(rng));
      Element w = trial == 0 ? sys.longest_element() : sys.element_of(g);
      auto all = reduced_words(sys, w);
      std::set<Word> reference(all.begin(), all.end());
      std::set<Word> seen{all.front()};
      std::vector<Word> queue{all.front()};
      while (!queue.empty()) {
        Word cur = queue.back();
        queue.pop_back();
        for (const auto& m : braid_move_targets(sys, cur))
          if (seen.insert(m.result).second) queue.push_back(m.result);
      }
      CHECK(seen == reference);
    }
  }
}

TEST_CASE("abelian tables") {
  for (const auto& [type, table] : figures::abelian_tables) {
    CAPTURE(type);
    auto sys = CoxeterSystem::parse(type);
    AbelianSpectrum sp = abelian_spectrum(sys, sys.longest_element());
    std::vector<std::vector<int>> got;
    for (const auto& a : sp.vectors) got.push_back(a.counts());
    CHECK(got == table);
  }
  auto a3 = CoxeterSystem::parse("A3");
  CHECK(abelian_spectrum(a3, a3.longest_element()).nu == 3);
}

TEST_CASE("A5 spectrum summary") {
  auto sys = CoxeterSystem::parse("A5");
  auto sp = abelian_spectrum(sys, sys.longest_element());
  CHECK(sp.vectors.size() == 97);
  CHECK(sp.mu == AbelianVector({1, 2, 3, 2, 1}));
  CHECK(sp.coordinatewise_max == AbelianVector({5, 6, 6, 6, 5}));
  CHECK(sp.word_count == 292864);
}

TEST_CASE("aggregate and streaming spectra agree") {
  for (auto t : {"A3", "A4", "B3", "D4", "H3", "I2:6"}) {
    auto sys = CoxeterSystem::parse(t);
    auto a = abelian_spectrum(sys, sys.longest_element(), SpectrumMode::Aggregate);
    auto s = abelian_spectrum(sys, sys.longest_element(), SpectrumMode::Streaming);
    CHECK(a.vectors == s.vectors);
    CHECK(a.nu == s.nu);
    CHECK(a.mu == s.mu);
    CHECK(a.coordinatewise_max == s.coordinatewise_max);
    CHECK(a.word_count == s.word_count);
  }
}

TEST_CASE("type A minimum follows the closed formula") {
  CHECK(type_a_mu_formula(4) == AbelianVector({1, 2, 2, 1}));
  for (int n = 1; n <= 5; ++n) {
    auto sys = CoxeterSystem::make(Family::A, n);
    CHECK(abelian_spectrum(sys, sys.longest_element()).mu == type_a_mu_formula(n));
  }
}

TEST_CASE("budgets stop enumeration with a progress report") {
  auto b3 = CoxeterSystem::parse("B3");
  Budget tiny{10, 600};
  try {
    longest_element_reduced_words(b3, tiny);
    FAIL("expected a resource limit");
  } catch (const ResourceLimitError& e) {
    CHECK(e.processed() >= 10);
  }
  CHECK_THROWS_AS(abelian_spectrum(b3, b3.longest_element(), SpectrumMode::Streaming, tiny), ResourceLimitError);
}

TEST_CASE("reduced words of non-longest elements against brute force") {
  std::mt19937_64 rng(5);
  for (auto t : {"A3", "B3", "H3"}) {
    auto sys = CoxeterSystem::parse(t);
    std::uniform_int_distribution<int> letter(1, sys.rank());
    for (int trial = 0; trial < 4; ++trial) {
      Word g;
      for (int i = 0; i < 6; ++i) g.push_back(letter(rng));
      Element w = sys.element_of(g);
      int len = sys.length(w);
      std::set<Word> brute;
      Word cur;
      std::function<void()> rec = [&] {
        if (static_cast<int>(cur.size()) == len) {
          if (sys.element_of(cur) == w) brute.insert(cur);
          return;
        }
        for (int a = 1; a <= sys.rank(); ++a) {
          cur.push_back(a);
          rec();
          cur.pop_back();
        }
      };
      rec();
      auto words = reduced_words(sys, w);
      CHECK(std::set<Word>(words.begin(), words.end()) == brute);
      CHECK(words.size() == brute.size());
    }
  }
}
