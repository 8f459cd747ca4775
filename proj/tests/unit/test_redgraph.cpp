#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <queue>

#include "figures.hpp"
#include "json.hpp"
#include "swl/redgraph.hpp"
#include "swl/words.hpp"

using namespace swl;

namespace {

RedGraph full_graph(const std::string& t) {
  auto sys = CoxeterSystem::parse(t);
  return build_graph(sys, sys.longest_element());
}

bool connected(const RedGraph& g) {
  if (g.vertex_count() == 0) return true;
  auto adj = g.adjacency();
  std::vector<bool> seen(g.vertex_count());
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = true;
        ++count;
        q.push(u);
      }
  }
  return count == g.vertex_count();
}

std::vector<std::string> law_types() {
  std::vector<std::string> t{"A3", "B3", "H3", "D4", "A4"};
  for (int m = 2; m <= 9; ++m) t.push_back("I2:" + std::to_string(m));
  return t;
}

}  // namespace

TEST_CASE("graph sizes") {
  RedGraph a3 = full_graph("A3");
  CHECK(a3.vertex_count() == 16);
  CHECK(a3.edge_count() == 18);
  CHECK(a3.edges_of_length(2) == 10);
  CHECK(a3.edges_of_length(3) == 8);
  for (int m = 2; m <= 9; ++m) {
    RedGraph g = full_graph("I2:" + std::to_string(m));
    CHECK(g.vertex_count() == 2);
    REQUIRE(g.edge_count() == 1);
    CHECK(g.edges()[0].lengths == std::vector<int>{m});
  }
  RedGraph a1 = full_graph("A1");
  CHECK(a1.vertex_count() == 1);
  CHECK(a1.edge_count() == 0);
  CHECK(full_graph("B3").vertex_count() == 42);
}

TEST_CASE("graphs are connected and classes partition R(w)") {
  for (const auto& t : law_types()) {
    CAPTURE(t);
    auto sys = CoxeterSystem::parse(t);
    RedGraph g = build_graph(sys, sys.longest_element());
    CHECK(connected(g));
    for (auto kind : {MinorKind::Full, MinorKind::Comm, MinorKind::Braid, MinorKind::Odd, MinorKind::Even,
                      MinorKind::Two}) {
      RedGraph h = minor(sys, g, kind);
      CHECK(connected(h));
      std::set<Word> members;
      std::size_t total = 0;
      for (const auto& cls : h.classes()) {
        total += cls.size();
        members.insert(cls.begin(), cls.end());
        CHECK(*std::min_element(cls.begin(), cls.end()) == h.vertices()[&cls - &h.classes()[0]]);
      }
      CHECK(total == g.vertex_count());
      CHECK(members.size() == g.vertex_count());
      // fused edges: at most one edge per vertex pair
      std::set<std::pair<int, int>> pairs;
      for (const auto& e : h.edges()) CHECK(pairs.insert({e.a, e.b}).second);
    }
  }
}

TEST_CASE("contraction presets") {
  auto a3 = CoxeterSystem::parse("A3");
  RedGraph g = build_graph(a3, a3.longest_element());
  CHECK(minor(a3, g, MinorKind::Comm).vertex_count() == 8);
  CHECK(minor(a3, g, MinorKind::Odd).vertex_count() == 8);
  CHECK(contracted_lengths(a3, MinorKind::Comm) == std::set<int>{2});
  CHECK(contracted_lengths(a3, MinorKind::Braid) == std::set<int>{3});
  CHECK(contracted_lengths(a3, MinorKind::Odd) == std::set<int>{2});
  CHECK(contracted_lengths(a3, MinorKind::Even) == std::set<int>{3});
  auto b3 = CoxeterSystem::parse("B3");
  CHECK(contracted_lengths(b3, MinorKind::Odd) == std::set<int>{2, 4});
  CHECK(contracted_lengths(b3, MinorKind::Even) == std::set<int>{3});
  CHECK(minor(b3, build_graph(b3, b3.longest_element()), MinorKind::Two).kept_lengths() == std::set<int>{2});

  auto h3 = CoxeterSystem::parse("H3");
  CHECK(minor(h3, build_graph(h3, h3.longest_element()), MinorKind::Comm).vertex_count() == 44);

  RedGraph same = contract(g, {});
  CHECK(same.vertices() == g.vertices());
  CHECK(same.edge_count() == g.edge_count());

  for (auto name : {"full", "comm", "braid", "odd", "even", "two"})
    CHECK(minor_kind_name(parse_minor_kind(name)) == name);
  CHECK_THROWS_AS(parse_minor_kind("three"), UsageError);
}

TEST_CASE("even and odd minors are bipartite") {
  for (auto t : {"A3", "B3", "H3", "D4", "A4", "I2:5", "I2:6"}) {
    CAPTURE(t);
    auto sys = CoxeterSystem::parse(t);
    RedGraph g = build_graph(sys, sys.longest_element());
    for (auto kind : {MinorKind::Even, MinorKind::Odd}) {
      RedGraph h = minor(sys, g, kind);
      Bipartition bp = bipartition(h);
      CHECK(bp.bipartite);
      CHECK(bp.odd_cycle.empty());
      for (const auto& e : h.edges())
        if (e.a != e.b) CHECK(bp.color[e.a] == -bp.color[e.b]);
    }
  }
}

TEST_CASE("odd cycles are reported as witnesses") {
  // contracting every length leaves one vertex; any surviving loop is an odd cycle
  auto a3 = CoxeterSystem::parse("A3");
  RedGraph g = build_graph(a3, a3.longest_element());
  RedGraph single = contract(g, {2, 3});
  CHECK(single.vertex_count() == 1);
  Bipartition bp = bipartition(single);
  if (single.edge_count() > 0) {
    CHECK_FALSE(bp.bipartite);
    CHECK_FALSE(bp.odd_cycle.empty());
  } else {
    CHECK(bp.bipartite);
  }
}

TEST_CASE("S-sign labels on the A3 figure") {
  auto a3 = CoxeterSystem::parse("A3");
  RedGraph g = build_graph(a3, a3.longest_element());
  SignAssignment s = s_sign_assignment(g);
  auto fig = figures::parse_signs(figures::a3_s_sign);
  CHECK(s.values.size() == fig.size());
  for (const auto& [w, v] : fig) CHECK(s.at(Word::parse(w)) == v);
}

TEST_CASE("T-sign anchor and normalisation") {
  auto a3 = CoxeterSystem::parse("A3");
  CHECK(t_sign_anchor(a3, TNormalization::GreedyOccurrence) == Word::parse("123121"));
  CHECK(t_sign_anchor(a3, TNormalization::LexLeast) == Word::parse("121321"));
  SignAssignment tau = t_sign(a3);
  CHECK(tau.at(Word::parse("123121")) == 1);
  SignAssignment flipped = t_sign(a3, TSignOptions{TNormalization::GreedyOccurrence, true});
  for (const auto& [w, v] : tau.values) CHECK(flipped.at(w) == -v);
  CHECK(t_sign(CoxeterSystem::parse("B2")).at(Word::parse("1212")) == 1);
  auto i4 = CoxeterSystem::parse("I2:4");
  SignAssignment t4 = t_sign(i4);
  CHECK(t4.at(Word::parse("1212")) == -t4.at(Word::parse("2121")));
}

TEST_CASE("T-sign follows (-1)^(m-1) on every edge") {
  for (const auto& t : law_types()) {
    CAPTURE(t);
    auto sys = CoxeterSystem::parse(t);
    SignAssignment tau = t_sign(sys);
    for (const Word& w : longest_element_reduced_words(sys))
      for (const auto& move : braid_move_targets(sys, w)) {
        int expected = move.length % 2 == 0 ? -1 : 1;
        CHECK(tau.at(w) * tau.at(move.result) == expected);
      }
  }
}

TEST_CASE("T-sign is constant on braid classes of A3 and B3") {
  for (auto t : {"A3", "B3"}) {
    auto sys = CoxeterSystem::parse(t);
    RedGraph g = build_graph(sys, sys.longest_element());
    SignAssignment tau = t_sign(sys, g);
    RedGraph braid = contract(g, {3});
    for (const auto& cls : braid.classes())
      for (const auto& w : cls) CHECK(tau.at(w) == tau.at(cls.front()));
  }
}

TEST_CASE("punctual sign on the A3 figure up to a global flip") {
  auto a3 = CoxeterSystem::parse("A3");
  SignAssignment p = punctual_sign(a3);
  auto fig = figures::parse_signs(figures::a3_punctual);
  int agree = 0, disagree = 0;
  for (const auto& [w, v] : fig) (p.at(Word::parse(w)) == v ? agree : disagree)++;
  CHECK((agree == 16 || disagree == 16));
  CHECK(p.at(Word::parse("123212")) == -1);
  CHECK(p.at(Word::parse("123121")) == 1);
  auto i2 = CoxeterSystem::parse("I2:2");
  SignAssignment q = punctual_sign(i2);
  CHECK(q.at(Word::parse("12")) == q.at(Word::parse("21")));
}

TEST_CASE("punctual sign case law on every edge") {
  for (const auto& t : law_types()) {
    CAPTURE(t);
    auto sys = CoxeterSystem::parse(t);
    SignAssignment p = punctual_sign(sys);
    for (const Word& w : longest_element_reduced_words(sys))
      for (const auto& move : braid_move_targets(sys, w)) {
        int m = move.length;
        int ratio = p.at(w) * p.at(move.result);
        if (m % 4 == 2) {
          CHECK(ratio == 1);
        } else if (m % 4 == 0) {
          CHECK(ratio == -1);
        } else {
          BraidMoveContext ctx = context_of(w, move);
          CHECK(ratio == ((ctx.kappa() + ctx.mu()) % 2 == 0 ? 1 : -1));
        }
      }
  }
}

TEST_CASE("punctual sign is well defined on commutation classes") {
  for (auto t : {"A3", "B3", "H3", "D4"}) {
    auto sys = CoxeterSystem::parse(t);
    RedGraph g = build_graph(sys, sys.longest_element());
    SignAssignment p = punctual_sign(s_sign_assignment(g), t_sign(sys, g));
    RedGraph comm = contract(g, {2});
    for (const auto& cls : comm.classes())
      for (const auto& w : cls) CHECK(p.at(w) == p.at(cls.front()));
  }
}

TEST_CASE("global flip of tau flips the punctual sign") {
  auto b3 = CoxeterSystem::parse("B3");
  SignAssignment a = punctual_sign(b3);
  SignAssignment b = punctual_sign(b3, TSignOptions{TNormalization::GreedyOccurrence, true});
  for (const auto& [w, v] : a.values) CHECK(b.at(w) == -v);
}

TEST_CASE("DOT and JSON export") {
  auto a1 = CoxeterSystem::parse("A1");
  RedGraph g = build_graph(a1, a1.longest_element());
  std::string dot = to_dot(minor(a1, g, MinorKind::Comm));
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("\"1\"") != std::string::npos);

  auto b2 = CoxeterSystem::parse("B2");
  RedGraph gb = build_graph(b2, b2.longest_element());
  SignAssignment s = s_sign_assignment(gb);
  std::string dotb = to_dot(gb, &s);
  CHECK(dotb.find("black:black") != std::string::npos);
  auto j = nlohmann::json::parse(to_json(gb, &s));
  CHECK(j["vertices"].size() == 2);
  CHECK(j["edges"].size() == 1);
  CHECK(j["edges"][0]["length"] == 4);
  CHECK(j["sign_kind"] == "S");
}

TEST_CASE("sign kinds parse") {
  CHECK(parse_sign_kind("S") == SignKind::S);
  CHECK(parse_sign_kind("T") == SignKind::T);
  CHECK(parse_sign_kind("punctual") == SignKind::Punctual);
  CHECK_THROWS_AS(parse_sign_kind("Q"), UsageError);
}
