#include "swl/redgraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "swl/words.hpp"

namespace swl {

std::set<int> RedGraph::kept_lengths() const {
  std::set<int> out;
  for (const auto& e : edges_) out.insert(e.lengths.begin(), e.lengths.end());
  return out;
}

std::size_t RedGraph::edges_of_length(int length) const {
  std::size_t n = 0;
  for (const auto& e : edges_) n += std::count(e.lengths.begin(), e.lengths.end(), length);
  return n;
}

std::optional<int> RedGraph::find(const Word& w) const {
  auto it = member_index_.find(w);
  if (it == member_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::vector<int>> RedGraph::adjacency() const {
  std::vector<std::vector<int>> adj(vertex_count());
  for (const auto& e : edges_) {
    adj[e.a].push_back(e.b);
    if (e.a != e.b) adj[e.b].push_back(e.a);
  }
  return adj;
}

void RedGraph::index_members() {
  member_index_.clear();
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (const auto& w : classes_[c]) member_index_[w] = static_cast<int>(c);
}

RedGraph build_graph(const CoxeterSystem& sys, const Element& w, Budget budget) {
  RedGraph g;
  g.representatives_ = reduced_words(sys, w, budget);  // lexicographic
  g.classes_.reserve(g.representatives_.size());
  for (const auto& v : g.representatives_) g.classes_.push_back({v});
  g.index_members();

  std::set<std::tuple<int, int, int>> seen;
  for (std::size_t a = 0; a < g.representatives_.size(); ++a) {
    for (const auto& mv : braid_move_targets(sys, g.representatives_[a])) {
      int b = g.member_index_.at(mv.result);
      int lo = std::min<int>(a, b), hi = std::max<int>(a, b);
      if (seen.emplace(lo, hi, mv.length).second) g.edges_.push_back(RedGraphEdge{lo, hi, {mv.length}});
    }
  }
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const RedGraphEdge& x, const RedGraphEdge& y) { return std::tie(x.a, x.b, x.lengths) < std::tie(y.a, y.b, y.lengths); });
  return g;
}

RedGraph contract(const RedGraph& g, const std::set<int>& lengths) {
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : g.edges_) {
    bool hit = std::any_of(e.lengths.begin(), e.lengths.end(), [&](int l) { return lengths.count(l) > 0; });
    if (hit) {
      int ra = root(e.a), rb = root(e.b);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }

  // Gather classes, then order them by their least member.
  std::map<int, std::vector<Word>> grouped;
  for (int v = 0; v < n; ++v) {
    auto& bucket = grouped[root(v)];
    bucket.insert(bucket.end(), g.classes_[v].begin(), g.classes_[v].end());
  }
  std::vector<std::vector<Word>> classes;
  for (auto& [r, members] : grouped) {
    std::sort(members.begin(), members.end());
    classes.push_back(std::move(members));
  }
  std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });

  RedGraph out;
  out.classes_ = std::move(classes);
  for (const auto& c : out.classes_) out.representatives_.push_back(c.front());
  out.index_members();

  std::map<std::pair<int, int>, std::set<int>> fused;
  for (const auto& e : g.edges_) {
    std::set<int> surviving;
    for (int l : e.lengths)
      if (!lengths.count(l)) surviving.insert(l);
    if (surviving.empty()) continue;
    int a = out.member_index_.at(g.representatives_[e.a]);
    int b = out.member_index_.at(g.representatives_[e.b]);
    auto& labels = fused[{std::min(a, b), std::max(a, b)}];
    labels.insert(surviving.begin(), surviving.end());
  }
  for (auto& [ab, labels] : fused)
    out.edges_.push_back(RedGraphEdge{ab.first, ab.second, std::vector<int>(labels.begin(), labels.end())});
  return out;
}

MinorKind parse_minor_kind(const std::string& name) {
  if (name == "full" || name == "G" || name.empty()) return MinorKind::Full;
  if (name == "comm") return MinorKind::Comm;
  if (name == "braid") return MinorKind::Braid;
  if (name == "odd") return MinorKind::Odd;
  if (name == "even") return MinorKind::Even;
  if (name == "two" || name == "2") return MinorKind::Two;
  throw UsageError("unknown minor '" + name + "' (full, comm, braid, odd, even, two)");
}

std::string minor_kind_name(MinorKind kind) {
  switch (kind) {
    case MinorKind::Full: return "full";
    case MinorKind::Comm: return "comm";
    case MinorKind::Braid: return "braid";
    case MinorKind::Odd: return "odd";
    case MinorKind::Even: return "even";
    case MinorKind::Two: return "two";
  }
  return "?";
}

std::set<int> contracted_lengths(const CoxeterSystem& sys, MinorKind kind) {
  std::set<int> all;
  for (int i = 1; i <= sys.rank(); ++i)
    for (int j = i + 1; j <= sys.rank(); ++j) all.insert(sys.m(i, j));
  std::set<int> out;
  for (int l : all) {
    switch (kind) {
      case MinorKind::Full: break;
      case MinorKind::Comm: if (l == 2) out.insert(l); break;
      case MinorKind::Braid: if (l == 3) out.insert(l); break;
      case MinorKind::Odd: if (l % 2 == 0) out.insert(l); break;
      case MinorKind::Even: if (l % 2 == 1) out.insert(l); break;
      case MinorKind::Two: if (l != 2) out.insert(l); break;
    }
  }
  return out;
}

RedGraph minor(const CoxeterSystem& sys, const RedGraph& g, MinorKind kind) {
  if (kind == MinorKind::Two) return contract(contract(g, contracted_lengths(sys, MinorKind::Even)), contracted_lengths(sys, kind));
  return contract(g, contracted_lengths(sys, kind));
}

Bipartition bipartition(const RedGraph& g) {
  const int n = static_cast<int>(g.vertex_count());
  Bipartition out;
  out.color.assign(n, 0);
  std::vector<int> parent(n, -1), depth(n, 0);
  auto adj = g.adjacency();
  for (int s = 0; s < n; ++s) {
    if (out.color[s]) continue;
    out.color[s] = 1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (int b : adj[a]) {
        if (!out.color[b]) {
          out.color[b] = -out.color[a];
          parent[b] = a;
          depth[b] = depth[a] + 1;
          queue.push_back(b);
        } else if (out.color[b] == out.color[a]) {
          // Tree paths from a and b up to their common ancestor, plus edge (a,b).
          std::vector<int> left{a}, right{b};
          int x = a, y = b;
          while (x != y) {
            if (depth[x] >= depth[y]) {
              x = parent[x];
              left.push_back(x);
            } else {
              y = parent[y];
              right.push_back(y);
            }
          }
          right.pop_back();
          std::reverse(right.begin(), right.end());
          left.insert(left.end(), right.begin(), right.end());
          out.bipartite = false;
          out.odd_cycle = std::move(left);
          return out;
        }
      }
    }
  }
  return out;
}

std::string sign_kind_name(SignKind kind) {
  switch (kind) {
    case SignKind::S: return "S";
    case SignKind::T: return "T";
    case SignKind::Punctual: return "punctual";
  }
  return "?";
}

SignKind parse_sign_kind(const std::string& name) {
  if (name == "S" || name == "s" || name == "sigma") return SignKind::S;
  if (name == "T" || name == "t" || name == "tau") return SignKind::T;
  if (name == "punctual" || name == "P" || name == "p") return SignKind::Punctual;
  throw UsageError("unknown sign kind '" + name + "' (S, T, punctual)");
}

int SignAssignment::at(const Word& w) const {
  auto it = values.find(w);
  if (it == values.end()) throw UsageError("no sign recorded for word " + w.to_string());
  return it->second;
}

Word t_sign_anchor(const CoxeterSystem& sys, TNormalization normalization) {
  Element w0 = sys.longest_element();
  if (normalization == TNormalization::LexLeast) return sys.lex_first_reduced_word(w0);
  // Any reduced prefix extends to a reduced word of w_0, so taking every
  // letter that keeps the prefix reduced gives the leftmost occurrence.
  Word v;
  Element g = sys.identity();
  const int n = sys.rank();
  for (long k = 0; static_cast<int>(v.size()) < sys.longest_length(); ++k) {
    int a = static_cast<int>(k % n) + 1;
    if (!sys.is_right_descent(g, a)) {
      g = sys.mul_right(g, a);
      v.push_back(a);
    }
  }
  return v;
}

SignAssignment s_sign_assignment(const RedGraph& g) {
  SignAssignment out;
  out.kind = SignKind::S;
  for (const auto& cls : g.classes())
    for (const auto& w : cls) out.values[w] = s_sign(w);
  return out;
}

SignAssignment t_sign(const CoxeterSystem& sys, const RedGraph& g, TSignOptions options) {
  Word anchor = t_sign_anchor(sys, options.normalization);
  auto start = g.find(anchor);
  if (!start) throw UsageError("graph does not contain the normalising word " + anchor.to_string());
  const int n = static_cast<int>(g.vertex_count());
  std::vector<int> sign(n, 0);
  sign[*start] = options.flip ? -1 : 1;
  // Spanning tree by BFS, propagating (-1)^(m-1) across each move.
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (const auto& e : g.edges()) {
    if (e.lengths.size() != 1) throw UsageError("T-sign needs the uncontracted graph");
    adj[e.a].push_back({e.b, e.lengths[0]});
    adj[e.b].push_back({e.a, e.lengths[0]});
  }
  std::deque<int> queue{*start};
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (auto [b, m] : adj[a]) {
      if (!sign[b]) {
        sign[b] = (m % 2 == 0) ? -sign[a] : sign[a];
        queue.push_back(b);
      }
    }
  }
  for (const auto& e : g.edges()) {
    int m = e.lengths[0];
    int expected = (m % 2 == 0) ? -sign[e.a] : sign[e.a];
    if (sign[e.b] != expected)
      throw InvariantViolation("T-sign inconsistent on edge " + g.vertices()[e.a].to_string() + " - " +
                               g.vertices()[e.b].to_string());
  }
  SignAssignment out;
  out.kind = SignKind::T;
  for (int v = 0; v < n; ++v) {
    if (!sign[v]) throw InvariantViolation("graph of reduced words is disconnected");
    for (const auto& w : g.classes()[v]) out.values[w] = sign[v];
  }
  return out;
}

SignAssignment t_sign(const CoxeterSystem& sys, TSignOptions options) {
  return t_sign(sys, build_graph(sys, sys.longest_element()), options);
}

SignAssignment punctual_sign(const SignAssignment& s, const SignAssignment& t) {
  SignAssignment out;
  out.kind = SignKind::Punctual;
  for (const auto& [w, tv] : t.values) out.values[w] = tv * s.at(w);
  return out;
}

SignAssignment punctual_sign(const CoxeterSystem& sys, TSignOptions options) {
  RedGraph g = build_graph(sys, sys.longest_element());
  return punctual_sign(s_sign_assignment(g), t_sign(sys, g, options));
}

SignAssignment sign_function(const CoxeterSystem& sys, SignKind kind, TSignOptions options) {
  RedGraph g = build_graph(sys, sys.longest_element());
  switch (kind) {
    case SignKind::S: return s_sign_assignment(g);
    case SignKind::T: return t_sign(sys, g, options);
    case SignKind::Punctual: return punctual_sign(s_sign_assignment(g), t_sign(sys, g, options));
  }
  return {};
}

namespace {

std::string class_label(const std::vector<Word>& members) {
  if (members.size() == 1) return members.front().to_string();
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += members[i].to_string();
  }
  return out + "}";
}

// Sign of a class when every member agrees, 0 otherwise.
int class_sign(const std::vector<Word>& members, const SignAssignment& signs) {
  int s = signs.at(members.front());
  for (const auto& w : members)
    if (signs.at(w) != s) return 0;
  return s;
}

}  // namespace

std::string to_dot(const RedGraph& g, const SignAssignment* signs, const std::string& name) {
  std::ostringstream out;
  out << "graph \"" << name << "\" {\n  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    std::string label = class_label(g.classes()[v]);
    if (signs) {
      int s = class_sign(g.classes()[v], *signs);
      label += s > 0 ? " +" : (s < 0 ? " -" : " ?");
    }
    out << "  v" << v << " [label=\"" << label << "\"];\n";
  }
  for (const auto& e : g.edges()) {
    for (int l : e.lengths) {
      out << "  v" << e.a << " -- v" << e.b << " [label=\"" << l << "\", style=" << (l % 2 == 0 ? "solid" : "dashed");
      if (l == 4 || l == 5) out << ", color=\"black:black\"";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_json(const RedGraph& g, const SignAssignment* signs) {
  nlohmann::ordered_json j;
  j["vertices"] = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    nlohmann::ordered_json node;
    node["id"] = v;
    node["representative"] = g.vertices()[v].to_string();
    node["members"] = nlohmann::ordered_json::array();
    for (const auto& w : g.classes()[v]) node["members"].push_back(w.to_string());
    j["vertices"].push_back(node);
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges())
    for (int l : e.lengths) j["edges"].push_back({{"a", e.a}, {"b", e.b}, {"length", l}});
  if (signs) {
    j["sign_kind"] = sign_kind_name(signs->kind);
    nlohmann::ordered_json s = nlohmann::ordered_json::object();
    for (const auto& [w, v] : signs->values) s[w.to_string()] = v;
    j["signs"] = s;
  }
  return j.dump(2) + "\n";
}

}  // namespace swl
