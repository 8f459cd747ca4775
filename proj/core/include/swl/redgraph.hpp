#pragma once

// The graph of reduced expressions of an element, its contraction minors,
// 2-colourings, and the T- and punctual sign functions on R(w_0).

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "swl/coxeter.hpp"

namespace swl {

struct RedGraphEdge {
  int a = 0;  // vertex indices, a <= b (a == b is a loop left by contraction)
  int b = 0;
  std::vector<int> lengths;  // surviving braid lengths, sorted
};

class RedGraph {
 public:
  /// Vertex representatives: the lexicographically least member of each class.
  const std::vector<Word>& vertices() const { return representatives_; }
  const std::vector<std::vector<Word>>& classes() const { return classes_; }
  const std::vector<RedGraphEdge>& edges() const { return edges_; }
  std::set<int> kept_lengths() const;

  std::size_t vertex_count() const { return representatives_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  /// Number of (edge, length) pairs with the given length.
  std::size_t edges_of_length(int length) const;
  /// Vertex index of the class containing `w`, if any.
  std::optional<int> find(const Word& w) const;

  std::vector<std::vector<int>> adjacency() const;

 private:
  friend RedGraph build_graph(const CoxeterSystem&, const Element&, Budget);
  friend RedGraph contract(const RedGraph&, const std::set<int>&);
  void index_members();

  std::vector<Word> representatives_;
  std::vector<std::vector<Word>> classes_;
  std::vector<RedGraphEdge> edges_;
  std::map<Word, int> member_index_;
};

RedGraph build_graph(const CoxeterSystem& sys, const Element& w, Budget budget = {});

/// Contracts every edge carrying a label in `lengths`; parallel edges fuse.
RedGraph contract(const RedGraph& g, const std::set<int>& lengths);

enum class MinorKind { Full, Comm, Braid, Odd, Even, Two };

MinorKind parse_minor_kind(const std::string& name);
std::string minor_kind_name(MinorKind kind);

/// Lengths contracted to reach the minor, among the braid lengths of `sys`.
std::set<int> contracted_lengths(const CoxeterSystem& sys, MinorKind kind);
RedGraph minor(const CoxeterSystem& sys, const RedGraph& g, MinorKind kind);

struct Bipartition {
  bool bipartite = true;
  std::vector<int> color;      // +1 / -1 per vertex, vertex 0 gets +1
  std::vector<int> odd_cycle;  // vertex indices of a closed odd walk when not bipartite
};

Bipartition bipartition(const RedGraph& g);

enum class SignKind { S, T, Punctual };

std::string sign_kind_name(SignKind kind);
SignKind parse_sign_kind(const std::string& name);

struct SignAssignment {
  SignKind kind = SignKind::S;
  std::map<Word, int> values;

  int at(const Word& w) const;
};

enum class TNormalization {
  GreedyOccurrence,  // leftmost occurrence inside (s_1...s_n)^infinity
  LexLeast,          // lexicographically least word of R(w_0)
};

struct TSignOptions {
  TNormalization normalization = TNormalization::GreedyOccurrence;
  bool flip = false;
};

/// The reduced word of w_0 whose sign is fixed to +1.
Word t_sign_anchor(const CoxeterSystem& sys, TNormalization normalization);

SignAssignment s_sign_assignment(const RedGraph& g);
/// `g` must be the full graph of w_0. Every edge is validated.
SignAssignment t_sign(const CoxeterSystem& sys, const RedGraph& g, TSignOptions options = {});
SignAssignment t_sign(const CoxeterSystem& sys, TSignOptions options = {});
SignAssignment punctual_sign(const SignAssignment& s, const SignAssignment& t);
SignAssignment punctual_sign(const CoxeterSystem& sys, TSignOptions options = {});

/// Sign function for the given kind over R(w_0).
SignAssignment sign_function(const CoxeterSystem& sys, SignKind kind, TSignOptions options = {});

std::string to_dot(const RedGraph& g, const SignAssignment* signs = nullptr, const std::string& name = "G");
std::string to_json(const RedGraph& g, const SignAssignment* signs = nullptr);

}  // namespace swl
