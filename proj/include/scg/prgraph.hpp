#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "scg/perm.hpp"

namespace scg {

struct Edge {
  int u = 0, v = 0;  // 0-based vertices, u < v in canonical form
  int label = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend std::strong_ordering operator<=>(const Edge&, const Edge&) = default;
};

struct Motif {
  enum class Kind { double_edge, triple_edge, square };
  Kind kind;
  std::vector<int> labels;    // sorted
  std::vector<int> vertices;  // endpoints, or the 4 square vertices in cycle order
};

// Edge-labelled multigraph on n vertices with labels 0..rank-1 where, for each
// label, the edges of that label form a partial matching. This is exactly the
// picture of a tuple of involutions: an i-edge {a,b} whenever a^rho_i = b.
class PRGraph {
 public:
  PRGraph(int n, int rank, std::vector<Edge> edges);

  static PRGraph from_generators(const std::vector<Permutation>& gens, int n);
  std::vector<Permutation> to_generators() const;

  int n() const { return n_; }
  int rank() const { return rank_; }
  const std::vector<Edge>& edges() const { return edges_; }  // canonical order

  PRGraph dual() const;  // label i -> rank-1-i
  PRGraph restricted(const std::vector<int>& keep_labels) const;

  std::vector<std::vector<int>> components() const;
  std::vector<Motif> motifs() const;

  // neighbour of x along label i, or -1
  int neighbour(int x, int label) const;

  std::string to_text() const;
  static PRGraph parse_text(std::string_view text);

  friend bool operator==(const PRGraph&, const PRGraph&) = default;

 private:
  int n_ = 0, rank_ = 0;
  std::vector<Edge> edges_;
};

// Label-preserving graph isomorphism (vertex bijection mapping i-edges to
// i-edges). Both graphs must be connected for the propagation to decide.
bool prgraph_isomorphic(const PRGraph& a, const PRGraph& b);

}  // namespace scg
