#pragma once

#include <utility>
#include <vector>

#include "circulant/connection_set.hpp"

namespace circulant {

using Arc = std::pair<Natural, Natural>;

/// G(n, S): vertices 0..n-1, an arc i -> j iff i != j and j - i lies in S
/// mod n.  Adjacency is answered arithmetically; arcs() materializes.
class CirculantDigraph {
 public:
  explicit CirculantDigraph(ConnectionSet connection) : connection_(std::move(connection)) {}

  [[nodiscard]] Natural order() const noexcept { return connection_.modulus(); }
  [[nodiscard]] const ConnectionSet& connection() const noexcept { return connection_; }

  [[nodiscard]] bool has_arc(Natural from, Natural to) const noexcept;
  [[nodiscard]] std::size_t out_degree() const noexcept { return connection_.size() - 1; }
  [[nodiscard]] std::vector<Natural> out_neighbors(Natural v) const;
  [[nodiscard]] std::vector<Natural> in_neighbors(Natural v) const;

  /// All arcs sorted by (source, target).
  [[nodiscard]] std::vector<Arc> arcs() const;

 private:
  ConnectionSet connection_;
};

/// Undirected view of a circulant digraph with a symmetric connection set.
class CirculantGraph {
 public:
  [[nodiscard]] const CirculantDigraph& digraph() const noexcept { return digraph_; }
  [[nodiscard]] Natural order() const noexcept { return digraph_.order(); }
  [[nodiscard]] bool has_edge(Natural u, Natural v) const noexcept { return digraph_.has_arc(u, v); }
  [[nodiscard]] std::size_t degree() const noexcept { return digraph_.out_degree(); }

  /// Edges {u, v} with u < v, sorted lexicographically.
  [[nodiscard]] std::vector<Arc> edges() const;

 private:
  friend CirculantGraph build_graph(const ConnectionSet&);
  explicit CirculantGraph(CirculantDigraph d) : digraph_(std::move(d)) {}
  CirculantDigraph digraph_;
};

[[nodiscard]] CirculantDigraph build_digraph(const ConnectionSet& s);

/// Throws DomainError when the set is not symmetric.
[[nodiscard]] CirculantGraph build_graph(const ConnectionSet& s);

/// Weak connectivity: traversal from vertex 0 following arcs both ways.
[[nodiscard]] bool is_connected_bfs(const CirculantDigraph& g);

/// Every vertex reaches every other along arc directions.
[[nodiscard]] bool is_strongly_connected(const CirculantDigraph& g);

}  // namespace circulant
