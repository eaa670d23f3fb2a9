#include "circulant/circulant_graph.hpp"

#include <algorithm>
#include <queue>

#include "circulant/error.hpp"

namespace circulant {

bool CirculantDigraph::has_arc(Natural from, Natural to) const noexcept {
  const Natural n = order();
  if (from >= n || to >= n || from == to) return false;
  return connection_.contains((to + n - from) % n);
}

std::vector<Natural> CirculantDigraph::out_neighbors(Natural v) const {
  const Natural n = order();
  std::vector<Natural> out;
  out.reserve(out_degree());
  for (const Natural s : connection_.elements()) {
    if (s != 0) out.push_back((v + s) % n);
  }
  return out;
}

std::vector<Natural> CirculantDigraph::in_neighbors(Natural v) const {
  const Natural n = order();
  std::vector<Natural> in;
  in.reserve(out_degree());
  for (const Natural s : connection_.elements()) {
    if (s != 0) in.push_back((v + n - s) % n);
  }
  return in;
}

std::vector<Arc> CirculantDigraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(order() * out_degree());
  for (Natural v = 0; v < order(); ++v) {
    auto heads = out_neighbors(v);
    std::sort(heads.begin(), heads.end());
    for (const Natural h : heads) out.emplace_back(v, h);
  }
  return out;
}

std::vector<Arc> CirculantGraph::edges() const {
  std::vector<Arc> out;
  for (const auto& [u, v] : digraph_.arcs()) {
    if (u < v) out.emplace_back(u, v);
  }
  return out;
}

CirculantDigraph build_digraph(const ConnectionSet& s) { return CirculantDigraph(s); }

CirculantGraph build_graph(const ConnectionSet& s) {
  if (!is_symmetric(s)) {
    throw DomainError("connection set " + to_string(s) +
                      " is not symmetric (S != -S mod n); it defines only a digraph");
  }
  return CirculantGraph(CirculantDigraph(s));
}

namespace {

template <typename Expand>
std::size_t reachable_from_zero(const CirculantDigraph& g, Expand expand) {
  std::vector<bool> seen(g.order(), false);
  std::queue<Natural> frontier;
  seen[0] = true;
  frontier.push(0);
  std::size_t count = 1;
  while (!frontier.empty()) {
    const Natural v = frontier.front();
    frontier.pop();
    expand(v, [&](Natural w) {
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        frontier.push(w);
      }
    });
  }
  return count;
}

}  // namespace

bool is_connected_bfs(const CirculantDigraph& g) {
  const auto reached = reachable_from_zero(g, [&g](Natural v, auto&& visit) {
    for (const Natural w : g.out_neighbors(v)) visit(w);
    for (const Natural w : g.in_neighbors(v)) visit(w);
  });
  return reached == g.order();
}

bool is_strongly_connected(const CirculantDigraph& g) {
  // 0 reaches everything and everything reaches 0.
  const auto forward = reachable_from_zero(g, [&g](Natural v, auto&& visit) {
    for (const Natural w : g.out_neighbors(v)) visit(w);
  });
  const auto backward = reachable_from_zero(g, [&g](Natural v, auto&& visit) {
    for (const Natural w : g.in_neighbors(v)) visit(w);
  });
  return forward == g.order() && backward == g.order();
}

}  // namespace circulant
