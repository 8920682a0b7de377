// Plumbing graphs: vertex-weighted trees with negative definite intersection
// form. Vertices carry an Euler number e_v; all genera are zero and multiple
// edges are rejected, so the graph data is exactly (ids, weights, tree edges).
//
// All transforms return new graphs by value; existing vertex ids are
// preserved and newly created vertices get a fresh deterministic id.

#pragma once

#include "plumbsw/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace plumbsw {

struct PlumbingGraph {
  std::vector<std::string> ids;             // vertex ids, file order
  std::vector<std::int64_t> euler;          // e_v
  std::vector<std::pair<int, int>> edges;   // index pairs, i < j

  int size() const { return static_cast<int>(ids.size()); }

  std::optional<int> index_of(const std::string& id) const;

  /// Valency delta_v.
  std::vector<int> valencies() const;
  std::vector<std::vector<int>> adjacency() const;
  bool has_edge(int v, int w) const;

  /// Intersection matrix: I_vv = e_v, I_vw = 1 iff edge.
  IMat intersection_matrix() const;
};

struct ValidationReport {
  bool pass = true;
  std::vector<std::string> reasons;
};

/// Line-oriented text format: `# comment`, `vertex <id> <int>`, `edge <id> <id>`.
PlumbingGraph parse_graph(const std::string& text);

/// {"vertices":[{"id":"a","e":-2}],"edges":[["a","b"]]}
PlumbingGraph parse_graph_json(const std::string& text);

/// Dispatches on the ".json" extension.
PlumbingGraph load_graph_file(const std::string& path);

std::string graph_to_text(const PlumbingGraph& g);

/// Pass iff connected, acyclic, and -I positive definite (exact leading
/// principal minors). Failures are report entries, not exceptions.
ValidationReport validate(const PlumbingGraph& g);

/// Replaces the edge (v,w) by a new -1 vertex joined to both ends;
/// e_v and e_w drop by one.
PlumbingGraph blow_up_edge(const PlumbingGraph& g, const std::string& v,
                           const std::string& w);

/// Attaches a new -1 vertex to v; e_v drops by one.
PlumbingGraph blow_up_vertex(const PlumbingGraph& g, const std::string& v);

/// Removes a -1 vertex of valency <= 2, reconnecting and bumping neighbours.
PlumbingGraph blow_down(const PlumbingGraph& g, const std::string& v);

/// Removes an end-vertex u and its supporting edge.
PlumbingGraph delete_end_vertex(const PlumbingGraph& g, const std::string& u);

/// Stable fingerprint of the graph up to nothing (ids included); used to tag
/// result tables with the exact input they came from.
std::uint64_t graph_hash(const PlumbingGraph& g);

}  // namespace plumbsw
