#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "quadcount/errors.hpp"

namespace quadcount {

using VertexId = std::uint32_t;

// Immutable undirected simple graph. Vertex ids are dense in
// [0, vertex_count); neighbor lists are sorted ascending. A remap table
// keeps the original input ids for report output.
//
// Read-only after construction and safe for concurrent reads.
class Graph {
 public:
  struct Options {
    // Vertices over this degree additionally get a hash membership set;
    // has_edge results are identical either way.
    std::uint32_t hash_degree_threshold = 4096;
  };

  Graph() = default;

  // Parse a SNAP-style edge list: one "u v" pair per line, '#' comments,
  // arbitrary whitespace. Self-loops dropped, duplicate/reversed edges
  // merged, external ids remapped dense by first appearance.
  static Graph from_edge_list_text(std::string_view text, const Options& opt = {});
  static Graph from_file(const std::string& path, const Options& opt = {});

  // Build from pre-remapped dense edges; self-loops dropped, duplicates
  // merged. Vertex count may exceed the largest endpoint (isolated tail).
  static Graph from_edges(std::size_t vertex_count,
                          std::vector<std::pair<VertexId, VertexId>> edges,
                          const Options& opt = {});

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }

  std::uint32_t degree(VertexId v) const {
    return (std::uint32_t)(offsets_[v + 1] - offsets_[v]);
  }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  // Edge ids of the edges incident to v, parallel to neighbors(v).
  std::span<const std::uint32_t> incident_edges(VertexId v) const {
    return {incident_.data() + offsets_[v], incident_.data() + offsets_[v + 1]};
  }
  // Endpoints of edge e, lo < hi.
  std::pair<VertexId, VertexId> edge(std::size_t e) const { return edges_[e]; }

  bool has_edge(VertexId u, VertexId v) const;

  // Number of common neighbors |Γ(u) ∩ Γ(v)| by sorted-list merge.
  std::uint32_t common_neighbor_count(VertexId u, VertexId v) const;

  // Vertices adjacent to neither endpoint of edge va:
  // |V| − (deg(v) + deg(a) − |Γ(v)∩Γ(a)|). Throws if va is not an edge.
  std::uint64_t complement_neighbor_count(VertexId v, VertexId a) const;

  // Original input id of dense vertex v.
  std::uint64_t original_id(VertexId v) const { return original_ids_[v]; }
  const std::vector<std::uint64_t>& remap_table() const { return original_ids_; }

  // Same vertex set and remap table, new edge set (used by the sparsifier).
  Graph with_edges(std::vector<std::pair<VertexId, VertexId>> edges) const;

 private:
  void build(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges,
             std::vector<std::uint64_t> original_ids, const Options& opt);

  std::vector<std::uint64_t> offsets_;   // CSR offsets, size n+1
  std::vector<VertexId> adjacency_;      // sorted neighbor lists
  std::vector<std::uint32_t> incident_;  // edge id per adjacency slot
  std::vector<std::pair<VertexId, VertexId>> edges_;  // (lo,hi), sorted
  std::vector<std::uint64_t> original_ids_;
  std::vector<std::unordered_set<VertexId>> hash_sets_;  // only high-degree vertices
  std::vector<std::uint32_t> hash_slot_;                 // vertex -> hash_sets_ index or npos
  Options options_;
};

}  // namespace quadcount
