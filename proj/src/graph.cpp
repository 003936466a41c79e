#include "quadcount/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "quadcount/util.hpp"

namespace quadcount {

namespace {

constexpr std::uint32_t kNoHashSlot = std::numeric_limits<std::uint32_t>::max();

// Largest vertex count whose 4-subset count fits in 64 bits; graphs beyond
// this are rejected at load so all downstream counts stay exact.
std::size_t max_vertex_count() {
  static const std::size_t cap = [] {
    std::size_t n = 4;
    while (true) {
      unsigned __int128 c = (unsigned __int128)(n + 1) * n * (n - 1) * (n - 2) / 24;
      if (c > ~(std::uint64_t)0) return n;
      ++n;
    }
  }();
  return cap;
}

}  // namespace

Graph Graph::from_edge_list_text(std::string_view text, const Options& opt) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::vector<std::uint64_t> original_ids;
  std::unordered_map<std::uint64_t, VertexId> dense;

  auto intern = [&](std::uint64_t ext) -> VertexId {
    auto [it, inserted] = dense.try_emplace(ext, (VertexId)original_ids.size());
    if (inserted) original_ids.push_back(ext);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    std::size_t i = 0;
    while (i < line.size() && std::isspace((unsigned char)line[i])) ++i;
    if (i >= line.size() || line[i] == '#') continue;

    std::uint64_t tok[2];
    int ntok = 0;
    while (i < line.size()) {
      if (std::isspace((unsigned char)line[i])) {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < line.size() && !std::isspace((unsigned char)line[i])) ++i;
      std::string_view word = line.substr(start, i - start);
      std::uint64_t value = 0;
      bool ok = !word.empty();
      for (char c : word) {
        if (c < '0' || c > '9') {
          ok = false;
          break;
        }
        std::uint64_t digit = (std::uint64_t)(c - '0');
        if (value > (~(std::uint64_t)0 - digit) / 10) {
          ok = false;
          break;
        }
        value = value * 10 + digit;
      }
      if (!ok) throw ParseError("malformed vertex id token '" + std::string(word) + "'", line_no);
      if (ntok == 2) throw ParseError("expected two tokens per line, got more", line_no);
      tok[ntok++] = value;
    }
    if (ntok == 0) continue;
    if (ntok != 2) throw ParseError("expected two tokens per line, got one", line_no);

    VertexId u = intern(tok[0]);
    VertexId v = intern(tok[1]);
    if (u != v) edges.emplace_back(u, v);
  }

  Graph g;
  g.build(original_ids.size(), std::move(edges), std::move(original_ids), opt);
  return g;
}

Graph Graph::from_file(const std::string& path, const Options& opt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_edge_list_text(buf.str(), opt);
}

Graph Graph::from_edges(std::size_t vertex_count,
                        std::vector<std::pair<VertexId, VertexId>> edges,
                        const Options& opt) {
  std::vector<std::uint64_t> ids(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) ids[v] = v;
  Graph g;
  g.build(vertex_count, std::move(edges), std::move(ids), opt);
  return g;
}

Graph Graph::with_edges(std::vector<std::pair<VertexId, VertexId>> edges) const {
  Graph g;
  g.build(vertex_count(), std::move(edges), original_ids_, options_);
  return g;
}

void Graph::build(std::size_t n, std::vector<std::pair<VertexId, VertexId>> edges,
                  std::vector<std::uint64_t> original_ids, const Options& opt) {
  if (n > max_vertex_count())
    throw SizeError("graph has " + std::to_string(n) +
                    " vertices; 4-subset count would overflow 64-bit counters");
  options_ = opt;
  original_ids_ = std::move(original_ids);

  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) throw ContractViolation("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  offsets_.assign(n + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offsets_[u + 1];
    ++offsets_[v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];

  adjacency_.resize(2 * edges_.size());
  incident_.resize(2 * edges_.size());
  std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [u, v] = edges_[e];
    adjacency_[cursor[u]] = v;
    incident_[cursor[u]++] = (std::uint32_t)e;
    adjacency_[cursor[v]] = u;
    incident_[cursor[v]++] = (std::uint32_t)e;
  }
  // edges_ is sorted, so each neighbor list comes out sorted already.

  hash_slot_.assign(n, kNoHashSlot);
  hash_sets_.clear();
  for (std::size_t v = 0; v < n; ++v) {
    if (degree((VertexId)v) > options_.hash_degree_threshold) {
      hash_slot_[v] = (std::uint32_t)hash_sets_.size();
      auto nb = neighbors((VertexId)v);
      hash_sets_.emplace_back(nb.begin(), nb.end());
    }
  }
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u == v) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  if (std::uint32_t slot = hash_slot_[u]; slot != kNoHashSlot)
    return hash_sets_[slot].count(v) != 0;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::uint32_t Graph::common_neighbor_count(VertexId u, VertexId v) const {
  auto a = neighbors(u);
  auto b = neighbors(v);
  std::uint32_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (a[i] > b[j])
      ++j;
    else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::uint64_t Graph::complement_neighbor_count(VertexId v, VertexId a) const {
  if (!has_edge(v, a))
    throw ContractViolation("complement_neighbor_count requires an edge, got (" +
                            std::to_string(v) + "," + std::to_string(a) + ")");
  std::uint64_t covered = (std::uint64_t)degree(v) + degree(a) - common_neighbor_count(v, a);
  return vertex_count() - covered;
}

}  // namespace quadcount
