#include "hyperim/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_map>

namespace hyperim {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n\v\f";
  const auto begin = s.find_first_not_of(kSpace);
  if (begin == std::string_view::npos) return {};
  const auto end = s.find_last_not_of(kSpace);
  return s.substr(begin, end - begin + 1);
}

template <typename T>
std::vector<std::size_t> offsets_of(const std::vector<std::vector<T>>& lists) {
  std::vector<std::size_t> offsets(lists.size() + 1, 0);
  for (std::size_t i = 0; i < lists.size(); ++i) {
    offsets[i + 1] = offsets[i] + lists[i].size();
  }
  return offsets;
}

template <typename T>
std::vector<T> flatten(const std::vector<std::vector<T>>& lists) {
  std::vector<T> flat;
  for (const auto& list : lists) flat.insert(flat.end(), list.begin(), list.end());
  return flat;
}

}  // namespace

Hypergraph::Hypergraph(std::size_t node_count,
                       std::vector<std::vector<NodeId>> edges,
                       std::vector<std::string> tokens)
    : tokens_(std::move(tokens)) {
  if (edges.empty()) throw HypergraphError("empty hypergraph");

  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto& members = edges[e];
    std::sort(members.begin(), members.end());
    if (members.size() < 2) {
      throw HypergraphError("hyperedge " + std::to_string(e) +
                            " has fewer than 2 nodes");
    }
    if (std::adjacent_find(members.begin(), members.end()) != members.end()) {
      throw HypergraphError("hyperedge " + std::to_string(e) +
                            " contains a duplicate node");
    }
    if (members.back() >= node_count) {
      throw HypergraphError("hyperedge " + std::to_string(e) +
                            " references node " +
                            std::to_string(members.back()) + " >= " +
                            std::to_string(node_count));
    }
  }
  {
    std::vector<const std::vector<NodeId>*> order;
    order.reserve(edges.size());
    for (const auto& members : edges) order.push_back(&members);
    std::sort(order.begin(), order.end(),
              [](const auto* a, const auto* b) { return *a < *b; });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (*order[i] == *order[i - 1]) throw HypergraphError("duplicate hyperedge");
    }
  }

  std::vector<std::vector<EdgeId>> incidence(node_count);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (NodeId v : edges[e]) incidence[v].push_back(static_cast<EdgeId>(e));
  }
  for (std::size_t v = 0; v < node_count; ++v) {
    if (incidence[v].empty()) {
      throw HypergraphError("node " + std::to_string(v) +
                            " belongs to no hyperedge");
    }
  }

  std::vector<std::vector<NodeId>> neighbors(node_count);
  for (std::size_t v = 0; v < node_count; ++v) {
    auto& list = neighbors[v];
    for (EdgeId e : incidence[v]) {
      for (NodeId u : edges[e]) {
        if (u != v) list.push_back(u);
      }
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  if (tokens_.empty()) {
    tokens_.reserve(node_count);
    for (std::size_t v = 0; v < node_count; ++v) tokens_.push_back(std::to_string(v));
  } else if (tokens_.size() != node_count) {
    throw HypergraphError("token map size does not match node count");
  }

  edge_offsets_ = offsets_of(edges);
  edge_nodes_ = flatten(edges);
  incidence_offsets_ = offsets_of(incidence);
  incidence_ = flatten(incidence);
  neighbor_offsets_ = offsets_of(neighbors);
  neighbor_nodes_ = flatten(neighbors);
}

Hypergraph Hypergraph::from_edges(std::vector<std::vector<NodeId>> edges) {
  NodeId max_id = 0;
  for (const auto& members : edges) {
    for (NodeId v : members) max_id = std::max(max_id, v);
  }
  const std::size_t node_count = edges.empty() ? 0 : std::size_t{max_id} + 1;
  return Hypergraph(node_count, std::move(edges));
}

void Hypergraph::check_node(NodeId v) const {
  if (v >= node_count()) {
    throw std::out_of_range("node id " + std::to_string(v) + " out of range (n=" +
                            std::to_string(node_count()) + ")");
  }
}

std::span<const NodeId> Hypergraph::edge(EdgeId e) const {
  if (e >= edge_count()) {
    throw std::out_of_range("hyperedge id " + std::to_string(e) + " out of range");
  }
  return {edge_nodes_.data() + edge_offsets_[e], edge_offsets_[e + 1] - edge_offsets_[e]};
}

std::span<const EdgeId> Hypergraph::incident_edges(NodeId v) const {
  check_node(v);
  return {incidence_.data() + incidence_offsets_[v],
          incidence_offsets_[v + 1] - incidence_offsets_[v]};
}

std::span<const NodeId> Hypergraph::neighbors(NodeId v) const {
  check_node(v);
  return {neighbor_nodes_.data() + neighbor_offsets_[v],
          neighbor_offsets_[v + 1] - neighbor_offsets_[v]};
}

std::string_view Hypergraph::token(NodeId v) const {
  check_node(v);
  return tokens_[v];
}

Hypergraph parse_hypergraph(std::istream& in, LoadReport* report) {
  LoadReport local;
  std::vector<std::vector<std::string>> kept;
  std::set<std::vector<std::string>> seen;

  std::string line;
  while (std::getline(in, line)) {
    const auto content = trim(line);
    if (content.empty() || content.front() == '#') continue;
    ++local.lines_read;

    std::vector<std::string> members;
    std::size_t start = 0;
    while (start <= content.size()) {
      auto comma = content.find(',', start);
      if (comma == std::string_view::npos) comma = content.size();
      const auto token = trim(content.substr(start, comma - start));
      if (!token.empty()) {
        if (std::find(members.begin(), members.end(), token) != members.end()) {
          ++local.duplicate_tokens_dropped;
        } else {
          members.emplace_back(token);
        }
      }
      start = comma + 1;
    }

    if (members.size() < 2) {
      ++local.short_lines_dropped;
      continue;
    }
    auto key = members;
    std::sort(key.begin(), key.end());
    if (!seen.insert(std::move(key)).second) {
      ++local.duplicate_edges_dropped;
      continue;
    }
    kept.push_back(std::move(members));
  }
  if (in.bad()) throw HypergraphError("read error while parsing hypergraph");
  if (kept.empty()) throw HypergraphError("empty hypergraph");

  std::unordered_map<std::string, NodeId> ids;
  std::vector<std::string> tokens;
  std::vector<std::vector<NodeId>> edges;
  edges.reserve(kept.size());
  for (const auto& members : kept) {
    auto& edge = edges.emplace_back();
    edge.reserve(members.size());
    for (const auto& token : members) {
      auto [it, inserted] = ids.try_emplace(token, static_cast<NodeId>(tokens.size()));
      if (inserted) tokens.push_back(token);
      edge.push_back(it->second);
    }
  }

  if (report) *report = local;
  const std::size_t n = tokens.size();
  return Hypergraph(n, std::move(edges), std::move(tokens));
}

Hypergraph load_hypergraph(const std::filesystem::path& path, LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw HypergraphError("cannot open hypergraph file '" + path.string() + "'");
  return parse_hypergraph(in, report);
}

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  for (EdgeId e = 0; e < h.edge_count(); ++e) {
    bool first = true;
    for (NodeId v : h.edge(e)) {
      if (!first) out << ',';
      out << h.token(v);
      first = false;
    }
    out << '\n';
  }
}

void save_hypergraph(const std::filesystem::path& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw HypergraphError("cannot write hypergraph file '" + path.string() + "'");
  write_hypergraph(out, h);
  if (!out) throw HypergraphError("write error on '" + path.string() + "'");
}

HypergraphStats compute_stats(const Hypergraph& h) {
  HypergraphStats stats;
  stats.node_count = h.node_count();
  stats.hyperedge_count = h.edge_count();
  const auto n = static_cast<double>(h.node_count());

  double hd_sum = 0, hd_sq = 0, d_sum = 0, d_sq = 0;
  for (NodeId v = 0; v < h.node_count(); ++v) {
    const auto hd = static_cast<double>(h.hyperdegree(v));
    const auto d = static_cast<double>(h.degree(v));
    hd_sum += hd;
    d_sum += d;
    stats.max_hyperdegree = std::max(stats.max_hyperdegree, hd);
    stats.max_degree = std::max(stats.max_degree, d);
  }
  stats.avg_hyperdegree = hd_sum / n;
  stats.avg_degree = d_sum / n;
  // Second pass keeps the variance free of cancellation.
  for (NodeId v = 0; v < h.node_count(); ++v) {
    const double hd = static_cast<double>(h.hyperdegree(v)) - stats.avg_hyperdegree;
    const double d = static_cast<double>(h.degree(v)) - stats.avg_degree;
    hd_sq += hd * hd;
    d_sq += d * d;
  }
  stats.std_hyperdegree = std::sqrt(hd_sq / n);
  stats.std_degree = std::sqrt(d_sq / n);
  return stats;
}

}  // namespace hyperim
