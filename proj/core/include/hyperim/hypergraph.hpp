#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperim {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Raised for malformed input files and for edge lists that violate the
/// hypergraph invariants.
class HypergraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Immutable undirected, unweighted hypergraph over dense node ids 0..n-1.
///
/// Every hyperedge holds at least two distinct nodes, no two hyperedges are
/// equal as sets and every node belongs to at least one hyperedge. Members,
/// incidence lists and neighbor lists are stored in CSR form and sorted
/// ascending, so iteration order is deterministic.
///
/// The degree of a node is the number of distinct co-members across all its
/// hyperedges; the hyperdegree is the number of hyperedges containing it.
class Hypergraph {
 public:
  /// Builds a hypergraph from edges over ids 0..node_count-1. Each edge is
  /// sorted internally. Throws HypergraphError on an invariant violation.
  /// `tokens`, when non-empty, must have node_count entries and names the
  /// nodes for reporting; otherwise nodes are named by their decimal id.
  Hypergraph(std::size_t node_count, std::vector<std::vector<NodeId>> edges,
             std::vector<std::string> tokens = {});

  /// Convenience for tests: node count is max id + 1.
  static Hypergraph from_edges(std::vector<std::vector<NodeId>> edges);

  std::size_t node_count() const noexcept { return incidence_offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edge_offsets_.size() - 1; }

  std::span<const NodeId> edge(EdgeId e) const;
  std::size_t edge_size(EdgeId e) const { return edge(e).size(); }

  /// E(v): indices of hyperedges containing v, ascending.
  std::span<const EdgeId> incident_edges(NodeId v) const;

  /// N(v): distinct co-members of v across its hyperedges, ascending. Never
  /// contains v.
  std::span<const NodeId> neighbors(NodeId v) const;

  std::size_t degree(NodeId v) const { return neighbors(v).size(); }
  std::size_t hyperdegree(NodeId v) const { return incident_edges(v).size(); }

  std::string_view token(NodeId v) const;
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }

  /// Total number of memberships, i.e. the sum of all edge sizes.
  std::size_t pin_count() const noexcept { return edge_nodes_.size(); }

 private:
  void check_node(NodeId v) const;

  std::vector<std::size_t> edge_offsets_;
  std::vector<NodeId> edge_nodes_;
  std::vector<std::size_t> incidence_offsets_;
  std::vector<EdgeId> incidence_;
  std::vector<std::size_t> neighbor_offsets_;
  std::vector<NodeId> neighbor_nodes_;
  std::vector<std::string> tokens_;
};

/// Counters describing what preprocessing removed while loading.
struct LoadReport {
  std::size_t lines_read = 0;
  std::size_t duplicate_tokens_dropped = 0;
  std::size_t short_lines_dropped = 0;
  std::size_t duplicate_edges_dropped = 0;
};

/// Parses the hyperedge-list format: one hyperedge per line, comma-separated
/// node tokens, blank lines and lines starting with '#' ignored. Tokens are
/// trimmed of surrounding whitespace.
///
/// Preprocessing runs in a fixed order: duplicate tokens within a line are
/// dropped, then lines with fewer than two distinct tokens, then hyperedges
/// equal as sets to an earlier one. Surviving tokens are mapped to dense ids
/// in first-appearance order.
Hypergraph parse_hypergraph(std::istream& in, LoadReport* report = nullptr);

Hypergraph load_hypergraph(const std::filesystem::path& path,
                           LoadReport* report = nullptr);

/// Writes the canonical form: one line per hyperedge, members by token in
/// ascending id order.
void write_hypergraph(std::ostream& out, const Hypergraph& h);

void save_hypergraph(const std::filesystem::path& path, const Hypergraph& h);

struct HypergraphStats {
  std::size_t node_count = 0;
  std::size_t hyperedge_count = 0;
  double avg_hyperdegree = 0.0;
  double std_hyperdegree = 0.0;
  double max_hyperdegree = 0.0;
  double avg_degree = 0.0;
  double std_degree = 0.0;
  double max_degree = 0.0;
};

/// Summary statistics over all nodes. Standard deviations are population
/// (divide by n) values.
HypergraphStats compute_stats(const Hypergraph& h);

}  // namespace hyperim
