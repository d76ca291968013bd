#pragma once

#include "subshift/bratteli.hpp"

namespace subshift {

/// Finite truncation of an infinite path: for each level 1..depth the vertex
/// there and the order index of the chosen incoming edge. The level-1 index
/// picks one of the first_level parallel edges from the root.
struct PathPrefix {
  struct Edge {
    Letter vertex;            // range vertex at this level
    std::uint32_t order_idx;  // position among the vertex's incoming edges
    bool operator==(const Edge&) const = default;
  };
  std::vector<Edge> edges;  // edges[n-1] describes level n

  std::size_t depth() const { return edges.size(); }
  std::uint32_t first_edge() const { return edges.front().order_idx; }
  Letter top() const { return edges.back().vertex; }
  bool operator==(const PathPrefix&) const = default;
  bool operator<(const PathPrefix& o) const { return edges < o.edges; }
};

/// Evaluates the Vershik successor on path prefixes of a closing diagram.
/// Stepping a prefix with a non-maximal edge never consults the pairing;
/// a fully maximal prefix steps through pairing of its determining vertex.
class VershikMachine {
 public:
  VershikMachine(OrderedBratteliDiagram diagram, ClosingReport closing,
                 std::size_t depth_bound = 32);

  const OrderedBratteliDiagram& diagram() const { return diagram_; }
  const ClosingReport& closing() const { return closing_; }
  std::size_t depth_bound() const { return depth_bound_; }

  /// Minimal / maximal prefix of the tower through `top` at `depth`.
  PathPrefix minimal_prefix(Letter top, std::size_t depth) const;
  PathPrefix maximal_prefix(Letter top, std::size_t depth) const;

  bool is_maximal(const PathPrefix& p) const;
  bool is_minimal(const PathPrefix& p) const;

  /// Vershik successor. A fully maximal prefix requires the closing pairing
  /// and maps to the truncated minimal path of the paired vertex.
  PathPrefix successor(const PathPrefix& p) const;

  /// Inverse of successor on non-minimal prefixes.
  PathPrefix predecessor(const PathPrefix& p) const;

  /// Level-1 vertex letters along the orbit of `start`, one per step.
  /// Errors once the orbit needs information beyond the representable depth
  /// (wrapping past a maximal prefix more often than the pairing allows).
  Word orbit_labels(const PathPrefix& start, std::size_t count) const;

  /// Enumeration order of all depth-d prefixes: every tower is swept bottom
  /// to top by successor steps, towers follow each other in vertex order
  /// starting from `start_top`. Visits every prefix exactly once.
  std::vector<PathPrefix> sweep(Letter start_top, std::size_t depth) const;

  void validate(const PathPrefix& p) const;

 private:
  OrderedBratteliDiagram diagram_;
  ClosingReport closing_;
  std::size_t depth_bound_;
};

}  // namespace subshift
