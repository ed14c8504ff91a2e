#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "visagg/series.hpp"

namespace visagg {

/// Undirected simple graph on the indices of a time series.
///
/// Edges are stored canonically as (min, max) in lexicographic order;
/// per-vertex neighbor lists are sorted and derived once at construction.
class VisibilityGraph {
  public:
    using Edge = std::pair<std::size_t, std::size_t>;

    VisibilityGraph() = default;

    /// Builds from a vertex count and an edge list. Edges are canonicalized,
    /// deduplicated and validated (no self-loops, endpoints < n).
    VisibilityGraph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const { return degrees_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::size_t>& degrees() const { return degrees_; }
    std::size_t degree(std::size_t v) const { return degrees_[v]; }
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_[v]; }

    bool has_edge(std::size_t a, std::size_t b) const;

    bool operator==(const VisibilityGraph& other) const {
        return degrees_.size() == other.degrees_.size() && edges_ == other.edges_;
    }

  private:
    std::vector<Edge> edges_;
    std::vector<std::size_t> degrees_;
    std::vector<std::vector<std::size_t>> adjacency_;
};

/// Whether points i and j of the series see each other: every intermediate
/// point must lie strictly below the chord joining (t_i, y_i) and (t_j, y_j).
/// A point exactly on the chord blocks, so collinear runs degrade to paths.
/// Adjacent pairs (j == i + 1) are always visible.
///
/// The test is evaluated in cross-multiplied form,
///   (y_k - y_j) * (t_j - t_i) < (y_i - y_j) * (t_j - t_k),
/// which avoids division and keeps the on-the-chord rule exact for
/// integer-valued inputs. Requires i < j < size.
bool visible(const TimeSeries& series, std::size_t i, std::size_t j);

/// Reference construction: applies `visible` to every index pair. O(n^3)
/// worst case; kept as the correctness oracle for the fast builder.
VisibilityGraph build_graph_oracle(const TimeSeries& series);

/// O(n^2) construction. For a fixed left endpoint i, scanning j upward,
/// {i, j} is an edge iff the slope from i to j strictly exceeds the running
/// maximum slope from i to any intermediate point. Produces the same edge
/// set as build_graph_oracle on every input.
VisibilityGraph build_graph_fast(const TimeSeries& series);

/// Histogram of vertex degrees; counts sum to the vertex count.
std::map<std::size_t, std::size_t> degree_distribution(const VisibilityGraph& graph);

/// Debug export: one "i j" pair per line, 0-based, i < j, newline-terminated.
void write_edge_list(const VisibilityGraph& graph, std::ostream& out);

} // namespace visagg
