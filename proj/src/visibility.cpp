#include "visagg/visibility.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "visagg/errors.hpp"

namespace visagg {

VisibilityGraph::VisibilityGraph(std::size_t vertex_count, std::vector<Edge> edges) {
    for (Edge& e : edges) {
        if (e.first == e.second)
            throw contract_error("self-loop at vertex " + std::to_string(e.first));
        if (e.first > e.second) std::swap(e.first, e.second);
        if (e.second >= vertex_count)
            throw contract_error("edge endpoint " + std::to_string(e.second) +
                                 " out of range for " + std::to_string(vertex_count) +
                                 " vertices");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    degrees_.assign(vertex_count, 0);
    adjacency_.assign(vertex_count, {});
    for (const Edge& e : edges_) {
        ++degrees_[e.first];
        ++degrees_[e.second];
        adjacency_[e.first].push_back(e.second);
        adjacency_[e.second].push_back(e.first);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool VisibilityGraph::has_edge(std::size_t a, std::size_t b) const {
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), Edge{a, b});
}

namespace {

// Intermediate point k blocks the (i, j) chord when it lies on or above it:
//   (y_k - y_j) * (t_j - t_i) >= (y_i - y_j) * (t_j - t_k)
// with t_j - t_i > 0 guaranteed by the strictly increasing abscissas.
inline bool blocks(const TimePoint& a, const TimePoint& b, const TimePoint& mid) {
    return (mid.y - b.y) * (b.t - a.t) >= (a.y - b.y) * (b.t - mid.t);
}

} // namespace

bool visible(const TimeSeries& series, std::size_t i, std::size_t j) {
    const std::size_t n = series.size();
    if (i >= j || j >= n)
        throw contract_error("visible requires 0 <= i < j < n, got i=" + std::to_string(i) +
                             " j=" + std::to_string(j) + " n=" + std::to_string(n));
    for (std::size_t k = i + 1; k < j; ++k)
        if (blocks(series[i], series[j], series[k])) return false;
    return true;
}

VisibilityGraph build_graph_oracle(const TimeSeries& series) {
    const std::size_t n = series.size();
    std::vector<VisibilityGraph::Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (visible(series, i, j)) edges.emplace_back(i, j);
    return VisibilityGraph(n, std::move(edges));
}

VisibilityGraph build_graph_fast(const TimeSeries& series) {
    const std::size_t n = series.size();
    std::vector<VisibilityGraph::Edge> edges;
    if (n >= 2) edges.reserve(2 * n);

    for (std::size_t i = 0; i + 1 < n; ++i) {
        const TimePoint& a = series[i];
        edges.emplace_back(i, i + 1);

        // Highest sightline from i so far, kept as an index so slope
        // comparisons stay in the division-free cross-multiplied form.
        std::size_t blocker = i + 1;
        for (std::size_t j = i + 2; j < n; ++j) {
            const TimePoint& b = series[j];
            const TimePoint& c = series[blocker];
            // slope(i, j) > slope(i, blocker) ?
            const bool above = (b.y - a.y) * (c.t - a.t) > (c.y - a.y) * (b.t - a.t);
            if (above) {
                edges.emplace_back(i, j);
                blocker = j;
            }
        }
    }
    return VisibilityGraph(n, std::move(edges));
}

std::map<std::size_t, std::size_t> degree_distribution(const VisibilityGraph& graph) {
    std::map<std::size_t, std::size_t> histogram;
    for (std::size_t d : graph.degrees()) ++histogram[d];
    return histogram;
}

void write_edge_list(const VisibilityGraph& graph, std::ostream& out) {
    for (const auto& [i, j] : graph.edges()) out << i << ' ' << j << '\n';
}

} // namespace visagg
