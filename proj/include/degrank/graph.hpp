#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace degrank {

using NodeId = std::uint32_t;

/// Immutable simple undirected graph stored as CSR adjacency.
/// Node ids are dense 0..n-1; the original (file) labels are kept so
/// output can be written in the caller's id space.
class Graph {
public:
    Graph() = default;

    // Self-loops are dropped and duplicate edges collapsed; endpoints must
    // be < node_count. Adjacency lists come out sorted ascending.
    Graph(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges);

    std::size_t node_count() const { return node_count_; }
    std::size_t edge_count() const { return adjacency_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId u) const {
        return {adjacency_.data() + offsets_[u], adjacency_.data() + offsets_[u + 1]};
    }
    std::uint32_t degree(NodeId u) const { return degrees_[u]; }
    const std::vector<std::uint32_t>& degrees() const { return degrees_; }

    std::uint64_t original_id(NodeId u) const {
        return original_ids_.empty() ? u : original_ids_[u];
    }
    void set_original_ids(std::vector<std::uint64_t> ids);

private:
    std::size_t node_count_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> adjacency_;
    std::vector<std::uint32_t> degrees_;
    std::vector<std::uint64_t> original_ids_; // empty => identity labels
};

struct LoadStats {
    std::size_t edge_lines = 0;
    std::size_t self_loops_dropped = 0;
    std::size_t duplicate_edges_dropped = 0;
};

struct LoadResult {
    Graph graph;
    LoadStats stats;
};

// Text edge list: one "u v" pair per line, whitespace-separated,
// '#'-prefixed comment lines and blank lines ignored. Ids may be sparse;
// they are compacted to 0..n-1 in first-seen order. Self-loops and
// duplicate edges are dropped silently (counted in LoadStats).
// Throws on malformed lines (with line number) and on empty input.
LoadResult load_edge_list(std::istream& in);
LoadResult load_edge_list_file(const std::filesystem::path& path);

// Writes edges (original labels) sorted by dense (u, v). A non-empty meta
// string becomes a leading "# <meta>" comment line.
void save_edge_list(const Graph& g, std::ostream& out, std::string_view meta = {});

struct DegreeSequence {
    std::vector<std::uint32_t> degrees;
    std::uint32_t k_min = 0;
    std::uint32_t k_max = 0;
    double d_avg = 0.0;
};

// Exact k_min / k_max / d_avg over all nodes. Throws on an empty graph.
DegreeSequence degree_sequence(const Graph& g);

struct RankTable {
    std::vector<std::uint32_t> rank; // 1-based, per node
};

// Competition ("1224") ranking: rank(u) = 1 + |{v : deg(v) > deg(u)}|.
// Ties share the rank of the best position in their degree class.
RankTable competition_ranks(std::span<const std::uint32_t> degrees);
RankTable exact_ranks(const Graph& g);

// Strict 1..n ranking from sorting by degree descending, ties broken by
// node id ascending: the "sort everything and number the positions" view
// of the same ordering.
RankTable ordinal_ranks(std::span<const std::uint32_t> degrees);
RankTable ordinal_ranks(const Graph& g);

} // namespace degrank
