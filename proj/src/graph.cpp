#include "degrank/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "degrank/errors.hpp"

namespace degrank {

Graph::Graph(std::size_t node_count, std::vector<std::pair<NodeId, NodeId>> edges)
    : node_count_(node_count) {
    for (auto& [u, v] : edges) {
        if (u >= node_count_ || v >= node_count_) {
            throw std::invalid_argument("edge endpoint " + std::to_string(std::max(u, v)) +
                                        " out of range for node count " +
                                        std::to_string(node_count_));
        }
        if (u > v) std::swap(u, v);
    }
    std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    degrees_.assign(node_count_, 0);
    for (const auto& [u, v] : edges) {
        ++degrees_[u];
        ++degrees_[v];
    }
    offsets_.assign(node_count_ + 1, 0);
    for (std::size_t i = 0; i < node_count_; ++i) {
        offsets_[i + 1] = offsets_[i] + degrees_[i];
    }
    adjacency_.resize(offsets_[node_count_]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges) {
        adjacency_[cursor[u]++] = v;
        adjacency_[cursor[v]++] = u;
    }
    for (std::size_t i = 0; i < node_count_; ++i) {
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
    }
}

void Graph::set_original_ids(std::vector<std::uint64_t> ids) {
    if (ids.size() != node_count_) {
        throw std::invalid_argument("original id table size mismatch");
    }
    original_ids_ = std::move(ids);
}

LoadResult load_edge_list(std::istream& in) {
    LoadStats stats;
    std::unordered_map<std::uint64_t, NodeId> dense;
    std::vector<std::uint64_t> original;
    std::vector<std::pair<NodeId, NodeId>> edges;

    auto intern = [&](std::uint64_t label) -> NodeId {
        auto [it, fresh] = dense.try_emplace(label, static_cast<NodeId>(original.size()));
        if (fresh) original.push_back(label);
        return it->second;
    };

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string first;
        if (!(tokens >> first) || first.front() == '#') continue;

        std::uint64_t u = 0, v = 0;
        std::string second, extra;
        if (!(tokens >> second) || (tokens >> extra)) {
            throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                                     ": expected exactly two node ids");
        }
        try {
            std::size_t pos_u = 0, pos_v = 0;
            u = std::stoull(first, &pos_u);
            v = std::stoull(second, &pos_v);
            if (pos_u != first.size() || pos_v != second.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::runtime_error("parse error at line " + std::to_string(line_no) +
                                     ": non-integer node id");
        }
        ++stats.edge_lines;
        NodeId du = intern(u);
        NodeId dv = intern(v);
        if (du == dv) {
            ++stats.self_loops_dropped;
            continue;
        }
        edges.emplace_back(std::min(du, dv), std::max(du, dv));
    }
    if (original.empty()) {
        throw std::runtime_error("empty edge list: no nodes found");
    }

    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    stats.duplicate_edges_dropped = static_cast<std::size_t>(edges.end() - last);
    edges.erase(last, edges.end());

    Graph g(original.size(), std::move(edges));
    g.set_original_ids(std::move(original));
    return {std::move(g), stats};
}

LoadResult load_edge_list_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open edge list: " + path.string());
    }
    return load_edge_list(in);
}

void save_edge_list(const Graph& g, std::ostream& out, std::string_view meta) {
    if (!meta.empty()) {
        out << "# " << meta << '\n';
    }
    // canonical order: sorted by original labels, so the bytes depend only on
    // the labeled edge set, not on the internal id assignment
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    edges.reserve(g.edge_count());
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (v > u) {
                const std::uint64_t a = g.original_id(u);
                const std::uint64_t b = g.original_id(v);
                edges.emplace_back(std::min(a, b), std::max(a, b));
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) {
        out << a << ' ' << b << '\n';
    }
    if (!out) {
        throw std::runtime_error("edge list write failed");
    }
}

DegreeSequence degree_sequence(const Graph& g) {
    if (g.node_count() == 0) {
        throw std::invalid_argument("degree_sequence: empty graph");
    }
    DegreeSequence seq;
    seq.degrees = g.degrees();
    auto [lo, hi] = std::minmax_element(seq.degrees.begin(), seq.degrees.end());
    seq.k_min = *lo;
    seq.k_max = *hi;
    const std::uint64_t total = std::accumulate(seq.degrees.begin(), seq.degrees.end(),
                                                std::uint64_t{0});
    seq.d_avg = static_cast<double>(total) / static_cast<double>(seq.degrees.size());
    return seq;
}

RankTable competition_ranks(std::span<const std::uint32_t> degrees) {
    if (degrees.empty()) {
        throw std::invalid_argument("competition_ranks: empty degree sequence");
    }
    const std::uint32_t k_max = *std::max_element(degrees.begin(), degrees.end());
    std::vector<std::uint32_t> count(static_cast<std::size_t>(k_max) + 1, 0);
    for (std::uint32_t d : degrees) ++count[d];

    // greater[d] = number of nodes with degree strictly above d
    std::vector<std::uint32_t> greater(static_cast<std::size_t>(k_max) + 2, 0);
    for (std::uint32_t d = k_max; d > 0; --d) {
        greater[d - 1] = greater[d] + count[d];
    }
    RankTable table;
    table.rank.resize(degrees.size());
    for (std::size_t u = 0; u < degrees.size(); ++u) {
        table.rank[u] = greater[degrees[u]] + 1;
    }
    return table;
}

RankTable exact_ranks(const Graph& g) {
    if (g.node_count() == 0) {
        throw std::invalid_argument("exact_ranks: empty graph");
    }
    return competition_ranks(g.degrees());
}

RankTable ordinal_ranks(std::span<const std::uint32_t> degrees) {
    if (degrees.empty()) {
        throw std::invalid_argument("ordinal_ranks: empty degree sequence");
    }
    std::vector<std::uint32_t> order(degrees.size());
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (degrees[a] != degrees[b]) return degrees[a] > degrees[b];
        return a < b;
    });
    RankTable table;
    table.rank.resize(degrees.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        table.rank[order[pos]] = static_cast<std::uint32_t>(pos + 1);
    }
    return table;
}

RankTable ordinal_ranks(const Graph& g) {
    if (g.node_count() == 0) {
        throw std::invalid_argument("ordinal_ranks: empty graph");
    }
    return ordinal_ranks(g.degrees());
}

} // namespace degrank
