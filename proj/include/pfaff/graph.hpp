#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pfaff/errors.hpp"

namespace pfaff {

/// Documented genus of a constructed family instance. Metadata only; nothing
/// here computes embeddings.
struct GenusNote {
    int genus;
    std::string source;
    friend bool operator==(const GenusNote&, const GenusNote&) = default;
};

struct Bipartition {
    std::vector<int> u, v; // sorted
    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Simple undirected graph. Edges are stored as (a, b) with a < b, sorted
/// lexicographically; an edge index is the position in that list.
class Graph {
public:
    Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
          std::optional<Bipartition> bipartition = std::nullopt,
          std::optional<GenusNote> genus_note = std::nullopt);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::pair<int, int>& edge(int e) const { return edges_.at(e); }
    const std::optional<Bipartition>& bipartition() const { return bipartition_; }
    const std::optional<GenusNote>& genus_note() const { return genus_note_; }

    /// Index of edge {a, b}, or -1 when absent.
    int edge_index(int a, int b) const;

    bool operator==(const Graph& o) const {
        return n_ == o.n_ && edges_ == o.edges_ && bipartition_ == o.bipartition_;
    }

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::optional<Bipartition> bipartition_;
    std::optional<GenusNote> genus_note_;
};

/// A matching, as a sorted list of edge indices of its graph.
struct Matching {
    std::vector<int> edges;
    friend bool operator==(const Matching&, const Matching&) = default;
};

enum class Family { KNN, K2N, K33Blocks, Chain, ChainPlus };

std::string family_name(Family f);
std::optional<Family> family_from_string(std::string_view name);

/// KNN(n):        complete bipartite K_{n,n}, bipartition recorded.
/// K2N(n):        complete graph on 2n vertices.
/// K33Blocks(r):  r vertex-disjoint copies of K_{3,3}.
/// Chain(g):      K33Blocks(g) plus two connector edges between consecutive
///                blocks; connected, bipartite.
/// ChainPlus(g):  Chain(g) plus one edge inside each part of the first block;
///                non-bipartite.
/// Blocks are numbered consecutively: block i holds vertices 6i..6i+5, the
/// first three in U and the last three in V.
Graph construct_family(Family family, int param);

struct EdgeDeletion {
    Graph graph;
    std::vector<int> old_edge; // old index of surviving edge i
    std::vector<int> new_edge; // new index of old edge e, or -1 if deleted
};

/// Removes the given edge indices; vertices are kept. The index maps record
/// the correspondence with the original edge space.
EdgeDeletion delete_edges(const Graph& g, const std::vector<int>& removed);

Graph disjoint_union(const Graph& a, const Graph& b);

inline constexpr std::size_t kDefaultMatchingCap = 1'000'000;

/// All perfect matchings in lexicographic order of their sorted edge-index
/// sequences. Deterministic; throws ResourceError past the cap.
std::vector<Matching> enumerate_perfect_matchings(
    const Graph& g, std::size_t cap = kDefaultMatchingCap);

bool is_connected(const Graph& g);

struct CoverageCheck {
    bool covered;
    std::string reason; // nonempty when covered == false
};

/// Matching-covered test: connected and every edge lies in some perfect
/// matching. Disconnected input reports false with a reason.
CoverageCheck matching_coverage(const Graph& g,
                                std::size_t cap = kDefaultMatchingCap);

inline bool is_matching_covered(const Graph& g,
                                std::size_t cap = kDefaultMatchingCap) {
    return matching_coverage(g, cap).covered;
}

/// Graph text format:
///   vertices <n>
///   bipartition <u...> | <v...>   (optional)
///   edge <a> <b>                  (one line per edge, canonical order)
std::string graph_to_text(const Graph& g);
Graph graph_from_text(std::string_view text);

} // namespace pfaff
