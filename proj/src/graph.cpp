#include "pfaff/graph.hpp"

#include <algorithm>
#include <sstream>

namespace pfaff {

namespace {

void check_bipartition(int n, const std::vector<std::pair<int, int>>& edges,
                       const Bipartition& bip) {
    std::vector<int> side(n, -1);
    for (int u : bip.u) {
        if (u < 0 || u >= n || side[u] != -1)
            throw DomainError("bipartition is not a partition of the vertices");
        side[u] = 0;
    }
    for (int v : bip.v) {
        if (v < 0 || v >= n || side[v] != -1)
            throw DomainError("bipartition is not a partition of the vertices");
        side[v] = 1;
    }
    for (int w = 0; w < n; ++w)
        if (side[w] == -1)
            throw DomainError("bipartition misses vertex " + std::to_string(w));
    for (const auto& [a, b] : edges)
        if (side[a] == side[b])
            throw DomainError("edge inside one part of the bipartition");
}

} // namespace

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges,
             std::optional<Bipartition> bipartition,
             std::optional<GenusNote> genus_note)
    : n_(vertex_count),
      edges_(std::move(edges)),
      bipartition_(std::move(bipartition)),
      genus_note_(std::move(genus_note)) {
    if (n_ < 0) throw DomainError("negative vertex count");
    for (auto& [a, b] : edges_) {
        if (a == b) throw DomainError("loop edge");
        if (a > b) std::swap(a, b);
        if (a < 0 || b >= n_) throw DomainError("edge endpoint out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw DomainError("duplicate edge");
    if (bipartition_) {
        std::sort(bipartition_->u.begin(), bipartition_->u.end());
        std::sort(bipartition_->v.begin(), bipartition_->v.end());
        check_bipartition(n_, edges_, *bipartition_);
    }
}

int Graph::edge_index(int a, int b) const {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(a, b));
    if (it == edges_.end() || *it != std::make_pair(a, b)) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::string family_name(Family f) {
    switch (f) {
        case Family::KNN: return "knn";
        case Family::K2N: return "k2n";
        case Family::K33Blocks: return "k33blocks";
        case Family::Chain: return "chain";
        case Family::ChainPlus: return "chainplus";
    }
    return "?";
}

std::optional<Family> family_from_string(std::string_view name) {
    if (name == "knn") return Family::KNN;
    if (name == "k2n") return Family::K2N;
    if (name == "k33blocks") return Family::K33Blocks;
    if (name == "chain") return Family::Chain;
    if (name == "chainplus") return Family::ChainPlus;
    return std::nullopt;
}

namespace {

// Vertices of block i: U = {6i, 6i+1, 6i+2}, V = {6i+3, 6i+4, 6i+5}.
void add_k33_block(int i, std::vector<std::pair<int, int>>& edges,
                   Bipartition& bip) {
    const int base = 6 * i;
    for (int a = 0; a < 3; ++a) {
        bip.u.push_back(base + a);
        bip.v.push_back(base + 3 + a);
        for (int b = 0; b < 3; ++b) edges.emplace_back(base + a, base + 3 + b);
    }
}

const char* kBlockGenusSource =
    "one handle per K_{3,3} block: gamma(K_{3,3}) = 1 and orientable genus "
    "is additive over connected components (Battle-Harary-Kodama-Youngs 1962)";

Graph build_chain(int g, bool plus) {
    std::vector<std::pair<int, int>> edges;
    Bipartition bip;
    for (int i = 0; i < g; ++i) add_k33_block(i, edges, bip);
    for (int i = 0; i + 1 < g; ++i) {
        const int base = 6 * i;
        edges.emplace_back(base, base + 10);    // a_i  -- beta_{i+1}
        edges.emplace_back(base + 3, base + 7); // alpha_i -- b_{i+1}
    }
    if (plus) {
        edges.emplace_back(0, 1); // a_1 -- b_1
        edges.emplace_back(3, 4); // alpha_1 -- beta_1
        return Graph(6 * g, std::move(edges), std::nullopt, std::nullopt);
    }
    return Graph(6 * g, std::move(edges), std::move(bip),
                 GenusNote{g, kBlockGenusSource});
}

} // namespace

Graph construct_family(Family family, int param) {
    if (param < 1) throw DomainError("family parameter must be >= 1");
    switch (family) {
        case Family::KNN: {
            const int n = param;
            std::vector<std::pair<int, int>> edges;
            Bipartition bip;
            for (int u = 0; u < n; ++u) {
                bip.u.push_back(u);
                bip.v.push_back(n + u);
                for (int v = 0; v < n; ++v) edges.emplace_back(u, n + v);
            }
            return Graph(2 * n, std::move(edges), std::move(bip));
        }
        case Family::K2N: {
            const int n = 2 * param;
            std::vector<std::pair<int, int>> edges;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
            return Graph(n, std::move(edges));
        }
        case Family::K33Blocks: {
            std::vector<std::pair<int, int>> edges;
            Bipartition bip;
            for (int i = 0; i < param; ++i) add_k33_block(i, edges, bip);
            return Graph(6 * param, std::move(edges), std::move(bip),
                         GenusNote{param, kBlockGenusSource});
        }
        case Family::Chain:
            return build_chain(param, false);
        case Family::ChainPlus:
            return build_chain(param, true);
    }
    throw DomainError("unknown family");
}

EdgeDeletion delete_edges(const Graph& g, const std::vector<int>& removed) {
    std::vector<char> drop(g.edge_count(), 0);
    for (int e : removed) {
        if (e < 0 || e >= g.edge_count())
            throw DomainError("edge index out of range");
        drop[e] = 1;
    }
    std::vector<std::pair<int, int>> edges;
    std::vector<int> old_edge;
    std::vector<int> new_edge(g.edge_count(), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (drop[e]) continue;
        new_edge[e] = static_cast<int>(edges.size());
        old_edge.push_back(e);
        edges.push_back(g.edge(e));
    }
    // Deleting edges never breaks a bipartition, but the documented genus of
    // a family instance no longer applies.
    Graph h(g.vertex_count(), std::move(edges), g.bipartition(), std::nullopt);
    return EdgeDeletion{std::move(h), std::move(old_edge), std::move(new_edge)};
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int shift = a.vertex_count();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (const auto& [x, y] : b.edges()) edges.emplace_back(x + shift, y + shift);

    std::optional<Bipartition> bip;
    if (a.bipartition() && b.bipartition()) {
        bip = *a.bipartition();
        for (int u : b.bipartition()->u) bip->u.push_back(u + shift);
        for (int v : b.bipartition()->v) bip->v.push_back(v + shift);
    }
    std::optional<GenusNote> genus;
    if (a.genus_note() && b.genus_note()) {
        genus = GenusNote{a.genus_note()->genus + b.genus_note()->genus,
                          "sum of component genera (additive over connected "
                          "components, Battle-Harary-Kodama-Youngs 1962)"};
    }
    return Graph(shift + b.vertex_count(), std::move(edges), std::move(bip),
                 std::move(genus));
}

namespace {

struct MatchingEnumerator {
    const Graph& g;
    std::size_t cap;
    std::vector<std::vector<int>> incident; // edge indices per vertex, ascending
    std::vector<char> covered;
    std::vector<int> current;
    std::vector<Matching> out;

    MatchingEnumerator(const Graph& graph, std::size_t limit)
        : g(graph), cap(limit), incident(graph.vertex_count()),
          covered(graph.vertex_count(), 0) {
        for (int e = 0; e < g.edge_count(); ++e) {
            incident[g.edge(e).first].push_back(e);
            incident[g.edge(e).second].push_back(e);
        }
    }

    void run() {
        extend(0);
    }

    // Matches the first uncovered vertex against its incident edges in
    // ascending index order; this emits matchings in lexicographic order.
    void extend(int from) {
        int v = from;
        while (v < g.vertex_count() && covered[v]) ++v;
        if (v == g.vertex_count()) {
            if (out.size() >= cap)
                throw ResourceError("perfect matching cap exceeded (" +
                                    std::to_string(cap) + ")");
            Matching m{current};
            std::sort(m.edges.begin(), m.edges.end());
            out.push_back(std::move(m));
            return;
        }
        for (int e : incident[v]) {
            const auto& [a, b] = g.edge(e);
            const int w = a == v ? b : a;
            if (covered[w]) continue;
            covered[v] = covered[w] = 1;
            current.push_back(e);
            extend(v + 1);
            current.pop_back();
            covered[v] = covered[w] = 0;
        }
    }
};

} // namespace

std::vector<Matching> enumerate_perfect_matchings(const Graph& g,
                                                  std::size_t cap) {
    if (g.vertex_count() % 2 != 0) return {};
    MatchingEnumerator en(g, cap);
    en.run();
    return std::move(en.out);
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : g.edges()) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

CoverageCheck matching_coverage(const Graph& g, std::size_t cap) {
    if (!is_connected(g)) return {false, "graph is not connected"};
    const auto matchings = enumerate_perfect_matchings(g, cap);
    if (matchings.empty() && g.edge_count() > 0)
        return {false, "no perfect matching"};
    std::vector<char> in_some(g.edge_count(), 0);
    for (const auto& m : matchings)
        for (int e : m.edges) in_some[e] = 1;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!in_some[e])
            return {false, "edge " + std::to_string(e) + " lies in no perfect matching"};
    return {true, ""};
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    out << "vertices " << g.vertex_count() << "\n";
    if (g.bipartition()) {
        out << "bipartition";
        for (int u : g.bipartition()->u) out << " " << u;
        out << " |";
        for (int v : g.bipartition()->v) out << " " << v;
        out << "\n";
    }
    for (const auto& [a, b] : g.edges()) out << "edge " << a << " " << b << "\n";
    return out.str();
}

Graph graph_from_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    int n = -1;
    std::optional<Bipartition> bip;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue; // blank line
        if (word == "vertices") {
            if (n >= 0) throw ParseError("repeated vertices line", line_no);
            if (!(ls >> n) || n < 0) throw ParseError("bad vertex count", line_no);
        } else if (word == "bipartition") {
            if (n < 0) throw ParseError("bipartition before vertices", line_no);
            if (bip) throw ParseError("repeated bipartition line", line_no);
            Bipartition b;
            bool right = false;
            std::string tok;
            while (ls >> tok) {
                if (tok == "|") {
                    if (right) throw ParseError("repeated '|'", line_no);
                    right = true;
                    continue;
                }
                try {
                    (right ? b.v : b.u).push_back(std::stoi(tok));
                } catch (const std::exception&) {
                    throw ParseError("bad bipartition vertex '" + tok + "'", line_no);
                }
            }
            if (!right) throw ParseError("bipartition missing '|'", line_no);
            bip = std::move(b);
        } else if (word == "edge") {
            if (n < 0) throw ParseError("edge before vertices", line_no);
            int a, b;
            if (!(ls >> a >> b)) throw ParseError("bad edge line", line_no);
            edges.emplace_back(a, b);
        } else {
            throw ParseError("unknown directive '" + word + "'", line_no);
        }
    }
    if (n < 0) throw ParseError("missing vertices line", line_no == 0 ? 1 : line_no);
    try {
        return Graph(n, std::move(edges), std::move(bip));
    } catch (const DomainError& e) {
        throw ParseError(e.what(), line_no);
    }
}

} // namespace pfaff
