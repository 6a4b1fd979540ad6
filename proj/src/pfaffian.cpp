#include "pfaff/pfaffian.hpp"

#include <algorithm>
#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pfaff {

Orientation::Orientation(Graph graph, std::vector<std::uint8_t> bits)
    : graph_(std::move(graph)), bits_(std::move(bits)) {
    if (static_cast<int>(bits_.size()) != graph_.edge_count())
        throw DomainError("orientation bit count != edge count");
    for (auto b : bits_)
        if (b > 1) throw DomainError("orientation bits must be 0 or 1");
}

Orientation Orientation::all_ascending(Graph graph) {
    std::vector<std::uint8_t> bits(graph.edge_count(), 0);
    return Orientation(std::move(graph), std::move(bits));
}

Orientation Orientation::from_mask(Graph graph, std::uint64_t mask) {
    const int m = graph.edge_count();
    if (m > 64) throw DomainError("edge count > 64, bitmask form unavailable");
    std::vector<std::uint8_t> bits(m, 0);
    for (int e = 0; e < m; ++e) bits[e] = (mask >> e) & 1;
    return Orientation(std::move(graph), std::move(bits));
}

Orientation Orientation::from_bitstring(Graph graph, std::string_view s) {
    if (static_cast<int>(s.size()) != graph.edge_count())
        throw DomainError("orientation bitstring length != edge count");
    std::vector<std::uint8_t> bits(s.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1')
            throw DomainError("orientation bitstring must be over {0,1}");
        bits[i] = s[i] == '1';
    }
    return Orientation(std::move(graph), std::move(bits));
}

int Orientation::tail(int e) const {
    const auto& [a, b] = graph_.edge(e);
    return reversed(e) ? b : a;
}

int Orientation::head(int e) const {
    const auto& [a, b] = graph_.edge(e);
    return reversed(e) ? a : b;
}

std::uint64_t Orientation::mask() const {
    if (bits_.size() > 64) throw DomainError("edge count > 64, bitmask form unavailable");
    std::uint64_t m = 0;
    for (std::size_t e = 0; e < bits_.size(); ++e)
        if (bits_[e]) m |= std::uint64_t(1) << e;
    return m;
}

std::string Orientation::bitstring() const {
    std::string s(bits_.size(), '0');
    for (std::size_t e = 0; e < bits_.size(); ++e)
        if (bits_[e]) s[e] = '1';
    return s;
}

Orientation Orientation::with_all_reversed() const {
    std::vector<std::uint8_t> bits(bits_.size());
    for (std::size_t e = 0; e < bits_.size(); ++e) bits[e] = 1 - bits_[e];
    return Orientation(graph_, std::move(bits));
}

Orientation Orientation::restricted_to(const EdgeDeletion& del) const {
    if (static_cast<int>(del.new_edge.size()) != graph_.edge_count())
        throw DomainError("edge deletion does not belong to this graph");
    std::vector<std::uint8_t> bits(del.old_edge.size());
    for (std::size_t i = 0; i < del.old_edge.size(); ++i)
        bits[i] = bits_[del.old_edge[i]];
    return Orientation(del.graph, std::move(bits));
}

namespace {

int permutation_parity_sign(const std::vector<int>& perm) {
    // O(n^2) inversion count; sequences here are tiny.
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

int matching_sign(const Orientation& d, const Matching& m) {
    std::vector<int> identity(d.graph().vertex_count());
    for (std::size_t v = 0; v < identity.size(); ++v) identity[v] = static_cast<int>(v);
    return matching_sign(d, m, identity);
}

int matching_sign(const Orientation& d, const Matching& m,
                  const std::vector<int>& vertex_order) {
    const Graph& g = d.graph();
    const int n = g.vertex_count();
    if (static_cast<int>(vertex_order.size()) != n)
        throw DomainError("vertex order has wrong length");
    std::vector<int> position(n, -1);
    for (int i = 0; i < n; ++i) {
        const int v = vertex_order[i];
        if (v < 0 || v >= n || position[v] != -1)
            throw DomainError("vertex order is not a permutation");
        position[v] = i;
    }

    if (static_cast<int>(m.edges.size()) * 2 != n)
        throw DomainError("matching is not perfect");
    std::vector<char> covered(n, 0);
    std::vector<int> listed;
    listed.reserve(n);
    for (int e : m.edges) {
        if (e < 0 || e >= g.edge_count()) throw DomainError("matching edge out of range");
        const int t = d.tail(e), h = d.head(e);
        if (covered[t] || covered[h]) throw DomainError("matching edges overlap");
        covered[t] = covered[h] = 1;
        listed.push_back(position[t]);
        listed.push_back(position[h]);
    }
    return permutation_parity_sign(listed);
}

MatchingPolynomial pm_polynomial(const Graph& g, std::size_t cap) {
    MatchingPolynomial p(g.edge_count());
    for (const auto& m : enumerate_perfect_matchings(g, cap))
        p.add_term(m.edges, Rational(1));
    return p;
}

MatchingPolynomial pfaffian_form(const Orientation& d, std::size_t cap) {
    const Graph& g = d.graph();
    MatchingPolynomial p(g.edge_count());
    for (const auto& m : enumerate_perfect_matchings(g, cap))
        p.add_term(m.edges, Rational(matching_sign(d, m)));
    return p;
}

MatchingSignTable matching_sign_table(const Graph& g,
                                      const std::vector<Matching>& matchings) {
    if (g.edge_count() > 64) throw DomainError("edge count > 64 in sign table");
    MatchingSignTable table;
    const Orientation base = Orientation::all_ascending(g);
    for (const auto& m : matchings) {
        std::uint64_t mask = 0;
        for (int e : m.edges) mask |= std::uint64_t(1) << e;
        table.mask.push_back(mask);
        table.base_sign.push_back(matching_sign(base, m));
    }
    return table;
}

bool is_pfaffian_orientation(const Orientation& d, std::size_t cap) {
    const auto matchings = enumerate_perfect_matchings(d.graph(), cap);
    if (matchings.empty()) return true;
    const int first = matching_sign(d, matchings.front());
    for (std::size_t t = 1; t < matchings.size(); ++t)
        if (matching_sign(d, matchings[t]) != first) return false;
    return true;
}

std::optional<Orientation> find_pfaffian_orientation(const Graph& g,
                                                     int edge_cap,
                                                     std::size_t cap) {
    const int m = g.edge_count();
    if (m > edge_cap)
        throw ResourceError("orientation search over " + std::to_string(m) +
                            " edges exceeds cap " + std::to_string(edge_cap));
    const auto matchings = enumerate_perfect_matchings(g, cap);
    if (matchings.empty()) return Orientation::all_ascending(g);

    const auto table = matching_sign_table(g, matchings);
    const std::int64_t total = std::int64_t(1) << m;
    const std::size_t nm = matchings.size();
    std::int64_t found = total; // min-reduction; 'total' means none

#ifdef _OPENMP
#pragma omp parallel for reduction(min : found) schedule(static)
#endif
    for (std::int64_t b = 0; b < total; ++b) {
        const std::uint64_t bits = static_cast<std::uint64_t>(b);
        bool constant = true;
        const int first =
            table.base_sign[0] *
            (std::popcount(bits & table.mask[0]) % 2 == 0 ? 1 : -1);
        for (std::size_t t = 1; t < nm; ++t) {
            const int s = table.base_sign[t] *
                          (std::popcount(bits & table.mask[t]) % 2 == 0 ? 1 : -1);
            if (s != first) {
                constant = false;
                break;
            }
        }
        if (constant && b < found) found = b;
    }
    if (found == total) return std::nullopt;
    return Orientation::from_mask(g, static_cast<std::uint64_t>(found));
}

SkewMatrix::SkewMatrix(int order) : order_(order) {
    if (order < 0) throw DomainError("negative matrix order");
}

void SkewMatrix::set(int i, int j, const Rational& value) {
    if (i < 0 || j < 0 || i >= order_ || j >= order_)
        throw DomainError("skew matrix index out of range");
    if (i == j) {
        if (!value.is_zero()) throw DomainError("skew matrix diagonal must be zero");
        return;
    }
    const bool flip = i > j;
    const auto key = flip ? std::make_pair(j, i) : std::make_pair(i, j);
    const Rational v = flip ? -value : value;
    if (v.is_zero())
        upper_.erase(key);
    else
        upper_[key] = v;
}

Rational SkewMatrix::get(int i, int j) const {
    if (i < 0 || j < 0 || i >= order_ || j >= order_)
        throw DomainError("skew matrix index out of range");
    if (i == j) return Rational(0);
    const bool flip = i > j;
    const auto key = flip ? std::make_pair(j, i) : std::make_pair(i, j);
    auto it = upper_.find(key);
    if (it == upper_.end()) return Rational(0);
    return flip ? -it->second : it->second;
}

Rational numeric_pfaffian(const SkewMatrix& a) {
    if (a.order() % 2 != 0) throw DomainError("pfaffian of odd order matrix");
    // Support graph of the upper entries, every edge directed low-to-high.
    std::vector<std::pair<int, int>> edges;
    for (const auto& [key, value] : a.upper_entries()) {
        (void)value;
        edges.push_back(key);
    }
    Graph support(a.order(), std::move(edges));
    const Orientation d = Orientation::all_ascending(support);
    Rational total(0);
    for (const auto& m : enumerate_perfect_matchings(support)) {
        Rational prod(matching_sign(d, m));
        for (int e : m.edges) {
            const auto& [i, j] = support.edge(e);
            prod *= a.get(i, j);
        }
        total += prod;
    }
    return total;
}

RationalMatrix to_dense(const SkewMatrix& a) {
    RationalMatrix m(a.order(), std::vector<Rational>(a.order(), Rational(0)));
    for (const auto& [key, value] : a.upper_entries()) {
        m[key.first][key.second] = value;
        m[key.second][key.first] = -value;
    }
    return m;
}

Rational numeric_determinant(const RationalMatrix& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("determinant of non-square matrix");
    if (n == 0) return Rational(1);

    RationalMatrix a = m;
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col].is_zero()) continue;
            const Rational factor = a[row][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
        }
    }
    return det;
}

} // namespace pfaff
