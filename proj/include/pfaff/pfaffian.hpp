#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pfaff/graph.hpp"
#include "pfaff/poly.hpp"
#include "pfaff/rational.hpp"

namespace pfaff {

/// An orientation of a graph: one direction bit per edge. Bit 0 means the
/// edge points from its smaller-numbered endpoint to the larger, bit 1 the
/// reverse. Owns a copy of its graph; orientations are small desk-scale
/// values.
class Orientation {
public:
    Orientation(Graph graph, std::vector<std::uint8_t> bits);

    static Orientation all_ascending(Graph graph);
    /// Bit e of mask is the direction of edge e; edge count must be <= 64.
    static Orientation from_mask(Graph graph, std::uint64_t mask);
    /// Parses a '0'/'1' string over the canonical edge order.
    static Orientation from_bitstring(Graph graph, std::string_view bits);

    const Graph& graph() const { return graph_; }
    bool reversed(int e) const { return bits_.at(e) != 0; }
    int tail(int e) const;
    int head(int e) const;
    std::uint64_t mask() const;
    std::string bitstring() const;

    Orientation with_all_reversed() const;
    /// Orientation induced on the graph that remains after an edge deletion.
    Orientation restricted_to(const EdgeDeletion& del) const;

private:
    Graph graph_;
    std::vector<std::uint8_t> bits_;
};

/// Sign of the permutation listing each matched edge tail-then-head, read in
/// the given vertex order. Independent of the order in which the matching's
/// edges are listed. The two-argument form uses the numeric vertex order,
/// which is the canonical choice everywhere in this library.
int matching_sign(const Orientation& d, const Matching& m);
int matching_sign(const Orientation& d, const Matching& m,
                  const std::vector<int>& vertex_order);

/// Sum over perfect matchings of the product of their edge variables.
MatchingPolynomial pm_polynomial(const Graph& g,
                                 std::size_t cap = kDefaultMatchingCap);

/// Signed matching sum of the orientation: same monomials as pm_polynomial,
/// coefficients in {+1, -1}.
MatchingPolynomial pfaffian_form(const Orientation& d,
                                 std::size_t cap = kDefaultMatchingCap);

/// True iff all perfect matchings carry the same sign (vacuously true when
/// there is no perfect matching).
bool is_pfaffian_orientation(const Orientation& d,
                             std::size_t cap = kDefaultMatchingCap);

inline constexpr int kDefaultEdgeCap = 24;

/// Exhaustive search over all 2^|E| orientations, ascending bitmask order;
/// returns the first hit. Deterministic regardless of worker count.
std::optional<Orientation> find_pfaffian_orientation(
    const Graph& g, int edge_cap = kDefaultEdgeCap,
    std::size_t cap = kDefaultMatchingCap);

/// Per-matching edge masks and signs under the all-ascending orientation.
/// Reversing edge set b flips the sign of matching t by popcount parity of
/// (b & mask[t]); this is what the orientation sweeps iterate on.
struct MatchingSignTable {
    std::vector<std::uint64_t> mask;
    std::vector<int> base_sign;
};
MatchingSignTable matching_sign_table(const Graph& g,
                                      const std::vector<Matching>& matchings);

/// Skew-symmetric matrix of exact rationals: entries stored for i < j,
/// entry (j, i) implicitly negated, zero diagonal.
class SkewMatrix {
public:
    explicit SkewMatrix(int order);
    int order() const { return order_; }
    void set(int i, int j, const Rational& value);
    Rational get(int i, int j) const;
    const std::map<std::pair<int, int>, Rational>& upper_entries() const {
        return upper_;
    }

private:
    int order_;
    std::map<std::pair<int, int>, Rational> upper_;
};

/// Pfaffian as the signed weighted matching sum of the oriented graph whose
/// edge i->j (i < j) carries weight a_ij. Order must be even.
Rational numeric_pfaffian(const SkewMatrix& a);

using RationalMatrix = std::vector<std::vector<Rational>>;

RationalMatrix to_dense(const SkewMatrix& a);

/// Exact determinant by elimination. Square input required.
Rational numeric_determinant(const RationalMatrix& m);

} // namespace pfaff
