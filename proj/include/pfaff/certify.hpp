#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfaff/graph.hpp"
#include "pfaff/pfaffian.hpp"
#include "pfaff/rational.hpp"

namespace pfaff {

/// Signs of the perfect matchings of one orientation, indexed by the
/// canonical matching order of the graph.
struct SignVector {
    std::vector<int> entries; // +1 / -1
    friend bool operator==(const SignVector&, const SignVector&) = default;
};

SignVector sign_vector(const Orientation& d,
                       std::size_t cap = kDefaultMatchingCap);

/// Orientations D_1..D_k with rational coefficients c_1..c_k representing
/// the perfect-matching polynomial as sum c_i * (signed matching form of D_i).
struct KPfaffianCertificate {
    std::vector<Orientation> orientations;
    std::vector<Rational> coefficients;
};

/// Checks the certificate two ways -- exact polynomial identity and the
/// all-ones sign-vector system -- and returns their (always common) verdict.
bool verify_certificate(const Graph& g, const KPfaffianCertificate& cert,
                        std::size_t cap = kDefaultMatchingCap);

/// Exact rational solve of sum c_i * sign_vector(D_i) = all-ones; empty when
/// the all-ones vector is outside the span.
std::optional<std::vector<Rational>> solve_coefficients(
    const Graph& g, const std::vector<Orientation>& orientations,
    std::size_t cap = kDefaultMatchingCap);

inline constexpr int kDefaultPfEdgeCap = 12;
inline constexpr std::size_t kDefaultPfMatchingCap = 24;

/// Sign vectors of all 2^|E| orientations, deduplicated up to global
/// negation (absorbed by certificate coefficients). Vectors are canonical
/// (first entry +1) and ordered by their first witness orientation bitmask.
struct DistinctSignVectors {
    std::vector<std::vector<int>> vectors;
    std::vector<std::uint64_t> witness_mask; // orientation producing +-vector
    std::vector<int> witness_sign;           // +1: vector itself, -1: its negation
    std::size_t matching_count = 0;
};
DistinctSignVectors distinct_sign_vectors(
    const Graph& g, int edge_cap = kDefaultPfEdgeCap,
    std::size_t matching_cap = kDefaultPfMatchingCap);

struct PfNumberResult {
    int k = 0;
    KPfaffianCertificate witness;
    std::size_t matching_count = 0;
    std::size_t distinct_vectors = 0;
};

/// Least k such that some k orientations span the all-ones sign vector, by
/// exhaustive orientation sweep and increasing-size subset search with rank
/// pruning. The witness is the lexicographically first minimal subset and
/// always verifies.
PfNumberResult exact_pfaffian_number(
    const Graph& g, int edge_cap = kDefaultPfEdgeCap,
    std::size_t matching_cap = kDefaultPfMatchingCap);

/// Restricts a verified certificate to the graph minus the given edges and
/// re-verifies it there. True always; false would indicate a bug.
bool monotonicity_check(const Graph& g, const KPfaffianCertificate& cert,
                        const std::vector<int>& removed,
                        std::size_t cap = kDefaultMatchingCap);

enum class BoundFamily { Genus, KNN, K2N, K33Blocks, Chain, ChainPlus };

std::string bound_family_name(BoundFamily f);
std::optional<BoundFamily> bound_family_from_string(std::string_view name);

struct BoundReport {
    BoundFamily family;
    int param = 0;
    BigInt lower_bound;
    std::optional<BigInt> upper_bound;
    std::optional<BigInt> comparison; // previously known lower bound
    std::vector<std::string> sources;
};

/// Exact lower/upper bounds on the Pfaffian number of the family instance.
BoundReport lower_bound_report(BoundFamily family, int param);

/// Certificate text format:
///   k <count>
///   orient <bitstring> coeff <num>/<den>   (one line per term)
std::string certificate_to_text(const KPfaffianCertificate& cert);
KPfaffianCertificate certificate_from_text(const Graph& g,
                                           std::string_view text);

} // namespace pfaff
