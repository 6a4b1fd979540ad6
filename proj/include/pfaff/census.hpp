#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pfaff/rational.hpp"
#include "pfaff/signmatrix.hpp"

namespace pfaff {

/// Exhaustive statistics over all m x m sign matrices.
struct CensusResult {
    int m = 0;
    BigInt total;                              // 2^{m*m}
    std::int64_t permanent_zero_count = 0;
    std::int64_t nonsingular_count = 0;
    std::int64_t normalized_nonsingular_count = 0; // first row and column all +1
    std::int64_t orbit_size = 0;               // 2^{2m-1} row/column sign variants
};

/// Full sweep of the 2^{m*m} sign matrices; m <= 5.
CensusResult census(int m);

/// One row of the 3x3 normalized-permanent case analysis: fixing the (a, b)
/// entries of [[1,1,1],[1,a,b],[1,c,d]] leaves the stated expression in
/// (c, d).
struct PerCaseRow {
    int a, b;
    std::string expr;
    std::array<std::int64_t, 4> values; // (c,d) in order (1,1),(1,-1),(-1,1),(-1,-1)
    bool all_nonzero;
};
std::vector<PerCaseRow> per_case_table();

/// Number of X with det(S o X) != 0 over all sign matrices of S's order;
/// order <= 5.
std::int64_t det_cover_count(const SignMatrix& s);

/// Checks det_cover_count(S) == expected for every S of order m; returns the
/// first deviating S, if any. The m = 3 sweep is 512 x 512 determinants.
std::optional<SignMatrix> det_cover_sweep_deviant(int m, std::int64_t expected);

/// Number of block-diagonal X = X_1 + ... + X_r (3x3 sign blocks) with
/// det(S o X) != 0, via the per-block product rule. S has order 3r.
BigInt block_cover_count(const SignMatrix& s, int r);

/// Same count by direct enumeration of all 512^r block-diagonal points with
/// full determinants; r <= 2.
std::int64_t block_cover_count_exhaustive(const SignMatrix& s, int r);

/// ceil((8/3)^r), exact.
BigInt amplification_bound(int r);

struct CoverReport {
    int r = 0;
    BigInt total_points;  // 512^r
    BigInt per_term_max;  // 192^r
    int terms = 0;
    std::int64_t uncovered_count = 0;
    std::optional<std::vector<SignMatrix>> uncovered_witness; // r blocks
};

/// Scans all 512^r block-diagonal points (r <= 2) and reports whether every
/// point is covered by some nonzero det(S_i o X); if not, the witness is the
/// lexicographically first uncovered point.
CoverReport refute_cover(const std::vector<SignMatrix>& s_list, int r);

/// Exact comparison of the block-size rate (2^{m*m} / N_m)^{1/m} against the
/// 3x3 rate (8/3)^{1/3}, by cross-powering: lhs = 2^{3m*m} * 3^m versus
/// rhs = N_m^3 * 8^m. cmp is -1/0/+1 as the m-rate is smaller/equal/larger.
struct RateRecord {
    int m = 0;
    BigInt total;
    std::int64_t nonsingular = 0;
    BigInt lhs, rhs;
    int cmp = 0;
};
RateRecord rate_from_census(const CensusResult& c);
RateRecord rate(int m); // m in 2..5, runs the census

/// det(T o I_t) for the trailing t x t block T of S: the product of the last
/// t diagonal entries. +1 when t = 0.
int padding_delta(const SignMatrix& s, int t);

/// Optimized exact integer kernels used by the sweeps (direct expansion for
/// m <= 3, Gray-code inclusion-exclusion for larger permanents, fraction-free
/// elimination for determinants). a is row-major, m <= 8.
namespace kernels {
std::int64_t permanent_int(const int* a, int m);
std::int64_t determinant_int(const int* a, int m);
} // namespace kernels

} // namespace pfaff
