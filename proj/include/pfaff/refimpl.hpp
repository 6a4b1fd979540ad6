#pragma once

#include <cstdint>
#include <vector>

#include "pfaff/census.hpp"
#include "pfaff/signmatrix.hpp"

namespace pfaff::ref {

/// Serial reference kernels, straight from the definitions: permanent and
/// determinant as sums over all permutations, censuses and cover scans as
/// plain loops over them. Slow on purpose; the tests and the benchmark pit
/// the optimized parallel kernels against these.

std::int64_t permanent(const std::vector<int>& a, int m);
std::int64_t determinant(const std::vector<int>& a, int m);

/// Plain serial census over all 2^{m*m} sign matrices; practical for m <= 4.
CensusResult census(int m);

std::int64_t det_cover_count(const SignMatrix& s);

/// Serial scan of all 512^r block-diagonal points with definitional
/// determinants; r <= 2.
std::int64_t block_cover_count_exhaustive(const SignMatrix& s, int r);

} // namespace pfaff::ref
