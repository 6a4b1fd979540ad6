#include "pfaff/refimpl.hpp"

#include <algorithm>
#include <numeric>

namespace pfaff::ref {

namespace {

int parity_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 ? -1 : 1;
}

std::int64_t expansion(const std::vector<int>& a, int m, bool use_sign) {
    if (static_cast<int>(a.size()) != m * m)
        throw DomainError("matrix size mismatch");
    if (m == 0) return 1;
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t total = 0;
    do {
        std::int64_t prod = 1;
        for (int i = 0; i < m; ++i) prod *= a[i * m + perm[i]];
        total += use_sign ? parity_sign(perm) * prod : prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

std::vector<int> decode(std::uint64_t code, int m) {
    std::vector<int> a(m * m);
    for (int k = 0; k < m * m; ++k) a[k] = (code >> k) & 1 ? -1 : 1;
    return a;
}

} // namespace

std::int64_t permanent(const std::vector<int>& a, int m) {
    return expansion(a, m, false);
}

std::int64_t determinant(const std::vector<int>& a, int m) {
    return expansion(a, m, true);
}

CensusResult census(int m) {
    if (m < 1) throw DomainError("census order must be >= 1");
    if (m > 4) throw ResourceError("reference census budget is m <= 4");
    CensusResult out;
    out.m = m;
    out.total = BigInt(1) << (m * m);
    out.orbit_size = std::int64_t(1) << (2 * m - 1);
    const std::int64_t total = std::int64_t(1) << (m * m);
    for (std::int64_t code = 0; code < total; ++code) {
        const std::vector<int> a = decode(static_cast<std::uint64_t>(code), m);
        if (permanent(a, m) == 0) ++out.permanent_zero_count;
        if (determinant(a, m) != 0) {
            ++out.nonsingular_count;
            bool normalized = true;
            for (int k = 0; k < m && normalized; ++k)
                normalized = a[k] == 1 && a[k * m] == 1;
            if (normalized) ++out.normalized_nonsingular_count;
        }
    }
    return out;
}

std::int64_t det_cover_count(const SignMatrix& s) {
    const int m = s.order();
    if (m > 4) throw ResourceError("reference cover count budget is m <= 4");
    const std::vector<int> sd = s.dense();
    const std::int64_t total = std::int64_t(1) << (m * m);
    std::int64_t count = 0;
    for (std::int64_t code = 0; code < total; ++code) {
        std::vector<int> x = decode(static_cast<std::uint64_t>(code), m);
        for (int k = 0; k < m * m; ++k) x[k] *= sd[k];
        if (determinant(x, m) != 0) ++count;
    }
    return count;
}

std::int64_t block_cover_count_exhaustive(const SignMatrix& s, int r) {
    if (r < 1 || r > 2) throw ResourceError("reference block scan budget is r <= 2");
    if (s.order() != 3 * r) throw DomainError("sign matrix order must be 3r");
    const int n = 3 * r;
    const std::vector<int> sd = s.dense();
    const std::int64_t total = std::int64_t(1) << (9 * r);
    std::int64_t count = 0;
    for (std::int64_t p = 0; p < total; ++p) {
        std::vector<int> full(n * n, 0);
        for (int j = 0; j < r; ++j) {
            const std::vector<int> xb =
                decode((static_cast<std::uint64_t>(p) >> (9 * j)) & 511, 3);
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < 3; ++k)
                    full[(3 * j + i) * n + 3 * j + k] =
                        sd[(3 * j + i) * n + 3 * j + k] * xb[i * 3 + k];
        }
        if (determinant(full, n) != 0) ++count;
    }
    return count;
}

} // namespace pfaff::ref
