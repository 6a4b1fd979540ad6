#include "pfaff/census.hpp"

#include <bit>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pfaff {

namespace kernels {

std::int64_t permanent_int(const int* a, int m) {
    switch (m) {
        case 0: return 1;
        case 1: return a[0];
        case 2: return std::int64_t(a[0]) * a[3] + std::int64_t(a[1]) * a[2];
        case 3:
            return std::int64_t(a[0]) * (a[4] * a[8] + a[5] * a[7]) +
                   std::int64_t(a[1]) * (a[3] * a[8] + a[5] * a[6]) +
                   std::int64_t(a[2]) * (a[3] * a[7] + a[4] * a[6]);
        default: break;
    }
    // Gray-code inclusion-exclusion over column subsets.
    std::int64_t row_sum[8] = {0};
    std::int64_t total = 0;
    std::uint32_t gray = 0;
    for (std::uint32_t t = 1; t < (1u << m); ++t) {
        const std::uint32_t next = t ^ (t >> 1);
        const std::uint32_t diff = next ^ gray;
        const int j = std::countr_zero(diff);
        const int step = (next & diff) ? 1 : -1;
        for (int i = 0; i < m; ++i) row_sum[i] += step * a[i * m + j];
        gray = next;
        std::int64_t prod = 1;
        for (int i = 0; i < m; ++i) prod *= row_sum[i];
        total += (std::popcount(gray) % 2 ? -1 : 1) * prod;
    }
    return (m % 2 ? -1 : 1) * total;
}

std::int64_t determinant_int(const int* a, int m) {
    if (m == 0) return 1;
    if (m == 1) return a[0];
    if (m == 2) return std::int64_t(a[0]) * a[3] - std::int64_t(a[1]) * a[2];
    // Bareiss fraction-free elimination; every division is exact.
    std::int64_t w[64];
    for (int i = 0; i < m * m; ++i) w[i] = a[i];
    int sign = 1;
    std::int64_t prev = 1;
    for (int k = 0; k < m - 1; ++k) {
        if (w[k * m + k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < m; ++r)
                if (w[r * m + k] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            for (int c = k; c < m; ++c) std::swap(w[k * m + c], w[pivot * m + c]);
            sign = -sign;
        }
        for (int i = k + 1; i < m; ++i)
            for (int j = k + 1; j < m; ++j)
                w[i * m + j] =
                    (w[i * m + j] * w[k * m + k] - w[i * m + k] * w[k * m + j]) / prev;
        prev = w[k * m + k];
    }
    return sign * w[m * m - 1];
}

} // namespace kernels

namespace {

void decode_signs(std::uint64_t code, int m, int* a) {
    for (int k = 0; k < m * m; ++k) a[k] = (code >> k) & 1 ? -1 : 1;
}

} // namespace

CensusResult census(int m) {
    if (m < 1) throw DomainError("census order must be >= 1");
    if (m > 5) throw ResourceError("census enumeration budget is m <= 5");

    const std::int64_t total = std::int64_t(1) << (m * m);
    const std::uint64_t row0_mask = (std::uint64_t(1) << m) - 1;
    std::uint64_t col0_mask = 0;
    for (int i = 0; i < m; ++i) col0_mask |= std::uint64_t(1) << (i * m);

    std::int64_t per_zero = 0, nonsingular = 0, normalized_nonsingular = 0;

#ifdef _OPENMP
#pragma omp parallel for schedule(static) \
    reduction(+ : per_zero, nonsingular, normalized_nonsingular)
#endif
    for (std::int64_t code = 0; code < total; ++code) {
        int a[25];
        decode_signs(static_cast<std::uint64_t>(code), m, a);
        if (kernels::permanent_int(a, m) == 0) ++per_zero;
        if (kernels::determinant_int(a, m) != 0) {
            ++nonsingular;
            if ((code & (row0_mask | col0_mask)) == 0) ++normalized_nonsingular;
        }
    }

    CensusResult out;
    out.m = m;
    out.total = BigInt(1) << (m * m);
    out.permanent_zero_count = per_zero;
    out.nonsingular_count = nonsingular;
    out.normalized_nonsingular_count = normalized_nonsingular;
    out.orbit_size = std::int64_t(1) << (2 * m - 1);
    return out;
}

std::vector<PerCaseRow> per_case_table() {
    const std::array<std::pair<int, int>, 4> cases{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    const std::array<const char*, 4> exprs{"2+2c+2d", "2d", "2c", "-2"};
    std::vector<PerCaseRow> rows;
    for (std::size_t k = 0; k < cases.size(); ++k) {
        const auto [a, b] = cases[k];
        PerCaseRow row{a, b, exprs[k], {}, true};
        int idx = 0;
        for (int c : {1, -1})
            for (int d : {1, -1}) {
                const int mat[9] = {1, 1, 1, 1, a, b, 1, c, d};
                row.values[idx] = kernels::permanent_int(mat, 3);
                if (row.values[idx] == 0) row.all_nonzero = false;
                ++idx;
            }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::int64_t det_cover_count(const SignMatrix& s) {
    const int m = s.order();
    if (m > 5) throw ResourceError("cover count budget is order <= 5");
    const std::uint64_t s_code = s.code();
    const std::int64_t total = std::int64_t(1) << (m * m);
    std::int64_t count = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : count)
#endif
    for (std::int64_t x = 0; x < total; ++x) {
        int a[25];
        // S o X flips exactly the entries where the packed codes differ.
        decode_signs(s_code ^ static_cast<std::uint64_t>(x), m, a);
        if (kernels::determinant_int(a, m) != 0) ++count;
    }
    return count;
}

std::optional<SignMatrix> det_cover_sweep_deviant(int m, std::int64_t expected) {
    if (m < 1) throw DomainError("order must be >= 1");
    if (m > 3) throw ResourceError("full cover sweep budget is order <= 3");
    const std::int64_t total = std::int64_t(1) << (m * m);
    for (std::int64_t code = 0; code < total; ++code) {
        const SignMatrix s = SignMatrix::from_code(m, static_cast<std::uint64_t>(code));
        if (det_cover_count(s) != expected) return s;
    }
    return std::nullopt;
}

BigInt block_cover_count(const SignMatrix& s, int r) {
    if (r < 1) throw DomainError("block count must be >= 1");
    if (s.order() != 3 * r)
        throw DomainError("sign matrix order must be 3r");
    BigInt product(1);
    for (int j = 0; j < r; ++j)
        product *= det_cover_count(s.block(3 * j, 3 * j, 3));
    return product;
}

std::int64_t block_cover_count_exhaustive(const SignMatrix& s, int r) {
    if (r < 1) throw DomainError("block count must be >= 1");
    if (r > 2) throw ResourceError("exhaustive block scan budget is r <= 2");
    if (s.order() != 3 * r)
        throw DomainError("sign matrix order must be 3r");
    const int n = 3 * r;
    const std::vector<int> sd = s.dense();
    const std::int64_t total = std::int64_t(1) << (9 * r);
    std::int64_t count = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : count)
#endif
    for (std::int64_t p = 0; p < total; ++p) {
        int full[36] = {0};
        for (int j = 0; j < r; ++j) {
            int xb[9];
            decode_signs((static_cast<std::uint64_t>(p) >> (9 * j)) & 511, 3, xb);
            for (int i = 0; i < 3; ++i)
                for (int k = 0; k < 3; ++k)
                    full[(3 * j + i) * n + 3 * j + k] =
                        sd[(3 * j + i) * n + 3 * j + k] * xb[i * 3 + k];
        }
        if (kernels::determinant_int(full, n) != 0) ++count;
    }
    return count;
}

BigInt amplification_bound(int r) {
    if (r < 0) throw DomainError("exponent must be >= 0");
    BigInt num, den;
    mpz_ui_pow_ui(num.get_mpz_t(), 8, r);
    mpz_ui_pow_ui(den.get_mpz_t(), 3, r);
    BigInt out;
    mpz_cdiv_q(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

CoverReport refute_cover(const std::vector<SignMatrix>& s_list, int r) {
    if (r < 1) throw DomainError("block count must be >= 1");
    if (r > 2) throw ResourceError("refutation scan budget is r <= 2");
    for (const auto& s : s_list)
        if (s.order() != 3 * r)
            throw DomainError("every sign matrix must have order 3r");

    const int k = static_cast<int>(s_list.size());
    // nonzero[i][j][x]: det of term i's j-th diagonal block against X_j = x.
    std::vector<std::vector<std::vector<char>>> nonzero(
        k, std::vector<std::vector<char>>(r, std::vector<char>(512, 0)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < r; ++j) {
            const std::uint64_t block_code = s_list[i].block(3 * j, 3 * j, 3).code();
            for (int x = 0; x < 512; ++x) {
                int a[9];
                decode_signs(block_code ^ static_cast<std::uint64_t>(x), 3, a);
                nonzero[i][j][x] = kernels::determinant_int(a, 3) != 0;
            }
        }

    const std::int64_t total = std::int64_t(1) << (9 * r);
    std::int64_t uncovered = 0;
    std::int64_t first_uncovered = total;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) \
    reduction(+ : uncovered) reduction(min : first_uncovered)
#endif
    for (std::int64_t p = 0; p < total; ++p) {
        bool covered = false;
        for (int i = 0; i < k && !covered; ++i) {
            bool all = true;
            for (int j = 0; j < r; ++j)
                if (!nonzero[i][j][(p >> (9 * (r - 1 - j))) & 511]) {
                    all = false;
                    break;
                }
            covered = all;
        }
        if (!covered) {
            ++uncovered;
            if (p < first_uncovered) first_uncovered = p;
        }
    }

    CoverReport report;
    report.r = r;
    mpz_ui_pow_ui(report.total_points.get_mpz_t(), 512, r);
    mpz_ui_pow_ui(report.per_term_max.get_mpz_t(), 192, r);
    report.terms = k;
    report.uncovered_count = uncovered;
    if (first_uncovered < total) {
        std::vector<SignMatrix> witness;
        for (int j = 0; j < r; ++j)
            witness.push_back(SignMatrix::from_code(
                3, (static_cast<std::uint64_t>(first_uncovered) >> (9 * (r - 1 - j))) & 511));
        report.uncovered_witness = std::move(witness);
    }
    return report;
}

RateRecord rate_from_census(const CensusResult& c) {
    if (c.m < 2) throw DomainError("rate comparison needs order >= 2");
    if (c.nonsingular_count <= 0)
        throw DomainError("rate comparison needs a positive nonsingular count");
    RateRecord rec;
    rec.m = c.m;
    rec.total = c.total;
    rec.nonsingular = c.nonsingular_count;

    BigInt three_pow, eight_pow;
    mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, c.m);
    mpz_ui_pow_ui(eight_pow.get_mpz_t(), 8, c.m);
    rec.lhs = (BigInt(1) << (3 * c.m * c.m)) * three_pow;
    rec.rhs = BigInt(c.nonsingular_count) * BigInt(c.nonsingular_count) *
              BigInt(c.nonsingular_count) * eight_pow;
    rec.cmp = cmp(rec.lhs, rec.rhs) < 0 ? -1 : (rec.lhs == rec.rhs ? 0 : 1);
    return rec;
}

RateRecord rate(int m) { return rate_from_census(census(m)); }

int padding_delta(const SignMatrix& s, int t) {
    if (t < 0) throw DomainError("trailing block size must be >= 0");
    if (t > s.order()) throw DomainError("trailing block larger than matrix");
    int delta = 1;
    for (int i = s.order() - t; i < s.order(); ++i) delta *= s.get(i, i);
    return delta;
}

} // namespace pfaff
