#include "pfaff/certify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "pfaff/census.hpp"
#include "pfaff/poly.hpp"

namespace pfaff {

namespace {

// Row-echelon span of rational vectors, for incremental rank and membership
// queries during the subset search.
class RationalSpan {
public:
    explicit RationalSpan(std::size_t dim) : dim_(dim) {}

    // Reduces v by the basis; returns the nonzero residual, or empty.
    std::optional<std::vector<Rational>> residual(std::vector<Rational> v) const {
        for (const auto& row : basis_) {
            const std::size_t p = pivot_of(row);
            if (!v[p].is_zero()) {
                const Rational factor = v[p] / row[p];
                for (std::size_t i = p; i < dim_; ++i) v[i] -= factor * row[i];
            }
        }
        for (const auto& x : v)
            if (!x.is_zero()) return v;
        return std::nullopt;
    }

    bool contains(const std::vector<Rational>& v) const {
        return !residual(v).has_value();
    }

    // Returns false when v was already in the span.
    bool add(const std::vector<Rational>& v) {
        auto res = residual(v);
        if (!res) return false;
        basis_.push_back(std::move(*res));
        // Keep rows sorted by pivot so reduction stays one pass.
        std::sort(basis_.begin(), basis_.end(),
                  [this](const auto& a, const auto& b) {
                      return pivot_of(a) < pivot_of(b);
                  });
        return true;
    }

    std::size_t rank() const { return basis_.size(); }
    const std::vector<std::vector<Rational>>& basis() const { return basis_; }

private:
    std::size_t pivot_of(const std::vector<Rational>& row) const {
        for (std::size_t i = 0; i < dim_; ++i)
            if (!row[i].is_zero()) return i;
        return dim_;
    }
    std::size_t dim_;
    std::vector<std::vector<Rational>> basis_;
};

std::vector<Rational> to_rational(const std::vector<int>& v) {
    std::vector<Rational> out;
    out.reserve(v.size());
    for (int x : v) out.emplace_back(x);
    return out;
}

} // namespace

SignVector sign_vector(const Orientation& d, std::size_t cap) {
    SignVector out;
    for (const auto& m : enumerate_perfect_matchings(d.graph(), cap))
        out.entries.push_back(matching_sign(d, m));
    return out;
}

bool verify_certificate(const Graph& g, const KPfaffianCertificate& cert,
                        std::size_t cap) {
    if (cert.orientations.size() != cert.coefficients.size())
        throw DomainError("certificate lengths differ");
    for (const auto& d : cert.orientations)
        if (!(d.graph() == g))
            throw DomainError("certificate orientation belongs to another graph");

    // Route 1: exact polynomial identity.
    const MatchingPolynomial target = pm_polynomial(g, cap);
    MatchingPolynomial combined(g.edge_count());
    {
        std::vector<std::pair<Rational, MatchingPolynomial>> parts;
        for (std::size_t i = 0; i < cert.orientations.size(); ++i)
            parts.emplace_back(cert.coefficients[i],
                               pfaffian_form(cert.orientations[i], cap));
        if (!parts.empty()) combined = poly_combine(parts);
    }
    const bool poly_ok = poly_equal(combined, target);

    // Route 2: the sign-vector system sums to all-ones.
    const std::size_t mm = target.term_count();
    std::vector<Rational> sum(mm, Rational(0));
    for (std::size_t i = 0; i < cert.orientations.size(); ++i) {
        const SignVector sv = sign_vector(cert.orientations[i], cap);
        for (std::size_t t = 0; t < mm; ++t)
            sum[t] += cert.coefficients[i] * Rational(sv.entries[t]);
    }
    bool vector_ok = true;
    for (const auto& x : sum)
        if (x != Rational(1)) {
            vector_ok = false;
            break;
        }

    if (poly_ok != vector_ok)
        throw std::logic_error("certificate verification routes disagree");
    return poly_ok;
}

std::optional<std::vector<Rational>> solve_coefficients(
    const Graph& g, const std::vector<Orientation>& orientations,
    std::size_t cap) {
    const std::size_t mm = enumerate_perfect_matchings(g, cap).size();
    const std::size_t k = orientations.size();

    // Augmented system [columns | all-ones], Gauss-Jordan.
    std::vector<std::vector<Rational>> a(mm, std::vector<Rational>(k + 1, Rational(0)));
    for (std::size_t j = 0; j < k; ++j) {
        if (!(orientations[j].graph() == g))
            throw DomainError("orientation belongs to another graph");
        const SignVector sv = sign_vector(orientations[j], cap);
        for (std::size_t t = 0; t < mm; ++t) a[t][j] = Rational(sv.entries[t]);
    }
    for (std::size_t t = 0; t < mm; ++t) a[t][k] = Rational(1);

    std::vector<int> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < mm; ++col) {
        std::size_t p = row;
        while (p < mm && a[p][col].is_zero()) ++p;
        if (p == mm) continue;
        std::swap(a[p], a[row]);
        const Rational inv = Rational(1) / a[row][col];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < mm; ++r) {
            if (r == row || a[r][col].is_zero()) continue;
            const Rational f = a[r][col];
            for (std::size_t c = col; c <= k; ++c) a[r][c] -= f * a[row][c];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    for (std::size_t r = row; r < mm; ++r)
        if (!a[r][k].is_zero()) return std::nullopt; // inconsistent

    std::vector<Rational> solution(k, Rational(0));
    for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r)
        solution[pivot_col_of_row[r]] = a[r][k];
    return solution;
}

DistinctSignVectors distinct_sign_vectors(const Graph& g, int edge_cap,
                                          std::size_t matching_cap) {
    const int ne = g.edge_count();
    if (ne > edge_cap)
        throw ResourceError("orientation sweep over " + std::to_string(ne) +
                            " edges exceeds cap " + std::to_string(edge_cap));
    const auto matchings = enumerate_perfect_matchings(g, matching_cap + 1);
    if (matchings.size() > matching_cap)
        throw ResourceError("matching count exceeds cap " +
                            std::to_string(matching_cap));

    DistinctSignVectors out;
    out.matching_count = matchings.size();
    const std::size_t mm = matchings.size();
    if (mm == 0) return out;

    const auto table = matching_sign_table(g, matchings);
    const std::uint32_t ones = mm == 32 ? ~0u : ((1u << mm) - 1);
    std::map<std::uint32_t, std::pair<std::uint64_t, int>> seen; // pattern -> (mask, sign)
    const std::uint64_t total = std::uint64_t(1) << ne;
    for (std::uint64_t b = 0; b < total; ++b) {
        std::uint32_t pattern = 0; // bit t set <=> matching t has sign -1
        for (std::size_t t = 0; t < mm; ++t) {
            const int s = table.base_sign[t] *
                          (std::popcount(b & table.mask[t]) % 2 == 0 ? 1 : -1);
            if (s < 0) pattern |= 1u << t;
        }
        int flip = 1;
        if (pattern & 1u) { // canonicalize: first entry +1
            pattern ^= ones;
            flip = -1;
        }
        seen.try_emplace(pattern, b, flip); // ascending b: first witness wins
    }

    // Order by witness bitmask for reproducibility.
    std::vector<std::pair<std::uint64_t, std::uint32_t>> ordered;
    for (const auto& [pattern, wit] : seen) ordered.emplace_back(wit.first, pattern);
    std::sort(ordered.begin(), ordered.end());
    for (const auto& [mask, pattern] : ordered) {
        std::vector<int> v(mm);
        for (std::size_t t = 0; t < mm; ++t) v[t] = (pattern >> t) & 1 ? -1 : 1;
        out.vectors.push_back(std::move(v));
        out.witness_mask.push_back(mask);
        out.witness_sign.push_back(seen.at(pattern).second);
    }
    return out;
}

namespace {

struct SubsetSearch {
    const std::vector<std::vector<Rational>>& vectors;
    const std::vector<Rational>& ones;
    std::vector<RationalSpan> suffix_span; // span of vectors[s..end)
    std::vector<int> chosen;
    int k = 0;

    SubsetSearch(const std::vector<std::vector<Rational>>& vecs,
                 const std::vector<Rational>& target)
        : vectors(vecs), ones(target) {
        const std::size_t n = vectors.size();
        suffix_span.assign(n + 1, RationalSpan(ones.size()));
        for (std::size_t s = n; s-- > 0;) {
            suffix_span[s] = suffix_span[s + 1];
            suffix_span[s].add(vectors[s]);
        }
    }

    bool feasible(const RationalSpan& span, int start) const {
        RationalSpan combined = span;
        for (const auto& row : suffix_span[start].basis()) combined.add(row);
        return combined.contains(ones);
    }

    bool dfs(int start, const RationalSpan& span) {
        if (static_cast<int>(chosen.size()) == k) return span.contains(ones);
        if (static_cast<int>(vectors.size()) - start <
            k - static_cast<int>(chosen.size()))
            return false;
        if (!feasible(span, start)) return false;
        for (int i = start; i < static_cast<int>(vectors.size()); ++i) {
            RationalSpan next = span;
            if (!next.add(vectors[i])) continue; // dependent pick cannot help
            chosen.push_back(i);
            if (dfs(i + 1, next)) return true;
            chosen.pop_back();
        }
        return false;
    }

    // Lexicographically first subset of the given size whose span contains
    // the all-ones vector, or empty.
    std::optional<std::vector<int>> find(int size) {
        k = size;
        chosen.clear();
        RationalSpan empty(ones.size());
        if (dfs(0, empty)) return chosen;
        return std::nullopt;
    }
};

} // namespace

PfNumberResult exact_pfaffian_number(const Graph& g, int edge_cap,
                                     std::size_t matching_cap) {
    const DistinctSignVectors dsv =
        distinct_sign_vectors(g, edge_cap, matching_cap);

    PfNumberResult result;
    result.matching_count = dsv.matching_count;
    result.distinct_vectors = dsv.vectors.size();

    if (dsv.matching_count == 0) {
        // No perfect matching: any single orientation represents the zero
        // polynomial exactly.
        result.k = 1;
        result.witness.orientations.push_back(Orientation::all_ascending(g));
        result.witness.coefficients.emplace_back(1);
        return result;
    }

    std::vector<std::vector<Rational>> columns;
    columns.reserve(dsv.vectors.size());
    for (const auto& v : dsv.vectors) columns.push_back(to_rational(v));
    const std::vector<Rational> ones(dsv.matching_count, Rational(1));

    SubsetSearch search(columns, ones);
    for (int k = 1; k <= static_cast<int>(columns.size()); ++k) {
        const auto subset = search.find(k);
        if (!subset) continue;

        std::vector<Orientation> orientations;
        for (int idx : *subset)
            orientations.push_back(Orientation::from_mask(g, dsv.witness_mask[idx]));
        const auto coefficients = solve_coefficients(g, orientations);
        if (!coefficients)
            throw std::logic_error("subset search produced an unsolvable span");
        result.k = k;
        result.witness.orientations = std::move(orientations);
        result.witness.coefficients = *coefficients;
        if (!verify_certificate(g, result.witness))
            throw std::logic_error("computed witness certificate failed to verify");
        return result;
    }
    throw std::logic_error("all-ones vector outside the full sign-vector span");
}

bool monotonicity_check(const Graph& g, const KPfaffianCertificate& cert,
                        const std::vector<int>& removed, std::size_t cap) {
    if (!verify_certificate(g, cert, cap))
        throw DomainError("certificate does not verify on the original graph");
    const EdgeDeletion del = delete_edges(g, removed);
    KPfaffianCertificate restricted;
    restricted.coefficients = cert.coefficients;
    for (const auto& d : cert.orientations)
        restricted.orientations.push_back(d.restricted_to(del));
    return verify_certificate(del.graph, restricted, cap);
}

std::string bound_family_name(BoundFamily f) {
    switch (f) {
        case BoundFamily::Genus: return "genus";
        case BoundFamily::KNN: return "knn";
        case BoundFamily::K2N: return "k2n";
        case BoundFamily::K33Blocks: return "k33blocks";
        case BoundFamily::Chain: return "chain";
        case BoundFamily::ChainPlus: return "chainplus";
    }
    return "?";
}

std::optional<BoundFamily> bound_family_from_string(std::string_view name) {
    if (name == "genus") return BoundFamily::Genus;
    if (name == "knn") return BoundFamily::KNN;
    if (name == "k2n") return BoundFamily::K2N;
    if (name == "k33blocks") return BoundFamily::K33Blocks;
    if (name == "chain") return BoundFamily::Chain;
    if (name == "chainplus") return BoundFamily::ChainPlus;
    return std::nullopt;
}

BoundReport lower_bound_report(BoundFamily family, int param) {
    const char* kCoverBound =
        "signed-determinant covering bound: 512^r <= k * 192^r, so k >= (8/3)^r";
    const char* kGenusUpper =
        "genus upper bound pf <= 4^g (Galluccio-Loebl 1999; Tesler 2000)";
    const char* kSpanning =
        "spanning-subgraph monotonicity: deleting edges cannot raise the "
        "Pfaffian number of the subgraph above the graph's";

    BoundReport rep;
    rep.family = family;
    rep.param = param;
    switch (family) {
        case BoundFamily::Genus: {
            if (param < 1) throw DomainError("genus must be >= 1");
            rep.lower_bound = amplification_bound(param);
            BigInt upper;
            mpz_ui_pow_ui(upper.get_mpz_t(), 4, param);
            rep.upper_bound = upper;
            rep.sources = {
                "lower bound via disjoint K_{3,3} blocks of genus g: " +
                    std::string(kCoverBound),
                kGenusUpper};
            return rep;
        }
        case BoundFamily::KNN: {
            if (param < 3)
                throw DomainError("complete bipartite bound needs n >= 3");
            const int r = param / 3;
            rep.lower_bound = amplification_bound(r);
            rep.sources = {
                "specialize the n x n variable matrix to 3x3 blocks plus an "
                "identity pad; " + std::string(kCoverBound)};
            if (param % 3 == 0) {
                rep.comparison = BigInt(param + 1); // 3r + 1
                rep.sources.push_back(
                    "previously known linear bound pf(K_{3r,3r}) >= 3r + 1 "
                    "(Junchaya-Lucchesi-Miranda)");
            }
            return rep;
        }
        case BoundFamily::K2N: {
            if (param < 3)
                throw DomainError("even complete graph bound needs n >= 3");
            rep.lower_bound = amplification_bound(param / 3);
            rep.sources = {
                "K_{2n} contains a spanning K_{n,n}; " + std::string(kSpanning),
                kCoverBound};
            return rep;
        }
        case BoundFamily::K33Blocks: {
            if (param < 1) throw DomainError("block count must be >= 1");
            rep.lower_bound = amplification_bound(param);
            BigInt upper;
            mpz_ui_pow_ui(upper.get_mpz_t(), 4, param);
            rep.upper_bound = upper;
            rep.sources = {kCoverBound,
                           "genus of r disjoint K_{3,3} blocks is r; " +
                               std::string(kGenusUpper)};
            return rep;
        }
        case BoundFamily::Chain: {
            if (param < 1) throw DomainError("chain length must be >= 1");
            rep.lower_bound = amplification_bound(param);
            BigInt upper;
            mpz_ui_pow_ui(upper.get_mpz_t(), 4, param);
            rep.upper_bound = upper;
            rep.sources = {
                "deleting the connector edges leaves g disjoint K_{3,3} "
                "blocks; " + std::string(kSpanning),
                kCoverBound,
                "the chain embeds with one handle per block, so genus = g; " +
                    std::string(kGenusUpper)};
            return rep;
        }
        case BoundFamily::ChainPlus: {
            if (param < 1) throw DomainError("chain length must be >= 1");
            rep.lower_bound = amplification_bound(param);
            rep.sources = {
                "the bipartite chain is a spanning subgraph; " +
                    std::string(kSpanning),
                kCoverBound};
            return rep;
        }
    }
    throw DomainError("unknown bound family");
}

std::string certificate_to_text(const KPfaffianCertificate& cert) {
    std::ostringstream out;
    out << "k " << cert.orientations.size() << "\n";
    for (std::size_t i = 0; i < cert.orientations.size(); ++i)
        out << "orient " << cert.orientations[i].bitstring() << " coeff "
            << cert.coefficients[i].str_slashed() << "\n";
    return out.str();
}

KPfaffianCertificate certificate_from_text(const Graph& g,
                                           std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    std::optional<std::size_t> k;
    KPfaffianCertificate cert;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string word;
        if (!(ls >> word)) continue;
        if (word == "k") {
            long long val = -1;
            if (k) throw ParseError("repeated k line", line_no);
            if (!(ls >> val) || val < 0) throw ParseError("bad certificate size", line_no);
            k = static_cast<std::size_t>(val);
        } else if (word == "orient") {
            std::string bits, kw, coeff;
            if (!(ls >> bits >> kw >> coeff) || kw != "coeff")
                throw ParseError("expected 'orient <bits> coeff <num>/<den>'", line_no);
            try {
                cert.orientations.push_back(Orientation::from_bitstring(g, bits));
                cert.coefficients.push_back(Rational::parse(coeff));
            } catch (const DomainError& e) {
                throw ParseError(e.what(), line_no);
            }
        } else {
            throw ParseError("unknown directive '" + word + "'", line_no);
        }
    }
    if (!k) throw ParseError("missing k line", line_no == 0 ? 1 : line_no);
    if (cert.orientations.size() != *k)
        throw ParseError("certificate has " +
                             std::to_string(cert.orientations.size()) +
                             " terms, header says " + std::to_string(*k),
                         line_no == 0 ? 1 : line_no);
    return cert;
}

} // namespace pfaff
