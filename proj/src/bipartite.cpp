#include "pfaff/bipartite.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace pfaff {

SignMatrix::SignMatrix(int m) : m_(m) {
    if (m < 1) throw DomainError("sign matrix order must be >= 1");
    bits_.assign((static_cast<std::size_t>(m) * m + 63) / 64, 0);
}

SignMatrix SignMatrix::from_code(int m, std::uint64_t code) {
    SignMatrix s(m);
    if (m * m > 64) throw DomainError("sign matrix code form needs order <= 8");
    if (m * m < 64 && (code >> (m * m)) != 0)
        throw DomainError("sign matrix code out of range");
    s.bits_[0] = code;
    return s;
}

SignMatrix SignMatrix::parse(std::string_view text) {
    std::vector<int> entries;
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '+')
            entries.push_back(1);
        else if (c == '-')
            entries.push_back(-1);
        else
            throw DomainError(std::string("sign matrix entries must be '+' or '-', got '") + c + "'");
    }
    const int m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(entries.size()))));
    if (m < 1 || static_cast<std::size_t>(m) * m != entries.size())
        throw DomainError("sign matrix text is not a square matrix");
    SignMatrix s(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) s.set(i, j, entries[i * m + j]);
    return s;
}

int SignMatrix::get(int i, int j) const {
    if (i < 0 || j < 0 || i >= m_ || j >= m_)
        throw DomainError("sign matrix index out of range");
    const int b = bit(i, j);
    return (bits_[b / 64] >> (b % 64)) & 1 ? -1 : 1;
}

void SignMatrix::set(int i, int j, int value) {
    if (i < 0 || j < 0 || i >= m_ || j >= m_)
        throw DomainError("sign matrix index out of range");
    if (value != 1 && value != -1)
        throw DomainError("sign matrix entries are +1 or -1");
    const int b = bit(i, j);
    if (value == -1)
        bits_[b / 64] |= std::uint64_t(1) << (b % 64);
    else
        bits_[b / 64] &= ~(std::uint64_t(1) << (b % 64));
}

std::uint64_t SignMatrix::code() const {
    if (m_ * m_ > 64) throw DomainError("sign matrix code form needs order <= 8");
    return bits_[0];
}

SignMatrix SignMatrix::hadamard(const SignMatrix& other) const {
    if (m_ != other.m_) throw DomainError("hadamard product of mismatched orders");
    SignMatrix out(m_);
    for (std::size_t w = 0; w < bits_.size(); ++w)
        out.bits_[w] = bits_[w] ^ other.bits_[w];
    return out;
}

SignMatrix SignMatrix::block(int row0, int col0, int size) const {
    if (size < 1 || row0 < 0 || col0 < 0 || row0 + size > m_ || col0 + size > m_)
        throw DomainError("sign matrix block out of range");
    SignMatrix out(size);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) out.set(i, j, get(row0 + i, col0 + j));
    return out;
}

std::vector<int> SignMatrix::dense() const {
    std::vector<int> out(static_cast<std::size_t>(m_) * m_);
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j) out[i * m_ + j] = get(i, j);
    return out;
}

std::string SignMatrix::str() const {
    std::string out;
    for (int i = 0; i < m_; ++i) {
        if (i) out += ' ';
        for (int j = 0; j < m_; ++j) out += get(i, j) > 0 ? '+' : '-';
    }
    return out;
}

BiadjacencyMatrix::BiadjacencyMatrix(int n, int num_vars)
    : n_(n), num_vars_(num_vars) {
    if (n < 1) throw DomainError("biadjacency size must be >= 1");
    cells_.assign(static_cast<std::size_t>(n) * n, kAbsentCell);
}

void BiadjacencyMatrix::set_cell(int i, int j, int edge_index) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw DomainError("biadjacency index out of range");
    cells_[i * n_ + j] = edge_index;
}

BiadjacencyMatrix biadjacency(const Graph& g) {
    if (!g.bipartition()) throw DomainError("graph has no recorded bipartition");
    const auto& bip = *g.bipartition();
    if (bip.u.size() != bip.v.size())
        throw DomainError("bipartition is unbalanced");
    const int n = static_cast<int>(bip.u.size());
    BiadjacencyMatrix b(n, g.edge_count());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            b.set_cell(i, j, g.edge_index(bip.u[i], bip.v[j]));
    return b;
}

SignMatrix orientation_sign_matrix(const Orientation& d) {
    const Graph& g = d.graph();
    if (!g.bipartition()) throw DomainError("graph has no recorded bipartition");
    const auto& bip = *g.bipartition();
    if (bip.u.size() != bip.v.size())
        throw DomainError("bipartition is unbalanced");
    const int n = static_cast<int>(bip.u.size());
    SignMatrix s(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int e = g.edge_index(bip.u[i], bip.v[j]);
            if (e >= 0) s.set(i, j, d.tail(e) == bip.u[i] ? 1 : -1);
        }
    return s;
}

SymbolicMatrix::SymbolicMatrix(int n, int num_vars) : n_(n), num_vars_(num_vars) {
    if (n < 1) throw DomainError("symbolic matrix size must be >= 1");
    cells_.assign(static_cast<std::size_t>(n) * n, SymCell{Rational(0), -1});
}

void SymbolicMatrix::set_var(int i, int j, int var, const Rational& coeff) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw DomainError("symbolic matrix index out of range");
    if (var < 0 || var >= num_vars_)
        throw DomainError("symbolic matrix variable out of range");
    cells_[i * n_ + j] = SymCell{coeff, var};
}

void SymbolicMatrix::set_const(int i, int j, const Rational& value) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw DomainError("symbolic matrix index out of range");
    cells_[i * n_ + j] = SymCell{value, -1};
}

SymbolicMatrix to_symbolic(const BiadjacencyMatrix& b) {
    SymbolicMatrix m(b.size(), b.num_vars());
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            if (b.cell(i, j) != kAbsentCell) m.set_var(i, j, b.cell(i, j));
    return m;
}

SymbolicMatrix hadamard(const SignMatrix& s, const SymbolicMatrix& m) {
    if (s.order() != m.size())
        throw DomainError("hadamard product of mismatched orders");
    SymbolicMatrix out = m;
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) {
            const SymCell& c = m.cell(i, j);
            if (s.get(i, j) < 0) {
                if (c.var >= 0)
                    out.set_var(i, j, c.var, -c.coeff);
                else
                    out.set_const(i, j, -c.coeff);
            }
        }
    return out;
}

namespace {

MatchingPolynomial sym_expansion(const SymbolicMatrix& m, bool signed_terms) {
    const int n = m.size();
    MatchingPolynomial out(m.num_vars());
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    do {
        Rational coeff(1);
        Monomial mono;
        bool zero = false;
        for (int i = 0; i < n && !zero; ++i) {
            const SymCell& c = m.cell(i, perm[i]);
            if (c.coeff.is_zero()) {
                zero = true;
                break;
            }
            coeff *= c.coeff;
            if (c.var >= 0) mono.push_back(c.var);
        }
        if (zero) continue;
        if (signed_terms) {
            int inversions = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (perm[i] > perm[j]) ++inversions;
            if (inversions % 2) coeff = -coeff;
        }
        std::sort(mono.begin(), mono.end());
        if (std::adjacent_find(mono.begin(), mono.end()) != mono.end())
            throw DomainError("repeated variable in one expansion term");
        out.add_term(mono, coeff);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

} // namespace

MatchingPolynomial sym_det(const SymbolicMatrix& m) { return sym_expansion(m, true); }
MatchingPolynomial sym_per(const SymbolicMatrix& m) { return sym_expansion(m, false); }

MatchingPolynomial signed_det_form(const SignMatrix& s,
                                   const BiadjacencyMatrix& b) {
    if (s.order() != b.size())
        throw DomainError("sign matrix and biadjacency dimensions differ");
    return sym_det(hadamard(s, to_symbolic(b)));
}

bool bipartite_pf_det_check(const Orientation& d, std::size_t cap) {
    const Graph& g = d.graph();
    if (!g.bipartition()) throw DomainError("graph has no recorded bipartition");
    const auto& bip = *g.bipartition();
    const int n = static_cast<int>(bip.u.size());
    if (bip.u.size() != bip.v.size())
        throw DomainError("bipartition is unbalanced");
    for (int i = 0; i < n; ++i)
        if (bip.u[i] != i || bip.v[i] != n + i)
            throw DomainError("check requires vertices numbered U first, then V");

    const MatchingPolynomial lhs = pfaffian_form(d, cap);
    const MatchingPolynomial det =
        signed_det_form(orientation_sign_matrix(d), biadjacency(g));
    const Rational global(((n * (n - 1) / 2) % 2 == 0) ? 1 : -1);
    return poly_equal(lhs, poly_combine({{global, det}}));
}

} // namespace pfaff
