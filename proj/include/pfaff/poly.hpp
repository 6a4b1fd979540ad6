#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pfaff/rational.hpp"

namespace pfaff {

/// A squarefree monomial: strictly increasing variable (edge) indices.
using Monomial = std::vector<int>;

/// Exact multilinear polynomial over a fixed ambient variable space of size
/// num_vars. Terms are kept canonical: lexicographically ordered monomials,
/// no zero coefficients stored, so structural equality is semantic equality.
class MatchingPolynomial {
public:
    explicit MatchingPolynomial(int num_vars);

    int num_vars() const { return num_vars_; }
    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Accumulates coeff * mono; drops the term if the running coefficient
    /// cancels to zero. Monomial must be strictly increasing with indices in
    /// [0, num_vars).
    void add_term(const Monomial& mono, const Rational& coeff);

    Rational coefficient(const Monomial& mono) const;

private:
    int num_vars_;
    std::map<Monomial, Rational> terms_;
};

/// Exact rational linear combination; ambient spaces must match.
MatchingPolynomial poly_combine(
    const std::vector<std::pair<Rational, MatchingPolynomial>>& parts);

/// Evaluates at the given edge assignment. Every variable that appears in p
/// must be assigned.
Rational poly_eval(const MatchingPolynomial& p,
                   const std::map<int, Rational>& assignment);

/// Exact equality of canonical forms; ambient spaces must match.
bool poly_equal(const MatchingPolynomial& p, const MatchingPolynomial& q);

/// Canonical rendering: terms in lexicographic monomial order, coefficients
/// as num/den, monomials as x<i>*x<j>*...; the zero polynomial renders "0".
std::string poly_render(const MatchingPolynomial& p);

} // namespace pfaff
