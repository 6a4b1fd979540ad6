#include "pfaff/poly.hpp"

#include <sstream>

namespace pfaff {

MatchingPolynomial::MatchingPolynomial(int num_vars) : num_vars_(num_vars) {
    if (num_vars < 0) throw DomainError("negative variable count");
}

void MatchingPolynomial::add_term(const Monomial& mono, const Rational& coeff) {
    for (std::size_t i = 0; i < mono.size(); ++i) {
        if (mono[i] < 0 || mono[i] >= num_vars_)
            throw DomainError("monomial variable out of range");
        if (i > 0 && mono[i - 1] >= mono[i])
            throw DomainError("monomial indices not strictly increasing");
    }
    if (coeff.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, coeff);
        return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

Rational MatchingPolynomial::coefficient(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

MatchingPolynomial poly_combine(
    const std::vector<std::pair<Rational, MatchingPolynomial>>& parts) {
    if (parts.empty()) throw DomainError("poly_combine of empty sequence");
    const int nv = parts.front().second.num_vars();
    MatchingPolynomial out(nv);
    for (const auto& [scale, p] : parts) {
        if (p.num_vars() != nv)
            throw DomainError("poly_combine over mismatched variable spaces");
        if (scale.is_zero()) continue;
        for (const auto& [mono, coeff] : p.terms()) out.add_term(mono, scale * coeff);
    }
    return out;
}

Rational poly_eval(const MatchingPolynomial& p,
                   const std::map<int, Rational>& assignment) {
    Rational total(0);
    for (const auto& [mono, coeff] : p.terms()) {
        Rational prod = coeff;
        for (int v : mono) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw DomainError("unassigned variable x" + std::to_string(v));
            prod *= it->second;
        }
        total += prod;
    }
    return total;
}

bool poly_equal(const MatchingPolynomial& p, const MatchingPolynomial& q) {
    if (p.num_vars() != q.num_vars())
        throw DomainError("poly_equal over mismatched variable spaces");
    return p.terms() == q.terms();
}

std::string poly_render(const MatchingPolynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mono, coeff] : p.terms()) {
        const bool negative = coeff.sign() < 0;
        const Rational abs_coeff = negative ? -coeff : coeff;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        out << abs_coeff.str_slashed();
        for (int v : mono) out << "*x" << v;
    }
    return out.str();
}

} // namespace pfaff
