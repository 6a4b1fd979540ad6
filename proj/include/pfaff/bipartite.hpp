#pragma once

#include <vector>

#include "pfaff/graph.hpp"
#include "pfaff/pfaffian.hpp"
#include "pfaff/poly.hpp"
#include "pfaff/signmatrix.hpp"

namespace pfaff {

inline constexpr int kAbsentCell = -1;

/// n x n grid of edge indices for a balanced bipartite graph: cell (i, j)
/// holds the edge index of u_i v_j, or kAbsentCell. Rows follow U in
/// ascending vertex order, columns follow V.
class BiadjacencyMatrix {
public:
    BiadjacencyMatrix(int n, int num_vars);
    int size() const { return n_; }
    int num_vars() const { return num_vars_; }
    int cell(int i, int j) const { return cells_.at(i * n_ + j); }
    void set_cell(int i, int j, int edge_index);

private:
    int n_;
    int num_vars_; // ambient edge space of the graph
    std::vector<int> cells_;
};

/// Requires a recorded bipartition with |U| = |V|.
BiadjacencyMatrix biadjacency(const Graph& g);

/// Entry (i, j) is +1 when edge u_i v_j points from U to V, -1 when it points
/// from V to U, and +1 on non-edges (fixed convention; the value never
/// reaches a determinant term because the biadjacency cell is absent).
SignMatrix orientation_sign_matrix(const Orientation& d);

/// Matrix cell holding coeff * x_var, or the constant coeff when var < 0.
struct SymCell {
    Rational coeff;
    int var = -1;
};

/// Square matrix of symbolic cells, for permutation-expansion determinants
/// and permanents with a mix of variables and constants.
class SymbolicMatrix {
public:
    SymbolicMatrix(int n, int num_vars); // all cells zero
    int size() const { return n_; }
    int num_vars() const { return num_vars_; }
    const SymCell& cell(int i, int j) const { return cells_.at(i * n_ + j); }
    void set_var(int i, int j, int var, const Rational& coeff = Rational(1));
    void set_const(int i, int j, const Rational& value);

private:
    int n_;
    int num_vars_;
    std::vector<SymCell> cells_;
};

SymbolicMatrix to_symbolic(const BiadjacencyMatrix& b);
SymbolicMatrix hadamard(const SignMatrix& s, const SymbolicMatrix& m);

/// Determinant / permanent by permutation expansion. Exact; feasible for the
/// desk-scale orders used here (n <= 8 or so).
MatchingPolynomial sym_det(const SymbolicMatrix& m);
MatchingPolynomial sym_per(const SymbolicMatrix& m);

/// Signed determinant det(S o B) as a polynomial over the graph's edge
/// variables.
MatchingPolynomial signed_det_form(const SignMatrix& s,
                                   const BiadjacencyMatrix& b);

/// Checks Pf(A_D) == (-1)^{n(n-1)/2} det(S_D o B_G) as exact polynomials.
/// The graph must be balanced bipartite and numbered with U = {0..n-1},
/// V = {n..2n-1}.
bool bipartite_pf_det_check(const Orientation& d,
                            std::size_t cap = kDefaultMatchingCap);

} // namespace pfaff
