#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "contractix/contract.hpp"
#include "contractix/graph.hpp"

namespace contractix {

/// The clique complex: p-simplices are the (p+1)-cliques of the graph.
/// Each dimension's list is sorted by ascending vertex tuple; every face of
/// a listed simplex is listed.
struct CliqueComplex {
    int order = 0;                                  // host graph vertex count
    std::vector<std::vector<VertexSet>> simplices;  // simplices[p], p = 0..dimension()

    int dimension() const { return static_cast<int>(simplices.size()) - 1; }
    long simplex_count(int p) const {
        return p >= 0 && p <= dimension() ? static_cast<long>(simplices[static_cast<std::size_t>(p)].size()) : 0;
    }
    long euler_characteristic() const;
};

// All cliques of size <= pmax+1.
CliqueComplex clique_complex(const Graph& g, int pmax);
int clique_number(const Graph& g);

enum class CoefficientField { gf2, rational };

/// Ranks of homology groups of the clique complex by dimension.
struct BettiVector {
    std::vector<long> betti;
    bool reduced = false;
    CoefficientField field = CoefficientField::gf2;
};

// Rank of the p-th boundary matrix (alternating-sign simplicial boundary;
// over GF(2) the signs drop). Exact: bit-parallel elimination over GF(2),
// integer elimination with row-gcd reduction over the rationals.
long boundary_rank(const CliqueComplex& complex, int p, CoefficientField field);

// beta_p = f_p - rank d_p - rank d_{p+1}, with rank d_0 = 0 and ranks beyond
// the top dimension zero; pmax is the clique number minus one. Reduced
// vectors report beta_0 - 1.
BettiVector betti_numbers(const Graph& g, CoefficientField field, bool reduced);
// Same ranks over an already-built (possibly truncated) complex.
BettiVector betti_from_complex(const CliqueComplex& complex, CoefficientField field, bool reduced);

bool betti_equal(const BettiVector& a, const BettiVector& b);  // trailing zeros ignored
std::string format_betti(const BettiVector& v);

// Dense integer boundary matrix of d_p (rows: (p-1)-simplices, cols: p-simplices).
std::vector<std::vector<long long>> boundary_matrix(const CliqueComplex& complex, int p);

/// Invariant factors d1 | d2 | ... of an integer matrix.
struct SNFDiagonal {
    std::vector<long long> factors;
};

// Exact integer elimination with magnitude-minimal pivoting; throws
// std::overflow_error if intermediate values exceed the wide-integer range.
SNFDiagonal smith_normal_form(std::vector<std::vector<long long>> m);

// True iff the move is legal and leaves the Betti vector unchanged over both
// GF(2) and the rationals. Illegal moves throw std::invalid_argument.
bool check_invariance(const Graph& g, const Move& m, const Policy& policy, MemoCache& cache);

}  // namespace contractix
