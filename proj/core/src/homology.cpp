#include "contractix/homology.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace contractix {

namespace {

using Wide = __int128;

Wide checked_mul(Wide a, Wide b) {
    Wide out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in exact elimination");
    return out;
}

Wide checked_sub(Wide a, Wide b) {
    Wide out;
    if (__builtin_sub_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in exact elimination");
    return out;
}

Wide checked_add(Wide a, Wide b) {
    Wide out;
    if (__builtin_add_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in exact elimination");
    return out;
}

Wide wide_abs(Wide a) { return a < 0 ? -a : a; }

Wide wide_gcd(Wide a, Wide b) {
    a = wide_abs(a);
    b = wide_abs(b);
    while (b) {
        Wide r = a % b;
        a = b;
        b = r;
    }
    return a;
}

void extend_cliques(const Graph& g, const std::vector<VertexSet>& level,
                    std::vector<VertexSet>& out) {
    out.clear();
    for (VertexSet clique : level) {
        // candidates above the clique's maximum, adjacent to every member
        std::uint64_t cand = ~std::uint64_t{0};
        int maxv = -1;
        for (int v : clique) {
            cand &= g.neighborhood(v).bits();
            maxv = v;
        }
        cand &= g.vertices().bits();
        if (maxv + 1 < 64)
            cand &= ~((std::uint64_t{1} << (maxv + 1)) - 1);
        else
            cand = 0;
        for (std::uint64_t rest = cand; rest; rest &= rest - 1) {
            VertexSet bigger = clique;
            bigger.add(std::countr_zero(rest));
            out.push_back(bigger);
        }
    }
}

}  // namespace

long CliqueComplex::euler_characteristic() const {
    long chi = 0;
    for (int p = 0; p <= dimension(); ++p) chi += (p % 2 == 0 ? 1 : -1) * simplex_count(p);
    return chi;
}

CliqueComplex clique_complex(const Graph& g, int pmax) {
    if (pmax < 0) throw std::invalid_argument("pmax must be nonnegative");
    CliqueComplex complex;
    complex.order = g.order();

    std::vector<VertexSet> level;
    for (int v = 0; v < g.order(); ++v) level.push_back(VertexSet::single(v));
    complex.simplices.push_back(level);

    for (int p = 1; p <= pmax; ++p) {
        std::vector<VertexSet> next;
        extend_cliques(g, complex.simplices.back(), next);
        if (next.empty()) break;
        complex.simplices.push_back(std::move(next));
    }
    return complex;
}

int clique_number(const Graph& g) {
    std::vector<VertexSet> level;
    for (int v = 0; v < g.order(); ++v) level.push_back(VertexSet::single(v));
    int best = 1;
    std::vector<VertexSet> next;
    while (true) {
        extend_cliques(g, level, next);
        if (next.empty()) return best;
        ++best;
        level.swap(next);
    }
}

std::vector<std::vector<long long>> boundary_matrix(const CliqueComplex& complex, int p) {
    if (p < 1 || p > complex.dimension())
        throw std::invalid_argument("boundary dimension out of range");
    const auto& rows_simplices = complex.simplices[static_cast<std::size_t>(p - 1)];
    const auto& cols_simplices = complex.simplices[static_cast<std::size_t>(p)];

    std::unordered_map<std::uint64_t, std::size_t> row_index;
    row_index.reserve(rows_simplices.size());
    for (std::size_t i = 0; i < rows_simplices.size(); ++i)
        row_index.emplace(rows_simplices[i].bits(), i);

    std::vector<std::vector<long long>> m(rows_simplices.size(),
                                          std::vector<long long>(cols_simplices.size(), 0));
    for (std::size_t j = 0; j < cols_simplices.size(); ++j) {
        int k = 0;
        for (int v : cols_simplices[j]) {
            VertexSet face = cols_simplices[j];
            face.remove(v);
            m[row_index.at(face.bits())][j] = (k % 2 == 0) ? 1 : -1;
            ++k;
        }
    }
    return m;
}

namespace {

long rank_gf2(const CliqueComplex& complex, int p) {
    const auto& rows_simplices = complex.simplices[static_cast<std::size_t>(p - 1)];
    const auto& cols_simplices = complex.simplices[static_cast<std::size_t>(p)];
    std::size_t nrows = rows_simplices.size();
    std::size_t words = (nrows + 63) / 64;

    std::unordered_map<std::uint64_t, std::size_t> row_index;
    row_index.reserve(nrows);
    for (std::size_t i = 0; i < nrows; ++i) row_index.emplace(rows_simplices[i].bits(), i);

    // pivot rows -> reduced column bitsets
    std::vector<std::pair<std::size_t, std::vector<std::uint64_t>>> pivots;
    std::vector<std::uint64_t> col(words);

    long rank = 0;
    for (const VertexSet& simplex : cols_simplices) {
        std::fill(col.begin(), col.end(), 0);
        for (int v : simplex) {
            VertexSet face = simplex;
            face.remove(v);
            std::size_t r = row_index.at(face.bits());
            col[r / 64] ^= std::uint64_t{1} << (r % 64);
        }
        for (const auto& [prow, pcol] : pivots) {
            if ((col[prow / 64] >> (prow % 64)) & 1u)
                for (std::size_t w = 0; w < words; ++w) col[w] ^= pcol[w];
        }
        std::size_t lead = nrows;
        for (std::size_t w = 0; w < words; ++w) {
            if (col[w]) {
                lead = w * 64 + static_cast<std::size_t>(std::countr_zero(col[w]));
                break;
            }
        }
        if (lead == nrows) continue;
        pivots.emplace_back(lead, col);
        ++rank;
    }
    return rank;
}

void normalize_row(std::vector<Wide>& row) {
    Wide g = 0;
    for (Wide x : row) {
        g = wide_gcd(g, x);
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (Wide& x : row) x /= g;
}

long rank_rational(const CliqueComplex& complex, int p) {
    auto ints = boundary_matrix(complex, p);
    std::size_t nrows = ints.size();
    if (nrows == 0) return 0;
    std::size_t ncols = ints[0].size();

    std::vector<std::vector<Wide>> m(nrows, std::vector<Wide>(ncols));
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) m[i][j] = ints[i][j];

    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot = nrows;
        for (std::size_t i = rank; i < nrows; ++i) {
            if (m[i][col] == 0) continue;
            if (pivot == nrows || wide_abs(m[i][col]) < wide_abs(m[pivot][col])) pivot = i;
        }
        if (pivot == nrows) continue;
        std::swap(m[rank], m[pivot]);
        Wide pv = m[rank][col];
        for (std::size_t i = rank + 1; i < nrows; ++i) {
            Wide q = m[i][col];
            if (q == 0) continue;
            Wide g = wide_gcd(pv, q);
            Wide mi = pv / g, mr = q / g;
            for (std::size_t j = col; j < ncols; ++j)
                m[i][j] = checked_sub(checked_mul(m[i][j], mi), checked_mul(m[rank][j], mr));
            normalize_row(m[i]);
        }
        ++rank;
    }
    return static_cast<long>(rank);
}

}  // namespace

long boundary_rank(const CliqueComplex& complex, int p, CoefficientField field) {
    if (p < 1) throw std::invalid_argument("boundary dimension must be at least 1");
    if (p > complex.dimension()) return 0;
    return field == CoefficientField::gf2 ? rank_gf2(complex, p) : rank_rational(complex, p);
}

BettiVector betti_from_complex(const CliqueComplex& complex, CoefficientField field,
                               bool reduced) {
    BettiVector out;
    out.reduced = reduced;
    out.field = field;
    int dim = complex.dimension();
    std::vector<long> rank(static_cast<std::size_t>(dim) + 2, 0);
    for (int p = 1; p <= dim; ++p)
        rank[static_cast<std::size_t>(p)] = boundary_rank(complex, p, field);
    for (int p = 0; p <= dim; ++p)
        out.betti.push_back(complex.simplex_count(p) - rank[static_cast<std::size_t>(p)] -
                            rank[static_cast<std::size_t>(p) + 1]);
    if (reduced) out.betti[0] -= 1;
    return out;
}

BettiVector betti_numbers(const Graph& g, CoefficientField field, bool reduced) {
    return betti_from_complex(clique_complex(g, clique_number(g) - 1), field, reduced);
}

bool betti_equal(const BettiVector& a, const BettiVector& b) {
    std::size_t len = std::max(a.betti.size(), b.betti.size());
    for (std::size_t p = 0; p < len; ++p) {
        long x = p < a.betti.size() ? a.betti[p] : 0;
        long y = p < b.betti.size() ? b.betti[p] : 0;
        if (x != y) return false;
    }
    return true;
}

std::string format_betti(const BettiVector& v) {
    std::ostringstream out;
    for (std::size_t p = 0; p < v.betti.size(); ++p) {
        if (p) out << " ";
        out << v.betti[p];
    }
    return out.str();
}

SNFDiagonal smith_normal_form(std::vector<std::vector<long long>> input) {
    std::size_t nrows = input.size();
    std::size_t ncols = nrows ? input[0].size() : 0;
    std::vector<std::vector<Wide>> m(nrows, std::vector<Wide>(ncols));
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) m[i][j] = input[i][j];

    SNFDiagonal out;
    std::size_t t = 0;
    while (t < nrows && t < ncols) {
        // minimal-magnitude pivot in the trailing submatrix
        std::size_t pi = nrows, pj = ncols;
        for (std::size_t i = t; i < nrows; ++i)
            for (std::size_t j = t; j < ncols; ++j)
                if (m[i][j] != 0 &&
                    (pi == nrows || wide_abs(m[i][j]) < wide_abs(m[pi][pj])))
                    pi = i, pj = j;
        if (pi == nrows) break;
        std::swap(m[t], m[pi]);
        for (std::size_t i = 0; i < nrows; ++i) std::swap(m[i][t], m[i][pj]);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < nrows; ++i) {
                if (m[i][t] == 0) continue;
                Wide q = m[i][t] / m[t][t];
                for (std::size_t j = t; j < ncols; ++j)
                    m[i][j] = checked_sub(m[i][j], checked_mul(q, m[t][j]));
                if (m[i][t] != 0) {  // remainder smaller than pivot: promote it
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < ncols; ++j) {
                if (m[t][j] == 0) continue;
                Wide q = m[t][j] / m[t][t];
                for (std::size_t i = t; i < nrows; ++i)
                    m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][t]));
                if (m[t][j] != 0) {
                    for (std::size_t i = 0; i < nrows; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
            if (clean) {
                // enforce the divisibility chain: pivot must divide the rest
                for (std::size_t i = t + 1; i < nrows && clean; ++i)
                    for (std::size_t j = t + 1; j < ncols && clean; ++j)
                        if (m[i][j] % m[t][t] != 0) {
                            for (std::size_t k = t; k < ncols; ++k)
                                m[t][k] = checked_add(m[t][k], m[i][k]);
                            clean = false;
                        }
            }
        }
        ++t;
    }

    for (std::size_t k = 0; k < t; ++k) {
        Wide d = wide_abs(m[k][k]);
        if (d > std::numeric_limits<long long>::max())
            throw std::overflow_error("invariant factor exceeds 64 bits");
        out.factors.push_back(static_cast<long long>(d));
    }
    return out;
}

bool check_invariance(const Graph& g, const Move& m, const Policy& policy, MemoCache& cache) {
    Graph h = apply_move(g, m, policy, cache);
    for (CoefficientField field : {CoefficientField::gf2, CoefficientField::rational}) {
        if (!betti_equal(betti_numbers(g, field, false), betti_numbers(h, field, false)))
            return false;
    }
    return true;
}

}  // namespace contractix
