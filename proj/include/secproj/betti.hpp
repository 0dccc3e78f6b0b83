#ifndef SECPROJ_BETTI_HPP
#define SECPROJ_BETTI_HPP

#include <map>
#include <string>

#include "secproj/hilbert.hpp"

namespace secproj {

// Graded Betti numbers of R/I in the shifted convention
// F_i = (+)_j R(-i-j)^{beta_{i,j}}, so beta_{i,j} lives in "row" j of the
// Macaulay-style table.  Entries for i >= 1 coincide with those of the
// minimal free resolution of the ideal itself.
struct BettiTable {
    std::map<std::pair<int, int>, long> beta;  // (i, j) -> count, nonzero only
    int jmax = -1;        // rows 0..jmax computed
    bool complete = false;
    int nvars = 0;

    long get(int i, int j) const {
        auto it = beta.find({i, j});
        return it == beta.end() ? 0 : it->second;
    }
    int max_i() const;
    int max_row() const;  // considering entries with i >= 1
    bool row_zero(int j) const;

    std::string grid() const;  // Macaulay-style: rows j, columns i
};

// Koszul-homology computation of beta_{i,j} = dim Tor_i(R/I, K)_{i+j} for
// all rows j <= jmax (automatic window when jmax < 0: through
// max(numerator degree, last nonzero row) + 1, with the Euler identity plus
// a trailing zero row as the completeness certificate).
BettiTable graded_betti(const Ideal& I, int jmax = -1);

// Exact per-degree Euler identity between a table and the Hilbert numerator.
bool euler_identity_holds(const BettiTable& t, const HilbertData& h);

constexpr int kNpAll = 1 << 20;  // "N_p for every p" sentinel

struct ResolutionPredicates {
    int regularity = 0;
    int pd = 0;      // projective dimension of R/I
    int depth = 0;   // r + 1 - pd
    bool acm = false;
    int np_max = 0;                 // max p with the N_p Betti condition (kNpAll = all)
    std::map<int, int> ndp_max;     // d -> max p with the N_{d,p} condition, d = 2,3,4
    bool projectively_normal = false;  // granted flag recorded on the variety
    int max_generator_degree = 0;   // max j+1 over nonzero beta_{1,j}

    bool satisfies_np(int p) const { return projectively_normal && p <= np_max; }
    bool satisfies_ndp(int d, int p) const {
        auto it = ndp_max.find(d);
        return it != ndp_max.end() && p <= it->second;
    }
};

ResolutionPredicates table_predicates(const BettiTable& t, int ambient_r, int dim_n,
                                      bool projectively_normal);

}  // namespace secproj

#endif
