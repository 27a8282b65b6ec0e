#pragma once

#include <gmpxx.h>

#include "treespectra/graph.hpp"
#include "treespectra/polynomial.hpp"
#include "treespectra/randic.hpp"

namespace treespectra {

// R_{-1}^(i) of the path P_n from the binomial closed form
// C(n-2-i, i)/4^i + C(n-1-i, i-1)/4^(i-1); small n fall back to the tree
// recursion. Out-of-range i gives 0.
BigRational path_index(int n, int i);

// psi of P_n, equal to (y-1) * sum_{i<k} (-1)^i C(n-2-i, i)/4^i y^{k-1-i}.
// Base cases: psi_{P2} = y - 1, psi_{P1} = 1.
RationalPolynomial path_reduced_polynomial(int n);

struct StarlikeReport {
    int k = 0;                      // matching number
    BigRational r_minus1;           // R_{-1}^(1)
    mpz_class max_matching_count;   // |M_k|
    BigRational r_top;              // R_{-1}^(k)
    int mult_one = 0;               // multiplicity of eigenvalue 1, n - 2k
};

// Closed forms for a starlike tree. R_{-1} uses the unit-branch census
// (n+1)/4 + (t/4)(2/r - 1) with t = number of length-1 branches; see
// starlike_r1_odd_count_form for the variant it replaces.
StarlikeReport starlike_report(const StarlikeSpec& spec);

// Variant of the pendant-edge census using the count of odd-length branches
// instead of length-1 branches. Wrong whenever an odd branch is longer than 1
// (e.g. T(1,1,5)); kept callable so the disagreement stays pinned by tests.
BigRational starlike_r1_odd_count_form(const StarlikeSpec& spec);

// Full exact alpha = -1 index vector of H_m(p,q) by the path recurrence
// R^(i)(T) = R^(i)(P_m) + r1 R^(i-1)(P_m) + r2 R^(i-1)(P_{m-1}).
MatchingIndexVector double_starlike_indices(const DoubleStarlikeSpec& spec);

// psi of H_m(p,q) by the two-branch recurrence on psi_{P_m}, psi_{P_{m-1}}
// (m >= 3); m = 2 routes through the index vector.
RationalPolynomial double_starlike_reduced(const DoubleStarlikeSpec& spec);

// p+q-2 for even m, p+q-1 for odd m.
int eigenvalue_one_multiplicity(const DoubleStarlikeSpec& spec);

enum class CospectralResult { Isomorphic, NotCospectral };

// Decides cospectrality of two double starlike trees with the same path
// length by exact psi comparison. Equal spectra force equal {p,q} multisets.
CospectralResult cospectral_double_starlike(const DoubleStarlikeSpec& a,
                                            const DoubleStarlikeSpec& b);

}  // namespace treespectra
