#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <vector>

#include "treespectra/graph.hpp"
#include "treespectra/rational.hpp"

namespace treespectra {

class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The sequence R_alpha^(0), ..., R_alpha^(k) of matching indices together with
// the matching number k. Exact mode holds rationals (integer alpha only);
// numeric mode holds doubles for arbitrary real alpha.
struct MatchingIndexVector {
    bool exact = true;
    long alpha_int = -1;                 // meaningful in exact mode
    double alpha = -1.0;                 // always set
    int k = 0;                           // matching number
    std::vector<BigRational> values;     // exact mode, size k+1
    std::vector<double> numeric_values;  // numeric mode, size k+1
};

// Product of the endpoint degrees of an edge.
long edge_strength(const Graph& g, int u, int v);

// All sets of p pairwise-disjoint edges, each set sorted, listed in
// lexicographic order. Guarded: throws CapacityError above 64 edges.
std::vector<std::vector<Edge>> enumerate_matchings(const Graph& g, int p);

// Number of p-matchings for p = 0..k. Trees of any size; other graphs under
// the enumeration guard.
std::vector<mpz_class> matching_counts(const Graph& g);

int matching_number(const Graph& g);

MatchingIndexVector randic_indices_bruteforce(const Graph& g, long alpha);
MatchingIndexVector randic_indices_bruteforce_numeric(const Graph& g, double alpha);

// Linear-time exact computation on trees via a rooted two-state recursion.
MatchingIndexVector randic_indices_tree(const Tree& t, long alpha);
MatchingIndexVector randic_indices_tree_numeric(const Tree& t, double alpha);

// Second Zagreb index, the alpha = 1 first-order matching index.
BigRational zagreb2(const Graph& g);

}  // namespace treespectra
