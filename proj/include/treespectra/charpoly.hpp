#pragma once

#include <optional>
#include <vector>

#include "treespectra/graph.hpp"
#include "treespectra/polynomial.hpp"
#include "treespectra/randic.hpp"
#include "treespectra/roots.hpp"

namespace treespectra {

// One term coefficient * (x-1)^power of the characteristic polynomial in the
// shifted basis.
struct ShiftedTerm {
    int power;
    BigRational coefficient;
};

// Characteristic polynomial of the normalized Laplacian of a tree, assembled
// from exact alpha = -1 matching indices: sum_i (-1)^i R^(i) (x-1)^(n-2i).
std::vector<ShiftedTerm> charpoly_in_shifted_basis(const MatchingIndexVector& indices, int n);

// Coefficients a_0..a_n with the alternating-sign convention
// phi(x) = a_0 x^n - a_1 x^(n-1) + a_2 x^(n-2) - ...
std::vector<BigRational> charpoly_coefficients(const MatchingIndexVector& indices, int n);

// phi as a plain polynomial in x (signs folded in).
RationalPolynomial expand_charpoly(const MatchingIndexVector& indices, int n);

// Convenience: indices via the tree recursion, then expansion. The isolated
// vertex (n = 1) short-circuits to phi = x.
RationalPolynomial tree_charpoly(const Tree& t);

// psi(y) = y^k - R^(1) y^(k-1) + ... + (-1)^k R^(k).
RationalPolynomial reduced_polynomial(const MatchingIndexVector& indices);

// The alternating sum 1 - R^(1) + R^(2) - ...; identically zero on trees.
BigRational verify_zero_sum(const MatchingIndexVector& indices);

struct PsiRoot {
    BigRational lo, hi;  // isolating interval; lo == hi marks an exact rational root
    int multiplicity = 1;
    double approx = 0.0;  // polished double approximation
    bool is_rational() const { return lo == hi; }
    BigRational exact_value() const { return lo; }
};

struct EigenvalueGroup {
    double value = 0.0;
    int multiplicity = 1;
    // (1 - value)^2 as an exact rational, when the psi root is rational.
    std::optional<BigRational> alpha;
    int branch = 0;  // +1 for 1+sqrt(alpha), -1 for 1-sqrt(alpha), 0 for the eigenvalue-1 block
};

struct ExactSpectrum {
    int n = 0;
    int k = 0;
    int multiplicity_one = 0;
    RationalPolynomial psi;
    std::vector<PsiRoot> root_pairs;            // roots of psi, descending
    std::vector<EigenvalueGroup> eigenvalues;   // descending by value
    std::vector<double> flatten() const;        // all n eigenvalues, descending
};

// Full exact spectrum description of a tree with n >= 2: eigenvalue 1 with
// multiplicity n-2k plus the pairs 1 +- sqrt(alpha_i) over the roots of psi.
ExactSpectrum exact_spectrum(const Tree& t);

}  // namespace treespectra
