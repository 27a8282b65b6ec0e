#pragma once

#include <stdexcept>
#include <vector>

#include "treespectra/charpoly.hpp"
#include "treespectra/graph.hpp"

namespace treespectra {

class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Dense symmetric matrix of doubles, symmetry enforced by the setter.
class DenseSymMatrix {
public:
    explicit DenseSymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0) {
        if (n < 0) throw std::invalid_argument("DenseSymMatrix: negative size");
    }

    int n() const { return n_; }
    double operator()(int i, int j) const { return a_[idx(i, j)]; }
    void set(int i, int j, double v) {
        a_[idx(i, j)] = v;
        a_[idx(j, i)] = v;
    }
    double trace() const {
        double t = 0.0;
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

private:
    size_t idx(int i, int j) const {
        if (i < 0 || j < 0 || i >= n_ || j >= n_)
            throw std::out_of_range("DenseSymMatrix: index out of range");
        return static_cast<size_t>(i) * static_cast<size_t>(n_) + static_cast<size_t>(j);
    }

    int n_;
    std::vector<double> a_;
};

// Diagonal 1 for non-isolated vertices (0 otherwise), -1/sqrt(d_u d_v) on edges.
DenseSymMatrix normalized_laplacian(const Graph& g);

// All eigenvalues by cyclic Jacobi rotations, sorted descending. Convergence:
// off-diagonal Frobenius norm <= tol. Throws NumericError if the sweep budget
// runs out.
std::vector<double> eigenvalues_jacobi(const DenseSymMatrix& m, double tol = 1e-12,
                                       int max_sweeps = 100);

struct SpectrumReport {
    ExactSpectrum exact;
    std::vector<double> numeric;  // descending, length n
    double max_abs_residual = 0.0;
    bool matched = false;
};

// Pairs the exact-route spectrum with the Jacobi spectrum pointwise.
SpectrumReport reconcile(const Tree& t, double tol = 1e-9);

}  // namespace treespectra
