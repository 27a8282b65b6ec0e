#include "treespectra/spectra.hpp"

#include <algorithm>
#include <cmath>

namespace treespectra {

DenseSymMatrix normalized_laplacian(const Graph& g) {
    DenseSymMatrix m(g.n());
    for (int v = 0; v < g.n(); ++v) m.set(v, v, g.degree(v) > 0 ? 1.0 : 0.0);
    for (const auto& [u, v] : g.edges())
        m.set(u, v, -1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v)));
    return m;
}

std::vector<double> eigenvalues_jacobi(const DenseSymMatrix& m, double tol, int max_sweeps) {
    if (tol <= 0.0) throw std::invalid_argument("eigenvalues_jacobi: tol must be positive");
    const int n = m.n();
    if (n == 0) return {};
    std::vector<double> a(static_cast<size_t>(n) * static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m(i, j);
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    auto off_norm = [&] {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += at(i, j) * at(i, j);
        return std::sqrt(2.0 * s);
    };

    for (int sweep = 0; sweep <= max_sweeps; ++sweep) {
        if (off_norm() <= tol) {
            std::vector<double> eig(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) eig[static_cast<size_t>(i)] = at(i, i);
            std::sort(eig.begin(), eig.end(), std::greater<>());
            return eig;
        }
        if (sweep == max_sweeps) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (apq == 0.0) continue;
                double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double h = t * apq;
                at(p, p) -= h;
                at(q, q) += h;
                at(p, q) = at(q, p) = 0.0;
                for (int i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = at(p, i) = aip - s * (aiq + tau * aip);
                    at(i, q) = at(q, i) = aiq + s * (aip - tau * aiq);
                }
            }
        }
    }
    throw NumericError("eigenvalues_jacobi: no convergence after " + std::to_string(max_sweeps) +
                       " sweeps");
}

SpectrumReport reconcile(const Tree& t, double tol) {
    SpectrumReport report;
    report.exact = exact_spectrum(t);
    report.numeric = eigenvalues_jacobi(normalized_laplacian(t.graph()));
    std::vector<double> exact_vals = report.exact.flatten();
    double worst = 0.0;
    for (size_t i = 0; i < exact_vals.size(); ++i)
        worst = std::max(worst, std::abs(exact_vals[i] - report.numeric[i]));
    report.max_abs_residual = worst;
    report.matched = worst <= tol;
    return report;
}

}  // namespace treespectra
