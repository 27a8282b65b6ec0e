#include "treespectra/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace treespectra {

namespace {

void require_exact_minus_one(const MatchingIndexVector& indices) {
    if (!indices.exact || indices.alpha_int != -1)
        throw std::invalid_argument("characteristic polynomial needs exact alpha = -1 indices");
}

BigRational binom(long n, long k) {
    if (k < 0 || k > n || n < 0) return BigRational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return BigRational(r);
}

// Width target for isolating intervals: 2^-40.
const BigRational& root_width() {
    static const BigRational w(mpz_class(1), mpz_class(1) << 40);
    return w;
}

}  // namespace

std::vector<ShiftedTerm> charpoly_in_shifted_basis(const MatchingIndexVector& indices, int n) {
    require_exact_minus_one(indices);
    if (n < 1) throw std::invalid_argument("charpoly: n must be positive");
    if (n < 2 * indices.k) throw std::invalid_argument("charpoly: matching number exceeds n/2");
    std::vector<ShiftedTerm> terms;
    terms.reserve(indices.values.size());
    for (int i = 0; i <= indices.k; ++i) {
        BigRational c = indices.values[static_cast<size_t>(i)];
        if (i % 2 == 1) c = -c;
        terms.push_back({n - 2 * i, c});
    }
    return terms;
}

std::vector<BigRational> charpoly_coefficients(const MatchingIndexVector& indices, int n) {
    require_exact_minus_one(indices);
    if (n < 1) throw std::invalid_argument("charpoly: n must be positive");
    if (n < 2 * indices.k) throw std::invalid_argument("charpoly: matching number exceeds n/2");
    std::vector<BigRational> a(static_cast<size_t>(n) + 1, BigRational(0));
    for (int p = 0; p <= n; ++p) {
        BigRational sum(0);
        for (int i = 0; i <= indices.k; ++i) {
            BigRational term = binom(n - 2 * i, p - 2 * i) * indices.values[static_cast<size_t>(i)];
            if (i % 2 == 1) term = -term;
            sum += term;
        }
        a[static_cast<size_t>(p)] = sum;
    }
    return a;
}

RationalPolynomial expand_charpoly(const MatchingIndexVector& indices, int n) {
    std::vector<BigRational> a = charpoly_coefficients(indices, n);
    std::vector<BigRational> coeffs(static_cast<size_t>(n) + 1, BigRational(0));
    for (int p = 0; p <= n; ++p) {
        BigRational c = a[static_cast<size_t>(p)];
        if (p % 2 == 1) c = -c;
        coeffs[static_cast<size_t>(n - p)] = c;
    }
    return RationalPolynomial(std::move(coeffs));
}

RationalPolynomial tree_charpoly(const Tree& t) {
    if (t.n() == 1) return RationalPolynomial::monomial(BigRational(1), 1);  // L = [0], phi = x
    return expand_charpoly(randic_indices_tree(t, -1), t.n());
}

RationalPolynomial reduced_polynomial(const MatchingIndexVector& indices) {
    require_exact_minus_one(indices);
    const int k = indices.k;
    std::vector<BigRational> coeffs(static_cast<size_t>(k) + 1, BigRational(0));
    for (int i = 0; i <= k; ++i) {
        BigRational c = indices.values[static_cast<size_t>(i)];
        if (i % 2 == 1) c = -c;
        coeffs[static_cast<size_t>(k - i)] = c;
    }
    return RationalPolynomial(std::move(coeffs));
}

BigRational verify_zero_sum(const MatchingIndexVector& indices) {
    require_exact_minus_one(indices);
    BigRational sum(0);
    for (int i = 0; i <= indices.k; ++i) {
        BigRational c = indices.values[static_cast<size_t>(i)];
        if (i % 2 == 1) c = -c;
        sum += c;
    }
    return sum;
}

std::vector<double> ExactSpectrum::flatten() const {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(n));
    for (const auto& g : eigenvalues)
        for (int i = 0; i < g.multiplicity; ++i) out.push_back(g.value);
    return out;
}

ExactSpectrum exact_spectrum(const Tree& t) {
    if (t.n() < 2) throw std::invalid_argument("exact_spectrum: needs n >= 2");

    ExactSpectrum spectrum;
    spectrum.n = t.n();
    MatchingIndexVector indices = randic_indices_tree(t, -1);
    spectrum.k = indices.k;
    spectrum.multiplicity_one = spectrum.n - 2 * spectrum.k;
    spectrum.psi = reduced_polynomial(indices);

    const BigRational zero(0), one(1);
    for (const auto& [factor, mult] : spectrum.psi.squarefree_decomposition()) {
        for (const auto& iv : isolate_real_roots(factor, zero, one, root_width())) {
            PsiRoot root;
            root.multiplicity = mult;
            if (iv.exact()) {
                root.lo = root.hi = iv.lo;
                root.approx = iv.lo.to_double();
            } else {
                // a rational root squeezed inside the interval is detected exactly
                BigRational candidate = simplest_rational_in(iv.lo, iv.hi);
                if (factor(candidate).is_zero()) {
                    root.lo = root.hi = candidate;
                    root.approx = candidate.to_double();
                } else {
                    root.lo = iv.lo;
                    root.hi = iv.hi;
                    root.approx = refine_root_double(factor, iv);
                }
            }
            spectrum.root_pairs.push_back(std::move(root));
        }
    }

    int counted = 0;
    for (const auto& r : spectrum.root_pairs) counted += r.multiplicity;
    if (counted != spectrum.k)
        throw std::logic_error("exact_spectrum: psi root count " + std::to_string(counted) +
                               " does not match matching number " + std::to_string(spectrum.k));

    std::sort(spectrum.root_pairs.begin(), spectrum.root_pairs.end(),
              [](const PsiRoot& a, const PsiRoot& b) { return a.approx > b.approx; });

    if (spectrum.multiplicity_one > 0)
        spectrum.eigenvalues.push_back({1.0, spectrum.multiplicity_one, std::nullopt, 0});
    for (const auto& r : spectrum.root_pairs) {
        double s = std::sqrt(r.approx);
        std::optional<BigRational> alpha;
        if (r.is_rational()) alpha = r.exact_value();
        spectrum.eigenvalues.push_back({1.0 + s, r.multiplicity, alpha, +1});
        spectrum.eigenvalues.push_back({1.0 - s, r.multiplicity, alpha, -1});
    }
    std::sort(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(),
              [](const EigenvalueGroup& a, const EigenvalueGroup& b) { return a.value > b.value; });
    return spectrum;
}

}  // namespace treespectra
