#include "treespectra/closed_form.hpp"

#include <algorithm>
#include <stdexcept>

#include "treespectra/charpoly.hpp"

namespace treespectra {

namespace {

// C_{i,n} = C(n-i, i): the number of i-matchings of the path P_n.
// Zero outside 0 <= i <= n-i.
mpz_class path_matching_count(int i, int n) {
    if (i < 0 || n - i < i) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n - i), static_cast<unsigned long>(i));
    return r;
}

BigRational quarter_pow(int e) { return BigRational(1, 4).pow(e); }

struct DsRatios {
    BigRational r1, r2;
};

DsRatios ds_ratios(const DoubleStarlikeSpec& spec) {
    const long p = spec.p(), q = spec.q();
    return {BigRational(p * q, (p + 1) * (q + 1)), BigRational(p + q, 2 * (p + 1) * (q + 1))};
}

}  // namespace

BigRational path_index(int n, int i) {
    if (n < 1) throw std::invalid_argument("path_index: n must be positive");
    if (i < 0) return BigRational(0);
    if (n < 3) {
        MatchingIndexVector v = randic_indices_tree(build_path(n), -1);
        return i <= v.k ? v.values[static_cast<size_t>(i)] : BigRational(0);
    }
    return quarter_pow(i) * BigRational(path_matching_count(i, n - 2)) +
           quarter_pow(i - 1) * BigRational(path_matching_count(i - 1, n - 2));
}

RationalPolynomial path_reduced_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("path_reduced_polynomial: n must be positive");
    if (n == 1) return RationalPolynomial::constant(BigRational(1));
    if (n == 2)
        return RationalPolynomial(std::vector<BigRational>{BigRational(-1), BigRational(1)});
    const int k = n / 2;
    std::vector<BigRational> inner(static_cast<size_t>(k), BigRational(0));
    for (int i = 0; i < k; ++i) {
        BigRational c = quarter_pow(i) * BigRational(path_matching_count(i, n - 2));
        if (i % 2 == 1) c = -c;
        inner[static_cast<size_t>(k - 1 - i)] = c;
    }
    RationalPolynomial y_minus_1(std::vector<BigRational>{BigRational(-1), BigRational(1)});
    return y_minus_1 * RationalPolynomial(std::move(inner));
}

StarlikeReport starlike_report(const StarlikeSpec& spec) {
    const int n = spec.n();
    const int r = spec.num_branches();
    const int m = spec.num_odd_branches();
    const int t = spec.num_unit_branches();

    StarlikeReport report;
    // pendant-edge census: t edges of strength r; each longer branch one edge
    // of strength 2r and one of strength 2; the remaining edges strength 4
    report.r_minus1 =
        BigRational(n + 1, 4) + BigRational(t, 4) * (BigRational(2, r) - BigRational(1));

    // product of all vertex degrees: center r, one leaf per branch, the rest degree 2
    mpz_class degree_product = r;
    mpz_class pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(n - 1 - r));
    degree_product *= pow2;

    if (m == 0) {
        report.k = (n - 1) / 2;
        report.max_matching_count = (n + 1) / 2;
        report.r_top = BigRational(n - 1) / BigRational(degree_product);
    } else {
        report.k = (n - m + 1) / 2;
        mpz_class prod_l1 = 1;  // product of (l+1) over odd branches
        mpz_class prod_l = 1;   // product of l over odd branches
        BigRational sum_inv_l1(0), sum_inv_l(0);
        for (int l : spec.branch_lengths()) {
            if (l % 2 == 0) continue;
            prod_l1 *= l + 1;
            prod_l *= l;
            sum_inv_l1 += BigRational(1, l + 1);
            sum_inv_l += BigRational(1, l);
        }
        mpz_class half_pow;
        mpz_ui_pow_ui(half_pow.get_mpz_t(), 2, static_cast<unsigned long>(m - 1));
        BigRational count = BigRational(prod_l1, half_pow) * sum_inv_l1;
        if (!count.is_integer())
            throw std::logic_error("starlike_report: matching count came out fractional");
        report.max_matching_count = count.num();
        report.r_top = BigRational(prod_l, degree_product) * sum_inv_l;
    }
    report.mult_one = n - 2 * report.k;
    return report;
}

BigRational starlike_r1_odd_count_form(const StarlikeSpec& spec) {
    const int n = spec.n();
    const int r = spec.num_branches();
    const int m = spec.num_odd_branches();
    return BigRational(n + 1, 4) + BigRational(m, 4) * (BigRational(2, r) - BigRational(1));
}

MatchingIndexVector double_starlike_indices(const DoubleStarlikeSpec& spec) {
    const auto [r1, r2] = ds_ratios(spec);
    const int m = spec.m();
    const int k = m / 2 + 1;

    MatchingIndexVector miv;
    miv.exact = true;
    miv.alpha_int = -1;
    miv.alpha = -1.0;
    miv.k = k;
    miv.values.resize(static_cast<size_t>(k) + 1);
    if (m == 2) {
        miv.values[0] = BigRational(1);
        miv.values[1] = BigRational(1) + r1;
        miv.values[2] = r1;
        return miv;
    }
    for (int i = 0; i <= k; ++i)
        miv.values[static_cast<size_t>(i)] =
            path_index(m, i) + r1 * path_index(m, i - 1) + r2 * path_index(m - 1, i - 1);
    return miv;
}

RationalPolynomial double_starlike_reduced(const DoubleStarlikeSpec& spec) {
    const int m = spec.m();
    if (m == 2) return reduced_polynomial(double_starlike_indices(spec));
    const auto [r1, r2] = ds_ratios(spec);
    RationalPolynomial psi_m = path_reduced_polynomial(m);
    RationalPolynomial psi_m1 = path_reduced_polynomial(m - 1);
    RationalPolynomial y_minus_r1(std::vector<BigRational>{-r1, BigRational(1)});
    if (m % 2 == 1) return y_minus_r1 * psi_m - r2 * psi_m1;
    RationalPolynomial y = RationalPolynomial::monomial(BigRational(1), 1);
    return y * (psi_m - r2 * psi_m1) - r1 * psi_m;
}

int eigenvalue_one_multiplicity(const DoubleStarlikeSpec& spec) {
    return spec.p() + spec.q() - (spec.m() % 2 == 0 ? 2 : 1);
}

CospectralResult cospectral_double_starlike(const DoubleStarlikeSpec& a,
                                            const DoubleStarlikeSpec& b) {
    if (a.m() != b.m())
        throw std::invalid_argument("cospectral_double_starlike: path lengths differ");
    // The full spectrum is (n, psi): psi lists the off-one eigenvalue pairs and
    // n fixes the multiplicity of 1. At m = 2 psi alone can collide across
    // different vertex counts (e.g. H_2(2,9) and H_2(4,3) share r1 = 3/5), so
    // n must participate in the comparison.
    if (a.n() != b.n() || double_starlike_reduced(a) != double_starlike_reduced(b))
        return CospectralResult::NotCospectral;
    // equal spectra force equal pendant multisets
    bool same = (std::min(a.p(), a.q()) == std::min(b.p(), b.q())) &&
                (std::max(a.p(), a.q()) == std::max(b.p(), b.q()));
    if (!same)
        throw std::logic_error("cospectral_double_starlike: equal spectra on distinct trees " +
                               a.to_string() + " vs " + b.to_string());
    return CospectralResult::Isomorphic;
}

}  // namespace treespectra
