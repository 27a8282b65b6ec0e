#include "treespectra/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace treespectra {

namespace {

// Sturm chain p0 = f, p1 = f', p_{i+1} = -rem(p_{i-1}, p_i), each element
// scaled by 1/|leading| (positive factors keep the sign pattern intact).
std::vector<RationalPolynomial> sturm_chain(const RationalPolynomial& f) {
    std::vector<RationalPolynomial> chain;
    chain.push_back(f);
    if (f.degree() >= 1) chain.push_back(f.derivative());
    while (chain.back().degree() >= 0 && chain.size() >= 2) {
        auto [q, r] = RationalPolynomial::divmod(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) break;
        r = -r;
        r = (BigRational(1) / r.leading().abs()) * r;
        chain.push_back(std::move(r));
    }
    return chain;
}

int sign_variations(const std::vector<RationalPolynomial>& chain, const BigRational& x) {
    int variations = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p(x).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

struct Isolator {
    const RationalPolynomial& f;
    std::vector<RationalPolynomial> chain;
    BigRational max_width;
    std::vector<RootInterval> found;
    BigRational pending_exact;  // exact root hit mid-bisection, triggers a restart
    bool has_pending = false;

    // roots of f in (a, b]; precondition f(a) != 0
    void isolate(const BigRational& a, const BigRational& b, int va, int vb) {
        if (has_pending) return;
        int count = va - vb;
        if (count == 0) return;
        BigRational mid = (a + b) / BigRational(2);
        if (count == 1 && b - a <= max_width) {
            found.push_back({a, b});
            return;
        }
        if (f(mid).is_zero()) {
            pending_exact = mid;
            has_pending = true;
            return;
        }
        int vm = sign_variations(chain, mid);
        isolate(a, mid, va, vm);
        isolate(mid, b, vm, vb);
    }
};

}  // namespace

std::vector<RootInterval> isolate_real_roots(const RationalPolynomial& f, const BigRational& lo,
                                             const BigRational& hi, const BigRational& max_width) {
    if (f.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (lo > hi) throw std::invalid_argument("isolate_real_roots: empty interval");
    if (max_width.sign() <= 0) throw std::invalid_argument("isolate_real_roots: bad width");

    std::vector<RootInterval> exact_roots;
    RationalPolynomial work = f.monic();
    auto deflate_at = [&](const BigRational& r) {
        exact_roots.push_back({r, r});
        work = work.divide_exact(
            RationalPolynomial(std::vector<BigRational>{-r, BigRational(1)}));
    };
    while (work.degree() >= 1 && work(lo).is_zero()) deflate_at(lo);
    if (hi != lo)
        while (work.degree() >= 1 && work(hi).is_zero()) deflate_at(hi);

    std::vector<RootInterval> open_roots;
    while (work.degree() >= 1) {
        Isolator iso{work, sturm_chain(work), max_width, {}, BigRational(0), false};
        int va = sign_variations(iso.chain, lo);
        int vb = sign_variations(iso.chain, hi);
        iso.isolate(lo, hi, va, vb);
        if (!iso.has_pending) {
            open_roots = std::move(iso.found);
            break;
        }
        deflate_at(iso.pending_exact);
    }

    std::vector<RootInterval> out = std::move(exact_roots);
    out.insert(out.end(), open_roots.begin(), open_roots.end());
    std::sort(out.begin(), out.end(),
              [](const RootInterval& a, const RootInterval& b) { return a.lo + a.hi < b.lo + b.hi; });
    return out;
}

BigRational simplest_rational_in(const BigRational& lo, const BigRational& hi) {
    if (lo > hi) throw std::invalid_argument("simplest_rational_in: empty interval");
    if (lo.sign() <= 0 && hi.sign() >= 0) return BigRational(0);
    if (hi.sign() < 0) return -simplest_rational_in(-hi, -lo);
    // now 0 < lo <= hi
    BigRational a = lo, b = hi;
    std::vector<mpz_class> quotients;
    for (;;) {
        mpz_class cl = a.ceil();
        if (BigRational(cl) <= b) {
            // fold the integer back through the continued fraction
            BigRational x(cl);
            for (auto it = quotients.rbegin(); it != quotients.rend(); ++it)
                x = BigRational(*it) + BigRational(1) / x;
            return x;
        }
        mpz_class fl = a.floor();
        quotients.push_back(fl);
        BigRational fa = a - BigRational(fl);
        BigRational fb = b - BigRational(fl);
        // both fractional parts are in (0, 1); recurse on reciprocals, swapped
        BigRational na = BigRational(1) / fb;
        BigRational nb = BigRational(1) / fa;
        a = na;
        b = nb;
    }
}

double refine_root_double(const RationalPolynomial& f, const RootInterval& iv) {
    if (iv.exact()) return iv.lo.to_double();
    const double lo = iv.lo.to_double(), hi = iv.hi.to_double();
    std::vector<double> c = f.coeffs_double();
    auto eval = [&](double x, double& df) {
        double fx = 0.0;
        df = 0.0;
        for (size_t i = c.size(); i-- > 0;) {
            df = df * x + fx;
            fx = fx * x + c[i];
        }
        return fx;
    };
    double x = 0.5 * (lo + hi);
    const double slack = (hi - lo) + 1e-300;
    for (int iter = 0; iter < 40; ++iter) {
        double df;
        double fx = eval(x, df);
        if (fx == 0.0 || df == 0.0) break;
        double step = fx / df;
        double nx = x - step;
        if (nx < lo - slack || nx > hi + slack) break;
        x = nx;
        if (std::abs(step) < 1e-17 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

}  // namespace treespectra
