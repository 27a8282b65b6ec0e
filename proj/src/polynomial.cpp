#include "treespectra/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace treespectra {

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

RationalPolynomial RationalPolynomial::monomial(const BigRational& c, int power) {
    if (power < 0) throw std::invalid_argument("monomial: negative power");
    std::vector<BigRational> v(static_cast<size_t>(power) + 1, BigRational(0));
    v.back() = c;
    return RationalPolynomial(std::move(v));
}

const BigRational& RationalPolynomial::leading() const {
    if (is_zero()) throw std::domain_error("leading(): zero polynomial");
    return coeffs_.back();
}

BigRational RationalPolynomial::operator()(const BigRational& x) const {
    BigRational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

double RationalPolynomial::evaluate_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

std::vector<double> RationalPolynomial::coeffs_double() const {
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.to_double());
    return out;
}

RationalPolynomial RationalPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigRational> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = BigRational(static_cast<long>(i)) * coeffs_[i];
    return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const {
    if (is_zero()) return {};
    BigRational inv = BigRational(1) / leading();
    return inv * *this;
}

RationalPolynomial RationalPolynomial::operator-() const {
    std::vector<BigRational> v(coeffs_);
    for (auto& c : v) c = -c;
    return RationalPolynomial(std::move(v));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<BigRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
    return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<BigRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()), BigRational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
    return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigRational> v(a.coeffs_.size() + b.coeffs_.size() - 1, BigRational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const BigRational& c, const RationalPolynomial& p) {
    std::vector<BigRational> v(p.coeffs_);
    for (auto& x : v) x *= c;
    return RationalPolynomial(std::move(v));
}

std::pair<RationalPolynomial, RationalPolynomial> RationalPolynomial::divmod(
    const RationalPolynomial& a, const RationalPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
    if (a.degree() < b.degree()) return {RationalPolynomial{}, a};
    std::vector<BigRational> rem(a.coeffs_);
    std::vector<BigRational> quot(static_cast<size_t>(a.degree() - b.degree()) + 1, BigRational(0));
    const BigRational& lead = b.leading();
    for (int d = a.degree(); d >= b.degree();) {
        BigRational q = rem[static_cast<size_t>(d)] / lead;
        quot[static_cast<size_t>(d - b.degree())] = q;
        for (int i = 0; i <= b.degree(); ++i)
            rem[static_cast<size_t>(d - b.degree() + i)] -= q * b.coeffs_[static_cast<size_t>(i)];
        while (d >= 0 && rem[static_cast<size_t>(d)].is_zero()) --d;
    }
    rem.resize(static_cast<size_t>(b.degree() > 0 ? b.degree() : 0));
    return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial RationalPolynomial::divide_exact(const RationalPolynomial& b) const {
    auto [q, r] = divmod(*this, b);
    if (!r.is_zero()) throw std::domain_error("divide_exact: nonzero remainder");
    return q;
}

RationalPolynomial RationalPolynomial::gcd(const RationalPolynomial& a,
                                           const RationalPolynomial& b) {
    RationalPolynomial x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = divmod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : x.monic();
}

std::vector<std::pair<RationalPolynomial, int>> RationalPolynomial::squarefree_decomposition()
    const {
    std::vector<std::pair<RationalPolynomial, int>> out;
    if (degree() < 1) return out;
    RationalPolynomial f = monic();
    RationalPolynomial df = f.derivative();
    RationalPolynomial a = gcd(f, df);
    RationalPolynomial b = f.divide_exact(a);
    RationalPolynomial c = df.divide_exact(a);
    RationalPolynomial d = c - b.derivative();
    for (int mult = 1; b.degree() > 0; ++mult) {
        RationalPolynomial fac = gcd(b, d);
        if (fac.degree() > 0) out.emplace_back(fac, mult);
        b = b.divide_exact(fac);
        c = d.divide_exact(fac);
        d = c - b.derivative();
    }
    return out;
}

std::string RationalPolynomial::to_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int p = degree(); p >= 0; --p) {
        const BigRational& c = coeffs_[static_cast<size_t>(p)];
        if (c.is_zero()) continue;
        BigRational mag = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = mag == BigRational(1);
        if (p == 0 || !unit) os << mag.to_string();
        if (p > 0) {
            if (!unit) os << "*";
            os << var;
            if (p > 1) os << "^" << p;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p) {
    return os << p.to_string();
}

}  // namespace treespectra
