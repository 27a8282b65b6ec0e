#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treespectra/rational.hpp"

namespace treespectra {

// Dense univariate polynomial over BigRational. Coefficient index = power.
// Invariant: no trailing zero coefficient; the zero polynomial is the empty
// vector and has degree -1.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
        normalize();
    }

    static RationalPolynomial constant(const BigRational& c) {
        return RationalPolynomial(std::vector<BigRational>{c});
    }
    static RationalPolynomial monomial(const BigRational& c, int power);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigRational>& coeffs() const { return coeffs_; }
    BigRational coeff(int power) const {
        if (power < 0 || power >= static_cast<int>(coeffs_.size())) return BigRational(0);
        return coeffs_[static_cast<size_t>(power)];
    }
    const BigRational& leading() const;

    BigRational operator()(const BigRational& x) const;
    double evaluate_double(double x) const;
    std::vector<double> coeffs_double() const;

    RationalPolynomial derivative() const;
    RationalPolynomial monic() const;

    RationalPolynomial operator-() const;
    friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
    friend RationalPolynomial operator*(const BigRational& c, const RationalPolynomial& p);
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const RationalPolynomial& a, const RationalPolynomial& b) {
        return !(a == b);
    }

    // Euclidean division; divisor must be nonzero.
    static std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a,
                                                                    const RationalPolynomial& b);
    // Division that must leave no remainder; throws std::domain_error otherwise.
    RationalPolynomial divide_exact(const RationalPolynomial& b) const;

    // Monic gcd; gcd(0, 0) = 0.
    static RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

    // Yun's algorithm: returns monic square-free factors with their multiplicities,
    // in increasing multiplicity order. Factors of degree 0 are dropped.
    std::vector<std::pair<RationalPolynomial, int>> squarefree_decomposition() const;

    std::string to_string(std::string_view var = "x") const;

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<BigRational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p);

}  // namespace treespectra
