#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace treespectra {

// Arbitrary-precision rational number, always reduced, denominator > 0.
// Canonical zero is 0/1. Backed by GMP.
class BigRational {
public:
    BigRational() : q_(0) {}
    BigRational(long v) : q_(v) {}  // NOLINT: implicit by design, enables 0/1 literals
    BigRational(const mpz_class& v) : q_(v) {}
    BigRational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
        if (den == 0) throw std::domain_error("BigRational: zero denominator");
        q_.canonicalize();
    }
    BigRational(long num, long den) : BigRational(mpz_class(num), mpz_class(den)) {}

    // Accepts "num" or "num/den" with optional leading sign; nothing else.
    static BigRational from_string(std::string_view text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    double to_double() const { return q_.get_d(); }
    std::string to_string() const;  // "num" when integral, else "num/den"

    BigRational abs() const {
        BigRational r(*this);
        if (sgn(r.q_) < 0) r.q_ = -r.q_;
        return r;
    }

    // Integer power; negative exponents invert (0 to a negative power throws).
    BigRational pow(long e) const;

    mpz_class floor() const {
        mpz_class r;
        mpz_fdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return r;
    }
    mpz_class ceil() const {
        mpz_class r;
        mpz_cdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return r;
    }

    BigRational operator-() const {
        BigRational r;
        r.q_ = -q_;
        return r;
    }

    BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
    BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
    BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
    BigRational& operator/=(const BigRational& o) {
        if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const BigRational& a, const BigRational& b) { return a.q_ != b.q_; }
    friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }
    friend bool operator>(const BigRational& a, const BigRational& b) { return a.q_ > b.q_; }
    friend bool operator<=(const BigRational& a, const BigRational& b) { return a.q_ <= b.q_; }
    friend bool operator>=(const BigRational& a, const BigRational& b) { return a.q_ >= b.q_; }

private:
    mpq_class q_;
};

inline BigRational BigRational::pow(long e) const {
    if (e == 0) return BigRational(1);
    bool invert = e < 0;
    unsigned long ue = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && is_zero()) throw std::domain_error("BigRational: zero to a negative power");
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), num().get_mpz_t(), ue);
    mpz_pow_ui(pd.get_mpz_t(), den().get_mpz_t(), ue);
    return invert ? BigRational(pd, pn) : BigRational(pn, pd);
}

inline std::string BigRational::to_string() const {
    std::string s = num().get_str();
    if (!is_integer()) {
        s += '/';
        s += den().get_str();
    }
    return s;
}

inline BigRational BigRational::from_string(std::string_view text) {
    auto is_int_token = [](std::string_view t) {
        if (!t.empty() && (t[0] == '+' || t[0] == '-')) t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    auto slash = text.find('/');
    std::string_view num_part = text.substr(0, slash);
    if (!is_int_token(num_part))
        throw std::invalid_argument("BigRational: bad numerator in '" + std::string(text) + "'");
    mpz_class n(std::string(num_part), 10);
    if (slash == std::string_view::npos) return BigRational(n);
    std::string_view den_part = text.substr(slash + 1);
    if (!is_int_token(den_part))
        throw std::invalid_argument("BigRational: bad denominator in '" + std::string(text) + "'");
    mpz_class d(std::string(den_part), 10);
    if (d == 0) throw std::domain_error("BigRational: zero denominator");
    return BigRational(n, d);
}

std::ostream& operator<<(std::ostream& os, const BigRational& q);

}  // namespace treespectra
