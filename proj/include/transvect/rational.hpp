#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace transvect {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, kept in canonical form:
/// gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
  public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(const BigInt& n) : num_(n), den_(1) {}
    Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero())
            throw std::domain_error("Rational: zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    int sign() const { return num_.sign(); }

    Rational operator-() const { return Rational(unchecked{}, -num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero())
            throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    Rational inv() const {
        if (is_zero())
            throw std::domain_error("Rational: inverse of zero");
        return Rational(unchecked{}, num_.sign() > 0 ? den_ : -den_,
                        num_.sign() > 0 ? num_ : BigInt(-num_));
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt lhs = a.num_ * b.den_, rhs = b.num_ * a.den_;
        return lhs < rhs   ? std::strong_ordering::less
               : lhs > rhs ? std::strong_ordering::greater
                           : std::strong_ordering::equal;
    }

    /// "p" when the denominator is 1, otherwise "p/q"; parse() accepts both.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1)
            s += "/" + den_.str();
        return s;
    }

    static Rational parse(std::string_view s);

  private:
    struct unchecked {};
    Rational(unchecked, BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (num_.is_zero()) {
            den_ = 1;
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(num_), den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_;
};

inline Rational rat(long long num, long long den) { return Rational(BigInt(num), BigInt(den)); }

inline Rational Rational::parse(std::string_view s) {
    auto bad = [&] { throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'"); };
    if (s.empty())
        bad();
    auto slash = s.find('/');
    auto check_int = [&](std::string_view t) {
        if (t.empty())
            bad();
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size())
            bad();
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                bad();
    };
    if (slash == std::string_view::npos) {
        check_int(s);
        return Rational(BigInt(std::string(s)));
    }
    std::string_view p = s.substr(0, slash), q = s.substr(slash + 1);
    check_int(p);
    check_int(q);
    return Rational(BigInt(std::string(p)), BigInt(std::string(q)));
}

inline BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0)
        return 0;
    BigInt r = 1;
    for (long long i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

/// Falling factorial n(n-1)...(n-k+1).
inline BigInt falling(long long n, long long k) {
    BigInt r = 1;
    for (long long i = 0; i < k; ++i)
        r *= (n - i);
    return r;
}

} // namespace transvect
