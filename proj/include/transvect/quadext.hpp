#pragma once

#include "transvect/rational.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace transvect {

/// Element a + b*sqrt(21) of the quadratic field Q(sqrt 21).
/// 21 is not a square, so the norm a^2 - 21 b^2 vanishes only at zero
/// and every nonzero element is invertible.
class QuadExt {
  public:
    QuadExt() = default;
    QuadExt(long long n) : a_(n) {}
    QuadExt(Rational a) : a_(std::move(a)) {}
    QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static QuadExt sqrt21() { return QuadExt(Rational(0), Rational(1)); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    bool is_rational() const { return b_.is_zero(); }

    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_one() const { return a_.is_one() && b_.is_zero(); }

    QuadExt operator-() const { return QuadExt(-a_, -b_); }

    friend QuadExt operator+(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend QuadExt operator-(const QuadExt& x, const QuadExt& y) {
        return QuadExt(x.a_ - y.a_, x.b_ - y.b_);
    }
    friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
        // (a + b s)(c + d s) = (ac + 21 bd) + (ad + bc) s,  s^2 = 21
        return QuadExt(x.a_ * y.a_ + Rational(21) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
    }
    friend QuadExt operator/(const QuadExt& x, const QuadExt& y) { return x * y.inv(); }

    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    QuadExt inv() const {
        Rational norm = a_ * a_ - Rational(21) * b_ * b_;
        if (norm.is_zero())
            throw std::domain_error("QuadExt: inverse of zero");
        return QuadExt(a_ / norm, -b_ / norm);
    }

    friend bool operator==(const QuadExt& x, const QuadExt& y) = default;

    std::string str() const {
        if (b_.is_zero())
            return a_.str();
        std::string rad = b_.str() + "*sqrt21";
        if (a_.is_zero())
            return rad;
        return a_.str() + (b_.sign() > 0 ? "+" : "") + rad;
    }

    static QuadExt parse(std::string_view s);

  private:
    Rational a_;
    Rational b_;
};

inline QuadExt quad_mul(const QuadExt& x, const QuadExt& y) { return x * y; }

inline QuadExt QuadExt::parse(std::string_view s) {
    auto mark = s.find("sqrt21");
    if (mark == std::string_view::npos)
        return QuadExt(Rational::parse(s));
    std::string_view head = s.substr(0, mark);
    if (s.size() != mark + 6)
        throw std::invalid_argument("QuadExt: cannot parse '" + std::string(s) + "'");
    if (head.empty() || head.back() != '*')
        throw std::invalid_argument("QuadExt: expected '*sqrt21' in '" + std::string(s) + "'");
    head.remove_suffix(1);
    // Split "<a><sign><b>" at the sign that starts the radical coefficient:
    // the last top-level +/- not in position 0 and not following '/' or another sign.
    size_t split = std::string_view::npos;
    for (size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '+' &&
            head[i - 1] != '-') {
            split = i;
            break;
        }
    }
    if (split == std::string_view::npos)
        return QuadExt(Rational(0), Rational::parse(head));
    Rational a = Rational::parse(head.substr(0, split));
    std::string_view bs = head.substr(split);
    Rational b = (bs[0] == '+') ? Rational::parse(bs.substr(1)) : Rational::parse(bs);
    return QuadExt(a, b);
}

} // namespace transvect
