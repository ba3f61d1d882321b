#pragma once

#include <string>
#include <utility>

#include "interlace/rational.hpp"

namespace interlace {

// Element of the quadratic field Q(sqrt 2), stored as rat + irr*sqrt(2).
// The representation is unique, so equality is componentwise. Every special
// evaluation point used by the complexity map (alpha = sqrt2, beta =
// 1/sqrt2, and their rational relatives) lives here.
class QSqrt2 {
public:
    QSqrt2() : rat_(0), irr_(0) {}
    QSqrt2(int v) : rat_(v), irr_(0) {}                  // NOLINT: implicit by design
    QSqrt2(BigRational r) : rat_(std::move(r)), irr_(0) {} // NOLINT
    QSqrt2(BigRational r, BigRational i) : rat_(std::move(r)), irr_(std::move(i)) {}

    static QSqrt2 sqrt2() { return QSqrt2(BigRational(0), BigRational(1)); }
    // beta = 1/sqrt(2) = sqrt(2)/2
    static QSqrt2 beta() { return QSqrt2(BigRational(0), BigRational(1, 2)); }

    const BigRational& rat() const { return rat_; }
    const BigRational& irr() const { return irr_; }

    bool is_zero() const { return rat_ == 0 && irr_ == 0; }
    bool is_rational() const { return irr_ == 0; }

    QSqrt2 operator-() const { return QSqrt2(-rat_, -irr_); }
    QSqrt2& operator+=(const QSqrt2& o);
    QSqrt2& operator-=(const QSqrt2& o);
    QSqrt2& operator*=(const QSqrt2& o);

    friend QSqrt2 operator+(QSqrt2 a, const QSqrt2& b) { return a += b; }
    friend QSqrt2 operator-(QSqrt2 a, const QSqrt2& b) { return a -= b; }
    friend QSqrt2 operator*(QSqrt2 a, const QSqrt2& b) { return a *= b; }

    friend bool operator==(const QSqrt2& a, const QSqrt2& b) {
        return a.rat_ == b.rat_ && a.irr_ == b.irr_;
    }
    friend bool operator!=(const QSqrt2& a, const QSqrt2& b) { return !(a == b); }

    // Multiplicative inverse; throws DomainError on zero. Uses the conjugate:
    // 1/(a+b s) = (a-b s)/(a^2-2 b^2), and a^2 = 2 b^2 has no nonzero
    // rational solutions, so the norm never vanishes for nonzero input.
    QSqrt2 inverse() const;
    friend QSqrt2 operator/(const QSqrt2& a, const QSqrt2& b) { return a * b.inverse(); }

    // Integer power; negative exponents go through inverse(). pow(0,0) = 1.
    QSqrt2 pow(long e) const;

    // Exact sign: decided by the component signs, falling back to comparing
    // rat^2 against 2*irr^2 when they disagree.
    int sign() const;
    QSqrt2 abs() const { return sign() < 0 ? -*this : *this; }

    friend int cmp(const QSqrt2& a, const QSqrt2& b) { return (a - b).sign(); }
    friend bool operator<(const QSqrt2& a, const QSqrt2& b) { return cmp(a, b) < 0; }
    friend bool operator>(const QSqrt2& a, const QSqrt2& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const QSqrt2& a, const QSqrt2& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const QSqrt2& a, const QSqrt2& b) { return cmp(a, b) >= 0; }

private:
    BigRational rat_, irr_;
};

// Canonical scalar form: "a/b", "c/d*s", or "a/b+c/d*s" (s = sqrt 2), with
// unit factors and zero parts omitted; no spaces. Examples: "32", "s",
// "1/2*s", "1+s", "2-3*s".
std::string qsqrt2_str(const QSqrt2& v);

// Two rational tokens "rat irr" meaning rat + irr*sqrt(2).
QSqrt2 parse_qsqrt2(const std::string& rat_tok, const std::string& irr_tok);

} // namespace interlace
