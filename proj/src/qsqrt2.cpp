#include "interlace/qsqrt2.hpp"

namespace interlace {

QSqrt2& QSqrt2::operator+=(const QSqrt2& o) {
    rat_ += o.rat_;
    irr_ += o.irr_;
    return *this;
}

QSqrt2& QSqrt2::operator-=(const QSqrt2& o) {
    rat_ -= o.rat_;
    irr_ -= o.irr_;
    return *this;
}

QSqrt2& QSqrt2::operator*=(const QSqrt2& o) {
    // (a + b s)(c + d s) = (ac + 2bd) + (ad + bc) s
    BigRational r = rat_ * o.rat_ + 2 * irr_ * o.irr_;
    BigRational i = rat_ * o.irr_ + irr_ * o.rat_;
    rat_ = std::move(r);
    irr_ = std::move(i);
    return *this;
}

QSqrt2 QSqrt2::inverse() const {
    if (is_zero()) throw DomainError("division by zero in Q(sqrt2)");
    BigRational norm = rat_ * rat_ - 2 * irr_ * irr_;
    return QSqrt2(rat_ / norm, -irr_ / norm);
}

QSqrt2 QSqrt2::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QSqrt2 result(1);
    QSqrt2 base = *this;
    unsigned long n = static_cast<unsigned long>(e);
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

int QSqrt2::sign() const {
    int sa = sign_of(rat_);
    int sb = sign_of(irr_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: |rat| vs |irr|*sqrt(2), i.e. rat^2 vs 2*irr^2.
    // Equality cannot occur for nonzero rationals (sqrt 2 is irrational).
    int c = (rat_ * rat_ > 2 * irr_ * irr_) ? 1 : -1;
    return sa > 0 ? c : -c;
}

std::string qsqrt2_str(const QSqrt2& v) {
    if (v.is_zero()) return "0";
    std::string out;
    if (v.rat() != 0) out += rational_str(v.rat());
    if (v.irr() != 0) {
        BigRational i = v.irr();
        if (!out.empty()) {
            out += sign_of(i) < 0 ? "-" : "+";
            i = abs(i);
        }
        if (i == 1)
            out += "s";
        else if (i == -1)
            out += "-s";
        else
            out += rational_str(i) + "*s";
    }
    return out;
}

QSqrt2 parse_qsqrt2(const std::string& rat_tok, const std::string& irr_tok) {
    return QSqrt2(parse_rational(rat_tok), parse_rational(irr_tok));
}

} // namespace interlace
