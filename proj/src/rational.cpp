#include "interlace/rational.hpp"

#include <cctype>

namespace interlace {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

BigRational parse_rational(const std::string& text) {
    std::string s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        s = s.substr(1);
    }
    std::string num_part = s, den_part = "1";
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        num_part = s.substr(0, slash);
        den_part = s.substr(slash + 1);
    }
    if (!all_digits(num_part) || !all_digits(den_part))
        throw ParseError("not a rational: '" + text + "'");
    BigInt n(num_part), d(den_part);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    if (negative) n = -n;
    return BigRational(n, d);
}

std::string rational_str(const BigRational& r) {
    std::string s = num(r).str();
    if (den(r) != 1) s += "/" + den(r).str();
    return s;
}

BigInt ceil_nth_root(const BigInt& value, unsigned root) {
    if (value < 0) throw DomainError("ceil_nth_root of a negative value");
    if (root == 0) throw DomainError("ceil_nth_root with zero root index");
    if (value <= 1) return value;
    // Binary search on b^root >= value. msb gives a tight starting range.
    long bits = static_cast<long>(msb(value)) + 1;
    BigInt lo = 1, hi = pow2(bits / root + 1);
    while (lo < hi) {
        BigInt mid = (lo + hi) / 2;
        if (pow(mid, root) >= value)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

} // namespace interlace
