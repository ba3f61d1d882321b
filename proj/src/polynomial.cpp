#include "interlace/polynomial.hpp"

#include <algorithm>

namespace interlace {

namespace {

// Coefficient token for a term. A mixed rational+irrational coefficient is
// parenthesized so the " + " joined sum stays unambiguous; unit coefficients
// are dropped when a monomial part follows.
std::string coeff_token(const QSqrt2& c, bool has_monomial) {
    bool mixed = c.rat() != 0 && c.irr() != 0;
    if (!has_monomial) return mixed ? "(" + qsqrt2_str(c) + ")" : qsqrt2_str(c);
    if (c == QSqrt2(1)) return "";
    if (c == QSqrt2(-1)) return "-";
    if (mixed) return "(" + qsqrt2_str(c) + ")*";
    return qsqrt2_str(c) + "*";
}

void append_var_power(std::string& out, const std::string& var, unsigned e) {
    if (e == 0) return;
    if (!out.empty() && out.back() != '-' && out.back() != '*') out += "*";
    out += var;
    if (e > 1) out += "^" + std::to_string(e);
}

std::string join_terms(const std::vector<std::string>& parts) {
    if (parts.empty()) return "0";
    std::string out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

} // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly UniPoly::constant(const QSqrt2& c, std::string var) {
    UniPoly p(std::move(var));
    p.add_term(0, c);
    return p;
}

UniPoly UniPoly::monomial(const QSqrt2& c, unsigned e, std::string var) {
    UniPoly p(std::move(var));
    p.add_term(e, c);
    return p;
}

std::optional<unsigned> UniPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
}

QSqrt2 UniPoly::coeff(unsigned e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? QSqrt2(0) : it->second;
}

QSqrt2 UniPoly::leading_coeff() const {
    return terms_.empty() ? QSqrt2(0) : terms_.begin()->second;
}

void UniPoly::add_term(unsigned e, const QSqrt2& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

UniPoly UniPoly::operator-() const {
    UniPoly r(var_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (var_ != o.var_) throw DomainError("polynomial variable mismatch: " + var_ + " vs " + o.var_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (var_ != o.var_) throw DomainError("polynomial variable mismatch: " + var_ + " vs " + o.var_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.var_ != b.var_) throw DomainError("polynomial variable mismatch: " + a.var_ + " vs " + b.var_);
    UniPoly r(a.var_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

UniPoly UniPoly::scaled(const QSqrt2& c) const {
    UniPoly r(var_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r = UniPoly::constant(QSqrt2(1), var_);
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

QSqrt2 UniPoly::eval(const QSqrt2& point) const {
    // Horner over the descending-ordered sparse terms.
    QSqrt2 acc(0);
    unsigned prev_exp = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            acc = c;
            prev_exp = e;
            first = false;
        } else {
            acc = acc * point.pow(prev_exp - e) + c;
            prev_exp = e;
        }
    }
    if (first) return QSqrt2(0);
    return acc * point.pow(prev_exp);
}

std::string UniPoly::str() const {
    std::vector<std::string> parts;
    for (const auto& [e, c] : terms_) {
        std::string t = coeff_token(c, e > 0);
        append_var_power(t, var_, e);
        parts.push_back(t);
    }
    return join_terms(parts);
}

// ----------------------------------------------------------------- BiPoly

BiPoly BiPoly::constant(const QSqrt2& c, std::string var1, std::string var2) {
    BiPoly p(std::move(var1), std::move(var2));
    p.add_term(0, 0, c);
    return p;
}

BiPoly BiPoly::monomial(const QSqrt2& c, unsigned e1, unsigned e2,
                        std::string var1, std::string var2) {
    BiPoly p(std::move(var1), std::move(var2));
    p.add_term(e1, e2, c);
    return p;
}

std::optional<unsigned> BiPoly::degree_in_first() const {
    std::optional<unsigned> d;
    for (const auto& [e, c] : terms_)
        if (!d || e.first > *d) d = e.first;
    return d;
}

std::optional<unsigned> BiPoly::degree_in_second() const {
    std::optional<unsigned> d;
    for (const auto& [e, c] : terms_)
        if (!d || e.second > *d) d = e.second;
    return d;
}

QSqrt2 BiPoly::coeff(unsigned e1, unsigned e2) const {
    auto it = terms_.find({e1, e2});
    return it == terms_.end() ? QSqrt2(0) : it->second;
}

void BiPoly::add_term(unsigned e1, unsigned e2, const QSqrt2& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(Exp{e1, e2}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void BiPoly::require_same_vars(const BiPoly& o) const {
    if (var1_ != o.var1_ || var2_ != o.var2_)
        throw DomainError("polynomial variable mismatch: (" + var1_ + "," + var2_ +
                          ") vs (" + o.var1_ + "," + o.var2_ + ")");
}

BiPoly BiPoly::operator-() const {
    BiPoly r(var1_, var2_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    require_same_vars(o);
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    a.require_same_vars(b);
    BiPoly r(a.var1_, a.var2_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

BiPoly BiPoly::scaled(const QSqrt2& c) const {
    BiPoly r(var1_, var2_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly r = BiPoly::constant(QSqrt2(1), var1_, var2_);
    BiPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

QSqrt2 BiPoly::eval(const QSqrt2& v1, const QSqrt2& v2) const {
    QSqrt2 acc(0);
    for (const auto& [e, c] : terms_) acc += c * v1.pow(e.first) * v2.pow(e.second);
    return acc;
}

BiPoly BiPoly::substitute(const BiPoly& for_var1, const BiPoly& for_var2) const {
    for_var1.require_same_vars(for_var2);
    const std::string& rv1 = for_var1.var1();
    const std::string& rv2 = for_var1.var2();
    // Cache the needed powers of both replacement polynomials.
    unsigned max1 = 0, max2 = 0;
    for (const auto& [e, c] : terms_) {
        max1 = std::max(max1, e.first);
        max2 = std::max(max2, e.second);
    }
    std::vector<BiPoly> pow1{BiPoly::constant(QSqrt2(1), rv1, rv2)};
    std::vector<BiPoly> pow2{BiPoly::constant(QSqrt2(1), rv1, rv2)};
    for (unsigned i = 1; i <= max1; ++i) pow1.push_back(pow1.back() * for_var1);
    for (unsigned j = 1; j <= max2; ++j) pow2.push_back(pow2.back() * for_var2);
    BiPoly r(rv1, rv2);
    for (const auto& [e, c] : terms_) r += (pow1[e.first] * pow2[e.second]).scaled(c);
    return r;
}

UniPoly BiPoly::eval_first(const QSqrt2& v1) const {
    UniPoly r(var2_);
    for (const auto& [e, c] : terms_) r.add_term(e.second, c * v1.pow(e.first));
    return r;
}

UniPoly BiPoly::eval_second(const QSqrt2& v2) const {
    UniPoly r(var1_);
    for (const auto& [e, c] : terms_) r.add_term(e.first, c * v2.pow(e.second));
    return r;
}

UniPoly BiPoly::diagonal(const std::string& diag_var) const {
    UniPoly r(diag_var);
    for (const auto& [e, c] : terms_) r.add_term(e.first + e.second, c);
    return r;
}

BiPoly BiPoly::coeff_of_second(unsigned j) const {
    BiPoly r(var1_, var2_);
    for (const auto& [e, c] : terms_)
        if (e.second == j) r.add_term(e.first, 0, c);
    return r;
}

std::string BiPoly::str() const {
    std::vector<std::string> parts;
    for (const auto& [e, c] : terms_) {
        std::string t = coeff_token(c, e.first > 0 || e.second > 0);
        append_var_power(t, var1_, e.first);
        append_var_power(t, var2_, e.second);
        parts.push_back(t);
    }
    return join_terms(parts);
}

} // namespace interlace
