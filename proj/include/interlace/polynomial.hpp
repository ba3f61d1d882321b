#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "interlace/qsqrt2.hpp"

namespace interlace {

// Sparse univariate polynomial over Q(sqrt2). Terms are kept in descending
// exponent order (the canonical serialization order) and never store zero
// coefficients. The zero polynomial has no terms and no degree.
class UniPoly {
public:
    using TermMap = std::map<unsigned, QSqrt2, std::greater<unsigned>>;

    explicit UniPoly(std::string var = "x") : var_(std::move(var)) {}

    static UniPoly constant(const QSqrt2& c, std::string var = "x");
    static UniPoly monomial(const QSqrt2& c, unsigned e, std::string var = "x");

    const std::string& var() const { return var_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::optional<unsigned> degree() const;
    QSqrt2 coeff(unsigned e) const;
    QSqrt2 leading_coeff() const;

    void add_term(unsigned e, const QSqrt2& c);

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const QSqrt2& c) const;
    UniPoly pow(unsigned e) const;

    QSqrt2 eval(const QSqrt2& point) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.var_ == b.var_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    std::string str() const;

private:
    TermMap terms_;
    std::string var_;
};

// Sparse bivariate polynomial over Q(sqrt2) with named variables, e.g.
// (u,x) for P-form polynomials and (x,y) for q-form ones. Term order is
// descending lexicographic on the exponent pair.
class BiPoly {
public:
    using Exp = std::pair<unsigned, unsigned>;
    using TermMap = std::map<Exp, QSqrt2, std::greater<Exp>>;

    explicit BiPoly(std::string var1 = "u", std::string var2 = "x")
        : var1_(std::move(var1)), var2_(std::move(var2)) {}

    static BiPoly constant(const QSqrt2& c, std::string var1 = "u", std::string var2 = "x");
    static BiPoly monomial(const QSqrt2& c, unsigned e1, unsigned e2,
                           std::string var1 = "u", std::string var2 = "x");

    const std::string& var1() const { return var1_; }
    const std::string& var2() const { return var2_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::optional<unsigned> degree_in_first() const;
    std::optional<unsigned> degree_in_second() const;
    QSqrt2 coeff(unsigned e1, unsigned e2) const;

    void add_term(unsigned e1, unsigned e2, const QSqrt2& c);

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly scaled(const QSqrt2& c) const;
    BiPoly pow(unsigned e) const;

    QSqrt2 eval(const QSqrt2& v1, const QSqrt2& v2) const;

    // Formal substitution: replaces the two variables by the given
    // polynomials (which fix the variable names of the result).
    BiPoly substitute(const BiPoly& for_var1, const BiPoly& for_var2) const;

    // Restrictions to one variable.
    UniPoly eval_first(const QSqrt2& v1) const;  // polynomial in var2
    UniPoly eval_second(const QSqrt2& v2) const; // polynomial in var1

    // p(t,t): both variables replaced by a single one named diag_var.
    UniPoly diagonal(const std::string& diag_var) const;

    // The coefficient of var2^j, as a polynomial in var1 alone.
    BiPoly coeff_of_second(unsigned j) const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        return a.var1_ == b.var1_ && a.var2_ == b.var2_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

    std::string str() const;

private:
    void require_same_vars(const BiPoly& o) const;

    TermMap terms_;
    std::string var1_, var2_;
};

inline QSqrt2 poly_eval_bi(const BiPoly& p, const QSqrt2& v1, const QSqrt2& v2) {
    return p.eval(v1, v2);
}

} // namespace interlace
