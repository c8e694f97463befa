#include "wavemaps/ratfunc.hpp"

#include <stdexcept>

namespace wavemaps {

namespace {

// Joint content of num and den, signed so the denominator's leading
// (lexicographically largest) coefficient comes out positive.
Rational joint_normalizer(const MultiPoly& num, const MultiPoly& den) {
    mpz_class g = 0, l = 1;
    for (const auto& [m, c] : num.terms()) {
        g = gcd(g, c.numerator());
        l = lcm(l, c.denominator());
    }
    for (const auto& [m, c] : den.terms()) {
        g = gcd(g, c.numerator());
        l = lcm(l, c.denominator());
    }
    if (g == 0) g = 1;
    Rational c(mpq_class(g) / mpq_class(l));
    if (den.terms().rbegin()->second.sign() < 0) c = -c;
    return c;
}

}  // namespace

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den, std::string domain_note)
    : num_(std::move(num)), den_(std::move(den)), domain_note_(std::move(domain_note)) {
    if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator polynomial");
    const Rational c = joint_normalizer(num_, den_);
    const Rational inv = Rational(1) / c;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction out = *this;
    out.num_ = -out.num_;
    return out;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.num_.is_zero()) throw std::domain_error("RationalFunction: division by zero function");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

bool RationalFunction::equals(const RationalFunction& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

std::string RationalFunction::str() const {
    return "(" + num_.str_inline() + ") / (" + den_.str_inline() + ")";
}

RationalFunction shift_vars(const RationalFunction& f,
                            const std::vector<std::pair<Var, std::uint32_t>>& shifts) {
    return {shift_vars(f.num(), shifts), shift_vars(f.den(), shifts), f.domain_note()};
}

RationalFunction substitute(const MultiPoly& p, Var var, const RationalFunction& expr) {
    // Horner over the grouped powers of var: denominator is expr.den()^deg.
    auto grouped = p.as_poly_in(var);
    if (grouped.empty()) return RationalFunction(MultiPoly(0));
    const std::uint32_t deg = grouped.rbegin()->first;
    RationalFunction acc(MultiPoly(0));
    for (std::uint32_t e = deg + 1; e-- > 0;) {
        acc = acc * expr;
        auto it = grouped.find(e);
        if (it != grouped.end()) acc = acc + RationalFunction(it->second);
    }
    return acc;
}

}  // namespace wavemaps
