#pragma once

#include <string>

#include "wavemaps/multipoly.hpp"

namespace wavemaps {

/// Quotient of two MultiPoly. Always normalized so that numerator and
/// denominator jointly carry coprime integer coefficients and the
/// denominator's leading (lexicographically largest) coefficient is positive.
/// Reduction is by integer content only; no polynomial gcd is taken.
class RationalFunction {
public:
    RationalFunction() : num_(MultiPoly(0)), den_(MultiPoly(1)) {}
    RationalFunction(MultiPoly num, MultiPoly den, std::string domain_note = "");
    explicit RationalFunction(const MultiPoly& p) : RationalFunction(p, MultiPoly(1)) {}
    explicit RationalFunction(const Rational& c) : RationalFunction(MultiPoly(c), MultiPoly(1)) {}

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const std::string& domain_note() const { return domain_note_; }
    void set_domain_note(std::string note) { domain_note_ = std::move(note); }

    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

    /// Exact equality as rational functions: num*b.den == b.num*den.
    bool equals(const RationalFunction& o) const;

    template <typename T>
    T evaluate(const std::array<T, kNumVars>& x) const {
        return num_.evaluate(x) / den_.evaluate(x);
    }

    std::string str() const;

private:
    MultiPoly num_, den_;
    std::string domain_note_;
};

RationalFunction shift_vars(const RationalFunction& f,
                            const std::vector<std::pair<Var, std::uint32_t>>& shifts);

/// Exact composition p[var := expr]; the denominator is a power of expr's.
RationalFunction substitute(const MultiPoly& p, Var var, const RationalFunction& expr);

}  // namespace wavemaps
