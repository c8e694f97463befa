#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "wavemaps/rational.hpp"

namespace wavemaps {

/// The fixed variable universe of the proof. Certificates only ever mention
/// lambda (spectral parameter), n and k (shifted recurrence indices),
/// t (imaginary-axis coordinate) and u = t^2.
enum class Var : int { lambda = 0, n = 1, k = 2, t = 3, u = 4 };
inline constexpr int kNumVars = 5;
const char* var_name(Var v);

using Monomial = std::array<std::uint32_t, kNumVars>;

/// Sparse multivariate polynomial over Rational. No zero coefficients are
/// stored; terms are kept in canonical (lexicographic exponent) order.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    MultiPoly() = default;
    explicit MultiPoly(const Rational& c);
    explicit MultiPoly(long c) : MultiPoly(Rational(c)) {}

    static MultiPoly variable(Var v, std::uint32_t exp = 1);
    static MultiPoly monomial(const Rational& c, const Monomial& m);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }
    std::uint32_t degree(Var v) const;
    bool depends_on(Var v) const { return degree(v) > 0; }
    std::vector<Var> variables() const;

    Rational coeff(const Monomial& m) const;
    Rational constant_term() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(unsigned e) const;

    /// View as a univariate polynomial in `v`: exponent -> coefficient poly.
    std::map<std::uint32_t, MultiPoly> as_poly_in(Var v) const;

    /// Exact evaluation of one variable at a rational point.
    MultiPoly eval_var(Var v, const Rational& x) const;

    /// Full evaluation; T is Rational, double or std::complex<double>.
    template <typename T>
    T evaluate(const std::array<T, kNumVars>& x) const {
        T acc = T(0);
        for (const auto& [mono, c] : terms_) {
            T term;
            if constexpr (std::is_same_v<T, Rational>) {
                term = c;
            } else {
                term = T(c.to_double());
            }
            for (int i = 0; i < kNumVars; ++i)
                for (std::uint32_t e = 0; e < mono[i]; ++e) term *= x[i];
            acc += term;
        }
        return acc;
    }

    /// Positive rational c such that (*this)/c has coprime integer
    /// coefficients; zero for the zero polynomial.
    Rational content() const;

    void add_term(const Monomial& m, const Rational& c);

    /// Debug dump: one monomial per line, `coeff * lambda^a n^b k^c u^d`,
    /// sorted by exponent vector.
    std::string dump() const;
    std::string str_inline() const;

private:
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// p with each shifted variable v replaced by v + offset (offsets >= 0).
MultiPoly shift_vars(const MultiPoly& p, const std::vector<std::pair<Var, std::uint32_t>>& shifts);

/// Q(u, ...) with Q(t^2, ...) == |p(it, ...)|^2 identically. Splits p by the
/// parity of the lambda exponent; the result is lambda- and t-free.
/// Requires p free of t and u.
MultiPoly mod_square_imaginary(const MultiPoly& p);

}  // namespace wavemaps
