#include "wavemaps/multipoly.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace wavemaps {

const char* var_name(Var v) {
    switch (v) {
        case Var::lambda: return "lambda";
        case Var::n: return "n";
        case Var::k: return "k";
        case Var::t: return "t";
        case Var::u: return "u";
    }
    return "?";
}

MultiPoly::MultiPoly(const Rational& c) {
    if (!c.is_zero()) terms_[Monomial{}] = c;
}

MultiPoly MultiPoly::variable(Var v, std::uint32_t exp) {
    MultiPoly p;
    Monomial m{};
    m[static_cast<int>(v)] = exp;
    p.terms_[m] = Rational(1);
    return p;
}

MultiPoly MultiPoly::monomial(const Rational& c, const Monomial& m) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_[m] = c;
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

std::uint32_t MultiPoly::degree(Var v) const {
    std::uint32_t d = 0;
    const int i = static_cast<int>(v);
    for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
    return d;
}

std::vector<Var> MultiPoly::variables() const {
    std::vector<Var> out;
    for (int i = 0; i < kNumVars; ++i)
        if (degree(static_cast<Var>(i)) > 0) out.push_back(static_cast<Var>(i));
    return out;
}

Rational MultiPoly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coeff(Monomial{}); }

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.terms_[m] = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            for (int i = 0; i < kNumVars; ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly out;
    if (c.is_zero()) return out;
    for (const auto& [m, q] : terms_) out.terms_[m] = q * c;
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly out(Rational(1));
    MultiPoly base = *this;
    while (e) {
        if (e & 1u) out = out * base;
        base = base * base;
        e >>= 1u;
    }
    return out;
}

std::map<std::uint32_t, MultiPoly> MultiPoly::as_poly_in(Var v) const {
    std::map<std::uint32_t, MultiPoly> out;
    const int i = static_cast<int>(v);
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        const std::uint32_t e = rest[i];
        rest[i] = 0;
        out[e].add_term(rest, c);
    }
    return out;
}

MultiPoly MultiPoly::eval_var(Var v, const Rational& x) const {
    MultiPoly out;
    const int i = static_cast<int>(v);
    for (const auto& [m, c] : terms_) {
        Monomial rest = m;
        const std::uint32_t e = rest[i];
        rest[i] = 0;
        out.add_term(rest, c * x.pow(e));
    }
    return out;
}

Rational MultiPoly::content() const {
    if (terms_.empty()) return Rational(0);
    mpz_class g = 0, l = 1;
    for (const auto& [m, c] : terms_) {
        g = gcd(g, c.numerator());
        l = lcm(l, c.denominator());
    }
    return Rational(mpq_class(g) / mpq_class(l));
}

std::string MultiPoly::dump() const {
    std::ostringstream os;
    for (const auto& [m, c] : terms_) {
        os << c.str();
        for (int i = 0; i < kNumVars; ++i) {
            if (m[i] > 0) os << " * " << var_name(static_cast<Var>(i)) << "^" << m[i];
        }
        os << "\n";
    }
    return os.str();
}

std::string MultiPoly::str_inline() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c.sign() >= 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        os << c.abs().str();
        for (int i = 0; i < kNumVars; ++i)
            if (m[i] > 0) {
                os << "*" << var_name(static_cast<Var>(i));
                if (m[i] > 1) os << "^" << m[i];
            }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str_inline(); }

MultiPoly shift_vars(const MultiPoly& p, const std::vector<std::pair<Var, std::uint32_t>>& shifts) {
    MultiPoly out = p;
    for (const auto& [v, off] : shifts) {
        if (off == 0) continue;
        const int i = static_cast<int>(v);
        const Rational c(static_cast<long>(off));
        MultiPoly shifted;
        for (const auto& [m, q] : out.terms()) {
            const std::uint32_t e = m[i];
            // (v + off)^e expanded with binomial coefficients
            Rational binom(1), cpow(1);
            std::vector<Rational> row(e + 1);
            for (std::uint32_t j = 0; j <= e; ++j) {
                row[e - j] = binom * cpow;
                binom *= Rational(static_cast<long>(e - j)) / Rational(static_cast<long>(j + 1));
                cpow *= c;
            }
            for (std::uint32_t j = 0; j <= e; ++j) {
                Monomial mm = m;
                mm[i] = j;
                shifted.add_term(mm, q * row[j]);
            }
        }
        out = shifted;
    }
    return out;
}

MultiPoly mod_square_imaginary(const MultiPoly& p) {
    if (p.depends_on(Var::t) || p.depends_on(Var::u))
        throw std::invalid_argument("mod_square_imaginary: input already contains t or u");
    // p(lambda) = E(lambda^2) + lambda*O(lambda^2); at lambda = it the even
    // part sees (it)^2 = -t^2, so |p(it)|^2 = E(-u)^2 + u*O(-u)^2 with u = t^2.
    MultiPoly even_part, odd_part;
    const int il = static_cast<int>(Var::lambda);
    const int iu = static_cast<int>(Var::u);
    for (const auto& [m, c] : p.terms()) {
        const std::uint32_t e = m[il];
        const std::uint32_t half = e / 2;
        Monomial mm = m;
        mm[il] = 0;
        mm[iu] = half;
        const Rational signed_c = (half % 2 == 1) ? -c : c;
        if (e % 2 == 0)
            even_part.add_term(mm, signed_c);
        else
            odd_part.add_term(mm, signed_c);
    }
    return even_part * even_part + MultiPoly::variable(Var::u) * odd_part * odd_part;
}

}  // namespace wavemaps
