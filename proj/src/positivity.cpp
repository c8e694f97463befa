#include "wavemaps/positivity.hpp"

#include <sstream>

namespace wavemaps {

namespace {

std::string monomial_str(const Monomial& m, const Rational& c) {
    std::ostringstream os;
    os << c.str();
    for (int i = 0; i < kNumVars; ++i)
        if (m[i] > 0) os << " * " << var_name(static_cast<Var>(i)) << "^" << m[i];
    return os.str();
}

}  // namespace

Certificate coeffs_nonneg(const MultiPoly& p) {
    Certificate cert;
    cert.method = "positivity_after_shift";
    cert.pass = true;
    for (const auto& [m, c] : p.terms()) {
        if (c.sign() < 0) {
            cert.pass = false;
            cert.witness.push_back("negative monomial: " + monomial_str(m, c));
        }
    }
    return cert;
}

Certificate coeffs_nonneg_positive_const(const MultiPoly& p) {
    Certificate cert = coeffs_nonneg(p);
    if (p.constant_term().sign() <= 0) {
        cert.pass = false;
        cert.witness.push_back("constant term not positive: " + p.constant_term().str());
    }
    return cert;
}

std::vector<RationalFunction> routh_first_column(const MultiPoly& p) {
    auto by_lambda = p.as_poly_in(Var::lambda);
    const std::uint32_t deg = by_lambda.empty() ? 0 : by_lambda.rbegin()->first;
    // rows of the Routh array, entries rational functions in k
    auto coeff_at = [&](std::uint32_t e) {
        auto it = by_lambda.find(e);
        return RationalFunction(it == by_lambda.end() ? MultiPoly(0) : it->second);
    };
    std::vector<std::vector<RationalFunction>> rows(2);
    for (std::uint32_t e = deg + 1; e-- > 0;) {
        // descending coefficients alternate between the first two rows
        rows[(deg - e) % 2].push_back(coeff_at(e));
    }
    if (rows[1].empty()) rows[1].push_back(RationalFunction(MultiPoly(0)));
    std::vector<RationalFunction> first_col{rows[0][0], rows[1][0]};
    while (first_col.size() < deg + 1) {
        const auto& r0 = rows[rows.size() - 2];
        const auto& r1 = rows[rows.size() - 1];
        if (r1[0].is_zero()) break;  // degenerate; caller reports
        std::vector<RationalFunction> next;
        const std::size_t width = std::max(r0.size(), r1.size());
        for (std::size_t j = 0; j + 1 < width + 1; ++j) {
            const RationalFunction a = j + 1 < r0.size() ? r0[j + 1] : RationalFunction(MultiPoly(0));
            const RationalFunction b = j + 1 < r1.size() ? r1[j + 1] : RationalFunction(MultiPoly(0));
            next.push_back((r1[0] * a - r0[0] * b) / r1[0]);
        }
        while (!next.empty() && next.back().is_zero()) next.pop_back();
        if (next.empty()) break;
        first_col.push_back(next[0]);
        rows.push_back(std::move(next));
    }
    return first_col;
}

Certificate hurwitz_stable(const MultiPoly& p, std::uint32_t k_shift) {
    Certificate cert;
    cert.method = "hurwitz";
    cert.pass = true;

    if (p.depends_on(Var::t) || p.depends_on(Var::u) || p.depends_on(Var::n)) {
        cert.pass = false;
        cert.witness.push_back("hurwitz_stable expects a polynomial in lambda and k only");
        return cert;
    }
    const std::uint32_t deg = p.degree(Var::lambda);
    auto first_col = routh_first_column(p);
    if (first_col.size() != deg + 1) {
        cert.pass = false;
        cert.witness.push_back("degenerate Routh table: first-column entry identically zero at row " +
                               std::to_string(first_col.size()));
        return cert;
    }
    const std::vector<std::pair<Var, std::uint32_t>> shift{{Var::k, k_shift}};
    for (std::size_t i = 0; i < first_col.size(); ++i) {
        const auto& e = first_col[i];
        // e > 0 on the shifted domain iff num*den, shifted, has nonnegative
        // coefficients and positive constant term.
        const MultiPoly prod = shift_vars(e.num() * e.den(), shift);
        Certificate pos = coeffs_nonneg_positive_const(prod);
        std::ostringstream os;
        os << "routh[" << i << "] = " << e.str() << (pos.pass ? "  [positive for k >= " : "  [NOT certified positive for k >= ")
           << k_shift << "]";
        cert.witness.push_back(os.str());
        if (!pos.pass) {
            cert.pass = false;
            for (const auto& w : pos.witness) cert.witness.push_back("  " + w);
        }
    }
    return cert;
}

}  // namespace wavemaps
