#include "wavemaps/recurrence.hpp"

#include <algorithm>
#include <stdexcept>

namespace wavemaps::recurrence {

namespace {

MultiPoly L() { return MultiPoly::variable(Var::lambda); }
MultiPoly N() { return MultiPoly::variable(Var::n); }
MultiPoly K() { return MultiPoly::variable(Var::k); }
MultiPoly C(long c) { return MultiPoly(Rational(c)); }

RationalFunction rf(long num, long den) {
    return RationalFunction(MultiPoly(Rational(num, den)));
}

}  // namespace

const char* case_name(Case c) {
    switch (c) {
        case Case::general: return "general";
        case Case::k2: return "k2";
        case Case::d3: return "d3";
    }
    return "?";
}

std::optional<Case> case_from_name(const std::string& s) {
    if (s == "general") return Case::general;
    if (s == "k2") return Case::k2;
    if (s == "d3") return Case::d3;
    return std::nullopt;
}

const CaseSpec& case_spec(Case c) {
    static const CaseSpec general = [] {
        CaseSpec s;
        s.id = Case::general;
        s.name = "general";
        s.n0 = 2;
        s.n_shift = 2;
        s.k_shift = 3;
        s.k_shift_dichotomy = 2;
        s.fixed_k = std::nullopt;
        s.bound_delta = rf(1, 2);
        // 5/12 - 1/k = (5k-12)/(12k),  1/12 + 1/k = (k+12)/(12k)
        s.bound_eps = RationalFunction(K().scaled(Rational(5)) - C(12), K().scaled(Rational(12)));
        s.bound_C = RationalFunction(K() + C(12), K().scaled(Rational(12)));
        s.notes = "k >= 3 symbolic";
        return s;
    }();
    static const CaseSpec k2 = [] {
        CaseSpec s;
        s.id = Case::k2;
        s.name = "k2";
        s.n0 = 4;
        s.n_shift = 4;
        s.k_shift = 0;
        s.k_shift_dichotomy = 0;
        s.fixed_k = 2;
        s.bound_delta = rf(1, 3);
        s.bound_eps = rf(1, 18);
        s.bound_C = rf(11, 20);
        s.notes = "quasi-solution: general formula at k=2";
        return s;
    }();
    static const CaseSpec d3 = [] {
        CaseSpec s;
        s.id = Case::d3;
        s.name = "d3";
        s.n0 = 1;
        s.n_shift = 1;
        s.k_shift = 0;
        s.k_shift_dichotomy = 0;
        s.fixed_k = std::nullopt;
        s.bound_delta = rf(1, 3);
        s.bound_eps = rf(1, 12);
        s.bound_C = rf(1, 2);
        s.notes = "Moebius-transformed equation, k absent";
        return s;
    }();
    switch (c) {
        case Case::general: return general;
        case Case::k2: return k2;
        case Case::d3: return d3;
    }
    throw std::logic_error("unreachable");
}

MultiPoly ThreeTermCoeffs::den() const {
    MultiPoly out(1);
    for (const auto& f : den_factors) out = out * f;
    return out;
}

MultiPoly QuasiSolution::den() const {
    MultiPoly out(1);
    for (const auto& f : den_factors) out = out * f;
    return out;
}

namespace {

ThreeTermCoeffs make_general_coeffs() {
    ThreeTermCoeffs t;
    // A_n = [k l^2 + k(4n+9) l + 4kn^2 + 16nk - 4n^2 + 14k - 16n - 16] / [2k(n+2)(2n+k+8)]
    t.A_num = K() * L() * L() + K() * (N().scaled(Rational(4)) + C(9)) * L() +
              K() * N() * N() * C(4) + N() * K().scaled(Rational(16)) - N() * N() * C(4) +
              K().scaled(Rational(14)) - N().scaled(Rational(16)) - C(16);
    // B_n = (l+2n+3)(l+2n+2) / same
    t.B_num = (L() + N().scaled(Rational(2)) + C(3)) * (L() + N().scaled(Rational(2)) + C(2));
    t.den_factors = {K().scaled(Rational(2)), N() + C(2), N().scaled(Rational(2)) + K() + C(8)};
    return t;
}

ThreeTermCoeffs make_d3_coeffs() {
    ThreeTermCoeffs t;
    // A_n = (12n^2 + (8l+56)n + l^2 + 20l + 56) / (8n^2 + 52n + 72)
    t.A_num = N() * N() * C(12) + (L().scaled(Rational(8)) + C(56)) * N() + L() * L() +
              L().scaled(Rational(20)) + C(56);
    // B_n = -(4n^2 + (4l+12)n + l^2 + 6l + 8) / same
    t.B_num = -(N() * N() * C(4) + (L().scaled(Rational(4)) + C(12)) * N() + L() * L() +
                L().scaled(Rational(6)) + C(8));
    // 8n^2 + 52n + 72 = 4(n+2)(2n+9)
    t.den_factors = {C(4), N() + C(2), N().scaled(Rational(2)) + C(9)};
    return t;
}

ThreeTermCoeffs specialize_k(const ThreeTermCoeffs& g, long k) {
    ThreeTermCoeffs t;
    t.A_num = g.A_num.eval_var(Var::k, Rational(k));
    t.B_num = g.B_num.eval_var(Var::k, Rational(k));
    for (const auto& f : g.den_factors) t.den_factors.push_back(f.eval_var(Var::k, Rational(k)));
    return t;
}

QuasiSolution make_general_quasi() {
    // (1/2) l^2 / q1 + 2 l / q2 + (2n+3)/q2   with
    // q1 = 2n^2 + (k+8)n + k + 5, q2 = 2n + k + 6; common denominator 2 q1 q2.
    QuasiSolution q;
    MultiPoly q1 = N() * N() * C(2) + (K() + C(8)) * N() + K() + C(5);
    MultiPoly q2 = N().scaled(Rational(2)) + K() + C(6);
    q.num = L() * L() * q2 + L().scaled(Rational(4)) * q1 +
            (N().scaled(Rational(4)) + C(6)) * q1;
    q.den_factors = {C(2), q1, q2};
    return q;
}

QuasiSolution make_d3_quasi() {
    // l^2/q1 + 5l/q2 + (5n+6)/q3, q1 = 8n^2+33n+28, q2 = 5n+16, q3 = 5n+13.
    QuasiSolution q;
    MultiPoly q1 = N() * N() * C(8) + N().scaled(Rational(33)) + C(28);
    MultiPoly q2 = N().scaled(Rational(5)) + C(16);
    MultiPoly q3 = N().scaled(Rational(5)) + C(13);
    q.num = L() * L() * q2 * q3 + L().scaled(Rational(5)) * q1 * q3 +
            (N().scaled(Rational(5)) + C(6)) * q1 * q2;
    q.den_factors = {q1, q2, q3};
    return q;
}

QuasiSolution specialize_quasi_k(const QuasiSolution& g, long k) {
    QuasiSolution q;
    q.num = g.num.eval_var(Var::k, Rational(k));
    for (const auto& f : g.den_factors) q.den_factors.push_back(f.eval_var(Var::k, Rational(k)));
    return q;
}

}  // namespace

const ThreeTermCoeffs& coeffs(Case c) {
    static const ThreeTermCoeffs general = make_general_coeffs();
    static const ThreeTermCoeffs k2 = specialize_k(general, 2);
    static const ThreeTermCoeffs d3 = make_d3_coeffs();
    switch (c) {
        case Case::general: return general;
        case Case::k2: return k2;
        case Case::d3: return d3;
    }
    throw std::logic_error("unreachable");
}

const QuasiSolution& quasi(Case c) {
    static const QuasiSolution general = make_general_quasi();
    static const QuasiSolution k2 = specialize_quasi_k(general, 2);
    static const QuasiSolution d3 = make_d3_quasi();
    switch (c) {
        case Case::general: return general;
        case Case::k2: return k2;
        case Case::d3: return d3;
    }
    throw std::logic_error("unreachable");
}

QuasiSolution quasi_shifted_n(Case c, std::uint32_t offset) {
    const QuasiSolution& q = quasi(c);
    QuasiSolution out;
    const std::vector<std::pair<Var, std::uint32_t>> sh{{Var::n, offset}};
    out.num = shift_vars(q.num, sh);
    for (const auto& f : q.den_factors) out.den_factors.push_back(shift_vars(f, sh));
    return out;
}

Cplx eval_A(Case c, double n, Cplx lambda, double k) {
    if (c == Case::d3) {
        return (12.0 * n * n + (8.0 * lambda + 56.0) * n + lambda * lambda + 20.0 * lambda + 56.0) /
               (8.0 * n * n + 52.0 * n + 72.0);
    }
    if (c == Case::k2) k = 2.0;
    return (k * lambda * lambda + k * (4.0 * n + 9.0) * lambda + 4.0 * k * n * n + 16.0 * n * k -
            4.0 * n * n + 14.0 * k - 16.0 * n - 16.0) /
           (2.0 * k * (n + 2.0) * (2.0 * n + k + 8.0));
}

Cplx eval_B(Case c, double n, Cplx lambda, double k) {
    if (c == Case::d3) {
        return -(4.0 * n * n + (4.0 * lambda + 12.0) * n + lambda * lambda + 6.0 * lambda + 8.0) /
               (8.0 * n * n + 52.0 * n + 72.0);
    }
    if (c == Case::k2) k = 2.0;
    return (lambda + 2.0 * n + 3.0) * (lambda + 2.0 * n + 2.0) /
           (2.0 * k * (n + 2.0) * (2.0 * n + k + 8.0));
}

Cplx eval_quasi(Case c, double n, Cplx lambda, double k) {
    if (c == Case::d3) {
        return lambda * lambda / (8.0 * n * n + 33.0 * n + 28.0) + 5.0 * lambda / (5.0 * n + 16.0) +
               (5.0 * n + 6.0) / (5.0 * n + 13.0);
    }
    if (c == Case::k2) k = 2.0;
    return 0.5 * lambda * lambda / (2.0 * n * n + (k + 8.0) * n + k + 5.0) +
           2.0 * lambda / (2.0 * n + k + 6.0) + (2.0 * n + 3.0) / (2.0 * n + k + 6.0);
}

namespace {

std::array<Rational, kNumVars> exact_point(long n, const Rational& lambda, long k) {
    return {lambda, Rational(n), Rational(k), Rational(0), Rational(0)};
}

}  // namespace

Rational eval_A_exact(Case c, long n, const Rational& lambda, long k) {
    const auto& t = coeffs(c);
    const auto x = exact_point(n, lambda, c == Case::k2 ? 2 : k);
    return t.A_num.evaluate(x) / t.den().evaluate(x);
}

Rational eval_B_exact(Case c, long n, const Rational& lambda, long k) {
    const auto& t = coeffs(c);
    const auto x = exact_point(n, lambda, c == Case::k2 ? 2 : k);
    return t.B_num.evaluate(x) / t.den().evaluate(x);
}

std::pair<Rational, Rational> characteristic_roots(Case c, long k) {
    if (c == Case::d3) return {Rational(1), Rational(1, 2)};
    if (c == Case::k2) k = 2;
    return {Rational(1), Rational(-1, k)};
}

std::vector<ProjectivePoint> ratio_seq(Case c, Cplx lambda, double k, int N) {
    std::vector<ProjectivePoint> out;
    out.reserve(N + 1);
    // (p : q) ~ (a_{n+1} : a_n), a_0 = 1, a_1 = A_{-1}
    Cplx p = eval_A(c, -1.0, lambda, k), q = 1.0;
    out.push_back({p, q});
    for (int n = 0; n < N; ++n) {
        const Cplx pn = eval_A(c, n, lambda, k) * p + eval_B(c, n, lambda, k) * q;
        q = p;
        p = pn;
        const double m = std::max(std::abs(p), std::abs(q));
        if (m > 1e100 || (m < 1e-100 && m > 0)) {
            p /= m;
            q /= m;
        }
        out.push_back({p, q});
    }
    return out;
}

std::vector<ExactProjectivePoint> ratio_seq_exact(Case c, const Rational& lambda, long k, int N) {
    std::vector<ExactProjectivePoint> out;
    out.reserve(N + 1);
    auto normalize = [](Rational& p, Rational& q) {
        // keep the pair as coprime integers
        const mpz_class l = lcm(p.denominator(), q.denominator());
        p *= Rational(mpq_class(l));
        q *= Rational(mpq_class(l));
        const mpz_class g = gcd(p.numerator(), q.numerator());
        if (g > 1) {
            const Rational ginv(mpq_class(1) / mpq_class(g));
            p *= ginv;
            q *= ginv;
        }
    };
    Rational p = eval_A_exact(c, -1, lambda, k), q(1);
    normalize(p, q);
    out.push_back({p, q});
    for (int n = 0; n < N; ++n) {
        Rational pn = eval_A_exact(c, n, lambda, k) * p + eval_B_exact(c, n, lambda, k) * q;
        q = p;
        p = pn;
        normalize(p, q);
        out.push_back({p, q});
    }
    return out;
}

RationalFunction ratio_symbolic(Case c, int m) {
    const auto& t = coeffs(c);
    auto at_n = [&](const MultiPoly& p, long n) { return p.eval_var(Var::n, Rational(n)); };
    // r_0 = A_{-1}
    MultiPoly num = at_n(t.A_num, -1);
    MultiPoly den = at_n(t.den(), -1);
    for (int j = 0; j < m; ++j) {
        // r_{j+1} = A_j + B_j / r_j = (A_num r.num + B_num r.den) / (den r.num)
        MultiPoly nn = at_n(t.A_num, j) * num + at_n(t.B_num, j) * den;
        den = at_n(t.den(), j) * num;
        num = std::move(nn);
    }
    return {num, den, "denominator certified Hurwitz on the case domain"};
}

namespace {

// multiset difference on syntactically equal polynomial factors
void cancel_common_factors(std::vector<MultiPoly>& a, std::vector<MultiPoly>& b) {
    for (auto ia = a.begin(); ia != a.end();) {
        auto ib = std::find_if(b.begin(), b.end(), [&](const MultiPoly& f) { return f == *ia; });
        if (ib != b.end() && !ia->is_constant()) {
            ia = a.erase(ia);
            b.erase(ib);
        } else {
            ++ia;
        }
    }
}

MultiPoly product(const std::vector<MultiPoly>& fs) {
    MultiPoly out(1);
    for (const auto& f : fs) out = out * f;
    return out;
}

}  // namespace

DerivedQuantities derived_quantities(Case c) {
    const auto& spec = case_spec(c);
    const auto& t = coeffs(c);
    const QuasiSolution qn = quasi(c);
    const QuasiSolution qn1 = quasi_shifted_n(c, 1);

    DerivedQuantities out;

    // C_n = B_n / (q_n q_{n+1}): numerator B_num * den(q_n) * den(q_{n+1}),
    // denominator den_AB * num(q_n) * num(q_{n+1}), shared factors cancelled
    // (B_n's denominator and q_{n+1}'s share 2n+k+8 in the general case).
    {
        std::vector<MultiPoly> numf = {t.B_num};
        numf.insert(numf.end(), qn.den_factors.begin(), qn.den_factors.end());
        numf.insert(numf.end(), qn1.den_factors.begin(), qn1.den_factors.end());
        std::vector<MultiPoly> denf = t.den_factors;
        denf.push_back(qn.num);
        denf.push_back(qn1.num);
        cancel_common_factors(numf, denf);
        out.C_n = RationalFunction(product(numf), product(denf),
                                   "denominators positive and quasi numerators Hurwitz on the case domain");
    }

    // eps_n = (A_n q_n + B_n)/(q_n q_{n+1}) - 1
    //       = [A_num num(q_n) den(q_{n+1}) + B_num den(q_n) den(q_{n+1})
    //          - den_AB num(q_n) num(q_{n+1})] / [den_AB num(q_n) num(q_{n+1})]
    {
        MultiPoly den_ab = t.den();
        MultiPoly num = t.A_num * qn.num * qn1.den() + t.B_num * qn.den() * qn1.den() -
                        den_ab * qn.num * qn1.num;
        MultiPoly den = den_ab * qn.num * qn1.num;
        out.eps_n = RationalFunction(std::move(num), std::move(den),
                                     "same nonvanishing domain as C_n");
    }

    // delta_{n0} = r_{n0}/q_{n0} - 1
    {
        const RationalFunction r = ratio_symbolic(c, spec.n0);
        const MultiPoly qnum = qn.num.eval_var(Var::n, Rational(spec.n0));
        const MultiPoly qden = qn.den().eval_var(Var::n, Rational(spec.n0));
        MultiPoly num = r.num() * qden - qnum * r.den();
        MultiPoly den = qnum * r.den();
        out.delta_start = RationalFunction(std::move(num), std::move(den),
                                           "r_{n0} denominator Hurwitz, quasi numerator Hurwitz");
    }
    return out;
}

HeunForm heun_form(Case c) {
    HeunForm h;
    if (c == Case::d3) {
        // 4z(z-1)(z-2) w'' + [(4l+16)z^2 - (8l+44)z + 28] w'
        //   + [(l+4)(l+2) z - (l^2+12l+12)] w = 0
        h.P2 = {MultiPoly(0), C(8), C(-12), C(4)};
        h.P1 = {C(28), -(L().scaled(Rational(8)) + C(44)), L().scaled(Rational(4)) + C(16)};
        h.P0 = {-(L() * L() + L().scaled(Rational(12)) + C(12)),
                (L() + C(4)) * (L() + C(2))};
        h.finite_singular_points = {Rational(0), Rational(1), Rational(2)};
        h.variable = "z";
        h.note = "Moebius z = 2x/(x+1), y = (2-z)^{lambda/2+1} w";
        return h;
    }
    // 4x(x-1)(x+k) y'' + 2[(k+6)(x-1)(x+k) + (2l-k+1)x(x+k)] y'
    //   + [(l+3)(l+2)x + (k l^2 + 5k l + 2k - 4)] y = 0
    HeunForm g;
    MultiPoly k = c == Case::k2 ? C(2) : K();
    g.P2 = {MultiPoly(0), k.scaled(Rational(-4)), (k - C(1)).scaled(Rational(4)), C(4)};
    MultiPoly p1_2 = L().scaled(Rational(4)) + C(14);
    MultiPoly p1_1 = (k + C(6)) * (k - C(1)).scaled(Rational(2)) +
                     (L().scaled(Rational(2)) - k + C(1)) * k.scaled(Rational(2));
    MultiPoly p1_0 = -(k * (k + C(6))).scaled(Rational(2));
    g.P1 = {p1_0, p1_1, p1_2};
    g.P0 = {k * L() * L() + k.scaled(Rational(5)) * L() + k.scaled(Rational(2)) - C(4),
            (L() + C(3)) * (L() + C(2))};
    if (c == Case::k2) {
        g.finite_singular_points = {Rational(0), Rational(1), Rational(-2)};
    }
    g.variable = "x";
    g.note = "x = rho^2, u = x y(x)";
    return g;
}

HeunForm heun_reduce(int d) {
    if (d < 3) throw std::invalid_argument("heun_reduce: requires d >= 3");
    if (d == 3) return heun_form(Case::d3);
    const long k = d - 2;
    HeunForm g = heun_form(k == 2 ? Case::k2 : Case::general);
    if (k != 2) {
        for (auto* vec : {&g.P2, &g.P1, &g.P0})
            for (auto& p : *vec) p = p.eval_var(Var::k, Rational(k));
        g.finite_singular_points = {Rational(0), Rational(1), Rational(-k)};
    }
    return g;
}

std::pair<RationalFunction, RationalFunction> heun_indices_at_origin(const HeunForm& h) {
    // With P2[0] = 0 and P0[0] entering only at the next order, the indicial
    // polynomial at the origin is sigma*(P2[1]*(sigma-1) + P1[0]) = 0.
    // Roots: 0 and 1 - P1[0]/P2[1].
    if (!h.P2.empty() && !h.P2[0].is_zero())
        throw std::invalid_argument("heun_indices_at_origin: origin is not singular");
    const MultiPoly& a = h.P2[1];
    const MultiPoly& b = h.P1[0];
    return {RationalFunction(MultiPoly(0)), RationalFunction(a - b, a)};
}

RecurrenceIdentity three_term_from_heun(const HeunForm& h) {
    // Collect the coefficient of x^{n+1} after inserting sum_j a_j x^j:
    //   x^i y''  -> a_{n+3-i} (n+3-i)(n+2-i)
    //   x^i y'   -> a_{n+2-i} (n+2-i)
    //   x^i y    -> a_{n+1-i}
    // Only a_{n+2}, a_{n+1}, a_n appear for the Heun forms used here.
    RecurrenceIdentity id;
    auto nn = [&](long off) { return N() + C(off); };  // n + off as MultiPoly
    auto add = [&](MultiPoly& dst, const MultiPoly& c) { dst += c; };
    auto contribute = [&](const std::vector<MultiPoly>& P, int order) {
        for (std::size_t i = 0; i < P.size(); ++i) {
            if (P[i].is_zero()) continue;
            // target index of a_j: j = n+1 - i + order, order = 2 for y'', etc.
            const long j_off = 1 - static_cast<long>(i) + order;
            MultiPoly weight(1);
            if (order == 2) weight = nn(j_off) * nn(j_off - 1);
            if (order == 1) weight = nn(j_off);
            MultiPoly contrib = P[i] * weight;
            if (j_off == 2) add(id.c2, contrib);
            else if (j_off == 1) add(id.c1, contrib);
            else if (j_off == 0) add(id.c0, contrib);
            else if (!contrib.is_zero())
                throw std::logic_error("three_term_from_heun: unexpected recurrence depth");
        }
    };
    contribute(h.P2, 2);
    contribute(h.P1, 1);
    contribute(h.P0, 0);
    return id;
}

std::optional<Rational> mobius_z(const Rational& x) {
    if (x == Rational(-1)) return std::nullopt;  // sent to infinity
    return Rational(2) * x / (x + Rational(1));
}

}  // namespace wavemaps::recurrence
