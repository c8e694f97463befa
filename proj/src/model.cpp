#include "wavemaps/model.hpp"

#include <cmath>
#include <stdexcept>

namespace wavemaps::model {

namespace {

MultiPoly L() { return MultiPoly::variable(Var::lambda); }
RationalFunction rf_const(const Rational& q) { return RationalFunction(MultiPoly(q)); }

}  // namespace

ModeProblem::ModeProblem(int dim) : d(dim) {
    if (d < 3) throw std::invalid_argument("ModeProblem: d >= 3 required");
}

double profile_f(double rho, int d) { return 2.0 * std::atan(rho / std::sqrt(double(d - 2))); }

double profile_f_prime(double rho, int d) {
    const double s = std::sqrt(double(d - 2));
    return 2.0 * s / (double(d - 2) + rho * rho);
}

double g_of(double psi, int d) { return (d - 1) * std::sin(psi) * std::cos(psi); }
double g_prime_of(double psi, int d) { return (d - 1) * std::cos(2.0 * psi); }

double profile_ode_residual(double rho, int d) {
    // f'' = -2 rho f' / (d-2+rho^2) since f' = 2 sqrt(d-2)/(d-2+rho^2)
    const double fp = profile_f_prime(rho, d);
    const double fpp = -2.0 * rho * fp / (double(d - 2) + rho * rho);
    return (1.0 - rho * rho) * fpp + ((d - 1) / rho - 2.0 * rho) * fp -
           g_of(profile_f(rho, d), d) / (rho * rho);
}

TwoWays mode_potential(double rho, int d) {
    if (rho <= 0.0) throw std::domain_error("mode_potential: rho = 0 is singular (~ (d-1)/rho^2)");
    const double chain = g_prime_of(profile_f(rho, d), d) / (rho * rho);
    const double x = rho * rho;
    const double dm2 = d - 2;
    const double closed =
        (d - 1) / x * (x * x + (12.0 - 6.0 * d) * x + dm2 * dm2) / ((x + dm2) * (x + dm2));
    return {chain, closed};
}

double symmetry_mode_closed(double rho, int d) {
    return 2.0 * rho * std::sqrt(double(d - 2)) / (double(d - 2) + rho * rho);
}

TwoWays symmetry_mode(double rho, int d) {
    return {rho * profile_f_prime(rho, d), symmetry_mode_closed(rho, d)};
}

double symmetry_mode_derivative(double rho, int d) {
    const double dm2 = d - 2;
    return 2.0 * std::sqrt(dm2) * (dm2 - rho * rho) / ((dm2 + rho * rho) * (dm2 + rho * rho));
}

Certificate symmetry_mode_positive(int d) {
    Certificate cert;
    cert.method = "exact_arith";
    cert.lemma_id = "symmetry_mode_positive";
    if (d < 3) {
        cert.pass = false;
        cert.witness.push_back("d < 3");
        return cert;
    }
    // u_1 = 2 rho sqrt(d-2) / (d-2 + rho^2): for d >= 3 both the numerator
    // coefficient 2 sqrt(d-2) and every denominator coefficient are positive,
    // so u_1 > 0 wherever rho > 0.
    cert.pass = (d - 2) > 0;
    cert.witness.push_back("numerator factor d-2 = " + std::to_string(d - 2) + " > 0");
    cert.witness.push_back("denominator coefficients {d-2, 1} positive");
    return cert;
}

PotentialSet susy_chain(int d) {
    PotentialSet ps;
    ps.d = d;
    const double m = (d - 1) / 2.0;
    const double dm2 = d - 2;

    ps.V = [d](double rho) { return mode_potential(rho, d).closed_form; };
    ps.V1 = [d, m](double rho) {
        const double om = 1.0 - rho * rho;
        return mode_potential(rho, d).closed_form / om +
               (m - 1.0) * (rho * rho + m) / (rho * rho * om * om) - (2.0 * m - 1.0) / (om * om);
    };
    // v_1 = rho^{m+1} (1-rho^2)^{1-m/2} f'(rho); w = v_1'/v_1
    ps.v1 = [d, m, dm2](double rho) {
        return std::pow(rho, m + 1.0) * std::pow(1.0 - rho * rho, 1.0 - m / 2.0) *
               profile_f_prime(rho, d);
    };
    ps.w = [m, dm2](double rho) {
        return (m + 1.0) / rho - (2.0 - m) * rho / (1.0 - rho * rho) - 2.0 * rho / (dm2 + rho * rho);
    };
    auto wprime = [m, dm2](double rho) {
        const double om = 1.0 - rho * rho;
        return -(m + 1.0) / (rho * rho) - (2.0 - m) * (1.0 + rho * rho) / (om * om) -
               2.0 * (dm2 - rho * rho) / ((dm2 + rho * rho) * (dm2 + rho * rho));
    };
    ps.W = [w = ps.w, wprime](double rho) {
        const double om = 1.0 - rho * rho;
        return om * (w(rho) * w(rho) - wprime(rho)) + 4.0 * rho * w(rho);
    };
    ps.V_susy = [W = ps.W, m](double rho) {
        return W(rho) + m * (rho * rho - m + 1.0) / (rho * rho * (1.0 - rho * rho)) - 2.0;
    };
    ps.V_susy_closed = [dm2, d](double rho) {
        return -2.0 * dm2 / (rho * rho) * (rho * rho - d) / (rho * rho + dm2);
    };

    // verification grid, away from the endpoints
    for (int i = 1; i < 400; ++i) {
        const double rho = i / 400.0;
        if (rho < 1e-3 || rho > 1.0 - 1e-3) continue;
        ps.max_normal_form_residual = std::max(
            ps.max_normal_form_residual, std::abs(wprime(rho) + ps.w(rho) * ps.w(rho) - ps.V1(rho)));
        ps.max_susy_mismatch =
            std::max(ps.max_susy_mismatch, std::abs(ps.V_susy(rho) - ps.V_susy_closed(rho)));
        const double v = std::abs(ps.v1(rho));
        ps.v1_min_abs = (i == 1) ? v : std::min(ps.v1_min_abs, v);
    }
    if (ps.v1_min_abs == 0.0)
        throw std::runtime_error("susy_chain: v_1 vanishes inside (0,1); w undefined");
    return ps;
}

std::pair<RationalFunction, RationalFunction> frobenius_indices(ProblemKind p, Endpoint e, int d) {
    const Rational two(2);
    const Rational dm1(d - 1);
    const Rational m = dm1 / two;  // exact half-integer
    switch (p) {
        case ProblemKind::mode:
            if (e == Endpoint::origin) return {rf_const(Rational(1)), rf_const(-two * m)};
            // {0, m - lambda}
            return {rf_const(Rational(0)), RationalFunction(MultiPoly(m) - L())};
        case ProblemKind::susy:
            if (e == Endpoint::origin) return {rf_const(Rational(2)), rf_const(-two * m - Rational(1))};
            return {rf_const(Rational(0)), RationalFunction(MultiPoly(m) - L())};
        case ProblemKind::heun: {
            if (e != Endpoint::origin)
                throw std::invalid_argument("frobenius_indices: heun indices recorded at x = 0 only");
            const Rational k(d - 2);
            return {rf_const(Rational(0)), rf_const(Rational(-2) - k / two)};
        }
    }
    throw std::logic_error("unreachable");
}

RationalFunction indicial_residual(ProblemKind p, Endpoint e, int d, const RationalFunction& index) {
    // Indicial polynomial f(s) = s(s-1) + b0 s + c0 from the ODE local frame
    // rho^2 u'' + rho b(rho) u' + c(rho) u with the potential's Laurent data.
    const Rational dm1(d - 1);
    RationalFunction b0(MultiPoly(0)), c0(MultiPoly(0));
    if (e == Endpoint::origin) {
        b0 = rf_const(dm1);
        // rho^2 V -> d-1 (mode), rho^2 V~ -> -2d (susy)
        c0 = p == ProblemKind::mode ? rf_const(-dm1) : rf_const(Rational(2 * d));
        if (p == ProblemKind::susy) c0 = rf_const(Rational(-2) * Rational(d));
        if (p == ProblemKind::heun) {
            // s(P2[1](s-1) + P1[0]) with P2[1] = -4k, P1[0] = -2k(k+6):
            // normalized: s(s-1) + ((k+6)/2) s
            const Rational k(d - 2);
            b0 = rf_const((k + Rational(6)) / Rational(2));
            c0 = rf_const(Rational(0));
        }
    } else {
        // s = 1 - rho: 2 s(s-1) + (2 lambda + 3 - d) s = 0, normalized by 2
        if (p == ProblemKind::heun) throw std::invalid_argument("heun endpoint not modeled");
        b0 = RationalFunction(L() * MultiPoly(Rational(2)) + MultiPoly(Rational(3 - d)),
                              MultiPoly(Rational(2)));
        c0 = rf_const(Rational(0));
    }
    const RationalFunction s = index;
    return s * (s - RationalFunction(MultiPoly(Rational(1)))) + b0 * s + c0;
}

SampledFunction transform_solution(const SampledFunction& in, Cplx lambda, int d) {
    const double m = (d - 1) / 2.0;
    const double dm2 = d - 2;
    SampledFunction out;
    out.rho = in.rho;
    out.u.resize(in.u.size());
    out.du.clear();  // the chain yields u~ only; no derivative tracked
    for (std::size_t i = 0; i < in.rho.size(); ++i) {
        const double rho = in.rho[i];
        if (rho <= 0.0 || rho >= 1.0)
            throw std::domain_error("transform_solution: grid must be strictly inside (0,1)");
        const double om = 1.0 - rho * rho;
        const double w = (m + 1.0) / rho - (2.0 - m) * rho / om - 2.0 * rho / (dm2 + rho * rho);
        // u~ = (1-rho^2) u' + [ (m/rho)(1-rho^2) - (lambda+1-m) rho - (1-rho^2) w ] u
        out.u[i] = om * in.du[i] +
                   ((m / rho) * om - (lambda + 1.0 - m) * rho - om * w) * in.u[i];
    }
    return out;
}

SampledFunction sample_with_derivative(const std::function<Cplx(double)>& f, double lo, double hi,
                                       int points) {
    if (points < 9) throw std::invalid_argument("sample_with_derivative: need at least 9 points");
    const double h = (hi - lo) / (points - 1);
    std::vector<double> rho(points);
    std::vector<Cplx> u(points);
    for (int i = 0; i < points; ++i) {
        rho[i] = lo + i * h;
        u[i] = f(rho[i]);
    }
    SampledFunction out;
    for (int i = 2; i + 2 < points; ++i) {
        out.rho.push_back(rho[i]);
        out.u.push_back(u[i]);
        out.du.push_back((-u[i + 2] + 8.0 * u[i + 1] - 8.0 * u[i - 1] + u[i - 2]) / (12.0 * h));
    }
    return out;
}

}  // namespace wavemaps::model
