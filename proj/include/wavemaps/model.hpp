#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "wavemaps/certificate.hpp"
#include "wavemaps/ratfunc.hpp"

namespace wavemaps::model {

using Cplx = std::complex<double>;

/// Dimension bookkeeping: d = 2m + 1 = k + 2, all three views kept in sync.
struct ModeProblem {
    explicit ModeProblem(int dim);
    int d;
    double m() const { return (d - 1) / 2.0; }
    long k() const { return d - 2; }
};

/// Self-similar profile f(rho) = 2 arctan(rho / sqrt(d-2)) and its derivative.
double profile_f(double rho, int d);
double profile_f_prime(double rho, int d);

/// Nonlinearity g(psi) = (d-1) sin(psi) cos(psi) of the co-rotational system.
double g_of(double psi, int d);
double g_prime_of(double psi, int d);

/// Residual of the self-similar ODE
/// (1-rho^2) f'' + ((d-1)/rho - 2 rho) f' - g(f)/rho^2 at the profile.
double profile_ode_residual(double rho, int d);

struct TwoWays {
    double via_chain;
    double closed_form;
};

/// Mode potential V = g'(f(rho))/rho^2, evaluated both through the trig chain
/// and through the closed rational form; the two must agree.
TwoWays mode_potential(double rho, int d);

/// Symmetry mode u_1 = rho f'(rho) alongside its closed form
/// 2 rho sqrt(d-2) / (d-2 + rho^2).
TwoWays symmetry_mode(double rho, int d);
double symmetry_mode_closed(double rho, int d);
double symmetry_mode_derivative(double rho, int d);

/// Exact positivity of u_1 on (0,1]: numerator and denominator of the closed
/// form have manifestly positive coefficients for d >= 3.
Certificate symmetry_mode_positive(int d);

/// The full factorization chain evaluated in closed form. All members are
/// functions of rho on (0,1).
struct PotentialSet {
    int d;
    std::function<double(double)> V;        // mode potential
    std::function<double(double)> V1;       // normal-form potential
    std::function<double(double)> w;        // v_1'/v_1
    std::function<double(double)> W;        // factorization potential
    std::function<double(double)> V_susy;   // derived through the chain
    std::function<double(double)> V_susy_closed;
    std::function<double(double)> v1;       // ground solution of the normal form

    // construction-time verification on a sample grid
    double max_normal_form_residual = 0;  // |v1''/v1 - V1| = |w' + w^2 - V1|
    double max_susy_mismatch = 0;         // |V_susy - V_susy_closed|
    double v1_min_abs = 0;                // inf |v1| on the sample grid
};
PotentialSet susy_chain(int d);

enum class ProblemKind { mode, susy, heun };
enum class Endpoint { origin, one };

/// Frobenius indices as rational functions of lambda (constant when lambda
/// does not enter). heun uses k = d-2 and the origin only.
std::pair<RationalFunction, RationalFunction> frobenius_indices(ProblemKind p, Endpoint e, int d);

/// Independent cross-check: the indicial polynomial assembled from the ODE's
/// local Laurent data, evaluated at the claimed index; zero iff the index is
/// a root.
RationalFunction indicial_residual(ProblemKind p, Endpoint e, int d, const RationalFunction& index);

/// A function sampled on a strictly interior grid together with its first
/// derivative.
struct SampledFunction {
    std::vector<double> rho;
    std::vector<Cplx> u, du;
};

/// The SUSY transform chain u -> v -> (d/drho - w) v -> u~ collapsed into one
/// closed-form expression; annihilates the symmetry mode at lambda = 1.
SampledFunction transform_solution(const SampledFunction& in, Cplx lambda, int d);

/// 4th-order central differences on a uniform grid; the two points nearest
/// each end are dropped from the output (margin of 2 grid steps).
SampledFunction sample_with_derivative(const std::function<Cplx(double)>& f, double lo, double hi,
                                       int points);

}  // namespace wavemaps::model
