#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wavemaps/multipoly.hpp"
#include "wavemaps/ratfunc.hpp"

namespace wavemaps::recurrence {

enum class Case { general, k2, d3 };
const char* case_name(Case c);
std::optional<Case> case_from_name(const std::string& s);

/// Start index, domain shifts and the exact bound triple of one estimate
/// lemma. Bounds are rational functions of the *unshifted* k (constants for
/// k2 and d3); the shift amounts are explicit here, never implicit.
struct CaseSpec {
    Case id;
    std::string name;
    int n0;
    std::uint32_t n_shift;            // n -> n + n_shift realizes n >= n0
    std::uint32_t k_shift;            // k -> k + k_shift realizes the k-domain (0 when k is fixed)
    std::uint32_t k_shift_dichotomy;  // k-domain for the dichotomy premises
    std::optional<long> fixed_k;      // k2: 2; d3: k absent from the formulas
    RationalFunction bound_delta, bound_eps, bound_C;
    std::string notes;
};
const CaseSpec& case_spec(Case c);

/// Numerators and factored common denominator of the three-term recurrence
/// a_{n+2} = A_n a_{n+1} + B_n a_n, symbolic in (lambda, n[, k]).
struct ThreeTermCoeffs {
    MultiPoly A_num, B_num;
    std::vector<MultiPoly> den_factors;
    MultiPoly den() const;
    RationalFunction A() const { return {A_num, den()}; }
    RationalFunction B() const { return {B_num, den()}; }
};
const ThreeTermCoeffs& coeffs(Case c);

/// Quasi-solution, quadratic in lambda over a factored positive denominator.
struct QuasiSolution {
    MultiPoly num;
    std::vector<MultiPoly> den_factors;
    MultiPoly den() const;
    RationalFunction rf() const { return {num, den()}; }
};
const QuasiSolution& quasi(Case c);
QuasiSolution quasi_shifted_n(Case c, std::uint32_t offset);  // n -> n + offset

// ---- fast numeric evaluators (scanner / validation paths) ----------------
using Cplx = std::complex<double>;
Cplx eval_A(Case c, double n, Cplx lambda, double k);
Cplx eval_B(Case c, double n, Cplx lambda, double k);
Cplx eval_quasi(Case c, double n, Cplx lambda, double k);
Rational eval_A_exact(Case c, long n, const Rational& lambda, long k);
Rational eval_B_exact(Case c, long n, const Rational& lambda, long k);

/// Characteristic roots of the limiting recurrence: {1, -1/k} (general, k2)
/// or {1, 1/2} (d3).
std::pair<Rational, Rational> characteristic_roots(Case c, long k);

// ---- ratio sequences ------------------------------------------------------
/// Projective ratio point (a_{n+1} : a_n); (1 : 0) encodes an infinite ratio.
struct ProjectivePoint {
    Cplx p, q;
    bool finite(double eps = 0.0) const { return std::abs(q) > eps; }
    Cplx value() const { return p / q; }
};

/// r_0..r_N tracked projectively with periodic renormalization.
std::vector<ProjectivePoint> ratio_seq(Case c, Cplx lambda, double k, int N);

/// Exact-rational mode for rational lambda; pairs kept as coprime integers.
struct ExactProjectivePoint {
    Rational p, q;
    bool finite() const { return !q.is_zero(); }
    Rational value() const { return p / q; }
};
std::vector<ExactProjectivePoint> ratio_seq_exact(Case c, const Rational& lambda, long k, int N);

/// Exact symbolic r_m built by m steps of the ratio recursion over a common
/// denominator (r_0 = A_{-1}); no series division involved.
RationalFunction ratio_symbolic(Case c, int m);

/// delta_{n0}, eps_n, C_n as exact rational functions in (lambda, n[, k]).
/// Construction composes the published numerators/denominators and cancels
/// syntactically equal factors; no polynomial gcd.
struct DerivedQuantities {
    RationalFunction delta_start;  // in lambda[, k]; n fixed at n0
    RationalFunction eps_n;        // in lambda, n[, k]
    RationalFunction C_n;
};
DerivedQuantities derived_quantities(Case c);

// ---- Heun form -------------------------------------------------------------
/// The reduced ODE with polynomial coefficients: sum_i x^i of
/// (P2[i] y'' + P1[i] y' + P0[i] y) = 0, entries polynomials in (lambda[, k]).
/// For d = 3 this is the Moebius-transformed equation in z = 2x/(x+1).
struct HeunForm {
    std::vector<MultiPoly> P2, P1, P0;
    std::vector<Rational> finite_singular_points;
    std::string variable;  // "x" or "z"
    std::string note;
};
HeunForm heun_form(Case c);          // k symbolic in the general case
HeunForm heun_reduce(int d);         // d >= 3; d == 3 applies the Moebius step

/// Indicial polynomial roots of a HeunForm at its origin (exact).
std::pair<RationalFunction, RationalFunction> heun_indices_at_origin(const HeunForm& h);

/// Three-term recurrence read off a HeunForm by inserting sum a_j x^j:
/// c2(n)*a_{n+2} + c1(n)*a_{n+1} + c0(n)*a_n = 0 at order x^{n+1}.
struct RecurrenceIdentity {
    MultiPoly c2, c1, c0;  // polynomials in (lambda, n[, k])
};
RecurrenceIdentity three_term_from_heun(const HeunForm& h);

/// Moebius map of the d=3 reduction; fixes 0 and 1, sends -1 to infinity.
std::optional<Rational> mobius_z(const Rational& x);

}  // namespace wavemaps::recurrence
