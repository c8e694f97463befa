#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wavemaps/certificate.hpp"
#include "wavemaps/multipoly.hpp"
#include "wavemaps/ratfunc.hpp"

namespace wavemaps {

/// Passes iff every stored coefficient of p is >= 0. On failure the witness
/// lists all negative monomials with exponents and values.
Certificate coeffs_nonneg(const MultiPoly& p);

/// Like coeffs_nonneg but additionally requires a strictly positive constant
/// term, certifying p > 0 on the closed nonnegative orthant.
Certificate coeffs_nonneg_positive_const(const MultiPoly& p);

/// Routh-Hurwitz stability of a polynomial in lambda whose coefficients are
/// polynomials in k, certified symbolically for all k >= k_shift: the Routh
/// table is built over rational functions in k and every first-column entry,
/// after the shift k -> k+k_shift, must have numerator*denominator with
/// nonnegative coefficients and positive constant term. A first-column entry
/// that is identically zero makes the table degenerate and fails with a
/// diagnostic (no epsilon-perturbation rules are applied).
Certificate hurwitz_stable(const MultiPoly& p, std::uint32_t k_shift);

/// The first Routh column as rational functions in k (exposed for tests).
std::vector<RationalFunction> routh_first_column(const MultiPoly& p);

}  // namespace wavemaps
