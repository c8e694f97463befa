#pragma once

#include <string>
#include <vector>

namespace wavemaps {

/// The unit of proof output. A failed certificate is a legitimate outcome,
/// not an error; its witness lists what went wrong (negative monomials,
/// offending Routh entries, negative slack).
struct Certificate {
    std::string lemma_id;
    std::string case_name;
    std::string method;  // hurwitz | positivity_after_shift | exact_arith | induction
    bool pass = false;
    std::vector<std::string> witness;
    double wall_time_s = 0.0;
};

}  // namespace wavemaps
