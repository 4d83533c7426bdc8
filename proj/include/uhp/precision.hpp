#pragma once

#include <vector>

namespace uhp {

// Precision ladder for root finding and polynomial evaluation on the unit
// circle. Work starts at `working_digits` and multiplies by
// `escalation_factor` whenever a computed value drowns in its own rounding
// error bound, up to `max_digits`.
struct EvalPrecision {
    int working_digits = 32;
    int escalation_factor = 2;
    int max_digits = 256;
};

inline std::vector<int> precision_rungs(const EvalPrecision& p) {
    std::vector<int> rungs;
    int d = p.working_digits;
    while (true) {
        rungs.push_back(d);
        if (d >= p.max_digits || p.escalation_factor <= 1) break;
        d *= p.escalation_factor;
        if (d > p.max_digits) d = p.max_digits;
    }
    return rungs;
}

} // namespace uhp
