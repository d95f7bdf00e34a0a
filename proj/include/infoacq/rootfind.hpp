#pragma once

#include <cmath>
#include <utility>

#include "infoacq/errors.hpp"

namespace infoacq {

// Bisection on [lo, hi] until the bracket width falls below tol_x.
// Requires f(lo) and f(hi) of opposite (or zero) sign.
template <class F>
double bisect(F&& f, double lo, double hi, double tol_x = 1e-12, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0))
        throw NoConvergenceError("bisect: no sign change on the given bracket");
    for (int i = 0; i < max_iter && (hi - lo) > tol_x; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Root of increasing f with f(0) <= 0: grows the bracket geometrically from
// [0, 1] until f turns positive, then bisects.
template <class F>
double solve_increasing_from_zero(F&& f, double tol_x = 1e-12) {
    double hi = 1.0;
    int guard = 0;
    while (f(hi) < 0.0) {
        hi *= 2.0;
        if (++guard > 1024) throw NoConvergenceError("solve_increasing_from_zero: bracket growth failed");
    }
    return bisect(f, 0.0, hi, tol_x);
}

}  // namespace infoacq
