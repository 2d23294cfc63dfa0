#pragma once

#include "badweave/power.hpp"

#include <cmath>

namespace badweave {

// s <= w for a surd s and positive w
inline bool surd_leq(const Surd& s, const ExactPos& w) {
    if (s.sgn() <= 0) return true;
    return ExactPos::of_surd(s).cmp(w) <= 0;
}

// minimal integer with pred true; pred monotone (false..false,true..true);
// est seeds the exact exponential bracket + binary search
template <class Pred>
Int int_find_min(double est, Pred pred) {
    Int c;
    mpz_set_d(c.get_mpz_t(), std::isfinite(est) ? std::floor(est) : 0.0);
    if (pred(c)) {
        Int step = 1;
        while (pred(c - step)) { c -= step; step *= 2; }
        Int lo = c - step, hi = c; // pred(lo) false, pred(hi) true
        while (hi - lo > 1) {
            Int mid = (lo + hi) / 2;
            if (pred(mid)) hi = mid; else lo = mid;
        }
        return hi;
    }
    Int step = 1;
    while (!pred(c + step)) { c += step; step *= 2; }
    Int lo = c, hi = c + step;
    while (hi - lo > 1) {
        Int mid = (lo + hi) / 2;
        if (pred(mid)) hi = mid; else lo = mid;
    }
    return hi;
}

// maximal integer with pred true; pred monotone (true..true,false..false)
template <class Pred>
Int int_find_max(double est, Pred pred) {
    return -int_find_min(-est, [&](const Int& c) { return pred(Int(-c)); });
}

} // namespace badweave
