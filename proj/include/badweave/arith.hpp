#pragma once

#include "badweave/power.hpp"

namespace badweave {

// ||q*x|| with the nearest integer identified; dist in [0, 1/2] exactly
// (ties resolved toward the lower integer)
struct NearestInt {
    Int nearest;
    Surd dist;
};
NearestInt nearest_int_dist(const Surd& x, const Int& q);

struct BadnessCertificate {
    Rat c;        // ||q theta|| > c q^{-1/i} verified exactly for q <= Q
    Int q_min;    // minimizing q of ||q theta|| q^{1/i}
    Surd d_min;   // ||q_min theta||
    Int Q;
    Int a_max;    // max partial quotient over the CF preperiod + period
    Rat c_all_q;  // constant certified for every q via ||q theta|| > 1/((a_max+2)q)
};

// largest unit fraction strictly below the exact minimum of ||q theta|| q^{1/i}
// over q <= Q; certificate carries the CF-period constant valid for all q
Rat badness_lower_bound(const Surd& theta, const Rat& i, const Int& Q,
                        BadnessCertificate* cert = nullptr);

} // namespace badweave
