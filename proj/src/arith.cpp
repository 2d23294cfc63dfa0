#include "badweave/arith.hpp"

#include <cmath>

namespace badweave {

NearestInt nearest_int_dist(const Surd& x, const Int& q) {
    if (q < 1) throw std::domain_error("nearest_int_dist: q < 1");
    Surd v = Surd(q) * x;
    Int f = v.floor();
    Surd frac = v - Surd(f);
    Surd half(Rat(1, 2));
    if (frac <= half) return {f, frac};
    return {f + 1, Surd(Int(1)) - frac};
}

Rat badness_lower_bound(const Surd& theta, const Rat& i, const Int& Q,
                        BadnessCertificate* cert) {
    if (theta.is_rational())
        throw std::domain_error("badness_lower_bound: rational theta (||q theta|| = 0 at the denominator)");
    if (i <= 0 || i > 1) throw std::domain_error("badness_lower_bound: i must be in (0,1]");
    if (Q < 1) throw std::domain_error("badness_lower_bound: Q < 1");

    Rat inv_i = 1 / i;
    Int q_min = 0;
    Surd d_min;
    // exact running min of ||q theta|| * q^{1/i}, double prefilter for speed
    double best_est = -1;
    for (Int q = 1; q <= Q; ++q) {
        NearestInt ni = nearest_int_dist(theta, q);
        double est = ni.dist.to_double() * std::pow(q.get_d(), inv_i.get_d());
        if (q_min != 0 && est > best_est * 1.000001) continue;
        if (q_min == 0 ||
            (ExactPos::of_surd(ni.dist) * ExactPos::pow_of(Rat(q), inv_i))
                    .cmp(ExactPos::of_surd(d_min) * ExactPos::pow_of(Rat(q_min), inv_i)) < 0) {
            q_min = q;
            d_min = ni.dist;
            best_est = est;
        }
    }
    // c = 1/k with k minimal such that 1/k < m, m = d_min * q_min^{1/i}
    ExactPos m = ExactPos::of_surd(d_min) * ExactPos::pow_of(Rat(q_min), inv_i);
    Int k = m.inverse().floor() + 1;
    Rat c(1, k);
    c.canonicalize();

    CFExpansion cf = continued_fraction(theta);
    Rat cf_bound(1, cf.a_max + 2);
    cf_bound.canonicalize();
    if (cert) {
        cert->c = c;
        cert->q_min = q_min;
        cert->d_min = d_min;
        cert->Q = Q;
        cert->a_max = cf.a_max;
        cert->c_all_q = c < cf_bound ? c : cf_bound;
    }
    return c;
}

} // namespace badweave
