#include "badweave/construction.hpp"

#include "badweave/search.hpp"

#include <algorithm>
#include <cmath>

namespace badweave {

Rat pow2_below(const Rat& x) {
    if (x <= 0) throw std::domain_error("pow2_below: nonpositive input");
    double est = std::log2(x.get_d());
    long e = std::isfinite(est) ? (long)std::floor(est) : 0;
    Rat p = qpow(Rat(2), Int(e));
    while (p > x) p /= 2;
    while (p * 2 <= x) p *= 2;
    return p;
}

Rat pow2_below(const ExactPos& x) {
    double est = std::log2(x.to_double());
    long e = std::isfinite(est) ? (long)std::floor(est) : 0;
    Rat p = qpow(Rat(2), Int(e));
    while (x.cmp(p) < 0) p /= 2;
    while (x.cmp(p * 2) >= 0) p *= 2;
    return p;
}

namespace {

Int iceil_pos(const ExactPos& x) {
    Int f = x.floor();
    return x.cmp(Rat(f)) == 0 ? f : f + 1;
}

// (1/4) R^{-3i/j}
ExactPos c1_bound(const Pair& pair, long R) {
    return ExactPos(Rat(1, 4)) * ExactPos::pow_of(Rat(R), -3 * pair.i / pair.j);
}

} // namespace

Params derive_params(const std::vector<Pair>& pairs, const std::string& theta, long R,
                     const DeriveOptions& opt) {
    if (R < 2) throw std::domain_error("derive_params: R must be >= 2");
    if (pairs.empty()) throw std::domain_error("derive_params: no pairs");
    if (opt.epsilon <= 0 || opt.epsilon >= 1)
        throw std::domain_error("derive_params: epsilon must lie in (0,1)");
    Params p;
    p.R = R;
    p.epsilon = opt.epsilon;
    p.full_trim = opt.full_trim;
    p.countable = opt.countable;
    p.theta_str = theta;
    p.theta = parse_theta(theta);
    badness_lower_bound(p.theta, Rat(1), opt.badness_q, &p.theta_cert);

    // global grid constant c1
    if (opt.c1_override) {
        if (*opt.c1_override <= 0) throw std::domain_error("derive_params: c1 must be positive");
        p.c1 = *opt.c1_override;
    } else {
        bool found = false;
        ExactPos best;
        for (const Pair& pr : pairs) {
            if (!pr.generic()) continue;
            ExactPos b = c1_bound(pr, R);
            if (!found || b.cmp(best) < 0) { best = b; found = true; }
            if (opt.countable) break; // base construction: first generic pair only
        }
        if (!found)
            throw std::domain_error("derive_params: no generic pair fixes c1 (pass c1 explicitly)");
        p.c1 = pow2_below(best);
    }

    bool contraction = cmp_power(Rat(R), 1 - opt.epsilon / 2, Rat(2), Rat(1)) > 0;
    long prev_m = 0;
    for (std::size_t t0 = 0; t0 < pairs.size(); ++t0) {
        DerivedPair dp;
        dp.pair = pairs[t0];
        dp.contraction_ok = contraction;
        long t = (long)t0 + 1;
        dp.m = opt.countable ? (t == 1 ? 1 : std::max(t, prev_m + 1)) : 1;
        prev_m = dp.m;
        dp.k = 0;
        if (dp.pair.generic()) {
            ExactPos bound = opt.countable
                                 ? ExactPos(Rat(1, 4)) *
                                       ExactPos::pow_of(Rat(R), Rat(-3 * dp.m) * dp.pair.i / dp.pair.j)
                                 : c1_bound(dp.pair, R);
            if (opt.countable) {
                while (ExactPos(p.c1 / qpow(Rat(R), dp.k)).cmp(bound) > 0) {
                    ++dp.k;
                    if (dp.k > 64 * dp.m + 64)
                        throw std::logic_error("derive_params: runaway schedule offset");
                }
            } else if (ExactPos(p.c1).cmp(bound) > 0) {
                throw std::domain_error("derive_params: c1 exceeds (1/4)R^{-3i/j} for a pair");
            }
            dp.c1t = p.c1 / qpow(Rat(R), dp.k);
            Rat alpha = dp.pair.alpha();
            Int cl = iceil(1 + alpha); // integer >= 1 + alpha keeps c <= c1(t) R_t^{-1-alpha}
            Rat x = dp.c1t / qpow(Rat(R), Int(dp.m) * cl);
            Rat cap = std::min({x, p.theta_cert.c_all_q, Rat(1, 2)});
            dp.ct = pow2_below(cap);
            dp.trim_viable = cmp_power(Rat(R), alpha, Rat(2), Rat(1)) > 0;
            if (opt.full_trim)
                dp.trim = iceil_pos(ExactPos::pow_of(qpow(Rat(R), dp.m), 1 - alpha));
        } else {
            dp.c1t = p.c1 / qpow(Rat(R), dp.k);
            if (dp.pair.kind == Pair::Kind::zero_one)
                dp.ct = dp.c1t / (2 * qpow(Rat(R), 2 * dp.m)); // c = c1 / (2 R^2)
            else
                dp.ct = 0; // (1,0): the theta coordinate alone decides membership
        }
        p.pairs.push_back(std::move(dp));
    }
    return p;
}

void RunSet::append(const Int& lo, const Int& hi) {
    if (lo >= hi) return;
    if (!runs_.empty()) {
        if (lo < runs_.back().second) throw std::logic_error("RunSet::append: out of order");
        if (lo == runs_.back().second) { runs_.back().second = hi; return; }
    }
    runs_.emplace_back(lo, hi);
}

Int RunSet::count() const {
    Int t = 0;
    for (auto& r : runs_) t += r.second - r.first;
    return t;
}

Int RunSet::count_in(const Int& lo, const Int& hi) const {
    if (lo >= hi) return 0;
    auto it = std::upper_bound(runs_.begin(), runs_.end(), lo,
                               [](const Int& v, const std::pair<Int, Int>& r) { return v < r.second; });
    Int t = 0;
    for (; it != runs_.end() && it->first < hi; ++it)
        t += std::min(hi, it->second) - std::max(lo, it->first);
    return t;
}

bool RunSet::contains(const Int& x) const { return count_in(x, x + 1) > 0; }

void RunSet::subtract(const Int& lo, const Int& hi) {
    if (lo >= hi) return;
    auto first = std::upper_bound(runs_.begin(), runs_.end(), lo,
                                  [](const Int& v, const std::pair<Int, Int>& r) { return v < r.second; });
    std::size_t idx = (std::size_t)(first - runs_.begin());
    while (idx < runs_.size() && runs_[idx].first < hi) {
        auto& r = runs_[idx];
        if (r.first < lo && r.second > hi) { // split in two
            Int tail = r.second;
            r.second = lo;
            runs_.insert(runs_.begin() + idx + 1, {hi, tail});
            return;
        }
        if (r.first < lo) {
            r.second = lo;
            ++idx;
        } else if (r.second > hi) {
            r.first = hi;
            return;
        } else {
            runs_.erase(runs_.begin() + idx);
        }
    }
}

LevelCollection init_level0(const Params& p) {
    LevelCollection l;
    l.n = 0;
    Int count = ifloor(1 / p.c1);
    l.set.append(0, count);
    return l;
}

std::vector<long> active_bands(const DerivedPair& dp, long level, bool countable) {
    std::vector<long> out;
    if (dp.pair.kind == Pair::Kind::one_zero || level < 1) return out;
    if (!countable) {
        out.push_back(level);
        return out;
    }
    long d = level - dp.k;
    if (d <= 0 || d % dp.m != 0) return out;
    for (long b = level - dp.k - dp.m + 1; b <= level - dp.k; ++b)
        if (b >= 1) out.push_back(b);
    return out;
}

LevelCollection build_level(const LevelCollection& jn, const Params& p, LevelReport& rep) {
    long N = jn.n + 1;
    rep = LevelReport{};
    rep.level = N;
    LevelCollection out;
    out.n = N;
    Int trim = 0;
    for (const auto& dp : p.pairs) {
        bool trim_active = !p.countable || ((N - dp.k) % dp.m == 0);
        if (trim_active && dp.trim > trim) trim = dp.trim;
    }
    if (trim == 0) {
        for (auto& r : jn.set.runs()) out.set.append(r.first * p.R, r.second * p.R);
    } else if (2 * trim < p.R) {
        for (auto& r : jn.set.runs())
            for (Int par = r.first; par < r.second; ++par)
                out.set.append(par * p.R + trim, (par + 1) * p.R - trim);
    } // else: trimming eats every child; out stays empty
    rep.subdivided = jn.set.count() * p.R;
    rep.candidates = out.set.count();
    if (out.set.empty()) return out;

    Rat u = p.unit(N);
    double du = u.get_d();
    auto remove_interval = [&](const Surd& center, const ExactPos& w) -> Int {
        double dc = center.to_double(), dw = w.to_double();
        // largest k with k*u <= center + w
        Int kmax = int_find_max((dc + dw) / du, [&](const Int& k) {
            return surd_leq(Surd(Rat(k) * u) - center, w);
        });
        // smallest k with (k+1)*u >= center - w
        Int kmin = int_find_min((dc - dw) / du - 1.0, [&](const Int& k) {
            return surd_leq(center - Surd(Rat(k + 1) * u), w);
        });
        Int removed = out.set.count_in(kmin, kmax + 1);
        if (removed > 0) out.set.subtract(kmin, kmax + 1);
        return removed;
    };

    for (std::size_t t = 0; t < p.pairs.size(); ++t) {
        const auto& dp = p.pairs[t];
        for (long band : active_bands(dp, N, p.countable)) {
            if (out.set.empty()) break;
            long fam = p.countable ? (N - dp.k) / dp.m : band;
            Rat lo = Rat(out.set.runs().front().first) * u;
            Rat hi = Rat(out.set.runs().back().second) * u;
            if (dp.pair.generic()) {
                for (const Line& L : enumerate_lines(dp.pair, p.R, band, lo, hi, dp.ct, p.theta)) {
                    auto d = delta_interval(L, dp.pair, dp.ct, p.theta);
                    Int rem = out.set.empty() ? Int(0) : remove_interval(d.center, d.halfwidth);
                    rep.lines.push_back({t, L, band, fam, rem});
                }
            } else {
                for (const Rat& pq : enumerate_rationals(p.R, band, lo, hi, dp.ct)) {
                    Int q = pq.get_den();
                    ExactPos w = ExactPos(dp.ct / Rat(q * q));
                    Int rem = out.set.empty() ? Int(0) : remove_interval(Surd(pq), w);
                    rep.rationals.push_back({pq, band, rem});
                }
            }
        }
    }
    rep.survivors = out.set.count();
    return out;
}

ConstructionResult run_construction(const Params& p, long depth) {
    if (depth < 1) throw std::domain_error("run_construction: depth must be >= 1");
    ConstructionResult r;
    r.params = p;
    r.levels.push_back(init_level0(p));
    for (long n = 1; n <= depth; ++n) {
        LevelReport rep;
        LevelCollection next = build_level(r.levels.back(), p, rep);
        r.reports.push_back(std::move(rep));
        bool died = next.set.empty();
        r.levels.push_back(std::move(next));
        if (died) { r.first_empty = n; break; }
    }
    return r;
}

PointCertificate extract_point(const ConstructionResult& r) {
    long d = (long)r.levels.size() - 1;
    while (d >= 0 && r.levels[d].set.empty()) --d;
    if (d < 0) throw std::domain_error("extract_point: empty tree");
    const LevelCollection& lvl = r.levels[d];
    Rat u = r.params.unit(lvl.n);
    Int k0 = lvl.set.runs().front().first;
    PointCertificate c;
    c.theta = r.params.theta_str;
    c.R = r.params.R;
    c.depth = lvl.n;
    for (auto& dp : r.params.pairs) {
        c.pair_strs.push_back(dp.pair.str());
        c.cs.push_back(dp.ct);
    }
    c.lo = Rat(k0) * u;
    c.hi = Rat(k0 + 1) * u;
    c.midpoint = (c.lo + c.hi) / 2;
    for (std::size_t t = 0; t < r.params.pairs.size(); ++t)
        for (long n = 1; n <= lvl.n; ++n)
            for (long band : active_bands(r.params.pairs[t], n, r.params.countable))
                c.families.emplace_back(t, band);
    return c;
}

} // namespace badweave
