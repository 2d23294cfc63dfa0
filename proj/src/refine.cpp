#include "badweave/refine.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace badweave {

RunSet runset_intersect(const RunSet& a, const RunSet& b) {
    RunSet out;
    auto ia = a.runs().begin(), ib = b.runs().begin();
    while (ia != a.runs().end() && ib != b.runs().end()) {
        Int lo = std::max(ia->first, ib->first);
        Int hi = std::min(ia->second, ib->second);
        if (lo < hi) out.append(lo, hi);
        if (ia->second < ib->second) ++ia; else ++ib;
    }
    return out;
}

RunSet runset_difference(const RunSet& a, const RunSet& b) {
    RunSet out;
    auto ib = b.runs().begin();
    for (auto& ra : a.runs()) {
        Int cur = ra.first;
        while (ib != b.runs().end() && ib->second <= cur) ++ib;
        auto jb = ib;
        while (cur < ra.second) {
            if (jb == b.runs().end() || jb->first >= ra.second) {
                out.append(cur, ra.second);
                break;
            }
            if (jb->first > cur) out.append(cur, jb->first);
            cur = std::max(cur, jb->second);
            ++jb;
        }
    }
    return out;
}

RunSet runset_union(const RunSet& a, const RunSet& b) {
    RunSet out;
    auto ia = a.runs().begin(), ib = b.runs().begin();
    std::optional<std::pair<Int, Int>> cur;
    auto feed = [&](const std::pair<Int, Int>& r) {
        if (!cur) { cur = r; return; }
        if (r.first <= cur->second) cur->second = std::max(cur->second, r.second);
        else { out.append(cur->first, cur->second); cur = r; }
    };
    while (ia != a.runs().end() || ib != b.runs().end()) {
        if (ib == b.runs().end() || (ia != a.runs().end() && ia->first <= ib->first)) feed(*ia++);
        else feed(*ib++);
    }
    if (cur) out.append(cur->first, cur->second);
    return out;
}

RunSet runset_children(const RunSet& a, long R) {
    RunSet out;
    for (auto& r : a.runs()) out.append(r.first * R, r.second * R);
    return out;
}

namespace {

// parents (index/R) touched by any index of `s`, ascending and deduplicated
std::vector<Int> touched_parents(const RunSet& s, long R) {
    std::vector<Int> out;
    for (auto& r : s.runs()) {
        Int p = r.first / R, pe = (r.second - 1) / R;
        if (!out.empty() && out.back() >= p) p = out.back() + 1;
        for (; p <= pe; ++p) out.push_back(p);
    }
    return out;
}

Int floor_2R_pow(long R, const Rat& e) { // [2 R^e]
    return (ExactPos(Rat(2)) * ExactPos::pow_of(Rat(R), e)).floor();
}

} // namespace

RefinementResult refine_collections(const std::vector<RunSet>& J, long R, const Rat& epsilon) {
    if (J.empty()) throw std::domain_error("refine_collections: no levels");
    long m_max = (long)J.size() - 1;
    RefinementResult res;
    res.threshold = floor_2R_pow(R, 1 - epsilon / 2);
    const Int& T = res.threshold;
    auto& M = res.M_nm;
    M.assign(m_max + 1, {});
    std::vector<std::vector<RunSet>> Rnm(m_max + 1);
    M[0] = {J[0]};
    Rnm[0] = {RunSet{}};
    for (long m = 1; m <= m_max; ++m) {
        M[m].assign(m + 1, RunSet{});
        Rnm[m].assign(m + 1, RunSet{});
        std::vector<RunSet> Mp(m + 1);
        RunSet kids = runset_children(M[m - 1][m - 1], R);
        Mp[m] = runset_intersect(J[m], kids);
        Rnm[m][m] = runset_difference(kids, J[m]);
        for (long u = m - 1; u >= 0; --u) {
            const RunSet& prev = M[m - 1][u];
            const RunSet& dumpkids = Rnm[m][u + 1];
            RunSet dumped;
            if (!dumpkids.empty() && T <= R) {
                for (const Int& p : touched_parents(dumpkids, R)) {
                    if (!prev.contains(p)) continue;
                    if (dumpkids.count_in(p * R, (p + 1) * R) >= T) dumped.append(p, p + 1);
                }
            }
            Mp[u] = runset_difference(prev, dumped);
            Rnm[m][u] = runset_union(Rnm[m - 1][u], dumped);
        }
        M[m][0] = Mp[0];
        for (long u = 1; u <= m; ++u)
            M[m][u] = runset_intersect(Mp[u], runset_children(M[m][u - 1], R));
    }
    // final collections and dumping grounds
    for (long n = 0; n <= m_max; ++n) {
        res.M.push_back(M[m_max][n]);
        res.dump.push_back(Rnm[m_max][n]);
    }
    // stabilization: first m from which M_{n,m} stays constant up to m_max
    res.N.assign(m_max + 1, 0);
    res.stabilized.assign(m_max + 1, false);
    for (long n = 0; n <= m_max; ++n) {
        long first = m_max;
        while (first > n && M[first - 1][n].runs() == M[m_max][n].runs()) --first;
        res.N[n] = first;
        res.stabilized[n] = first < m_max;
    }
    // conditions C1-C3 on every auxiliary collection
    Int min_kids = Int(R) - T;
    for (long m = 0; m <= m_max; ++m) {
        for (long n = 0; n <= m; ++n) {
            if (!runset_difference(M[m][n], J[n]).empty()) res.c1_ok = false;
            if (n < m) {
                const RunSet& up = M[m][n + 1];
                if (!runset_difference(up, runset_children(M[m][n], R)).empty()) res.c2_ok = false;
                if (min_kids > 0) {
                    RunSet missing = runset_difference(runset_children(M[m][n], R), up);
                    for (const Int& p : touched_parents(missing, R)) {
                        if (!M[m][n].contains(p)) continue;
                        if (up.count_in(p * R, (p + 1) * R) < min_kids) res.c3_ok = false;
                    }
                }
            }
        }
    }
    return res;
}

MeasureTree assign_measure(const std::vector<RunSet>& M, long R, const Rat& epsilon, const Rat& c1) {
    MeasureTree mt;
    mt.R = R;
    mt.epsilon = epsilon;
    mt.c1 = c1;
    if (M.empty() || M[0].empty()) throw std::domain_error("assign_measure: empty M0");
    Rat w0 = Rat(1) / Rat(M[0].count());
    mt.levels.emplace_back();
    for (auto& r : M[0].runs()) mt.levels[0].push_back({r.first, r.second, w0});
    ExactPos ratio_rhs = ExactPos(Rat(2)) * ExactPos::pow_of(Rat(R), 1 - epsilon / 2);
    auto ratio_fine = [&](const Int& cnt) {
        Int gap = Int(R) - cnt;
        return gap <= 0 || ExactPos(Rat(gap)).cmp(ratio_rhs) <= 0;
    };
    for (long n = 0; n + 1 < (long)M.size(); ++n) {
        const RunSet& next = M[n + 1];
        RunSet missing = runset_difference(runset_children(M[n], R), next);
        std::vector<Int> dirty = touched_parents(missing, R);
        std::vector<WeightPiece> out;
        auto emit_runs_of_next = [&](const Int& lo, const Int& hi, const Rat& w) {
            // pieces for next ∩ [lo,hi) at weight w
            auto it = std::upper_bound(next.runs().begin(), next.runs().end(), lo,
                                       [](const Int& v, const std::pair<Int, Int>& r) { return v < r.second; });
            for (; it != next.runs().end() && it->first < hi; ++it)
                out.push_back({std::max(lo, it->first), std::min(hi, it->second), w});
        };
        std::size_t di = 0;
        for (const WeightPiece& pc : mt.levels[n]) {
            while (di < dirty.size() && dirty[di] < pc.lo) ++di;
            Int cur = pc.lo;
            std::size_t dj = di;
            while (cur < pc.hi) {
                Int nd = (dj < dirty.size() && dirty[dj] < pc.hi) ? dirty[dj] : pc.hi;
                if (cur < nd) // clean parents: all R children survive
                    out.push_back({cur * R, nd * R, pc.w / R});
                if (nd == pc.hi) break;
                Int cnt = next.count_in(nd * R, (nd + 1) * R);
                if (cnt == 0) {
                    mt.no_childless_parents = false;
                } else {
                    if (!ratio_fine(cnt)) mt.ratio_ok = false;
                    emit_runs_of_next(nd * R, (nd + 1) * R, pc.w / Rat(cnt));
                }
                cur = nd + 1;
                ++dj;
            }
        }
        mt.levels.push_back(std::move(out));
    }
    return mt;
}

Rat MeasureTree::weight(long n, const Int& k) const {
    const auto& v = levels.at(n);
    auto it = std::upper_bound(v.begin(), v.end(), k,
                               [](const Int& x, const WeightPiece& p) { return x < p.hi; });
    if (it == v.end() || k < it->lo) return Rat(0);
    return it->w;
}

Rat MeasureTree::max_weight(long n) const {
    Rat m(0);
    for (auto& p : levels.at(n)) m = std::max(m, p.w);
    return m;
}

Rat MeasureTree::level_sum(long n) const {
    Rat s(0);
    for (auto& p : levels.at(n)) s += Rat(p.hi - p.lo) * p.w;
    return s;
}

MassBoundReport check_mass_bound(const MeasureTree& mt, long random_windows, unsigned seed) {
    MassBoundReport rep;
    long N = (long)mt.levels.size() - 1;
    ExactPos a = ExactPos(Rat(2)) * ExactPos::pow_of(mt.c1, mt.epsilon / 2 - 1) *
                 ExactPos::pow_of(Rat(mt.R), mt.epsilon / 2);
    Rat ex = 1 - mt.epsilon / 2;
    auto note = [&](const Rat& mu, const Rat& len) {
        if (mu > 0 && len < 1) {
            double e = std::log(mu.get_d()) / std::log(len.get_d());
            rep.empirical_exponent = std::min(rep.empirical_exponent, e);
        }
    };
    // grid windows: one check per constant-weight piece
    for (long n = 0; n <= N; ++n) {
        Rat dn = mt.d(n);
        ExactPos rhs = a * ExactPos::pow_of(dn, ex);
        for (auto& p : mt.levels[n]) {
            ++rep.grid_checked;
            if (ExactPos(p.w).cmp(rhs) > 0) ++rep.violations;
            note(p.w, dn);
        }
    }
    // random windows shorter than d0
    std::mt19937_64 rng(seed);
    const long denom = 1 << 20;
    for (long t = 0; t < random_windows; ++t) {
        Rat x1((long)(rng() % denom), denom);
        x1.canonicalize();
        Rat len = mt.d(0) * Rat((long)(rng() % denom) + 1, denom);
        len.canonicalize();
        long n = 0;
        while (n < N && mt.d(n + 1) > len) ++n; // d_{n+1} <= len < d_n (capped at N)
        long q = std::min(n + 1, N);
        Rat u = mt.d(q);
        Int kmin = ifloor(x1 / u), kmax = ifloor((x1 + len) / u);
        Rat mu(0);
        for (Int k = kmin; k <= kmax; ++k) mu += mt.weight(q, k);
        ++rep.random_checked;
        if (mu > 0 && ExactPos(mu).cmp(a * ExactPos::pow_of(len, ex)) > 0) ++rep.violations;
        note(mu, len);
    }
    return rep;
}

AdversaryReport ubiquity_adversary_test(const std::vector<RunSet>& J, long R, const Rat& epsilon,
                                        long trials, unsigned seed) {
    AdversaryReport rep;
    rep.trials = trials;
    Int T = floor_2R_pow(R, 1 - epsilon / 2);
    std::mt19937_64 rng(seed);
    long N = (long)J.size() - 1;
    for (long t = 0; t < trials; ++t) {
        RunSet Tn = J[0];
        bool bad = false;
        for (long n = 0; n <= N; ++n) {
            if (runset_intersect(Tn, J[n]).empty()) { bad = true; break; }
            if (n == N) break;
            if (T >= R) {
                Tn = runset_children(Tn, R);
            } else {
                long pick = (long)T.get_si();
                std::vector<Int> chosen;
                for (auto& run : Tn.runs())
                    for (Int p = run.first; p < run.second; ++p) {
                        // choose `pick` distinct children of p
                        std::vector<long> idx(R);
                        for (long x = 0; x < R; ++x) idx[x] = x;
                        for (long x = 0; x < pick; ++x)
                            std::swap(idx[x], idx[x + (long)(rng() % (R - x))]);
                        for (long x = 0; x < pick; ++x) chosen.push_back(p * R + idx[x]);
                    }
                std::sort(chosen.begin(), chosen.end());
                RunSet nx;
                for (const Int& k : chosen) nx.append(k, k + 1);
                Tn = std::move(nx);
            }
        }
        if (bad) ++rep.violations;
    }
    return rep;
}

} // namespace badweave
