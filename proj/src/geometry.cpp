#include "badweave/geometry.hpp"

#include "badweave/search.hpp"

#include <algorithm>
#include <map>

namespace badweave {

namespace {

// largest integer strictly below x (x > 0)
Int strict_floor(const ExactPos& x) {
    Int f = x.floor();
    if (f > 0 && x.cmp(Rat(f)) == 0) --f;
    return f;
}

Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// every line whose Delta(L) meets the window for an arbitrarily small c
// contains the crossing lines; filter by the exact trace
const Rat kProbe = Rat(1, Int("1000000000000"));

std::vector<Line> lines_crossing(const Pair& pair, long R, long n,
                                 const Rat& lo, const Rat& hi, const Surd& theta) {
    std::vector<Line> out;
    Surd slo(lo), shi(hi);
    for (const Line& L : enumerate_lines(pair, R, n, lo, hi, kProbe, theta)) {
        Surd Y = (Surd(L.A) * theta + Surd(L.C)) / Surd(L.B);
        if (slo <= Y && Y <= shi) out.push_back(L);
    }
    return out;
}

Surd abs_dist(const RationalPoint& P, const Surd& theta) {
    Surd d = Surd(P.q) * theta - Surd(P.p);
    if (d.sgn() < 0) d = -d;
    if (d.sgn() == 0) throw std::domain_error("rational theta equals p/q");
    return d;
}

// line through P with |A| <= q^i, 0 < B <= q^j, ordered by (B, A)
std::optional<Line> pigeonhole_search(const RationalPoint& P, const Pair& pair) {
    if (P.q == 1) return normalize(0, 1, -P.r);
    LatticePlane lat = lattice_plane(P);
    Int Amax = ExactPos::pow_of(Rat(P.q), pair.i).floor();
    Int Bmax = ExactPos::pow_of(Rat(P.q), pair.j).floor();
    for (Int B = 1; B <= Bmax; ++B) {
        auto a0 = lat.a_rep(B);
        if (!a0) continue;
        Int first = *a0 - lat.step * fdiv(*a0 + Amax, lat.step);
        if (first < -Amax) first += lat.step;
        if (first <= Amax) {
            Int C = (B * P.r - first * P.p) / P.q;
            return normalize(first, B, C);
        }
    }
    return std::nullopt;
}

// rational brackets [lo, hi] of base^e with hi - lo <= 2^{1-prec}
std::pair<Rat, Rat> pow_bounds(const Rat& base, const Rat& e, long prec) {
    if (base <= 0) throw std::domain_error("pow_bounds: nonpositive base");
    Int u = e.get_num(), v = e.get_den();
    Rat b = u >= 0 ? base : 1 / base;
    Int au = abs(u);
    if (!au.fits_ulong_p() || !v.fits_ulong_p()) throw std::overflow_error("pow_bounds");
    Int N = ipow(Int(b.get_num()), au.get_ui()), D = ipow(Int(b.get_den()), au.get_ui());
    Int M;
    mpz_mul_2exp(M.get_mpz_t(), N.get_mpz_t(), (unsigned long)prec * v.get_ui());
    M /= D;
    Int F;
    mpz_root(F.get_mpz_t(), M.get_mpz_t(), v.get_ui());
    Int den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, (unsigned long)prec);
    Rat lo(F, den), hi(F + 1, den);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

} // namespace

Rat RationalPoint::x() const {
    Rat v(p, q);
    v.canonicalize();
    return v;
}

Rat RationalPoint::y() const {
    Rat v(r, q);
    v.canonicalize();
    return v;
}

std::string RationalPoint::str() const {
    return "(" + p.get_str() + "/" + q.get_str() + ", " + r.get_str() + "/" + q.get_str() + ")";
}

RationalPoint make_point(const Rat& x, const Rat& y) {
    Int q = lcm(Int(x.get_den()), Int(y.get_den()));
    return {Int(x.get_num()) * (q / x.get_den()), Int(y.get_num()) * (q / y.get_den()), q, 1};
}

std::optional<RationalPoint> intersect(const Line& L1, const Line& L2) {
    if (L1 == L2) throw std::invalid_argument("intersect: identical lines");
    Int tq = L1.A * L2.B - L2.A * L1.B;
    if (tq == 0) return std::nullopt; // parallel
    Int tp = L1.B * L2.C - L2.B * L1.C;
    Int tr = L1.A * L2.C - L2.A * L1.C;
    Int g = gcd(gcd(tp, tq), tr);
    if (tq < 0) g = -g;
    return RationalPoint{tp / g, tr / g, tq / g, g};
}

Surd theta_trace(const Int& A, const Int& B, const RationalPoint& P, const Surd& theta) {
    if (B == 0) throw std::domain_error("theta_trace: B = 0");
    // r/q + (A/B)(theta - p/q) = (r B + A (q theta - p)) / (q B)
    return (Surd(P.r) * Surd(B) + Surd(A) * (Surd(P.q) * theta - Surd(P.p))) / Surd(P.q * B);
}

std::optional<Int> LatticePlane::a_rep(const Int& B) const {
    if (B % g != 0) return std::nullopt;
    if (step == 1) return Int(0);
    Int pg = ((p / g) % step + step) % step;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), pg.get_mpz_t(), step.get_mpz_t()) == 0)
        throw std::logic_error("a_rep: p/g not invertible mod q/g");
    Int a = ((r % step) * ((B / g) % step) % step) * inv % step;
    return (a % step + step) % step;
}

LatticePlane lattice_plane(const RationalPoint& P) {
    if (P.q <= 0) throw std::domain_error("lattice_plane: q <= 0");
    if (gcd(gcd(P.p, P.r), P.q) != 1) throw std::domain_error("lattice_plane: point not reduced");
    LatticePlane lat{P.p, P.r, P.q, gcd(P.p, P.q), 0, 0};
    lat.step = P.q / lat.g;
    lat.a1 = *lat.a_rep(lat.g);
    return lat;
}

ConcurrencyVerdict concurrency_check(const Pair& pair, long R, long n, long l,
                                     const Rat& lo, const Rat& hi, const Surd& theta) {
    ConcurrencyVerdict v;
    for (const Line& L : lines_crossing(pair, R, n, lo, hi, theta)) {
        auto f = classify(L, pair, R, n);
        if (f && f->l == l) v.lines.push_back(L);
    }
    if (v.lines.size() < 2) return v; // vacuous
    auto P = intersect(v.lines[0], v.lines[1]);
    if (!P) {
        v.kind = ConcurrencyVerdict::Kind::violation;
        v.witness = {v.lines[0], v.lines[1]};
        return v;
    }
    for (std::size_t x = 2; x < v.lines.size(); ++x)
        if (!P->on_line(v.lines[x])) {
            v.kind = ConcurrencyVerdict::Kind::violation;
            v.witness = {v.lines[0], v.lines[1], v.lines[x]};
            return v;
        }
    v.kind = ConcurrencyVerdict::Kind::concurrent;
    v.P = P;
    return v;
}

Line pigeonhole_line(const RationalPoint& P, const Surd& theta, const Pair& pair,
                     const Rat& c_theta) {
    if (!pair.generic()) throw std::domain_error("pigeonhole_line: degenerate pair");
    Surd dist = abs_dist(P, theta);
    ExactPos bound = ExactPos(c_theta) * ExactPos::pow_of(Rat(P.q), -pair.i);
    if (ExactPos::of_surd(dist).cmp(bound) >= 0)
        throw std::domain_error("pigeonhole_line: |q theta - p| >= c q^{-i}");
    auto L = pigeonhole_search(P, pair);
    if (!L) throw std::logic_error("pigeonhole_line: no line in the grid (falsifies the bound)");
    return *L;
}

std::optional<bool> lemma2_check(const Line& L1, const Line& L2, const RationalPoint& P,
                                 const Rat& lo, const Rat& hi, const Pair& pair,
                                 long R, long n, long k, const Rat& tau, const Surd& theta) {
    if (!pair.generic()) throw std::domain_error("lemma2_check: degenerate pair");
    if (R < 2 || n < 1 || k < 0 || tau <= 0) return std::nullopt;
    if (L1 == L2) return std::nullopt;
    if (!P.on_line(L1) || !P.on_line(L2)) return std::nullopt;
    if (hi < lo || hi - lo > tau / qpow(Rat(R), n)) return std::nullopt;
    Rat hcap = Rat(ipow(Int(2), (unsigned long)(k + 1))) * qpow(Rat(R), n - 1);
    if (height(L1, pair).cmp(hcap) >= 0 || height(L2, pair).cmp(hcap) >= 0) return std::nullopt;
    Surd slo(lo), shi(hi);
    for (const Line* L : {&L1, &L2}) {
        Surd Y = (Surd(L->A) * theta + Surd(L->C)) / Surd(L->B);
        if (Y < slo || Y > shi) return std::nullopt;
    }
    Surd dist = abs_dist(P, theta);
    ExactPos rhs = ExactPos::pow_of(Rat(2), pair.i) *
                   ExactPos(tau * Rat(ipow(Int(2), (unsigned long)(k + 1))) / Rat(R)) *
                   ExactPos::pow_of(Rat(P.q), -pair.i);
    return ExactPos::of_surd(dist).cmp(rhs) < 0;
}

ExactPos FigureSpec::delta() const {
    return ExactPos::of_surd(dist) * ExactPos(Rat(R) / (tau * Rat(ipow(Int(2), (unsigned long)(k + 1))))) *
           ExactPos::pow_of(Rat(P.q), pair.i) * ExactPos::pow_of(Rat(2), -pair.i);
}

ExactPos FigureSpec::b_bound(bool sub_l) const {
    ExactPos b = ExactPos::of_surd(c2, pair.j / pair.i);
    return sub_l ? b * c3 : b;
}

ExactPos FigureSpec::a_bound(const Int& B, bool sub_l) const {
    ExactPos a = ExactPos::of_surd(c2, pair.i) * ExactPos::pow_of(Rat(B), pair.i);
    if (!sub_l) return a;
    ExactPos cap = c3.pow(pair.i) * ExactPos::of_surd(c2);
    return cap.cmp(a) < 0 ? cap : a;
}

FigureSpec make_figure(const RationalPoint& P, const Surd& theta, const Pair& pair,
                       long R, long k, const Rat& tau, long l) {
    if (!pair.generic()) throw std::domain_error("make_figure: degenerate pair");
    if (R < 2 || k < 0 || l < 0 || tau <= 0) throw std::domain_error("make_figure: bad arguments");
    FigureSpec f;
    f.pair = pair;
    f.R = R;
    f.k = k;
    f.l = l;
    f.tau = tau;
    f.P = P;
    f.dist = abs_dist(P, theta);
    f.c2 = Surd(Rat(ipow(Int(2), (unsigned long)(k + 1))) * tau / Rat(R)) / f.dist;
    if (l > 0) {
        f.c3 = ExactPos::pow_of(Rat(R), pair.j / pair.i - pair.lambda() * l * (pair.j + 1) / pair.i);
        if (f.c3.cmp(Rat(1)) >= 0) throw std::logic_error("make_figure: c3 >= 1");
    }
    return f;
}

bool figure_membership(const Int& A, const Int& B, const FigureSpec& f, FigureVariant v) {
    bool sub = v == FigureVariant::F_l;
    if (sub && f.l == 0) throw std::domain_error("figure_membership: F_l needs l > 0");
    if (B <= 0) return false;
    if (ExactPos(Rat(B)).cmp(f.b_bound(sub)) >= 0) return false;
    if (A == 0) return true;
    return ExactPos(Rat(abs(A))).cmp(f.a_bound(B, sub)) < 0;
}

std::vector<std::pair<Int, Int>> figure_lattice_points(const FigureSpec& f, FigureVariant v) {
    bool sub = v == FigureVariant::F_l;
    if (sub && f.l == 0) throw std::domain_error("figure_lattice_points: F_l needs l > 0");
    LatticePlane lat = lattice_plane(f.P);
    std::vector<std::pair<Int, Int>> out;
    Int Bmax = strict_floor(f.b_bound(sub));
    for (Int B = 1; B <= Bmax; ++B) {
        auto a0 = lat.a_rep(B);
        if (!a0) continue;
        Int Ahi = strict_floor(f.a_bound(B, sub));
        Int first = *a0 - lat.step * fdiv(*a0 + Ahi, lat.step);
        for (Int A = first; A <= Ahi; A += lat.step)
            if (A >= -Ahi) out.emplace_back(A, B);
    }
    return out;
}

ConeSpec make_cone(const Int& A0, const Int& B0, const RationalPoint& P, const Surd& theta,
                   const Pair& pair, const Rat& c) {
    if (B0 <= 0) throw std::domain_error("make_cone: B0 <= 0");
    if (c <= 0) throw std::domain_error("make_cone: c <= 0");
    ExactPos H0 = ExactPos(Rat(B0)) * max_term(A0, B0, pair);
    // |theta - p/q| = |q theta - p| / q
    ExactPos w = ExactPos(c) * ExactPos(Rat(P.q)) / (H0 * ExactPos::of_surd(abs_dist(P, theta)));
    return {A0, B0, w};
}

bool cone_membership(const Int& A, const Int& B, const ConeSpec& cone) {
    if (B <= 0) return false;
    Int num = A * cone.B0 - cone.A0 * B;
    if (num == 0) return true;
    Rat slope_gap(abs(num), B * cone.B0);
    slope_gap.canonicalize();
    return ExactPos(slope_gap).cmp(cone.w) <= 0;
}

FindL0Result find_L0(const RationalPoint& P, const Rat& tau, const Pair& pair,
                     long R, long n, long k, const Rat& c, const Surd& theta) {
    if (!pair.generic()) throw std::domain_error("find_L0: degenerate pair");
    if (c <= 0 || tau <= 0 || n < 1) throw std::domain_error("find_L0: bad arguments");
    FindL0Result res;
    Rat pow2k = Rat(ipow(Int(2), (unsigned long)k));
    if (tau < c * R / pow2k) {
        res.reason = "tau < c R 2^{-k}";
        return res;
    }
    FigureSpec f = make_figure(P, theta, pair, R, k, tau, 0);
    ExactPos delta = f.delta();
    ExactPos c4 = ExactPos::pow_of(Rat(4), -2 / pair.j) * ExactPos::pow_of(Rat(2), -pair.i);
    ExactPos cap = c4 * ExactPos::pow_of(c * R / (pow2k * tau), 2 / pair.j);
    if (delta.cmp(cap) > 0) {
        res.reason = "delta above the proposition cap";
        return res;
    }
    auto pts = figure_lattice_points(f);
    res.lattice_points = (long)pts.size();
    if (pts.empty()) {
        res.reason = "no lattice points in the figure";
        return res;
    }
    std::vector<ExactPos> hs;
    hs.reserve(pts.size());
    std::size_t minh = 0;
    for (std::size_t x = 0; x < pts.size(); ++x) {
        hs.push_back(ExactPos(Rat(pts[x].second)) * max_term(pts[x].first, pts[x].second, pair));
        if (hs[x].cmp(hs[minh]) < 0) minh = x;
    }
    // case A: a lattice point below the sigma delta q^j B-threshold exists
    ExactPos sigma = ExactPos::pow_of(Rat(2), (Rat(k + 2) + pair.i * pair.j) / pair.j) *
                     ExactPos::pow_of(tau / (Rat(R) * c), 1 / pair.j);
    ExactPos thr = sigma * delta * ExactPos::pow_of(Rat(P.q), pair.j);
    std::vector<std::pair<Int, Int>> cands;
    for (const auto& pt : pts) // pts are B-ascending: first hit has minimal B
        if (ExactPos(Rat(pt.second)).cmp(thr) <= 0) {
            cands.push_back(pt);
            res.case_a = true;
            break;
        }
    if (!res.case_a) {
        // case B: the grid-search line has height <= q^{1+j}
        if (auto L = pigeonhole_search(P, pair)) cands.emplace_back(L->A, L->B);
    }
    cands.push_back(pts[minh]);
    Rat Rn = qpow(Rat(R), n);
    for (const auto& [A0, B0] : cands) {
        ExactPos H0 = ExactPos(Rat(B0)) * max_term(A0, B0, pair);
        if (H0.cmp(Rn) >= 0) continue; // L0 must come from C(n)
        ConeSpec cone = make_cone(A0, B0, P, theta, pair, c);
        bool ok = true;
        for (std::size_t x = 0; x < pts.size(); ++x) {
            if (!cone_membership(pts[x].first, pts[x].second, cone) || hs[x].cmp(H0) < 0) {
                ok = false;
                res.bad_A = pts[x].first;
                res.bad_B = pts[x].second;
                break;
            }
        }
        if (ok) {
            res.status = FindL0Result::Status::certified;
            res.A0 = A0;
            res.B0 = B0;
            res.C0 = (B0 * P.r - A0 * P.p) / P.q;
            return res;
        }
    }
    res.status = FindL0Result::Status::falsified;
    res.reason = "no candidate line certifies the cone and height clauses";
    return res;
}

CountReport count_removed_oracle(const Rat& Jlo, const Rat& Jhi, const Pair& pair,
                                 long R, long n, long l, long k, const RunSet& Iminus,
                                 const Rat& c1, const Rat& c, const Rat& epsilon,
                                 const Surd& theta) {
    if (!pair.generic()) throw std::domain_error("count_removed_oracle: degenerate pair");
    if (Jhi <= Jlo || c1 <= 0 || c <= 0 || epsilon <= 0 || epsilon >= 1)
        throw std::domain_error("count_removed_oracle: bad arguments");
    CountReport rep;
    std::vector<Line> fam;
    for (const Line& L : lines_crossing(pair, R, n, Jlo, Jhi, theta)) {
        auto fi = classify(L, pair, R, n);
        if (fi && fi->l == l && fi->k == k) fam.push_back(L);
    }
    rep.lines = (long)fam.size();
    Rat u = c1 / qpow(Rat(R), n + 1);
    double du = u.get_d();
    Rat alpha = pair.alpha();
    ExactPos per_line_cap = ExactPos(Rat(2)) * ExactPos::pow_of(Rat(R), Rat(n) - alpha);
    std::vector<std::pair<Int, Int>> ranges;
    for (const Line& L : fam) {
        RemovalInterval d = delta_interval(L, pair, c, theta);
        double dc = d.center.to_double(), dw = d.halfwidth.to_double();
        Int kmax = int_find_max((dc + dw) / du, [&](const Int& x) {
            return surd_leq(Surd(Rat(x) * u) - d.center, d.halfwidth);
        });
        Int kmin = int_find_min((dc - dw) / du - 1.0, [&](const Int& x) {
            return surd_leq(d.center - Surd(Rat(x + 1) * u), d.halfwidth);
        });
        if (kmin > kmax) continue;
        Int cnt = Iminus.count_in(kmin, kmax + 1);
        if (cnt > 2 && (ExactPos(Rat(cnt - 2)) * height(L, pair)).cmp(per_line_cap) > 0)
            rep.per_line_ok = false;
        ranges.emplace_back(kmin, kmax + 1);
    }
    std::sort(ranges.begin(), ranges.end());
    Int total = 0;
    for (std::size_t x = 0; x < ranges.size();) {
        Int lo = ranges[x].first, hi = ranges[x].second;
        std::size_t y = x + 1;
        while (y < ranges.size() && ranges[y].first <= hi) {
            hi = std::max(hi, ranges[y].second);
            ++y;
        }
        total += Iminus.count_in(lo, hi);
        x = y;
    }
    rep.removed = total;
    if (total > 0 && ExactPos::pow_of(Rat(R), 1 - epsilon).cmp(Rat(total)) < 0)
        rep.aggregate_ok = false;
    // K = 2 R^{1-alpha} 2^{-k} + 2, d = ceil(R^{1-eps} / K), bracketed exactly
    Rat pow2k = Rat(ipow(Int(2), (unsigned long)k));
    for (long prec = 64; prec <= 8192; prec *= 2) {
        auto Kb = pow_bounds(Rat(R), 1 - alpha, prec);
        auto Xb = pow_bounds(Rat(R), 1 - epsilon, prec);
        rep.K_lo = 2 * Kb.first / pow2k + 2;
        rep.K_hi = 2 * Kb.second / pow2k + 2;
        Int dlo = iceil(Xb.first / rep.K_hi), dhi = iceil(Xb.second / rep.K_lo);
        if (dlo == dhi) {
            rep.d = dlo;
            break;
        }
        if (prec == 8192) throw std::logic_error("count_removed_oracle: d undecided");
    }
    // sub-window classes: <=1 vs >=2 crossing lines per cell
    std::map<Int, long> cells;
    Surd scale = Surd(Rat(rep.d) / (Jhi - Jlo));
    for (const Line& L : fam) {
        Surd Y = (Surd(L.A) * theta + Surd(L.C)) / Surd(L.B);
        Int idx = ((Y - Surd(Jlo)) * scale).floor();
        if (idx >= rep.d) idx = rep.d - 1; // trace exactly at the right endpoint
        ++cells[idx];
    }
    for (const auto& [idx, cnt] : cells) {
        (void)idx;
        if (cnt >= 2) {
            ++rep.type2;
            rep.mstar = std::max(rep.mstar, cnt);
        } else {
            ++rep.type1;
        }
    }
    return rep;
}

} // namespace badweave
