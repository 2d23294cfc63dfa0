#include "badweave/lines.hpp"

#include "badweave/search.hpp"

#include <cmath>
#include <cstdlib>
#include <thread>

namespace badweave {

Pair Pair::make(const Rat& i, const Rat& j) {
    if (i + j != 1) throw std::domain_error("Pair: i + j must be 1");
    Pair p;
    p.i = i;
    p.j = j;
    if (i == 0)
        p.kind = Kind::zero_one;
    else if (j == 0)
        p.kind = Kind::one_zero;
    else if (i > 0 && j > 0)
        p.kind = Kind::generic;
    else
        throw std::domain_error("Pair: i, j must be nonnegative");
    return p;
}

std::string Pair::str() const { return i.get_str() + "," + j.get_str(); }

Line normalize(Int A, Int B, Int C) {
    if (B == 0) throw std::domain_error("vertical line excluded by theta in Bad(i)");
    if (A == 0 && B == 0) throw std::domain_error("normalize: (A,B) = (0,0)");
    if (B < 0) { A = -A; B = -B; C = -C; }
    Int g = gcd(gcd(A, B), C);
    if (g > 1) { A /= g; B /= g; C /= g; }
    return {A, B, C};
}

ExactPos max_term(const Int& A, const Int& B, const Pair& pair) {
    if (!pair.generic()) throw std::domain_error("max_term: degenerate pair");
    if (A == 0 && B == 0) throw std::domain_error("max_term: (0,0)");
    Int absA = abs(A), absB = abs(B);
    if (absA == 0) return ExactPos::pow_of(Rat(absB), 1 / pair.j);
    if (absB == 0) return ExactPos::pow_of(Rat(absA), 1 / pair.i);
    ExactPos ta = ExactPos::pow_of(Rat(absA), 1 / pair.i);
    ExactPos tb = ExactPos::pow_of(Rat(absB), 1 / pair.j);
    return ta.cmp(tb) >= 0 ? ta : tb;
}

ExactPos height(const Line& L, const Pair& pair) {
    return ExactPos(Rat(L.B)) * max_term(L.A, L.B, pair);
}

std::pair<Int, Rat> height_power(const Line& L, const Pair& pair) {
    Int absA = abs(L.A);
    Rat e; // H = B * T^e with T the winning base
    Int base;
    if (absA != 0 && ExactPos::pow_of(Rat(absA), 1 / pair.i).cmp(ExactPos::pow_of(Rat(L.B), 1 / pair.j)) >= 0) {
        e = 1 / pair.i;
        base = absA;
    } else {
        e = 1 / pair.j;
        base = L.B;
    }
    Int s = e.get_den();
    Rat hs = qpow(Rat(L.B), s) * qpow(Rat(base), Int(e.get_num()) * (s / Int(e.get_den())));
    return {s, hs};
}

RemovalInterval delta_interval(const Line& L, const Pair& pair, const Rat& c, const Surd& theta) {
    Surd center = (Surd(L.A) * theta + Surd(L.C)) / Surd(L.B);
    return {center, ExactPos(c) / height(L, pair)};
}

std::optional<FamilyIndex> classify(const Line& L, const Pair& pair, long R, long n) {
    if (R < 2 || n < 1) throw std::domain_error("classify: need R >= 2, n >= 1");
    ExactPos H = height(L, pair);
    Rat Rn = qpow(Rat(R), n), Rn1 = qpow(Rat(R), n - 1);
    if (H.cmp(Rn1) < 0 || H.cmp(Rn) >= 0) return std::nullopt;
    // B-band: R^{-λ(l+1)} R^{nj/(j+1)} <= B < R^{-λl} R^{nj/(j+1)}
    Rat lam = pair.lambda();
    Rat x = Rat(n) * pair.j / (pair.j + 1); // exponent of the band top
    long l = 0;
    ExactPos B(Rat(L.B));
    while (B.cmp(ExactPos::pow_of(Rat(R), x - lam * (l + 1))) < 0) {
        ++l;
        if (l > 4 * n + 8) throw std::logic_error("classify: runaway B-band index");
    }
    if (B.cmp(ExactPos::pow_of(Rat(R), x - lam * l)) >= 0) return std::nullopt; // B >= band top: no band
    if (l > 0) {
        // algebraic consequence of band membership: the max is the A-term
        if (L.A == 0 || ExactPos::pow_of(Rat(abs(L.A)), 1 / pair.i).cmp(ExactPos::pow_of(Rat(L.B), 1 / pair.j)) < 0)
            throw std::logic_error("classify: l > 0 but height not attained by |A|^{1/i}");
    }
    long k = 0;
    while (H.cmp(Rat(qpow(Rat(2), k + 1) * Rn1)) >= 0) {
        ++k;
        if (qpow(Rat(2), k) >= Rat(R)) throw std::logic_error("classify: runaway dyadic index");
    }
    return FamilyIndex{n, l, k};
}

namespace {

void emit_lines_for_B(const Int& B, const Pair& pair, long R, long n,
                      const Rat& lo, const Rat& hi, const Rat& c, const Surd& theta,
                      std::vector<Line>& out) {
    Rat Rn = qpow(Rat(R), n), Rn1 = qpow(Rat(R), n - 1);
    // |A| < (R^n / B)^i
    Rat rb = Rn / B;
    Int Amax = ExactPos::pow_of(rb, pair.i).floor();
    while (Amax > 0 && ExactPos::pow_of(Rat(Amax), 1 / pair.i).cmp(rb) >= 0) --Amax;
    double th = theta.to_double(), dlo = lo.get_d(), dhi = hi.get_d(), dB = B.get_d();
    for (Int A = -Amax; A <= Amax; ++A) {
        ExactPos H = ExactPos(Rat(B)) * max_term(A, B, pair);
        if (H.cmp(Rn1) < 0) continue; // height below the family floor
        ExactPos Bw = ExactPos(Rat(B) * c) / H;
        double dBw = Bw.to_double(), dA = A.get_d();
        // Δ(L) ∩ [lo,hi] ≠ ∅  ⇔  B·lo − Aθ − C ≤ Bw  and  Aθ + C − B·hi ≤ Bw
        Surd Alin = Surd(A) * theta;
        Int Cmin = int_find_min(dB * dlo - dA * th - dBw, [&](const Int& C) {
            return surd_leq(Surd(Rat(B) * lo) - Alin - Surd(C), Bw);
        });
        Int Cmax = int_find_max(dB * dhi - dA * th + dBw, [&](const Int& C) {
            return surd_leq(Alin + Surd(C) - Surd(Rat(B) * hi), Bw);
        });
        for (Int C = Cmin; C <= Cmax; ++C) {
            if (gcd(gcd(A, B), C) != 1) continue;
            out.push_back(Line{A, B, C});
        }
    }
}

long env_threads() {
    const char* e = std::getenv("BADWEAVE_THREADS");
    if (!e) return 1;
    long v = std::atol(e);
    return v >= 1 ? v : 1;
}

} // namespace

std::vector<Line> enumerate_lines(const Pair& pair, long R, long n,
                                  const Rat& lo, const Rat& hi,
                                  const Rat& c, const Surd& theta) {
    if (!pair.generic()) throw std::domain_error("enumerate_lines: degenerate pair");
    if (n < 1) return {};
    if (c > Rat(1, 2)) throw std::domain_error("enumerate_lines: c must be <= 1/2 (Remark 1 C-count)");
    // 1 <= B < R^{nj/(j+1)}  ⇔  B^{(j+1)/j} < R^n
    Rat Rn = qpow(Rat(R), n);
    Rat eB = (pair.j + 1) / pair.j;
    std::vector<Int> Bs;
    for (Int B = 1; ExactPos::pow_of(Rat(B), eB).cmp(Rn) < 0; ++B) Bs.push_back(B);
    long nt = env_threads();
    std::vector<std::vector<Line>> per_b(Bs.size());
    if (nt <= 1 || Bs.size() <= 1) {
        for (size_t x = 0; x < Bs.size(); ++x)
            emit_lines_for_B(Bs[x], pair, R, n, lo, hi, c, theta, per_b[x]);
    } else {
        std::vector<std::thread> workers;
        for (long w = 0; w < nt; ++w)
            workers.emplace_back([&, w] {
                for (size_t x = w; x < Bs.size(); x += nt)
                    emit_lines_for_B(Bs[x], pair, R, n, lo, hi, c, theta, per_b[x]);
            });
        for (auto& t : workers) t.join();
    }
    std::vector<Line> out;
    for (auto& v : per_b) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<Rat> enumerate_rationals(long R, long n, const Rat& lo, const Rat& hi, const Rat& c) {
    std::vector<Rat> out;
    if (n < 1) return out; // C(0) is empty
    Rat Rn = qpow(Rat(R), n), Rn1 = qpow(Rat(R), n - 1);
    // R^{n-1} <= q^2 < R^n
    Int q = isqrt(iceil(Rn1));
    while (Rat(q * q) < Rn1) ++q;
    for (; Rat(q * q) < Rn; ++q) {
        Rat w = c / Rat(q * q);
        Int pmin = iceil((lo - w) * q), pmax = ifloor((hi + w) * q);
        for (Int p = pmin; p <= pmax; ++p) {
            if (gcd(p, q) != 1) continue;
            Rat v(p, q);
            v.canonicalize();
            out.push_back(v);
        }
    }
    return out;
}

} // namespace badweave
