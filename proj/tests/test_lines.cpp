#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "badweave/lines.hpp"

#include <random>
#include <set>

using namespace badweave;

namespace {

const Surd kTheta = parse_theta("sqrt(2)"); // sqrt(2) - 1

// independent naive oracle: scan a generous (A,B,C) box, keep lines in the
// height range whose Δ meets [lo,hi]; height and intersection tests are done
// by explicit squaring, not via the library comparison path
std::set<std::array<long, 3>> naive_scan_half(const Pair& pair, long R, long n,
                                              const Rat& lo, const Rat& hi, const Rat& c,
                                              const Surd& theta) {
    // only supports 1/i, 1/j with denominator <= 2 (covers (1/2,1/2), (1/3,2/3))
    std::set<std::array<long, 3>> out;
    Rat Rn = qpow(Rat(R), n), Rn1 = qpow(Rat(R), n - 1);
    auto powr = [](const Rat& base, const Rat& e) { // base >= 0, e >= 0 with den | 2 -> base^{2e}
        return qpow(base, Int(e.get_num() * 2 / e.get_den()));
    };
    for (long B = 1; B <= 4096; ++B) {
        Rat tB = powr(Rat(B), 1 / pair.j); // |B|^{2/j}
        if (Rat(B * B) * tB >= Rn * Rn) break; // H^2 >= B^2 |B|^{2/j}
        for (long A = -4096; A <= 4096; ++A) {
            Rat tA = A == 0 ? Rat(0) : powr(Rat(std::abs(A)), 1 / pair.i);
            Rat H2 = Rat(B * B) * (tA > tB ? tA : tB); // H^2, rational
            if (H2 < Rn1 * Rn1 || H2 >= Rn * Rn) continue;
            for (long C = -2 * B - std::abs(A) - 2; C <= 2 * B + std::abs(A) + 2; ++C) {
                long g = std::gcd(std::gcd(std::abs(A), B), std::abs(C));
                if (g != 1) continue;
                // Δ ∩ [lo,hi] ≠ ∅ ⇔ (B·lo − Aθ − C) ≤ B·c/H and (Aθ + C − B·hi) ≤ B·c/H
                // compare s ≤ Bc/H via s ≥ 0, s^2·H^2 ≤ B^2 c^2 (pure rational/surd)
                auto leq_w = [&](const Surd& s) {
                    if (s.sgn() <= 0) return true;
                    Surd s2 = s * s; // in Q(sqrt 2): compare s^2 * H^2 <= B^2 c^2
                    return (s2 * Surd(H2)) <= Surd(Rat(B * B) * c * c);
                };
                Surd Ath = Surd(Int(A)) * theta;
                if (!leq_w(Surd(Rat(B) * lo) - Ath - Surd(Int(C)))) continue;
                if (!leq_w(Ath + Surd(Int(C)) - Surd(Rat(B) * hi))) continue;
                out.insert({A, B, C});
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("normalize pinned examples") {
    CHECK(normalize(2, 4, 6) == (Line{1, 2, 3}));
    CHECK(normalize(-1, -2, -3) == (Line{1, 2, 3}));
    CHECK(normalize(3, -6, 9) == (Line{-1, 2, -3}));
    CHECK_THROWS(normalize(1, 0, 5));
}

TEST_CASE("normalize idempotent + removal interval containment") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> v(-30, 30), t(1, 5);
    Pair half = Pair::make(Rat(1, 2), Rat(1, 2));
    Rat c(1, 100);
    for (int it = 0; it < 500; ++it) {
        long A = v(rng), B = v(rng), C = v(rng);
        if (B == 0) continue;
        Line L = normalize(A, B, C);
        Line L2 = normalize(L.A, L.B, L.C);
        CHECK(L == L2);
        // Δ(normalize(tA,tB,tC)) ⊇ Δ(A,B,C): same center, height scales up
        long s = t(rng);
        Line Ls = normalize(s * A, s * B, s * C);
        auto d1 = delta_interval(Ls, half, c, kTheta);
        Line raw{Int(A), Int(B), Int(C)}; // unnormalized triple, for H only
        if (raw.B < 0) { raw.A = -raw.A; raw.B = -raw.B; raw.C = -raw.C; }
        ExactPos Hraw = ExactPos(Rat(raw.B)) * max_term(raw.A, raw.B, half);
        ExactPos Hnorm = height(Ls, half);
        CHECK(Hnorm.cmp(Hraw) <= 0); // wider or equal Δ after normalization
    }
}

TEST_CASE("height pinned examples") {
    Pair half = Pair::make(Rat(1, 2), Rat(1, 2));
    auto as_rat = [&](const Line& L, const Pair& p) {
        auto [s, hs] = height_power(L, p);
        REQUIRE(s == 1);
        return hs;
    };
    CHECK(as_rat(Line{-2, 1, 0}, half) == 4);
    CHECK(as_rat(Line{0, 1, 0}, half) == 1);
    Pair thirds = Pair::make(Rat(1, 3), Rat(2, 3));
    CHECK(as_rat(Line{2, 3, 0}, thirds) == 24); // 3·max{2^3, 3^{3/2}} = 24
    CHECK(height(Line{2, 3, 0}, thirds).cmp(Rat(24)) == 0);
}

TEST_CASE("delta_interval pinned examples") {
    Pair half = Pair::make(Rat(1, 2), Rat(1, 2));
    Rat c(1, 100);
    auto d = delta_interval(Line{-2, 1, 1}, half, c, kTheta);
    CHECK(d.center == (Surd(Int(3)) - Surd(Int(2)) * Surd::sqrt_of(2))); // 3 - 2√2
    CHECK(d.halfwidth.cmp(Rat(1, 400)) == 0);                           // length 1/200
    auto d0 = delta_interval(Line{0, 1, 0}, half, c, kTheta);
    CHECK(d0.center.sgn() == 0);
    CHECK(d0.halfwidth.cmp(c) == 0);
    auto d1 = delta_interval(Line{1, 1, 0}, half, c, kTheta);
    CHECK(d1.center == kTheta);
    CHECK(d1.halfwidth.cmp(c) == 0);
}

TEST_CASE("classify pinned examples") {
    Pair half = Pair::make(Rat(1, 2), Rat(1, 2));
    auto f = classify(Line{10, 1, 0}, half, 10, 3);
    REQUIRE(f.has_value());
    CHECK(f->n == 3);
    CHECK(f->l == 0);
    CHECK(f->k == 0);
    CHECK(!classify(Line{0, 1, 0}, half, 10, 2).has_value()); // H = 1 < R^{n-1}
    auto g = classify(Line{1, 7, 0}, half, 10, 3); // H = 343, k = 1
    REQUIRE(g.has_value());
    CHECK(g->l == 0);
    CHECK(g->k == 1);
}

TEST_CASE("classify inequalities hold on all enumerated lines, n <= 4") {
    Pair half = Pair::make(Rat(1, 2), Rat(1, 2));
    Pair thirds = Pair::make(Rat(1, 3), Rat(2, 3));
    Rat c(1, 1 << 22);
    for (const Pair& pair : {half, thirds}) {
        for (long n = 1; n <= 4; ++n) {
            auto lines = enumerate_lines(pair, 16, n, Rat(0), Rat(1), c, kTheta);
            for (const Line& L : lines) {
                auto fam = classify(L, pair, 16, n);
                REQUIRE(fam.has_value());
                ExactPos H = height(L, pair);
                CHECK(H.cmp(qpow(Rat(16), n - 1)) >= 0);
                CHECK(H.cmp(qpow(Rat(16), n)) < 0);
                CHECK(H.cmp(Rat(qpow(Rat(2), fam->k) * qpow(Rat(16), n - 1))) >= 0);
                CHECK(H.cmp(Rat(qpow(Rat(2), fam->k + 1) * qpow(Rat(16), n - 1))) < 0);
                // B-band inequalities
                Rat x = Rat(n) * pair.j / (pair.j + 1);
                Rat lam = pair.lambda();
                CHECK(ExactPos(Rat(L.B)).cmp(ExactPos::pow_of(Rat(16), x - lam * fam->l)) < 0);
                CHECK(ExactPos(Rat(L.B)).cmp(ExactPos::pow_of(Rat(16), x - lam * (fam->l + 1))) >= 0);
            }
        }
    }
}

TEST_CASE("enumerate_lines equals the naive full scan (R = 16, n <= 3)") {
    Pair half = Pair::make(Rat(1, 2), Rat(1, 2));
    Pair thirds = Pair::make(Rat(1, 3), Rat(2, 3));
    Rat c(1, 1 << 10);
    std::mt19937_64 rng(5);
    for (const Pair& pair : {half, thirds}) {
        for (long n = 1; n <= 3; ++n) {
            // a couple of windows incl. full Θ
            std::vector<std::pair<Rat, Rat>> windows = {{Rat(0), Rat(1)}, {Rat(1, 7), Rat(1, 3)}};
            for (auto& [lo, hi] : windows) {
                auto got = enumerate_lines(pair, 16, n, lo, hi, c, kTheta);
                std::set<std::array<long, 3>> got_set;
                for (auto& L : got)
                    got_set.insert({(long)L.A.get_si(), (long)L.B.get_si(), (long)L.C.get_si()});
                CHECK(got.size() == got_set.size()); // no duplicates
                auto want = naive_scan_half(pair, 16, n, lo, hi, c, kTheta);
                CHECK(got_set == want);
            }
        }
    }
}

TEST_CASE("enumerate_lines examples: membership and B-range at n = 1") {
    Pair half = Pair::make(Rat(1, 2), Rat(1, 2));
    Rat c(1, 1 << 22);
    auto lines = enumerate_lines(half, 16, 1, Rat(0), Rat(1), c, kTheta);
    bool has010 = false;
    for (auto& L : lines) {
        CHECK(L.B < 3); // B = 3 would give H >= 27 > 16
        if (L == Line{0, 1, 0}) has010 = true;
    }
    CHECK(has010);
    // ordering by (B, A, C)
    for (size_t x = 1; x < lines.size(); ++x) {
        auto &a = lines[x - 1], &b = lines[x];
        bool ordered = a.B < b.B || (a.B == b.B && (a.A < b.A || (a.A == b.A && a.C < b.C)));
        CHECK(ordered);
    }
}

TEST_CASE("enumerate_rationals") {
    Rat c(1, 1 << 23);
    auto r1 = enumerate_rationals(16, 1, Rat(0), Rat(1), c);
    std::set<Int> qs;
    bool has_half = false;
    for (auto& v : r1) {
        qs.insert(Int(v.get_den()));
        if (v == Rat(1, 2)) has_half = true;
    }
    CHECK(qs == std::set<Int>{1, 2, 3});
    CHECK(has_half);
    CHECK(enumerate_rationals(16, 0, Rat(0), Rat(1), c).empty());

    // separation: a window shorter than R^{-n} meets at most one Δ(p/q)
    std::mt19937_64 rng(99);
    for (int t = 0; t < 100; ++t) {
        long n = 1 + (long)(rng() % 3);
        Rat Rn = qpow(Rat(16), n);
        Rat lo(rng() % 100000, 100001);
        lo.canonicalize();
        Rat hi = lo + 1 / (2 * Rn);
        auto v = enumerate_rationals(16, n, lo, hi, c);
        CHECK(v.size() <= 1);
    }
}
