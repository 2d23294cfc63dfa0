#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "badweave/construction.hpp"
#include "badweave/transference.hpp"

#include <random>

using namespace badweave;

namespace {

const Surd kTheta = parse_theta("sqrt(2)"); // sqrt(2) - 1
const Pair kHalves = Pair::make(Rat(1, 2), Rat(1, 2));
const Pair kThirds = Pair::make(Rat(1, 3), Rat(2, 3));

// ||q x|| for rational x, pure mpq arithmetic
Rat rat_dist(const Rat& x, const Int& q) {
    Rat v = Rat(q) * x;
    Rat f = v - Rat(Int(v.get_num() / v.get_den()) - (v < 0 && v.get_den() != 1 ? 1 : 0));
    // f in [0,1); reduce to [0,1/2]
    return f <= Rat(1, 2) ? f : 1 - f;
}

Rat mkrat(long n, long d) {
    Rat r(n, d);
    r.canonicalize();
    return r;
}

Rat random_rat(std::mt19937_64& rng, long max_den) {
    std::uniform_int_distribution<long> den(1, max_den);
    long d = den(rng);
    std::uniform_int_distribution<long> num(0, d - 1);
    return mkrat(num(rng), d);
}

// smallest-|a|+|b| pair with a x + b y an integer (rational x, y), b >= 0
std::pair<Int, Int> planted_dual_witness(const Rat& x, const Rat& y) {
    for (long s = 1;; ++s) {
        for (long a = -s; a <= s; ++a) {
            long b = s - std::abs(a);
            if (b == 0 && a < 0) continue;
            Rat v = a * x + b * y;
            if (v.get_den() == 1) return {Int(a), Int(b)};
        }
    }
}

} // namespace

TEST_CASE("check_simultaneous: pinned cases") {
    // the origin dies at q = 1 for every c > 0
    auto w = check_simultaneous(Surd(0), Surd(0), kHalves, Rat(1, 10), 1);
    REQUIRE(w.has_value());
    CHECK(w->q == 1);
    CHECK(w->dx.sgn() == 0);
    CHECK(w->dy.sgn() == 0);

    // two badly approximable surds survive a deep scan at a small constant
    Surd y3 = parse_theta("sqrt(3)");
    CHECK(!check_simultaneous(kTheta, y3, kHalves, Rat(1, 1000000), 100).has_value());

    // rational coordinates are killed no later than their denominator
    auto w7 = check_simultaneous(Surd(Rat(1, 7)), Surd(Rat(1, 7)), kHalves, Rat(1, 100), 7);
    REQUIRE(w7.has_value());
    CHECK(w7->q <= 7);

    // degenerate (0,1): the x coordinate is ignored entirely
    Pair p01 = Pair::make(Rat(0), Rat(1));
    CHECK(!check_simultaneous(Surd(0), kTheta, p01, Rat(1, 10), 50).has_value());
    Pair p10 = Pair::make(Rat(1), Rat(0));
    auto wz = check_simultaneous(Surd(0), kTheta, p10, Rat(1, 10), 50);
    REQUIRE(wz.has_value());
    CHECK(wz->q == 1);
}

TEST_CASE("check_simultaneous: rational brute-force oracle") {
    std::mt19937_64 rng(11);
    Rat c(1, 50);
    Int Q(200);
    for (int iter = 0; iter < 40; ++iter) {
        Rat x = random_rat(rng, 30), y = random_rat(rng, 30);
        // halves: max{dx^2, dy^2} > c/q decided in pure rational arithmetic
        std::optional<Int> expect;
        for (Int q = 1; q <= Q && !expect; ++q) {
            Rat dx = rat_dist(x, q), dy = rat_dist(y, q);
            if (!(dx * dx > c / Rat(q)) && !(dy * dy > c / Rat(q))) expect = q;
        }
        auto got = check_simultaneous(Surd(x), Surd(y), kHalves, c, Q);
        REQUIRE(got.has_value() == expect.has_value());
        if (expect) {
            CHECK(got->q == *expect);
            CHECK(got->dx.to_rat() == rat_dist(x, *expect));
            CHECK(got->dy.to_rat() == rat_dist(y, *expect));
        }
    }
}

TEST_CASE("check_dual: pinned cases") {
    // the origin dies in the first shell
    auto w0 = check_dual(Surd(0), Surd(0), kHalves, Rat(1, 10), Rat(100));
    REQUIRE(w0.has_value());
    CHECK(w0->A == 0);
    CHECK(w0->B == 1);
    CHECK(w0->dist.sgn() == 0);

    // B = 0 witness: a rational x is killed by (den(x), 0)
    auto wb = check_dual(Surd(Rat(1, 3)), kTheta, kHalves, Rat(1, 100), Rat(100));
    REQUIRE(wb.has_value());
    CHECK(wb->A == 3);
    CHECK(wb->B == 0);
    CHECK(wb->dist.sgn() == 0);

    // bounded pass: (sqrt(2)-1, 1/2) survives the max-term <= 1 shell at c = 1/20
    CHECK(!check_dual(kTheta, Surd(Rat(1, 2)), kHalves, Rat(1, 20), Rat(1)).has_value());

    // Hmax boundary is inclusive: (2,0) has max-term exactly 4
    auto wh = check_dual(Surd(Rat(1, 2)), kTheta, kHalves, Rat(1, 20), Rat(4));
    REQUIRE(wh.has_value());
    CHECK(wh->A == 2);
    CHECK(wh->B == 0);
    CHECK(!check_dual(Surd(Rat(1, 2)), kTheta, kHalves, Rat(1, 20), Rat(3)).has_value());
}

TEST_CASE("check_dual: rational brute-force oracle") {
    std::mt19937_64 rng(13);
    Rat c(1, 30), Hmax(25); // halves: |A|, |B| <= 5
    for (int iter = 0; iter < 40; ++iter) {
        Rat x = random_rat(rng, 12), y = random_rat(rng, 12);
        // replay the documented scan order with pure rational arithmetic
        std::optional<std::pair<long, long>> expect;
        for (long s = 1; s <= 10 && !expect; ++s) {
            for (long A = -std::min(s, 5L); A <= std::min(s, 5L) && !expect; ++A) {
                long B = s - std::labs(A);
                if (B > 5 || (B == 0 && A < 0)) continue;
                Rat d = rat_dist(A * x - B * y, 1);
                long m = std::max(A * A, B * B);
                if (!(Rat(m) * d > c)) expect = std::make_pair(A, B);
            }
        }
        auto got = check_dual(Surd(x), Surd(y), kHalves, c, Hmax);
        REQUIRE(got.has_value() == expect.has_value());
        if (expect) {
            CHECK(got->A == expect->first);
            CHECK(got->B == expect->second);
        }
    }
}

TEST_CASE("check_dual: constructed point passes at the construction scale") {
    Params prm = derive_params({kHalves}, "sqrt(2)", 16);
    auto run = run_construction(prm, 2);
    REQUIRE(run.first_empty == -1);
    PointCertificate cert = extract_point(run);
    CHECK(!check_dual(kTheta, Surd(cert.midpoint), kHalves, prm.pairs[0].ct, Rat(16))
               .has_value());
}

TEST_CASE("transfer_bounds: pinned instances") {
    // m=1, n=2 with C = c q0^{-1/2}, X = q0: D1 = 2c/q0, U = 2 sqrt(q0)
    Rat c(1, 10);
    Int q0(5);
    TransferenceProblem prob;
    prob.m = 1;
    prob.n = 2;
    prob.theta = {{Surd(Rat(1, 5))}, {Surd(Rat(2, 5))}};
    prob.C = {ExactPos(c) * ExactPos::pow_of(Rat(5), Rat(-1, 2)),
              ExactPos(c) * ExactPos::pow_of(Rat(5), Rat(-1, 2))};
    prob.X = {ExactPos(Rat(5))};
    prob.q = {q0};
    auto b = transfer_bounds(prob);
    CHECK(b.d_root == ExactPos(Rat(1, 10)));
    REQUIRE(b.D.size() == 1);
    REQUIRE(b.U.size() == 2);
    CHECK(b.D[0] == ExactPos(Rat(1, 25)));
    CHECK(b.U[0] == ExactPos(Rat(2)) * ExactPos::pow_of(Rat(5), Rat(1, 2)));
    CHECK(b.U[1] == b.U[0]);

    // l = 2 degenerates to D1 = X1^{-1} d, U1 = C1^{-1} d
    TransferenceProblem one;
    one.m = one.n = 1;
    one.theta = {{Surd(0)}};
    one.C = {ExactPos(Rat(1, 3))};
    one.X = {ExactPos(Rat(2))};
    one.q = {1};
    auto b1 = transfer_bounds(one);
    CHECK(b1.D[0] == ExactPos(Rat(1, 3)));
    CHECK(b1.U[0] == ExactPos(Rat(2)));

    // hypothesis failure and primal violations
    one.C = {ExactPos(Rat(1))};
    one.X = {ExactPos(Rat(1))};
    CHECK_THROWS_AS(transfer_bounds(one), std::domain_error);
    one.C = {ExactPos(Rat(1, 3))};
    one.X = {ExactPos(Rat(2))};
    one.q = {3};
    CHECK_THROWS_AS(transfer_bounds(one), std::invalid_argument);
    one.q = {1};
    one.theta = {{Surd(Rat(1, 2))}}; // ||1/2|| = 1/2 > 1/3
    CHECK_THROWS_AS(transfer_bounds(one), std::invalid_argument);
}

TEST_CASE("transfer_bounds: product symmetry") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 20; ++iter) {
        TransferenceProblem prob;
        prob.m = 1 + (long)(rng() % 2);
        prob.n = 1 + (long)(rng() % 2);
        std::vector<Int> q;
        for (long s = 0; s < prob.m; ++s) q.push_back(Int(1 + (long)(rng() % 5)));
        prob.theta.assign(prob.n, {});
        for (long t = 0; t < prob.n; ++t)
            for (long s = 0; s < prob.m; ++s)
                prob.theta[t].push_back(Surd(mkrat((long)(rng() % 7), q[s].get_si())));
        for (long t = 0; t < prob.n; ++t) prob.C.push_back(ExactPos(Rat(1, 100 + (long)(rng() % 50))));
        for (long s = 0; s < prob.m; ++s) prob.X.push_back(ExactPos(Rat(q[s])));
        prob.q = q;
        auto b = transfer_bounds(prob);
        ExactPos want = ExactPos(prob.l() - 1) * b.d_root;
        for (long s = 0; s < prob.m; ++s) CHECK(b.D[s] * prob.X[s] == want);
        for (long t = 0; t < prob.n; ++t) CHECK(b.U[t] * prob.C[t] == want);
    }
}

TEST_CASE("transfer_witness_search: pinned and sweep") {
    // zero grid: the first nonzero shell vector works
    TransferenceProblem prob;
    prob.m = 1;
    prob.n = 2;
    prob.theta = {{Surd(0)}, {Surd(0)}};
    prob.C = {ExactPos(Rat(1, 10)), ExactPos(Rat(1, 10))};
    prob.X = {ExactPos(Rat(4))};
    prob.q = {4};
    auto b = transfer_bounds(prob);
    auto r = transfer_witness_search(prob, b);
    REQUIRE(r.status == TransferResult::Status::found);
    CHECK(abs(r.u[0]) + abs(r.u[1]) == 1);

    // oversized box reports not_searched instead of scanning
    TransferenceProblem big;
    big.m = big.n = 1;
    big.theta = {{Surd(Rat(1, 1000000000))}};
    big.C = {ExactPos(Rat(1, 1000000000))};
    big.X = {ExactPos(Rat(100000000))};
    big.q = {1};
    auto bb = transfer_bounds(big);
    CHECK(transfer_witness_search(big, bb).status == TransferResult::Status::not_searched);

    // random soluble instances: always found, bounds re-verified independently
    std::mt19937_64 rng(19);
    int found = 0;
    for (int iter = 0; iter < 100; ++iter) {
        TransferenceProblem p;
        p.m = 1 + (long)(rng() % 2);
        p.n = 1 + (long)(rng() % 2);
        std::vector<Int> q;
        for (long s = 0; s < p.m; ++s) q.push_back(Int(1 + (long)(rng() % 5)));
        p.theta.assign(p.n, {});
        for (long t = 0; t < p.n; ++t)
            for (long s = 0; s < p.m; ++s)
                p.theta[t].push_back(Surd(mkrat((long)(rng() % 9), q[s].get_si())));
        for (long t = 0; t < p.n; ++t) p.C.push_back(ExactPos(Rat(1, 150 + (long)(rng() % 150))));
        for (long s = 0; s < p.m; ++s) p.X.push_back(ExactPos(Rat(q[s])));
        p.q = q;
        auto bounds = transfer_bounds(p);
        auto res = transfer_witness_search(p, bounds);
        REQUIRE(res.status == TransferResult::Status::found);
        ++found;
        bool nonzero = false;
        for (long t = 0; t < p.n; ++t) {
            if (res.u[t] != 0) {
                nonzero = true;
                CHECK(ExactPos(Rat(abs(res.u[t]))) <= bounds.U[t]);
            }
        }
        CHECK(nonzero);
        for (long s = 0; s < p.m; ++s) {
            Rat M(0);
            for (long t = 0; t < p.n; ++t) M += p.theta[t][s].to_rat() * Rat(res.u[t]);
            Rat d = rat_dist(M, 1);
            if (d != 0) CHECK(ExactPos(d) <= bounds.D[s]);
        }
    }
    CHECK(found == 100);
}

TEST_CASE("dual_from_simultaneous: constants and pinned runs") {
    // rational point: lcm of the denominators is a zero-distance witness
    Rat c(1, 100);
    auto red = dual_from_simultaneous(Int(21), c, kHalves, Surd(Rat(2, 3)), Surd(Rat(3, 7)));
    CHECK(red.constant == ExactPos(Rat(32) * c));
    CHECK(!(red.u1 == 0 && red.u2 == 0));
    Rat v = Rat(red.u1) * Rat(2, 3) + Rat(red.u2) * Rat(3, 7);
    Rat d = rat_dist(v, 1);
    Int m = abs(red.u1) >= abs(red.u2) ? Int(abs(red.u1)) : Int(abs(red.u2));
    CHECK(Rat(m * m) * d <= Rat(32) * c); // independent halves recheck
    CHECK(red.dist.to_rat() == d);

    // rational x with irrational y at the denominator witness
    auto red2 = dual_from_simultaneous(Int(7), Rat(3, 10), kHalves, Surd(Rat(3, 7)), kTheta);
    Surd v2 = kTheta * Surd(red2.u2) + Surd(Rat(3, 7)) * Surd(red2.u1);
    CHECK(nearest_int_dist(v2, 1).dist == red2.dist);
    if (red2.dist.sgn() != 0)
        CHECK(max_term(red2.u1, red2.u2, kHalves) * ExactPos::of_surd(red2.dist) <=
              ExactPos(Rat(32) * Rat(3, 10)));

    // (1/3,2/3): constant is 2^{11/2} c, bracketed between 45c and 46c
    auto red3 = dual_from_simultaneous(Int(10), c, kThirds, Surd(Rat(3, 10)), Surd(Rat(7, 10)));
    CHECK(red3.constant == ExactPos::pow_of(Rat(2), Rat(11, 2)) * ExactPos(c));
    CHECK(red3.constant > ExactPos(Rat(45) * c));
    CHECK(red3.constant < ExactPos(Rat(46) * c));

    // preconditions
    CHECK_THROWS_AS(dual_from_simultaneous(Int(1), Rat(1, 10), kHalves, kTheta, kTheta),
                    std::invalid_argument); // q0 = 1 is not a witness
    CHECK_THROWS_AS(dual_from_simultaneous(Int(21), Rat(1, 2), kHalves, Surd(Rat(2, 3)),
                                           Surd(Rat(3, 7))),
                    std::invalid_argument); // c must be < 1/2
}

TEST_CASE("simultaneous_from_dual: constants and pinned runs") {
    // planted zero-distance dual witness: 2*(2/7) + 1*(3/7) = 1
    Rat c(1, 100);
    auto red = simultaneous_from_dual(Int(2), Int(1), c, kHalves, Surd(Rat(2, 7)), Surd(Rat(3, 7)));
    CHECK(red.constant == ExactPos(Rat(8)) * ExactPos::pow_of(c, Rat(1, 2)));
    CHECK(red.constant == ExactPos(Rat(4, 5))); // 8 sqrt(1/100)
    CHECK(red.q >= 1);
    Rat dx = rat_dist(Rat(2, 7), red.q), dy = rat_dist(Rat(3, 7), red.q);
    CHECK(dx * dx * Rat(red.q) <= Rat(4, 5)); // independent halves recheck
    CHECK(dy * dy * Rat(red.q) <= Rat(4, 5));
    CHECK(red.dx.to_rat() == dx);
    CHECK(red.dy.to_rat() == dy);

    // constant decreases with c (both branches, both pairs)
    for (const Pair& pr : {kHalves, kThirds}) {
        auto cexp = [&](const Rat& cc) {
            ExactPos a = ExactPos::pow_of(Rat(2), (1 + pr.i) / pr.i) *
                         ExactPos::pow_of(cc, pr.j / (2 * pr.i));
            ExactPos b = ExactPos::pow_of(Rat(2), (1 + pr.j) / pr.j) *
                         ExactPos::pow_of(cc, pr.i / (2 * pr.j));
            return a.cmp(b) >= 0 ? a : b;
        };
        CHECK(cexp(Rat(1, 8)) > cexp(Rat(1, 16)));
        CHECK(cexp(Rat(1, 16)) > cexp(Rat(1, 100)));
    }

    // preconditions
    CHECK_THROWS_AS(simultaneous_from_dual(Int(0), Int(0), c, kHalves, kTheta, kTheta),
                    std::invalid_argument);
    CHECK_THROWS_AS(simultaneous_from_dual(Int(2), Int(1), Rat(1, 4), kHalves, Surd(Rat(2, 7)),
                                           Surd(Rat(3, 7))),
                    std::invalid_argument); // c must be < 1/4
    CHECK_THROWS_AS(simultaneous_from_dual(Int(1), Int(0), Rat(1, 10), kHalves, kTheta, Surd(0)),
                    std::invalid_argument); // (1,0) is not a witness for x = sqrt(2)-1
}

TEST_CASE("round trip: random rational points, both reductions verified") {
    std::mt19937_64 rng(23);
    Rat c(1, 100);
    for (int iter = 0; iter < 50; ++iter) {
        Rat x = random_rat(rng, 20), y = random_rat(rng, 20);
        // simultaneous -> dual at 32c
        Int q0 = lcm(Int(x.get_den()), Int(y.get_den()));
        auto dr = dual_from_simultaneous(q0, c, kHalves, Surd(x), Surd(y));
        Rat d = rat_dist(Rat(dr.u1) * x + Rat(dr.u2) * y, 1);
        Int m = abs(dr.u1) >= abs(dr.u2) ? Int(abs(dr.u1)) : Int(abs(dr.u2));
        CHECK(Rat(m * m) * d <= Rat(32) * c);
        // dual -> simultaneous at 8 sqrt(c) = 4/5
        auto [a, b] = planted_dual_witness(x, y);
        auto sr = simultaneous_from_dual(a, b, c, kHalves, Surd(x), Surd(y));
        Rat dx = rat_dist(x, sr.q), dy = rat_dist(y, sr.q);
        CHECK(dx * dx * Rat(sr.q) <= Rat(4, 5));
        CHECK(dy * dy * Rat(sr.q) <= Rat(4, 5));
    }
}
