#include "badweave/transference.hpp"

#include <stdexcept>

namespace badweave {

namespace {

// ||value|| for a surd already scaled by its integer multiplier
Surd dist_of(const Surd& value) { return nearest_int_dist(value, 1).dist; }

bool dist_le(const Surd& dist, const ExactPos& bound) {
    if (dist.sgn() == 0) return true;
    return ExactPos::of_surd(dist) <= bound;
}

// dist^{1/e} > c with the 0^{1/e} := 0 convention
bool root_gt(const Surd& dist, const Rat& e, const Rat& c) {
    if (dist.sgn() == 0) return false;
    return ExactPos::of_surd(dist) > ExactPos::pow_of(c, e);
}

} // namespace

std::optional<SimulWitness> check_simultaneous(const Surd& x, const Surd& y, const Pair& pair,
                                               const Rat& c, const Int& Q) {
    if (c <= 0) throw std::invalid_argument("check_simultaneous: c must be positive");
    if (Q < 1) throw std::invalid_argument("check_simultaneous: Q must be >= 1");
    for (Int q = 1; q <= Q; ++q) {
        Surd dx = nearest_int_dist(x, q).dist;
        Surd dy = nearest_int_dist(y, q).dist;
        Rat cq = c / Rat(q);
        bool ok_x = pair.kind != Pair::Kind::zero_one && root_gt(dx, pair.i, cq);
        bool ok_y = pair.kind != Pair::Kind::one_zero && root_gt(dy, pair.j, cq);
        if (!ok_x && !ok_y) return SimulWitness{q, dx, dy};
    }
    return std::nullopt;
}

std::optional<DualWitness> check_dual(const Surd& x, const Surd& y, const Pair& pair,
                                      const Rat& c, const Rat& Hmax) {
    if (c <= 0) throw std::invalid_argument("check_dual: c must be positive");
    if (Hmax < 1) return std::nullopt; // max-term >= 1 for every (A,B) != 0
    Int Amax = pair.i > 0 ? ExactPos::pow_of(Hmax, pair.i).floor() : Int(ifloor(Hmax));
    Int Bmax = pair.j > 0 ? ExactPos::pow_of(Hmax, pair.j).floor() : Int(ifloor(Hmax));
    ExactPos cpos(c);
    for (Int s = 1; s <= Amax + Bmax; ++s) {
        Int alo = -(s < Amax ? s : Amax), ahi = (s < Amax ? s : Amax);
        for (Int A = alo; A <= ahi; ++A) {
            Int B = s - abs(A);
            if (B > Bmax) continue;
            if (B == 0 && A < 0) continue;
            Surd dist = dist_of(x * Surd(A) - y * Surd(B));
            bool ok = false;
            if (dist.sgn() != 0) {
                ExactPos d = ExactPos::of_surd(dist);
                if (A != 0 && pair.i > 0)
                    ok = ExactPos::pow_of(Rat(abs(A)), 1 / pair.i) * d > cpos;
                if (!ok && B != 0 && pair.j > 0)
                    ok = ExactPos::pow_of(Rat(B), 1 / pair.j) * d > cpos;
            }
            if (!ok) return DualWitness{A, B, dist};
        }
    }
    return std::nullopt;
}

TransferBounds transfer_bounds(const TransferenceProblem& prob) {
    long m = prob.m, n = prob.n, l = prob.l();
    if (m < 1 || n < 1 || (long)prob.C.size() != n || (long)prob.X.size() != m ||
        (long)prob.theta.size() != n || (long)prob.q.size() != m)
        throw std::invalid_argument("transfer_bounds: inconsistent dimensions");
    for (const auto& row : prob.theta)
        if ((long)row.size() != m) throw std::invalid_argument("transfer_bounds: ragged grid");
    bool nonzero = false;
    for (long s = 0; s < m; ++s) {
        if (prob.q[s] != 0) {
            nonzero = true;
            if (ExactPos(Rat(abs(prob.q[s]))) > prob.X[s])
                throw std::invalid_argument("transfer_bounds: primal |q_s| > X_s");
        }
    }
    if (!nonzero) throw std::invalid_argument("transfer_bounds: primal q = 0");
    for (long t = 0; t < n; ++t) {
        Surd L(0);
        for (long s = 0; s < m; ++s) L = L + prob.theta[t][s] * Surd(prob.q[s]);
        if (!dist_le(dist_of(L), prob.C[t]))
            throw std::invalid_argument("transfer_bounds: primal ||L_t(q)|| > C_t");
    }

    ExactPos d(1);
    for (const auto& Ct : prob.C) d = d * Ct;
    for (const auto& Xs : prob.X) d = d * Xs;
    TransferBounds b;
    b.d_root = d.pow(Rat(1, l - 1));
    ExactPos scale = ExactPos(l - 1) * b.d_root;
    for (long s = 0; s < m; ++s) b.D.push_back(scale / prob.X[s]);
    for (long t = 0; t < n; ++t) b.U.push_back(scale / prob.C[t]);
    for (const auto& Ds : b.D)
        if (Ds.cmp(Rat(1)) >= 0)
            throw std::domain_error("transfer_bounds: hypothesis max_s D_s < 1 fails");
    return b;
}

namespace {

// first u (ascending L1 shells, coordinates ascending) with ||M_s(u)|| <= D_s
bool shell_search(const TransferenceProblem& prob, const TransferBounds& bounds,
                  const std::vector<Int>& F, long t, Int budget, std::vector<Int>& u,
                  long& nodes) {
    long n = prob.n;
    if (t == n - 1) {
        std::vector<Int> cands;
        if (budget == 0) cands.push_back(0);
        else if (budget <= F[t]) { cands.push_back(-budget); cands.push_back(budget); }
        for (const Int& last : cands) {
            u[t] = last;
            ++nodes;
            bool ok = true;
            for (long s = 0; s < prob.m && ok; ++s) {
                Surd M(0);
                for (long tt = 0; tt < n; ++tt) M = M + prob.theta[tt][s] * Surd(u[tt]);
                ok = dist_le(dist_of(M), bounds.D[s]);
            }
            if (ok) return true;
        }
        return false;
    }
    Int cap = budget < F[t] ? budget : F[t];
    for (Int v = -cap; v <= cap; ++v) {
        u[t] = v;
        if (shell_search(prob, bounds, F, t + 1, Int(budget - abs(v)), u, nodes)) return true;
    }
    return false;
}

} // namespace

TransferResult transfer_witness_search(const TransferenceProblem& prob,
                                       const TransferBounds& bounds, long node_cap) {
    long n = prob.n;
    std::vector<Int> F;
    Int box = 1, total = 0;
    for (long t = 0; t < n; ++t) {
        F.push_back(bounds.U[t].floor());
        box *= 2 * F.back() + 1;
        total += F.back();
    }
    TransferResult res;
    if (box > node_cap) {
        res.status = TransferResult::Status::not_searched;
        res.nodes = node_cap;
        return res;
    }
    std::vector<Int> u(n);
    long nodes = 0;
    for (Int r = 1; r <= total; ++r) {
        if (shell_search(prob, bounds, F, 0, r, u, nodes)) {
            res.status = TransferResult::Status::found;
            res.u = u;
            res.nodes = nodes;
            return res;
        }
    }
    // exhausted the whole box guaranteed by the theorem: falsification
    throw std::logic_error("transfer_witness_search: no solution in the certified box");
}

DualReduction dual_from_simultaneous(const Int& q0, const Rat& c, const Pair& pair,
                                     const Surd& x, const Surd& y) {
    if (!pair.generic()) throw std::invalid_argument("dual_from_simultaneous: degenerate pair");
    if (c <= 0 || c >= Rat(1, 2))
        throw std::invalid_argument("dual_from_simultaneous: need 0 < c < 1/2");
    if (q0 < 1) throw std::invalid_argument("dual_from_simultaneous: q0 must be >= 1");
    ExactPos Cx = ExactPos(c) * ExactPos::pow_of(Rat(q0), -pair.i);
    ExactPos Cy = ExactPos(c) * ExactPos::pow_of(Rat(q0), -pair.j);
    if (!dist_le(nearest_int_dist(x, q0).dist, Cx) || !dist_le(nearest_int_dist(y, q0).dist, Cy))
        throw std::invalid_argument("dual_from_simultaneous: q0 is not a witness at c");

    TransferenceProblem prob;
    prob.m = 1;
    prob.n = 2;
    prob.theta = {{x}, {y}};
    prob.C = {Cx, Cy};
    prob.X = {ExactPos(Rat(q0))};
    prob.q = {q0};
    TransferBounds b = transfer_bounds(prob);
    TransferResult r = transfer_witness_search(prob, b);
    if (r.status != TransferResult::Status::found)
        throw std::runtime_error("dual_from_simultaneous: search box exceeds the node cap");

    DualReduction out;
    out.u1 = r.u[0];
    out.u2 = r.u[1];
    out.dist = dist_of(x * Surd(out.u1) + y * Surd(out.u2));
    out.constant = ExactPos::pow_of(Rat(2), 1 / pair.i + 1 / pair.j + 1) * ExactPos(c);
    if (out.dist.sgn() != 0 &&
        max_term(out.u1, out.u2, pair) * ExactPos::of_surd(out.dist) > out.constant)
        throw std::logic_error("dual_from_simultaneous: reduced witness fails its bound");
    return out;
}

SimulReduction simultaneous_from_dual(const Int& a, const Int& b, const Rat& c,
                                      const Pair& pair, const Surd& x, const Surd& y) {
    if (!pair.generic()) throw std::invalid_argument("simultaneous_from_dual: degenerate pair");
    if (c <= 0 || c >= Rat(1, 4))
        throw std::invalid_argument("simultaneous_from_dual: need 0 < c < 1/4");
    if (a == 0 && b == 0) throw std::invalid_argument("simultaneous_from_dual: (a,b) = (0,0)");
    ExactPos q0 = max_term(a, b, pair);
    Surd dist0 = dist_of(x * Surd(a) + y * Surd(b));
    if (dist0.sgn() != 0 && q0 * ExactPos::of_surd(dist0) > ExactPos(c))
        throw std::invalid_argument("simultaneous_from_dual: (a,b) is not a witness at c");

    TransferenceProblem prob;
    prob.m = 2;
    prob.n = 1;
    prob.theta = {{x, y}};
    prob.C = {ExactPos(c) / q0};
    prob.X = {q0.pow(pair.i), q0.pow(pair.j)};
    prob.q = {a, b};
    TransferBounds bd = transfer_bounds(prob);
    TransferResult r = transfer_witness_search(prob, bd);
    if (r.status != TransferResult::Status::found)
        throw std::runtime_error("simultaneous_from_dual: search box exceeds the node cap");

    SimulReduction out;
    out.q = abs(r.u[0]);
    out.dx = nearest_int_dist(x, out.q).dist;
    out.dy = nearest_int_dist(y, out.q).dist;
    ExactPos cx = ExactPos::pow_of(Rat(2), (1 + pair.i) / pair.i) *
                  ExactPos::pow_of(c, pair.j / (2 * pair.i));
    ExactPos cy = ExactPos::pow_of(Rat(2), (1 + pair.j) / pair.j) *
                  ExactPos::pow_of(c, pair.i / (2 * pair.j));
    out.constant = cx.cmp(cy) >= 0 ? cx : cy;
    ExactPos bound = out.constant / ExactPos(Rat(out.q));
    if ((out.dx.sgn() != 0 && ExactPos::of_surd(out.dx, 1 / pair.i) > bound) ||
        (out.dy.sgn() != 0 && ExactPos::of_surd(out.dy, 1 / pair.j) > bound))
        throw std::logic_error("simultaneous_from_dual: reduced witness fails its bound");
    return out;
}

} // namespace badweave
