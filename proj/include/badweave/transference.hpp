#pragma once

#include "badweave/arith.hpp"
#include "badweave/lines.hpp"

namespace badweave {

// smallest failing q of max{||qx||^{1/i}, ||qy||^{1/j}} > c/q
struct SimulWitness {
    Int q;
    Surd dx, dy; // ||q x||, ||q y||
};
// nullopt = pass for every q <= Q; degenerate pairs use the x^{1/0} := 0
// convention (only the positive-exponent coordinate is tested)
std::optional<SimulWitness> check_simultaneous(const Surd& x, const Surd& y, const Pair& pair,
                                               const Rat& c, const Int& Q);

// first failing (A,B) of max{|A|^{1/i}, |B|^{1/j}} ||Ax - By|| > c in the scan
// order: |A|+|B| ascending, then A ascending; only B >= 0 (A > 0 when B = 0)
// since (A,B) and (-A,-B) test the same value
struct DualWitness {
    Int A, B;
    Surd dist; // ||A x - B y||
};
// nullopt = pass for every (A,B) != (0,0) with the max-term <= Hmax; a
// zero-exponent coordinate contributes 0 to the max-term and is capped at
// |coeff| <= Hmax to keep the scan finite; x, y must lie in one quadratic field
std::optional<DualWitness> check_dual(const Surd& x, const Surd& y, const Pair& pair,
                                      const Rat& c, const Rat& Hmax);

// n forms L_t(q) = sum_s theta[t][s] q_s in m variables, with a verified primal
// solution ||L_t(q)|| <= C_t, |q_s| <= X_s; the transference theorem then
// solves the transposed system M_s(u) = sum_t theta[t][s] u_t
struct TransferenceProblem {
    long m = 0, n = 0;                    // variables, forms; l = m + n
    std::vector<std::vector<Surd>> theta; // n rows, m columns, one quadratic field
    std::vector<ExactPos> C;              // size n
    std::vector<ExactPos> X;              // size m
    std::vector<Int> q;                   // primal solution, size m, q != 0
    long l() const { return m + n; }
};

// d = prod C_t prod X_s, D_s = (l-1) X_s^{-1} d^{1/(l-1)}, U_t = (l-1) C_t^{-1} d^{1/(l-1)}
struct TransferBounds {
    ExactPos d_root; // d^{1/(l-1)}
    std::vector<ExactPos> D, U;
};
// throws std::domain_error when max_s D_s >= 1 (theorem hypothesis) and
// std::invalid_argument when the primal solution fails its bounds
TransferBounds transfer_bounds(const TransferenceProblem& prob);

// integer u != 0 with ||M_s(u)|| <= D_s and |u_t| <= U_t, by exhaustive search
// in ascending L1-norm shells (first match is the canonical witness)
struct TransferResult {
    enum class Status { found, not_searched };
    Status status = Status::not_searched;
    std::vector<Int> u;
    long nodes = 0; // candidates examined (or the box size when not searched)
};
// node_cap bounds the search box; an exhausted search with no solution would
// falsify the theorem and throws std::logic_error
TransferResult transfer_witness_search(const TransferenceProblem& prob,
                                       const TransferBounds& bounds,
                                       long node_cap = 20000000);

// from ||q0 x|| <= c q0^{-i}, ||q0 y|| <= c q0^{-j} (c < 1/2, checked) to
// (u1,u2) != 0 with max{|u1|^{1/i}, |u2|^{1/j}} ||x u1 + y u2|| <= 2^{1/i+1/j+1} c
struct DualReduction {
    Int u1, u2;
    Surd dist;         // ||x u1 + y u2||
    ExactPos constant; // 2^{1/i+1/j+1} c
};
DualReduction dual_from_simultaneous(const Int& q0, const Rat& c, const Pair& pair,
                                     const Surd& x, const Surd& y);

// from max{|a|^{1/i}, |b|^{1/j}} ||a x + b y|| <= c (c < 1/4, checked) to q >= 1
// with max{||qx||^{1/i}, ||qy||^{1/j}} <= max{2^{(1+i)/i} c^{j/(2i)},
// 2^{(1+j)/j} c^{i/(2j)}} q^{-1}
struct SimulReduction {
    Int q;
    Surd dx, dy;       // ||q x||, ||q y||
    ExactPos constant; // the (slv-type) pair-dependent bound
};
SimulReduction simultaneous_from_dual(const Int& a, const Int& b, const Rat& c,
                                      const Pair& pair, const Surd& x, const Surd& y);

} // namespace badweave
