#pragma once

#include "badweave/construction.hpp"

namespace badweave {

// exact rational point (p/q, r/q) with q > 0 and gcd(p, r, q) = 1
struct RationalPoint {
    Int p, r, q;
    Int t = 1; // scale recovered by intersect(): t*q = A1*B2 - A2*B1
    Rat x() const;
    Rat y() const;
    bool on_line(const Line& L) const { return L.A * p - L.B * r + L.C * q == 0; }
    std::string str() const;
};
RationalPoint make_point(const Rat& x, const Rat& y);

// exact intersection; nullopt when parallel (A1*B2 = A2*B1), throws on identical lines
std::optional<RationalPoint> intersect(const Line& L1, const Line& L2);

// y-coordinate on the vertical line x = theta of the line with coefficients
// (A,B) passing through P: r/q + (A/B)(theta - p/q)
Surd theta_trace(const Int& A, const Int& B, const RationalPoint& P, const Surd& theta);

// (A,B)-projection of the lattice {(A,B,C) : Ap - Br + Cq = 0};
// basis {(step, 0), (a1, g)}, fundamental-domain area step*g = q
struct LatticePlane {
    Int p, r, q;
    Int g;    // gcd(p, q); members need g | B
    Int step; // q / g: A-period at fixed B
    Int a1;   // A-solution for B = g
    Int det() const { return step * g; }
    bool member(const Int& A, const Int& B) const { return (A * p - B * r) % q == 0; }
    // least nonnegative A with A*p = B*r (mod q), nullopt when g does not divide B
    std::optional<Int> a_rep(const Int& B) const;
};
LatticePlane lattice_plane(const RationalPoint& P);

struct ConcurrencyVerdict {
    enum class Kind { vacuous, concurrent, violation };
    Kind kind = Kind::vacuous;
    std::optional<RationalPoint> P; // set when concurrent
    std::vector<Line> lines;        // all C(n,l) lines whose trace lies in [lo,hi]
    std::vector<Line> witness;      // offending pair/triple on violation
};
// all C(n,l) lines crossing x = theta inside [lo,hi] must share one rational point
ConcurrencyVerdict concurrency_check(const Pair& pair, long R, long n, long l,
                                     const Rat& lo, const Rat& hi, const Surd& theta);

// line through P with |A| <= q^i and 0 < B <= q^j, by exhaustive grid search;
// requires |q*theta - p| < c_theta * q^{-i} (throws std::domain_error otherwise,
// std::logic_error if the search fails -- that would falsify the lemma)
Line pigeonhole_line(const RationalPoint& P, const Surd& theta, const Pair& pair,
                     const Rat& c_theta);

// |q*theta - p| < 2^i tau 2^{k+1} R^{-1} q^{-i} for two distinct lines through P
// crossing [lo,hi] (window of length <= tau R^{-n}) with heights < 2^{k+1} R^{n-1};
// nullopt when the preconditions fail
std::optional<bool> lemma2_check(const Line& L1, const Line& L2, const RationalPoint& P,
                                 const Rat& lo, const Rat& hi, const Pair& pair,
                                 long R, long n, long k, const Rat& tau, const Surd& theta);

// figure F: |A| < c2^i B^i, 0 < B < c2^{j/i}, with c2 = 2^{k+1} tau / (R |q theta - p|);
// sub-figure F_l additionally bounded by 0 < B < c3 c2^{j/i}, |A| < c3^i c2
// with c3 = R^{j/i - lambda l (j+1)/i} < 1
struct FigureSpec {
    Pair pair;
    long R = 0, k = 0, l = 0;
    Rat tau;
    RationalPoint P;
    Surd dist;   // |q theta - p| > 0
    Surd c2;     // 2^{k+1} tau / (R dist)
    ExactPos c3; // 1 when l = 0

    // dist = delta * 2^i tau 2^{k+1} R^{-1} q^{-i} defines the comparison handle
    ExactPos delta() const;
    ExactPos b_bound(bool sub_l) const;            // c2^{j/i}, times c3 for F_l
    ExactPos a_bound(const Int& B, bool sub_l) const; // c2^i B^i, capped by c3^i c2 for F_l
};
enum class FigureVariant { F, F_l };
FigureSpec make_figure(const RationalPoint& P, const Surd& theta, const Pair& pair,
                       long R, long k, const Rat& tau, long l = 0);
bool figure_membership(const Int& A, const Int& B, const FigureSpec& f,
                       FigureVariant v = FigureVariant::F);

// lattice points of F (or F_l) intersected with the (A,B)-projection of the
// lattice of lines through f.P, ordered by (B, A)
std::vector<std::pair<Int, Int>> figure_lattice_points(const FigureSpec& f,
                                                       FigureVariant v = FigureVariant::F);

// apex-at-origin slope band |A/B - A0/B0| <= w with w = c / (H(A0,B0) |theta - p/q|)
struct ConeSpec {
    Int A0, B0; // B0 > 0
    ExactPos w;
};
ConeSpec make_cone(const Int& A0, const Int& B0, const RationalPoint& P, const Surd& theta,
                   const Pair& pair, const Rat& c);
bool cone_membership(const Int& A, const Int& B, const ConeSpec& cone);

struct FindL0Result {
    enum class Status { not_applicable, certified, falsified };
    Status status = Status::not_applicable;
    bool case_a = false;
    Int A0, B0, C0;          // certified line through P with height < R^n
    long lattice_points = 0; // #(F cap Lambda) enumerated for certification
    Int bad_A, bad_B;        // falsification witness
    std::string reason;
};
// search for L0 whose cone swallows every lattice point of F cap Lambda with
// minimal height (certified by full enumeration); preconditions
// tau >= c R 2^{-k} and delta <= c4 (cR / (2^k tau))^{2/j} checked exactly
FindL0Result find_L0(const RationalPoint& P, const Rat& tau, const Pair& pair,
                     long R, long n, long k, const Rat& c, const Surd& theta);

struct CountReport {
    long lines = 0;          // C(n,l,k) lines crossing the window
    Int removed = 0;         // distinct candidate intervals meeting some Delta(L)
    bool per_line_ok = true; // each line removes <= 2 R^{n-alpha} / H + 2
    bool aggregate_ok = true;// removed <= R^{1-eps} (reported, small R need not satisfy it)
    Rat K_lo, K_hi;          // rational brackets of K = 2 R^{1-alpha} 2^{-k} + 2
    Int d;                   // ceil(R^{1-eps} / K)
    long type1 = 0, type2 = 0; // sub-window classes (<= 1 line vs >= 2 lines)
    long mstar = 0;            // max lines through one type-2 sub-window
};
// exact removal count over a level-(n+1) candidate set Iminus for the family
// C(n,l,k) restricted to lines crossing [Jlo, Jhi]
CountReport count_removed_oracle(const Rat& Jlo, const Rat& Jhi, const Pair& pair,
                                 long R, long n, long l, long k, const RunSet& Iminus,
                                 const Rat& c1, const Rat& c, const Rat& epsilon,
                                 const Surd& theta);

} // namespace badweave
