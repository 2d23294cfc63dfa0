#pragma once

#include "badweave/power.hpp"

#include <optional>
#include <vector>

namespace badweave {

struct Pair {
    enum class Kind { generic, one_zero, zero_one };
    Kind kind = Kind::generic;
    Rat i, j; // i + j = 1; (1,0)/(0,1) carried as tagged variants

    static Pair make(const Rat& i, const Rat& j);
    bool generic() const { return kind == Kind::generic; }
    Rat alpha() const { return i * j / 4; }  // α = ij/4
    Rat lambda() const { return 3 / j; }     // λ = 3/j
    std::string str() const;
};

struct Line {
    Int A, B, C; // normalized: gcd(A,B,C) = 1, B > 0
    bool operator==(const Line& o) const { return A == o.A && B == o.B && C == o.C; }
};

Line normalize(Int A, Int B, Int C); // throws on B = 0 (vertical line excluded by θ ∈ Bad(i))

// max{|A|^{1/i}, |B|^{1/j}} for (A,B) ≠ (0,0)
ExactPos max_term(const Int& A, const Int& B, const Pair& pair);
// H(A,B) = B * max{|A|^{1/i}, |B|^{1/j}}
ExactPos height(const Line& L, const Pair& pair);
// smallest s ≥ 1 with H^s rational, and H^s itself (s = 1 when H is rational)
std::pair<Int, Rat> height_power(const Line& L, const Pair& pair);

// Δ(L): closed interval centered at (Aθ+C)/B of length 2c/H
struct RemovalInterval {
    Surd center;
    ExactPos halfwidth;
};
RemovalInterval delta_interval(const Line& L, const Pair& pair, const Rat& c, const Surd& theta);

struct FamilyIndex {
    long n, l, k;
};
// (n,l,k) iff R^{n-1} ≤ H < R^n, with the B-band (λ = 3/j) and dyadic height index
std::optional<FamilyIndex> classify(const Line& L, const Pair& pair, long R, long n);

// all normalized lines with R^{n-1} ≤ H < R^n whose Δ(L) meets [lo,hi],
// ordered by (B, A, C); honors BADWEAVE_THREADS by partitioning the B range
std::vector<Line> enumerate_lines(const Pair& pair, long R, long n,
                                  const Rat& lo, const Rat& hi,
                                  const Rat& c, const Surd& theta);

// (0,1) family: reduced p/q with R^{n-1} ≤ q^2 < R^n and Δ(p/q) meeting [lo,hi]
std::vector<Rat> enumerate_rationals(long R, long n, const Rat& lo, const Rat& hi, const Rat& c);

} // namespace badweave
