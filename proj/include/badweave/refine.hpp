#pragma once

#include "badweave/construction.hpp"

namespace badweave {

// set algebra on index RunSets (used by the refinement)
RunSet runset_intersect(const RunSet& a, const RunSet& b);
RunSet runset_difference(const RunSet& a, const RunSet& b);
RunSet runset_union(const RunSet& a, const RunSet& b);
RunSet runset_children(const RunSet& a, long R); // every index scaled into its R children

struct RefinementResult {
    std::vector<RunSet> M;              // final M_n := M_{n,m_max}
    std::vector<RunSet> dump;           // R_{n,m_max}
    std::vector<std::vector<RunSet>> M_nm; // auxiliary: M_nm[m][n], 0 <= n <= m
    std::vector<long> N;                // first m with M_{n,m} = ... = M_{n,m_max}
    std::vector<bool> stabilized;       // stabilization witnessed strictly inside m_max
    Int threshold;                      // [2 R^{1-eps/2}]
    bool c1_ok = true, c2_ok = true, c3_ok = true;
};

// auxiliary collections M_{n,m} / dumping grounds R_{n,m} built in the
// descending-then-ascending order, from the level collections J_0..J_m
RefinementResult refine_collections(const std::vector<RunSet>& J, long R, const Rat& epsilon);

// weights, piecewise constant over index runs at each level
struct WeightPiece {
    Int lo, hi; // index range [lo,hi)
    Rat w;
};

struct MeasureTree {
    long R = 0;
    Rat epsilon, c1;
    std::vector<std::vector<WeightPiece>> levels;
    bool no_childless_parents = true; // per-level weight sums equal 1 iff true
    bool ratio_ok = true;             // child <= parent / (R(1-2R^{-eps/2})) everywhere

    Rat d(long n) const { return c1 / qpow(Rat(R), n); } // generic interval length
    Rat weight(long n, const Int& k) const;              // 0 off-support
    Rat max_weight(long n) const;
    Rat level_sum(long n) const; // exact sum of weights at level n
};

// mu(J_0) = 1/#M_0, children split the parent weight equally
MeasureTree assign_measure(const std::vector<RunSet>& M, long R, const Rat& epsilon, const Rat& c1);

struct MassBoundReport {
    long grid_checked = 0;
    long random_checked = 0;
    long violations = 0;
    double empirical_exponent = 1e300; // min over windows of log mu(I) / log |I|
    bool pass() const { return violations == 0; }
};
// mu(I) <= 2 c1^{eps/2-1} R^{eps/2} |I|^{1-eps/2}, exact, over every grid window
// (via the piecewise weights) plus `random_windows` random sub-d0 windows
MassBoundReport check_mass_bound(const MeasureTree& mt, long random_windows, unsigned seed);

struct AdversaryReport {
    long trials = 0;
    long violations = 0; // adversarial T_n with T_n intersect J_n empty at some level
};
// random adversaries keep [2R^{1-eps/2}] children per node; reports how often
// the kept tree misses J_n
AdversaryReport ubiquity_adversary_test(const std::vector<RunSet>& J, long R, const Rat& epsilon,
                                        long trials, unsigned seed);

} // namespace badweave
