#pragma once

#include "badweave/arith.hpp"
#include "badweave/lines.hpp"

#include <optional>
#include <string>

namespace badweave {

// one pair of exponents with its derived constants and schedule slot
struct DerivedPair {
    Pair pair;
    Rat c1t;            // grid constant for this pair: c1 * R^{-k}
    Rat ct;             // removal constant, a power of two
    long m = 1, k = 0;  // embedded schedule: families removed every m levels, offset k
    Int trim = 0;       // sub-intervals trimmed from each end when active
    bool trim_viable = false;    // R^alpha > 2, so trimming leaves room
    bool contraction_ok = false; // R^{1-eps/2} > 2 (geometric-series constant < 4)
};

struct Params {
    Surd theta;
    std::string theta_str;
    BadnessCertificate theta_cert;
    long R = 16;
    Rat c1;             // global grid constant; level-n intervals have length c1 R^{-n}
    Rat epsilon;
    bool full_trim = false; // trim ceil(R_t^{1-alpha_t}) instead of 0
    bool countable = false;  // stagger pairs on the m_t/k_t schedule
    std::vector<DerivedPair> pairs;

    Rat unit(long n) const { return c1 / qpow(Rat(R), n); } // interval length at level n
};

struct DeriveOptions {
    Rat epsilon = Rat(1, 2);
    bool full_trim = false;
    bool countable = false;
    std::optional<Rat> c1_override; // needed when no generic pair fixes c1
    Int badness_q = 1000;           // brute-force range for the theta certificate
};

// constants and schedule from (pairs, theta, R); throws std::domain_error on
// invalid exponents or uncertifiable theta
Params derive_params(const std::vector<Pair>& pairs, const std::string& theta, long R,
                     const DeriveOptions& opt = {});

// sorted disjoint half-open runs [lo,hi) of grid indices
class RunSet {
public:
    void append(const Int& lo, const Int& hi); // must come after existing runs
    bool empty() const { return runs_.empty(); }
    Int count() const;
    Int count_in(const Int& lo, const Int& hi) const;
    bool contains(const Int& x) const;
    void subtract(const Int& lo, const Int& hi);
    const std::vector<std::pair<Int, Int>>& runs() const { return runs_; }

private:
    std::vector<std::pair<Int, Int>> runs_;
};

struct LevelCollection {
    long n = 0;
    RunSet set; // index x <-> closed interval [x, x+1] * c1 R^{-n}
};

struct LineRemoval {
    std::size_t pair_index;
    Line line;
    long band;   // R^{band-1} <= H < R^band (heights in the pair's exponents)
    long family; // embedded family index s for the pair (band group)
    Int removed; // surviving candidate intervals removed by Delta(L)
};
struct RationalRemoval {
    Rat point; // p/q with R^{band-1} <= q^2 < R^band
    long band;
    Int removed;
};
struct LevelReport {
    long level = 0;
    Int subdivided = 0; // R * #J_{level-1}
    Int candidates = 0; // after trimming
    Int survivors = 0;
    std::vector<LineRemoval> lines;
    std::vector<RationalRemoval> rationals;
};

LevelCollection init_level0(const Params& p);
// subdivide, trim, and remove all active families' Delta-intervals
LevelCollection build_level(const LevelCollection& jn, const Params& p, LevelReport& report);

// global height bands the pair removes when building `level` (empty if inactive)
std::vector<long> active_bands(const DerivedPair& dp, long level, bool countable);

struct ConstructionResult {
    Params params;
    std::vector<LevelCollection> levels; // 0..depth, truncated at first empty level
    std::vector<LevelReport> reports;    // one per built level
    long first_empty = -1;               // level at which the construction died, or -1
};
ConstructionResult run_construction(const Params& p, long depth);

// self-contained certificate for the leftmost deepest interval
struct PointCertificate {
    std::string theta;
    long R = 0;
    long depth = 0;
    std::vector<std::string> pair_strs; // "i,j" per pair
    std::vector<Rat> cs;                // removal constant per pair
    Rat lo, hi, midpoint;
    // (pair index, band) for every height band verified along the way
    std::vector<std::pair<std::size_t, long>> families;
};
PointCertificate extract_point(const ConstructionResult& r);

// largest power of two <= x (x > 0)
Rat pow2_below(const Rat& x);
Rat pow2_below(const ExactPos& x);

} // namespace badweave
