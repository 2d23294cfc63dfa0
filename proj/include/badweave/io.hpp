#pragma once

#include "badweave/construction.hpp"

#include <iosfwd>
#include <string>

namespace badweave {

// CLI/config plumbing: a run description that parses losslessly from JSON
// (unknown keys rejected with the offending key named)
struct RunConfig {
    std::vector<std::string> pairs = {"1/2,1/2"}; // "i,j" with rational entries
    std::string theta = "sqrt(2)";
    long R = 16;
    long depth = 3;
    std::string epsilon = "1/2";
    std::string trim = "desk"; // desk | none (trim 0) | full (ceil R^{1-alpha})
    long T = 0;                // schedule truncation: keep first T pairs, staggered
    long Q = 10000;            // simultaneous verification bound
    std::string Hmax = "4096"; // dual verification bound (max-term)
    std::string out = "badweave";
    unsigned long seed = 1;
};
RunConfig config_from_json(const std::string& text);
std::string config_to_json(const RunConfig& cfg);
Params params_from_config(const RunConfig& cfg);

Rat parse_rat(const std::string& s); // "p/q" or "p"
Pair parse_pair(const std::string& s); // "i,j"

// smallest dyadic m/2^prec >= v
Rat dyadic_upper(const ExactPos& v, long prec = 40);

// tree serialization: one record per interval, parents before children,
// {"n":…,"lo_num":…,"lo_den":…,"hi_num":…,"hi_den":…,"parent":…}
// (integers as decimal strings; parent = record index, -1 at the root level)
std::string tree_to_jsonl(const ConstructionResult& run);
void tree_write_jsonl(const ConstructionResult& run, std::ostream& out); // constant memory
struct TreeRecord {
    long n = 0;
    Rat lo, hi;
    long parent = -1;
};
TreeRecord tree_record_from_json(const std::string& line);
std::vector<TreeRecord> tree_from_jsonl(const std::string& text);

// {"A":…,"B":…,"C":…,"H_num":…,"H_den":…,"H_root":…,"n":…,"l":…,"k":…}
// with H = (H_num/H_den)^{1/H_root} exact; family fields -1 when unclassified
std::string line_to_json(const Line& L, const Pair& pair, long R, long n);

// removal report: one row per removing line/rational, "line,level,count"
std::string removals_to_csv(const ConstructionResult& run);

std::string certificate_to_json(const PointCertificate& cert);
PointCertificate certificate_from_json(const std::string& text);

// witness records {"kind":…,"q":…,"A":…,"B":…,"value_num":…,"value_den":…};
// value is a dyadic upper bound on the failing product
std::string simul_witness_json(const Int& q, const Surd& dx, const Surd& dy, const Pair& pair);
std::string dual_witness_json(const Int& A, const Int& B, const Surd& dist, const Pair& pair);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

} // namespace badweave
