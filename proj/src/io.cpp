#include "badweave/io.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <sstream>

using json = nlohmann::ordered_json;

namespace badweave {

namespace {

long as_long(const json& v, const char* key) {
    if (!v.is_number_integer())
        throw std::invalid_argument(std::string("config: key '") + key + "' must be an integer");
    return v.get<long>();
}

std::string as_str(const json& v, const char* key) {
    if (!v.is_string())
        throw std::invalid_argument(std::string("config: key '") + key + "' must be a string");
    return v.get<std::string>();
}

} // namespace

Rat parse_rat(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0 || s.empty())
        throw std::invalid_argument("not a rational: '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

Pair parse_pair(const std::string& s) {
    auto comma = s.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("pair must be 'i,j': '" + s + "'");
    Rat i = parse_rat(s.substr(0, comma)), j = parse_rat(s.substr(comma + 1));
    if (i + j != 1) throw std::invalid_argument("pair must satisfy i + j = 1: '" + s + "'");
    return Pair::make(i, j);
}

Rat dyadic_upper(const ExactPos& v, long prec) {
    Int f = (v * ExactPos(qpow(Rat(2), prec))).floor();
    return Rat(f + 1) / qpow(Rat(2), prec);
}

RunConfig config_from_json(const std::string& text) {
    json j = json::parse(text); // throws json::parse_error with position info
    if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
    RunConfig cfg;
    for (const auto& [key, val] : j.items()) {
        if (key == "pairs") {
            if (!val.is_array()) throw std::invalid_argument("config: key 'pairs' must be an array");
            cfg.pairs.clear();
            for (const auto& p : val) cfg.pairs.push_back(as_str(p, "pairs[]"));
        } else if (key == "theta") cfg.theta = as_str(val, "theta");
        else if (key == "R") cfg.R = as_long(val, "R");
        else if (key == "depth") cfg.depth = as_long(val, "depth");
        else if (key == "epsilon") cfg.epsilon = as_str(val, "epsilon");
        else if (key == "trim") cfg.trim = as_str(val, "trim");
        else if (key == "T") cfg.T = as_long(val, "T");
        else if (key == "Q") cfg.Q = as_long(val, "Q");
        else if (key == "Hmax") cfg.Hmax = as_str(val, "Hmax");
        else if (key == "out") cfg.out = as_str(val, "out");
        else if (key == "seed") cfg.seed = (unsigned long)as_long(val, "seed");
        else throw std::invalid_argument("config: unknown key '" + key + "'");
    }
    if (cfg.trim != "desk" && cfg.trim != "none" && cfg.trim != "full")
        throw std::invalid_argument("config: key 'trim' must be desk, none, or full");
    return cfg;
}

std::string config_to_json(const RunConfig& cfg) {
    json j;
    j["pairs"] = cfg.pairs;
    j["theta"] = cfg.theta;
    j["R"] = cfg.R;
    j["depth"] = cfg.depth;
    j["epsilon"] = cfg.epsilon;
    j["trim"] = cfg.trim;
    j["T"] = cfg.T;
    j["Q"] = cfg.Q;
    j["Hmax"] = cfg.Hmax;
    j["out"] = cfg.out;
    j["seed"] = (long)cfg.seed;
    return j.dump(2) + "\n";
}

Params params_from_config(const RunConfig& cfg) {
    std::vector<Pair> pairs;
    for (const auto& s : cfg.pairs) pairs.push_back(parse_pair(s));
    if (cfg.T > 0 && (long)pairs.size() > cfg.T) pairs.resize(cfg.T);
    DeriveOptions opt;
    opt.epsilon = parse_rat(cfg.epsilon);
    opt.full_trim = cfg.trim == "full";
    opt.countable = cfg.T > 0;
    return derive_params(pairs, cfg.theta, cfg.R, opt);
}

namespace {

// record index of x within a level's runs; x visits are non-decreasing
struct RankCursor {
    const std::vector<std::pair<Int, Int>>* runs = nullptr;
    std::size_t idx = 0;
    Int before = 0; // intervals in runs < idx
    long rank(const Int& x) {
        while ((*runs)[idx].second <= x) {
            before += (*runs)[idx].second - (*runs)[idx].first;
            ++idx;
        }
        return Int(before + x - (*runs)[idx].first).get_si();
    }
};

} // namespace

void tree_write_jsonl(const ConstructionResult& run, std::ostream& out) {
    long base = 0;      // record index where the previous level starts
    long emitted = 0;
    std::string buf;
    for (const auto& lvl : run.levels) {
        long level_base = emitted;
        Rat unit = run.params.unit(lvl.n);
        RankCursor parent_rank;
        if (lvl.n > 0) parent_rank.runs = &run.levels[lvl.n - 1].set.runs();
        Int px;
        for (const auto& [lo, hi] : lvl.set.runs()) {
            for (Int x = lo; x < hi; ++x) {
                long parent = -1;
                if (lvl.n > 0) {
                    mpz_fdiv_q_ui(px.get_mpz_t(), x.get_mpz_t(), (unsigned long)run.params.R);
                    parent = base + parent_rank.rank(px);
                }
                Rat a = Rat(x) * unit, b = Rat(x + 1) * unit;
                buf.clear();
                buf += "{\"n\":";
                buf += std::to_string(lvl.n);
                buf += ",\"lo_num\":\"";
                buf += a.get_num().get_str();
                buf += "\",\"lo_den\":\"";
                buf += a.get_den().get_str();
                buf += "\",\"hi_num\":\"";
                buf += b.get_num().get_str();
                buf += "\",\"hi_den\":\"";
                buf += b.get_den().get_str();
                buf += "\",\"parent\":";
                buf += std::to_string(parent);
                buf += "}\n";
                out.write(buf.data(), (std::streamsize)buf.size());
                ++emitted;
            }
        }
        base = level_base;
    }
}

std::string tree_to_jsonl(const ConstructionResult& run) {
    std::ostringstream out;
    tree_write_jsonl(run, out);
    return out.str();
}

TreeRecord tree_record_from_json(const std::string& line) {
    json j = json::parse(line);
    TreeRecord r;
    r.n = j.at("n").get<long>();
    r.lo = Rat(parse_rat(j.at("lo_num").get<std::string>())) /
           parse_rat(j.at("lo_den").get<std::string>());
    r.hi = Rat(parse_rat(j.at("hi_num").get<std::string>())) /
           parse_rat(j.at("hi_den").get<std::string>());
    r.parent = j.at("parent").get<long>();
    return r;
}

std::vector<TreeRecord> tree_from_jsonl(const std::string& text) {
    std::vector<TreeRecord> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) out.push_back(tree_record_from_json(line));
    }
    return out;
}

std::string line_to_json(const Line& L, const Pair& pair, long R, long n) {
    auto [root, Hs] = height_power(L, pair);
    auto fam = classify(L, pair, R, n);
    json j;
    j["A"] = L.A.get_str();
    j["B"] = L.B.get_str();
    j["C"] = L.C.get_str();
    j["H_num"] = Hs.get_num().get_str();
    j["H_den"] = Hs.get_den().get_str();
    j["H_root"] = root.get_str();
    j["n"] = fam ? fam->n : -1;
    j["l"] = fam ? fam->l : -1;
    j["k"] = fam ? fam->k : -1;
    return j.dump();
}

std::string removals_to_csv(const ConstructionResult& run) {
    std::ostringstream out;
    out << "line,level,count\n";
    for (const auto& rep : run.reports) {
        for (const auto& lr : rep.lines)
            out << "\"" << lr.line.A << "," << lr.line.B << "," << lr.line.C << "\","
                << rep.level << "," << lr.removed << "\n";
        for (const auto& rr : rep.rationals)
            out << "\"" << rat_str(rr.point) << "\"," << rep.level << "," << rr.removed << "\n";
    }
    return out.str();
}

std::string certificate_to_json(const PointCertificate& cert) {
    json j;
    j["theta"] = cert.theta;
    j["R"] = cert.R;
    j["depth"] = cert.depth;
    j["pairs"] = cert.pair_strs;
    json cs = json::array();
    for (const auto& c : cert.cs) cs.push_back(rat_str(c));
    j["cs"] = cs;
    j["lo"] = rat_str(cert.lo);
    j["hi"] = rat_str(cert.hi);
    j["midpoint"] = rat_str(cert.midpoint);
    json fams = json::array();
    for (const auto& [pi, band] : cert.families) fams.push_back(json::array({pi, band}));
    j["families"] = fams;
    return j.dump(2) + "\n";
}

PointCertificate certificate_from_json(const std::string& text) {
    json j = json::parse(text);
    PointCertificate cert;
    cert.theta = j.at("theta").get<std::string>();
    cert.R = j.at("R").get<long>();
    cert.depth = j.at("depth").get<long>();
    for (const auto& p : j.at("pairs")) cert.pair_strs.push_back(p.get<std::string>());
    for (const auto& c : j.at("cs")) cert.cs.push_back(parse_rat(c.get<std::string>()));
    cert.lo = parse_rat(j.at("lo").get<std::string>());
    cert.hi = parse_rat(j.at("hi").get<std::string>());
    cert.midpoint = parse_rat(j.at("midpoint").get<std::string>());
    for (const auto& f : j.at("families"))
        cert.families.emplace_back(f.at(0).get<std::size_t>(), f.at(1).get<long>());
    return cert;
}

namespace {

std::string witness_json(const char* kind, const Int& q, const Int& A, const Int& B,
                         const std::optional<ExactPos>& value) {
    Rat ub = value ? dyadic_upper(*value) : Rat(0);
    json j;
    j["kind"] = kind;
    j["q"] = q.get_str();
    j["A"] = A.get_str();
    j["B"] = B.get_str();
    j["value_num"] = ub.get_num().get_str();
    j["value_den"] = ub.get_den().get_str();
    return j.dump();
}

} // namespace

std::string simul_witness_json(const Int& q, const Surd& dx, const Surd& dy, const Pair& pair) {
    // value = q * max{dx^{1/i}, dy^{1/j}} with zero terms (and zero exponents) dropped
    std::optional<ExactPos> value;
    auto add = [&](const Surd& d, const Rat& e) {
        if (e == 0 || d.sgn() == 0) return;
        ExactPos t = ExactPos::of_surd(d, 1 / e) * ExactPos(Rat(q));
        if (!value || t > *value) value = t;
    };
    add(dx, pair.i);
    add(dy, pair.j);
    return witness_json("simultaneous", q, 0, 0, value);
}

std::string dual_witness_json(const Int& A, const Int& B, const Surd& dist, const Pair& pair) {
    std::optional<ExactPos> value;
    if (dist.sgn() != 0 && pair.generic())
        value = max_term(A, B, pair) * ExactPos::of_surd(dist);
    return witness_json("dual", 0, A, B, value);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << text;
}

} // namespace badweave
