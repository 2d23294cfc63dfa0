#include "badweave/geometry.hpp"
#include "badweave/io.hpp"
#include "badweave/refine.hpp"
#include "badweave/transference.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

using namespace badweave;

namespace {

constexpr int kPass = 0, kFalsified = 2, kEmpty = 3, kConfigError = 4;

// shared --config/--flag plumbing: flags override file values
struct ConfigCli {
    RunConfig cfg;
    std::string config_path;
    CLI::App* app = nullptr;

    void attach(CLI::App* a) {
        app = a;
        a->add_option("--config", config_path, "JSON config file");
        a->add_option("--pairs", cfg.pairs, "exponent pairs 'i,j'");
        a->add_option("--theta", cfg.theta, "theta: sqrt(D), (a+b*sqrt(d))/c, or p/q");
        a->add_option("--R", cfg.R, "subdivision ratio");
        a->add_option("--depth", cfg.depth, "construction depth");
        a->add_option("--epsilon", cfg.epsilon, "epsilon as p/q");
        a->add_option("--trim", cfg.trim, "desk | none | full");
        a->add_option("--T", cfg.T, "schedule truncation (countable mode when > 0)");
        a->add_option("--Q", cfg.Q, "simultaneous verification bound");
        a->add_option("--Hmax", cfg.Hmax, "dual verification bound");
        a->add_option("--out", cfg.out, "output path prefix");
        a->add_option("--seed", cfg.seed, "seed for randomized sweeps");
    }

    RunConfig resolve() const {
        if (config_path.empty()) return cfg;
        RunConfig merged = config_from_json(read_file(config_path));
        // re-apply any explicitly passed flags over the file values
        RunConfig out = merged;
        auto over = [&](const char* name) { return app->count(name) > 0; };
        if (over("--pairs")) out.pairs = cfg.pairs;
        if (over("--theta")) out.theta = cfg.theta;
        if (over("--R")) out.R = cfg.R;
        if (over("--depth")) out.depth = cfg.depth;
        if (over("--epsilon")) out.epsilon = cfg.epsilon;
        if (over("--trim")) out.trim = cfg.trim;
        if (over("--T")) out.T = cfg.T;
        if (over("--Q")) out.Q = cfg.Q;
        if (over("--Hmax")) out.Hmax = cfg.Hmax;
        if (over("--out")) out.out = cfg.out;
        if (over("--seed")) out.seed = cfg.seed;
        return out;
    }
};

Params derive_or_die(const RunConfig& cfg) {
    Surd th = parse_theta(cfg.theta);
    if (th.is_rational())
        throw std::invalid_argument("theta must be a badly approximable irrational");
    return params_from_config(cfg);
}

int cmd_construct(const RunConfig& cfg) {
    Params prm = derive_or_die(cfg);
    auto run = run_construction(prm, cfg.depth);
    {
        std::ofstream tree(cfg.out + ".tree.jsonl", std::ios::binary);
        if (!tree) throw std::runtime_error("cannot write '" + cfg.out + ".tree.jsonl'");
        tree_write_jsonl(run, tree);
    }
    write_file(cfg.out + ".removals.csv", removals_to_csv(run));
    if (run.first_empty != -1) {
        std::cout << "empty: collection died at level " << run.first_empty << "\n";
        return kEmpty;
    }
    PointCertificate cert = extract_point(run);
    write_file(cfg.out + ".cert.json", certificate_to_json(cert));
    std::cout << "levels: " << run.levels.size() - 1
              << "\nsurvivors: " << run.levels.back().set.count()
              << "\nmidpoint: " << rat_str(cert.midpoint) << "\n";
    return kPass;
}

// dual + simultaneous re-check of a point; c_sim defaults to the constant the
// dual certificate transfers to, (c/32)^2
int verify_point(const Surd& theta, const Rat& midpoint, const std::vector<Pair>& pairs,
                 const std::vector<Rat>& cs, const Rat& Hmax, const Int& Q,
                 const std::optional<Rat>& c_sim_opt) {
    int rc = kPass;
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        if (!pairs[t].generic()) continue;
        auto wd = check_dual(theta, Surd(midpoint), pairs[t], cs[t], Hmax);
        if (wd) {
            std::cout << "dual FAIL pair " << pairs[t].str() << " "
                      << dual_witness_json(wd->A, wd->B, wd->dist, pairs[t]) << "\n";
            rc = kFalsified;
        } else {
            std::cout << "dual pass pair " << pairs[t].str() << " c=" << rat_str(cs[t])
                      << " Hmax=" << rat_str(Hmax) << "\n";
        }
        Rat c_sim = c_sim_opt ? *c_sim_opt : Rat(cs[t] * cs[t]) / 1024;
        auto ws = check_simultaneous(theta, Surd(midpoint), pairs[t], c_sim, Q);
        if (ws) {
            std::cout << "simultaneous FAIL pair " << pairs[t].str() << " "
                      << simul_witness_json(ws->q, ws->dx, ws->dy, pairs[t]) << "\n";
            rc = kFalsified;
        } else {
            std::cout << "simultaneous pass pair " << pairs[t].str() << " c=" << rat_str(c_sim)
                      << " Q=" << Q << "\n";
        }
    }
    return rc;
}

int cmd_verify(const RunConfig& cfg, const std::string& tree_path, const std::string& cert_path,
               const std::string& point_str, const std::string& c_str,
               const std::string& c_sim_str) {
    std::optional<Rat> c_sim;
    if (!c_sim_str.empty()) c_sim = parse_rat(c_sim_str);
    if (!cert_path.empty()) {
        // self-contained: everything re-derives from the certificate alone
        PointCertificate cert = certificate_from_json(read_file(cert_path));
        std::vector<Pair> pairs;
        for (const auto& s : cert.pair_strs) pairs.push_back(parse_pair(s));
        return verify_point(parse_theta(cert.theta), cert.midpoint, pairs, cert.cs,
                            parse_rat(cfg.Hmax), cfg.Q, c_sim);
    }
    Rat midpoint;
    if (!tree_path.empty()) {
        // streaming reduction to the leftmost deepest record (tree may be huge)
        std::ifstream in(tree_path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read '" + tree_path + "'");
        std::optional<TreeRecord> best;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            TreeRecord r = tree_record_from_json(line);
            if (!best || r.n > best->n || (r.n == best->n && r.lo < best->lo)) best = r;
        }
        if (!best) throw std::invalid_argument("empty tree file");
        midpoint = (best->lo + best->hi) / 2;
    } else if (!point_str.empty()) {
        midpoint = parse_rat(point_str);
    } else {
        throw std::invalid_argument("verify needs --cert, --point-from, or --point");
    }
    Params prm = derive_or_die(cfg);
    std::vector<Pair> pairs;
    std::vector<Rat> cs;
    for (const auto& dp : prm.pairs) {
        pairs.push_back(dp.pair);
        cs.push_back(!c_str.empty() ? parse_rat(c_str) : dp.ct);
    }
    return verify_point(prm.theta, midpoint, pairs, cs, parse_rat(cfg.Hmax), cfg.Q, c_sim);
}

int cmd_check_theorem4(const RunConfig& cfg, long n_max, long l_max, long windows) {
    Params prm = derive_or_die(cfg);
    std::mt19937_64 rng(cfg.seed);
    long checked = 0, concurrent = 0;
    for (const auto& dp : prm.pairs) {
        if (!dp.pair.generic()) continue;
        for (long n = 1; n <= n_max; ++n) {
            for (long l = 0; l <= l_max && l < n; ++l) {
                Rat len = prm.c1 / qpow(Rat(prm.R), n - l);
                for (long w = 0; w < windows; ++w) {
                    Rat lo = Rat((unsigned long)(rng() % (1ull << 30)), 1ul << 30) * (1 - len);
                    lo.canonicalize();
                    auto v = concurrency_check(dp.pair, prm.R, n, l, lo, lo + len, prm.theta);
                    ++checked;
                    if (v.kind == ConcurrencyVerdict::Kind::violation) {
                        std::cout << "violation pair " << dp.pair.str() << " n=" << n
                                  << " l=" << l << " window [" << rat_str(lo) << ","
                                  << rat_str(lo + len) << "]\n";
                        for (const auto& L : v.witness)
                            std::cout << "  " << line_to_json(L, dp.pair, prm.R, n) << "\n";
                        return kFalsified;
                    }
                    if (v.kind == ConcurrencyVerdict::Kind::concurrent) ++concurrent;
                }
            }
        }
    }
    std::cout << "windows checked: " << checked << "\nconcurrent (>=2 lines): " << concurrent
              << "\nviolations: 0\n";
    return kPass;
}

int cmd_check_counts(const RunConfig& cfg, long windows) {
    Params prm = derive_or_die(cfg);
    auto run = run_construction(prm, cfg.depth);
    std::ostringstream csv;
    csv << "pair,n,l,k,window_lo,window_hi,lines,removed,per_line_ok,d,K_lo,K_hi,type1,type2,"
           "mstar\n";
    bool ok = true;
    // windows centered on the Delta-intervals that removed candidates, so every
    // row exercises the bound on at least one line
    for (const auto& rep : run.reports) {
        long n = rep.level;
        if (n < 1 || n >= (long)run.levels.size()) continue;
        RunSet candidates = runset_children(run.levels[n - 1].set, prm.R);
        long done = 0;
        for (const auto& lr : rep.lines) {
            if (done++ >= windows) break;
            const auto& dp = prm.pairs[lr.pair_index];
            if (!dp.pair.generic()) continue;
            auto fam = classify(lr.line, dp.pair, prm.R, n);
            long l = fam ? fam->l : 0, k = fam ? fam->k : 0;
            Rat len = prm.c1 / qpow(Rat(prm.R), n - l);
            auto d = delta_interval(lr.line, dp.pair, dp.ct, prm.theta);
            Rat center = Rat(Int((d.center * Surd(Int(1) << 40)).floor())) / (Int(1) << 40);
            Rat lo = center - len / 2, hi = lo + len;
            auto r = count_removed_oracle(lo, hi, dp.pair, prm.R, n, l, k, candidates, prm.c1,
                                          dp.ct, prm.epsilon, prm.theta);
            ok = ok && r.per_line_ok;
            csv << dp.pair.str() << "," << n << "," << l << "," << k << "," << rat_str(lo) << ","
                << rat_str(hi) << "," << r.lines << "," << r.removed << ","
                << (r.per_line_ok ? 1 : 0) << "," << r.d << "," << rat_str(r.K_lo) << ","
                << rat_str(r.K_hi) << "," << r.type1 << "," << r.type2 << "," << r.mstar << "\n";
        }
    }
    write_file(cfg.out + ".counts.csv", csv.str());
    std::cout << (ok ? "per-line bound: ok\n" : "per-line bound: VIOLATED\n");
    return ok ? kPass : kFalsified;
}

int cmd_check_prop1(const RunConfig& cfg, const std::string& pstr, const std::string& rstr,
                    const std::string& qstr, const std::string& tau_str, long n, long k,
                    const std::string& c_str) {
    Params prm = derive_or_die(cfg);
    RationalPoint P{Int(pstr), Int(rstr), Int(qstr)};
    if (P.q <= 0) throw std::invalid_argument("q must be positive");
    Rat tau = parse_rat(tau_str);
    Rat c = c_str.empty() ? prm.pairs.at(0).ct : parse_rat(c_str);
    auto res = find_L0(P, tau, prm.pairs.at(0).pair, prm.R, n, k, c, prm.theta);
    switch (res.status) {
    case FindL0Result::Status::not_applicable:
        std::cout << "not applicable: " << res.reason << "\n";
        return kEmpty;
    case FindL0Result::Status::certified:
        std::cout << "certified L0 (case " << (res.case_a ? "A" : "B") << "): "
                  << line_to_json(normalize(res.A0, res.B0, res.C0), prm.pairs.at(0).pair, prm.R,
                                  n)
                  << "\nlattice points: " << res.lattice_points << "\n";
        return kPass;
    case FindL0Result::Status::falsified:
        std::cout << "FALSIFIED at (A,B)=(" << res.bad_A << "," << res.bad_B << ")\n";
        return kFalsified;
    }
    return kFalsified;
}

int cmd_check_lemma1(const RunConfig& cfg, long q_max, std::vector<std::string> exps,
                     const std::string& c_theta_str) {
    Params prm = derive_or_die(cfg);
    Rat c_theta = parse_rat(c_theta_str);
    if (exps.empty()) exps = {"1/2", "1/3"};
    long checked = 0;
    for (const auto& es : exps) {
        Rat i = parse_rat(es);
        Pair pair = Pair::make(i, 1 - i);
        for (Int q = 1; q <= q_max; ++q) {
            auto nd = nearest_int_dist(prm.theta, q);
            // |q theta - p| < c_theta q^{-i} exactly
            if (nd.dist.sgn() != 0 &&
                ExactPos::of_surd(nd.dist) >= ExactPos(c_theta) * ExactPos::pow_of(Rat(q), -i))
                continue;
            Int r = gcd(nd.nearest, q) == 1 ? Int(0) : Int(1); // keep gcd(p, r, q) = 1
            RationalPoint P{nd.nearest, r, q};
            Line L = pigeonhole_line(P, prm.theta, pair, c_theta); // throws on failure
            if (!P.on_line(L) || L.B <= 0) {
                std::cout << "clause failure at q=" << q << "\n";
                return kFalsified;
            }
            ++checked;
        }
    }
    std::cout << "pigeonhole lines found: " << checked << "/" << checked << "\n";
    return kPass;
}

int cmd_refine(const RunConfig& cfg) {
    Params prm = derive_or_die(cfg);
    auto run = run_construction(prm, cfg.depth);
    if (run.first_empty != -1) {
        std::cout << "empty: collection died at level " << run.first_empty << "\n";
        return kEmpty;
    }
    std::vector<RunSet> J;
    for (const auto& lvl : run.levels) J.push_back(lvl.set);
    auto ref = refine_collections(J, prm.R, prm.epsilon);
    for (std::size_t n = 0; n < ref.M.size(); ++n)
        std::cout << "M_" << n << ": " << ref.M[n].count() << " intervals, N(" << n
                  << ")=" << ref.N[n] << (ref.stabilized[n] ? "" : " (not stabilized)") << "\n";
    std::cout << "threshold [2R^{1-eps/2}]: " << ref.threshold << "\nconditions: C1 "
              << (ref.c1_ok ? "ok" : "FAIL") << ", C2 " << (ref.c2_ok ? "ok" : "FAIL") << ", C3 "
              << (ref.c3_ok ? "ok" : "FAIL") << "\n";
    return (ref.c1_ok && ref.c2_ok && ref.c3_ok) ? kPass : kFalsified;
}

int cmd_measure(const RunConfig& cfg, long random_windows) {
    Params prm = derive_or_die(cfg);
    auto run = run_construction(prm, cfg.depth);
    if (run.first_empty != -1) return kEmpty;
    std::vector<RunSet> J;
    for (const auto& lvl : run.levels) J.push_back(lvl.set);
    auto ref = refine_collections(J, prm.R, prm.epsilon);
    auto mt = assign_measure(ref.M, prm.R, prm.epsilon, prm.c1);
    auto rep = check_mass_bound(mt, random_windows, (unsigned)cfg.seed);
    std::cout << "grid windows: " << rep.grid_checked << "\nrandom windows: " << rep.random_checked
              << "\nviolations: " << rep.violations
              << "\nempirical exponent: " << rep.empirical_exponent << "\n";
    return rep.pass() ? kPass : kFalsified;
}

int cmd_transfer(const RunConfig& cfg, const std::string& x_str, const std::string& y_str,
                 const std::string& c_str, const std::string& q0_str, const std::string& a_str,
                 const std::string& b_str, bool do_check_dual, bool do_check_sim) {
    Params prm = derive_or_die(cfg);
    const Pair& pair = prm.pairs.at(0).pair;
    Surd x = parse_theta(x_str), y = parse_theta(y_str);
    Rat c = parse_rat(c_str);
    if (do_check_sim) {
        auto w = check_simultaneous(x, y, pair, c, cfg.Q);
        if (!w) {
            std::cout << "simultaneous pass for q <= " << cfg.Q << "\n";
            return kPass;
        }
        std::cout << simul_witness_json(w->q, w->dx, w->dy, pair) << "\n";
        return kFalsified;
    }
    if (do_check_dual) {
        auto w = check_dual(x, y, pair, c, parse_rat(cfg.Hmax));
        if (!w) {
            std::cout << "dual pass for max-term <= " << cfg.Hmax << "\n";
            return kPass;
        }
        std::cout << dual_witness_json(w->A, w->B, w->dist, pair) << "\n";
        return kFalsified;
    }
    if (!q0_str.empty()) {
        auto red = dual_from_simultaneous(Int(q0_str), c, pair, x, y);
        std::cout << dual_witness_json(red.u1, red.u2, red.dist, pair)
                  << "\nconstant_upper: " << rat_str(dyadic_upper(red.constant)) << "\n";
        return kPass;
    }
    if (!a_str.empty() || !b_str.empty()) {
        Int a = a_str.empty() ? Int(0) : Int(a_str);
        Int b = b_str.empty() ? Int(0) : Int(b_str);
        auto red = simultaneous_from_dual(a, b, c, pair, x, y);
        std::cout << simul_witness_json(red.q, red.dx, red.dy, pair)
                  << "\nconstant_upper: " << rat_str(dyadic_upper(red.constant)) << "\n";
        return kPass;
    }
    throw std::invalid_argument("transfer needs --q0, --a/--b, --check-dual, or --check-sim");
}

int cmd_emit_plot_data(const RunConfig& cfg, const std::string& pstr, const std::string& rstr,
                       const std::string& qstr, const std::string& tau_str, long k, long l) {
    Params prm = derive_or_die(cfg);
    auto run = run_construction(prm, cfg.depth);
    std::ostringstream delta;
    delta << "level,pair,A,B,C,center,halfwidth,removed\n";
    for (const auto& rep : run.reports) {
        for (const auto& lr : rep.lines) {
            const auto& dp = prm.pairs[lr.pair_index];
            auto d = delta_interval(lr.line, dp.pair, dp.ct, prm.theta);
            delta << rep.level << "," << dp.pair.str() << "," << lr.line.A << "," << lr.line.B
                  << "," << lr.line.C << "," << d.center.to_double() << ","
                  << d.halfwidth.to_double() << "," << lr.removed << "\n";
        }
    }
    write_file(cfg.out + ".delta.csv", delta.str());
    std::cout << "wrote " << cfg.out << ".delta.csv\n";
    if (!qstr.empty()) {
        RationalPoint P{Int(pstr), Int(rstr), Int(qstr)};
        auto fig = make_figure(P, prm.theta, prm.pairs.at(0).pair, prm.R, k, parse_rat(tau_str),
                               l);
        auto pts = figure_lattice_points(fig, l > 0 ? FigureVariant::F_l : FigureVariant::F);
        std::ostringstream cloud;
        cloud << "B,A\n";
        for (const auto& [B, A] : pts) cloud << B << "," << A << "\n";
        write_file(cfg.out + ".figure.csv", cloud.str());
        std::cout << "wrote " << cfg.out << ".figure.csv (" << pts.size() << " points)\n";
    }
    return run.first_empty == -1 ? kPass : kEmpty;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"interval-removal construction with exact arithmetic"};
    app.require_subcommand(1);

    ConfigCli base;

    auto* construct = app.add_subcommand("construct", "build the tree and emit certificates");
    auto* verify = app.add_subcommand("verify", "re-check a tree/certificate/point");
    auto* th4 = app.add_subcommand("check-theorem4", "concurrency sweep over random windows");
    auto* counts = app.add_subcommand("check-counts", "removal-count oracle sweep");
    auto* prop1 = app.add_subcommand("check-prop1", "cone certification at a rational point");
    auto* lem1 = app.add_subcommand("check-lemma1", "pigeonhole line sweep over convergents");
    auto* refine = app.add_subcommand("refine", "auxiliary collections M_n");
    auto* measure = app.add_subcommand("measure", "measure assignment and mass bound");
    auto* transfer = app.add_subcommand("transfer", "dual/simultaneous reductions");
    auto* plot = app.add_subcommand("emit-plot-data", "CSV emitters for external plotting");

    std::vector<ConfigCli> clis(10);
    CLI::App* subs[] = {construct, verify, th4, counts, prop1, lem1, refine, measure, transfer,
                        plot};
    for (int s = 0; s < 10; ++s) clis[s].attach(subs[s]);

    std::string tree_path, cert_path, point_str, c_str, c_sim_str;
    verify->add_option("--point-from", tree_path, "tree JSON-lines file");
    verify->add_option("--cert", cert_path, "point certificate JSON");
    verify->add_option("--point", point_str, "explicit rational point");
    verify->add_option("--c", c_str, "dual constant override");
    verify->add_option("--c-sim", c_sim_str, "simultaneous constant override");

    long n_max = 4, l_max = 1, windows = 10;
    th4->add_option("--n-max", n_max, "max height band");
    th4->add_option("--l-max", l_max, "max sub-family index");
    th4->add_option("--windows", windows, "random windows per family");

    long count_windows = 4;
    counts->add_option("--windows", count_windows, "windows per level");

    std::string pstr = "0", rstr = "0", qstr, tau_str = "1", pc_str;
    long pn = 1, pk = 0, pl = 0;
    for (CLI::App* s : {prop1, plot}) {
        s->add_option("--p", pstr, "point numerator (x)");
        s->add_option("--r", rstr, "point numerator (y)");
        s->add_option("--q", qstr, "point denominator");
        s->add_option("--tau", tau_str, "window scale tau");
        s->add_option("--k", pk, "dyadic height index");
    }
    prop1->add_option("--n", pn, "height band");
    prop1->add_option("--c", pc_str, "removal constant override");
    plot->add_option("--l", pl, "sub-figure index (0 = full figure)");

    long q_max = 500;
    std::vector<std::string> exps;
    std::string c_theta_str = "1/3";
    lem1->add_option("--q-max", q_max, "convergent denominator bound");
    lem1->add_option("--i", exps, "exponent i (repeatable)");
    lem1->add_option("--c-theta", c_theta_str, "approximation constant");

    long random_windows = 1000;
    measure->add_option("--windows", random_windows, "random windows");

    std::string x_str = "0", y_str = "0", tc_str = "1/100", q0_str, a_str, b_str;
    bool tf_dual = false, tf_sim = false;
    transfer->add_option("--x", x_str, "x coordinate");
    transfer->add_option("--y", y_str, "y coordinate");
    transfer->add_option("--c", tc_str, "witness constant");
    transfer->add_option("--q0", q0_str, "simultaneous witness to convert");
    transfer->add_option("--a", a_str, "dual witness A to convert");
    transfer->add_option("--b", b_str, "dual witness B to convert");
    transfer->add_flag("--check-dual", tf_dual, "run the dual checker");
    transfer->add_flag("--check-sim", tf_sim, "run the simultaneous checker");

    CLI11_PARSE(app, argc, argv);

    try {
        if (construct->parsed()) return cmd_construct(clis[0].resolve());
        if (verify->parsed())
            return cmd_verify(clis[1].resolve(), tree_path, cert_path, point_str, c_str,
                              c_sim_str);
        if (th4->parsed()) return cmd_check_theorem4(clis[2].resolve(), n_max, l_max, windows);
        if (counts->parsed()) return cmd_check_counts(clis[3].resolve(), count_windows);
        if (prop1->parsed()) {
            if (qstr.empty()) throw std::invalid_argument("check-prop1 needs --p --r --q");
            return cmd_check_prop1(clis[4].resolve(), pstr, rstr, qstr, tau_str, pn, pk, pc_str);
        }
        if (lem1->parsed()) return cmd_check_lemma1(clis[5].resolve(), q_max, exps, c_theta_str);
        if (refine->parsed()) return cmd_refine(clis[6].resolve());
        if (measure->parsed()) return cmd_measure(clis[7].resolve(), random_windows);
        if (transfer->parsed())
            return cmd_transfer(clis[8].resolve(), x_str, y_str, tc_str, q0_str, a_str, b_str,
                                tf_dual, tf_sim);
        if (plot->parsed())
            return cmd_emit_plot_data(clis[9].resolve(), pstr, rstr, qstr, tau_str, pk, pl);
    } catch (const std::logic_error& e) {
        // domain/invalid_argument are configuration errors; logic_error is a falsification
        if (dynamic_cast<const std::domain_error*>(&e) ||
            dynamic_cast<const std::invalid_argument*>(&e)) {
            std::cerr << "error: " << e.what() << "\n";
            return kConfigError;
        }
        std::cerr << "falsified: " << e.what() << "\n";
        return kFalsified;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    }
    return kConfigError;
}
