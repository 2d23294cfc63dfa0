#include "badweave/io.hpp"
#include "badweave/transference.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace badweave;

namespace {

// string-based surface: rationals as "p/q", points/params as JSON

std::string derive_json(const std::string& config_json) {
    Params prm = params_from_config(config_from_json(config_json));
    std::string out = "{\"R\":" + std::to_string(prm.R) + ",\"c1\":\"" + rat_str(prm.c1) +
                      "\",\"epsilon\":\"" + rat_str(prm.epsilon) + "\",\"pairs\":[";
    for (std::size_t t = 0; t < prm.pairs.size(); ++t) {
        const auto& dp = prm.pairs[t];
        if (t) out += ",";
        out += "{\"pair\":\"" + dp.pair.str() + "\",\"c1t\":\"" + rat_str(dp.c1t) +
               "\",\"c\":\"" + rat_str(dp.ct) + "\"}";
    }
    return out + "]}";
}

py::dict construct(const std::string& config_json, long depth) {
    RunConfig cfg = config_from_json(config_json);
    if (depth > 0) cfg.depth = depth;
    Params prm = params_from_config(cfg);
    auto run = run_construction(prm, cfg.depth);
    py::dict out;
    out["tree_jsonl"] = tree_to_jsonl(run);
    out["removals_csv"] = removals_to_csv(run);
    out["first_empty"] = run.first_empty;
    if (run.first_empty == -1) out["cert_json"] = certificate_to_json(extract_point(run));
    return out;
}

std::optional<std::string> py_check_dual(const std::string& x, const std::string& y,
                                         const std::string& pair, const std::string& c,
                                         const std::string& Hmax) {
    Pair p = parse_pair(pair);
    auto w = check_dual(parse_theta(x), parse_theta(y), p, parse_rat(c), parse_rat(Hmax));
    if (!w) return std::nullopt;
    return dual_witness_json(w->A, w->B, w->dist, p);
}

std::optional<std::string> py_check_simultaneous(const std::string& x, const std::string& y,
                                                 const std::string& pair, const std::string& c,
                                                 long Q) {
    Pair p = parse_pair(pair);
    auto w = check_simultaneous(parse_theta(x), parse_theta(y), p, parse_rat(c), Q);
    if (!w) return std::nullopt;
    return simul_witness_json(w->q, w->dx, w->dy, p);
}

std::string py_dual_from_simultaneous(long q0, const std::string& c, const std::string& pair,
                                      const std::string& x, const std::string& y) {
    Pair p = parse_pair(pair);
    auto r = dual_from_simultaneous(q0, parse_rat(c), p, parse_theta(x), parse_theta(y));
    return dual_witness_json(r.u1, r.u2, r.dist, p);
}

std::string py_simultaneous_from_dual(long a, long b, const std::string& c,
                                      const std::string& pair, const std::string& x,
                                      const std::string& y) {
    Pair p = parse_pair(pair);
    auto r = simultaneous_from_dual(a, b, parse_rat(c), p, parse_theta(x), parse_theta(y));
    return simul_witness_json(r.q, r.dx, r.dy, p);
}

py::dict py_continued_fraction(const std::string& theta) {
    CFExpansion cf = continued_fraction(parse_theta(theta));
    auto longs = [](const std::vector<Int>& v) {
        std::vector<long> out;
        for (const Int& a : v) out.push_back(a.get_si());
        return out;
    };
    py::dict d;
    d["preperiod"] = longs(cf.preperiod);
    d["period"] = longs(cf.period);
    d["a_max"] = cf.a_max.get_si();
    return d;
}

} // namespace

PYBIND11_MODULE(_badweave, m) {
    m.doc() = "interval-removal construction with exact arithmetic";
    m.def("derive_params", &derive_json, py::arg("config_json"),
          "derive run constants; returns JSON");
    m.def("construct", &construct, py::arg("config_json"), py::arg("depth") = 0,
          "run the construction; returns tree/removals/certificate");
    m.def("check_dual", &py_check_dual, py::arg("x"), py::arg("y"), py::arg("pair"),
          py::arg("c"), py::arg("Hmax"), "dual check; witness JSON or None");
    m.def("check_simultaneous", &py_check_simultaneous, py::arg("x"), py::arg("y"),
          py::arg("pair"), py::arg("c"), py::arg("Q"),
          "simultaneous check; witness JSON or None");
    m.def("dual_from_simultaneous", &py_dual_from_simultaneous, py::arg("q0"), py::arg("c"),
          py::arg("pair"), py::arg("x"), py::arg("y"), "transfer a simultaneous witness");
    m.def("simultaneous_from_dual", &py_simultaneous_from_dual, py::arg("a"), py::arg("b"),
          py::arg("c"), py::arg("pair"), py::arg("x"), py::arg("y"),
          "transfer a dual witness");
    m.def("continued_fraction", &py_continued_fraction, py::arg("theta"),
          "partial quotients of theta: preperiod, period, a_max");
}
