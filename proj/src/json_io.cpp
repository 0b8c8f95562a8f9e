#include "bernstein/json_io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace bernstein {

namespace {

json complex_json(cplx c) { return json::array({c.real(), c.imag()}); }

}  // namespace

json to_json(const CoeffVec& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(complex_json(c));
    return {{"n_min", f.n_min()}, {"coeffs", coeffs}};
}

CoeffVec coeff_vec_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("CoeffVec JSON must be an object");
    if (!j.contains("n_min") || !j.at("n_min").is_number_integer()) {
        throw std::invalid_argument("CoeffVec JSON needs an integer 'n_min'");
    }
    if (!j.contains("coeffs") || !j.at("coeffs").is_array() || j.at("coeffs").empty()) {
        throw std::invalid_argument("CoeffVec JSON needs a non-empty 'coeffs' array");
    }
    std::vector<cplx> coeffs;
    for (const auto& c : j.at("coeffs")) {
        if (c.is_number()) {
            coeffs.emplace_back(c.get<double>(), 0.0);
        } else if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number()) {
            coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
        } else {
            throw std::invalid_argument("each coefficient must be [re, im]");
        }
    }
    return CoeffVec(j.at("n_min").get<long>(), std::move(coeffs));
}

json to_json(const InequalityReport& r) {
    json params = json::object();
    if (r.params.delta) params["delta"] = *r.params.delta;
    if (r.params.a) params["a"] = complex_json(*r.params.a);
    if (r.params.b) params["b"] = complex_json(*r.params.b);
    if (r.params.band_limit) params["R"] = *r.params.band_limit;
    if (!r.params.op_a.empty()) params["op_a"] = r.params.op_a;
    if (!r.params.op_b.empty()) params["op_b"] = r.params.op_b;
    json j = {{"name", r.name},         {"lhs", r.lhs},   {"rhs", r.rhs},
              {"residual", r.residual}, {"pass", r.pass}, {"params", params},
              {"degenerate_bound", r.degenerate_bound}};
    if (r.chain) {
        const ChainData& c = *r.chain;
        j["chain"] = {{"factor_a", c.factor_a}, {"factor_b", c.factor_b}, {"sigma_a", c.sigma_a},
                      {"sigma_b", c.sigma_b},   {"comm_abs", c.comm_abs}, {"chain1", c.chain1},
                      {"chain2", c.chain2}};
    }
    return j;
}

json to_json(const oracle::KernelValidationReport& r) {
    json out = json::array();
    for (const auto& e : r.entries) {
        out.push_back({{"kind", e.kind},
                       {"k", e.k},
                       {"delta", e.delta},
                       {"closed_form", complex_json(e.closed_form)},
                       {"quadrature", complex_json(e.quadrature)},
                       {"abs_err", e.abs_err}});
    }
    return out;
}

json to_json(const OptimizeConfig& cfg) {
    return {{"dim", cfg.dim},         {"delta", cfg.delta}, {"mode", to_string(cfg.mode)},
            {"max_iters", cfg.max_iters}, {"step0", cfg.step0}, {"seed", cfg.seed},
            {"restarts", cfg.restarts}};
}

json to_json(const OptimizeConfig& cfg, const OptimizeResult& r) {
    json trace = json::array();
    for (const auto& p : downsample_trace(r.trace)) trace.push_back({p.iter, p.ratio});
    return {{"config", to_json(cfg)},          {"ratio", r.ratio},
            {"initial_ratio", r.initial_ratio}, {"oracle_ratio", r.oracle_ratio},
            {"converged", r.converged},        {"best_restart", r.best_restart},
            {"best_f", to_json(r.best_f)},     {"trace", trace}};
}

json to_json(const std::vector<SharpnessEntry>& profile) {
    json out = json::array();
    for (const auto& e : profile) out.push_back({{"dim", e.dim}, {"delta", e.delta}, {"ratio", e.ratio}});
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string sweep_to_csv(const SweepTable& table) {
    std::ostringstream os;
    os << "delta,sigma_a,sigma_b,comm_abs,residual,diff_to_derivative\n";
    for (const auto& r : table.rows) {
        os << format_double(r.delta) << ',' << format_double(r.sigma_a) << ',' << format_double(r.sigma_b) << ','
           << format_double(r.comm_abs) << ',' << format_double(r.residual) << ','
           << format_double(r.diff_to_derivative) << '\n';
    }
    return os.str();
}

}  // namespace bernstein
