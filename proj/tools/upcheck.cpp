// upcheck: verification runs, delta sweeps, ratio optimization and kernel
// validation for finitely supported sample sequences.
//
// Exit codes: 0 pass, 1 a mathematical check failed, 2 usage or input error.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bernstein/bernstein.hpp"
#include "bernstein/json_io.hpp"
#include "bernstein/parallel.hpp"

using namespace bernstein;

namespace {

constexpr int kPass = 0;
constexpr int kMathFailure = 1;
constexpr int kUsage = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input;
    int random = 0;
    int dim = -1;
    std::uint64_t seed = 0;
    bool allow_inadmissible = false;
    std::string format;
    std::string out;
    double delta = 1.0;
    std::vector<double> deltas;
    std::string mode = "backward";
    std::vector<std::string> checks;
    int restarts = 8;
    int max_iters = 400;
    std::vector<int> dims;
    long max_lag = 32;
    std::string corrupt;
    ToleranceConfig tol;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<CoeffVec> parse_functions(const std::string& text, const std::string& origin) {
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw InputError(origin + " is empty");
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(origin + ": " + e.what());
    }
    std::vector<CoeffVec> out;
    try {
        if (doc.is_array()) {
            for (const auto& item : doc) out.push_back(coeff_vec_from_json(item));
        } else {
            out.push_back(coeff_vec_from_json(doc));
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(origin + ": " + e.what());
    }
    if (out.empty()) throw InputError(origin + " holds no functions");
    return out;
}

// --input (file or inline JSON), --random generator, or the two-sample demo.
std::vector<CoeffVec> load_inputs(const Options& o) {
    if (!o.input.empty() && o.random > 0) throw InputError("--input and --random are exclusive");
    if (!o.input.empty()) {
        const auto first = o.input.find_first_not_of(" \t\r\n");
        if (first != std::string::npos && (o.input[first] == '{' || o.input[first] == '[')) {
            return parse_functions(o.input, "inline input");
        }
        if (!std::filesystem::is_regular_file(o.input)) throw InputError("no such input file: " + o.input);
        return parse_functions(slurp(o.input), o.input);
    }
    if (o.random > 0) {
        const int dim = o.dim < 0 ? 5 : o.dim;
        if (dim < 1) throw InputError("--dim must be >= 1");
        if (!o.allow_inadmissible && dim < 2) throw InputError("an admissible random input needs --dim >= 2");
        std::mt19937_64 rng(o.seed);
        std::vector<CoeffVec> out;
        for (int i = 0; i < o.random; ++i) out.push_back(random_coeffs(rng, dim, !o.allow_inadmissible));
        return out;
    }
    return {CoeffVec(0, {1.0, 1.0})};
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + o.out);
    f << text;
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- verify

const std::vector<std::string> kAllChecks{"backward", "central",      "breitenberger", "heisenberg",
                                          "sine_circle", "localization", "bernstein"};

struct VerifyItem {
    std::vector<InequalityReport> reports;
    std::vector<std::pair<std::string, std::string>> errors;  // (check, message)
};

VerifyItem verify_one(const CoeffVec& f, const Options& o, const std::vector<double>& deltas) {
    VerifyItem item;
    auto run = [&](const std::string& name, auto&& fn) {
        try {
            item.reports.push_back(fn());
        } catch (const InadmissibleFunction& e) {
            item.errors.emplace_back(name, e.what());
        } catch (const ZeroFunction& e) {
            item.errors.emplace_back(name, e.what());
        }
    };
    for (const auto& c : o.checks) {
        if (c == "backward" || c == "central") {
            for (double d : deltas) {
                run(c, [&] {
                    return c == "backward" ? check_backward_up(f, d, std::nullopt, std::nullopt, o.tol)
                                           : check_central_up(f, d, std::nullopt, std::nullopt, o.tol);
                });
            }
        } else if (c == "breitenberger") {
            run(c, [&] { return check_breitenberger_sequence(f, std::nullopt, std::nullopt, o.tol); });
        } else if (c == "heisenberg") {
            run(c, [&] { return check_heisenberg(f, std::nullopt, std::nullopt, o.tol); });
        } else if (c == "sine_circle") {
            run(c, [&] { return check_sine_circle(f, std::nullopt, std::nullopt, o.tol); });
        } else if (c == "localization") {
            run(c, [&] { return check_localization(f, std::nullopt, std::numbers::pi, o.tol); });
        } else {
            run(c, [&] { return check_bernstein(f, std::numbers::pi, o.tol); });
        }
    }
    return item;
}

int run_verify(const Options& o) {
    const auto inputs = load_inputs(o);
    const std::vector<double> deltas = o.deltas.empty() ? std::vector<double>{o.delta} : o.deltas;
    for (double d : deltas) require_delta(d);
    const auto items = parallel_map(inputs.size(), [&](std::size_t i) { return verify_one(inputs[i], o, deltas); });

    bool input_error = false;
    bool failed = false;
    for (const auto& it : items) {
        input_error = input_error || !it.errors.empty();
        for (const auto& r : it.reports) failed = failed || !r.pass;
    }

    if (o.format == "csv") {
        std::ostringstream os;
        os << "input,check,delta,lhs,rhs,residual,pass\n";
        for (std::size_t i = 0; i < items.size(); ++i) {
            for (const auto& r : items[i].reports) {
                os << i << ',' << r.name << ',' << (r.params.delta ? format_double(*r.params.delta) : "") << ','
                   << format_double(r.lhs) << ',' << format_double(r.rhs) << ',' << format_double(r.residual) << ','
                   << (r.pass ? "true" : "false") << '\n';
            }
            for (const auto& [check, msg] : items[i].errors) os << i << ',' << check << ",,,,,error\n";
        }
        emit(o, os.str());
    } else {
        json doc = json::array();
        for (std::size_t i = 0; i < items.size(); ++i) {
            json reports = json::array();
            for (const auto& r : items[i].reports) reports.push_back(to_json(r));
            json errors = json::array();
            for (const auto& [check, msg] : items[i].errors) errors.push_back({{"check", check}, {"error", msg}});
            doc.push_back({{"input", i}, {"f", to_json(inputs[i])}, {"reports", reports}, {"errors", errors}});
        }
        emit(o, json_text(doc));
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
        for (const auto& [check, msg] : items[i].errors) std::cerr << "input " << i << ' ' << check << ": " << msg << '\n';
    }
    if (input_error) return kUsage;
    return failed ? kMathFailure : kPass;
}

// ----------------------------------------------------------------- sweep

int run_sweep(const Options& o) {
    const auto inputs = load_inputs(o);
    if (o.format == "csv" && inputs.size() != 1) throw InputError("CSV sweeps take one input; use --format json");
    const std::vector<double> deltas = o.deltas.empty() ? default_delta_grid() : o.deltas;
    const DiffMode mode = diff_mode_from_string(o.mode);
    std::vector<SweepTable> tables;
    for (const auto& f : inputs) tables.push_back(delta_sweep(f, deltas, mode, o.tol));

    bool failed = false;
    for (const auto& t : tables) {
        for (const auto& r : t.rows) failed = failed || r.residual < -o.tol.ineq_slack;
    }
    if (o.format == "csv") {
        emit(o, sweep_to_csv(tables.front()));
    } else {
        json doc = json::array();
        for (std::size_t i = 0; i < tables.size(); ++i) {
            json rows = json::array();
            for (const auto& r : tables[i].rows) {
                rows.push_back({{"delta", r.delta},
                                {"sigma_a", r.sigma_a},
                                {"sigma_b", r.sigma_b},
                                {"comm_abs", r.comm_abs},
                                {"residual", r.residual},
                                {"diff_to_derivative", r.diff_to_derivative}});
            }
            doc.push_back({{"input", i}, {"mode", to_string(mode)}, {"rows", rows}});
        }
        emit(o, json_text(doc));
    }
    return failed ? kMathFailure : kPass;
}

// -------------------------------------------------------------- optimize

int run_optimize(const Options& o) {
    OptimizeConfig cfg;
    cfg.dim = o.dim < 0 ? 3 : o.dim;
    cfg.delta = o.delta;
    cfg.mode = diff_mode_from_string(o.mode);
    cfg.seed = o.seed;
    cfg.restarts = o.restarts;
    cfg.max_iters = o.max_iters;
    cfg.validate();

    if (!o.dims.empty()) {
        const std::vector<double> deltas = o.deltas.empty() ? std::vector<double>{o.delta} : o.deltas;
        const auto profile = sharpness_profile(o.dims, deltas, cfg.mode, cfg);
        bool ok = true;
        for (const auto& e : profile) ok = ok && e.ratio >= 1.0 - 1e-9;
        emit(o, json_text(to_json(profile)));
        return ok ? kPass : kMathFailure;
    }

    const OptimizeResult r = minimize_ratio(cfg);
    emit(o, json_text(to_json(cfg, r)));
    const bool agrees = std::fabs(r.oracle_ratio - r.ratio) <= o.tol.oracle_tol * r.ratio;
    if (!agrees) std::cerr << "quadrature ratio " << r.oracle_ratio << " disagrees with " << r.ratio << '\n';
    return r.ratio >= 1.0 - 1e-9 && agrees ? kPass : kMathFailure;
}

// ---------------------------------------------------------- oracle-check

oracle::KernelPerturbation corruption(const std::string& target) {
    if (target.empty()) return {};
    const auto colon = target.find(':');
    if (colon == std::string::npos) throw InputError("--corrupt-kernel expects kind:k");
    const std::string kind = target.substr(0, colon);
    long lag = 0;
    try {
        lag = std::stol(target.substr(colon + 1));
    } catch (const std::exception&) {
        throw InputError("--corrupt-kernel expects kind:k");
    }
    return [kind, lag](const std::string& k, long n, double, cplx v) { return k == kind && n == lag ? v + 1e-6 : v; };
}

int run_oracle_check(const Options& o) {
    const std::vector<double> deltas = o.deltas.empty() ? std::vector<double>{0.1, 0.25, 0.5, 0.75, 1.0} : o.deltas;
    for (double d : deltas) require_delta(d);
    auto report = oracle::validate_kernels(o.max_lag, deltas, o.tol.eq_tol, corruption(o.corrupt));

    // explicit inputs also get a line-side cross-check of every shifted product
    if (!o.input.empty() || o.random > 0) {
        const auto inputs = load_inputs(o);
        auto rows = parallel_map(inputs.size() * deltas.size(), [&](std::size_t idx) {
            const auto& f = inputs[idx / deltas.size()];
            const double d = deltas[idx % deltas.size()];
            oracle::KernelCheck c;
            c.kind = "grid_inner";
            c.k = static_cast<long>(idx / deltas.size());
            c.delta = d;
            c.closed_form = shifted_inner(f, f, d);
            c.quadrature = oracle::dense_grid_inner(f, f, d).value;
            c.abs_err = std::abs(c.closed_form - c.quadrature);
            c.pass = c.abs_err <= o.tol.oracle_tol * std::max(1.0, norm_sq(f));
            return c;
        });
        for (auto& c : rows) report.entries.push_back(std::move(c));
    }

    if (o.format == "csv") {
        std::ostringstream os;
        os << "kind,k,delta,closed_re,closed_im,quad_re,quad_im,abs_err,pass\n";
        for (const auto& e : report.entries) {
            os << e.kind << ',' << e.k << ',' << format_double(e.delta) << ',' << format_double(e.closed_form.real())
               << ',' << format_double(e.closed_form.imag()) << ',' << format_double(e.quadrature.real()) << ','
               << format_double(e.quadrature.imag()) << ',' << format_double(e.abs_err) << ','
               << (e.pass ? "true" : "false") << '\n';
        }
        emit(o, os.str());
    } else {
        emit(o, json_text(to_json(report)));
    }
    for (const auto& e : report.failures()) {
        std::cerr << "mismatch: " << e.kind << " k=" << e.k << " delta=" << e.delta << " err=" << e.abs_err << '\n';
    }
    return report.all_pass() ? kPass : kMathFailure;
}

void add_input_options(CLI::App* sub, Options& o) {
    sub->add_option("--input", o.input, "CoeffVec JSON file or inline JSON (object or array)");
    sub->add_option("--random", o.random, "generate this many random inputs")->check(CLI::PositiveNumber);
    sub->add_option("--dim", o.dim, "support size of generated inputs");
    sub->add_option("--seed", o.seed, "generator seed");
    sub->add_flag("--allow-inadmissible", o.allow_inadmissible, "do not project generated inputs");
}

void add_common_options(CLI::App* sub, Options& o, const std::string& default_format) {
    o.format = default_format;
    sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", o.out, "output path (default stdout)");
    sub->add_option("--tol-eq", o.tol.eq_tol, "identity tolerance");
    sub->add_option("--tol-oracle", o.tol.oracle_tol, "quadrature agreement tolerance");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Uncertainty inequalities for band-limited functions given by integer samples"};
    app.require_subcommand(1);

    // one Options per subcommand so default formats do not collide
    Options verify_o, sweep_o, opt_o, oracle_o;

    auto* verify = app.add_subcommand("verify", "run every inequality check on the inputs");
    add_input_options(verify, verify_o);
    add_common_options(verify, verify_o, "json");
    verify->add_option("--delta", verify_o.delta, "difference step in (0, 1]");
    verify->add_option("--deltas", verify_o.deltas, "comma-separated steps")->delimiter(',');
    verify_o.checks = kAllChecks;
    verify->add_option("--checks", verify_o.checks, "comma-separated subset of checks")
        ->delimiter(',')
        ->check(CLI::IsMember(kAllChecks));

    auto* sweep = app.add_subcommand("sweep", "tabulate the difference inequality over a delta grid");
    add_input_options(sweep, sweep_o);
    add_common_options(sweep, sweep_o, "csv");
    sweep->add_option("--deltas", sweep_o.deltas, "comma-separated steps (default 2^-k, k=0..10)")->delimiter(',');
    sweep->add_option("--mode", sweep_o.mode)->check(CLI::IsMember({"backward", "central"}));

    auto* optimize = app.add_subcommand("optimize", "minimize the uncertainty ratio");
    add_common_options(optimize, opt_o, "json");
    optimize->add_option("--dim", opt_o.dim, "odd support size >= 3");
    optimize->add_option("--dims", opt_o.dims, "comma-separated sizes for a sharpness profile")->delimiter(',');
    optimize->add_option("--delta", opt_o.delta, "difference step in (0, 1]");
    optimize->add_option("--deltas", opt_o.deltas, "steps for a sharpness profile")->delimiter(',');
    optimize->add_option("--mode", opt_o.mode)->check(CLI::IsMember({"backward", "central"}));
    optimize->add_option("--seed", opt_o.seed);
    optimize->add_option("--restarts", opt_o.restarts);
    optimize->add_option("--max-iters", opt_o.max_iters);

    auto* oracle_cmd = app.add_subcommand("oracle-check", "compare closed-form kernels with quadrature");
    add_input_options(oracle_cmd, oracle_o);
    add_common_options(oracle_cmd, oracle_o, "json");
    oracle_cmd->add_option("--max-lag", oracle_o.max_lag, "largest |k| checked");
    oracle_cmd->add_option("--deltas", oracle_o.deltas, "comma-separated shifts")->delimiter(',');
    oracle_cmd->add_option("--corrupt-kernel", oracle_o.corrupt)->group("");  // fault injection for tests

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*verify) {
            verify_o.tol.validate();
            return run_verify(verify_o);
        }
        if (*sweep) {
            sweep_o.tol.validate();
            return run_sweep(sweep_o);
        }
        if (*optimize) {
            opt_o.tol.validate();
            return run_optimize(opt_o);
        }
        oracle_o.tol.validate();
        return run_oracle_check(oracle_o);
    } catch (const InputError& e) {
        std::cerr << "upcheck: " << e.what() << '\n';
        return kUsage;
    } catch (const ParameterError& e) {
        std::cerr << "upcheck: " << e.what() << '\n';
        return kUsage;
    } catch (const InadmissibleFunction& e) {
        std::cerr << "upcheck: " << e.what() << '\n';
        return kUsage;
    } catch (const ZeroFunction& e) {
        std::cerr << "upcheck: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "upcheck: " << e.what() << '\n';
        return kUsage;
    } catch (const BoundViolation& e) {
        std::cerr << "upcheck: bound violated: " << e.what() << '\n';
        return kMathFailure;
    } catch (const AllStartsDegenerate& e) {
        std::cerr << "upcheck: " << e.what() << '\n';
        return kMathFailure;
    }
}
