// cli_commands.cpp - command implementations behind the hardysn CLI
//
// This software is licensed under the terms of the Apache Licence Version 2.0
// which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.

#include "hardysn/cli_commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hardysn/approx_scale.hpp"
#include "hardysn/oracle.hpp"
#include "hardysn/partition.hpp"
#include "hardysn/space.hpp"

namespace hardysn::cli {

namespace {

bool is_l2(const SpaceSpec& sp) {
    return sp.is_constant() && std::abs(sp.exponent() - 2.0) < 1e-12;
}

}  // namespace

Interval config_interval(const RunConfig& cfg) { return Interval(cfg.a, cfg.b); }

GridFunction load_profile(const std::string& spec, const Interval& iv, int m) {
    if (spec.rfind("csv:", 0) == 0) return read_csv(spec.substr(4), iv, m);
    return make_builtin(spec, iv, m);
}

SpaceSpec config_space(const RunConfig& cfg) {
    const std::string& s = cfg.p;
    if (s.empty()) throw std::invalid_argument("empty exponent spec");
    char* end = nullptr;
    const double val = std::strtod(s.c_str(), &end);
    if (end != nullptr && *end == '\0' && end != s.c_str())
        return SpaceSpec::constant(val);
    return SpaceSpec::variable(load_profile(s, config_interval(cfg), cfg.grid));
}

WeightPair config_weights(const RunConfig& cfg) {
    const Interval iv = config_interval(cfg);
    return WeightPair(load_profile(cfg.u, iv, cfg.grid),
                      load_profile(cfg.v, iv, cfg.grid));
}

OperatorSpec config_operator(const RunConfig& cfg) {
    const Interval iv = config_interval(cfg);
    return OperatorSpec(iv, iv.a, config_weights(cfg), config_space(cfg));
}

std::vector<int> parse_n_list(const std::string& s) {
    std::vector<int> ns;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t pos = 0;
        int n = 0;
        try {
            n = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad index list entry '" + tok + "'");
        }
        if (pos != tok.size() || n <= 0)
            throw std::invalid_argument("bad index list entry '" + tok + "'");
        ns.push_back(n);
    }
    if (ns.empty()) throw std::invalid_argument("empty index list");
    return ns;
}

CommandOutput cmd_norm(const RunConfig& cfg) {
    const Interval iv = config_interval(cfg);
    const SpaceSpec sp = config_space(cfg);
    const WeightPair w = config_weights(cfg);
    CommandOutput out;
    const double vn = luxemburg_norm(w.v, sp, iv);
    const double ua = associate_norm(w.u, sp, iv);
    out.results["v_norm"] = vn;
    out.results["u_associate_norm"] = ua;
    out.results["holder_product"] = ua * vn;
    out.results["integral_uv"] = integrate(product(w.u, w.v), iv);
    out.results["p_min"] = sp.p_min();
    out.results["p_max"] = sp.p_max();
    out.results["associate_caveat"] = sp.associate_caveat();
    if (!sp.is_constant()) {
        out.results["muckenhoupt"] = muckenhoupt_constant(sp, iv, cfg.depth);
        const LogHolderReport lh = log_holder_check(sp.exponents());
        out.results["log_holder_constant"] = lh.constant;
        out.results["log_holder_pass"] = lh.pass;
    }
    return out;
}

CommandOutput cmd_bound(const RunConfig& cfg) {
    const OperatorSpec op = config_operator(cfg);
    const NormBracket br = norm_bracket(op, cfg.k_upper);
    const SupResult s = a_sup(op);
    CommandOutput out;
    out.results["lower"] = br.lower;
    out.results["upper"] = br.upper;
    out.results["method"] = br.method;
    out.results["a_sup"] = s.value;
    out.results["a_argmax"] = s.argmax;
    out.results["associate_caveat"] = op.space.associate_caveat();
    Table prof{"a_profile", {"x", "value"}, {}};
    const int m = 129;
    for (int i = 0; i <= m; ++i) {
        const double x =
            op.domain.a + op.domain.length() * static_cast<double>(i) / m;
        prof.rows.push_back({x, a_profile(op, x)});
    }
    out.tables.push_back(std::move(prof));
    return out;
}

CommandOutput cmd_compact(const RunConfig& cfg) {
    const OperatorSpec op = config_operator(cfg);
    const int n = std::clamp(cfg.n, 1, 48);
    const CompactnessProfile cp = compactness_profile(op, n);
    CommandOutput out;
    Table left{"tail_left", {"x", "value"}, {}};
    for (std::size_t i = 0; i < cp.left.size(); ++i)
        left.rows.push_back({cp.x_left[i], cp.left[i]});
    Table right{"tail_right", {"x", "value"}, {}};
    for (std::size_t i = 0; i < cp.right.size(); ++i)
        right.rows.push_back({cp.x_right[i], cp.right[i]});
    out.results["left_tail_final"] = cp.left.empty() ? 0.0 : cp.left.back();
    out.results["right_tail_final"] = cp.right.empty() ? 0.0 : cp.right.back();
    out.tables.push_back(std::move(left));
    out.tables.push_back(std::move(right));
    return out;
}

CommandOutput cmd_deviation(const RunConfig& cfg) {
    const Interval iv = config_interval(cfg);
    const SpaceSpec sp = config_space(cfg);
    const WeightPair w = config_weights(cfg);
    DeviationOptions opts;
    opts.budget = std::max(1, cfg.budget);
    opts.seed = cfg.seed;
    const DeviationBracket db = deviation_bracket(iv, w, sp, opts);
    CommandOutput out;
    out.results["lower"] = db.lower;
    out.results["upper"] = db.upper;
    out.results["balance_point"] = db.balance_point;
    out.results["alpha_bound"] = db.alpha_bound;
    out.results["budget"] = opts.budget;
    out.results["associate_caveat"] = sp.associate_caveat();
    return out;
}

CommandOutput cmd_equalize(const RunConfig& cfg) {
    const Interval iv = config_interval(cfg);
    const SpaceSpec sp = config_space(cfg);
    const WeightPair w = config_weights(cfg);
    const BalanceResult bal = equalize(iv, w, sp);
    CommandOutput out;
    out.results["point"] = bal.point;
    out.results["left_norm"] = bal.left_norm;
    out.results["right_norm"] = bal.right_norm;
    out.results["residual"] = bal.residual;
    out.results["iterations"] = bal.iterations;
    return out;
}

CommandOutput cmd_partition(const RunConfig& cfg) {
    if (!(cfg.eps > 0.0))
        throw std::invalid_argument("partition requires a positive --eps");
    const Interval iv = config_interval(cfg);
    const SpaceSpec sp = config_space(cfg);
    const WeightPair w = config_weights(cfg);
    const Partition part = build_partition(cfg.eps, iv, w, sp);
    CommandOutput out;
    out.results["epsilon"] = part.epsilon;
    out.results["count"] = part.count();
    out.results["points"] = part.points;
    nlohmann::json pieces = nlohmann::json::array();
    Table t{"pieces", {"index", "left", "right", "value", "balanced"}, {}};
    for (std::size_t i = 0; i < part.pieces.size(); ++i) {
        const PieceInfo& pc = part.pieces[i];
        const bool balanced = pc.kind == PieceKind::Balanced;
        pieces.push_back({{"left", pc.j.a},
                          {"right", pc.j.b},
                          {"kind", balanced ? "balanced" : "first_norm"},
                          {"value", pc.value}});
        t.rows.push_back({static_cast<double>(i), pc.j.a, pc.j.b, pc.value,
                          balanced ? 1.0 : 0.0});
    }
    out.results["pieces"] = std::move(pieces);
    out.tables.push_back(std::move(t));
    return out;
}

CommandOutput cmd_snum(const RunConfig& cfg) {
    const Interval iv = config_interval(cfg);
    const SpaceSpec sp = config_space(cfg);
    const WeightPair w = config_weights(cfg);
    const std::vector<int> ns = parse_n_list(cfg.n_list);
    CommandOutput out;
    const bool with_oracle = is_l2(sp);
    std::vector<double> sigma;
    if (with_oracle) {
        const int oracle_m = std::clamp(cfg.grid, 16, 2048);
        const OperatorSpec op(iv, iv.a, w, sp);
        const KernelMatrix km = discretize(op, oracle_m);
        const int k = *std::max_element(ns.begin(), ns.end());
        sigma = svd_snumbers(km, std::min(k, km.size));
        out.results["oracle_grid"] = oracle_m;
    }
    Table t{"snum", {"n", "epsilon", "lower", "upper"}, {}};
    if (with_oracle) {
        t.columns.push_back("sigma");
        t.columns.push_back("eps_over_sigma");
    }
    std::string notes;
    for (int n : ns) {
        const SNumberEstimate est =
            snum_estimate(n, iv, w, sp, cfg.c_low, cfg.c_up);
        std::vector<double> row{static_cast<double>(n), est.epsilon, est.lower,
                                est.upper};
        if (with_oracle && n <= static_cast<int>(sigma.size())) {
            row.push_back(sigma[n - 1]);
            row.push_back(est.epsilon / sigma[n - 1]);
        }
        t.rows.push_back(std::move(row));
        notes = est.notes;
    }
    out.results["notes"] = notes;
    out.results["c_low"] = cfg.c_low;
    out.results["c_up"] = cfg.c_up;
    out.tables.push_back(std::move(t));
    return out;
}

CommandOutput cmd_oracle(const RunConfig& cfg) {
    const OperatorSpec op = config_operator(cfg);
    const int m = std::clamp(cfg.grid, 16, 8192);
    const KernelMatrix km = discretize(op, m);
    const int k = std::clamp(cfg.n, 1, km.size);
    const std::vector<double> sigma = svd_snumbers(km, k);
    CommandOutput out;
    out.results["m"] = km.size;
    out.results["sigma_1"] = sigma.empty() ? 0.0 : sigma[0];
    if (!is_l2(op.space))
        out.results["note"] =
            "singular values are the mean-square reference regardless of the "
            "configured exponent";
    Table t{"singular_values", {"n", "sigma", "n_sigma"}, {}};
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const double n = static_cast<double>(i + 1);
        t.rows.push_back({n, sigma[i], n * sigma[i]});
    }
    out.tables.push_back(std::move(t));
    return out;
}

CommandOutput cmd_asymptote(const RunConfig& cfg) {
    const Interval iv = config_interval(cfg);
    const SpaceSpec sp = config_space(cfg);
    const WeightPair w = config_weights(cfg);
    const std::vector<int> ns = parse_n_list(cfg.n_list);
    const AsymptoteReport rep = asymptote(ns, iv, w, sp);
    CommandOutput out;
    out.results["integral_uv"] = rep.integral_uv;
    out.results["reference"] = rep.reference;
    out.results["reference_kind"] = rep.reference_kind;
    out.results["reference_only"] = rep.reference_only;
    Table t{"asymptote", {"n", "epsilon", "n_epsilon", "ratio"}, {}};
    for (const AsymptoteRow& r : rep.rows)
        t.rows.push_back({static_cast<double>(r.n), r.epsilon, r.n_eps, r.ratio});
    out.tables.push_back(std::move(t));
    return out;
}

namespace {

void add_common_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--a", cfg.a, "left endpoint")->capture_default_str();
    sub->add_option("--b", cfg.b, "right endpoint")->capture_default_str();
    sub->add_option("--p", cfg.p,
                    "exponent: real, csv:PATH, or builtin profile spec")
        ->capture_default_str();
    sub->add_option("--u", cfg.u, "inner weight: builtin spec or csv:PATH")
        ->capture_default_str();
    sub->add_option("--v", cfg.v, "outer weight: builtin spec or csv:PATH")
        ->capture_default_str();
    sub->add_option("--grid", cfg.grid, "number of grid cells")
        ->check(CLI::Range(2, 1 << 20))
        ->capture_default_str();
    sub->add_option("--seed", cfg.seed, "seed for randomized trials")
        ->capture_default_str();
    sub->add_option("--eps", cfg.eps, "target piece value for partition")
        ->capture_default_str();
    sub->add_option("--n", cfg.n, "index / point count, command-specific")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--n-list", cfg.n_list, "comma-separated index list")
        ->capture_default_str();
    sub->add_option("--depth", cfg.depth, "dyadic depth for diagnostics")
        ->check(CLI::Range(0, 20))
        ->capture_default_str();
    sub->add_option("--budget", cfg.budget, "ascent rounds for trial search")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--c-low", cfg.c_low, "lower bracket constant for snum")
        ->capture_default_str();
    sub->add_option("--c-up", cfg.c_up, "upper bracket constant for snum")
        ->capture_default_str();
    sub->add_option("--k-upper", cfg.k_upper,
                    "upper bracket constant for variable exponents")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "write the structured report here");
    sub->add_option("--csv", cfg.csv, "write per-table CSV files into this dir");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& os) {
    CLI::App app{"two-sided s-number estimates for weighted Hardy operators"};
    app.set_config("--config", "",
                   "key-value config file with per-command sections");
    app.require_subcommand(1);

    RunConfig cfg;
    int rc = 0;
    struct CmdDef {
        const char* name;
        const char* desc;
        CommandOutput (*fn)(const RunConfig&);
    };
    static constexpr CmdDef kCommands[] = {
        {"norm", "weight norms and Holder product on the interval", &cmd_norm},
        {"bound", "two-sided operator norm bracket", &cmd_bound},
        {"compact", "boundedness functional decay toward the endpoints",
         &cmd_compact},
        {"script-a", "base-independent deviation functional bracket",
         &cmd_deviation},
        {"equalize", "balance point of the one-sided restricted norms",
         &cmd_equalize},
        {"partition", "greedy epsilon-partition of the interval",
         &cmd_partition},
        {"snum", "s-number estimates from the partition scale", &cmd_snum},
        {"oracle", "dense mean-square singular values", &cmd_oracle},
        {"asymptote", "n * eps_n against the limiting constant",
         &cmd_asymptote},
    };
    for (const CmdDef& c : kCommands) {
        CLI::App* sub = app.add_subcommand(c.name, c.desc);
        add_common_options(sub, cfg);
        sub->callback([&cfg, &os, &rc, c]() {
            try {
                const CommandOutput result = c.fn(cfg);
                rc = emit_report(cfg, c.name, result, {}, os);
            } catch (const std::exception& e) {
                try {
                    rc = emit_report(cfg, c.name, CommandOutput{},
                                     {std::string(e.what())}, os);
                } catch (const std::exception& inner) {
                    os << "error: " << inner.what() << "\n";
                    rc = 1;
                }
            }
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    return rc;
}

}  // namespace hardysn::cli
