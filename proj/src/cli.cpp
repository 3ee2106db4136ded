#include "kpztail/cli.hpp"

#include <cstdio>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "kpztail/asymptotics.hpp"
#include "kpztail/equilibrium.hpp"

namespace kpztail {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct Cell {
    std::string text;
    bool is_number;
    Cell(double v) : text(fmt17(v)), is_number(true) {}
    Cell(int v) : text(std::to_string(v)), is_number(true) {}
    Cell(std::string s) : text(std::move(s)), is_number(false) {}
    Cell(const char* s) : text(s), is_number(false) {}
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    void emit(OutputFormat format, std::ostream& out) const {
        if (format == OutputFormat::csv) {
            for (std::size_t i = 0; i < header.size(); ++i)
                out << header[i] << (i + 1 < header.size() ? "," : "\n");
            for (const auto& row : rows)
                for (std::size_t i = 0; i < row.size(); ++i)
                    out << row[i].text << (i + 1 < row.size() ? "," : "\n");
        } else {
            out << "[";
            for (std::size_t r = 0; r < rows.size(); ++r) {
                out << (r ? ",\n " : "\n ") << "{";
                for (std::size_t i = 0; i < rows[r].size(); ++i) {
                    const Cell& c = rows[r][i];
                    out << (i ? "," : "") << "\"" << header[i] << "\":";
                    if (c.is_number) out << c.text;
                    else out << "\"" << c.text << "\"";
                }
                out << "}";
            }
            out << "\n]\n";
        }
    }
};

double need(const std::optional<double>& v, const char* flag) {
    if (!v) throw DomainError(std::string("missing required flag --") + flag);
    return *v;
}

std::vector<double> linspace(const std::array<double, 3>& grid) {
    double lo = grid[0], hi = grid[1];
    int count = static_cast<int>(grid[2]);
    if (grid[2] != count || count < 2) throw DomainError("grid count must be an integer >= 2");
    if (!(hi > lo)) throw DomainError("grid requires max > min");
    std::vector<double> pts(count);
    for (int i = 0; i < count; ++i) pts[i] = lo + (hi - lo) * i / (count - 1);
    return pts;
}

KernelRep single_rep(RepChoice rep) {
    if (rep == RepChoice::both) throw DomainError("--rep both is only valid for the q command");
    return rep == RepChoice::sigma ? KernelRep::SigmaWeighted : KernelRep::FiniteTemperature;
}

Table cmd_q(const RunConfig& c) {
    Params p(need(c.s, "s"), need(c.T, "T"));
    int order = c.order.value_or(80);
    std::vector<std::pair<std::string, KernelRep>> reps;
    if (c.rep != RepChoice::finite_t) reps.emplace_back("sigma", KernelRep::SigmaWeighted);
    if (c.rep != RepChoice::sigma) reps.emplace_back("finite-t", KernelRep::FiniteTemperature);
    Table t{{"rep", "log_q", "order", "error_estimate"}, {}};
    for (const auto& [name, rep] : reps) {
        FredholmResult r = log_q(p, rep, order, c.precision);
        t.rows.push_back({name, r.log_det, r.order, r.error_estimate});
    }
    return t;
}

Table cmd_tw(const RunConfig& c) {
    double x = -need(c.s, "s");
    int order = c.order.value_or(80);
    double val = tracy_widom_log_cdf(x, order, c.precision);
    double half = tracy_widom_log_cdf(x, order / 2, c.precision);
    return {{"x", "log_tw", "order", "error_estimate"},
            {{x, val, order, std::fabs(val - half)}}};
}

Table cmd_endpoint(const RunConfig& c) {
    Params p(need(c.s, "s"), need(c.T, "T"));
    EquilibriumData eq = solve_lambda0(p);
    double asym = lambda0_asymptotic(p);
    double scaled = std::fabs(eq.lambda0 - asym) * std::pow(p.s, 2.5) * p.t13();
    return {{"lambda0", "residual", "asymptotic", "scaled_error"},
            {{eq.lambda0, eq.residual, asym, scaled}}};
}

Table cmd_density(const RunConfig& c) {
    Params p(need(c.s, "s"), need(c.T, "T"));
    if (!c.grid) throw DomainError("density requires --grid min,max,count");
    EquilibriumData eq = solve_lambda0(p);
    Table t{{"lambda", "psi", "sqrt_bound", "w"}, {}};
    for (double lam : linspace(*c.grid))
        t.rows.push_back(
            {lam, psi(lam, eq), 2.0 * std::sqrt(eq.lambda0 - lam), w_at(lam, eq)});
    return t;
}

Table cmd_asym(const RunConfig& c) {
    Params p(need(c.s, "s"), need(c.T, "T"));
    Table t{{"group", "term", "value"}, {}};
    auto push = [&](const char* group, const AsymptoticBreakdown& b) {
        for (const auto& [name, value] : b.terms) t.rows.push_back({group, name, value});
        t.rows.push_back({group, "total", b.total});
    };
    push("theorem", log_q_asymptotic(p));
    push("fixed_t", log_q_expansion_fixed_T(p));
    push("tw_tail", tw_tail_expansion(p.s));
    t.rows.push_back({"naive", "total", naive_estimate(p)});
    return t;
}

Table cmd_compare(const RunConfig& c) {
    double T = need(c.T, "T");
    if (!c.grid) throw DomainError("compare requires --grid min,max,count");
    int order = c.order.value_or(80);
    KernelRep rep = single_rep(c.rep);
    Table t{{"s", "log_q_numeric", "expansion_total", "delta", "delta_over_log2s"}, {}};
    for (double s : linspace(*c.grid)) {
        if (!(s > 1.0)) throw DomainError("compare requires grid values s > 1");
        double numeric = log_q(Params(s, T), rep, order, c.precision).log_det;
        double expansion = log_q_expansion_fixed_T(Params(s, T)).total;
        double delta = std::fabs(numeric - expansion);
        double l = std::log(s);
        t.rows.push_back({s, numeric, expansion, delta, delta / (l * l)});
    }
    return t;
}

Table cmd_scan(const RunConfig& c) {
    Params p(need(c.s, "s"), need(c.T, "T"));
    if (!c.grid) throw DomainError("scan requires --grid min,max,count");
    std::vector<int> orders;
    for (double v : linspace(*c.grid)) orders.push_back(static_cast<int>(std::lround(v)));
    Table t{{"order", "log_det", "error_estimate"}, {}};
    for (const ScanRow& row : convergence_scan(p, single_rep(c.rep), orders, c.precision))
        t.rows.push_back({row.order, row.log_det, row.error_estimate});
    return t;
}

Table cmd_tail(const RunConfig& c) {
    Params p(need(c.s, "s"), need(c.T, "T"));
    std::function<double(double, double)> q_eval;
    if (c.order) {
        KernelRep rep = single_rep(c.rep);
        int order = *c.order;
        Precision prec = c.precision;
        q_eval = [rep, order, prec](double s, double T) {
            return log_q(Params(s, T), rep, order, prec).log_det;
        };
    } else {
        q_eval = [](double s, double T) { return log_q_asymptotic(Params(s, T)).total; };
    }
    TailBracket tb = kpz_tail_bracket(p, c.epsilon, q_eval);
    return {{"lower_A", "upper_B", "s_tilde", "epsilon"},
            {{tb.lower_A, tb.upper_B, tb.s_tilde, tb.epsilon}}};
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    std::ostringstream buffer;
    try {
        Table t;
        switch (config.command) {
        case Command::q: t = cmd_q(config); break;
        case Command::tw: t = cmd_tw(config); break;
        case Command::endpoint: t = cmd_endpoint(config); break;
        case Command::density: t = cmd_density(config); break;
        case Command::asym: t = cmd_asym(config); break;
        case Command::compare: t = cmd_compare(config); break;
        case Command::scan: t = cmd_scan(config); break;
        case Command::tail: t = cmd_tail(config); break;
        }
        t.emit(config.format, buffer);
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        // SpectrumOutOfRange, NoConvergence, DominanceNotEstablished,
        // TruncationTooTight, QuadratureFailure, RangeExceeded: the message
        // already carries the failure name.
        err << e.what() << "\n";
        return 3;
    }
    out << buffer.str();
    return 0;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Deformed-Airy-kernel Fredholm determinants for the KPZ lower tail"};
    app.require_subcommand(1);

    RunConfig cfg;
    double s_val = 0, T_val = 0, h_val = 0;
    int order_val = 0;
    std::string rep_str = "sigma", prec_str = "standard", fmt_str = "csv", grid_str;

    const std::map<std::string, Command> commands = {
        {"q", Command::q},           {"tw", Command::tw},
        {"endpoint", Command::endpoint}, {"density", Command::density},
        {"asym", Command::asym},     {"compare", Command::compare},
        {"scan", Command::scan},     {"tail", Command::tail}};

    std::vector<CLI::Option*> s_opts(8), T_opts(8), order_opts(8), h_opts(8);
    std::vector<CLI::App*> subs;
    for (const auto& [name, cmd] : commands) {
        CLI::App* sub = app.add_subcommand(name);
        sub->set_help_flag("--help", "print help"); // frees --h for the step size
        std::size_t i = subs.size();
        s_opts[i] = sub->add_option("--s", s_val, "shift parameter s");
        T_opts[i] = sub->add_option("--T", T_val, "time parameter T > 0");
        order_opts[i] = sub->add_option("--order", order_val, "quadrature order");
        h_opts[i] = sub->add_option("--h", h_val, "finite-difference step");
        sub->add_option("--rep", rep_str, "kernel representation")
            ->check(CLI::IsMember({"sigma", "finite-t", "both"}));
        sub->add_option("--precision", prec_str, "arithmetic mode")
            ->check(CLI::IsMember({"standard", "extended"}));
        sub->add_option("--grid", grid_str, "grid as min,max,count");
        sub->add_option("--epsilon", cfg.epsilon, "tail bracket epsilon");
        sub->add_option("--format", fmt_str, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    for (std::size_t i = 0; i < subs.size(); ++i) {
        if (!subs[i]->parsed()) continue;
        cfg.command = commands.at(subs[i]->get_name());
        if (s_opts[i]->count()) cfg.s = s_val;
        if (T_opts[i]->count()) cfg.T = T_val;
        if (order_opts[i]->count()) cfg.order = order_val;
        if (h_opts[i]->count()) cfg.h = h_val;
    }
    cfg.rep = rep_str == "sigma" ? RepChoice::sigma
            : rep_str == "finite-t" ? RepChoice::finite_t : RepChoice::both;
    cfg.precision = prec_str == "standard" ? Precision::standard : Precision::extended;
    cfg.format = fmt_str == "csv" ? OutputFormat::csv : OutputFormat::json;
    if (!grid_str.empty()) {
        std::array<double, 3> g;
        char extra;
        if (std::sscanf(grid_str.c_str(), "%lf,%lf,%lf%c", &g[0], &g[1], &g[2], &extra) != 3) {
            err << "DomainError: --grid expects min,max,count\n";
            return 2;
        }
        cfg.grid = g;
    }
    if (cfg.order && *cfg.order < 8) {
        err << "DomainError: --order must be >= 8\n";
        return 2;
    }
    return run(cfg, out, err);
}

} // namespace kpztail
