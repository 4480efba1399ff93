#include "defbin/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "defbin/coherent.hpp"
#include "defbin/dist.hpp"
#include "defbin/entropy.hpp"
#include "defbin/leibniz.hpp"

namespace defbin {

namespace {

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
    std::string command;
    std::string family = "exponential";
    std::string alpha = "1";
    std::string a = "1/2";
    std::string custom_file;
    std::string order = "64";
    std::string mode = "auto";
    std::string eta = "1/2";
    std::string n;
    std::string q = "0.95,1.05";
    std::string bins = "101";
    std::string format = "csv";
    std::string output;
};

// option name -> bound config field, in registration order; drives both the
// CLI11 setup and the config echo embedded in JSON output
using OptionSet = std::vector<std::pair<std::string, std::string*>>;

struct CommandIO {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    ordered_json extras = ordered_json::object();
};

std::string format_double(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

int parse_int(const std::string& s, const char* what) {
    int v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::invalid_argument(std::string(what) + ": expected an integer, got '" + s + "'");
    return v;
}

std::pair<int, int> parse_range(const std::string& s, const char* what) {
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        int v = parse_int(s, what);
        return {v, v};
    }
    int lo = parse_int(s.substr(0, pos), what);
    int hi = parse_int(s.substr(pos + 2), what);
    if (hi < lo) throw std::invalid_argument(std::string(what) + ": empty range '" + s + "'");
    return {lo, hi};
}

bool is_decimal(const std::string& s) { return s.find_first_of(".eE") != std::string::npos; }

struct EtaValue {
    bool exact = true;
    Rational r;
    double d = 0.0;
};

EtaValue parse_eta(const std::string& text, const std::string& mode) {
    EtaValue v;
    if (is_decimal(text)) {
        if (mode == "exact")
            throw std::invalid_argument("eta: exact mode requires a rational value like 1/2, got '" + text + "'");
        v.exact = false;
        size_t pos = 0;
        try {
            v.d = std::stod(text, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != text.size()) throw std::invalid_argument("eta: malformed number '" + text + "'");
    } else {
        v.r = parse_rational(text);
        v.d = to_double(v.r);
        v.exact = mode != "float";
    }
    return v;
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in list '" + s + "'");
        out.push_back(item);
    }
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

GeneratingFamily family_from_config(const RunConfig& cfg, int order) {
    if (cfg.family == "exponential") return Exponential{};
    if (cfg.family == "qexp") return QExponential{parse_rational(cfg.alpha)};
    if (cfg.family == "abel") return AbelLambert{parse_rational(cfg.alpha)};
    if (cfg.family == "hermite") return HermiteGauss{parse_rational(cfg.a)};
    if (cfg.custom_file.empty()) throw std::invalid_argument("custom family requires --custom-file");
    std::ifstream in(cfg.custom_file);
    if (!in) throw std::invalid_argument("cannot open seed file: " + cfg.custom_file);
    std::vector<Rational> a(static_cast<size_t>(order) + 1, Rational(0));
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long idx = 0, num = 0, den = 0;
        if (!(ls >> idx)) continue;
        std::string tail;
        if (!(ls >> num >> den) || (ls >> tail))
            throw std::invalid_argument("seed file line " + std::to_string(lineno) + ": expected 'n num den'");
        if (idx < 1) throw std::invalid_argument("seed file line " + std::to_string(lineno) + ": index must be >= 1");
        if (idx <= order) a[static_cast<size_t>(idx)] = make_rational(num, den);
    }
    return CustomSeed{std::move(a)};
}

int checked_order(const RunConfig& cfg) {
    int order = parse_int(cfg.order, "order");
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    return order;
}

// ---- commands ----

CommandIO cmd_model(const RunConfig& cfg) {
    int order = checked_order(cfg);
    DeformedModel model = build_model(family_from_config(cfg, order), order);
    int nmax = cfg.n.empty() ? order : parse_int(cfg.n, "n");
    if (nmax < 0 || nmax > order) throw std::invalid_argument("n must lie in [0, order]");
    CommandIO io;
    io.columns = {"n", "a_n", "x_n", "xfact_n"};
    for (int n = 0; n <= nmax; ++n) {
        io.rows.push_back({std::to_string(n), to_string(model.a[static_cast<size_t>(n)]),
                           to_string(model.x[static_cast<size_t>(n)]),
                           to_string(model.xfact[static_cast<size_t>(n)])});
    }
    return io;
}

CommandIO cmd_qpoly(const RunConfig& cfg) {
    int order = checked_order(cfg);
    QFamily qf = q_polynomials(build_model(family_from_config(cfg, order), order));
    int nmax = cfg.n.empty() ? order : parse_int(cfg.n, "n");
    if (nmax < 0 || nmax > order) throw std::invalid_argument("n must lie in [0, order]");
    CommandIO io;
    io.columns = {"n", "k", "c"};
    for (int n = 0; n <= nmax; ++n) {
        for (int k = 0; k <= n; ++k) {
            io.rows.push_back({std::to_string(n), std::to_string(k),
                               to_string(qf.q[static_cast<size_t>(n)].coeff(k))});
        }
    }
    return io;
}

CommandIO cmd_pmf(const RunConfig& cfg) {
    int order = checked_order(cfg);
    GeneratingFamily fam = family_from_config(cfg, order);
    int n = parse_int(cfg.n, "n");
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    EtaValue eta = parse_eta(cfg.eta, cfg.mode);
    CommandIO io;
    io.columns = {"k", "p"};
    if (eta.exact) {
        if (n > order) throw std::invalid_argument("n exceeds order; raise --order or use --mode float");
        QFamily qf = q_polynomials(build_model(fam, order));
        DistributionTable t = pmf(qf, n, eta.r);
        for (int k = 0; k <= n; ++k)
            io.rows.push_back({std::to_string(k), to_string(t.p[static_cast<size_t>(k)])});
    } else {
        DistributionTable t;
        if (std::holds_alternative<CustomSeed>(fam)) {
            if (n > order) throw std::invalid_argument("n exceeds order; raise --order");
            t = pmf_double(q_polynomials(build_model(fam, order)), n, eta.d);
        } else {
            t = pmf_float(fam, n, eta.d);
        }
        for (int k = 0; k <= n; ++k)
            io.rows.push_back({std::to_string(k), format_double(t.p_f[static_cast<size_t>(k)])});
    }
    return io;
}

CommandIO cmd_moments(const RunConfig& cfg) {
    int order = checked_order(cfg);
    auto [lo, hi] = parse_range(cfg.n, "n");
    if (lo < 0) throw std::invalid_argument("n must be >= 0");
    if (hi > order) throw std::invalid_argument("n exceeds order; raise --order");
    EtaValue eta = parse_eta(cfg.eta, cfg.mode);
    QFamily qf = q_polynomials(build_model(family_from_config(cfg, order), order));
    CommandIO io;
    io.columns = {"n", "eta", "mean", "variance", "c_n"};
    for (int n = lo; n <= hi; ++n) {
        if (eta.exact) {
            MomentReport r = moments(qf, n, eta.r);
            io.rows.push_back({std::to_string(n), to_string(eta.r), to_string(r.mean),
                               to_string(r.variance), to_string(r.c_n)});
        } else {
            DistributionTable t = pmf_double(qf, n, eta.d);
            double mean = 0.0, second = 0.0;
            for (int k = 0; k <= n; ++k) {
                mean += k * t.p_f[static_cast<size_t>(k)];
                second += static_cast<double>(k) * k * t.p_f[static_cast<size_t>(k)];
            }
            io.rows.push_back({std::to_string(n), format_double(eta.d), format_double(mean),
                               format_double(second - mean * mean),
                               format_double(to_double(cn_series_sum(qf, n)))});
        }
    }
    return io;
}

CommandIO cmd_leibniz(const RunConfig& cfg) {
    int order = checked_order(cfg);
    GeneratingFamily fam = family_from_config(cfg, order);
    int nmax = parse_int(cfg.n, "n");
    if (nmax < 1) throw std::invalid_argument("n must be >= 1");
    EtaValue eta = parse_eta(cfg.eta, cfg.mode);
    CommandIO io;
    io.columns = {"n", "max_residual", "exact_zero"};
    if (eta.exact) {
        if (nmax > order) throw std::invalid_argument("n exceeds order; raise --order or use --mode float");
        LeibnizReport rep = leibniz_residuals(q_polynomials(build_model(fam, order)), nmax, eta.r);
        for (size_t i = 0; i < rep.n.size(); ++i) {
            io.rows.push_back({std::to_string(rep.n[i]), to_string(rep.residual[i]),
                               rep.exact_zero[i] ? "1" : "0"});
        }
    } else {
        LeibnizFloatReport rep = leibniz_residuals_float(fam, nmax, eta.d);
        for (size_t i = 0; i < rep.n.size(); ++i) {
            io.rows.push_back({std::to_string(rep.n[i]), format_double(rep.residual[i]), "0"});
        }
    }
    return io;
}

CommandIO cmd_entropy(const RunConfig& cfg) {
    int order = checked_order(cfg);
    GeneratingFamily fam = family_from_config(cfg, order);
    auto [lo, hi] = parse_range(cfg.n, "n");
    EtaValue eta = parse_eta(cfg.eta, "auto");
    std::vector<std::string> q_tokens = split_list(cfg.q);
    std::vector<double> q_values;
    for (const auto& tok : q_tokens) {
        size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &pos);
        } catch (const std::exception&) {
            pos = std::string::npos;
        }
        if (pos != tok.size()) throw std::invalid_argument("q: malformed number '" + tok + "'");
        q_values.push_back(v);
    }
    EntropyScan scan = entropy_scan(fam, eta.d, lo, hi, q_values);
    CommandIO io;
    io.columns = {"n", "S_BG"};
    for (const auto& tok : q_tokens) io.columns.push_back("S_q_" + tok);
    for (size_t i = 0; i < scan.n.size(); ++i) {
        std::vector<std::string> row{std::to_string(scan.n[i]), format_double(scan.bg[i])};
        for (size_t j = 0; j < q_values.size(); ++j) row.push_back(format_double(scan.tsallis[i][j]));
        io.rows.push_back(std::move(row));
    }
    io.extras["fit"] = {{"window_lo", scan.fit_lo},
                        {"window_hi", scan.fit_hi},
                        {"slope", scan.slope},
                        {"intercept", scan.intercept},
                        {"r_squared", scan.r_squared}};
    ordered_json curv = ordered_json::array();
    for (size_t j = 0; j < q_values.size(); ++j) {
        curv.push_back({{"q", q_tokens[j]},
                        {"min_second_difference", scan.min_second_difference[j]},
                        {"max_second_difference", scan.max_second_difference[j]}});
    }
    io.extras["curvature"] = std::move(curv);
    return io;
}

CommandIO cmd_limit(const RunConfig& cfg) {
    Rational alpha = parse_rational(cfg.alpha);
    int n = cfg.n.empty() ? 1000 : parse_int(cfg.n, "n");
    int bins = parse_int(cfg.bins, "bins");
    WignerProbe probe = wigner_limit_probe(alpha, n, bins);
    CommandIO io;
    io.columns = {"s", "density", "semicircle"};
    for (int b = 0; b < probe.bins; ++b) {
        io.rows.push_back({format_double(probe.centers[static_cast<size_t>(b)]),
                           format_double(probe.density[static_cast<size_t>(b)]),
                           format_double(probe.reference[static_cast<size_t>(b)])});
    }
    io.extras["scale"] = probe.scale;
    io.extras["sup_distance"] = probe.sup_distance;
    return io;
}

CommandIO cmd_coherent(const RunConfig& cfg) {
    int order = checked_order(cfg);
    DeformedModel model = build_model(family_from_config(cfg, order), order);
    Sigma1Report rep = sigma1_restrict(model);
    QFamily qf = q_polynomials(rep.model);
    std::vector<Rational> f = deformed_factorial(qf);
    int nmax = cfg.n.empty() ? order : parse_int(cfg.n, "n");
    if (nmax < 0 || nmax > order) throw std::invalid_argument("n must lie in [0, order]");
    CommandIO io;
    io.columns = {"n", "f_n", "xfact_n"};
    for (int n = 0; n <= nmax; ++n) {
        io.rows.push_back({std::to_string(n), to_string(f[static_cast<size_t>(n)]),
                           to_string(rep.model.xfact[static_cast<size_t>(n)])});
    }
    io.extras["sigma1"] = {{"rescaled", rep.rescaled},
                           {"lambda", to_string(rep.lambda)},
                           {"tail_certified", rep.tail_certified},
                           {"note", rep.note}};
    return io;
}

// ---- emission ----

std::string render_csv(const CommandIO& io) {
    std::ostringstream os;
    for (size_t i = 0; i < io.columns.size(); ++i) {
        if (i) os << ',';
        os << io.columns[i];
    }
    os << '\n';
    for (const auto& row : io.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << row[i];
        }
        os << '\n';
    }
    return os.str();
}

std::string render_json(const RunConfig& cfg, const OptionSet& echo, const CommandIO& io) {
    ordered_json j;
    j["command"] = cfg.command;
    ordered_json conf = ordered_json::object();
    for (const auto& [name, field] : echo) {
        if (name == "output") continue;
        conf[name] = *field;
    }
    j["config"] = std::move(conf);
    j["columns"] = io.columns;
    j["rows"] = io.rows;
    for (const auto& [key, value] : io.extras.items()) j[key] = value;
    return j.dump(2) + "\n";
}

void write_report(const RunConfig& cfg, const OptionSet& echo, const CommandIO& io, std::ostream& out) {
    std::string text = cfg.format == "json" ? render_json(cfg, echo, io) : render_csv(io);
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    std::string path = cfg.output;
    const char* dir = std::getenv("DEFBIN_OUTPUT_DIR");
    if (dir != nullptr && *dir != '\0' && path.front() != '/') path = std::string(dir) + "/" + path;
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    file << text;
    file.flush();
    if (!file) throw std::runtime_error("failed writing output file: " + path);
}

// ---- wiring ----

std::vector<std::string> expand_from_json(const std::vector<std::string>& args) {
    std::string path;
    std::vector<std::string> rest;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--from-json") {
            if (i + 1 >= args.size()) throw std::invalid_argument("--from-json needs a file path");
            path = args[++i];
        } else if (args[i].rfind("--from-json=", 0) == 0) {
            path = args[i].substr(12);
        } else {
            rest.push_back(args[i]);
        }
    }
    if (path.empty()) return args;
    if (rest.size() > 1 || (rest.size() == 1 && (rest[0].empty() || rest[0][0] == '-')))
        throw std::invalid_argument("--from-json replaces all other options; pass at most the command name");
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open json config: " + path);
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw std::invalid_argument("malformed json config: " + std::string(e.what()));
    }
    if (!j.contains("command") || !j.contains("config") || !j["config"].is_object())
        throw std::invalid_argument("json config must carry 'command' and a 'config' object");
    std::string command = j["command"].get<std::string>();
    if (rest.size() == 1 && rest[0] != command)
        throw std::invalid_argument("json config is for '" + command + "', not '" + rest[0] + "'");
    std::vector<std::string> out{command};
    for (const auto& [key, value] : j["config"].items()) {
        if (!value.is_string()) throw std::invalid_argument("config entry '" + key + "' must be a string");
        out.push_back("--" + key);
        out.push_back(value.get<std::string>());
    }
    return out;
}

struct Command {
    CLI::App* app = nullptr;
    OptionSet echo;
    std::function<CommandIO(const RunConfig&)> run;
};

void add_option(Command& cmd, const std::string& name, std::string& field, const std::string& help,
                bool required = false) {
    auto* opt = cmd.app->add_option("--" + name, field, help);
    if (required) opt->required();
    cmd.echo.emplace_back(name, &field);
}

void add_family_options(Command& cmd, RunConfig& cfg) {
    cmd.app->add_option("--family", cfg.family, "model family")
        ->check(CLI::IsMember({"exponential", "qexp", "abel", "hermite", "custom"}));
    cmd.echo.emplace_back("family", &cfg.family);
    add_option(cmd, "alpha", cfg.alpha, "q-exponential / Abel parameter, rational");
    add_option(cmd, "a", cfg.a, "Hermite parameter, rational in (0,1)");
    add_option(cmd, "custom-file", cfg.custom_file, "seed file with lines 'n a_num a_den'");
}

void add_order_option(Command& cmd, RunConfig& cfg) {
    add_option(cmd, "order", cfg.order, "series truncation order");
}

void add_mode_option(Command& cmd, RunConfig& cfg) {
    cmd.app->add_option("--mode", cfg.mode, "arithmetic mode")
        ->check(CLI::IsMember({"auto", "exact", "float"}));
    cmd.echo.emplace_back("mode", &cfg.mode);
}

void add_io_options(Command& cmd, RunConfig& cfg) {
    cmd.app->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd.echo.emplace_back("format", &cfg.format);
    add_option(cmd, "output", cfg.output, "output file (stdout when absent)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args_in, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"deformed binomial distributions: exact models, moments, entropies, coherent states"};
    app.name("defbin");
    app.require_subcommand(1);

    std::vector<Command> commands(8);
    auto setup = [&](size_t idx, const std::string& name, const std::string& desc,
                     std::function<CommandIO(const RunConfig&)> fn) -> Command& {
        commands[idx].app = app.add_subcommand(name, desc);
        commands[idx].run = std::move(fn);
        return commands[idx];
    };

    {
        Command& c = setup(0, "model", "seed coefficients and factorial sequences", cmd_model);
        add_family_options(c, cfg);
        add_order_option(c, cfg);
        add_option(c, "n", cfg.n, "last row to emit (default: order)");
        add_io_options(c, cfg);
    }
    {
        Command& c = setup(1, "qpoly", "coefficients of the q polynomials", cmd_qpoly);
        add_family_options(c, cfg);
        add_order_option(c, cfg);
        add_option(c, "n", cfg.n, "last polynomial to emit (default: order)");
        add_io_options(c, cfg);
    }
    {
        Command& c = setup(2, "pmf", "probability table at fixed n and eta", cmd_pmf);
        add_family_options(c, cfg);
        add_order_option(c, cfg);
        add_mode_option(c, cfg);
        add_option(c, "eta", cfg.eta, "win probability, p/q or decimal");
        add_option(c, "n", cfg.n, "number of trials", true);
        add_io_options(c, cfg);
    }
    {
        Command& c = setup(3, "moments", "mean, variance and c_n over an n range", cmd_moments);
        add_family_options(c, cfg);
        add_order_option(c, cfg);
        add_mode_option(c, cfg);
        add_option(c, "eta", cfg.eta, "win probability, p/q or decimal");
        add_option(c, "n", cfg.n, "n or lo..hi", true);
        add_io_options(c, cfg);
    }
    {
        Command& c = setup(4, "leibniz", "triangle-rule residuals per row", cmd_leibniz);
        add_family_options(c, cfg);
        add_order_option(c, cfg);
        add_mode_option(c, cfg);
        add_option(c, "eta", cfg.eta, "win probability, p/q or decimal");
        add_option(c, "n", cfg.n, "largest row", true);
        add_io_options(c, cfg);
    }
    {
        Command& c = setup(5, "entropy", "Boltzmann-Gibbs and Tsallis entropies over an n range", cmd_entropy);
        add_family_options(c, cfg);
        add_order_option(c, cfg);
        add_option(c, "eta", cfg.eta, "win probability, p/q or decimal");
        add_option(c, "n", cfg.n, "n or lo..hi", true);
        add_option(c, "q", cfg.q, "comma-separated Tsallis q values");
        add_io_options(c, cfg);
    }
    {
        Command& c = setup(6, "limit", "rescaled q-exponential pmf against the semicircle", cmd_limit);
        add_option(c, "alpha", cfg.alpha, "q-exponential parameter, rational");
        add_option(c, "n", cfg.n, "number of trials (default 1000)");
        add_option(c, "bins", cfg.bins, "histogram bins");
        add_io_options(c, cfg);
    }
    {
        Command& c = setup(7, "coherent", "deformed factorials after the unit-seed restriction", cmd_coherent);
        add_family_options(c, cfg);
        add_order_option(c, cfg);
        add_option(c, "n", cfg.n, "last row to emit (default: order)");
        add_io_options(c, cfg);
    }

    try {
        std::vector<std::string> args = expand_from_json(args_in);
        std::vector<const char*> argv;
        argv.push_back("defbin");
        for (const auto& a : args) argv.push_back(a.c_str());
        try {
            app.parse(static_cast<int>(argv.size()), argv.data());
        } catch (const CLI::ParseError& e) {
            int code = app.exit(e, out, err);
            return code == 0 ? 0 : 1;
        }
        for (const auto& c : commands) {
            if (!c.app->parsed()) continue;
            cfg.command = c.app->get_name();
            CommandIO io = c.run(cfg);
            write_report(cfg, c.echo, io, out);
            return 0;
        }
        err << "error: no command selected\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace defbin
