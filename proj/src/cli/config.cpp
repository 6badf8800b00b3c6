#include "qwb/cli/config.hpp"

#include "qwb/format.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <thread>

namespace qwb::cli {

std::string_view command_name(Command c) noexcept {
    switch (c) {
        case Command::Evolve: return "evolve";
        case Command::Spectrum: return "spectrum";
        case Command::Dispersion: return "dispersion";
        case Command::Billiard2D: return "billiard2d";
        case Command::Spacing: return "spacing";
        case Command::Classify: return "classify";
        case Command::Selftest: return "selftest";
    }
    return "selftest";
}

namespace {

constexpr Command kCommands[] = {Command::Evolve,     Command::Spectrum, Command::Dispersion, Command::Billiard2D,
                                 Command::Spacing,    Command::Classify, Command::Selftest};

std::string trim(std::string s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

// `key = value` lines become `--key=value` tokens.
std::vector<std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::vector<std::string> tokens;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected `key = value`");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || key == "config") {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": invalid key '" + key + "'");
        }
        tokens.push_back("--" + key + "=" + value);
    }
    return tokens;
}

void add_billiard(CLI::App* sub, BilliardOptions& b) {
    sub->add_option("--kind", b.kind, "Bounce mechanism: 1 (spin flip) or 2 (sublattice transfer)")
        ->capture_default_str();
    sub->add_option("--n", b.n, "Number of grid sites (kind 2 needs an even count >= 4)")->capture_default_str();
    sub->add_option("--path", b.path, "Path function: line, sin, cos, cosh, tanh")->capture_default_str();
    sub->add_option("--step", b.step, "Distance between consecutive alpha points")->capture_default_str();
    sub->add_option("--alpha-left", b.alpha_left, "First alpha point (default -floor((n-1)/2)*step)");
    sub->add_option("--theta", b.theta, "Coin angle in radians")->capture_default_str();
    sub->add_option("--phi", b.phi, "Electric phase per site, E = exp(i phi (x - origin))")->capture_default_str();
    sub->add_option("--origin", b.origin, "Site where the electric phase vanishes")->capture_default_str();
    sub->add_option("--order", b.order, "Operator order: shift-coin (U = W C) or coin-shift (U = C W)")
        ->capture_default_str();
}

void add_bloch(CLI::App* sub, BlochOptions& b) {
    sub->add_flag("--bloch", b.enabled, "Use the plane-wave (Bloch) matrix instead of the direct operator");
    sub->add_option("--k-path", b.k_path, "K_f, quasi-momentum conjugate to f(alpha)")->capture_default_str();
    sub->add_option("--k-alpha", b.k_alpha, "K_alpha, quasi-momentum conjugate to alpha")->capture_default_str();
    sub->add_option("--alpha", b.alpha, "Slice coordinate alpha")->capture_default_str();
    sub->add_option("--variant", b.variant, "Substitution: literal or plane-wave")->capture_default_str();
    sub->add_option("--signs", b.signs, "Bloch sign convention: coin or printed")->capture_default_str();
}

void add_factors(CLI::App* sub, RunConfig& c) {
    auto* l = sub->add_option("--left", c.left.shape, "Left factor as path:kind, e.g. sin:1");
    auto* r = sub->add_option("--right", c.right.shape, "Right factor as path:kind, e.g. line:1");
    l->capture_default_str();
    r->capture_default_str();
    sub->add_option("--n1", c.left.n, "Sites of the left factor (default --n)");
    sub->add_option("--n2", c.right.n, "Sites of the right factor (default --n)");
    sub->add_option("--theta1", c.left.theta, "Coin angle of the left factor (default --theta)");
    sub->add_option("--theta2", c.right.theta, "Coin angle of the right factor (default --theta)");
    sub->add_option("--phi1", c.left.phi, "Electric phase of the left factor (default --phi)");
    sub->add_option("--phi2", c.right.phi, "Electric phase of the right factor (default --phi)");
    sub->add_option("--k-path1", c.left.k_path, "K_f of the left factor (with --bloch)")->capture_default_str();
    sub->add_option("--k-alpha1", c.left.k_alpha, "K_alpha of the left factor (with --bloch)")->capture_default_str();
    sub->add_option("--alpha1", c.left.alpha, "Slice alpha of the left factor (with --bloch)")->capture_default_str();
    sub->add_option("--k-path2", c.right.k_path, "K_f of the right factor (with --bloch)")->capture_default_str();
    sub->add_option("--k-alpha2", c.right.k_alpha, "K_alpha of the right factor (with --bloch)")
        ->capture_default_str();
    sub->add_option("--alpha2", c.right.alpha, "Slice alpha of the right factor (with --bloch)")
        ->capture_default_str();
    sub->add_option("--cap", c.cap, "Largest product dimension the direct route materializes")
        ->capture_default_str();
    sub->add_option("--route", c.route, "2-D spectrum route: sumset or direct")->capture_default_str();
}

void add_spacing(CLI::App* sub, RunConfig& c) {
    sub->add_option("--input", c.input, "Spectrum CSV (index,re,im,phase) to analyse instead of a billiard");
    sub->add_option("--gaps", c.gaps, "Number of largest spacings to exclude")->capture_default_str();
    sub->add_option("--bins", c.bins, "Histogram bins")->capture_default_str();
    sub->add_flag("--circular,!--no-circular", c.circular, "Include the wraparound spacing (default on)");
    sub->add_option("--degeneracy-tol", c.degeneracy_tol, "Merge levels closer than this (0: off)")
        ->capture_default_str();
}

void add_output(CLI::App* sub, RunConfig& c) {
    sub->add_option("--out-dir", c.out_dir, "Output directory")->capture_default_str();
    sub->add_option("--prefix", c.prefix, "Output file prefix (default: subcommand name)");
    sub->add_flag("--svg", c.svg, "Also write an SVG plot");
    sub->add_option("--threads", c.threads, "Worker threads (0: QWB_THREADS or machine parallelism)")
        ->capture_default_str();
}

std::pair<std::string, int> parse_shape(const std::string& shape) {
    const auto colon = shape.find(':');
    if (colon == std::string::npos) throw ConfigError("factor '" + shape + "' must look like path:kind");
    const std::string path = shape.substr(0, colon);
    const std::string kind = shape.substr(colon + 1);
    if (kind != "1" && kind != "2") throw ConfigError("factor '" + shape + "': kind must be 1 or 2");
    return {path, kind == "1" ? 1 : 2};
}

void check_billiard(const BilliardOptions& b, const std::string& where) {
    if (b.kind != 1 && b.kind != 2) throw ConfigError(where + "kind must be 1 or 2");
    if (b.n < 2) throw ConfigError(where + "n must be >= 2");
    if (b.kind == 2 && (b.n % 2 != 0 || b.n < 4)) {
        throw ConfigError(where + "kind 2 needs an even total site count >= 4 (got " + std::to_string(b.n) + ")");
    }
    if (!(b.step > 0.0)) throw ConfigError(where + "step must be positive");
    if (b.order != "shift-coin" && b.order != "coin-shift") {
        throw ConfigError(where + "order must be shift-coin or coin-shift");
    }
    try {
        parse_path_tag(b.path);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(where + e.what());
    }
}

void validate(const RunConfig& c) {
    check_billiard(c.billiard, "");
    if (c.bloch.variant != "literal" && c.bloch.variant != "plane-wave") {
        throw ConfigError("variant must be literal or plane-wave");
    }
    if (c.bloch.signs != "coin" && c.bloch.signs != "printed") throw ConfigError("signs must be coin or printed");
    if (c.steps < 0) throw ConfigError("steps must be >= 0");
    if (c.resolution < 2) throw ConfigError("resolution must be >= 2");
    if (c.scan_resolution < 1) throw ConfigError("scan-resolution must be >= 1");
    if (c.scan != "k" && c.scan != "k-path" && c.scan != "k-alpha") {
        throw ConfigError("scan must be k, k-path or k-alpha");
    }
    if (c.bloch.enabled && c.billiard.order == "coin-shift") {
        throw ConfigError("the Bloch matrices use the shift-coin order; drop --order coin-shift");
    }
    if (c.command == Command::Dispersion && c.scan == "k" && (c.billiard.path != "line" || c.billiard.phi != 0.0)) {
        throw ConfigError("--scan k uses the straight-line table; use --scan k-path or k-alpha for curved paths or a field");
    }
    if (c.command == Command::Billiard2D && c.scan_resolution > 1 && !c.bloch.enabled) {
        throw ConfigError("--scan-resolution > 1 needs --bloch");
    }
    if (c.gaps < 0) throw ConfigError("gaps must be >= 0");
    if (c.bins < 1) throw ConfigError("bins must be >= 1");
    if (c.degeneracy_tol < 0.0) throw ConfigError("degeneracy-tol must be >= 0");
    if (c.cap < 1) throw ConfigError("cap must be >= 1");
    if (c.route != "sumset" && c.route != "direct") throw ConfigError("route must be sumset or direct");
    if (c.threads < 0) throw ConfigError("threads must be >= 0");
    if (c.prefix.find('/') != std::string::npos) throw ConfigError("prefix must not contain '/'");
    if (c.two_d) {
        for (const auto* f : {&c.left, &c.right}) {
            const auto [path, kind] = parse_shape(f->shape);
            BilliardOptions b = c.billiard;
            b.path = path;
            b.kind = kind;
            b.n = f->n.value_or(c.billiard.n);
            check_billiard(b, (f == &c.left ? "left factor: " : "right factor: "));
        }
    }
}

std::string fmt(double v) { return format_double(v); }

}  // namespace

RunConfig parse_config(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return parse_config(args);
}

RunConfig parse_config(const std::vector<std::string>& input) {
    // --config is lifted out; the file's tokens go right after the
    // subcommand, ahead of the command-line flags.
    std::vector<std::string> args;
    std::string config_path;
    for (std::size_t i = 0; i < input.size(); ++i) {
        if (input[i] == "--config") {
            if (i + 1 >= input.size()) throw ConfigError("--config needs a file argument");
            config_path = input[++i];
        } else if (input[i].rfind("--config=", 0) == 0) {
            config_path = input[i].substr(9);
        } else {
            args.push_back(input[i]);
        }
    }
    if (!config_path.empty()) {
        const auto sub = std::find_if(args.begin(), args.end(), [](const std::string& a) {
            return std::any_of(std::begin(kCommands), std::end(kCommands),
                               [&](Command c) { return a == command_name(c); });
        });
        if (sub == args.end()) throw ConfigError("--config needs a subcommand");
        const std::vector<std::string> extra = read_config_file(config_path);
        args.insert(sub + 1, extra.begin(), extra.end());
    }

    RunConfig c;
    CLI::App app{"Quantum-walk billiards: evolution, spectra, 2-D tensor billiards and level-spacing statistics",
                 "qwb"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(QWB_VERSION));
    app.footer("Any subcommand accepts --config FILE with flat `key = value` lines (keys are long flag names).");

    auto* evolve = app.add_subcommand("evolve", "Evolve a walker and record per-site probabilities");
    add_billiard(evolve, c.billiard);
    evolve->add_option("--steps", c.steps, "Number of time steps")->capture_default_str();
    evolve->add_option("--start-site", c.start_site, "Initial site (default: central site)");
    evolve->add_option("--up", c.up, "Initial Up weight as re,im")->capture_default_str();
    evolve->add_option("--down", c.down, "Initial Down weight as re,im")->capture_default_str();
    evolve->add_flag("--matrix-free", c.matrix_free, "Apply coin and shift without the dense operator");
    add_output(evolve, c);

    auto* spectrum = app.add_subcommand("spectrum", "Quasi-energy spectrum of a 1-D billiard");
    add_billiard(spectrum, c.billiard);
    add_bloch(spectrum, c.bloch);
    add_output(spectrum, c);

    auto* dispersion = app.add_subcommand("dispersion", "Bloch eigenphases across a quasi-momentum range");
    add_billiard(dispersion, c.billiard);
    add_bloch(dispersion, c.bloch);
    dispersion->add_option("--scan", c.scan, "Scanned parameter: k (straight table), k-path or k-alpha")
        ->capture_default_str();
    dispersion->add_option("--k-min", c.k_min, "Scan start")->capture_default_str();
    dispersion->add_option("--k-max", c.k_max, "Scan end (inclusive)")->capture_default_str();
    dispersion->add_option("--resolution", c.resolution, "Number of samples")->capture_default_str();
    add_output(dispersion, c);

    auto* b2d = app.add_subcommand("billiard2d", "Spectrum of a tensor-product 2-D billiard");
    add_billiard(b2d, c.billiard);
    add_bloch(b2d, c.bloch);
    add_factors(b2d, c);
    b2d->add_option("--scan-resolution", c.scan_resolution,
                    "With --bloch: scan K_f1 x K_f2 on this many points per axis over [k-min, k-max]")
        ->capture_default_str();
    b2d->add_option("--k-min", c.k_min, "K scan start")->capture_default_str();
    b2d->add_option("--k-max", c.k_max, "K scan end (inclusive)")->capture_default_str();
    add_output(b2d, c);

    auto* spacing = app.add_subcommand("spacing", "Spacing sequence, histogram and classification");
    auto* classify = app.add_subcommand("classify", "Wigner/Poisson classification of the spacing distribution");
    for (auto* sub : {spacing, classify}) {
        add_billiard(sub, c.billiard);
        add_bloch(sub, c.bloch);
        add_factors(sub, c);
        add_spacing(sub, c);
        add_output(sub, c);
    }

    auto* selftest = app.add_subcommand("selftest", "Run the oracle and invariant checks");
    selftest->add_option("--threads", c.threads, "Worker threads (0: QWB_THREADS or machine parallelism)")
        ->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw ConfigError(app.help(), kExitOk);
    } catch (const CLI::CallForAllHelp&) {
        throw ConfigError(app.help("", CLI::AppFormatMode::All), kExitOk);
    } catch (const CLI::CallForVersion&) {
        throw ConfigError(std::string(QWB_VERSION) + "\n", kExitOk);
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }

    const std::pair<CLI::App*, Command> subs[] = {{evolve, Command::Evolve},         {spectrum, Command::Spectrum},
                                                  {dispersion, Command::Dispersion}, {b2d, Command::Billiard2D},
                                                  {spacing, Command::Spacing},       {classify, Command::Classify},
                                                  {selftest, Command::Selftest}};
    for (const auto& [app_ptr, cmd] : subs) {
        if (app_ptr->parsed()) {
            c.command = cmd;
            if (cmd == Command::Billiard2D) c.two_d = true;
            if (cmd == Command::Spacing || cmd == Command::Classify) {
                c.two_d = app_ptr->count("--left") + app_ptr->count("--right") > 0;
            }
        }
    }
    if (c.prefix.empty()) c.prefix = std::string(command_name(c.command));
    validate(c);
    return c;
}

std::vector<std::pair<std::string, std::string>> resolved_entries(const RunConfig& c) {
    std::vector<std::pair<std::string, std::string>> e;
    auto add = [&](std::string k, std::string v) { e.emplace_back(std::move(k), std::move(v)); };
    add("command", std::string(command_name(c.command)));
    add("prefix", c.prefix);
    if (c.command == Command::Selftest) return e;

    const bool from_input = (c.command == Command::Spacing || c.command == Command::Classify) && !c.input.empty();
    if (!from_input) {
        const BilliardSpec spec = make_spec(c.billiard);
        add("kind", std::to_string(c.billiard.kind));
        add("n", std::to_string(c.billiard.n));
        add("path", c.billiard.path);
        add("step", fmt(c.billiard.step));
        add("alpha-left", fmt(spec.path.alpha_left()));
        add("theta", fmt(c.billiard.theta));
        add("phi", fmt(c.billiard.phi));
        add("origin", std::to_string(c.billiard.origin));
        add("order", c.billiard.order);
        if (c.command != Command::Evolve) {
            add("bloch", c.bloch.enabled ? "true" : "false");
            add("variant", c.bloch.variant);
            add("signs", c.bloch.signs);
            if (!c.two_d) {
                add("k-path", fmt(c.bloch.k_path));
                add("k-alpha", fmt(c.bloch.k_alpha));
                add("alpha", fmt(c.bloch.alpha));
            }
        }
    }
    switch (c.command) {
        case Command::Evolve:
            add("steps", std::to_string(c.steps));
            add("start-site", std::to_string(c.start_site.value_or(make_spec(c.billiard).grid().central_site())));
            add("up", c.up);
            add("down", c.down);
            add("matrix-free", c.matrix_free ? "true" : "false");
            break;
        case Command::Dispersion:
            add("scan", c.scan);
            add("k-min", fmt(c.k_min));
            add("k-max", fmt(c.k_max));
            add("resolution", std::to_string(c.resolution));
            break;
        default: break;
    }
    if (c.two_d && !from_input) {
        const Billiard2DSpec spec = make_2d(c);
        add("left", c.left.shape);
        add("right", c.right.shape);
        add("left-spec", describe(spec.left));
        add("right-spec", describe(spec.right));
        add("cap", std::to_string(c.cap));
        add("route", c.route);
        if (c.command == Command::Billiard2D) {
            add("scan-resolution", std::to_string(c.scan_resolution));
            add("k-min", fmt(c.k_min));
            add("k-max", fmt(c.k_max));
        }
    }
    if (c.command == Command::Spacing || c.command == Command::Classify) {
        if (from_input) add("input", c.input);
        add("gaps", std::to_string(c.gaps));
        add("bins", std::to_string(c.bins));
        add("circular", c.circular ? "true" : "false");
        add("degeneracy-tol", fmt(c.degeneracy_tol));
    }
    add("svg", c.svg ? "true" : "false");
    std::sort(e.begin(), e.end());
    return e;
}

BilliardSpec make_spec(const BilliardOptions& b) {
    const double left = b.alpha_left.value_or(-static_cast<double>((b.n - 1) / 2) * b.step);
    BilliardSpec spec;
    spec.kind = parse_kind(b.kind);
    spec.path = CurvedPath(PathFunction(parse_path_tag(b.path)), left, left + (b.n - 1) * b.step, b.step);
    spec.theta = b.theta;
    spec.electric = ElectricField{b.phi, b.origin};
    spec.order = b.order == "coin-shift" ? OperatorOrder::CoinThenShift : OperatorOrder::ShiftThenCoin;
    spec.validate();
    return spec;
}

BlochParams make_bloch(const BlochOptions& o) {
    BlochParams p;
    p.k_path = o.k_path;
    p.k_alpha = o.k_alpha;
    p.alpha = o.alpha;
    p.variant = o.variant == "plane-wave" ? BlochVariant::PlaneWaveConsistent : BlochVariant::Literal;
    p.signs = o.signs == "printed" ? BlochSigns::Printed : BlochSigns::Coin;
    return p;
}

FactorSpec make_factor(const RunConfig& c, const FactorOptions& f) {
    const auto [path, kind] = parse_shape(f.shape);
    BilliardOptions b = c.billiard;
    b.path = path;
    b.kind = kind;
    b.n = f.n.value_or(c.billiard.n);
    b.theta = f.theta.value_or(c.billiard.theta);
    b.phi = f.phi.value_or(c.billiard.phi);
    b.alpha_left.reset();
    FactorSpec out{make_spec(b), std::nullopt};
    if (c.bloch.enabled) {
        BlochOptions o = c.bloch;
        o.k_path = f.k_path;
        o.k_alpha = f.k_alpha;
        o.alpha = f.alpha;
        out.bloch = make_bloch(o);
    }
    return out;
}

Billiard2DSpec make_2d(const RunConfig& c) {
    Billiard2DSpec spec{make_factor(c, c.left), make_factor(c, c.right), static_cast<Index>(c.cap)};
    return spec;
}

int resolve_threads(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("QWB_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace qwb::cli
