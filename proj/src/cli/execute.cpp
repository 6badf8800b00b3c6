#include "qwb/cli/execute.hpp"

#include "qwb/billiard2d.hpp"
#include "qwb/cli/selftest.hpp"
#include "qwb/cli/svg.hpp"
#include "qwb/evolution.hpp"
#include "qwb/format.hpp"
#include "qwb/parallel.hpp"
#include "qwb/spectrum.hpp"
#include "qwb/statistics.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <system_error>

namespace qwb::cli {

namespace fs = std::filesystem;

namespace {

Complex parse_weight(const std::string& text, const char* name) {
    const auto comma = text.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            const double re = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
            return {re, 0.0};
        }
        const std::string a = text.substr(0, comma);
        const std::string b = text.substr(comma + 1);
        const double re = std::stod(a, &used);
        if (used != a.size()) throw std::invalid_argument(text);
        const double im = std::stod(b, &used);
        if (used != b.size()) throw std::invalid_argument(text);
        return {re, im};
    } catch (const std::logic_error&) {
        throw ConfigError(std::string("--") + name + " must be re,im (got '" + text + "')");
    }
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = n == 1 ? a : a + (b - a) * i / (n - 1);
    return v;
}

struct Writer {
    const RunConfig& config;
    std::ostream& out;
    std::string header;
    std::vector<fs::path> written;

    fs::path path(const std::string& suffix) const { return fs::path(config.out_dir) / (config.prefix + suffix); }

    void csv(const std::string& suffix, const std::function<void(std::ostream&)>& body) {
        std::ostringstream os;
        os << header;
        body(os);
        put(path(suffix), os.str());
    }

    void svg(const std::string& suffix, const std::string& doc) { put(path(suffix), doc); }

    void put(const fs::path& p, const std::string& contents) {
        write_atomic(p, contents);
        written.push_back(p);
        out << "wrote " << p.string() << '\n';
    }

    std::string svg_comment() const {
        std::string s;
        std::istringstream lines(header);
        for (std::string line; std::getline(lines, line);) s += line.substr(2) + '\n';
        return s;
    }
};

SpectrumResult one_d_spectrum(const RunConfig& c) {
    FactorSpec f{make_spec(c.billiard), std::nullopt};
    if (c.bloch.enabled) f.bloch = make_bloch(c.bloch);
    return eigenphases(factor_matrix(f), describe(f));
}

SpectrumResult two_d_spectrum(const RunConfig& c, const Billiard2DSpec& spec, int threads) {
    if (c.route == "direct") {
        const UnitaryOperator op = tensor_operator(spec);
        SpectrumResult r = eigenphases(op.matrix, op.label);
        return r;
    }
    return tensor_spectrum(spec, threads);
}

void run_evolve(const RunConfig& c, Writer& w) {
    const BilliardSpec spec = make_spec(c.billiard);
    const Grid1D grid = spec.grid();
    const SpinorState initial = make_delta_state(grid, c.start_site.value_or(grid.central_site()),
                                                 parse_weight(c.up, "up"), parse_weight(c.down, "down"));
    RunOptions options;
    options.matrix_free = c.matrix_free;
    const EvolutionRecord record = run(spec, initial, c.steps, options);
    w.csv(".csv", [&](std::ostream& os) { write_csv(os, record); });
    if (c.svg) w.svg(".svg", render_heatmap_svg(record, w.svg_comment()));
}

void run_spectrum(const RunConfig& c, Writer& w) {
    const SpectrumResult r = one_d_spectrum(c);
    w.csv(".csv", [&](std::ostream& os) { write_csv(os, r); });
}

void run_dispersion(const RunConfig& c, Writer& w, int threads) {
    const BilliardSpec spec = make_spec(c.billiard);
    const BlochParams base = make_bloch(c.bloch);
    std::function<Eigen::MatrixXcd(double)> builder;
    if (c.scan == "k") {
        const int n = c.billiard.n;
        const double theta = c.billiard.theta;
        const BilliardKind kind = spec.kind;
        builder = [=](double k) {
            return kind == BilliardKind::One ? bloch_kind1(theta, k, n, base.signs) : bloch_kind2(theta, k, n, base.signs);
        };
    } else {
        const bool path_axis = c.scan == "k-path";
        builder = [=](double k) {
            FactorSpec f{spec, base};
            (path_axis ? f.bloch->k_path : f.bloch->k_alpha) = k;
            return factor_matrix(f);
        };
    }
    const DispersionTable table = dispersion_scan(builder, c.k_min, c.k_max, c.resolution, threads);
    w.csv(".csv", [&](std::ostream& os) { write_csv(os, table); });
    if (c.svg) w.svg(".svg", render_bands_svg(table, w.svg_comment()));
}

void run_billiard2d(const RunConfig& c, Writer& w, int threads) {
    const Billiard2DSpec spec = make_2d(c);
    if (c.scan_resolution <= 1) {
        const SpectrumResult r = two_d_spectrum(c, spec, threads);
        w.csv(".csv", [&](std::ostream& os) { write_csv(os, r); });
        return;
    }
    // K_f1 x K_f2 grid, each sample written only by its own slot.
    const std::vector<double> ks = linspace(c.k_min, c.k_max, c.scan_resolution);
    const auto n = static_cast<Index>(ks.size());
    std::vector<Eigen::VectorXd> phases(static_cast<std::size_t>(n * n));
    parallel_for(n * n, threads, [&](Index idx) {
        Billiard2DSpec s = spec;
        s.left.bloch->k_path = ks[static_cast<std::size_t>(idx / n)];
        s.right.bloch->k_path = ks[static_cast<std::size_t>(idx % n)];
        phases[static_cast<std::size_t>(idx)] = two_d_spectrum(c, s, 1).phases;
    });
    w.csv(".csv", [&](std::ostream& os) {
        os << "k_path1,k_path2,band_index,phase\n";
        for (Index idx = 0; idx < n * n; ++idx) {
            const std::string k1 = format_double(ks[static_cast<std::size_t>(idx / n)]);
            const std::string k2 = format_double(ks[static_cast<std::size_t>(idx % n)]);
            const Eigen::VectorXd& ph = phases[static_cast<std::size_t>(idx)];
            for (Index b = 0; b < ph.size(); ++b) os << k1 << ',' << k2 << ',' << b << ',' << format_double(ph(b)) << '\n';
        }
    });
}

Eigen::VectorXd spacing_input(const RunConfig& c, int threads) {
    if (!c.input.empty()) {
        const std::vector<double> v = read_spectrum_csv(c.input);
        return spectrum_from_phases(v, c.input).phases;
    }
    if (c.two_d) return two_d_spectrum(c, make_2d(c), threads).phases;
    return one_d_spectrum(c).phases;
}

nlohmann::json classification_json(const RunConfig& c, const Classification& cl) {
    nlohmann::json j;
    j["version"] = QWB_VERSION;
    nlohmann::json cfg = nlohmann::json::object();
    for (const auto& [k, v] : resolved_entries(c)) cfg[k] = v;
    j["config"] = cfg;
    j["ks_wigner"] = cl.ks_wigner;
    j["ks_poisson"] = cl.ks_poisson;
    j["verdict"] = std::string(verdict_name(cl.verdict));
    j["n_spacings"] = cl.n_spacings;
    j["gaps_excluded"] = cl.gaps_excluded;
    return j;
}

void run_spacing(const RunConfig& c, Writer& w, int threads) {
    SpacingOptions options;
    options.gaps_to_exclude = c.gaps;
    options.circular = c.circular;
    options.degeneracy_tolerance = c.degeneracy_tol;
    const SpacingSequence seq = spacings_from_phases(spacing_input(c, threads), options);

    if (c.command == Command::Classify) {
        const Classification cl = classify(seq);
        w.put(w.path("_classification.json"), classification_json(c, cl).dump(2) + "\n");
        w.out << "verdict " << verdict_name(cl.verdict) << " ks_wigner=" << format_double(cl.ks_wigner)
              << " ks_poisson=" << format_double(cl.ks_poisson) << '\n';
        return;
    }
    const SpacingHistogram hist = histogram(seq, c.bins);
    w.csv("_spacings.csv", [&](std::ostream& os) { write_csv(os, seq); });
    w.csv("_histogram.csv", [&](std::ostream& os) { write_csv(os, hist); });
    if (seq.spacings.size() >= 10) {
        w.put(w.path("_classification.json"), classification_json(c, classify(seq)).dump(2) + "\n");
    } else {
        w.out << "classification skipped: " << seq.spacings.size() << " spacings (needs 10)\n";
    }
    if (c.svg) w.svg("_histogram.svg", render_histogram_svg(hist, w.svg_comment()));
}

}  // namespace

std::string header_comment(const RunConfig& config) {
    std::string s = std::string("# qwb ") + QWB_VERSION + "\n";
    for (const auto& [k, v] : resolved_entries(config)) s += "# " + k + "=" + v + "\n";
    return s;
}

void write_atomic(const fs::path& path, const std::string& contents) {
    std::error_code ec;
    if (path.has_parent_path()) {
        fs::create_directories(path.parent_path(), ec);
        if (ec) throw IoError("cannot create directory '" + path.parent_path().string() + "': " + ec.message());
    }
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw IoError("cannot open '" + tmp.string() + "' for writing");
        os.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        os.flush();
        if (!os) throw IoError("write to '" + tmp.string() + "' failed");
    }
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw IoError("cannot rename onto '" + path.string() + "'");
    }
}

std::vector<double> read_spectrum_csv(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read '" + path.string() + "'");
    std::vector<double> phases;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#' || line.rfind("index", 0) == 0) continue;
        std::vector<std::string> cells;
        std::istringstream row(line);
        for (std::string cell; std::getline(row, cell, ',');) cells.push_back(cell);
        if (cells.size() < 4) {
            throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": expected index,re,im,phase");
        }
        try {
            phases.push_back(std::stod(cells[3]));
        } catch (const std::logic_error&) {
            throw ConfigError(path.string() + ":" + std::to_string(lineno) + ": bad phase '" + cells[3] + "'");
        }
    }
    std::sort(phases.begin(), phases.end());
    return phases;
}

std::vector<fs::path> execute(const RunConfig& config, std::ostream& out) {
    const int threads = resolve_threads(config.threads);
    if (config.command == Command::Selftest) {
        SelftestOptions options;
        options.threads = threads;
        const std::vector<CheckResult> results = run_selftest(options);
        for (const auto& r : results) out << format_check(r) << '\n';
        if (!all_passed(results)) throw NumericalError("selftest: at least one check failed");
        return {};
    }
    Writer w{config, out, header_comment(config), {}};
    switch (config.command) {
        case Command::Evolve: run_evolve(config, w); break;
        case Command::Spectrum: run_spectrum(config, w); break;
        case Command::Dispersion: run_dispersion(config, w, threads); break;
        case Command::Billiard2D: run_billiard2d(config, w, threads); break;
        case Command::Spacing:
        case Command::Classify: run_spacing(config, w, threads); break;
        case Command::Selftest: break;
    }
    return w.written;
}

int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        const RunConfig config = parse_config(args);
        execute(config, out);
        return kExitOk;
    } catch (const ConfigError& e) {
        (e.exit_code() == kExitOk ? out : err) << e.what() << (e.exit_code() == kExitOk ? "" : "\n");
        return e.exit_code();
    } catch (const IoError& e) {
        err << "qwb: I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const NumericalError& e) {
        err << "qwb: numerical check failed: " << e.what() << '\n';
        return kExitNumerical;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "qwb: I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        err << "qwb: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::out_of_range& e) {
        err << "qwb: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::domain_error& e) {
        err << "qwb: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::length_error& e) {
        err << "qwb: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "qwb: unexpected failure: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace qwb::cli
