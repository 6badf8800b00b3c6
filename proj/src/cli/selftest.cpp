#include "qwb/cli/selftest.hpp"

#include "qwb/billiard2d.hpp"
#include "qwb/cli/execute.hpp"
#include "qwb/evolution.hpp"
#include "qwb/format.hpp"
#include "qwb/parallel.hpp"
#include "qwb/reference.hpp"
#include "qwb/spectrum.hpp"
#include "qwb/statistics.hpp"
#include "qwb/walk.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

namespace qwb::cli {

namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

// Times `body`, which fills passed/detail, and applies the budget.
CheckResult timed(int id, std::string name, double limit, const std::function<void(CheckResult&)>& body) {
    CheckResult r;
    r.id = id;
    r.name = std::move(name);
    r.limit_seconds = limit;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (r.seconds > limit) {
        r.passed = r.report_only;
        r.detail += " [over time budget]";
    }
    return r;
}

Eigen::VectorXd repeat_each(const Eigen::VectorXd& v, int times) {
    std::vector<double> out;
    for (double x : v) {
        for (int t = 0; t < times; ++t) out.push_back(x);
    }
    return spectrum_from_phases(out, "").phases;
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::ifstream in(entry.path(), std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        files[entry.path().filename().string()] = ss.str();
    }
    return files;
}

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char ch : s) {
        if (ch == '\'') out += "'\\''";
        else out += ch;
    }
    return out + "'";
}

const std::vector<std::vector<std::string>>& determinism_commands() {
    static const std::vector<std::vector<std::string>> cmds = {
        {"evolve", "--n", "21", "--steps", "30", "--svg"},
        {"spectrum", "--kind", "2", "--n", "8", "--path", "cosh", "--theta", "0.7"},
        {"dispersion", "--n", "5", "--resolution", "64", "--threads", "3", "--svg"},
        {"dispersion", "--n", "6", "--path", "cos", "--scan", "k-path", "--resolution", "40", "--variant",
         "plane-wave", "--threads", "2", "--prefix", "dispersion_curved"},
        {"billiard2d", "--left", "sin:1", "--right", "line:1", "--n", "6", "--bloch", "--scan-resolution", "5",
         "--threads", "3"},
        {"spacing", "--left", "cosh:2", "--right", "cosh:2", "--n", "10", "--theta", "0.5", "--svg", "--threads", "2"},
        {"classify", "--left", "line:1", "--right", "line:1", "--n", "12", "--phi", "1"},
    };
    return cmds;
}

}  // namespace

CheckResult check_unitarity_sweep(const SelftestOptions& options) {
    return timed(1, "unitarity sweep", 10.0, [&](CheckResult& r) {
        struct Case {
            BilliardKind kind;
            PathTag path;
            double theta;
            int n;
            double phi;
        };
        std::vector<Case> cases;
        for (BilliardKind kind : {BilliardKind::One, BilliardKind::Two}) {
            for (PathTag path : {PathTag::Line, PathTag::Sin, PathTag::Cos, PathTag::Cosh, PathTag::Tanh}) {
                for (double theta : {0.0, pi / 6, pi / 4, pi / 2, pi}) {
                    for (int n = 4; n <= 12; ++n) {
                        if (kind == BilliardKind::Two && n % 2 != 0) continue;
                        for (double phi : {0.0, 1.0, pi}) cases.push_back({kind, path, theta, n, phi});
                    }
                }
            }
        }
        std::vector<double> dev(cases.size());
        parallel_for(static_cast<Index>(cases.size()), options.threads, [&](Index i) {
            const Case& c = cases[static_cast<std::size_t>(i)];
            dev[static_cast<std::size_t>(i)] =
                verify_unitarity(compose_step(make_billiard(c.kind, c.n, c.theta, c.path, c.phi)));
        });
        const double worst = *std::max_element(dev.begin(), dev.end());
        r.passed = worst < 1e-12;
        r.detail = std::to_string(cases.size()) + " operators, max |U*U - I| = " + sci(worst);
    });
}

CheckResult check_evolution(const SelftestOptions&) {
    return timed(2, "evolution invariants", 1.0, [&](CheckResult& r) {
        const BilliardSpec spec = make_billiard(BilliardKind::One, 71, pi / 4);
        const Grid1D grid = spec.grid();
        const SpinorState initial = default_initial_state(grid);
        RunOptions options;
        options.keep_amplitudes = true;
        const EvolutionRecord rec = run(spec, initial, 70, options);

        double norm_dev = 0.0;
        bool sized = rec.frames.size() == 71;
        for (const auto& f : rec.frames) {
            sized = sized && f.size() == static_cast<std::size_t>(grid.size());
            double total = 0.0;
            for (double p : f) total += p;
            norm_dev = std::max(norm_dev, std::abs(total - 1.0));
        }

        // Same walk on a wider free strip: no amplitude may reach sites
        // beyond the walls of the billiard.
        double leaked = 0.0;
        {
            const Grid1D wide(grid.n_left() - 3, grid.n_right() + 3);
            const std::vector<Index> perm = shift_permutation(grid, BilliardKind::One);
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(wide.dim());
            v.segment(wide.index(grid.n_left(), Spin::Up), grid.dim()) = initial.amplitudes();
            const Eigen::Matrix2cd coin = coin_matrix(pi / 4);
            for (int t = 0; t < 70; ++t) {
                Eigen::VectorXcd next = Eigen::VectorXcd::Zero(wide.dim());
                for (int site = wide.n_left(); site <= wide.n_right(); ++site) {
                    const Eigen::Vector2cd spinor = coin * v.segment<2>(wide.index(site, Spin::Up));
                    for (Spin s : {Spin::Up, Spin::Down}) {
                        const Complex a = spinor(spin_index(s));
                        if (!grid.contains(site)) {
                            next(wide.index(site, s)) += a;  // outside cells stay put
                            continue;
                        }
                        const Index to = perm[static_cast<std::size_t>(grid.index(site, s))];
                        const auto [x, spin] = grid.site_spin(to);
                        next(wide.index(x, spin)) += a;
                    }
                }
                v = next;
                for (int site = wide.n_left(); site <= wide.n_right(); ++site) {
                    if (grid.contains(site)) continue;
                    leaked = std::max(leaked, v.segment<2>(wide.index(site, Spin::Up)).squaredNorm());
                }
            }
        }

        const Eigen::MatrixXcd u = compose_step(spec).matrix;
        const Eigen::MatrixXcd ud = u.adjoint();
        Eigen::VectorXcd back = rec.amplitudes.back();
        for (int t = 0; t < 70; ++t) back = ud * back;
        const double recover = (back - initial.amplitudes()).cwiseAbs().maxCoeff();

        r.passed = sized && norm_dev <= 1e-12 && leaked == 0.0 && recover < 1e-10;
        r.detail = "71 frames, max |sum p - 1| = " + sci(norm_dev) + ", outside-wall weight = " + sci(leaked) +
                   ", adjoint recovery = " + sci(recover);
    });
}

CheckResult check_permutation_spectra(const SelftestOptions&) {
    return timed(3, "permutation spectra", 1.0, [&](CheckResult& r) {
        double worst = 0.0;
        for (int n = 2; n <= 8; ++n) {
            const SpectrumResult s = eigenphases(compose_step(make_billiard(BilliardKind::One, n, 0.0)));
            worst = std::max(worst, phase_multiset_distance(s.phases, reference::roots_of_unity_phases(2 * n)));
        }
        for (int n : {6, 8}) {
            const SpectrumResult s = eigenphases(compose_step(make_billiard(BilliardKind::Two, n, 0.0)));
            const Eigen::VectorXd expected = repeat_each(reference::roots_of_unity_phases(n), 2);
            worst = std::max(worst, phase_multiset_distance(s.phases, expected));
        }
        r.passed = worst < 1e-10;
        r.detail = "kind 1 N=2..8 and kind 2 N=6,8, max phase error = " + sci(worst);
    });
}

CheckResult check_bloch_table(const SelftestOptions&) {
    return timed(4, "Bloch table", 5.0, [&](CheckResult& r) {
        std::mt19937_64 rng(20240601);
        std::uniform_real_distribution<double> angle(-pi, pi);
        double worst_u = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const double theta = angle(rng);
            const double k = angle(rng);
            worst_u = std::max(worst_u, verify_unitarity(bloch_kind1(theta, k, 5)));
        }
        double worst_k0 = 0.0;
        double worst_charpoly = 0.0;
        for (double theta : {0.0, 0.3, pi / 4, 1.1, pi / 2, 2.5}) {
            const Eigen::MatrixXcd direct = compose_step(make_billiard(BilliardKind::One, 5, theta)).matrix;
            const SpectrumResult a = eigenphases(bloch_kind1(theta, 0.0, 5), "bloch");
            const SpectrumResult b = eigenphases(direct);
            worst_k0 = std::max(worst_k0, phase_multiset_distance(a.phases, b.phases));
            // Every Bloch eigenvalue must be a root of the direct operator's
            // characteristic polynomial.
            const Eigen::VectorXcd c = reference::characteristic_polynomial(direct);
            for (Index i = 0; i < a.eigenvalues.size(); ++i) {
                Complex acc = c(c.size() - 1);
                for (Index j = c.size() - 2; j >= 0; --j) acc = acc * a.eigenvalues(i) + c(j);
                worst_charpoly = std::max(worst_charpoly, std::abs(acc));
            }
        }
        r.passed = worst_u < 1e-12 && worst_k0 < 1e-10 && worst_charpoly < 1e-10;
        r.detail = "1000 random (theta, k): max |U*U - I| = " + sci(worst_u) + "; k=0 vs direct N=5: " +
                   sci(worst_k0) + "; characteristic polynomial residual: " + sci(worst_charpoly);
    });
}

CheckResult check_curved_reduction(const SelftestOptions&) {
    return timed(5, "curved-path reduction", 1.0, [&](CheckResult& r) {
        std::mt19937_64 rng(77);
        std::uniform_real_distribution<double> angle(-pi, pi);
        double worst_plane = 0.0;
        double worst_literal = 0.0;
        double worst_literal_shifted = 0.0;
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 3 + trial % 8;
            const double theta = angle(rng);
            BlochParams p;
            p.k_path = angle(rng);
            p.k_alpha = angle(rng);
            p.alpha = angle(rng);
            const CurvedPath path = CurvedPath::straight(Grid1D(0, n - 1));
            const Eigen::MatrixXcd table = bloch_kind1(theta, p.k_path + p.k_alpha, n);

            p.variant = BlochVariant::PlaneWaveConsistent;
            worst_plane = std::max(worst_plane,
                                   (bloch_curved(theta, p, path, BilliardKind::One) - table).cwiseAbs().maxCoeff());
            p.variant = BlochVariant::Literal;
            worst_literal = std::max(
                worst_literal, (bloch_curved(theta, p, path, BilliardKind::One) - table).cwiseAbs().maxCoeff());

            // The literal substitution carries an extra e^{-i} per forward
            // hop; it reduces to the table with k_path = 0, k_alpha = k + 1.
            BlochParams q = p;
            q.k_path = 0.0;
            q.k_alpha = p.k_path + p.k_alpha + 1.0;
            worst_literal_shifted = std::max(
                worst_literal_shifted,
                (bloch_curved(theta, q, path, BilliardKind::One) - table).cwiseAbs().maxCoeff());
        }
        r.passed = worst_plane < 1e-14 && worst_literal < 1e-14;
        r.detail = "k = k_path + k_alpha: plane-wave max entry error " + sci(worst_plane) + ", literal " +
                   sci(worst_literal) + " (literal matches only at k_path = 0, k_alpha = k + 1: " +
                   sci(worst_literal_shifted) + ")";
    });
}

CheckResult check_tensor_oracle(const SelftestOptions& options) {
    return timed(6, "tensor oracle", 30.0, [&](CheckResult& r) {
        std::vector<FactorSpec> family;
        auto add = [&](BilliardKind kind, int n, double theta, PathTag path, double phi = 0.0) {
            family.push_back({make_billiard(kind, n, theta, path, phi), std::nullopt});
        };
        add(BilliardKind::One, 3, pi / 4, PathTag::Line);
        add(BilliardKind::One, 4, pi / 6, PathTag::Sin);
        add(BilliardKind::Two, 4, pi / 4, PathTag::Cosh);
        add(BilliardKind::One, 5, 0.9, PathTag::Cos, 1.0);
        add(BilliardKind::One, 6, pi / 4, PathTag::Tanh);
        add(BilliardKind::Two, 6, 0.4, PathTag::Line, pi);
        add(BilliardKind::One, 7, 1.3, PathTag::Line, 1.0);
        add(BilliardKind::Two, 8, pi / 3, PathTag::Sin);
        add(BilliardKind::One, 9, 0.2, PathTag::Cosh);
        add(BilliardKind::One, 10, pi / 4, PathTag::Cos);
        {
            FactorSpec f{make_billiard(BilliardKind::One, 5, 0.7, PathTag::Sin), BlochParams{}};
            f.bloch->k_path = 0.4;
            f.bloch->k_alpha = -1.2;
            f.bloch->alpha = 0.3;
            family.push_back(f);
        }
        {
            FactorSpec f{make_billiard(BilliardKind::Two, 6, 1.0, PathTag::Cos), BlochParams{}};
            f.bloch->k_path = 1.5;
            f.bloch->variant = BlochVariant::PlaneWaveConsistent;
            family.push_back(f);
        }

        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t i = 0; i < family.size(); ++i) {
            for (std::size_t j = i; j < family.size(); ++j) {
                const Index dim = factor_matrix(family[i]).rows() * factor_matrix(family[j]).rows();
                if (dim <= 400) pairs.emplace_back(i, j);
            }
        }
        std::vector<double> err(pairs.size());
        parallel_for(static_cast<Index>(pairs.size()), options.threads, [&](Index p) {
            const auto [i, j] = pairs[static_cast<std::size_t>(p)];
            const Billiard2DSpec spec{family[i], family[j], 400};
            const SpectrumResult sumset = tensor_spectrum(spec, 1);
            const SpectrumResult direct = eigenphases(tensor_operator(spec));
            err[static_cast<std::size_t>(p)] = phase_multiset_distance(sumset.phases, direct.phases);
        });
        const double worst = err.empty() ? 0.0 : *std::max_element(err.begin(), err.end());
        r.passed = !pairs.empty() && worst < 1e-9;
        r.detail = std::to_string(pairs.size()) + " factor pairs (dim <= 400), max phase error = " + sci(worst);
    });
}

CheckResult check_statistics_pipeline(const SelftestOptions&) {
    return timed(7, "statistics pipeline", 5.0, [&](CheckResult& r) {
        double mean_dev = 0.0;
        double integral_dev = 0.0;
        auto probe = [&](const SpacingSequence& seq) {
            mean_dev = std::max(mean_dev, std::abs(seq.spacings.mean() - 1.0));
            for (int bins : {1, 7, 20, 50}) {
                const SpacingHistogram h = histogram(seq, bins);
                double area = 0.0;
                for (Index b = 0; b < h.bins(); ++b) area += h.densities(b) * (h.bin_edges(b + 1) - h.bin_edges(b));
                integral_dev = std::max(integral_dev, std::abs(area - 1.0));
            }
        };
        for (int n : {6, 9, 14}) {
            const SpectrumResult s = eigenphases(compose_step(make_billiard(BilliardKind::One, n, 0.6, PathTag::Sin)));
            probe(spacings_from_spectrum(s, {}));
        }
        {
            const Billiard2DSpec spec{{make_billiard(BilliardKind::Two, 10, 0.5, PathTag::Cosh), std::nullopt},
                                      {make_billiard(BilliardKind::Two, 10, 0.5, PathTag::Cosh), std::nullopt}};
            probe(spacings_from_spectrum(tensor_spectrum(spec), {}));
            SpacingOptions open;
            open.circular = false;
            open.gaps_to_exclude = 0;
            probe(spacings_from_spectrum(tensor_spectrum(spec), open));
        }

        std::mt19937_64 rng(314159);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        Eigen::VectorXd poisson(10000);
        Eigen::VectorXd wigner(10000);
        for (Index i = 0; i < 10000; ++i) poisson(i) = -std::log1p(-unit(rng));
        for (Index i = 0; i < 10000; ++i) wigner(i) = std::sqrt(-4.0 / pi * std::log1p(-unit(rng)));
        const SpacingSequence ps = normalized_spacings(poisson);
        const SpacingSequence ws = normalized_spacings(wigner);
        probe(ps);
        probe(ws);
        const Classification cp = classify(ps);
        const Classification cw = classify(ws);
        const bool labels = cp.verdict == Verdict::PoissonLike && cw.verdict == Verdict::WignerLike &&
                            cp.ks_wigner - cp.ks_poisson > 0.05 && cw.ks_poisson - cw.ks_wigner > 0.05;

        r.passed = mean_dev <= 1e-12 && integral_dev <= 1e-10 && labels;
        r.detail = "max |mean - 1| = " + sci(mean_dev) + ", max |area - 1| = " + sci(integral_dev) +
                   "; Poisson draws " + std::string(verdict_name(cp.verdict)) + " (KS W " +
                   format_double(cp.ks_wigner).substr(0, 6) + " / P " + format_double(cp.ks_poisson).substr(0, 6) +
                   "), Wigner draws " + std::string(verdict_name(cw.verdict)) + " (KS W " +
                   format_double(cw.ks_wigner).substr(0, 6) + " / P " + format_double(cw.ks_poisson).substr(0, 6) +
                   ")";
    });
}

CheckResult check_gap_exclusion(const SelftestOptions&) {
    return timed(8, "gap exclusion", 1.0, [&](CheckResult& r) {
        std::mt19937_64 rng(2718);
        std::uniform_real_distribution<double> angle(-pi, pi);
        int mismatches = 0;
        for (int trial = 0; trial < 100; ++trial) {
            const int n = 5 + static_cast<int>(rng() % 60);
            std::vector<double> v(static_cast<std::size_t>(n));
            if (trial % 10 == 0) {
                // equal spacings exercise the tie-break
                for (int j = 0; j < n; ++j) v[static_cast<std::size_t>(j)] = -pi + 2 * pi * (j + 0.5) / n;
            } else {
                for (double& x : v) x = angle(rng);
            }
            std::sort(v.begin(), v.end());
            SpacingOptions options;
            options.circular = trial % 3 != 0;
            options.gaps_to_exclude = static_cast<int>(rng() % static_cast<unsigned>(std::min(6, n - 1)));
            const Eigen::VectorXd phases = Eigen::Map<Eigen::VectorXd>(v.data(), n);
            const SpacingSequence seq = spacings_from_phases(phases, options);

            std::vector<double> raw;
            for (int j = 1; j < n; ++j) raw.push_back(v[static_cast<std::size_t>(j)] - v[static_cast<std::size_t>(j - 1)]);
            if (options.circular) raw.push_back(2 * pi - (v.back() - v.front()));
            const std::vector<double> kept = reference::drop_largest_by_sort(raw, options.gaps_to_exclude);
            double mean = 0.0;
            for (double x : kept) mean += x;
            mean /= static_cast<double>(kept.size());

            bool ok = static_cast<std::size_t>(seq.spacings.size()) == kept.size() &&
                      seq.excluded_gaps.size() == static_cast<std::size_t>(options.gaps_to_exclude);
            for (std::size_t j = 0; ok && j < kept.size(); ++j) {
                ok = std::abs(seq.spacings(static_cast<Index>(j)) - kept[j] / mean) <= 1e-14;
            }
            std::vector<double> sorted = raw;
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            for (std::size_t j = 0; ok && j < seq.excluded_gaps.size(); ++j) ok = seq.excluded_gaps[j] == sorted[j];
            if (!ok) ++mismatches;
        }
        r.passed = mismatches == 0;
        r.detail = "100 random spectra, " + std::to_string(mismatches) + " mismatches against the sort oracle";
    });
}

CheckResult check_electric_report(const SelftestOptions& options) {
    return timed(9, "electric Line x Line report", 10.0, [&](CheckResult& r) {
        r.report_only = true;
        const FactorSpec f{make_billiard(BilliardKind::One, 12, pi / 4, PathTag::Line, 1.0), std::nullopt};
        const SpectrumResult s = tensor_spectrum(Billiard2DSpec{f, f}, options.threads);
        SpacingOptions so;
        so.gaps_to_exclude = 2;
        const Classification c = classify(spacings_from_spectrum(s, so));
        const bool poisson_closer = c.ks_poisson < c.ks_wigner;
        r.passed = true;
        r.detail = "ks_poisson = " + format_double(c.ks_poisson).substr(0, 8) + ", ks_wigner = " +
                   format_double(c.ks_wigner).substr(0, 8) + ", verdict " + std::string(verdict_name(c.verdict)) +
                   (poisson_closer ? "; Poisson-closer, as expected for a regular billiard"
                                   : "; NOT Poisson-closer (expected Poisson-closer for a regular billiard)");
    });
}

CheckResult check_determinism(const SelftestOptions& options) {
    return timed(10, "determinism", 5.0, [&](CheckResult& r) {
        fs::path root = options.work_dir;
        if (root.empty()) {
            root = fs::temp_directory_path() / ("qwb_selftest_" + std::to_string(std::random_device{}()));
        }
        fs::remove_all(root);
        fs::create_directories(root);

        auto in_process = [&](const fs::path& dir) {
            std::ostringstream sink;
            for (auto args : determinism_commands()) {
                args.push_back("--out-dir");
                args.push_back(dir.string());
                const int code = run_main(args, sink, sink);
                if (code != 0) throw std::runtime_error("in-process run failed (" + args.front() + "): " + sink.str());
            }
            return snapshot(dir);
        };
        auto external = [&](const fs::path& dir) {
            for (const auto& args : determinism_commands()) {
                std::string cmd = shell_quote(options.cli_path);
                for (const auto& a : args) cmd += " " + shell_quote(a);
                cmd += " --out-dir " + shell_quote(dir.string()) + " > /dev/null 2>&1";
                if (std::system(cmd.c_str()) != 0) throw std::runtime_error("external run failed: " + cmd);
            }
            return snapshot(dir);
        };

        const auto first = in_process(root / "a");
        const auto second = in_process(root / "a");
        const auto other_dir = in_process(root / "b");
        bool same = !first.empty() && first == second && first == other_dir;
        std::string detail = std::to_string(first.size()) + " files from " +
                             std::to_string(determinism_commands().size()) + " commands, in-process repeat " +
                             (first == second && first == other_dir ? "identical" : "DIFFERS");
        if (!options.cli_path.empty()) {
            const auto e1 = external(root / "c");
            const auto e2 = external(root / "c");
            const bool ext_same = e1 == e2 && e1 == first;
            same = same && ext_same;
            detail += ", executable repeat " + std::string(ext_same ? "identical" : "DIFFERS");
        }
        fs::remove_all(root);
        r.passed = same;
        r.detail = detail;
    });
}

std::vector<CheckResult> run_selftest(const SelftestOptions& options) {
    return {check_unitarity_sweep(options),  check_evolution(options),       check_permutation_spectra(options),
            check_bloch_table(options),      check_curved_reduction(options), check_tensor_oracle(options),
            check_statistics_pipeline(options), check_gap_exclusion(options), check_electric_report(options),
            check_determinism(options)};
}

std::string format_check(const CheckResult& r) {
    char head[160];
    std::snprintf(head, sizeof head, "%-6s %2d %-30s (%.2f s, limit %g s)  ",
                  r.report_only ? "REPORT" : (r.passed ? "PASS" : "FAIL"), r.id, r.name.c_str(), r.seconds,
                  r.limit_seconds);
    return head + r.detail;
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed || r.report_only; });
}

}  // namespace qwb::cli
