#include "qwb/cli/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace qwb::cli {

namespace {

constexpr double kMarginLeft = 70.0;
constexpr double kMarginRight = 30.0;
constexpr double kMarginTop = 40.0;
constexpr double kMarginBottom = 60.0;
constexpr double kPlotWidth = kCanvasWidth - kMarginLeft - kMarginRight;
constexpr double kPlotHeight = kCanvasHeight - kMarginTop - kMarginBottom;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string escape_comment(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += s[i];
        if (s[i] == '-' && i + 1 < s.size() && s[i + 1] == '-') out += ' ';
    }
    if (!out.empty() && out.back() == '-') out += ' ';
    return out;
}

std::string escape_text(const std::string& s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += ch;
        }
    }
    return out;
}

void open(std::ostringstream& os, const std::string& comment, const std::string& title) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<!--\n" << escape_comment(comment) << "-->\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvasWidth << "\" height=\"" << kCanvasHeight
       << "\" viewBox=\"0 0 " << kCanvasWidth << ' ' << kCanvasHeight << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << kCanvasWidth << "\" height=\"" << kCanvasHeight
       << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << num(kCanvasWidth / 2.0) << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       << "font-size=\"16\">" << escape_text(title) << "</text>\n";
}

void axes(std::ostringstream& os, const std::string& xlabel, const std::string& ylabel, double x0, double x1,
          double y0, double y1) {
    os << "<rect x=\"" << num(kMarginLeft) << "\" y=\"" << num(kMarginTop) << "\" width=\"" << num(kPlotWidth)
       << "\" height=\"" << num(kPlotHeight) << "\" fill=\"none\" stroke=\"black\"/>\n";
    const double bottom = kMarginTop + kPlotHeight;
    os << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<text x=\"" << num(kMarginLeft) << "\" y=\"" << num(bottom + 18) << "\" text-anchor=\"middle\">" << num(x0)
       << "</text>\n";
    os << "<text x=\"" << num(kMarginLeft + kPlotWidth) << "\" y=\"" << num(bottom + 18)
       << "\" text-anchor=\"middle\">" << num(x1) << "</text>\n";
    os << "<text x=\"" << num(kMarginLeft - 6) << "\" y=\"" << num(bottom) << "\" text-anchor=\"end\">" << num(y0)
       << "</text>\n";
    os << "<text x=\"" << num(kMarginLeft - 6) << "\" y=\"" << num(kMarginTop + 10) << "\" text-anchor=\"end\">"
       << num(y1) << "</text>\n";
    os << "<text x=\"" << num(kMarginLeft + kPlotWidth / 2) << "\" y=\"" << num(bottom + 40)
       << "\" text-anchor=\"middle\">" << escape_text(xlabel) << "</text>\n";
    os << "<text x=\"20\" y=\"" << num(kMarginTop + kPlotHeight / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 20 "
       << num(kMarginTop + kPlotHeight / 2) << ")\">" << escape_text(ylabel) << "</text>\n";
    os << "</g>\n";
}

std::string close(std::ostringstream& os) {
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string render_heatmap_svg(const EvolutionRecord& record, const std::string& comment) {
    if (record.frames.empty() || record.frames.front().empty()) {
        throw std::invalid_argument("heatmap: evolution record has no frames");
    }
    const auto rows = record.frames.size();
    const auto cols = record.frames.front().size();
    double peak = 0.0;
    for (const auto& f : record.frames) {
        if (f.size() != cols) throw std::invalid_argument("heatmap: ragged frames");
        peak = std::max(peak, *std::max_element(f.begin(), f.end()));
    }
    const Grid1D grid = record.spec.grid();

    std::ostringstream os;
    open(os, comment, "Site probability per time step");
    axes(os, "site", "time step", grid.n_left(), grid.n_right(), 0.0, static_cast<double>(rows - 1));
    const double w = kPlotWidth / static_cast<double>(cols);
    const double h = kPlotHeight / static_cast<double>(rows);
    os << "<g stroke=\"none\">\n";
    for (std::size_t t = 0; t < rows; ++t) {
        for (std::size_t x = 0; x < cols; ++x) {
            const double p = peak > 0.0 ? record.frames[t][x] / peak : 0.0;
            const int shade = static_cast<int>(255.0 * (1.0 - std::clamp(p, 0.0, 1.0)) + 0.5);
            // time runs downward from the top edge
            os << "<rect x=\"" << num(kMarginLeft + x * w) << "\" y=\"" << num(kMarginTop + t * h) << "\" width=\""
               << num(w) << "\" height=\"" << num(h) << "\" fill=\"rgb(" << shade << ',' << shade << ",255)\"/>\n";
        }
    }
    os << "</g>\n";
    return close(os);
}

std::string render_bands_svg(const DispersionTable& table, const std::string& comment) {
    if (table.k.empty() || table.phases.empty()) throw std::invalid_argument("bands: dispersion table is empty");
    const double k0 = table.k.front();
    const double k1 = table.k.back();
    const double span = k1 > k0 ? k1 - k0 : 1.0;
    const double pi = std::numbers::pi;

    std::ostringstream os;
    open(os, comment, "Eigenphase bands");
    axes(os, "quasi-momentum", "phase", k0, k1, -pi, pi);
    os << "<g fill=\"steelblue\" stroke=\"none\">\n";
    for (std::size_t i = 0; i < table.k.size(); ++i) {
        const double x = kMarginLeft + kPlotWidth * (table.k[i] - k0) / span;
        const Eigen::VectorXd& ph = table.phases[i];
        for (Index b = 0; b < ph.size(); ++b) {
            const double y = kMarginTop + kPlotHeight * (pi - ph(b)) / (2.0 * pi);
            os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y) << "\" r=\"1.5\"/>\n";
        }
    }
    os << "</g>\n";
    return close(os);
}

std::string render_histogram_svg(const SpacingHistogram& hist, const std::string& comment) {
    if (hist.bins() == 0) throw std::invalid_argument("histogram: no bins");
    const double s_max = hist.bin_edges(hist.bins());
    double top = std::max(hist.densities.maxCoeff(), 1.0);
    top *= 1.05;
    auto px = [&](double s) { return kMarginLeft + kPlotWidth * s / s_max; };
    auto py = [&](double d) { return kMarginTop + kPlotHeight * (1.0 - std::min(d, top) / top); };

    std::ostringstream os;
    open(os, comment, "Spacing distribution");
    axes(os, "s", "P(s)", 0.0, s_max, 0.0, top);
    os << "<g fill=\"lightgray\" stroke=\"gray\">\n";
    for (Index b = 0; b < hist.bins(); ++b) {
        const double x = px(hist.bin_edges(b));
        const double w = px(hist.bin_edges(b + 1)) - x;
        const double y = py(hist.densities(b));
        os << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w) << "\" height=\""
           << num(kMarginTop + kPlotHeight - y) << "\"/>\n";
    }
    os << "</g>\n";

    constexpr int samples = 200;
    auto curve = [&](const char* colour, const char* name, auto&& pdf) {
        os << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
        for (int i = 0; i <= samples; ++i) {
            const double s = s_max * i / samples;
            if (i > 0) os << ' ';
            os << num(px(s)) << ',' << num(py(pdf(s)));
        }
        os << "\"><title>" << name << "</title></polyline>\n";
    };
    curve("firebrick", "Wigner", [](double s) { return wigner_pdf(s); });
    curve("seagreen", "Poisson", [](double s) { return poisson_pdf(s); });

    os << "<g font-family=\"sans-serif\" font-size=\"12\">\n"
       << "<text x=\"" << num(kMarginLeft + kPlotWidth - 10) << "\" y=\"" << num(kMarginTop + 20)
       << "\" text-anchor=\"end\" fill=\"firebrick\">Wigner</text>\n"
       << "<text x=\"" << num(kMarginLeft + kPlotWidth - 10) << "\" y=\"" << num(kMarginTop + 36)
       << "\" text-anchor=\"end\" fill=\"seagreen\">Poisson</text>\n"
       << "</g>\n";
    return close(os);
}

}  // namespace qwb::cli
