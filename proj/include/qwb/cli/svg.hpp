// Self-contained SVG plots on a fixed 800x600 canvas. Output depends only
// on the data and the comment string.

#pragma once

#include "qwb/evolution.hpp"
#include "qwb/spectrum.hpp"
#include "qwb/statistics.hpp"

#include <string>

namespace qwb::cli {

inline constexpr int kCanvasWidth = 800;
inline constexpr int kCanvasHeight = 600;

// One row per frame, one cell per site; darker cells hold more probability.
std::string render_heatmap_svg(const EvolutionRecord& record, const std::string& comment);

// One marker per (k, band) sample.
std::string render_bands_svg(const DispersionTable& table, const std::string& comment);

// Density bars with the Wigner and Poisson reference curves on top.
std::string render_histogram_svg(const SpacingHistogram& hist, const std::string& comment);

}  // namespace qwb::cli
