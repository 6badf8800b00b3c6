// Grids, spin labels, path functions and walker states.
//
// Every flattened vector or matrix in the library uses the same layout:
// site-major, spin-minor, so that (x, s) lives at 2·(x − n_left) + s.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qwb {

using Complex = std::complex<double>;
using Index = Eigen::Index;

enum class Spin : int { Up = 0, Down = 1 };

inline constexpr int spin_index(Spin s) noexcept { return static_cast<int>(s); }

// Closed integer segment [n_left, n_right] with at least two sites.
class Grid1D {
  public:
    Grid1D(int n_left, int n_right);

    int n_left() const noexcept { return n_left_; }
    int n_right() const noexcept { return n_right_; }
    int size() const noexcept { return n_right_ - n_left_ + 1; }
    Index dim() const noexcept { return 2 * static_cast<Index>(size()); }
    bool contains(int site) const noexcept { return site >= n_left_ && site <= n_right_; }

    // Left of the two middle sites when the site count is even.
    int central_site() const noexcept { return n_left_ + (size() - 1) / 2; }

    Index index(int site, Spin s) const noexcept {
        return 2 * static_cast<Index>(site - n_left_) + spin_index(s);
    }
    std::pair<int, Spin> site_spin(Index flat) const noexcept {
        return {n_left_ + static_cast<int>(flat / 2), (flat % 2 == 0) ? Spin::Up : Spin::Down};
    }

    friend bool operator==(const Grid1D&, const Grid1D&) = default;

  private:
    int n_left_;
    int n_right_;
};

// Two interleaved sublattices covering one contiguous segment. The "even"
// sublattice starts at the left wall, the "odd" one a site later; both step
// by two and together hold an even number of sites.
class Kind2Grid {
  public:
    Kind2Grid(int even_left, int even_right, int odd_left, int odd_right);

    // Interleaves an existing segment; needs an even site count ≥ 4.
    static Kind2Grid over(const Grid1D& grid);

    int even_left() const noexcept { return even_left_; }
    int even_right() const noexcept { return even_right_; }
    int odd_left() const noexcept { return odd_left_; }
    int odd_right() const noexcept { return odd_right_; }

    Grid1D grid() const { return Grid1D(even_left_, odd_right_); }
    bool on_even(int site) const noexcept { return ((site - even_left_) % 2) == 0; }

  private:
    int even_left_;
    int even_right_;
    int odd_left_;
    int odd_right_;
};

enum class PathTag { Line, Sin, Cos, Cosh, Tanh, Custom };

std::string_view path_name(PathTag tag) noexcept;
PathTag parse_path_tag(std::string_view name);  // throws std::invalid_argument

// The curve f(α) a walker is carried along. Line is the identity map.
class PathFunction {
  public:
    PathFunction() : PathFunction(PathTag::Line) {}
    explicit PathFunction(PathTag tag);
    static PathFunction custom(std::string name, std::function<double(double)> f);

    PathTag tag() const noexcept { return tag_; }
    const std::string& name() const noexcept { return name_; }
    double operator()(double alpha) const { return f_(alpha); }

  private:
    PathTag tag_;
    std::string name_;
    std::function<double(double)> f_;
};

struct PathPoint {
    double f_alpha;  // f(α)
    double alpha;
};

// α grid alpha_left, alpha_left + step, …, alpha_right along a path.
class CurvedPath {
  public:
    CurvedPath(PathFunction path, double alpha_left, double alpha_right, double step);

    // Line path, step 1, α equal to the integer site coordinate.
    static CurvedPath straight(const Grid1D& grid);

    const PathFunction& path() const noexcept { return path_; }
    double alpha_left() const noexcept { return alpha_left_; }
    double alpha_right() const noexcept { return alpha_right_; }
    double step() const noexcept { return step_; }
    int point_count() const noexcept { return count_; }
    double alpha(int j) const noexcept { return alpha_left_ + j * step_; }

    // Integer index grid carrying the walk; see curved_shift.
    Grid1D grid() const;
    std::vector<PathPoint> coordinates() const;

  private:
    PathFunction path_;
    double alpha_left_;
    double alpha_right_;
    double step_;
    int count_;
};

// U(x)|x,u> + D(x)|x,d> over a grid.
class SpinorState {
  public:
    SpinorState(Grid1D grid, Eigen::VectorXcd amplitudes);

    const Grid1D& grid() const noexcept { return grid_; }
    const Eigen::VectorXcd& amplitudes() const noexcept { return amplitudes_; }
    Complex amplitude(int site, Spin s) const { return amplitudes_(grid_.index(site, s)); }

  private:
    Grid1D grid_;
    Eigen::VectorXcd amplitudes_;
};

SpinorState make_delta_state(const Grid1D& grid, int site, Complex up, Complex down);

// (1, i)/√2 at the central site.
SpinorState default_initial_state(const Grid1D& grid);

double state_norm(const SpinorState& state);

struct SiteProbability {
    int site;
    double probability;
};

std::vector<SiteProbability> probability_profile(const SpinorState& state);

}  // namespace qwb
