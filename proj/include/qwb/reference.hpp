// Slow, independent computations that the tests and the
// `selftest` command check the fast paths against. Nothing in the core
// library calls into this header.

#pragma once

#include "qwb/lattice.hpp"

#include <Eigen/Dense>

#include <functional>
#include <utility>
#include <vector>

namespace qwb::reference {

// Characteristic polynomial coefficients c₀..c_n (c_n = 1) of det(λI − A),
// via the Faddeev-LeVerrier recursion.
Eigen::VectorXcd characteristic_polynomial(const Eigen::MatrixXcd& a);

// All roots of Σ cᵢ λⁱ by Durand-Kerner iteration.
Eigen::VectorXcd polynomial_roots(const Eigen::VectorXcd& coeffs, int max_iterations = 2000);

// Phases of the characteristic-polynomial roots, unsorted.
Eigen::VectorXd charpoly_phases(const Eigen::MatrixXcd& a);

// Cycle decomposition of a 0/1 permutation matrix, following each column
// to its unique non-zero row. Each cycle lists flat indices in visit order.
std::vector<std::vector<Eigen::Index>> permutation_cycles(const Eigen::MatrixXcd& p);

// Image of (site, spin) under the kind-1 and kind-2 bounce rules, written
// directly from the case analysis, without any matrix.
std::pair<int, Spin> kind1_image(const Grid1D& grid, int site, Spin s);
std::pair<int, Spin> kind2_image(const Grid1D& grid, int site, Spin s);

// 2π j / n wrapped into (−π, π], sorted.
Eigen::VectorXd roots_of_unity_phases(int n);

// Composite Simpson rule with `intervals` (made even) panels.
double simpson(const std::function<double(double)>& f, double a, double b, int intervals);

// Removes the g largest entries by fully sorting (value desc, position asc).
std::vector<double> drop_largest_by_sort(const std::vector<double>& raw, int g);

}  // namespace qwb::reference
