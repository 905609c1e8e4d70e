#pragma once

#include <cstddef>
#include <vector>

#include "slosh/types.hpp"

namespace slosh::detail {

// Shared finite-difference stencils. Wall behaviour is fixed once here so the
// functionals and the solver discretize the zero-contact-angle condition
// identically: levels get reflection ghosts h[-1] = h[0], h[N] = h[N-1].

/// Level slope at each face; faces 0 and N are exactly 0 (wall condition).
inline void face_slopes(const std::vector<double>& h, const Grid& grid, std::vector<double>& out) {
    const int n = grid.n();
    const double inv_dx = 1.0 / grid.dx();
    out.resize(static_cast<std::size_t>(n) + 1);
    out[0] = 0.0;
    out[static_cast<std::size_t>(n)] = 0.0;
    for (int j = 1; j < n; ++j) out[j] = (h[j] - h[j - 1]) * inv_dx;
}

/// Level interpolated to faces by arithmetic averaging; walls take the
/// adjacent cell value.
inline void face_levels(const std::vector<double>& h, const Grid& grid, std::vector<double>& out) {
    const int n = grid.n();
    out.resize(static_cast<std::size_t>(n) + 1);
    out[0] = h[0];
    out[static_cast<std::size_t>(n)] = h[n - 1];
    for (int j = 1; j < n; ++j) out[j] = 0.5 * (h[j - 1] + h[j]);
}

/// Centered level slope at cell centers with reflection ghosts.
inline void center_slopes(const std::vector<double>& h, const Grid& grid,
                          std::vector<double>& out) {
    const int n = grid.n();
    const double half_inv_dx = 0.5 / grid.dx();
    out.resize(static_cast<std::size_t>(n));
    out[0] = (h[1] - h[0]) * half_inv_dx;
    out[static_cast<std::size_t>(n) - 1] = (h[n - 1] - h[n - 2]) * half_inv_dx;
    for (int i = 1; i < n - 1; ++i) out[i] = (h[i + 1] - h[i - 1]) * half_inv_dx;
}

/// Second difference at cell centers with reflection ghosts.
inline void center_second_diff(const std::vector<double>& h, const Grid& grid,
                               std::vector<double>& out) {
    const int n = grid.n();
    const double inv_dx2 = 1.0 / (grid.dx() * grid.dx());
    out.resize(static_cast<std::size_t>(n));
    out[0] = (h[1] - h[0]) * inv_dx2;
    out[static_cast<std::size_t>(n) - 1] = (h[n - 2] - h[n - 1]) * inv_dx2;
    for (int i = 1; i < n - 1; ++i) out[i] = (h[i + 1] - 2.0 * h[i] + h[i - 1]) * inv_dx2;
}

/// Face velocity averaged to cell centers.
inline void center_velocities(const std::vector<double>& v, const Grid& grid,
                              std::vector<double>& out) {
    const int n = grid.n();
    out.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[i] = 0.5 * (v[i] + v[i + 1]);
}

/// Velocity gradient at cell centers.
inline void center_velocity_gradient(const std::vector<double>& v, const Grid& grid,
                                     std::vector<double>& out) {
    const int n = grid.n();
    const double inv_dx = 1.0 / grid.dx();
    out.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[i] = (v[i + 1] - v[i]) * inv_dx;
}

/// Midpoint quadrature over cell centers.
inline double integrate_centers(const std::vector<double>& f, const Grid& grid) {
    double sum = 0.0;
    for (double fi : f) sum += fi;
    return sum * grid.dx();
}

/// Trapezoid quadrature over faces.
inline double integrate_faces(const std::vector<double>& f, const Grid& grid) {
    const std::size_t n = f.size() - 1;
    double sum = 0.5 * (f[0] + f[n]);
    for (std::size_t j = 1; j < n; ++j) sum += f[j];
    return sum * grid.dx();
}

}  // namespace slosh::detail
