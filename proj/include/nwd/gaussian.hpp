#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "nwd/box.hpp"
#include "nwd/errors.hpp"

namespace nwd {

/// 2D Gaussian with diagonal covariance. Off-diagonal entries are implicitly
/// zero (axis-aligned boxes only).
struct Gaussian2D {
    std::array<double, 2> mean{0.0, 0.0};      // pixels
    std::array<double, 2> cov_diag{0.0, 0.0};  // pixels^2

    bool operator==(const Gaussian2D&) const = default;
};

/// Models a box as the Gaussian whose density contour at Mahalanobis
/// distance 1 is the box's inscribed ellipse: mean = center,
/// cov_diag = (w^2/4, h^2/4).
inline Gaussian2D box_to_gaussian(const BoundingBox& box) {
    return Gaussian2D{{box.cx, box.cy},
                      {box.w * box.w / 4.0, box.h * box.h / 4.0}};
}

namespace detail {

inline void require_invertible(const Gaussian2D& g) {
    if (!(g.cov_diag[0] > 0.0) || !(g.cov_diag[1] > 0.0)) {
        throw SingularCovarianceError("covariance diagonal must be strictly positive");
    }
}

} // namespace detail

/// Squared Mahalanobis distance (x - mu)^T Sigma^-1 (x - mu). Equals 1 exactly
/// on the box's inscribed ellipse.
inline double mahalanobis_sq(const Gaussian2D& g, const std::array<double, 2>& point) {
    detail::require_invertible(g);
    const double dx = point[0] - g.mean[0];
    const double dy = point[1] - g.mean[1];
    return dx * dx / g.cov_diag[0] + dy * dy / g.cov_diag[1];
}

/// Density of the 2D Gaussian at a point:
/// exp(-1/2 (x-mu)^T Sigma^-1 (x-mu)) / (2 pi |Sigma|^(1/2)).
inline double gaussian_pdf(const Gaussian2D& g, const std::array<double, 2>& point) {
    const double md2 = mahalanobis_sq(g, point);
    const double det_sqrt = std::sqrt(g.cov_diag[0] * g.cov_diag[1]);
    return std::exp(-0.5 * md2) / (2.0 * std::numbers::pi * det_sqrt);
}

} // namespace nwd
