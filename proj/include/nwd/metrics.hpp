#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "nwd/box.hpp"
#include "nwd/errors.hpp"
#include "nwd/gaussian.hpp"

namespace nwd {

/// Default normalization constant for the normalized Wasserstein metric,
/// in pixels. Matches the mean absolute object size of the tiny-object
/// aerial benchmark this toolkit targets; override per dataset.
inline constexpr double kDefaultNwdC = 12.8;

namespace detail {

inline double overlap_1d(double lo_a, double hi_a, double lo_b, double hi_b) {
    return std::min(hi_a, hi_b) - std::max(lo_a, lo_b);
}

struct EnclosingBox {
    double w = 0.0;
    double h = 0.0;
};

inline EnclosingBox enclosing(const BoundingBox& a, const BoundingBox& b) {
    return {std::max(a.x2(), b.x2()) - std::min(a.x1(), b.x1()),
            std::max(a.y2(), b.y2()) - std::min(a.y1(), b.y1())};
}

} // namespace detail

/// Intersection area |A ∩ B|; zero when the boxes are disjoint.
inline double intersection_area(const BoundingBox& a, const BoundingBox& b) {
    const double iw = detail::overlap_1d(a.x1(), a.x2(), b.x1(), b.x2());
    if (iw <= 0.0) return 0.0;
    const double ih = detail::overlap_1d(a.y1(), a.y2(), b.y1(), b.y2());
    if (ih <= 0.0) return 0.0;
    return iw * ih;
}

/// Intersection over union, in [0, 1]. 1 iff the boxes are identical.
inline double iou(const BoundingBox& a, const BoundingBox& b) {
    const double inter = intersection_area(a, b);
    const double uni = a.area() + b.area() - inter;
    return inter / uni;
}

/// Generalized IoU: IoU minus the fraction of the smallest enclosing box not
/// covered by the union. In [-1, 1].
inline double giou(const BoundingBox& a, const BoundingBox& b) {
    const double inter = intersection_area(a, b);
    const double uni = a.area() + b.area() - inter;
    const auto enc = detail::enclosing(a, b);
    const double enc_area = enc.w * enc.h;
    return inter / uni - (enc_area - uni) / enc_area;
}

/// Distance IoU: IoU minus squared center distance over squared enclosing-box
/// diagonal. In [-1, 1].
inline double diou(const BoundingBox& a, const BoundingBox& b) {
    const double dx = a.cx - b.cx;
    const double dy = a.cy - b.cy;
    const auto enc = detail::enclosing(a, b);
    const double diag_sq = enc.w * enc.w + enc.h * enc.h;
    return iou(a, b) - (dx * dx + dy * dy) / diag_sq;
}

/// Complete IoU: DIoU minus the aspect-ratio penalty alpha * v with
/// v = (4/pi^2) (atan(w_a/h_a) - atan(w_b/h_b))^2 and
/// alpha = v / ((1 - IoU) + v), alpha = 0 when v = 0.
inline double ciou(const BoundingBox& a, const BoundingBox& b) {
    const double base_iou = iou(a, b);
    const double d = diou(a, b);
    const double datan = std::atan(a.w / a.h) - std::atan(b.w / b.h);
    const double v = 4.0 / (std::numbers::pi * std::numbers::pi) * datan * datan;
    if (v == 0.0) return d;
    const double alpha = v / ((1.0 - base_iou) + v);
    return d - alpha * v;
}

/// Squared 2nd-order Wasserstein distance between two diagonal-covariance
/// Gaussians, evaluated in the general matrix form
/// ||m1 - m2||^2 + Tr(S1 + S2 - 2 (S2^(1/2) S1 S2^(1/2))^(1/2)),
/// which reduces to per-axis scalar operations here.
inline double wasserstein_sq_general(const Gaussian2D& g1, const Gaussian2D& g2) {
    const double dx = g1.mean[0] - g2.mean[0];
    const double dy = g1.mean[1] - g2.mean[1];
    double trace = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double s1 = g1.cov_diag[i];
        const double s2 = g2.cov_diag[i];
        const double root2 = std::sqrt(s2);
        const double term = s1 + s2 - 2.0 * std::sqrt(root2 * s1 * root2);
        // rounding can push an exactly-zero term a hair below zero
        trace += std::max(term, 0.0);
    }
    return dx * dx + dy * dy + trace;
}

/// Same distance via the Frobenius form ||m1 - m2||^2 + ||S1^(1/2) - S2^(1/2)||_F^2.
inline double wasserstein_sq_frobenius(const Gaussian2D& g1, const Gaussian2D& g2) {
    const double dx = g1.mean[0] - g2.mean[0];
    const double dy = g1.mean[1] - g2.mean[1];
    double frob = 0.0;
    for (int i = 0; i < 2; ++i) {
        const double d = std::sqrt(g1.cov_diag[i]) - std::sqrt(g2.cov_diag[i]);
        frob += d * d;
    }
    return dx * dx + dy * dy + frob;
}

/// Same distance straight from the boxes: squared L2 distance between the
/// 4-vectors [cx, cy, w/2, h/2].
inline double wasserstein_sq_boxes(const BoundingBox& a, const BoundingBox& b) {
    const double dx = a.cx - b.cx;
    const double dy = a.cy - b.cy;
    const double dw = (a.w - b.w) / 2.0;
    const double dh = (a.h - b.h) / 2.0;
    return dx * dx + dy * dy + dw * dw + dh * dh;
}

/// Normalized Wasserstein distance exp(-sqrt(W2^2)/C), in (0, 1].
/// Returns 1 iff the boxes are identical. C > 0 is the normalization
/// constant in pixels.
inline double nwd(const BoundingBox& a, const BoundingBox& b, double c = kDefaultNwdC) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw ConfigError("normalization constant C must be positive and finite");
    }
    return std::exp(-std::sqrt(wasserstein_sq_boxes(a, b)) / c);
}

enum class MetricId { IoU, GIoU, DIoU, CIoU, NWD };

/// Metric selector for the pluggable components (assignment, NMS, losses).
/// The normalization constant applies to the NWD variant only.
struct MetricKind {
    MetricId id = MetricId::IoU;
    double c = kDefaultNwdC;

    static MetricKind iou() { return {MetricId::IoU}; }
    static MetricKind giou() { return {MetricId::GIoU}; }
    static MetricKind diou() { return {MetricId::DIoU}; }
    static MetricKind ciou() { return {MetricId::CIoU}; }
    static MetricKind nwd(double c = kDefaultNwdC) { return {MetricId::NWD, c}; }

    bool operator==(const MetricKind&) const = default;
};

inline const char* metric_name(MetricId id) {
    switch (id) {
        case MetricId::IoU: return "iou";
        case MetricId::GIoU: return "giou";
        case MetricId::DIoU: return "diou";
        case MetricId::CIoU: return "ciou";
        case MetricId::NWD: return "nwd";
    }
    return "?";
}

/// Dispatch to the metric selected by `kind`.
inline double similarity(const MetricKind& kind, const BoundingBox& a, const BoundingBox& b) {
    switch (kind.id) {
        case MetricId::IoU: return iou(a, b);
        case MetricId::GIoU: return giou(a, b);
        case MetricId::DIoU: return diou(a, b);
        case MetricId::CIoU: return ciou(a, b);
        case MetricId::NWD: return nwd(a, b, kind.c);
    }
    throw ConfigError("unknown metric kind");
}

/// Dense similarity matrix, row = ground truth, column = candidate.
struct SimilarityMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;  // row-major

    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

inline SimilarityMatrix similarity_matrix(const MetricKind& kind,
                                          const std::vector<BoundingBox>& gts,
                                          const std::vector<BoundingBox>& candidates) {
    SimilarityMatrix m;
    m.rows = gts.size();
    m.cols = candidates.size();
    m.values.resize(m.rows * m.cols);
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) {
            m.values[r * m.cols + c] = similarity(kind, gts[r], candidates[c]);
        }
    }
    return m;
}

} // namespace nwd
