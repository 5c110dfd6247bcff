#pragma once

#include <cmath>
#include <vector>

#include "nwd/box.hpp"
#include "nwd/errors.hpp"

namespace nwd {

/// Anchor grid parameterization: per stride s, centers sit at
/// (s/2 + i*s, s/2 + j*s) on a grid of ceil(W/s) x ceil(H/s) cells, with one
/// anchor per (scale, ratio) pair per center. Anchor area is (scale*s)^2 and
/// h/w = ratio, i.e. w = scale*s/sqrt(ratio), h = scale*s*sqrt(ratio).
struct AnchorGridConfig {
    std::vector<int> strides{8};
    std::vector<double> scales{1.0};
    std::vector<double> ratios{1.0};
};

/// Anchors in deterministic order: stride, then grid rows, then columns,
/// then scales, then ratios. Anchors are not clipped to the image.
inline std::vector<BoundingBox> generate_anchors(int image_w, int image_h,
                                                 const AnchorGridConfig& cfg) {
    if (image_w <= 0 || image_h <= 0) {
        throw ConfigError("image dimensions must be positive");
    }
    if (cfg.strides.empty() || cfg.scales.empty() || cfg.ratios.empty()) {
        throw ConfigError("anchor grid needs at least one stride, scale and ratio");
    }
    for (int s : cfg.strides) {
        if (s <= 0) throw ConfigError("anchor strides must be positive");
    }
    for (double v : cfg.scales) {
        if (!(v > 0.0)) throw ConfigError("anchor scales must be positive");
    }
    for (double v : cfg.ratios) {
        if (!(v > 0.0)) throw ConfigError("anchor ratios must be positive");
    }

    std::vector<BoundingBox> anchors;
    for (int stride : cfg.strides) {
        const int nx = (image_w + stride - 1) / stride;
        const int ny = (image_h + stride - 1) / stride;
        const double s = static_cast<double>(stride);
        for (int j = 0; j < ny; ++j) {
            for (int i = 0; i < nx; ++i) {
                const double cx = s / 2.0 + i * s;
                const double cy = s / 2.0 + j * s;
                for (double scale : cfg.scales) {
                    for (double ratio : cfg.ratios) {
                        const double root = std::sqrt(ratio);
                        anchors.emplace_back(cx, cy, scale * s / root, scale * s * root);
                    }
                }
            }
        }
    }
    return anchors;
}

} // namespace nwd
