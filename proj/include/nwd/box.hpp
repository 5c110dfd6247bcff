#pragma once

#include <cmath>
#include <string>

#include "nwd/errors.hpp"

namespace nwd {

/// Axis-aligned bounding box in center-size form: (cx, cy, w, h), pixels.
/// Width and height are strictly positive; degenerate boxes are rejected at
/// construction so every downstream formula can assume an invertible shape.
struct BoundingBox {
    double cx = 0.0;
    double cy = 0.0;
    double w = 0.0;
    double h = 0.0;

    BoundingBox(double cx_, double cy_, double w_, double h_)
        : cx(cx_), cy(cy_), w(w_), h(h_) {
        if (!(std::isfinite(cx) && std::isfinite(cy) && std::isfinite(w) && std::isfinite(h))) {
            throw InvalidBoxError("box has non-finite coordinates");
        }
        if (!(w > 0.0) || !(h > 0.0)) {
            throw InvalidBoxError("box has nonpositive size (w=" + std::to_string(w) +
                                  ", h=" + std::to_string(h) + ")");
        }
    }

    double x1() const { return cx - w / 2.0; }
    double y1() const { return cy - h / 2.0; }
    double x2() const { return cx + w / 2.0; }
    double y2() const { return cy + h / 2.0; }
    double area() const { return w * h; }

    /// Corner form (x1, y1, x2, y2) -> center-size.
    static BoundingBox from_corners(double x1, double y1, double x2, double y2) {
        return BoundingBox((x1 + x2) / 2.0, (y1 + y2) / 2.0, x2 - x1, y2 - y1);
    }

    /// COCO-style corner-origin [x, y, w, h] -> center-size.
    static BoundingBox from_corner_origin(double x, double y, double w, double h) {
        return BoundingBox(x + w / 2.0, y + h / 2.0, w, h);
    }

    BoundingBox translated(double dx, double dy) const {
        return BoundingBox(cx + dx, cy + dy, w, h);
    }

    bool operator==(const BoundingBox&) const = default;
};

} // namespace nwd
