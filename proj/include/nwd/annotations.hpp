#pragma once

#include <vector>

#include "nwd/box.hpp"

namespace nwd {

/// One annotated ground-truth object.
struct GtBox {
    BoundingBox box;
    int category = 0;

    bool operator==(const GtBox&) const = default;
};

/// Annotations for a single image.
struct AnnotatedImage {
    long long image_id = 0;
    int width = 0;
    int height = 0;
    std::vector<GtBox> gts;

    std::vector<BoundingBox> gt_boxes() const {
        std::vector<BoundingBox> boxes;
        boxes.reserve(gts.size());
        for (const auto& gt : gts) boxes.push_back(gt.box);
        return boxes;
    }

    bool operator==(const AnnotatedImage&) const = default;
};

} // namespace nwd
