#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "nwd/box.hpp"
#include "nwd/metrics.hpp"

namespace nwd {

/// One scored prediction, input to NMS.
struct Detection {
    BoundingBox box;
    double score = 0.0;
    int category = 0;

    bool operator==(const Detection&) const = default;
};

struct NmsConfig {
    MetricKind metric = MetricKind::iou();
    double threshold = 0.5;    // suppress same-category detections with similarity > threshold
    double score_floor = 0.05; // drop detections scoring below this before suppression
};

/// Greedy class-wise non-maximum suppression. Detections under the score
/// floor are dropped, then the highest-score remaining detection is kept and
/// every same-category detection with similarity strictly above the threshold
/// is suppressed, repeatedly. Output is sorted by descending score; score
/// ties break to the lower input index.
inline std::vector<Detection> nms(const std::vector<Detection>& dets, const NmsConfig& cfg) {
    std::vector<std::size_t> order;
    order.reserve(dets.size());
    for (std::size_t i = 0; i < dets.size(); ++i) {
        if (dets[i].score >= cfg.score_floor) order.push_back(i);
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (dets[a].score != dets[b].score) return dets[a].score > dets[b].score;
        return a < b;
    });

    std::vector<Detection> kept;
    std::vector<bool> suppressed(order.size(), false);
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (suppressed[i]) continue;
        const Detection& top = dets[order[i]];
        kept.push_back(top);
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            if (suppressed[j]) continue;
            const Detection& other = dets[order[j]];
            if (other.category != top.category) continue;
            if (similarity(cfg.metric, top.box, other.box) > cfg.threshold) {
                suppressed[j] = true;
            }
        }
    }
    return kept;
}

/// Literal restatement of the same contract, kept as an independent oracle:
/// scan the remaining pool for the highest score, keep it, erase overlaps.
inline std::vector<Detection> nms_reference(const std::vector<Detection>& dets,
                                            const NmsConfig& cfg) {
    struct Indexed {
        Detection det;
        std::size_t index;
    };
    std::vector<Indexed> pool;
    for (std::size_t i = 0; i < dets.size(); ++i) {
        if (dets[i].score >= cfg.score_floor) pool.push_back({dets[i], i});
    }

    std::vector<Detection> kept;
    while (!pool.empty()) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < pool.size(); ++i) {
            if (pool[i].det.score > pool[best].det.score ||
                (pool[i].det.score == pool[best].det.score &&
                 pool[i].index < pool[best].index)) {
                best = i;
            }
        }
        const Detection top = pool[best].det;
        kept.push_back(top);
        std::vector<Indexed> next;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (i == best) continue;
            const Detection& other = pool[i].det;
            if (other.category == top.category &&
                similarity(cfg.metric, top.box, other.box) > cfg.threshold) {
                continue;
            }
            next.push_back(pool[i]);
        }
        pool = std::move(next);
    }
    return kept;
}

} // namespace nwd
