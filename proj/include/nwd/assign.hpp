#pragma once

#include <cstddef>
#include <vector>

#include "nwd/box.hpp"
#include "nwd/errors.hpp"
#include "nwd/metrics.hpp"

namespace nwd {

/// Max-overlap assigner configuration. Thresholds are used as-is for every
/// metric (no rescaling when switching metrics).
struct AssignerConfig {
    MetricKind metric = MetricKind::iou();
    double pos_threshold = 0.7;
    double neg_threshold = 0.3;
};

enum class AnchorLabelKind { Positive, Negative, Ignore };

struct AnchorLabel {
    AnchorLabelKind kind = AnchorLabelKind::Negative;
    int gt_index = -1;  // valid only for Positive

    bool operator==(const AnchorLabel&) const = default;
};

struct AssignmentResult {
    std::vector<AnchorLabel> labels;           // one per anchor
    std::vector<int> per_gt_positive_count;    // one per gt

    long long count(AnchorLabelKind kind) const {
        long long n = 0;
        for (const auto& l : labels) n += l.kind == kind ? 1 : 0;
        return n;
    }
};

namespace detail {

inline void validate(const AssignerConfig& cfg) {
    if (!(cfg.neg_threshold >= 0.0) || !(cfg.neg_threshold <= cfg.pos_threshold)) {
        throw ConfigError("assigner thresholds must satisfy 0 <= neg <= pos");
    }
}

} // namespace detail

/// Pos/neg/ignore labels for every anchor. An anchor is Positive when it is
/// some gt's best anchor with similarity strictly above the negative
/// threshold, or when its similarity with any gt strictly exceeds the
/// positive threshold; Negative when its similarity with all gts is strictly
/// below the negative threshold; Ignore otherwise. Positive anchors record
/// the gt of maximal similarity. Ties break to the lowest gt index for an
/// anchor's assignment and to the lowest anchor index for a gt's best anchor.
inline AssignmentResult assign(const std::vector<BoundingBox>& anchors,
                               const std::vector<BoundingBox>& gts,
                               const AssignerConfig& cfg) {
    detail::validate(cfg);
    if (anchors.empty()) {
        throw ConfigError("assign requires a nonempty anchor list");
    }

    AssignmentResult result;
    result.per_gt_positive_count.assign(gts.size(), 0);
    if (gts.empty()) {
        result.labels.assign(anchors.size(), AnchorLabel{AnchorLabelKind::Negative, -1});
        return result;
    }

    const auto sims = similarity_matrix(cfg.metric, gts, anchors);

    std::vector<double> anchor_best_sim(anchors.size());
    std::vector<int> anchor_best_gt(anchors.size());
    for (std::size_t a = 0; a < anchors.size(); ++a) {
        double best = sims.at(0, a);
        int best_gt = 0;
        for (std::size_t g = 1; g < gts.size(); ++g) {
            if (sims.at(g, a) > best) {
                best = sims.at(g, a);
                best_gt = static_cast<int>(g);
            }
        }
        anchor_best_sim[a] = best;
        anchor_best_gt[a] = best_gt;
    }

    result.labels.resize(anchors.size());
    for (std::size_t a = 0; a < anchors.size(); ++a) {
        if (anchor_best_sim[a] > cfg.pos_threshold) {
            result.labels[a] = {AnchorLabelKind::Positive, anchor_best_gt[a]};
        } else if (anchor_best_sim[a] < cfg.neg_threshold) {
            result.labels[a] = {AnchorLabelKind::Negative, -1};
        } else {
            result.labels[a] = {AnchorLabelKind::Ignore, -1};
        }
    }

    // best-anchor rule: each gt promotes its own best anchor
    for (std::size_t g = 0; g < gts.size(); ++g) {
        double best = sims.at(g, 0);
        std::size_t best_anchor = 0;
        for (std::size_t a = 1; a < anchors.size(); ++a) {
            if (sims.at(g, a) > best) {
                best = sims.at(g, a);
                best_anchor = a;
            }
        }
        if (best > cfg.neg_threshold) {
            result.labels[best_anchor] = {AnchorLabelKind::Positive,
                                          anchor_best_gt[best_anchor]};
        }
    }

    for (const auto& label : result.labels) {
        if (label.kind == AnchorLabelKind::Positive) {
            ++result.per_gt_positive_count[static_cast<std::size_t>(label.gt_index)];
        }
    }
    return result;
}

/// Mean positive-anchor count per gt for one scene.
inline double avg_positives_per_gt(const std::vector<BoundingBox>& anchors,
                                   const std::vector<BoundingBox>& gts,
                                   const AssignerConfig& cfg) {
    if (gts.empty()) {
        throw DataError("positives-per-gt statistic is undefined without ground truth");
    }
    const auto result = assign(anchors, gts, cfg);
    long long total = 0;
    for (int n : result.per_gt_positive_count) total += n;
    return static_cast<double>(total) / static_cast<double>(gts.size());
}

/// Number of anchors whose label changes when every gt is translated by the
/// given integer-pixel offset. A change of assigned gt counts as a flip.
inline long long label_flip_count(const std::vector<BoundingBox>& anchors,
                                  const std::vector<BoundingBox>& gts,
                                  const AssignerConfig& cfg,
                                  int deviation_x, int deviation_y) {
    const auto before = assign(anchors, gts, cfg);
    std::vector<BoundingBox> moved;
    moved.reserve(gts.size());
    for (const auto& g : gts) {
        moved.push_back(g.translated(deviation_x, deviation_y));
    }
    const auto after = assign(anchors, moved, cfg);
    long long flips = 0;
    for (std::size_t a = 0; a < anchors.size(); ++a) {
        flips += before.labels[a] == after.labels[a] ? 0 : 1;
    }
    return flips;
}

} // namespace nwd
