#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "nwd/box.hpp"
#include "nwd/errors.hpp"
#include "nwd/metrics.hpp"

namespace nwd {

/// Loss value plus its analytic gradient with respect to the predicted box
/// parameters, in the order (d/dcx, d/dcy, d/dw, d/dh).
struct LossValueAndGrad {
    double value = 0.0;
    std::array<double, 4> grad{0.0, 0.0, 0.0, 0.0};
};

namespace detail {

using Grad4 = std::array<double, 4>;

inline Grad4 operator-(const Grad4& a) { return {-a[0], -a[1], -a[2], -a[3]}; }

inline Grad4 sub(const Grad4& a, const Grad4& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}

/// Value and pred-gradients of every geometric quantity the IoU-family
/// metrics are built from. Ties in the min/max selections take the
/// predicted box's branch (one-sided limit; measure-zero configurations).
struct IouParts {
    double inter = 0.0, uni = 0.0, iou = 0.0;
    double enc_w = 0.0, enc_h = 0.0;
    Grad4 d_inter{}, d_uni{}, d_iou{};
    Grad4 d_enc_w{}, d_enc_h{};
};

inline IouParts iou_parts(const BoundingBox& p, const BoundingBox& g) {
    IouParts r;
    const double pl = p.x1(), pr = p.x2(), pt = p.y1(), pb = p.y2();
    const double gl = g.x1(), gr = g.x2(), gt = g.y1(), gb = g.y2();

    const double iw = std::min(pr, gr) - std::max(pl, gl);
    const double ih = std::min(pb, gb) - std::max(pt, gt);

    // min(pr, gr): derivative flows through the pred edge iff it is selected
    const double sel_r = pr <= gr ? 1.0 : 0.0;
    const double sel_l = pl >= gl ? 1.0 : 0.0;
    const double sel_b = pb <= gb ? 1.0 : 0.0;
    const double sel_t = pt >= gt ? 1.0 : 0.0;
    const double diw_dcx = sel_r - sel_l;
    const double diw_dw = 0.5 * (sel_r + sel_l);
    const double dih_dcy = sel_b - sel_t;
    const double dih_dh = 0.5 * (sel_b + sel_t);

    if (iw > 0.0 && ih > 0.0) {
        r.inter = iw * ih;
        r.d_inter = {diw_dcx * ih, dih_dcy * iw, diw_dw * ih, dih_dh * iw};
    }

    r.uni = p.area() + g.area() - r.inter;
    const Grad4 d_area_p{0.0, 0.0, p.h, p.w};
    r.d_uni = sub(d_area_p, r.d_inter);

    r.iou = r.inter / r.uni;
    for (int i = 0; i < 4; ++i) {
        r.d_iou[i] = (r.d_inter[i] * r.uni - r.inter * r.d_uni[i]) / (r.uni * r.uni);
    }

    r.enc_w = std::max(pr, gr) - std::min(pl, gl);
    r.enc_h = std::max(pb, gb) - std::min(pt, gt);
    const double esel_r = pr >= gr ? 1.0 : 0.0;
    const double esel_l = pl <= gl ? 1.0 : 0.0;
    const double esel_b = pb >= gb ? 1.0 : 0.0;
    const double esel_t = pt <= gt ? 1.0 : 0.0;
    r.d_enc_w = {esel_r - esel_l, 0.0, 0.5 * (esel_r + esel_l), 0.0};
    r.d_enc_h = {0.0, esel_b - esel_t, 0.0, 0.5 * (esel_b + esel_t)};
    return r;
}

} // namespace detail

/// 1 - IoU. The gradient vanishes when the boxes are disjoint and its
/// position components vanish under strict containment, the two
/// configurations where this loss cannot steer a regressor.
inline LossValueAndGrad iou_loss(const BoundingBox& pred, const BoundingBox& gt) {
    const auto parts = detail::iou_parts(pred, gt);
    return {1.0 - parts.iou, detail::operator-(parts.d_iou)};
}

/// 1 - GIoU.
inline LossValueAndGrad giou_loss(const BoundingBox& pred, const BoundingBox& gt) {
    const auto parts = detail::iou_parts(pred, gt);
    const double enc_area = parts.enc_w * parts.enc_h;
    const double penalty = (enc_area - parts.uni) / enc_area;
    detail::Grad4 grad{};
    for (int i = 0; i < 4; ++i) {
        const double d_enc_area =
            parts.d_enc_w[i] * parts.enc_h + parts.enc_w * parts.d_enc_h[i];
        const double d_penalty =
            ((d_enc_area - parts.d_uni[i]) * enc_area - (enc_area - parts.uni) * d_enc_area) /
            (enc_area * enc_area);
        grad[i] = -(parts.d_iou[i] - d_penalty);
    }
    return {1.0 - (parts.iou - penalty), grad};
}

/// 1 - DIoU.
inline LossValueAndGrad diou_loss(const BoundingBox& pred, const BoundingBox& gt) {
    const auto parts = detail::iou_parts(pred, gt);
    const double dx = pred.cx - gt.cx;
    const double dy = pred.cy - gt.cy;
    const double rho_sq = dx * dx + dy * dy;
    const double diag_sq = parts.enc_w * parts.enc_w + parts.enc_h * parts.enc_h;
    const detail::Grad4 d_rho_sq{2.0 * dx, 2.0 * dy, 0.0, 0.0};
    detail::Grad4 grad{};
    for (int i = 0; i < 4; ++i) {
        const double d_diag_sq =
            2.0 * parts.enc_w * parts.d_enc_w[i] + 2.0 * parts.enc_h * parts.d_enc_h[i];
        const double d_penalty =
            (d_rho_sq[i] * diag_sq - rho_sq * d_diag_sq) / (diag_sq * diag_sq);
        grad[i] = -(parts.d_iou[i] - d_penalty);
    }
    return {1.0 - (parts.iou - rho_sq / diag_sq), grad};
}

/// 1 - CIoU. The aspect-ratio weight alpha = v/((1-IoU)+v) is differentiated
/// through, so the gradient matches finite differences of the full expression.
inline LossValueAndGrad ciou_loss(const BoundingBox& pred, const BoundingBox& gt) {
    const auto base = diou_loss(pred, gt);
    const auto parts = detail::iou_parts(pred, gt);

    const double datan = std::atan(pred.w / pred.h) - std::atan(gt.w / gt.h);
    const double k = 4.0 / (std::numbers::pi * std::numbers::pi);
    const double v = k * datan * datan;
    if (v == 0.0) {
        return base;
    }

    const double wh_sq = pred.w * pred.w + pred.h * pred.h;
    const detail::Grad4 dv{0.0, 0.0, 2.0 * k * datan * pred.h / wh_sq,
                           -2.0 * k * datan * pred.w / wh_sq};
    const double s = (1.0 - parts.iou) + v;  // > 0 since v > 0
    LossValueAndGrad out;
    out.value = base.value + v * v / s;
    for (int i = 0; i < 4; ++i) {
        const double d_alpha_v =
            (2.0 * v * s * dv[i] - v * v * (dv[i] - parts.d_iou[i])) / (s * s);
        out.grad[i] = base.grad[i] + d_alpha_v;
    }
    return out;
}

/// 1 - NWD(pred, gt, C). Smooth everywhere except pred = gt, where the
/// gradient is defined as zero (the loss minimum). A guard of 1e-12 under the
/// square root in the gradient denominator keeps the chain finite near the
/// minimum; gradient checks should stay outside a ball of radius 1e-5.
inline LossValueAndGrad nwd_loss(const BoundingBox& pred, const BoundingBox& gt,
                                 double c = kDefaultNwdC) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw ConfigError("normalization constant C must be positive and finite");
    }
    const double w2_sq = wasserstein_sq_boxes(pred, gt);
    const double dist = std::sqrt(w2_sq);
    const double sim = std::exp(-dist / c);

    constexpr double kGuard = 1e-12;
    const double denom = 2.0 * std::sqrt(w2_sq + kGuard);
    const double scale = sim / (c * denom);
    const detail::Grad4 d_w2_sq{2.0 * (pred.cx - gt.cx), 2.0 * (pred.cy - gt.cy),
                                (pred.w - gt.w) / 2.0, (pred.h - gt.h) / 2.0};
    LossValueAndGrad out;
    out.value = 1.0 - sim;
    for (int i = 0; i < 4; ++i) {
        out.grad[i] = scale * d_w2_sq[i];
    }
    return out;
}

} // namespace nwd
