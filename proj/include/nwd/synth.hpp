#pragma once

#include <cstdint>

#include "nwd/annotations.hpp"
#include "nwd/errors.hpp"
#include "nwd/rng.hpp"

namespace nwd {

namespace detail {

/// Uniform draw on the 1/1024-pixel grid anchored at lo. Keeping coordinates
/// dyadic makes every corner/center conversion downstream exact, so saved
/// scenes reload bit-identically.
inline double grid_uniform(SplitMix64& rng, double lo, double hi) {
    const double steps = (hi - lo) * 1024.0;
    const std::uint64_t n = static_cast<std::uint64_t>(steps) + 1;
    return lo + static_cast<double>(rng.next_below(n)) / 1024.0;
}

} // namespace detail

/// Deterministic synthetic tiny-object scene: n boxes with side lengths
/// uniform in [min_size, max_size], centers placed so each box lies fully
/// inside the square image. Draw order per object is w, h, cx, cy; the
/// generator is pinned (splitmix64) and coordinates land on a 1/1024-pixel
/// grid, so a seed reproduces the scene bit-exactly on any platform.
/// Default size range 2-16 px follows the tiny-object convention.
inline AnnotatedImage synth_tiny_scene(std::uint64_t seed, int n_objects,
                                       double min_size = 2.0, double max_size = 16.0,
                                       int image_size = 256) {
    if (n_objects < 0) {
        throw ConfigError("object count must be nonnegative");
    }
    if (!(min_size >= 2.0) || !(min_size <= max_size) ||
        !(max_size <= static_cast<double>(image_size))) {
        throw ConfigError("size range must satisfy 2 <= min <= max <= image_size");
    }

    AnnotatedImage image;
    image.image_id = 0;
    image.width = image_size;
    image.height = image_size;
    SplitMix64 rng(seed);
    for (int i = 0; i < n_objects; ++i) {
        const double w = detail::grid_uniform(rng, min_size, max_size);
        const double h = detail::grid_uniform(rng, min_size, max_size);
        const double cx = detail::grid_uniform(rng, w / 2.0, image_size - w / 2.0);
        const double cy = detail::grid_uniform(rng, h / 2.0, image_size - h / 2.0);
        image.gts.push_back({BoundingBox(cx, cy, w, h), 0});
    }
    return image;
}

} // namespace nwd
