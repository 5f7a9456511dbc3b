#pragma once

#include <cassert>
#include <cstdint>
#include <vector>

#include "urcdm/raster.hpp"
#include "urcdm/rng.hpp"

namespace urcdm {

/// Dense CHW tensor of doubles. The working type for model-space rasters
/// (values nominally in [-1,1]) and network activations.
struct Tensor {
    int64_t c = 0;
    int64_t h = 0;
    int64_t w = 0;
    std::vector<double> data;

    Tensor() = default;
    Tensor(int64_t channels, int64_t height, int64_t width, double fill = 0.0)
        : c(channels), h(height), w(width),
          data(static_cast<size_t>(channels) * height * width, fill) {}

    int64_t size() const { return c * h * w; }
    bool same_shape(const Tensor& o) const { return c == o.c && h == o.h && w == o.w; }

    double* plane(int64_t ch) { return data.data() + ch * h * w; }
    const double* plane(int64_t ch) const { return data.data() + ch * h * w; }

    double& at(int64_t ch, int64_t y, int64_t x) { return data[(ch * h + y) * w + x]; }
    double at(int64_t ch, int64_t y, int64_t x) const { return data[(ch * h + y) * w + x]; }

    static Tensor randn(int64_t c, int64_t h, int64_t w, Rng& rng) {
        Tensor t(c, h, w);
        for (auto& v : t.data) v = rng.normal();
        return t;
    }
};

/// u8 raster -> model-space tensor in [-1,1].
inline Tensor raster_to_model(const RasterU8& r) {
    Tensor t(3, r.h, r.w);
    for (int64_t y = 0; y < r.h; ++y)
        for (int64_t x = 0; x < r.w; ++x) {
            const uint8_t* p = r.at(x, y);
            for (int c = 0; c < 3; ++c) t.at(c, y, x) = unit_to_model(u8_to_unit(p[c]));
        }
    return t;
}

/// Model-space tensor -> u8 raster, clamped then quantized.
inline RasterU8 model_to_raster(const Tensor& t) {
    assert(t.c == 3);
    RasterU8 r(t.w, t.h);
    for (int64_t y = 0; y < t.h; ++y)
        for (int64_t x = 0; x < t.w; ++x) {
            uint8_t* p = r.at(x, y);
            for (int c = 0; c < 3; ++c) {
                double v = t.at(c, y, x);
                if (v < -1.0) v = -1.0;
                if (v > 1.0) v = 1.0;
                p[c] = unit_to_u8(model_to_unit(v));
            }
        }
    return r;
}

/// Bilinear resize to (oh, ow), clamped border. Used to bring a stage's
/// conditioning image up to the target resolution before concatenation.
Tensor bilinear_resize(const Tensor& src, int64_t oh, int64_t ow);

}  // namespace urcdm
