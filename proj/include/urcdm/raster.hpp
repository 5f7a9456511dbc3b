#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "urcdm/common.hpp"

namespace urcdm {

/// 8-bit RGB raster, row-major, top-left origin, interleaved channels.
/// This is the storage-side pixel type; all arithmetic happens on the
/// real-valued views (value/255).
struct RasterU8 {
    int64_t w = 0;
    int64_t h = 0;
    std::vector<uint8_t> px;  // size w*h*3

    RasterU8() = default;
    RasterU8(int64_t width, int64_t height, uint8_t fill = 255)
        : w(width), h(height), px(static_cast<size_t>(width) * height * 3, fill) {}

    uint8_t* at(int64_t x, int64_t y) { return px.data() + (y * w + x) * 3; }
    const uint8_t* at(int64_t x, int64_t y) const { return px.data() + (y * w + x) * 3; }

    bool operator==(const RasterU8&) const = default;
};

// Centralized value-range conversions. Storage [0,255] <-> unit [0,1]
// <-> model [-1,1]. Quantization rounds to nearest.
inline double u8_to_unit(uint8_t v) { return v / 255.0; }
inline uint8_t unit_to_u8(double v) {
    double s = v * 255.0 + 0.5;
    if (s < 0) s = 0;
    if (s > 255) s = 255;
    return static_cast<uint8_t>(s);
}
inline double unit_to_model(double v) { return 2.0 * v - 1.0; }
inline double model_to_unit(double v) { return (v + 1.0) * 0.5; }

/// Fraction of pixels whose min(R,G,B) reaches `pixel_level` (unit scale).
double white_fraction(const RasterU8& r, double pixel_level);

/// Binary PPM (P6) io. Lossless, diffable, no deps.
void write_ppm(const std::filesystem::path& path, const RasterU8& r);
RasterU8 read_ppm(const std::filesystem::path& path);

/// Copies src into dst at (dx, dy). Caller guarantees bounds.
void blit(RasterU8& dst, const RasterU8& src, int64_t dx, int64_t dy);

/// Crop with white fill outside src bounds.
RasterU8 crop_padded(const RasterU8& src, RectI r);

/// Area-average downsample by an exact integer factor.
RasterU8 box_downsample(const RasterU8& src, int64_t factor);

/// Bilinear resample of a real-valued source rectangle to out_w x out_h.
/// Samples outside the source read as white; this is how conditioning
/// crops near image borders get their padding.
RasterU8 sample_rect_bilinear(const RasterU8& src, RectD rect, int64_t out_w, int64_t out_h);

}  // namespace urcdm
