#include "urcdm/raster.hpp"

#include <cstdio>
#include <cstring>
#include <string>

namespace urcdm {

double white_fraction(const RasterU8& r, double pixel_level) {
    if (r.w <= 0 || r.h <= 0) return 0.0;
    const double threshold = pixel_level * 255.0;
    int64_t white = 0;
    const size_t n = static_cast<size_t>(r.w) * r.h;
    for (size_t i = 0; i < n; ++i) {
        const uint8_t* p = r.px.data() + i * 3;
        uint8_t m = std::min(p[0], std::min(p[1], p[2]));
        if (m >= threshold) ++white;
    }
    return static_cast<double>(white) / static_cast<double>(n);
}

void write_ppm(const std::filesystem::path& path, const RasterU8& r) {
    std::FILE* f = std::fopen(path.string().c_str(), "wb");
    if (!f) throw DataError("cannot open for write: " + path.string());
    std::string header = "P6\n" + std::to_string(r.w) + " " + std::to_string(r.h) + "\n255\n";
    bool ok = std::fwrite(header.data(), 1, header.size(), f) == header.size();
    ok = ok && std::fwrite(r.px.data(), 1, r.px.size(), f) == r.px.size();
    if (std::fclose(f) != 0) ok = false;
    if (!ok) throw DataError("short write: " + path.string());
}

namespace {

// Reads one whitespace-delimited token, skipping '#' comment lines.
std::string ppm_token(std::FILE* f) {
    std::string tok;
    int c;
    while ((c = std::fgetc(f)) != EOF) {
        if (c == '#') {
            while ((c = std::fgetc(f)) != EOF && c != '\n') {
            }
            continue;
        }
        if (std::isspace(c)) {
            if (!tok.empty()) return tok;
            continue;
        }
        tok.push_back(static_cast<char>(c));
    }
    return tok;
}

}  // namespace

RasterU8 read_ppm(const std::filesystem::path& path) {
    std::FILE* f = std::fopen(path.string().c_str(), "rb");
    if (!f) throw DataError("cannot open: " + path.string());
    RasterU8 out;
    try {
        if (ppm_token(f) != "P6") throw DataError("not a P6 ppm: " + path.string());
        int64_t w = std::stoll(ppm_token(f));
        int64_t h = std::stoll(ppm_token(f));
        int64_t maxval = std::stoll(ppm_token(f));
        if (w <= 0 || h <= 0) throw DataError("bad ppm dimensions: " + path.string());
        if (maxval != 255) throw DataError("unsupported bit depth (maxval " + std::to_string(maxval) + "): " + path.string());
        out = RasterU8(w, h);
        if (std::fread(out.px.data(), 1, out.px.size(), f) != out.px.size())
            throw DataError("truncated ppm: " + path.string());
    } catch (...) {
        std::fclose(f);
        throw;
    }
    std::fclose(f);
    return out;
}

void blit(RasterU8& dst, const RasterU8& src, int64_t dx, int64_t dy) {
    for (int64_t y = 0; y < src.h; ++y) {
        std::memcpy(dst.at(dx, dy + y), src.at(0, y), static_cast<size_t>(src.w) * 3);
    }
}

RasterU8 crop_padded(const RasterU8& src, RectI r) {
    RasterU8 out(r.w, r.h, 255);
    int64_t x0 = std::max<int64_t>(r.x, 0);
    int64_t y0 = std::max<int64_t>(r.y, 0);
    int64_t x1 = std::min<int64_t>(r.x + r.w, src.w);
    int64_t y1 = std::min<int64_t>(r.y + r.h, src.h);
    for (int64_t y = y0; y < y1; ++y) {
        if (x1 > x0)
            std::memcpy(out.at(x0 - r.x, y - r.y), src.at(x0, y), static_cast<size_t>(x1 - x0) * 3);
    }
    return out;
}

RasterU8 box_downsample(const RasterU8& src, int64_t factor) {
    if (factor <= 0 || src.w % factor != 0 || src.h % factor != 0)
        throw DataError("box_downsample: factor must divide dimensions");
    RasterU8 out(src.w / factor, src.h / factor);
    const double inv = 1.0 / static_cast<double>(factor * factor);
    for (int64_t y = 0; y < out.h; ++y) {
        for (int64_t x = 0; x < out.w; ++x) {
            double acc[3] = {0, 0, 0};
            for (int64_t dy = 0; dy < factor; ++dy) {
                const uint8_t* row = src.at(x * factor, y * factor + dy);
                for (int64_t dx = 0; dx < factor; ++dx) {
                    acc[0] += row[dx * 3 + 0];
                    acc[1] += row[dx * 3 + 1];
                    acc[2] += row[dx * 3 + 2];
                }
            }
            uint8_t* o = out.at(x, y);
            for (int c = 0; c < 3; ++c) o[c] = unit_to_u8(acc[c] * inv / 255.0);
        }
    }
    return out;
}

namespace {

inline void fetch_white_padded(const RasterU8& src, int64_t x, int64_t y, double out[3]) {
    if (x < 0 || y < 0 || x >= src.w || y >= src.h) {
        out[0] = out[1] = out[2] = 255.0;
        return;
    }
    const uint8_t* p = src.at(x, y);
    out[0] = p[0];
    out[1] = p[1];
    out[2] = p[2];
}

}  // namespace

RasterU8 sample_rect_bilinear(const RasterU8& src, RectD rect, int64_t out_w, int64_t out_h) {
    RasterU8 out(out_w, out_h);
    const double sx = rect.w / static_cast<double>(out_w);
    const double sy = rect.h / static_cast<double>(out_h);
    for (int64_t oy = 0; oy < out_h; ++oy) {
        // pixel-center mapping; -0.5 shifts into sample coordinates
        double fy = rect.y + (oy + 0.5) * sy - 0.5;
        int64_t y0 = static_cast<int64_t>(std::floor(fy));
        double wy = fy - y0;
        for (int64_t ox = 0; ox < out_w; ++ox) {
            double fx = rect.x + (ox + 0.5) * sx - 0.5;
            int64_t x0 = static_cast<int64_t>(std::floor(fx));
            double wx = fx - x0;
            double c00[3], c10[3], c01[3], c11[3];
            fetch_white_padded(src, x0, y0, c00);
            fetch_white_padded(src, x0 + 1, y0, c10);
            fetch_white_padded(src, x0, y0 + 1, c01);
            fetch_white_padded(src, x0 + 1, y0 + 1, c11);
            uint8_t* o = out.at(ox, oy);
            for (int c = 0; c < 3; ++c) {
                double top = c00[c] * (1 - wx) + c10[c] * wx;
                double bot = c01[c] * (1 - wx) + c11[c] * wx;
                o[c] = unit_to_u8((top * (1 - wy) + bot * wy) / 255.0);
            }
        }
    }
    return out;
}

}  // namespace urcdm
