#include "urcdm/tensor.hpp"

#include <cmath>

namespace urcdm {

Tensor bilinear_resize(const Tensor& src, int64_t oh, int64_t ow) {
    Tensor out(src.c, oh, ow);
    const double sy = static_cast<double>(src.h) / oh;
    const double sx = static_cast<double>(src.w) / ow;
    for (int64_t y = 0; y < oh; ++y) {
        double fy = (y + 0.5) * sy - 0.5;
        int64_t y0 = static_cast<int64_t>(std::floor(fy));
        double wy = fy - y0;
        int64_t ya = std::clamp<int64_t>(y0, 0, src.h - 1);
        int64_t yb = std::clamp<int64_t>(y0 + 1, 0, src.h - 1);
        for (int64_t x = 0; x < ow; ++x) {
            double fx = (x + 0.5) * sx - 0.5;
            int64_t x0 = static_cast<int64_t>(std::floor(fx));
            double wx = fx - x0;
            int64_t xa = std::clamp<int64_t>(x0, 0, src.w - 1);
            int64_t xb = std::clamp<int64_t>(x0 + 1, 0, src.w - 1);
            for (int64_t c = 0; c < src.c; ++c) {
                double top = src.at(c, ya, xa) * (1 - wx) + src.at(c, ya, xb) * wx;
                double bot = src.at(c, yb, xa) * (1 - wx) + src.at(c, yb, xb) * wx;
                out.at(c, y, x) = top * (1 - wy) + bot * wy;
            }
        }
    }
    return out;
}

}  // namespace urcdm
