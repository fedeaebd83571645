#include "pfcrack/pixel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>

#include "pfcrack/errors.hpp"

namespace pfcrack {

void PixelGrid::write_text(std::ostream& os) const {
    char buf[32];
    os << rows << ' ' << cols << ' ';
    std::snprintf(buf, sizeof buf, "%.17g", h_px);
    os << buf << '\n';
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", at(r, c));
            os << buf << (c + 1 == cols ? '\n' : ' ');
        }
    }
}

PixelGrid PixelGrid::read_text(std::istream& is) {
    PixelGrid g;
    if (!(is >> g.rows >> g.cols >> g.h_px) || g.rows <= 0 || g.cols <= 0)
        throw ConfigError("pixel grid: malformed header");
    g.values.resize(static_cast<size_t>(g.rows) * g.cols);
    for (double& v : g.values)
        if (!(is >> v)) throw ConfigError("pixel grid: truncated payload");
    return g;
}

void ConditioningConfig::validate() const {
    if (!(h_cap > 0.0)) throw ConfigError("conditioning: h_cap must be > 0");
    if (smooth_kernel_size < 1 || smooth_kernel_size % 2 == 0)
        throw ConfigError("conditioning: smooth_kernel_size must be odd and >= 1");
    if (!(smooth_sigma > 0.0)) throw ConfigError("conditioning: smooth_sigma must be > 0");
}

PixelGrid gp_to_pixels(std::span<const double> gp_values, const GaussGrid& grid) {
    if (gp_values.size() != grid.gp_to_pixel.size())
        throw ConfigError("gp_to_pixels: value count does not match GP count");
    PixelGrid pix(grid.py, grid.px, grid.h_px);
    for (size_t g = 0; g < gp_values.size(); ++g)
        pix.values[grid.gp_to_pixel[g]] = gp_values[g];
    return pix;
}

std::vector<double> pixels_to_gp(const PixelGrid& pix, const GaussGrid& grid) {
    if (pix.rows != grid.py || pix.cols != grid.px)
        throw ConfigError("pixels_to_gp: grid shape mismatch");
    std::vector<double> gp(grid.gp_to_pixel.size());
    for (size_t g = 0; g < gp.size(); ++g)
        gp[g] = pix.values[grid.gp_to_pixel[g]];
    return gp;
}

PixelGrid cap_field(const PixelGrid& pix, double h_cap) {
    if (!(h_cap > 0.0)) throw ConfigError("cap_field: h_cap must be > 0");
    PixelGrid out = pix;
    for (double& v : out.values) v = std::clamp(v, 0.0, h_cap);
    return out;
}

PixelGrid gaussian_smooth(const PixelGrid& pix, int k, double sigma) {
    if (k < 1 || k % 2 == 0) throw ConfigError("gaussian_smooth: k must be odd");
    if (!(sigma > 0.0)) throw ConfigError("gaussian_smooth: sigma must be > 0");
    const int half = k / 2;
    std::vector<double> kernel(static_cast<size_t>(k) * k);
    double sum = 0.0;
    for (int i = -half; i <= half; ++i)
        for (int j = -half; j <= half; ++j) {
            const double w = std::exp(-(i * i + j * j) / (2.0 * sigma * sigma));
            kernel[(i + half) * k + (j + half)] = w;
            sum += w;
        }
    for (double& w : kernel) w /= sum;

    PixelGrid out(pix.rows, pix.cols, pix.h_px);
    for (int r = 0; r < pix.rows; ++r) {
        for (int c = 0; c < pix.cols; ++c) {
            double acc = 0.0;
            for (int i = -half; i <= half; ++i) {
                const int rr = std::clamp(r + i, 0, pix.rows - 1);
                for (int j = -half; j <= half; ++j) {
                    const int cc = std::clamp(c + j, 0, pix.cols - 1);
                    acc += kernel[(i + half) * k + (j + half)] * pix.at(rr, cc);
                }
            }
            out.at(r, c) = acc;
        }
    }
    return out;
}

PixelGrid enforce_irreversibility(const PixelGrid& current, const PixelGrid& previous) {
    if (!current.same_shape(previous))
        throw ConfigError("enforce_irreversibility: shape mismatch");
    PixelGrid out = current;
    for (size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = std::max(out.values[i], previous.values[i]);
    return out;
}

}  // namespace pfcrack
