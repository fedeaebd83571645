#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "pfcrack/mesh.hpp"

namespace pfcrack {

// Dense scalar map aligned one-to-one with the Gauss points of a mesh.
struct PixelGrid {
    int rows = 0;       // = 2*ny, row 0 at the minimum-y edge
    int cols = 0;       // = 2*nx
    double h_px = 0.0;  // nominal pixel spacing (mm) = elem_size/2
    std::vector<double> values;  // row-major

    PixelGrid() = default;
    PixelGrid(int r, int c, double h, double fill = 0.0)
        : rows(r), cols(c), h_px(h), values(static_cast<size_t>(r) * c, fill) {}

    double& at(int r, int c) { return values[static_cast<size_t>(r) * cols + c]; }
    double at(int r, int c) const { return values[static_cast<size_t>(r) * cols + c]; }
    size_t size() const { return values.size(); }
    bool same_shape(const PixelGrid& o) const {
        return rows == o.rows && cols == o.cols;
    }

    // Plain-text grid format: "rows cols h_px" header line, then row-major
    // whitespace-separated values (row 0 first).
    void write_text(std::ostream& os) const;
    static PixelGrid read_text(std::istream& is);
};

// Inference-time conditioning of the hybrid solver.
struct ConditioningConfig {
    double h_cap = 1e5;          // max strain energy density fed to the network
    int smooth_kernel_size = 5;
    double smooth_sigma = 2.0;
    bool enforce_irreversibility = true;
    bool smooth_before_irreversibility = true;
    bool cap_before_irreversibility = false;

    void validate() const;
};

// Bijective GP <-> pixel transfer; no interpolation, no averaging.
PixelGrid gp_to_pixels(std::span<const double> gp_values, const GaussGrid& grid);
std::vector<double> pixels_to_gp(const PixelGrid& pix, const GaussGrid& grid);

// values' = min(max(values, 0), h_cap)
PixelGrid cap_field(const PixelGrid& pix, double h_cap);

// k x k Gaussian kernel, weights ~ exp(-(i^2+j^2)/(2 sigma^2)) normalized to
// sum 1; replicate padding, output shape unchanged.
PixelGrid gaussian_smooth(const PixelGrid& pix, int k = 5, double sigma = 2.0);

// elementwise max(current, previous)
PixelGrid enforce_irreversibility(const PixelGrid& current, const PixelGrid& previous);

}  // namespace pfcrack
