#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

namespace pfcrack {

// Straight notch lying on an element-edge line of the structured grid.
// `start` is the open mouth of the notch, `end` is the closed crack tip.
struct NotchSpec {
    enum class Orientation { horizontal, vertical };
    enum class Representation { seam, induced_history };

    std::array<double, 2> start{0.0, 0.0};  // mm
    std::array<double, 2> end{0.0, 0.0};    // mm
    Orientation orientation = Orientation::horizontal;
    Representation representation = Representation::seam;
};

// One duplicated node along a seam notch: elements on the "far" side of the
// seam (below a horizontal seam, left of a vertical one) reference `dup_node`
// instead of `orig_node`.
struct SeamNode {
    int orig_node = -1;
    int dup_node = -1;
};

struct NotchSeam {
    NotchSpec spec;             // with snapped coordinates
    std::vector<SeamNode> nodes;
};

// Rectangular structured mesh of square bilinear quadrilateral elements.
// Immutable after build_mesh(); safe for shared read access.
struct StructuredMesh {
    double lx = 0.0;  // domain width (mm)
    double ly = 0.0;  // domain height (mm)
    int nx = 0;       // elements along x
    int ny = 0;       // elements along y
    double elem_size = 0.0;

    std::vector<std::array<double, 2>> node_coords;
    // Counter-clockwise: bottom-left, bottom-right, top-right, top-left.
    std::vector<std::array<int, 4>> elem_connectivity;
    // Keys: "bottom", "top", "left", "right". Disjoint except at corners.
    std::map<std::string, std::vector<int>> boundary_sets;
    std::vector<NotchSeam> notch_seams;
    std::vector<NotchSpec> notches;  // all notches, including induced-history ones

    int n_nodes() const { return static_cast<int>(node_coords.size()); }
    int n_elems() const { return static_cast<int>(elem_connectivity.size()); }
    int elem_index(int ix, int iy) const { return iy * nx + ix; }

    const std::vector<int>& boundary(const std::string& name) const;

    // Node/element counts, bounding box and notch records as structured text.
    std::string summary() const;
};

// 2x2 Gauss-point layout of a structured mesh. Pixel (row, col) ordering is
// row-major with row 0 at the minimum-y edge; gp_to_pixel is a bijection.
struct GaussGrid {
    int px = 0;  // Gauss points along x (= 2*nx = pixel cols)
    int py = 0;  // Gauss points along y (= 2*ny = pixel rows)
    double h_px = 0.0;  // nominal uniform pixel spacing = elem_size/2
    std::vector<std::array<double, 2>> gp_coords;
    std::vector<int> gp_to_pixel;  // GP index -> row*px + col
    std::vector<int> pixel_to_gp;  // inverse map

    int n_gp() const { return static_cast<int>(gp_coords.size()); }
};

// Builds the mesh, populates boundary sets and applies seam notches by node
// duplication (all seam nodes except the tip). Throws ConfigError on
// non-square element configs or notches off the grid lines.
StructuredMesh build_mesh(double lx, double ly, int nx, int ny,
                          const std::vector<NotchSpec>& notches = {});

GaussGrid gauss_grid(const StructuredMesh& mesh);

// Distance from a point to the segment [a, b]; used for induced-history notches.
double point_segment_distance(const std::array<double, 2>& p,
                              const std::array<double, 2>& a,
                              const std::array<double, 2>& b);

}  // namespace pfcrack
