#include "pfcrack/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pfcrack/errors.hpp"

namespace pfcrack {

namespace {

constexpr double kInvSqrt3 = 0.57735026918962576451;  // 1/sqrt(3)

int snap_index(double coord, double h, int max_index, const char* what) {
    const long idx = std::lround(coord / h);
    if (idx < 0 || idx > max_index)
        throw ConfigError(std::string("notch ") + what + " outside the domain");
    if (std::abs(coord - static_cast<double>(idx) * h) > 0.5 * h + 1e-12 * h)
        throw ConfigError(std::string("notch ") + what +
                          " does not snap to a grid line within elem_size/2");
    return static_cast<int>(idx);
}

}  // namespace

const std::vector<int>& StructuredMesh::boundary(const std::string& name) const {
    auto it = boundary_sets.find(name);
    if (it == boundary_sets.end())
        throw ConfigError("unknown boundary set '" + name + "'");
    return it->second;
}

std::string StructuredMesh::summary() const {
    std::ostringstream os;
    os << "structured mesh " << nx << " x " << ny << " elements, elem_size "
       << elem_size << " mm\n"
       << "nodes " << n_nodes() << ", elements " << n_elems() << "\n"
       << "bounding box [0, " << lx << "] x [0, " << ly << "] mm\n";
    for (const auto& [name, set] : boundary_sets)
        os << "boundary " << name << ": " << set.size() << " nodes\n";
    for (const auto& seam : notch_seams)
        os << "seam notch (" << seam.spec.start[0] << ", " << seam.spec.start[1]
           << ") -> (" << seam.spec.end[0] << ", " << seam.spec.end[1] << "), "
           << seam.nodes.size() << " duplicated nodes\n";
    for (const auto& n : notches)
        if (n.representation == NotchSpec::Representation::induced_history)
            os << "induced-history notch (" << n.start[0] << ", " << n.start[1]
               << ") -> (" << n.end[0] << ", " << n.end[1] << ")\n";
    return os.str();
}

StructuredMesh build_mesh(double lx, double ly, int nx, int ny,
                          const std::vector<NotchSpec>& notches) {
    if (lx <= 0.0 || ly <= 0.0) throw ConfigError("domain dimensions must be positive");
    if (nx < 2 || ny < 2) throw ConfigError("nx and ny must be >= 2");
    const double hx = lx / nx, hy = ly / ny;
    if (std::abs(hx - hy) > 1e-12 * std::max(hx, hy))
        throw ConfigError("non-square elements: lx/nx = " + std::to_string(hx) +
                          " but ly/ny = " + std::to_string(hy));

    StructuredMesh mesh;
    mesh.lx = lx;
    mesh.ly = ly;
    mesh.nx = nx;
    mesh.ny = ny;
    mesh.elem_size = hx;

    const int nnx = nx + 1, nny = ny + 1;
    mesh.node_coords.reserve(static_cast<size_t>(nnx) * nny);
    for (int iy = 0; iy < nny; ++iy)
        for (int ix = 0; ix < nnx; ++ix)
            mesh.node_coords.push_back({ix * hx, iy * hx});

    auto grid_node = [nnx](int ix, int iy) { return iy * nnx + ix; };

    mesh.elem_connectivity.reserve(static_cast<size_t>(nx) * ny);
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix)
            mesh.elem_connectivity.push_back({grid_node(ix, iy), grid_node(ix + 1, iy),
                                              grid_node(ix + 1, iy + 1),
                                              grid_node(ix, iy + 1)});

    const double h = mesh.elem_size;
    for (const NotchSpec& raw : notches) {
        NotchSpec spec = raw;
        if (spec.orientation == NotchSpec::Orientation::horizontal) {
            if (std::abs(spec.start[1] - spec.end[1]) > 0.5 * h)
                throw ConfigError("horizontal notch endpoints differ in y");
        } else {
            if (std::abs(spec.start[0] - spec.end[0]) > 0.5 * h)
                throw ConfigError("vertical notch endpoints differ in x");
        }

        if (spec.representation == NotchSpec::Representation::induced_history) {
            mesh.notches.push_back(spec);
            continue;
        }

        NotchSeam seam;
        if (spec.orientation == NotchSpec::Orientation::horizontal) {
            const int jy = snap_index(spec.start[1], h, ny, "line");
            if (jy == 0 || jy == ny)
                throw ConfigError("seam notch lies on a domain boundary line");
            int i0 = snap_index(spec.start[0], h, nx, "mouth");
            int i1 = snap_index(spec.end[0], h, nx, "tip");
            if (i0 == i1) throw ConfigError("zero-length notch");
            spec.start = {i0 * h, jy * h};
            spec.end = {i1 * h, jy * h};
            const int step = (i1 > i0) ? 1 : -1;
            // Duplicate every seam node except the tip; elements below the
            // seam line are remapped to the duplicates.
            std::vector<int> dup_of(nnx, -1);
            for (int ix = i0; ix != i1; ix += step) {
                const int orig = grid_node(ix, jy);
                const int dup = mesh.n_nodes();
                mesh.node_coords.push_back(mesh.node_coords[orig]);
                dup_of[ix] = dup;
                seam.nodes.push_back({orig, dup});
            }
            for (int ix = std::min(i0, i1); ix < std::max(i0, i1); ++ix) {
                auto& conn = mesh.elem_connectivity[mesh.elem_index(ix, jy - 1)];
                if (dup_of[ix] >= 0) conn[3] = dup_of[ix];      // top-left
                if (dup_of[ix + 1] >= 0) conn[2] = dup_of[ix + 1];  // top-right
            }
        } else {
            const int jx = snap_index(spec.start[0], h, nx, "line");
            if (jx == 0 || jx == nx)
                throw ConfigError("seam notch lies on a domain boundary line");
            int i0 = snap_index(spec.start[1], h, ny, "mouth");
            int i1 = snap_index(spec.end[1], h, ny, "tip");
            if (i0 == i1) throw ConfigError("zero-length notch");
            spec.start = {jx * h, i0 * h};
            spec.end = {jx * h, i1 * h};
            const int step = (i1 > i0) ? 1 : -1;
            std::vector<int> dup_of(nny, -1);
            for (int iy = i0; iy != i1; iy += step) {
                const int orig = grid_node(jx, iy);
                const int dup = mesh.n_nodes();
                mesh.node_coords.push_back(mesh.node_coords[orig]);
                dup_of[iy] = dup;
                seam.nodes.push_back({orig, dup});
            }
            // Elements left of the seam line are remapped.
            for (int iy = std::min(i0, i1); iy < std::max(i0, i1); ++iy) {
                auto& conn = mesh.elem_connectivity[mesh.elem_index(jx - 1, iy)];
                if (dup_of[iy] >= 0) conn[1] = dup_of[iy];          // bottom-right
                if (dup_of[iy + 1] >= 0) conn[2] = dup_of[iy + 1];  // top-right
            }
        }
        seam.spec = spec;
        mesh.notch_seams.push_back(std::move(seam));
        mesh.notches.push_back(spec);
    }

    const double tol = 1e-9 * std::max(lx, ly);
    auto& bottom = mesh.boundary_sets["bottom"];
    auto& top = mesh.boundary_sets["top"];
    auto& left = mesh.boundary_sets["left"];
    auto& right = mesh.boundary_sets["right"];
    for (int n = 0; n < mesh.n_nodes(); ++n) {
        const auto& p = mesh.node_coords[n];
        if (std::abs(p[1]) <= tol) bottom.push_back(n);
        if (std::abs(p[1] - ly) <= tol) top.push_back(n);
        if (std::abs(p[0]) <= tol) left.push_back(n);
        if (std::abs(p[0] - lx) <= tol) right.push_back(n);
    }
    return mesh;
}

GaussGrid gauss_grid(const StructuredMesh& mesh) {
    GaussGrid grid;
    grid.px = 2 * mesh.nx;
    grid.py = 2 * mesh.ny;
    grid.h_px = 0.5 * mesh.elem_size;
    const int n_gp = 4 * mesh.n_elems();
    grid.gp_coords.resize(n_gp);
    grid.gp_to_pixel.resize(n_gp);
    grid.pixel_to_gp.assign(n_gp, -1);

    const double h = mesh.elem_size;
    for (int iy = 0; iy < mesh.ny; ++iy) {
        for (int ix = 0; ix < mesh.nx; ++ix) {
            const int e = mesh.elem_index(ix, iy);
            for (int b = 0; b < 2; ++b) {       // local GP index along y
                for (int a = 0; a < 2; ++a) {   // local GP index along x
                    const int g = e * 4 + b * 2 + a;
                    const double gx = (ix + 0.5 + (a ? 0.5 : -0.5) * kInvSqrt3) * h;
                    const double gy = (iy + 0.5 + (b ? 0.5 : -0.5) * kInvSqrt3) * h;
                    grid.gp_coords[g] = {gx, gy};
                    const int row = 2 * iy + b;
                    const int col = 2 * ix + a;
                    const int pix = row * grid.px + col;
                    grid.gp_to_pixel[g] = pix;
                    grid.pixel_to_gp[pix] = g;
                }
            }
        }
    }
    return grid;
}

double point_segment_distance(const std::array<double, 2>& p,
                              const std::array<double, 2>& a,
                              const std::array<double, 2>& b) {
    const double dx = b[0] - a[0], dy = b[1] - a[1];
    const double len2 = dx * dx + dy * dy;
    double t = 0.0;
    if (len2 > 0.0)
        t = std::clamp(((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / len2, 0.0, 1.0);
    const double cx = a[0] + t * dx - p[0];
    const double cy = a[1] + t * dy - p[1];
    return std::sqrt(cx * cx + cy * cy);
}

}  // namespace pfcrack
