#pragma once

#include <span>
#include <vector>

#include "pfcrack/elasticity.hpp"
#include "pfcrack/material.hpp"
#include "pfcrack/mesh.hpp"

namespace pfcrack {

struct PhaseFieldState {
    std::vector<double> phi_nodal;  // per node, in [0, 1]
    std::vector<double> phi_gp;     // per GP, interpolated then clamped
};

struct PhaseFieldDirichlet {
    int node = -1;
    double value = 0.0;
};

struct PhaseFieldSystem {
    SparseMat A_free;
    Eigen::VectorXd rhs_free;
    std::vector<int> free_index;
    std::vector<double> prescribed;
    int n_nodes = 0;
};

// Weak form of (G_c/l_c + 2H) phi - G_c l_c Laplacian(phi) = 2H with the
// natural zero-flux boundary condition; H is given per Gauss point. The
// optional Dirichlet list exists for analytic profile tests.
PhaseFieldSystem assemble_phasefield(const StructuredMesh& mesh,
                                     const MaterialParams& mat,
                                     std::span<const double> history,
                                     const std::vector<PhaseFieldDirichlet>& dirichlet = {});

// Solves the assembled system (relative residual <= 1e-10), interpolates phi
// to GPs bilinearly and clamps both fields to [0, 1].
PhaseFieldState solve_phasefield(const PhaseFieldSystem& sys,
                                 const StructuredMesh& mesh,
                                 ReusableLdlt* reuse = nullptr,
                                 const SolverOptions& opts = {});

// Bilinear interpolation of a nodal field to the 2x2 GPs of every element.
std::vector<double> interpolate_nodal_to_gp(const StructuredMesh& mesh,
                                            std::span<const double> nodal);

}  // namespace pfcrack
