#pragma once

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "pfcrack/material.hpp"
#include "pfcrack/mesh.hpp"

namespace pfcrack {

using SparseMat = Eigen::SparseMatrix<double>;

// Small-strain 2D tensor; `xy` is the tensor shear component (gamma_xy / 2).
struct Strain2D {
    double xx = 0.0;
    double yy = 0.0;
    double xy = 0.0;

    double trace() const { return xx + yy; }
};

struct EnergySplit {
    double psi_plus = 0.0;
    double psi_minus = 0.0;
};

// Tensile/compressive strain energy densities from the spectral decomposition
// of the strain tensor: psi± = lambda/2 <tr eps>±^2 + mu eps±:eps±.
EnergySplit spectral_split(const Strain2D& eps, const MaterialParams& mat);

// Undamaged strain energy density lambda/2 tr(eps)^2 + mu eps:eps.
double undamaged_psi(const Strain2D& eps, const MaterialParams& mat);

struct DirichletBC {
    int node = -1;
    int dof = 0;        // 0 = x, 1 = y
    double value = 0.0;
};

struct DisplacementState {
    Eigen::VectorXd u;  // length 2 * node count, prescribed DOFs hold their values
    std::vector<DirichletBC> dirichlet;
    // Force resultants (N per unit thickness) summed over each boundary set.
    std::map<std::string, std::array<double, 2>> reactions;
    double residual_rel = 0.0;
};

// Per-GP elastic state carried across increments.
struct GpElasticFields {
    std::vector<Strain2D> strain;
    std::vector<double> psi_plus;
    std::vector<double> psi_minus;
    std::vector<double> history;
};

// Assembled equilibrium system with Dirichlet rows eliminated symmetrically.
struct EquilibriumSystem {
    SparseMat K_free;            // reduced stiffness on free DOFs
    Eigen::VectorXd rhs_free;
    SparseMat K_full;            // unconstrained stiffness, used for reactions
    std::vector<int> free_index;     // dof -> free index or -1 if constrained
    std::vector<double> prescribed;  // dof -> prescribed value (0 where free)
    std::vector<DirichletBC> dirichlet;
    int n_dofs = 0;
};

// Reusable direct solver: the symbolic factorization is computed once per
// sparsity pattern and numeric refactorization is done per call.
class ReusableLdlt {
  public:
    Eigen::VectorXd solve(const SparseMat& A, const Eigen::VectorXd& b,
                          const char* what);

  private:
    Eigen::SimplicialLDLT<SparseMat> solver_;
    bool analyzed_ = false;
};

enum class LinearSolverKind { direct, cg };

struct SolverOptions {
    LinearSolverKind kind = LinearSolverKind::direct;
    double cg_tol = 1e-10;
    int cg_max_iters = 20000;
};

// Element stiffness uses sigma = g(phi) [lambda tr(eps) I + 2 mu eps] with
// g(phi) = (1 - k_res)(1 - phi)^2 + k_res evaluated per Gauss point
// (hybrid formulation: the full stiffness is degraded). Body force is zero.
EquilibriumSystem assemble_equilibrium(const StructuredMesh& mesh,
                                       const MaterialParams& mat,
                                       std::span<const double> phi_gp,
                                       const std::vector<DirichletBC>& dirichlet,
                                       double k_res = 1e-6);

// Solves K u = f, verifies the relative residual (<= 1e-10 for the direct
// backend) and computes reactions as K_full * u restricted to constrained
// DOFs, summed per boundary set. Throws NumericalError on failure.
DisplacementState solve_equilibrium(const EquilibriumSystem& sys,
                                    const StructuredMesh& mesh,
                                    ReusableLdlt* reuse = nullptr,
                                    const SolverOptions& opts = {});

// Per-GP strains from nodal displacements (4 GPs per element, 2x2 rule).
std::vector<Strain2D> compute_gp_strains(const StructuredMesh& mesh,
                                         const Eigen::VectorXd& u);

// history' = max(history, psi_plus_new), elementwise; idempotent.
void update_history(std::vector<double>& history,
                    std::span<const double> psi_plus_new);

}  // namespace pfcrack
