#include "pfcrack/elasticity.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <cmath>

#include "pfcrack/errors.hpp"
#include "quad4.hpp"

namespace pfcrack {

void MaterialParams::validate() const {
    if (!(mu > 0.0)) throw ConfigError("material: mu must be > 0");
    if (!(lambda > -2.0 / 3.0 * mu))
        throw ConfigError("material: lambda must exceed -2/3 mu");
    if (!(gc > 0.0)) throw ConfigError("material: gc must be > 0");
    if (!(lc > 0.0)) throw ConfigError("material: lc must be > 0");
}

EnergySplit spectral_split(const Strain2D& eps, const MaterialParams& mat) {
    // Principal strains of the symmetric 2x2 tensor, closed form.
    const double m = 0.5 * (eps.xx + eps.yy);
    const double r = std::sqrt(0.25 * (eps.xx - eps.yy) * (eps.xx - eps.yy) +
                               eps.xy * eps.xy);
    const double e1 = m + r, e2 = m - r;
    const double tr = eps.trace();
    const double tr_p = tr > 0.0 ? tr : 0.0;
    const double tr_m = tr < 0.0 ? tr : 0.0;
    const double e1_p = e1 > 0.0 ? e1 : 0.0, e1_m = e1 < 0.0 ? e1 : 0.0;
    const double e2_p = e2 > 0.0 ? e2 : 0.0, e2_m = e2 < 0.0 ? e2 : 0.0;
    EnergySplit out;
    out.psi_plus = 0.5 * mat.lambda * tr_p * tr_p + mat.mu * (e1_p * e1_p + e2_p * e2_p);
    out.psi_minus = 0.5 * mat.lambda * tr_m * tr_m + mat.mu * (e1_m * e1_m + e2_m * e2_m);
    return out;
}

double undamaged_psi(const Strain2D& eps, const MaterialParams& mat) {
    const double tr = eps.trace();
    return 0.5 * mat.lambda * tr * tr +
           mat.mu * (eps.xx * eps.xx + eps.yy * eps.yy + 2.0 * eps.xy * eps.xy);
}

Eigen::VectorXd ReusableLdlt::solve(const SparseMat& A, const Eigen::VectorXd& b,
                                    const char* what) {
    if (!analyzed_) {
        solver_.analyzePattern(A);
        analyzed_ = true;
    }
    solver_.factorize(A);
    if (solver_.info() != Eigen::Success)
        throw NumericalError(std::string(what) + ": sparse factorization failed "
                             "(singular or disconnected system?)");
    Eigen::VectorXd x = solver_.solve(b);
    if (solver_.info() != Eigen::Success)
        throw NumericalError(std::string(what) + ": sparse solve failed");
    return x;
}

namespace {

Eigen::VectorXd solve_reduced(const SparseMat& A, const Eigen::VectorXd& b,
                              ReusableLdlt* reuse, const SolverOptions& opts,
                              const char* what) {
    if (opts.kind == LinearSolverKind::cg) {
        Eigen::ConjugateGradient<SparseMat, Eigen::Lower | Eigen::Upper,
                                 Eigen::DiagonalPreconditioner<double>> cg;
        cg.setTolerance(opts.cg_tol);
        cg.setMaxIterations(opts.cg_max_iters);
        cg.compute(A);
        Eigen::VectorXd x = cg.solve(b);
        if (cg.info() != Eigen::Success)
            throw NumericalError(std::string(what) + ": CG failed to converge after " +
                                 std::to_string(cg.iterations()) + " iterations");
        return x;
    }
    ReusableLdlt local;
    ReusableLdlt& ldlt = reuse ? *reuse : local;
    return ldlt.solve(A, b, what);
}

}  // namespace

EquilibriumSystem assemble_equilibrium(const StructuredMesh& mesh,
                                       const MaterialParams& mat,
                                       std::span<const double> phi_gp,
                                       const std::vector<DirichletBC>& dirichlet,
                                       double k_res) {
    if (static_cast<int>(phi_gp.size()) != 4 * mesh.n_elems())
        throw ConfigError("assemble_equilibrium: phi_gp length must be 4 * n_elems");

    const auto kernels = detail::make_quad4_kernels(mesh.elem_size, mat.lambda, mat.mu);

    EquilibriumSystem sys;
    sys.n_dofs = 2 * mesh.n_nodes();
    sys.dirichlet = dirichlet;
    sys.free_index.assign(sys.n_dofs, 0);
    sys.prescribed.assign(sys.n_dofs, 0.0);
    for (const auto& bc : dirichlet) {
        const int d = 2 * bc.node + bc.dof;
        sys.free_index[d] = -1;
        sys.prescribed[d] = bc.value;
    }
    int n_free = 0;
    for (int d = 0; d < sys.n_dofs; ++d)
        if (sys.free_index[d] >= 0) sys.free_index[d] = n_free++;

    std::vector<Eigen::Triplet<double>> trips_full, trips_free;
    trips_full.reserve(static_cast<size_t>(mesh.n_elems()) * 64);
    trips_free.reserve(static_cast<size_t>(mesh.n_elems()) * 64);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n_free);

    Eigen::Matrix<double, 8, 8> ke;
    std::array<int, 8> edofs;
    for (int e = 0; e < mesh.n_elems(); ++e) {
        ke.setZero();
        for (int l = 0; l < 4; ++l) {
            const double phi = phi_gp[4 * e + l];
            const double g = (1.0 - k_res) * (1.0 - phi) * (1.0 - phi) + k_res;
            ke += g * kernels.BtDB_detJ[l];
        }
        const auto& conn = mesh.elem_connectivity[e];
        for (int i = 0; i < 4; ++i) {
            edofs[2 * i] = 2 * conn[i];
            edofs[2 * i + 1] = 2 * conn[i] + 1;
        }
        for (int i = 0; i < 8; ++i) {
            const int gi = edofs[i];
            const int fi = sys.free_index[gi];
            for (int j = 0; j < 8; ++j) {
                const int gj = edofs[j];
                const double v = ke(i, j);
                trips_full.emplace_back(gi, gj, v);
                const int fj = sys.free_index[gj];
                if (fi >= 0 && fj >= 0)
                    trips_free.emplace_back(fi, fj, v);
                else if (fi >= 0 && fj < 0)
                    rhs(fi) -= v * sys.prescribed[gj];
            }
        }
    }

    sys.K_full.resize(sys.n_dofs, sys.n_dofs);
    sys.K_full.setFromTriplets(trips_full.begin(), trips_full.end());
    sys.K_free.resize(n_free, n_free);
    sys.K_free.setFromTriplets(trips_free.begin(), trips_free.end());
    sys.rhs_free = std::move(rhs);
    return sys;
}

DisplacementState solve_equilibrium(const EquilibriumSystem& sys,
                                    const StructuredMesh& mesh,
                                    ReusableLdlt* reuse,
                                    const SolverOptions& opts) {
    Eigen::VectorXd u_free =
        solve_reduced(sys.K_free, sys.rhs_free, reuse, opts, "equilibrium");

    DisplacementState state;
    state.dirichlet = sys.dirichlet;
    state.u.resize(sys.n_dofs);
    for (int d = 0; d < sys.n_dofs; ++d)
        state.u(d) = sys.free_index[d] >= 0 ? u_free(sys.free_index[d])
                                            : sys.prescribed[d];

    const double rhs_norm = sys.rhs_free.norm();
    const double res = (sys.K_free * u_free - sys.rhs_free).norm();
    state.residual_rel = rhs_norm > 0.0 ? res / rhs_norm : res;
    const double tol = opts.kind == LinearSolverKind::direct ? 1e-10
                                                             : 10.0 * opts.cg_tol;
    if (rhs_norm > 0.0 && state.residual_rel > tol)
        throw NumericalError("equilibrium: relative residual " +
                             std::to_string(state.residual_rel) + " above tolerance");

    // Reactions: K_full u at constrained DOFs, summed per boundary set.
    Eigen::VectorXd f = sys.K_full * state.u;
    for (const auto& [name, nodes] : mesh.boundary_sets) {
        std::array<double, 2> r = {0.0, 0.0};
        for (int n : nodes)
            for (int dof = 0; dof < 2; ++dof)
                if (sys.free_index[2 * n + dof] < 0) r[dof] += f(2 * n + dof);
        state.reactions[name] = r;
    }
    return state;
}

std::vector<Strain2D> compute_gp_strains(const StructuredMesh& mesh,
                                         const Eigen::VectorXd& u) {
    const auto kernels = detail::make_quad4_kernels(mesh.elem_size, 0.0, 1.0);
    std::vector<Strain2D> out(static_cast<size_t>(4) * mesh.n_elems());
    Eigen::Matrix<double, 8, 1> ue;
    for (int e = 0; e < mesh.n_elems(); ++e) {
        const auto& conn = mesh.elem_connectivity[e];
        for (int i = 0; i < 4; ++i) {
            ue(2 * i) = u(2 * conn[i]);
            ue(2 * i + 1) = u(2 * conn[i] + 1);
        }
        for (int l = 0; l < 4; ++l) {
            const Eigen::Vector3d v = kernels.B[l] * ue;  // [exx, eyy, gamma_xy]
            out[4 * e + l] = Strain2D{v(0), v(1), 0.5 * v(2)};
        }
    }
    return out;
}

void update_history(std::vector<double>& history,
                    std::span<const double> psi_plus_new) {
    if (history.size() != psi_plus_new.size())
        throw ConfigError("update_history: size mismatch");
    for (size_t i = 0; i < history.size(); ++i)
        history[i] = std::max(history[i], psi_plus_new[i]);
}

}  // namespace pfcrack
