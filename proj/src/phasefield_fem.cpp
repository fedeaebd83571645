#include "pfcrack/phasefield_fem.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <algorithm>
#include <cmath>

#include "pfcrack/errors.hpp"
#include "quad4.hpp"

namespace pfcrack {

PhaseFieldSystem assemble_phasefield(const StructuredMesh& mesh,
                                     const MaterialParams& mat,
                                     std::span<const double> history,
                                     const std::vector<PhaseFieldDirichlet>& dirichlet) {
    if (static_cast<int>(history.size()) != 4 * mesh.n_elems())
        throw ConfigError("assemble_phasefield: history length must be 4 * n_elems");

    const auto kernels = detail::make_quad4_kernels(mesh.elem_size, 0.0, 1.0);
    const double diff = mat.gc * mat.lc;        // gradient term coefficient
    const double react0 = mat.gc / mat.lc;      // reaction term base coefficient

    PhaseFieldSystem sys;
    sys.n_nodes = mesh.n_nodes();
    sys.free_index.assign(sys.n_nodes, 0);
    sys.prescribed.assign(sys.n_nodes, 0.0);
    for (const auto& bc : dirichlet) {
        sys.free_index[bc.node] = -1;
        sys.prescribed[bc.node] = bc.value;
    }
    int n_free = 0;
    for (int n = 0; n < sys.n_nodes; ++n)
        if (sys.free_index[n] >= 0) sys.free_index[n] = n_free++;

    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(static_cast<size_t>(mesh.n_elems()) * 16);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n_free);

    Eigen::Matrix4d ae;
    Eigen::Vector4d be;
    for (int e = 0; e < mesh.n_elems(); ++e) {
        ae.setZero();
        be.setZero();
        for (int l = 0; l < 4; ++l) {
            const double H = history[4 * e + l];
            ae += diff * kernels.gradNgradN_detJ[l] +
                  (react0 + 2.0 * H) * kernels.NNt_detJ[l];
            be += 2.0 * H * kernels.N_detJ[l];
        }
        const auto& conn = mesh.elem_connectivity[e];
        for (int i = 0; i < 4; ++i) {
            const int fi = sys.free_index[conn[i]];
            if (fi < 0) continue;
            rhs(fi) += be(i);
            for (int j = 0; j < 4; ++j) {
                const int fj = sys.free_index[conn[j]];
                if (fj >= 0)
                    trips.emplace_back(fi, fj, ae(i, j));
                else
                    rhs(fi) -= ae(i, j) * sys.prescribed[conn[j]];
            }
        }
    }

    sys.A_free.resize(n_free, n_free);
    sys.A_free.setFromTriplets(trips.begin(), trips.end());
    sys.rhs_free = std::move(rhs);
    return sys;
}

PhaseFieldState solve_phasefield(const PhaseFieldSystem& sys,
                                 const StructuredMesh& mesh,
                                 ReusableLdlt* reuse,
                                 const SolverOptions& opts) {
    Eigen::VectorXd x;
    if (opts.kind == LinearSolverKind::cg) {
        Eigen::ConjugateGradient<SparseMat, Eigen::Lower | Eigen::Upper,
                                 Eigen::DiagonalPreconditioner<double>> cg;
        cg.setTolerance(opts.cg_tol);
        cg.setMaxIterations(opts.cg_max_iters);
        cg.compute(sys.A_free);
        x = cg.solve(sys.rhs_free);
        if (cg.info() != Eigen::Success)
            throw NumericalError("phasefield: CG failed to converge");
    } else {
        ReusableLdlt local;
        ReusableLdlt& ldlt = reuse ? *reuse : local;
        x = ldlt.solve(sys.A_free, sys.rhs_free, "phasefield");
    }

    const double rhs_norm = sys.rhs_free.norm();
    if (rhs_norm > 0.0) {
        const double res = (sys.A_free * x - sys.rhs_free).norm() / rhs_norm;
        const double tol = opts.kind == LinearSolverKind::direct ? 1e-10
                                                                 : 10.0 * opts.cg_tol;
        if (res > tol)
            throw NumericalError("phasefield: relative residual " +
                                 std::to_string(res) + " above tolerance");
    }

    PhaseFieldState state;
    state.phi_nodal.resize(sys.n_nodes);
    for (int n = 0; n < sys.n_nodes; ++n) {
        const double v = sys.free_index[n] >= 0 ? x(sys.free_index[n])
                                                : sys.prescribed[n];
        state.phi_nodal[n] = std::clamp(v, 0.0, 1.0);
    }
    state.phi_gp = interpolate_nodal_to_gp(mesh, state.phi_nodal);
    for (double& v : state.phi_gp) v = std::clamp(v, 0.0, 1.0);
    return state;
}

std::vector<double> interpolate_nodal_to_gp(const StructuredMesh& mesh,
                                            std::span<const double> nodal) {
    if (static_cast<int>(nodal.size()) != mesh.n_nodes())
        throw ConfigError("interpolate_nodal_to_gp: nodal length must be n_nodes");
    static const auto shapes = detail::quad4_shape_at_gps();
    std::vector<double> gp(static_cast<size_t>(4) * mesh.n_elems());
    for (int e = 0; e < mesh.n_elems(); ++e) {
        const auto& conn = mesh.elem_connectivity[e];
        for (int l = 0; l < 4; ++l) {
            double v = 0.0;
            for (int i = 0; i < 4; ++i) v += shapes[l](i) * nodal[conn[i]];
            gp[4 * e + l] = v;
        }
    }
    return gp;
}

}  // namespace pfcrack
