#pragma once

// Shared 2x2-quadrature kernels for square bilinear quadrilateral elements.
// Local GP index l = b*2 + a maps to (xi, eta) = (±1/sqrt3, ±1/sqrt3) with a
// indexing xi and b indexing eta; this matches the GaussGrid pixel layout.

#include <Eigen/Dense>
#include <array>

namespace pfcrack::detail {

struct Quad4Kernels {
    std::array<Eigen::Matrix<double, 3, 8>, 4> B;   // strain-displacement at each GP
    std::array<Eigen::Matrix<double, 8, 8>, 4> BtDB_detJ;
    std::array<Eigen::Matrix4d, 4> gradNgradN_detJ;
    std::array<Eigen::Matrix4d, 4> NNt_detJ;
    std::array<Eigen::Vector4d, 4> N_detJ;
    double detJ = 0.0;
};

// D is the plane-strain constitutive matrix in Voigt form [exx, eyy, gamma_xy].
inline Quad4Kernels make_quad4_kernels(double elem_size, double lambda, double mu) {
    constexpr double kInvSqrt3 = 0.57735026918962576451;
    const double h = elem_size;
    const double detJ = h * h / 4.0;
    const double dmap = 2.0 / h;  // d(xi)/dx for the affine square element

    Eigen::Matrix3d D;
    D << lambda + 2.0 * mu, lambda, 0.0,
         lambda, lambda + 2.0 * mu, 0.0,
         0.0, 0.0, mu;

    const std::array<double, 4> xi_n = {-1.0, 1.0, 1.0, -1.0};
    const std::array<double, 4> eta_n = {-1.0, -1.0, 1.0, 1.0};

    Quad4Kernels k;
    k.detJ = detJ;
    for (int b = 0; b < 2; ++b) {
        for (int a = 0; a < 2; ++a) {
            const int l = b * 2 + a;
            const double xi = (a ? 1.0 : -1.0) * kInvSqrt3;
            const double eta = (b ? 1.0 : -1.0) * kInvSqrt3;

            Eigen::Vector4d N, dNdx, dNdy;
            for (int i = 0; i < 4; ++i) {
                N(i) = 0.25 * (1.0 + xi_n[i] * xi) * (1.0 + eta_n[i] * eta);
                dNdx(i) = 0.25 * xi_n[i] * (1.0 + eta_n[i] * eta) * dmap;
                dNdy(i) = 0.25 * eta_n[i] * (1.0 + xi_n[i] * xi) * dmap;
            }

            Eigen::Matrix<double, 3, 8> B = Eigen::Matrix<double, 3, 8>::Zero();
            for (int i = 0; i < 4; ++i) {
                B(0, 2 * i) = dNdx(i);
                B(1, 2 * i + 1) = dNdy(i);
                B(2, 2 * i) = dNdy(i);
                B(2, 2 * i + 1) = dNdx(i);
            }
            k.B[l] = B;
            k.BtDB_detJ[l] = B.transpose() * D * B * detJ;
            k.gradNgradN_detJ[l] = (dNdx * dNdx.transpose() + dNdy * dNdy.transpose()) * detJ;
            k.NNt_detJ[l] = N * N.transpose() * detJ;
            k.N_detJ[l] = N * detJ;
        }
    }
    return k;
}

// Bilinear shape functions at GP l for interpolating nodal fields to GPs.
inline std::array<Eigen::Vector4d, 4> quad4_shape_at_gps() {
    constexpr double kInvSqrt3 = 0.57735026918962576451;
    const std::array<double, 4> xi_n = {-1.0, 1.0, 1.0, -1.0};
    const std::array<double, 4> eta_n = {-1.0, -1.0, 1.0, 1.0};
    std::array<Eigen::Vector4d, 4> out;
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < 2; ++a) {
            const int l = b * 2 + a;
            const double xi = (a ? 1.0 : -1.0) * kInvSqrt3;
            const double eta = (b ? 1.0 : -1.0) * kInvSqrt3;
            for (int i = 0; i < 4; ++i)
                out[l](i) = 0.25 * (1.0 + xi_n[i] * xi) * (1.0 + eta_n[i] * eta);
        }
    return out;
}

}  // namespace pfcrack::detail
