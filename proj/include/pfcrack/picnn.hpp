#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pfcrack/material.hpp"
#include "pfcrack/pixel.hpp"

namespace pfcrack {

// 5x5 kernel with full dihedral (D4) symmetry; 6 free parameters
// [a, b, c, d, e, f] expand to rows
//   a b c b a
//   b d e d b
//   c e f e c
//   b d e d b
//   a b c b a
struct SymmetricKernel {
    std::array<double, 6> params{};
};

std::array<double, 25> expand_kernel(const std::array<double, 6>& params);

enum class Activation { Tanh, Sigmoid };

struct ConvLayer {
    int in_ch = 0;
    int out_ch = 0;
    Activation act = Activation::Tanh;
    std::vector<double> weights;  // out*in*6, indexed [out][in][k]
    std::vector<double> bias;     // out
};

// Stack of double-symmetric convolution layers, zero padding of width 2
// (same-size outputs), tanh between layers and sigmoid at the end. No
// pooling, no flattening: output shape always equals input shape.
struct PicnnModel {
    std::vector<ConvLayer> layers;
    std::uint64_t rng_seed = 0;
    std::map<std::string, std::string> metadata;

    // channel_plan = {1, 24, 24, 24, 1} for the default architecture; the last
    // layer gets sigmoid, all others tanh. Weights are initialized uniformly
    // in [-s, s] with s = 1/sqrt(in_ch * 25); biases start at zero.
    static PicnnModel make(const std::vector<int>& channel_plan, std::uint64_t seed);
    static PicnnModel make_default(std::uint64_t seed);

    int param_count() const;
    std::vector<double> get_params() const;
    void set_params(std::span<const double> p);
};

// Fixed finite-difference Laplacian filters on the uniform pixel grid.
// K9Star satisfies lap(phi) = (1/h^2) [K9star_conv(phi) - 3 phi]; boundary
// pixels use mirror padding (zero-flux consistency).
struct LaplacianStencil {
    enum class Kind { K5, K9, K9Star };

    Kind kind = Kind::K9Star;
    std::array<double, 9> weights{};  // row-major 3x3 convolution taps
    double h = 1.0;                   // grid spacing (mm)

    static LaplacianStencil make(Kind kind, double h);

    PixelGrid apply(const PixelGrid& phi) const;
    // Adjoint of apply() as a linear operator; exact transpose including the
    // mirror-padding fold-back (needed for analytic gradients).
    PixelGrid apply_adjoint(const PixelGrid& g) const;
};

struct TrainConfig {
    int epochs = 10000;
    double learning_rate = 1e-4;
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_eps = 1e-8;
    std::uint64_t rng_seed = 42;
    bool mean_squared_loss = false;  // default: plain 2-norm of the residual

    void validate() const;
};

// One forward pass; deterministic for fixed parameters. Throws
// NumericalError if a non-finite intermediate appears.
PixelGrid forward(const PicnnModel& model, const PixelGrid& h_map);

// Reusable-buffer forward for inference inside the hybrid driver.
class PicnnPredictor {
  public:
    explicit PicnnPredictor(PicnnModel model);
    ~PicnnPredictor();
    PicnnPredictor(PicnnPredictor&&) noexcept;
    PicnnPredictor& operator=(PicnnPredictor&&) noexcept;

    const PicnnModel& model() const;
    PixelGrid predict(const PixelGrid& h_map);

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// R = (G_c/l_c) phi - G_c l_c lap(phi) - 2 (1 - phi) H, per pixel.
// Term order is fixed: r = gol*phi - gl*lap - 2.0*(1.0 - phi)*h.
PixelGrid pde_residual(const PixelGrid& phi, const PixelGrid& h_map,
                       const MaterialParams& mat, const LaplacianStencil& stencil);

// L = sqrt(sum of squared residuals over all pixels and batch samples), or
// the mean of squares when mean_squared is set.
double loss(std::span<const PixelGrid> residuals, bool mean_squared = false);

struct BackwardResult {
    double loss_value = 0.0;
    std::vector<double> gradients;  // flat, same layout as get_params()
};

// Analytic gradient of the residual loss with respect to every trainable
// parameter (kernel orbits and biases); the Laplacian stencil is fixed and
// receives no gradient.
BackwardResult backward(const PicnnModel& model, std::span<const PixelGrid> h_maps,
                        const MaterialParams& mat, const LaplacianStencil& stencil,
                        bool mean_squared = false);

struct TrainResult {
    std::vector<double> loss_history;  // one entry per epoch, pre-update loss
};

// Adam training on the PDE-residual loss; deterministic given the model state
// and config. Throws NumericalError with the epoch index if the loss becomes
// non-finite.
TrainResult train(PicnnModel& model, std::span<const PixelGrid> h_maps,
                  const MaterialParams& mat, const LaplacianStencil& stencil,
                  const TrainConfig& cfg);

// Self-describing text format; load(save(m)) reproduces forward outputs
// bitwise. Load rejects version or channel-plan inconsistencies.
void save_model(const PicnnModel& model, const std::string& path);
PicnnModel load_model(const std::string& path);

}  // namespace pfcrack
