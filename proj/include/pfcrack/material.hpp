#pragma once

namespace pfcrack {

// Isotropic brittle material under plane strain.
struct MaterialParams {
    double lambda = 0.0;  // first Lame constant (N/mm^2)
    double mu = 0.0;      // second Lame constant (N/mm^2)
    double gc = 0.0;      // critical energy release rate (N/mm)
    double lc = 0.0;      // phase-field characteristic length (mm)

    // Throws ConfigError if mu <= 0, lambda <= -2/3 mu, gc <= 0 or lc <= 0.
    void validate() const;
};

}  // namespace pfcrack
