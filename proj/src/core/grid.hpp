#ifndef CHLIM_CORE_GRID_HPP
#define CHLIM_CORE_GRID_HPP

#include "core/common.hpp"

namespace chlim {

// Uniform cell-centered grid on (0,1): x_i = (i - 1/2) h, i = 1..N, h = 1/N.
struct GridSpec {
    int n_cells = 0;
    double h = 0.0;

    double x_center(int i) const { return (i + 0.5) * h; } // 0-based i
};

GridSpec make_grid(int n_cells);

struct ModelParams {
    double epsilon = 0.0;     // diffuse interface width, > 0
    double mobility = 1.0;    // constant M > 0
    double final_time = 0.2;  // T > 0
};

void validate_params(const ModelParams& p);

// eps_m(h) = h m / (2 sqrt(2) artanh(9/10)); m is the characteristic number
// of cells across which a stationary profile swings between its extremes.
double epsilon_of_grid(double h, int m);

} // namespace chlim

#endif
