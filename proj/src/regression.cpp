#include <cmath>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "ice/error.hpp"
#include "ice/platform.hpp"

namespace ice {

FitResult fit_parameters(std::span<const MeasurementSample> samples) {
    constexpr Eigen::Index kColumns = 3;
    if (samples.size() < static_cast<std::size_t>(kColumns)) {
        fail(ErrorCode::insufficient_data, fmt::format("need at least 3 samples, got {}", samples.size()));
    }

    const auto rows = static_cast<Eigen::Index>(samples.size());
    Eigen::MatrixXd design(rows, kColumns);
    Eigen::VectorXd energy(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& s = samples[static_cast<std::size_t>(i)];
        if (!(s.work >= 0 && s.io >= 0 && s.energy_j >= 0) || !(s.duration_s > 0)) {
            fail(ErrorCode::invalid_argument,
                 fmt::format("sample {}: fields must be non-negative and duration positive", i));
        }
        design(i, 0) = s.work;
        design(i, 1) = s.io;
        design(i, 2) = s.duration_s;
        energy(i) = s.energy_j;
    }

    // Work counts and durations differ by many orders of magnitude; equilibrate
    // columns so the rank decision is scale-free.
    Eigen::Vector3d scale;
    for (Eigen::Index c = 0; c < kColumns; ++c) {
        scale(c) = design.col(c).norm();
        if (scale(c) == 0) fail(ErrorCode::degenerate_fit, fmt::format("design column {} is identically zero", c));
        design.col(c) /= scale(c);
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
    qr.setThreshold(1e-10);
    if (qr.rank() < kColumns) {
        fail(ErrorCode::degenerate_fit, "design matrix (work, io, duration) is rank deficient");
    }
    const Eigen::Vector3d scaled = qr.solve(energy);
    const Eigen::Vector3d coeffs = scaled.cwiseQuotient(scale);
    const double rss = (design * scaled - energy).squaredNorm();

    return {.eps_op_j = coeffs(0), .eps_io_j = coeffs(1), .static_power_w = coeffs(2), .residual_sum_squares = rss};
}

}  // namespace ice
