#pragma once

#include <span>
#include <vector>

#include "mlsn/network.hpp"

namespace mlsn {

/// One row of the alpha sweep: how many nodes have a non-empty MN(x, alpha),
/// a non-zero CDC(x, alpha) and a non-zero CLCC(x, alpha).
struct SweepRow {
  int alpha = 1;
  std::size_t mn_nonempty = 0;
  std::size_t cdc_nonzero = 0;
  std::size_t clcc_nonzero = 0;
};

std::vector<SweepRow> alpha_sweep(const MultiLayerNetwork& net, int max_alpha);

struct Histogram {
  std::vector<double> bin_upper_edges;
  std::vector<std::size_t> counts;
  std::vector<double> cumulative_percent;
};

/// Right-closed bins: bin 0 takes v <= e0, bin i takes e(i-1) < v <= e(i).
/// Throws invalid_argument for non-increasing edges and range for values
/// above the last edge.
Histogram histogram(std::span<const double> values, std::span<const double> bin_upper_edges);

/// 0, then 0.00002 steps up to 0.00030, then 1.
std::vector<double> default_histogram_edges();

/// y = A * exp(x / t) fitted to values sorted in descending order against
/// their rank x = 0..n-1.
struct FitResult {
  double amplitude = 0.0;         // A
  double decay = 0.0;             // t
  double correlation_rate = 0.0;  // Pearson r between observed and fitted values
  std::size_t n_points = 0;
  std::size_t excluded = 0;       // non-positive inputs dropped before fitting
};

FitResult fit_exp_decay(std::span<const double> values);

}  // namespace mlsn
