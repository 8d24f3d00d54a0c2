#include "mlsn/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "mlsn/centrality.hpp"
#include "mlsn/clustering.hpp"
#include "mlsn/error.hpp"
#include "mlsn/parallel.hpp"

namespace mlsn {

std::vector<SweepRow> alpha_sweep(const MultiLayerNetwork& net, int max_alpha) {
  check_alpha(max_alpha);
  const auto top = static_cast<std::size_t>(max_alpha);
  std::vector<SweepRow> rows(top);
  for (std::size_t a = 0; a < top; ++a) rows[a].alpha = static_cast<int>(a + 1);
  if (net.node_count() == 0) return rows;

  // Per node, per alpha: bit 0 MN non-empty, bit 1 CDC > 0, bit 2 CLCC > 0.
  std::vector<std::uint8_t> flags(net.node_count() * top, 0);
  parallel_for(net.node_count(), [&](std::size_t i) {
    const auto x = static_cast<NodeIndex>(i);
    std::uint32_t reach = 0;
    for (const NeighbourLink& link : net.links(x)) reach = std::max(reach, link.any_layers);
    std::vector<double> cdc_values(top, 0.0);
    if (net.node_count() >= 2) cdc_values = cdc_alpha_profile(net, x, max_alpha);
    const std::vector<double> clcc_values = clcc_alpha_profile(net, x, max_alpha);
    for (std::size_t a = 0; a < top; ++a) {
      std::uint8_t f = 0;
      if (reach >= a + 1) f |= 1;
      if (cdc_values[a] > 0.0) f |= 2;
      if (clcc_values[a] > 0.0) f |= 4;
      flags[i * top + a] = f;
    }
  });
  for (std::size_t i = 0; i < net.node_count(); ++i) {
    for (std::size_t a = 0; a < top; ++a) {
      const std::uint8_t f = flags[i * top + a];
      rows[a].mn_nonempty += (f & 1) != 0;
      rows[a].cdc_nonzero += (f & 2) != 0;
      rows[a].clcc_nonzero += (f & 4) != 0;
    }
  }
  return rows;
}

Histogram histogram(std::span<const double> values, std::span<const double> bin_upper_edges) {
  if (bin_upper_edges.empty())
    throw Error(ErrorCode::invalid_argument, "histogram needs at least one bin edge");
  for (std::size_t i = 1; i < bin_upper_edges.size(); ++i)
    if (!(bin_upper_edges[i - 1] < bin_upper_edges[i]))
      throw Error(ErrorCode::invalid_argument, "histogram edges must be strictly increasing");

  Histogram h;
  h.bin_upper_edges.assign(bin_upper_edges.begin(), bin_upper_edges.end());
  h.counts.assign(bin_upper_edges.size(), 0);
  for (double v : values) {
    if (std::isnan(v) || v > bin_upper_edges.back())
      throw Error(ErrorCode::range, "value " + std::to_string(v) +
                                        " lies above the last histogram edge " +
                                        std::to_string(bin_upper_edges.back()));
    auto it = std::lower_bound(bin_upper_edges.begin(), bin_upper_edges.end(), v);
    ++h.counts[static_cast<std::size_t>(it - bin_upper_edges.begin())];
  }
  h.cumulative_percent.assign(h.counts.size(), 0.0);
  if (!values.empty()) {
    std::size_t running = 0;
    for (std::size_t i = 0; i < h.counts.size(); ++i) {
      running += h.counts[i];
      h.cumulative_percent[i] =
          100.0 * static_cast<double>(running) / static_cast<double>(values.size());
    }
  }
  return h;
}

std::vector<double> default_histogram_edges() {
  std::vector<double> edges;
  for (int k = 0; k <= 15; ++k) edges.push_back(static_cast<double>(2 * k) / 100000.0);
  edges.push_back(1.0);
  return edges;
}

FitResult fit_exp_decay(std::span<const double> values) {
  FitResult fit;
  std::vector<double> ys;
  ys.reserve(values.size());
  for (double v : values) {
    if (v > 0.0 && std::isfinite(v))
      ys.push_back(v);
    else
      ++fit.excluded;
  }
  if (ys.size() < 2)
    throw Error(ErrorCode::insufficient_data,
                "exponential fit needs at least two positive values, got " +
                    std::to_string(ys.size()));
  std::sort(ys.begin(), ys.end(), std::greater<>());
  if (ys.front() == ys.back())
    throw Error(ErrorCode::degenerate_fit, "all values are identical; the decay constant is undefined");

  // Ordinary least squares of ln(y) on the rank.
  const auto n = static_cast<double>(ys.size());
  const double mean_x = (n - 1.0) / 2.0;
  double mean_ly = 0.0;
  for (double y : ys) mean_ly += std::log(y);
  mean_ly /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    const double dx = static_cast<double>(i) - mean_x;
    sxx += dx * dx;
    sxy += dx * (std::log(ys[i]) - mean_ly);
  }
  const double slope = sxy / sxx;
  if (slope == 0.0)
    throw Error(ErrorCode::degenerate_fit, "fitted slope is zero; the decay constant is undefined");
  const double intercept = mean_ly - slope * mean_x;

  fit.amplitude = std::exp(intercept);
  fit.decay = 1.0 / slope;
  fit.n_points = ys.size();

  double mean_y = 0.0, mean_f = 0.0;
  std::vector<double> fitted(ys.size());
  for (std::size_t i = 0; i < ys.size(); ++i) {
    fitted[i] = fit.amplitude * std::exp(static_cast<double>(i) / fit.decay);
    mean_y += ys[i];
    mean_f += fitted[i];
  }
  mean_y /= n;
  mean_f /= n;
  double cov = 0.0, var_y = 0.0, var_f = 0.0;
  for (std::size_t i = 0; i < ys.size(); ++i) {
    cov += (ys[i] - mean_y) * (fitted[i] - mean_f);
    var_y += (ys[i] - mean_y) * (ys[i] - mean_y);
    var_f += (fitted[i] - mean_f) * (fitted[i] - mean_f);
  }
  fit.correlation_rate = cov / std::sqrt(var_y * var_f);
  return fit;
}

}  // namespace mlsn
