#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mlsn/centrality.hpp"
#include "mlsn/dynamics.hpp"
#include "mlsn/statistics.hpp"

namespace mlsn {

// ---- ingestion -------------------------------------------------------------

/// Reads edge events from CSV. With a header, columns are matched by name
/// (source, target, layer required; weight, timestamp optional); without one
/// the order is source,target,layer[,weight[,timestamp]]. Errors carry the
/// 1-based line number.
std::vector<EdgeEvent> parse_edge_csv(std::istream& in, bool has_header = true);
std::vector<EdgeEvent> parse_edge_file(const std::string& path, bool has_header = true);

/// Epoch seconds or ISO-8601 UTC ("2012-03-01", "2012-03-01T10:00:00Z").
std::optional<std::int64_t> parse_timestamp(std::string_view text);
/// Seconds, or an integer with an s/m/h/d suffix.
std::optional<std::int64_t> parse_duration(std::string_view text);

/// One number per line, or a CSV with a `value` column (e.g. a measure report).
std::vector<double> parse_values_file(const std::string& path);
/// One node identifier per line, or the first column of a CSV.
std::vector<NodeId> parse_roster_file(const std::string& path);

std::vector<std::string> split_csv_line(std::string_view line);

// ---- number formatting -------------------------------------------------------

/// Shortest decimal form with at most 12 significant digits, locale-free.
std::string format_number(double value);

// ---- measure reports -------------------------------------------------------

enum class Metric {
  dc, idc, odc, clcc,
  cdc, cdc_in, cdc_out,
  mdc1, mdc1_in, mdc1_out,
  mdc2, mdc2_in, mdc2_out,
  mdc3, mdc3_in, mdc3_out,
};

Metric parse_metric(std::string_view name);
const char* to_string(Metric m) noexcept;
bool metric_requires_alpha(Metric m) noexcept;
bool metric_is_single_layer(Metric m) noexcept;

struct MeasureRequest {
  Metric metric = Metric::clcc;
  std::optional<int> alpha;
  std::optional<LayerId> layer;  // dc/idc/odc: restricts to layer_view
  Variant variant = Variant::any;
  bool weighted = false;         // dc/idc/odc: weight sums instead of counts
};

struct MeasureRow {
  NodeId node;
  double value = 0.0;
};

struct MeasureSummary {
  double min = 0.0;
  double max = 0.0;
  double mean = 0.0;
  std::size_t zero_count = 0;
};

struct MeasureReport {
  std::string measure;
  std::optional<int> alpha;
  std::vector<MeasureRow> rows;  // sorted by node
  MeasureSummary summary;
};

MeasureReport compute_measure(const MultiLayerNetwork& net, const MeasureRequest& request);
MeasureSummary summarize(const std::vector<MeasureRow>& rows);

enum class Format { csv, json };
Format parse_format(std::string_view name);

std::string measure_to_csv(const MeasureReport& report);
std::string measure_to_json(const MeasureReport& report);
MeasureReport measure_from_csv(std::string_view text);

// ---- other reports ---------------------------------------------------------

std::string neighbourhood_to_json(std::string_view node, Variant variant, int alpha,
                                  const NodeSet& members);

std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::string sweep_to_json(const std::vector<SweepRow>& rows);

/// Combination label plus one count column per alpha, headed by the
/// no-active row.
struct WindowTable {
  int window_count = 0;
  std::vector<int> alphas;
  std::vector<std::string> labels;                  // "none" first
  std::vector<std::vector<std::size_t>> counts;     // [label][alpha]
  std::vector<std::size_t> events_per_window;
  std::size_t dropped_events = 0;
};

WindowTable window_table(const WindowPartition& part, int max_alpha, Variant variant,
                         const std::vector<NodeId>& roster);
std::string window_table_to_csv(const WindowTable& table);
std::string window_table_to_json(const WindowTable& table);

std::string histogram_to_csv(const Histogram& h);
std::string histogram_to_json(const Histogram& h);
std::string fit_to_json(const FitResult& fit);

}  // namespace mlsn
