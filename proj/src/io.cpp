#include "mlsn/io.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mlsn/clustering.hpp"
#include "mlsn/error.hpp"
#include "mlsn/parallel.hpp"

namespace mlsn {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

template <class T>
std::optional<T> parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  T value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) return std::nullopt;
  return value;
}

Error line_error(ErrorCode code, std::size_t line, const std::string& what) {
  return Error(code, "line " + std::to_string(line) + ": " + what);
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::io, "cannot open '" + path + "'");
  return in;
}

void strip_bom(std::string& line) {
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Rounded to the printed precision so JSON and CSV agree digit for digit.
double printed(double value) { return std::stod(format_number(value)); }

ordered_json summary_json(const MeasureSummary& s) {
  ordered_json j;
  j["min"] = printed(s.min);
  j["max"] = printed(s.max);
  j["mean"] = printed(s.mean);
  j["zero_count"] = s.zero_count;
  return j;
}

}  // namespace

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  if (quoted) throw Error(ErrorCode::parse, "unterminated quoted field");
  fields.push_back(std::move(field));
  return fields;
}

std::optional<std::int64_t> parse_timestamp(std::string_view text) {
  text = trim(text);
  if (auto epoch = parse_number<std::int64_t>(text)) return epoch;

  // YYYY-MM-DD[(T| )HH:MM[:SS]][Z]
  if (text.size() < 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  auto y = parse_number<int>(text.substr(0, 4));
  auto mo = parse_number<unsigned>(text.substr(5, 2));
  auto d = parse_number<unsigned>(text.substr(8, 2));
  if (!y || !mo || !d) return std::nullopt;
  const std::chrono::year_month_day date{std::chrono::year{*y}, std::chrono::month{*mo},
                                         std::chrono::day{*d}};
  if (!date.ok()) return std::nullopt;
  std::int64_t seconds = std::chrono::sys_days(date).time_since_epoch() / std::chrono::seconds(1);

  std::string_view rest = text.substr(10);
  if (!rest.empty() && rest.back() == 'Z') rest.remove_suffix(1);
  if (rest.empty()) return seconds;
  if (rest.front() != 'T' && rest.front() != ' ') return std::nullopt;
  rest.remove_prefix(1);
  if (rest.size() != 5 && rest.size() != 8) return std::nullopt;
  auto hh = parse_number<int>(rest.substr(0, 2));
  auto mm = parse_number<int>(rest.substr(3, 2));
  auto ss = rest.size() == 8 ? parse_number<int>(rest.substr(6, 2)) : std::optional<int>(0);
  if (rest[2] != ':' || (rest.size() == 8 && rest[5] != ':')) return std::nullopt;
  if (!hh || !mm || !ss || *hh > 23 || *mm > 59 || *ss > 60 || *hh < 0 || *mm < 0 || *ss < 0)
    return std::nullopt;
  return seconds + *hh * 3600 + *mm * 60 + *ss;
}

std::optional<std::int64_t> parse_duration(std::string_view text) {
  text = trim(text);
  if (text.empty()) return std::nullopt;
  std::int64_t unit = 1;
  switch (text.back()) {
    case 's': unit = 1; break;
    case 'm': unit = 60; break;
    case 'h': unit = 3600; break;
    case 'd': unit = 86400; break;
    default: unit = 0;
  }
  if (unit != 0) text.remove_suffix(1);
  else unit = 1;
  auto n = parse_number<std::int64_t>(text);
  if (!n || *n < 0) return std::nullopt;
  return *n * unit;
}

std::vector<EdgeEvent> parse_edge_csv(std::istream& in, bool has_header) {
  int col_source = 0, col_target = 1, col_layer = 2, col_weight = 3, col_time = 4;
  std::vector<EdgeEvent> events;
  std::string line;
  std::size_t line_no = 0;
  bool header_pending = has_header;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) strip_bom(line);
    if (trim(line).empty()) continue;
    std::vector<std::string> fields;
    try {
      fields = split_csv_line(line);
    } catch (const Error& e) {
      throw line_error(ErrorCode::parse, line_no, e.what());
    }

    if (header_pending) {
      header_pending = false;
      col_source = col_target = col_layer = col_weight = col_time = -1;
      for (std::size_t i = 0; i < fields.size(); ++i) {
        const std::string name = lower(trim(fields[i]));
        const int c = static_cast<int>(i);
        if (name == "source") col_source = c;
        else if (name == "target") col_target = c;
        else if (name == "layer") col_layer = c;
        else if (name == "weight") col_weight = c;
        else if (name == "timestamp") col_time = c;
      }
      if (col_source < 0 || col_target < 0 || col_layer < 0)
        throw line_error(ErrorCode::parse, line_no,
                         "header must name source, target and layer columns");
      continue;
    }

    auto field = [&](int col) -> std::string_view {
      if (col < 0 || static_cast<std::size_t>(col) >= fields.size()) return {};
      return trim(fields[static_cast<std::size_t>(col)]);
    };
    const int needed = std::max({col_source, col_target, col_layer});
    if (static_cast<int>(fields.size()) <= needed)
      throw line_error(ErrorCode::parse, line_no,
                       "expected at least " + std::to_string(needed + 1) + " fields, got " +
                           std::to_string(fields.size()));

    EdgeEvent e;
    e.source = field(col_source);
    e.target = field(col_target);
    e.layer = field(col_layer);
    if (e.source.empty() || e.target.empty() || e.layer.empty())
      throw line_error(ErrorCode::parse, line_no, "source, target and layer must be non-empty");
    if (e.source == e.target)
      throw line_error(ErrorCode::validation, line_no, "loop edge on node '" + e.source + "'");

    if (std::string_view w = field(col_weight); !w.empty()) {
      auto parsed = parse_number<double>(w);
      if (!parsed || !std::isfinite(*parsed))
        throw line_error(ErrorCode::parse, line_no, "malformed weight '" + std::string(w) + "'");
      if (*parsed < 0.0)
        throw line_error(ErrorCode::validation, line_no,
                         "negative weight '" + std::string(w) + "'");
      e.weight = *parsed;
    }
    if (std::string_view t = field(col_time); !t.empty()) {
      e.timestamp = parse_timestamp(t);
      if (!e.timestamp)
        throw line_error(ErrorCode::parse, line_no, "malformed timestamp '" + std::string(t) + "'");
    }
    events.push_back(std::move(e));
  }
  return events;
}

std::vector<EdgeEvent> parse_edge_file(const std::string& path, bool has_header) {
  std::ifstream in = open_input(path);
  return parse_edge_csv(in, has_header);
}

std::vector<double> parse_values_file(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  int value_col = -1;
  bool first = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) strip_bom(line);
    if (trim(line).empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    if (first) {
      first = false;
      for (std::size_t i = 0; i < fields.size(); ++i)
        if (lower(trim(fields[i])) == "value") value_col = static_cast<int>(i);
      if (value_col >= 0) continue;
      if (fields.size() != 1)
        throw line_error(ErrorCode::parse, line_no,
                         "expected one number per line or a CSV with a 'value' column");
      value_col = 0;
    }
    if (static_cast<std::size_t>(value_col) >= fields.size())
      throw line_error(ErrorCode::parse, line_no, "missing value field");
    auto v = parse_number<double>(fields[static_cast<std::size_t>(value_col)]);
    if (!v) throw line_error(ErrorCode::parse, line_no, "malformed number");
    values.push_back(*v);
  }
  return values;
}

std::vector<NodeId> parse_roster_file(const std::string& path) {
  std::ifstream in = open_input(path);
  std::vector<NodeId> roster;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    if (++line_no == 1) strip_bom(line);
    if (trim(line).empty()) continue;
    std::string id(trim(split_csv_line(line).front()));
    if (!id.empty()) roster.push_back(std::move(id));
  }
  return roster;
}

std::string format_number(double value) {
  if (value == 0.0) return "0";
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  char buf[64];
  // Round to 12 significant digits first, then print that value in positional
  // form with trailing zeros removed, falling back to exponent form for
  // magnitudes where positional output would get long.
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::scientific, 11);
  std::string sci(buf, end);
  const int exponent = std::stoi(sci.substr(sci.find('e') + 1));
  std::string out;
  if (exponent >= -9 && exponent < 15) {
    const double rounded = std::stod(sci);
    auto [fend, fec] = std::to_chars(buf, buf + sizeof buf, rounded, std::chars_format::fixed,
                                     std::max(0, 11 - exponent));
    out.assign(buf, fend);
    if (out.find('.') != std::string::npos) {
      while (out.back() == '0') out.pop_back();
      if (out.back() == '.') out.pop_back();
    }
  } else {
    const std::size_t e = sci.find('e');
    std::string mantissa = sci.substr(0, e);
    if (mantissa.find('.') != std::string::npos) {
      while (mantissa.back() == '0') mantissa.pop_back();
      if (mantissa.back() == '.') mantissa.pop_back();
    }
    out = mantissa + "e" + std::to_string(exponent);
  }
  return out;
}

Metric parse_metric(std::string_view name) {
  static const std::map<std::string_view, Metric> names = {
      {"dc", Metric::dc},           {"idc", Metric::idc},
      {"odc", Metric::odc},         {"clcc", Metric::clcc},
      {"cdc", Metric::cdc},         {"cdc-in", Metric::cdc_in},
      {"cdc-out", Metric::cdc_out}, {"mdc1", Metric::mdc1},
      {"mdc1-in", Metric::mdc1_in}, {"mdc1-out", Metric::mdc1_out},
      {"mdc2", Metric::mdc2},       {"mdc2-in", Metric::mdc2_in},
      {"mdc2-out", Metric::mdc2_out}, {"mdc3", Metric::mdc3},
      {"mdc3-in", Metric::mdc3_in}, {"mdc3-out", Metric::mdc3_out},
  };
  auto it = names.find(name);
  if (it == names.end())
    throw Error(ErrorCode::invalid_argument, "unknown metric '" + std::string(name) + "'");
  return it->second;
}

const char* to_string(Metric m) noexcept {
  switch (m) {
    case Metric::dc: return "dc";
    case Metric::idc: return "idc";
    case Metric::odc: return "odc";
    case Metric::clcc: return "clcc";
    case Metric::cdc: return "cdc";
    case Metric::cdc_in: return "cdc-in";
    case Metric::cdc_out: return "cdc-out";
    case Metric::mdc1: return "mdc1";
    case Metric::mdc1_in: return "mdc1-in";
    case Metric::mdc1_out: return "mdc1-out";
    case Metric::mdc2: return "mdc2";
    case Metric::mdc2_in: return "mdc2-in";
    case Metric::mdc2_out: return "mdc2-out";
    case Metric::mdc3: return "mdc3";
    case Metric::mdc3_in: return "mdc3-in";
    case Metric::mdc3_out: return "mdc3-out";
  }
  return "unknown";
}

bool metric_requires_alpha(Metric m) noexcept {
  return m == Metric::clcc || m == Metric::cdc || m == Metric::cdc_in || m == Metric::cdc_out;
}

bool metric_is_single_layer(Metric m) noexcept {
  return m == Metric::dc || m == Metric::idc || m == Metric::odc;
}

MeasureSummary summarize(const std::vector<MeasureRow>& rows) {
  MeasureSummary s;
  if (rows.empty()) return s;
  s.min = s.max = rows.front().value;
  double total = 0.0;
  for (const MeasureRow& r : rows) {
    s.min = std::min(s.min, r.value);
    s.max = std::max(s.max, r.value);
    total += r.value;
    s.zero_count += r.value == 0.0;
  }
  s.mean = total / static_cast<double>(rows.size());
  return s;
}

MeasureReport compute_measure(const MultiLayerNetwork& net, const MeasureRequest& request) {
  const Metric m = request.metric;
  if (metric_requires_alpha(m)) {
    if (!request.alpha)
      throw Error(ErrorCode::invalid_argument,
                  std::string("metric '") + to_string(m) + "' requires alpha");
    check_alpha(*request.alpha);
  }

  MeasureReport report;
  report.measure = to_string(m);
  if (metric_requires_alpha(m)) report.alpha = request.alpha;

  std::optional<MultiLayerNetwork> view;
  if (metric_is_single_layer(m)) {
    if (request.layer) {
      view = layer_view(net, *request.layer);
    } else if (net.layer_count() != 1) {
      throw Error(ErrorCode::contract_violation,
                  std::string("metric '") + to_string(m) +
                      "' is defined on a single layer; choose one with a layer argument");
    }
  }
  const MultiLayerNetwork& target = view ? *view : net;

  std::vector<double> values(target.node_count(), 0.0);
  const int alpha = request.alpha.value_or(1);
  auto eval = [&](NodeIndex x) -> double {
    switch (m) {
      case Metric::dc: return degree_centrality(target, x, Direction::both, request.weighted);
      case Metric::idc: return degree_centrality(target, x, Direction::in, request.weighted);
      case Metric::odc: return degree_centrality(target, x, Direction::out, request.weighted);
      case Metric::clcc: return clcc(target, x, alpha, request.variant);
      case Metric::cdc: return cdc(target, x, alpha, Direction::both, request.variant);
      case Metric::cdc_in: return cdc(target, x, alpha, Direction::in, request.variant);
      case Metric::cdc_out: return cdc(target, x, alpha, Direction::out, request.variant);
      case Metric::mdc1: return mdc(target, MdcVersion::v1, x, Direction::both);
      case Metric::mdc1_in: return mdc(target, MdcVersion::v1, x, Direction::in);
      case Metric::mdc1_out: return mdc(target, MdcVersion::v1, x, Direction::out);
      case Metric::mdc2: return mdc(target, MdcVersion::v2, x, Direction::both);
      case Metric::mdc2_in: return mdc(target, MdcVersion::v2, x, Direction::in);
      case Metric::mdc2_out: return mdc(target, MdcVersion::v2, x, Direction::out);
      case Metric::mdc3: return mdc(target, MdcVersion::v3, x, Direction::both);
      case Metric::mdc3_in: return mdc(target, MdcVersion::v3, x, Direction::in);
      case Metric::mdc3_out: return mdc(target, MdcVersion::v3, x, Direction::out);
    }
    return 0.0;
  };
  parallel_for(target.node_count(),
               [&](std::size_t i) { values[i] = eval(static_cast<NodeIndex>(i)); });

  report.rows.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    report.rows.push_back({target.node_id(static_cast<NodeIndex>(i)), values[i]});
  report.summary = summarize(report.rows);
  return report;
}

Format parse_format(std::string_view name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw Error(ErrorCode::invalid_argument, "unknown format '" + std::string(name) + "'");
}

std::string measure_to_csv(const MeasureReport& report) {
  std::string out = "measure,alpha,node,value\n";
  const std::string alpha = report.alpha ? std::to_string(*report.alpha) : "";
  for (const MeasureRow& row : report.rows)
    out += csv_field(report.measure) + "," + alpha + "," + csv_field(row.node) + "," +
           format_number(row.value) + "\n";
  return out;
}

std::string measure_to_json(const MeasureReport& report) {
  ordered_json j;
  j["measure"] = report.measure;
  j["alpha"] = report.alpha ? ordered_json(*report.alpha) : ordered_json(nullptr);
  j["rows"] = ordered_json::array();
  for (const MeasureRow& row : report.rows)
    j["rows"].push_back(ordered_json{{"node", row.node}, {"value", printed(row.value)}});
  j["summary"] = summary_json(report.summary);
  return j.dump(2) + "\n";
}

MeasureReport measure_from_csv(std::string_view text) {
  MeasureReport report;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) {
      if (trim(line) != "measure,alpha,node,value")
        throw line_error(ErrorCode::parse, 1, "unexpected measure report header");
      continue;
    }
    if (trim(line).empty()) continue;
    const auto fields = split_csv_line(line);
    if (fields.size() != 4) throw line_error(ErrorCode::parse, line_no, "expected 4 fields");
    report.measure = fields[0];
    report.alpha = fields[1].empty() ? std::nullopt : parse_number<int>(fields[1]);
    auto value = parse_number<double>(fields[3]);
    if (!value) throw line_error(ErrorCode::parse, line_no, "malformed value");
    report.rows.push_back({fields[2], *value});
  }
  report.summary = summarize(report.rows);
  return report;
}

std::string neighbourhood_to_json(std::string_view node, Variant variant, int alpha,
                                  const NodeSet& members) {
  ordered_json j;
  j["node"] = node;
  j["variant"] = to_string(variant);
  j["alpha"] = alpha;
  j["members"] = members;
  return j.dump(2) + "\n";
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
  std::string out = "alpha,mn_nonempty,cdc_nonzero,clcc_nonzero\n";
  for (const SweepRow& r : rows)
    out += std::to_string(r.alpha) + "," + std::to_string(r.mn_nonempty) + "," +
           std::to_string(r.cdc_nonzero) + "," + std::to_string(r.clcc_nonzero) + "\n";
  return out;
}

std::string sweep_to_json(const std::vector<SweepRow>& rows) {
  ordered_json j = ordered_json::array();
  for (const SweepRow& r : rows)
    j.push_back(ordered_json{{"alpha", r.alpha},
                             {"mn_nonempty", r.mn_nonempty},
                             {"cdc_nonzero", r.cdc_nonzero},
                             {"clcc_nonzero", r.clcc_nonzero}});
  return j.dump(2) + "\n";
}

WindowTable window_table(const WindowPartition& part, int max_alpha, Variant variant,
                         const std::vector<NodeId>& roster) {
  check_alpha(max_alpha);
  WindowTable table;
  table.window_count = static_cast<int>(part.windows.size());
  table.events_per_window = part.event_counts;
  table.dropped_events = part.dropped_events;
  const std::vector<std::uint64_t> order = combination_order(table.window_count);
  table.labels.push_back("none");
  for (std::uint64_t mask : order)
    table.labels.push_back(combination_label(mask, table.window_count));
  table.counts.assign(table.labels.size(), {});
  for (int alpha = 1; alpha <= max_alpha; ++alpha) {
    table.alphas.push_back(alpha);
    const CombinationCounts counts =
        combination_counts(activity_profile(part, alpha, variant), roster);
    table.counts[0].push_back(counts.no_active);
    for (std::size_t i = 1; i < table.labels.size(); ++i)
      table.counts[i].push_back(counts.counts.at(table.labels[i]));
  }
  return table;
}

std::string window_table_to_csv(const WindowTable& table) {
  std::string out = "combination";
  for (int a : table.alphas) out += ",alpha_" + std::to_string(a);
  out += "\n";
  for (std::size_t i = 0; i < table.labels.size(); ++i) {
    out += table.labels[i];
    for (std::size_t c : table.counts[i]) out += "," + std::to_string(c);
    out += "\n";
  }
  return out;
}

std::string window_table_to_json(const WindowTable& table) {
  ordered_json j;
  j["window_count"] = table.window_count;
  j["events_per_window"] = table.events_per_window;
  j["dropped_events"] = table.dropped_events;
  j["alphas"] = table.alphas;
  j["rows"] = ordered_json::array();
  for (std::size_t i = 0; i < table.labels.size(); ++i)
    j["rows"].push_back(ordered_json{{"combination", table.labels[i]}, {"counts", table.counts[i]}});
  return j.dump(2) + "\n";
}

std::string histogram_to_csv(const Histogram& h) {
  std::string out = "range,frequency,cumulative_percent\n";
  for (std::size_t i = 0; i < h.counts.size(); ++i)
    out += format_number(h.bin_upper_edges[i]) + "," + std::to_string(h.counts[i]) + "," +
           format_number(h.cumulative_percent[i]) + "\n";
  return out;
}

std::string histogram_to_json(const Histogram& h) {
  ordered_json j;
  ordered_json edges = ordered_json::array(), cumulative = ordered_json::array();
  for (double e : h.bin_upper_edges) edges.push_back(printed(e));
  for (double c : h.cumulative_percent) cumulative.push_back(printed(c));
  j["bin_upper_edges"] = edges;
  j["counts"] = h.counts;
  j["cumulative_percent"] = cumulative;
  return j.dump(2) + "\n";
}

std::string fit_to_json(const FitResult& fit) {
  ordered_json j;
  j["A"] = printed(fit.amplitude);
  j["t"] = printed(fit.decay);
  j["correlation_rate"] = printed(fit.correlation_rate);
  j["n_points"] = fit.n_points;
  j["excluded"] = fit.excluded;
  return j.dump(2) + "\n";
}

}  // namespace mlsn
