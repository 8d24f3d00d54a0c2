// Command-line front end. Everything goes through the C API in mlsn/mlsn.h.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mlsn/mlsn.h"

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitUsage = 2;

// Thrown after a failing C call; carries the status for exit-code mapping.
struct ApiFailure {
  mlsn_status status;
};

void check(mlsn_status status) {
  if (status != MLSN_OK) throw ApiFailure{status};
}

struct EventsDeleter {
  void operator()(mlsn_events* e) const { mlsn_events_free(e); }
};
struct NetworkDeleter {
  void operator()(mlsn_network* n) const { mlsn_network_free(n); }
};
struct NodeSetDeleter {
  void operator()(mlsn_node_set* s) const { mlsn_node_set_free(s); }
};
using EventsPtr = std::unique_ptr<mlsn_events, EventsDeleter>;
using NetworkPtr = std::unique_ptr<mlsn_network, NetworkDeleter>;
using NodeSetPtr = std::unique_ptr<mlsn_node_set, NodeSetDeleter>;

const std::map<std::string, mlsn_variant> kVariants = {
    {"in", MLSN_VARIANT_IN},         {"out", MLSN_VARIANT_OUT},
    {"inoutany", MLSN_VARIANT_IN_OUT_ANY}, {"inout", MLSN_VARIANT_IN_OUT},
    {"any", MLSN_VARIANT_ANY}};
const std::map<std::string, mlsn_dedup_policy> kPolicies = {
    {"sum", MLSN_DEDUP_SUM}, {"max", MLSN_DEDUP_MAX},
    {"last", MLSN_DEDUP_LAST}, {"error", MLSN_DEDUP_ERROR}};
const std::map<std::string, mlsn_format> kFormats = {{"csv", MLSN_FORMAT_CSV},
                                                     {"json", MLSN_FORMAT_JSON}};

void print_and_free(char* text) {
  std::fputs(text, stdout);
  mlsn_string_free(text);
}

EventsPtr read_events(const std::string& path) {
  mlsn_events* raw = nullptr;
  check(mlsn_events_read_csv(path.c_str(), 1, &raw));
  return EventsPtr(raw);
}

NetworkPtr load_network(const std::string& path, mlsn_dedup_policy policy, bool normalize) {
  EventsPtr events = read_events(path);
  mlsn_network* raw = nullptr;
  check(mlsn_network_build(events.get(), policy, &raw));
  NetworkPtr net(raw);
  if (normalize) {
    mlsn_network* normalized = nullptr;
    check(mlsn_network_normalize(net.get(), &normalized));
    net.reset(normalized);
  }
  return net;
}

std::vector<double> read_values(const std::string& path) {
  double* raw = nullptr;
  size_t n = 0;
  check(mlsn_read_values(path.c_str(), &raw, &n));
  std::vector<double> values(raw, raw + n);
  mlsn_values_free(raw);
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-layered social network analysis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(mlsn_version()));

  std::string edges_path, values_path, node, metric, layer, roster_path;
  std::string variant = "any", dedup = "sum", format = "csv";
  std::string start_text, length_text = "90d";
  std::optional<int> alpha;
  int max_alpha = 1, window_count = 5;
  bool normalize = false, weighted = false;
  std::vector<double> bin_edges;

  auto add_edges = [&](CLI::App* cmd) {
    cmd->add_option("--edges", edges_path, "CSV edge list (source,target,layer,weight,timestamp)")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--dedup", dedup, "Duplicate edge policy")
        ->check(CLI::IsMember({"sum", "max", "last", "error"}));
  };
  auto add_variant = [&](CLI::App* cmd) {
    cmd->add_option("--variant", variant, "Neighbourhood variant")
        ->check(CLI::IsMember({"in", "out", "inoutany", "inout", "any"}));
  };

  auto* nb = app.add_subcommand("neighbourhood", "Multi-layered neighbourhood of one node (JSON)");
  add_edges(nb);
  nb->add_option("--node", node, "Node identifier")->required();
  add_variant(nb);
  nb->add_option("--alpha", alpha, "Minimum number of layers")->required();

  auto* measure = app.add_subcommand("measure", "Per-node measure report");
  add_edges(measure);
  measure->add_option("--metric", metric, "dc|idc|odc|clcc|cdc[-in|-out]|mdc{1,2,3}[-in|-out]")
      ->required();
  measure->add_option("--alpha", alpha, "Minimum number of layers (clcc and cdc family)");
  measure->add_option("--layer", layer, "Layer for dc/idc/odc");
  measure->add_flag("--normalize", normalize, "Out-normalize weights per node and layer first");
  measure->add_flag("--weighted", weighted, "dc/idc/odc: sum weights instead of counting");
  add_variant(measure);
  auto* measure_format =
      measure->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  auto* sweep = app.add_subcommand("sweep", "Counts of non-empty MN and non-zero CDC/CLCC per alpha");
  add_edges(sweep);
  sweep->add_option("--max-alpha", max_alpha, "Largest alpha")->required();
  sweep->add_flag("--normalize", normalize, "Out-normalize weights first");
  auto* sweep_format =
      sweep->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  auto* windows = app.add_subcommand("windows", "Window-combination activity counts");
  add_edges(windows);
  windows->add_option("--start", start_text, "Start instant (epoch seconds or ISO-8601; default: earliest event)");
  windows->add_option("--length", length_text, "Window length (seconds or Nd/Nh/Nm/Ns)");
  windows->add_option("--count", window_count, "Number of windows");
  windows->add_option("--alpha", alpha, "Report alpha = 1..K");
  windows->add_option("--roster", roster_path, "Extra node universe, one id per line")
      ->check(CLI::ExistingFile);
  add_variant(windows);
  auto* windows_format =
      windows->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  auto* hist = app.add_subcommand("hist", "Histogram with cumulative percentages");
  hist->add_option("--values", values_path, "Values file")->required()->check(CLI::ExistingFile);
  hist->add_option("--edges-list", bin_edges, "Bin upper edges (strictly increasing)");
  auto* hist_format =
      hist->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  auto* fit = app.add_subcommand("fit", "Exponential decay fit A*exp(x/t) of sorted values (JSON)");
  fit->add_option("--values", values_path, "Values file")->required()->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  auto usage = [&](const std::string& message) {
    std::cerr << "mlsn: usage error: " << message << "\n";
    return kExitUsage;
  };
  auto chosen_format = [&](CLI::Option* opt, mlsn_format fallback) {
    return opt->count() > 0 ? kFormats.at(format) : fallback;
  };

  try {
    const mlsn_dedup_policy policy = kPolicies.at(dedup);
    const mlsn_variant chosen_variant = kVariants.at(variant);
    char* text = nullptr;

    if (nb->parsed()) {
      NetworkPtr net = load_network(edges_path, policy, false);
      check(mlsn_render_neighbourhood(net.get(), node.c_str(), chosen_variant, *alpha, &text));
    } else if (measure->parsed()) {
      const int needs_alpha = mlsn_metric_requires_alpha(metric.c_str());
      if (needs_alpha < 0) return usage("unknown metric '" + metric + "'");
      if (needs_alpha == 1 && !alpha) return usage("--metric " + metric + " requires --alpha");
      NetworkPtr net = load_network(edges_path, policy, normalize);
      mlsn_measure_options options;
      mlsn_measure_options_init(&options);
      options.metric = metric.c_str();
      options.alpha = alpha.value_or(0);
      options.layer = layer.empty() ? nullptr : layer.c_str();
      options.variant = chosen_variant;
      options.weighted = weighted ? 1 : 0;
      check(mlsn_render_measure(net.get(), &options, chosen_format(measure_format, MLSN_FORMAT_CSV),
                                &text));
    } else if (sweep->parsed()) {
      NetworkPtr net = load_network(edges_path, policy, normalize);
      check(mlsn_render_sweep(net.get(), max_alpha, chosen_format(sweep_format, MLSN_FORMAT_CSV),
                              &text));
    } else if (windows->parsed()) {
      EventsPtr events = read_events(edges_path);
      mlsn_window_options options;
      mlsn_window_options_init(&options);
      if (start_text.empty())
        check(mlsn_events_min_timestamp(events.get(), &options.start));
      else
        check(mlsn_parse_timestamp(start_text.c_str(), &options.start));
      check(mlsn_parse_duration(length_text.c_str(), &options.length));
      options.count = window_count;
      options.max_alpha = alpha.value_or(1);
      options.variant = chosen_variant;
      options.dedup = policy;
      NodeSetPtr roster;
      if (!roster_path.empty()) {
        mlsn_node_set* raw = nullptr;
        check(mlsn_read_roster(roster_path.c_str(), &raw));
        roster.reset(raw);
        options.roster = roster.get();
      }
      check(mlsn_render_windows(events.get(), &options,
                                chosen_format(windows_format, MLSN_FORMAT_CSV), &text));
    } else if (hist->parsed()) {
      const std::vector<double> values = read_values(values_path);
      check(mlsn_render_histogram(values.data(), values.size(), bin_edges.data(), bin_edges.size(),
                                  chosen_format(hist_format, MLSN_FORMAT_JSON), &text));
    } else if (fit->parsed()) {
      const std::vector<double> values = read_values(values_path);
      check(mlsn_render_fit(values.data(), values.size(), &text));
    }
    if (text) print_and_free(text);
    return 0;
  } catch (const ApiFailure& failure) {
    std::cerr << "mlsn: " << mlsn_status_string(failure.status) << ": " << mlsn_last_error()
              << "\n";
    return failure.status == MLSN_ERR_INVALID_ARGUMENT ? kExitUsage : kExitValidation;
  }
}
