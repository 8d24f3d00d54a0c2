#include "mlsn/mlsn.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "mlsn/clustering.hpp"
#include "mlsn/error.hpp"
#include "mlsn/io.hpp"

struct mlsn_events {
  std::vector<mlsn::EdgeEvent> events;
};

struct mlsn_network {
  mlsn::MultiLayerNetwork net;
};

struct mlsn_node_set {
  std::vector<std::string> members;
};

namespace {

thread_local std::string last_error;

mlsn_status to_status(mlsn::ErrorCode code) {
  using mlsn::ErrorCode;
  switch (code) {
    case ErrorCode::validation: return MLSN_ERR_VALIDATION;
    case ErrorCode::duplicate_edge: return MLSN_ERR_DUPLICATE_EDGE;
    case ErrorCode::normalization: return MLSN_ERR_NORMALIZATION;
    case ErrorCode::not_found: return MLSN_ERR_NOT_FOUND;
    case ErrorCode::degenerate_network: return MLSN_ERR_DEGENERATE_NETWORK;
    case ErrorCode::contract_violation: return MLSN_ERR_CONTRACT;
    case ErrorCode::parse: return MLSN_ERR_PARSE;
    case ErrorCode::range: return MLSN_ERR_RANGE;
    case ErrorCode::degenerate_fit: return MLSN_ERR_DEGENERATE_FIT;
    case ErrorCode::insufficient_data: return MLSN_ERR_INSUFFICIENT_DATA;
    case ErrorCode::ingestion: return MLSN_ERR_INGESTION;
    case ErrorCode::invalid_argument: return MLSN_ERR_INVALID_ARGUMENT;
    case ErrorCode::io: return MLSN_ERR_IO;
  }
  return MLSN_ERR_INTERNAL;
}

mlsn_status fail(mlsn_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
mlsn_status guarded(Fn&& fn) {
  try {
    fn();
    return MLSN_OK;
  } catch (const mlsn::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(MLSN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MLSN_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MLSN_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* what) {
  if (!p) throw mlsn::Error(mlsn::ErrorCode::invalid_argument, std::string(what) + " is null");
}

char* to_c_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mlsn::Variant to_variant(mlsn_variant v) {
  switch (v) {
    case MLSN_VARIANT_IN: return mlsn::Variant::in;
    case MLSN_VARIANT_OUT: return mlsn::Variant::out;
    case MLSN_VARIANT_IN_OUT_ANY: return mlsn::Variant::in_out_any;
    case MLSN_VARIANT_IN_OUT: return mlsn::Variant::in_out;
    case MLSN_VARIANT_ANY: return mlsn::Variant::any;
  }
  throw mlsn::Error(mlsn::ErrorCode::invalid_argument, "unknown variant");
}

mlsn::Direction to_direction(mlsn_direction d) {
  switch (d) {
    case MLSN_DIRECTION_BOTH: return mlsn::Direction::both;
    case MLSN_DIRECTION_IN: return mlsn::Direction::in;
    case MLSN_DIRECTION_OUT: return mlsn::Direction::out;
  }
  throw mlsn::Error(mlsn::ErrorCode::invalid_argument, "unknown direction");
}

mlsn::DedupPolicy to_policy(mlsn_dedup_policy p) {
  switch (p) {
    case MLSN_DEDUP_SUM: return mlsn::DedupPolicy::sum;
    case MLSN_DEDUP_MAX: return mlsn::DedupPolicy::max;
    case MLSN_DEDUP_LAST: return mlsn::DedupPolicy::last;
    case MLSN_DEDUP_ERROR: return mlsn::DedupPolicy::error;
  }
  throw mlsn::Error(mlsn::ErrorCode::invalid_argument, "unknown dedup policy");
}

mlsn::MeasureRequest to_request(const mlsn_measure_options* options) {
  require(options, "options");
  require(options->metric, "metric");
  mlsn::MeasureRequest request;
  request.metric = mlsn::parse_metric(options->metric);
  if (options->alpha != 0) request.alpha = options->alpha;
  if (options->layer) request.layer = options->layer;
  request.variant = to_variant(options->variant);
  request.weighted = options->weighted != 0;
  return request;
}

template <class T>
void emit(T** out, T* value) {
  *out = value;
}

}  // namespace

extern "C" {

const char* mlsn_version(void) { return "1.0.0"; }

const char* mlsn_last_error(void) { return last_error.c_str(); }

const char* mlsn_status_string(mlsn_status status) {
  switch (status) {
    case MLSN_OK: return "ok";
    case MLSN_ERR_VALIDATION: return "validation error";
    case MLSN_ERR_DUPLICATE_EDGE: return "duplicate edge";
    case MLSN_ERR_NORMALIZATION: return "normalization error";
    case MLSN_ERR_NOT_FOUND: return "not found";
    case MLSN_ERR_DEGENERATE_NETWORK: return "degenerate network";
    case MLSN_ERR_CONTRACT: return "contract violation";
    case MLSN_ERR_PARSE: return "parse error";
    case MLSN_ERR_RANGE: return "range error";
    case MLSN_ERR_DEGENERATE_FIT: return "degenerate fit";
    case MLSN_ERR_INSUFFICIENT_DATA: return "insufficient data";
    case MLSN_ERR_INGESTION: return "ingestion error";
    case MLSN_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MLSN_ERR_IO: return "i/o error";
    case MLSN_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void mlsn_string_free(char* s) { std::free(s); }

mlsn_status mlsn_events_create(mlsn_events** out) {
  return guarded([&] {
    require(out, "out");
    emit(out, new mlsn_events{});
  });
}

mlsn_status mlsn_events_read_csv(const char* path, int has_header, mlsn_events** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    auto events = mlsn::parse_edge_file(path, has_header != 0);
    emit(out, new mlsn_events{std::move(events)});
  });
}

mlsn_status mlsn_events_add(mlsn_events* events, const char* source, const char* target,
                            const char* layer, double weight, int has_timestamp,
                            int64_t timestamp) {
  return guarded([&] {
    require(events, "events");
    require(source, "source");
    require(target, "target");
    require(layer, "layer");
    if (std::strcmp(source, target) == 0)
      throw mlsn::Error(mlsn::ErrorCode::validation,
                        "loop edge on node '" + std::string(source) + "'");
    if (!(weight >= 0.0))
      throw mlsn::Error(mlsn::ErrorCode::validation, "weight must be non-negative");
    mlsn::EdgeEvent e{source, target, layer, weight, std::nullopt};
    if (has_timestamp) e.timestamp = timestamp;
    events->events.push_back(std::move(e));
  });
}

size_t mlsn_events_size(const mlsn_events* events) { return events ? events->events.size() : 0; }

mlsn_status mlsn_events_min_timestamp(const mlsn_events* events, int64_t* out) {
  return guarded([&] {
    require(events, "events");
    require(out, "out");
    std::optional<std::int64_t> best;
    for (const auto& e : events->events)
      if (e.timestamp && (!best || *e.timestamp < *best)) best = e.timestamp;
    if (!best)
      throw mlsn::Error(mlsn::ErrorCode::insufficient_data, "no event carries a timestamp");
    *out = *best;
  });
}

void mlsn_events_free(mlsn_events* events) { delete events; }

mlsn_status mlsn_network_build(const mlsn_events* events, mlsn_dedup_policy policy,
                               mlsn_network** out) {
  return guarded([&] {
    require(events, "events");
    require(out, "out");
    auto net = mlsn::build_network(events->events, to_policy(policy));
    emit(out, new mlsn_network{std::move(net)});
  });
}

mlsn_status mlsn_network_normalize(const mlsn_network* net, mlsn_network** out) {
  return guarded([&] {
    require(net, "net");
    require(out, "out");
    emit(out, new mlsn_network{mlsn::normalize_out_weights(net->net)});
  });
}

mlsn_status mlsn_network_layer_view(const mlsn_network* net, const char* layer,
                                    mlsn_network** out) {
  return guarded([&] {
    require(net, "net");
    require(layer, "layer");
    require(out, "out");
    emit(out, new mlsn_network{mlsn::layer_view(net->net, layer)});
  });
}

void mlsn_network_free(mlsn_network* net) { delete net; }

size_t mlsn_network_node_count(const mlsn_network* net) { return net ? net->net.node_count() : 0; }
size_t mlsn_network_layer_count(const mlsn_network* net) {
  return net ? net->net.layer_count() : 0;
}
size_t mlsn_network_edge_count(const mlsn_network* net) { return net ? net->net.edge_count() : 0; }

const char* mlsn_network_node_id(const mlsn_network* net, size_t index) {
  if (!net || index >= net->net.node_count()) return nullptr;
  return net->net.nodes()[index].c_str();
}

const char* mlsn_network_layer_id(const mlsn_network* net, size_t index) {
  if (!net || index >= net->net.layer_count()) return nullptr;
  return net->net.layers()[index].c_str();
}

mlsn_status mlsn_network_weight(const mlsn_network* net, const char* source, const char* target,
                                const char* layer, double* out) {
  return guarded([&] {
    require(net, "net");
    require(source, "source");
    require(target, "target");
    require(layer, "layer");
    require(out, "out");
    const auto& n = net->net;
    *out = n.weight(n.node_index(source), n.node_index(target), n.layer_index(layer));
  });
}

size_t mlsn_node_set_size(const mlsn_node_set* set) { return set ? set->members.size() : 0; }

const char* mlsn_node_set_at(const mlsn_node_set* set, size_t index) {
  if (!set || index >= set->members.size()) return nullptr;
  return set->members[index].c_str();
}

void mlsn_node_set_free(mlsn_node_set* set) { delete set; }

mlsn_status mlsn_neighbourhood(const mlsn_network* net, const char* node, const char* layer,
                               mlsn_node_set** out) {
  return guarded([&] {
    require(net, "net");
    require(node, "node");
    require(layer, "layer");
    require(out, "out");
    emit(out, new mlsn_node_set{mlsn::neighbourhood(net->net, node, layer)});
  });
}

mlsn_status mlsn_multilayer_neighbourhood(const mlsn_network* net, const char* node,
                                          mlsn_variant variant, int alpha,
                                          mlsn_node_set** out) {
  return guarded([&] {
    require(net, "net");
    require(node, "node");
    require(out, "out");
    emit(out, new mlsn_node_set{
                  mlsn::multilayer_neighbourhood(net->net, node, alpha, to_variant(variant))});
  });
}

mlsn_status mlsn_clcc(const mlsn_network* net, const char* node, int alpha, mlsn_variant variant,
                      double* out) {
  return guarded([&] {
    require(net, "net");
    require(node, "node");
    require(out, "out");
    *out = mlsn::clcc(net->net, net->net.node_index(node), alpha, to_variant(variant));
  });
}

mlsn_status mlsn_cdc(const mlsn_network* net, const char* node, int alpha,
                     mlsn_direction direction, mlsn_variant variant, double* out) {
  return guarded([&] {
    require(net, "net");
    require(node, "node");
    require(out, "out");
    *out = mlsn::cdc(net->net, std::string_view(node), alpha, to_direction(direction),
                     to_variant(variant));
  });
}

mlsn_status mlsn_mdc(const mlsn_network* net, int version, const char* node,
                     mlsn_direction direction, double* out) {
  return guarded([&] {
    require(net, "net");
    require(node, "node");
    require(out, "out");
    if (version < 1 || version > 3)
      throw mlsn::Error(mlsn::ErrorCode::invalid_argument, "mdc version must be 1, 2 or 3");
    *out = mlsn::mdc(net->net, static_cast<mlsn::MdcVersion>(version), std::string_view(node),
                     to_direction(direction));
  });
}

mlsn_status mlsn_degree_centrality(const mlsn_network* net, const char* node,
                                   mlsn_direction direction, int weighted, double* out) {
  return guarded([&] {
    require(net, "net");
    require(node, "node");
    require(out, "out");
    *out = mlsn::degree_centrality(net->net, std::string_view(node), to_direction(direction),
                                   weighted != 0);
  });
}

void mlsn_measure_options_init(mlsn_measure_options* options) {
  if (!options) return;
  options->metric = "clcc";
  options->alpha = 0;
  options->layer = nullptr;
  options->variant = MLSN_VARIANT_ANY;
  options->weighted = 0;
}

int mlsn_metric_requires_alpha(const char* metric) {
  if (!metric) return -1;
  try {
    return mlsn::metric_requires_alpha(mlsn::parse_metric(metric)) ? 1 : 0;
  } catch (const mlsn::Error&) {
    return -1;
  }
}

mlsn_status mlsn_measure_values(const mlsn_network* net, const mlsn_measure_options* options,
                                double* values, size_t capacity) {
  return guarded([&] {
    require(net, "net");
    const auto report = mlsn::compute_measure(net->net, to_request(options));
    if (capacity < report.rows.size())
      throw mlsn::Error(mlsn::ErrorCode::invalid_argument,
                        "value buffer holds " + std::to_string(capacity) + " entries, need " +
                            std::to_string(report.rows.size()));
    require(values, "values");
    for (std::size_t i = 0; i < report.rows.size(); ++i) values[i] = report.rows[i].value;
  });
}

mlsn_status mlsn_fit_exp_decay(const double* values, size_t n, mlsn_fit_result* out) {
  return guarded([&] {
    if (n > 0) require(values, "values");
    require(out, "out");
    const auto fit = mlsn::fit_exp_decay(std::span<const double>(values, n));
    *out = mlsn_fit_result{fit.amplitude, fit.decay, fit.correlation_rate, fit.n_points,
                           fit.excluded};
  });
}

mlsn_status mlsn_read_values(const char* path, double** values, size_t* n) {
  return guarded([&] {
    require(path, "path");
    require(values, "values");
    require(n, "n");
    const auto parsed = mlsn::parse_values_file(path);
    double* buffer = static_cast<double*>(std::malloc(std::max<std::size_t>(1, parsed.size()) *
                                                      sizeof(double)));
    if (!buffer) throw std::bad_alloc();
    std::copy(parsed.begin(), parsed.end(), buffer);
    *values = buffer;
    *n = parsed.size();
  });
}

void mlsn_values_free(double* values) { std::free(values); }

mlsn_status mlsn_read_roster(const char* path, mlsn_node_set** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    emit(out, new mlsn_node_set{mlsn::parse_roster_file(path)});
  });
}

mlsn_status mlsn_parse_timestamp(const char* text, int64_t* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    auto t = mlsn::parse_timestamp(text);
    if (!t)
      throw mlsn::Error(mlsn::ErrorCode::parse, "malformed timestamp '" + std::string(text) + "'");
    *out = *t;
  });
}

mlsn_status mlsn_parse_duration(const char* text, int64_t* out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    auto d = mlsn::parse_duration(text);
    if (!d)
      throw mlsn::Error(mlsn::ErrorCode::parse, "malformed duration '" + std::string(text) + "'");
    *out = *d;
  });
}

mlsn_status mlsn_render_neighbourhood(const mlsn_network* net, const char* node,
                                      mlsn_variant variant, int alpha, char** out) {
  return guarded([&] {
    require(net, "net");
    require(node, "node");
    require(out, "out");
    const auto v = to_variant(variant);
    const auto members = mlsn::multilayer_neighbourhood(net->net, node, alpha, v);
    *out = to_c_string(mlsn::neighbourhood_to_json(node, v, alpha, members));
  });
}

mlsn_status mlsn_render_measure(const mlsn_network* net, const mlsn_measure_options* options,
                                mlsn_format format, char** out) {
  return guarded([&] {
    require(net, "net");
    require(out, "out");
    const auto report = mlsn::compute_measure(net->net, to_request(options));
    *out = to_c_string(format == MLSN_FORMAT_JSON ? mlsn::measure_to_json(report)
                                                  : mlsn::measure_to_csv(report));
  });
}

mlsn_status mlsn_render_sweep(const mlsn_network* net, int max_alpha, mlsn_format format,
                              char** out) {
  return guarded([&] {
    require(net, "net");
    require(out, "out");
    const auto rows = mlsn::alpha_sweep(net->net, max_alpha);
    *out = to_c_string(format == MLSN_FORMAT_JSON ? mlsn::sweep_to_json(rows)
                                                  : mlsn::sweep_to_csv(rows));
  });
}

void mlsn_window_options_init(mlsn_window_options* options) {
  if (!options) return;
  options->start = 0;
  options->length = 90 * 86400;
  options->count = 5;
  options->max_alpha = 1;
  options->variant = MLSN_VARIANT_ANY;
  options->dedup = MLSN_DEDUP_SUM;
  options->roster = nullptr;
}

mlsn_status mlsn_render_windows(const mlsn_events* events, const mlsn_window_options* options,
                                mlsn_format format, char** out) {
  return guarded([&] {
    require(events, "events");
    require(options, "options");
    require(out, "out");
    const auto part = mlsn::partition_windows(events->events, options->start, options->length,
                                              options->count, to_policy(options->dedup));
    std::vector<mlsn::NodeId> roster;
    if (options->roster) roster = options->roster->members;
    const auto table =
        mlsn::window_table(part, options->max_alpha, to_variant(options->variant), roster);
    *out = to_c_string(format == MLSN_FORMAT_JSON ? mlsn::window_table_to_json(table)
                                                  : mlsn::window_table_to_csv(table));
  });
}

mlsn_status mlsn_render_histogram(const double* values, size_t n, const double* edges,
                                  size_t n_edges, mlsn_format format, char** out) {
  return guarded([&] {
    if (n > 0) require(values, "values");
    if (n_edges > 0) require(edges, "edges");
    require(out, "out");
    const std::vector<double> chosen = n_edges > 0 ? std::vector<double>(edges, edges + n_edges)
                                                   : mlsn::default_histogram_edges();
    const auto h = mlsn::histogram(std::span<const double>(values, n), chosen);
    *out = to_c_string(format == MLSN_FORMAT_JSON ? mlsn::histogram_to_json(h)
                                                  : mlsn::histogram_to_csv(h));
  });
}

mlsn_status mlsn_render_fit(const double* values, size_t n, char** out) {
  return guarded([&] {
    if (n > 0) require(values, "values");
    require(out, "out");
    *out = to_c_string(mlsn::fit_to_json(mlsn::fit_exp_decay(std::span<const double>(values, n))));
  });
}

}  // extern "C"
