#include "qwiht/qwiht.h"

#include <new>
#include <string>
#include <vector>

#include "qwiht/cayley.hpp"
#include "qwiht/coin.hpp"
#include "qwiht/config.hpp"
#include "qwiht/error.hpp"
#include "qwiht/measured_walk.hpp"
#include "qwiht/report.hpp"
#include "qwiht/spectral.hpp"
#include "qwiht/walk.hpp"

struct qw_graph {
  qwiht::CayleyGraph value;
};
struct qw_coin {
  qwiht::CoinOperator value;
};
struct qw_walk {
  qwiht::WalkUnitary value;
};
struct qw_decomposition {
  qwiht::EigenspaceDecomposition value;
};
struct qw_iht {
  qwiht::IhtReport value;
  std::vector<double> basis;
};
struct qw_output {
  qwiht::RunOutput value;
};

namespace {

thread_local std::string last_error;

qw_status fail(qw_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
qw_status guarded(F&& body) {
  try {
    body();
    return QW_OK;
  } catch (const qwiht::ConfigError& e) {
    return fail(QW_ERR_CONFIG, e.what());
  } catch (const qwiht::DeadBandError& e) {
    return fail(QW_ERR_DEADBAND, e.what());
  } catch (const qwiht::InvariantError& e) {
    return fail(QW_ERR_INVARIANT, e.what());
  } catch (const qwiht::ArgumentError& e) {
    return fail(QW_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QW_ERR_GENERIC, "out of memory");
  } catch (const std::exception& e) {
    return fail(QW_ERR_GENERIC, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw qwiht::ArgumentError(what);
}

qwiht::WalkState read_state(const double* data, std::size_t n) {
  qwiht::WalkState psi(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) psi[static_cast<Eigen::Index>(i)] = {data[2 * i], data[2 * i + 1]};
  return psi;
}

}  // namespace

extern "C" {

const char* qw_version(void) { return "0.1.0"; }

const char* qw_last_error(void) { return last_error.c_str(); }

const char* qw_status_name(qw_status status) {
  switch (status) {
    case QW_OK: return "ok";
    case QW_ERR_GENERIC: return "error";
    case QW_ERR_CONFIG: return "config error";
    case QW_ERR_DEADBAND: return "dead-band";
    case QW_ERR_INVARIANT: return "invariant violation";
    case QW_ERR_ARGUMENT: return "invalid argument";
  }
  return "unknown";
}

qw_status qw_graph_hypercube(int d, qw_graph** out) {
  return guarded([&] {
    require(out, "out is null");
    *out = new qw_graph{qwiht::CayleyGraph::hypercube(d)};
  });
}

qw_status qw_graph_symmetric(int n, const int* generators, size_t generator_count, qw_graph** out) {
  return guarded([&] {
    require(out && (generators || generator_count == 0), "null pointer argument");
    require(n >= 1, "n must be positive");
    qwiht::GraphSpec spec;
    spec.kind = qwiht::GraphKind::Symmetric;
    spec.name = "S" + std::to_string(n);
    spec.n = n;
    for (size_t g = 0; g < generator_count; ++g) {
      spec.generators.emplace_back(generators + g * static_cast<size_t>(n), generators + (g + 1) * static_cast<size_t>(n));
    }
    *out = new qw_graph{qwiht::build_graph(spec)};
  });
}

qw_status qw_graph_preset(const char* key, qw_graph** out) {
  return guarded([&] {
    require(out && key, "null pointer argument");
    *out = new qw_graph{qwiht::build_graph(qwiht::find_preset(key).spec)};
  });
}

size_t qw_graph_vertex_count(const qw_graph* graph) { return graph ? graph->value.vertex_count() : 0; }

size_t qw_graph_degree(const qw_graph* graph) { return graph ? graph->value.degree() : 0; }

qw_status qw_graph_neighbor(const qw_graph* graph, size_t vertex, size_t label, size_t* out) {
  return guarded([&] {
    require(graph && out, "null pointer argument");
    require(vertex < graph->value.vertex_count() && label < graph->value.degree(), "vertex or label out of range");
    *out = graph->value.neighbor(vertex, label);
  });
}

size_t qw_graph_default_final_vertex(const qw_graph* graph) {
  return graph ? qwiht::default_final_vertex(graph->value) : 0;
}

void qw_graph_free(qw_graph* graph) { delete graph; }

qw_status qw_coin_grover(size_t d, qw_coin** out) {
  return guarded([&] {
    require(out, "out is null");
    *out = new qw_coin{qwiht::CoinOperator::grover(d)};
  });
}

qw_status qw_coin_dft(size_t d, qw_coin** out) {
  return guarded([&] {
    require(out, "out is null");
    *out = new qw_coin{qwiht::CoinOperator::dft(d)};
  });
}

qw_status qw_coin_random(size_t d, uint64_t seed, qw_coin** out) {
  return guarded([&] {
    require(out, "out is null");
    *out = new qw_coin{qwiht::CoinOperator::random_unitary(d, seed)};
  });
}

qw_status qw_coin_custom(size_t d, const double* entries, qw_coin** out) {
  return guarded([&] {
    require(out && entries, "null pointer argument");
    qwiht::Matrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
    for (size_t c = 0; c < d; ++c) {
      for (size_t r = 0; r < d; ++r) {
        const size_t i = c * d + r;
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = {entries[2 * i], entries[2 * i + 1]};
      }
    }
    *out = new qw_coin{qwiht::CoinOperator::custom(m)};
  });
}

size_t qw_coin_dim(const qw_coin* coin) { return coin ? coin->value.dim() : 0; }

qw_status qw_coin_matrix(const qw_coin* coin, double* out, size_t len) {
  return guarded([&] {
    require(coin && out, "null pointer argument");
    const auto& m = coin->value.matrix();
    const auto d = static_cast<size_t>(m.rows());
    require(len >= 2 * d * d, "buffer too small");
    for (size_t c = 0; c < d; ++c) {
      for (size_t r = 0; r < d; ++r) {
        const auto z = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        out[2 * (c * d + r)] = z.real();
        out[2 * (c * d + r) + 1] = z.imag();
      }
    }
  });
}

qw_status qw_coin_cps_count(const qw_coin* coin, double tol, size_t* out) {
  return guarded([&] {
    require(coin && out, "null pointer argument");
    *out = qwiht::cps_enumerate(coin->value, tol > 0 ? tol : qwiht::kDefaultCpsTol).size();
  });
}

void qw_coin_free(qw_coin* coin) { delete coin; }

qw_status qw_walk_build(const qw_graph* graph, const qw_coin* coin, qw_walk** out) {
  return guarded([&] {
    require(graph && coin && out, "null pointer argument");
    *out = new qw_walk{qwiht::WalkUnitary::build(graph->value, coin->value)};
  });
}

size_t qw_walk_size(const qw_walk* walk) { return walk ? walk->value.size() : 0; }

qw_status qw_walk_apply(const qw_walk* walk, const double* in, double* out, size_t n) {
  return guarded([&] {
    require(walk && in && out, "null pointer argument");
    require(n == walk->value.size(), "state length does not match the walk dimension");
    const auto result = walk->value.apply(read_state(in, n));
    for (size_t i = 0; i < n; ++i) {
      out[2 * i] = result[static_cast<Eigen::Index>(i)].real();
      out[2 * i + 1] = result[static_cast<Eigen::Index>(i)].imag();
    }
  });
}

void qw_walk_free(qw_walk* walk) { delete walk; }

qw_status qw_decompose(const qw_walk* walk, double cluster_tol, qw_decomposition** out) {
  return guarded([&] {
    require(walk && out, "null pointer argument");
    *out = new qw_decomposition{qwiht::decompose(walk->value, cluster_tol > 0 ? cluster_tol : qwiht::kDefaultClusterTol)};
  });
}

size_t qw_decomposition_cluster_count(const qw_decomposition* dec) { return dec ? dec->value.clusters.size() : 0; }

qw_status qw_decomposition_cluster(const qw_decomposition* dec, size_t index, double* phase, size_t* multiplicity) {
  return guarded([&] {
    require(dec, "null pointer argument");
    require(index < dec->value.clusters.size(), "cluster index out of range");
    const auto& c = dec->value.clusters[index];
    if (phase) *phase = c.phase;
    if (multiplicity) *multiplicity = c.multiplicity();
  });
}

void qw_decomposition_free(qw_decomposition* dec) { delete dec; }

qw_status qw_iht_compute(const qw_decomposition* dec, const qw_graph* graph, const size_t* final_set,
                         size_t final_count, double rank_tol, qw_iht** out) {
  return guarded([&] {
    require(dec && graph && out && (final_set || final_count == 0), "null pointer argument");
    const auto projector = qwiht::FinalProjector::build(graph->value, {final_set, final_set + final_count});
    require(projector.size() == dec->value.dimension, "graph does not match the decomposition");
    auto report = qwiht::iht_subspace(dec->value, projector, rank_tol > 0 ? rank_tol : qwiht::kDefaultRankTol);
    std::vector<double> basis;
    basis.reserve(static_cast<size_t>(report.basis.size()) * 2);
    for (Eigen::Index c = 0; c < report.basis.cols(); ++c) {
      for (Eigen::Index r = 0; r < report.basis.rows(); ++r) {
        basis.push_back(report.basis(r, c).real());
        basis.push_back(report.basis(r, c).imag());
      }
    }
    *out = new qw_iht{std::move(report), std::move(basis)};
  });
}

size_t qw_iht_total(const qw_iht* iht) { return iht ? iht->value.total : 0; }

size_t qw_iht_row_count(const qw_iht* iht) { return iht ? iht->value.table_rows.size() : 0; }

qw_status qw_iht_row(const qw_iht* iht, size_t index, size_t* count, size_t* dimension, size_t* iht_dimension) {
  return guarded([&] {
    require(iht, "null pointer argument");
    require(index < iht->value.table_rows.size(), "row index out of range");
    const auto& r = iht->value.table_rows[index];
    if (count) *count = r.count;
    if (dimension) *dimension = r.dimension;
    if (iht_dimension) *iht_dimension = r.iht_dimension;
  });
}

qw_status qw_iht_basis(const qw_iht* iht, const double** data, size_t* len) {
  return guarded([&] {
    require(iht && data && len, "null pointer argument");
    *data = iht->basis.data();
    *len = iht->basis.size();
  });
}

qw_status qw_iht_overlap(const qw_iht* iht, const double* psi, size_t n, double* out) {
  return guarded([&] {
    require(iht && psi && out, "null pointer argument");
    require(n == iht->value.space_dimension, "state length does not match the walk dimension");
    *out = qwiht::overlap(read_state(psi, n), iht->value);
  });
}

void qw_iht_free(qw_iht* iht) { delete iht; }

qw_status qw_simulate(const qw_walk* walk, const size_t* final_set, size_t final_count, const double* psi, size_t n,
                      size_t steps, double* survival, double* hitting_time) {
  return guarded([&] {
    require(walk && psi && (final_set || final_count == 0), "null pointer argument");
    require(n == walk->value.size(), "state length does not match the walk dimension");
    const auto projector = qwiht::FinalProjector::build(walk->value.vertex_count(), walk->value.degree(),
                                                        {final_set, final_set + final_count});
    qwiht::MeasuredWalkOptions opt;
    opt.steps = steps;
    const auto result = qwiht::simulate(walk->value, projector, read_state(psi, n), opt);
    if (survival) *survival = result.survival;
    if (hitting_time) *hitting_time = qwiht::hitting_time(result);
  });
}

qw_status qw_run_config(const char* text, const qw_overrides* overrides, qw_output** out) {
  return guarded([&] {
    require(text && out, "null pointer argument");
    auto config = qwiht::parse_config(text);
    if (overrides) {
      qwiht::RunOverrides o;
      if (overrides->has_seed) o.seed = overrides->seed;
      if (overrides->has_cluster_tol) o.cluster_tol = overrides->cluster_tol;
      if (overrides->has_rank_tol) o.rank_tol = overrides->rank_tol;
      qwiht::apply_overrides(config, o);
    }
    *out = new qw_output{qwiht::run(config)};
  });
}

qw_status qw_reproduce(const char* target, uint64_t seed, double cluster_tol, double rank_tol, size_t sweep_trials,
                       qw_output** out) {
  return guarded([&] {
    require(out, "out is null");
    qwiht::ReproduceOptions opt;
    if (target) opt.target = target;
    opt.seed = seed;
    if (cluster_tol > 0) opt.cluster_tol = cluster_tol;
    if (rank_tol > 0) opt.rank_tol = rank_tol;
    if (sweep_trials > 0) opt.sweep_random_trials = sweep_trials;
    *out = new qw_output{qwiht::reproduce(opt)};
  });
}

const char* qw_output_text(const qw_output* output) { return output ? output->value.text.c_str() : ""; }

const char* qw_output_csv(const qw_output* output) { return output ? output->value.csv.c_str() : ""; }

const char* qw_output_json(const qw_output* output) { return output ? output->value.json.c_str() : ""; }

size_t qw_output_file_count(const qw_output* output) { return output ? output->value.files.size() : 0; }

const char* qw_output_file_name(const qw_output* output, size_t index) {
  return output && index < output->value.files.size() ? output->value.files[index].name.c_str() : nullptr;
}

const char* qw_output_file_content(const qw_output* output, size_t index) {
  return output && index < output->value.files.size() ? output->value.files[index].content.c_str() : nullptr;
}

qw_status qw_output_write(const qw_output* output, const char* dir) {
  return guarded([&] {
    require(output && dir, "null pointer argument");
    qwiht::write_outputs(output->value, dir);
  });
}

void qw_output_free(qw_output* output) { delete output; }

}  // extern "C"
