#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "isingnet/catalog.hpp"
#include "isingnet/stats.hpp"

namespace isingnet {

struct SurveyOptions {
    double hx = 0.2;
    double tau = 1000.0;
    double dt = 0.25;
    int shard_index = 0;
    int shard_count = 1;
    int sample_stride = 1;  // keep ordinals with (ordinal - 1) % stride == 0
    bool skip_dynamics = false;
    int workers = 0;  // 0 = ISINGNET_WORKERS env var, else available parallelism
};

// All per-network computations for one catalog row. Any stage failure is
// rethrown with the stage name and network id attached.
NetworkRecord survey_network(const Network& net, const FieldParams& fields,
                             const DynamicsParams& params, bool skip_dynamics);

// Runs the sweep over every interaction network of size n (restricted to the
// options' sample stride and shard), writing records in canonical id order.
// The catalog file is created atomically; an existing complete catalog is
// left untouched and its path returned, so interrupted multi-shard runs can
// resume. Returns the catalog path.
std::filesystem::path run_survey(int n_spins, const SurveyOptions& options,
                                 const std::filesystem::path& out_dir);

std::string catalog_filename(int n_spins, const SurveyOptions& options);

// Numeric column extracted from a single-n catalog. Valid names: q_min, nu,
// degenerate, circuit_rank, unconstrained_pairs, closest_imax, closest_fmax,
// furthest_imax, furthest_fmax.
std::vector<double> catalog_column(const Catalog& catalog, const std::string& field);

struct CorrelationResult {
    CorrelationReport report;
    Histogram2D histogram;
};

CorrelationResult correlate_catalog(const std::filesystem::path& catalog_path,
                                    const std::string& x_field, const std::string& y_field);

std::string correlation_report_json(const CorrelationReport& report);

// Plot-ready data for one of the paper-style figures:
//   fig2: q_min vs circuit_rank,  fig3: circuit_rank vs unconstrained_pairs,
//   fig4: q_min vs unconstrained_pairs, fig5: peak amplitude vs frequency for
//   both initial states. Emits a scatter CSV and a 64x64 density CSV.
void write_figure_data(const std::filesystem::path& catalog_path, const std::string& figure,
                       std::ostream& scatter_out, std::ostream& density_out);

}  // namespace isingnet
