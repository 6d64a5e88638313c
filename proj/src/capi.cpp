#include "isingnet.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "isingnet/catalog.hpp"
#include "isingnet/dynamics.hpp"
#include "isingnet/enumeration.hpp"
#include "isingnet/survey.hpp"

namespace {

thread_local std::string g_last_error = "no error";

void set_error(const std::string& message) { g_last_error = message; }

isn_status classify(const std::exception& e)
{
    if (dynamic_cast<const isingnet::unsupported_size_error*>(&e))
        return ISN_ERROR_UNSUPPORTED_SIZE;
    if (dynamic_cast<const std::invalid_argument*>(&e)) return ISN_ERROR_INVALID_ARGUMENT;
    if (dynamic_cast<const std::bad_alloc*>(&e)) return ISN_ERROR_INTERNAL;
    return ISN_ERROR_INTERNAL;
}

template <typename Fn>
isn_status wrap(Fn&& fn)
{
    try {
        return fn();
    } catch (const std::exception& e) {
        set_error(e.what());
        return classify(e);
    } catch (...) {
        set_error("unknown error");
        return ISN_ERROR_INTERNAL;
    }
}

char* duplicate(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

double* duplicate(const std::vector<double>& v)
{
    double* out = static_cast<double*>(std::malloc(v.size() * sizeof(double)));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, v.data(), v.size() * sizeof(double));
    return out;
}

}  // namespace

struct isn_networks {
    std::vector<isingnet::Network> networks;
};

namespace {

const isingnet::Network& network_at(const isn_networks* nets, size_t index)
{
    if (nets == nullptr) throw std::invalid_argument("network set is NULL");
    if (index >= nets->networks.size())
        throw std::invalid_argument("network index out of range");
    return nets->networks[index];
}

isingnet::SpectralDecomposition decompose(const isingnet::Network& net, double hx)
{
    const auto fields = isingnet::FieldParams::uniform_transverse(hx);
    return isingnet::diagonalize(isingnet::build_hamiltonian_fock(net.couplings, fields));
}

struct TraceBundle {
    isingnet::ImbalanceTrace trace;
    isingnet::DynamicsParams params;
};

TraceBundle compute_trace(const isn_networks* nets, size_t index,
                          const isn_dynamics_params* params, int initial_state)
{
    if (params == nullptr) throw std::invalid_argument("dynamics params are NULL");
    if (initial_state != ISN_INITIAL_CLOSEST && initial_state != ISN_INITIAL_FURTHEST)
        throw std::invalid_argument("initial_state must be 0 (closest) or 1 (furthest)");
    const auto& net = network_at(nets, index);
    isingnet::DynamicsParams p;
    p.tau = params->tau;
    p.dt = params->dt;
    p.validate();
    const auto spectrum = decompose(net, params->hx);
    const auto minq = isingnet::min_eigenstate_entanglement(spectrum);
    const auto starts = isingnet::select_initial_states(spectrum, minq.index);
    const isingnet::Config start =
        initial_state == ISN_INITIAL_CLOSEST ? starts.closest : starts.furthest;
    return {isingnet::imbalance_trace(spectrum, start, net.n, p), p};
}

}  // namespace

extern "C" {

const char* isn_status_name(isn_status status)
{
    switch (status) {
        case ISN_OK: return "ok";
        case ISN_ERROR_INVALID_ARGUMENT: return "invalid argument";
        case ISN_ERROR_UNSUPPORTED_SIZE: return "unsupported size";
        case ISN_ERROR_NOT_FOUND: return "not found";
        case ISN_ERROR_IO: return "i/o error";
        case ISN_ERROR_NUMERIC: return "numeric error";
        case ISN_ERROR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* isn_last_error(void) { return g_last_error.c_str(); }

void isn_buffer_free(void* buffer) { std::free(buffer); }
void isn_string_free(char* text) { std::free(text); }

isn_status isn_networks_enumerate(int n_spins, isn_networks** out)
{
    return wrap([&]() -> isn_status {
        if (out == nullptr) throw std::invalid_argument("output pointer is NULL");
        auto handle = std::make_unique<isn_networks>();
        handle->networks = isingnet::enumerate_networks(n_spins);
        *out = handle.release();
        return ISN_OK;
    });
}

isn_status isn_networks_from_catalog(const char* path, isn_networks** out)
{
    return wrap([&]() -> isn_status {
        if (out == nullptr || path == nullptr)
            throw std::invalid_argument("NULL argument");
        const auto catalog = isingnet::read_catalog(path);
        auto handle = std::make_unique<isn_networks>();
        handle->networks.reserve(catalog.records.size());
        for (const auto& record : catalog.records) {
            isingnet::Network net;
            net.n = record.n_spins;
            net.couplings = isingnet::matrix_from_edges(record.n_spins, record.edges);
            net.canonical_id = isingnet::canonical_signed_form(net.couplings);
            net.id = record.id;
            handle->networks.push_back(std::move(net));
        }
        *out = handle.release();
        return ISN_OK;
    });
}

void isn_networks_free(isn_networks* nets) { delete nets; }

size_t isn_networks_count(const isn_networks* nets)
{
    return nets == nullptr ? 0 : nets->networks.size();
}

isn_status isn_networks_id(const isn_networks* nets, size_t index, char* buffer, size_t size)
{
    return wrap([&]() -> isn_status {
        const auto& net = network_at(nets, index);
        if (buffer == nullptr) throw std::invalid_argument("buffer is NULL");
        if (net.id.size() + 1 > size) {
            set_error("id buffer too small");
            return ISN_ERROR_INVALID_ARGUMENT;
        }
        std::memcpy(buffer, net.id.c_str(), net.id.size() + 1);
        return ISN_OK;
    });
}

isn_status isn_networks_find(const isn_networks* nets, const char* id, size_t* index)
{
    return wrap([&]() -> isn_status {
        if (nets == nullptr || id == nullptr || index == nullptr)
            throw std::invalid_argument("NULL argument");
        for (size_t k = 0; k < nets->networks.size(); ++k)
            if (nets->networks[k].id == id) {
                *index = k;
                return ISN_OK;
            }
        set_error("no network with id '" + std::string(id) + "'");
        return ISN_ERROR_NOT_FOUND;
    });
}

isn_status isn_networks_spin_count(const isn_networks* nets, size_t index, int* n_spins)
{
    return wrap([&]() -> isn_status {
        if (n_spins == nullptr) throw std::invalid_argument("output pointer is NULL");
        *n_spins = network_at(nets, index).n;
        return ISN_OK;
    });
}

isn_status isn_networks_edge_count(const isn_networks* nets, size_t index, size_t* count)
{
    return wrap([&]() -> isn_status {
        if (count == nullptr) throw std::invalid_argument("output pointer is NULL");
        *count = isingnet::edge_list(network_at(nets, index).couplings).size();
        return ISN_OK;
    });
}

isn_status isn_networks_edges(const isn_networks* nets, size_t index, int* triples,
                              size_t capacity)
{
    return wrap([&]() -> isn_status {
        if (triples == nullptr) throw std::invalid_argument("output pointer is NULL");
        const auto edges = isingnet::edge_list(network_at(nets, index).couplings);
        if (capacity < edges.size()) {
            set_error("edge buffer too small");
            return ISN_ERROR_INVALID_ARGUMENT;
        }
        for (size_t k = 0; k < edges.size(); ++k) {
            triples[3 * k] = edges[k].i;
            triples[3 * k + 1] = edges[k].j;
            triples[3 * k + 2] = edges[k].sign;
        }
        return ISN_OK;
    });
}

isn_status isn_count_networks(int n_spins, unsigned long long* connected_graphs,
                              unsigned long long* interaction_networks)
{
    return wrap([&]() -> isn_status {
        if (connected_graphs == nullptr || interaction_networks == nullptr)
            throw std::invalid_argument("output pointer is NULL");
        const auto counts = isingnet::count_networks(n_spins);
        *connected_graphs = counts.connected_graphs;
        *interaction_networks = counts.interaction_networks;
        return ISN_OK;
    });
}

isn_status isn_enumerate_to_file(int n_spins, const char* path)
{
    return wrap([&]() -> isn_status {
        if (path == nullptr) throw std::invalid_argument("path is NULL");
        if (std::strcmp(path, "-") == 0) {
            isingnet::write_networks_jsonl(std::cout, n_spins);
            return ISN_OK;
        }
        std::ofstream out(path);
        if (!out) {
            set_error("cannot write " + std::string(path));
            return ISN_ERROR_IO;
        }
        isingnet::write_networks_jsonl(out, n_spins);
        if (!out) {
            set_error("write failed for " + std::string(path));
            return ISN_ERROR_IO;
        }
        return ISN_OK;
    });
}

isn_status isn_analyze(const isn_networks* nets, size_t index, double hx, isn_metrics* out)
{
    return wrap([&]() -> isn_status {
        if (out == nullptr) throw std::invalid_argument("output pointer is NULL");
        const auto& net = network_at(nets, index);
        const auto spectrum = decompose(net, hx);
        const auto minq = isingnet::min_eigenstate_entanglement(spectrum);
        const auto subgraph = isingnet::build_equienergy_subgraph(net.couplings);
        out->q_min = minq.q_min;
        out->nu = minq.index;
        out->degenerate = isingnet::has_degenerate_levels(spectrum) ? 1 : 0;
        out->circuit_rank = subgraph.rank;
        out->unconstrained_pairs =
            isingnet::degree_profile(net.couplings).unconstrained_pairs;
        return ISN_OK;
    });
}

isn_status isn_landscape_json(const isn_networks* nets, size_t index, char** json_out)
{
    return wrap([&]() -> isn_status {
        if (json_out == nullptr) throw std::invalid_argument("output pointer is NULL");
        const auto& net = network_at(nets, index);
        *json_out =
            duplicate(isingnet::subgraph_to_json(isingnet::build_equienergy_subgraph(net.couplings)));
        return ISN_OK;
    });
}

isn_dynamics_params isn_dynamics_params_default(void) { return {0.2, 1000.0, 0.25}; }

isn_status isn_imbalance_trace(const isn_networks* nets, size_t index,
                               const isn_dynamics_params* params, int initial_state,
                               double** times, double** values, size_t* count)
{
    return wrap([&]() -> isn_status {
        if (times == nullptr || values == nullptr || count == nullptr)
            throw std::invalid_argument("output pointer is NULL");
        const auto bundle = compute_trace(nets, index, params, initial_state);
        const auto& samples = bundle.trace.samples;
        std::vector<double> ts(samples.size());
        for (size_t k = 0; k < samples.size(); ++k)
            ts[k] = static_cast<double>(k) * bundle.trace.dt;
        *times = duplicate(ts);
        *values = duplicate(samples);
        *count = samples.size();
        return ISN_OK;
    });
}

isn_status isn_imbalance_spectrum(const isn_networks* nets, size_t index,
                                  const isn_dynamics_params* params, int initial_state,
                                  double** frequencies, double** amplitudes, size_t* count,
                                  double* peak_amplitude, double* peak_frequency)
{
    return wrap([&]() -> isn_status {
        if (frequencies == nullptr || amplitudes == nullptr || count == nullptr)
            throw std::invalid_argument("output pointer is NULL");
        const auto bundle = compute_trace(nets, index, params, initial_state);
        const auto spectrum = isingnet::fourier_spectrum(bundle.trace, bundle.params);
        *frequencies = duplicate(spectrum.frequencies);
        *amplitudes = duplicate(spectrum.amplitudes);
        *count = spectrum.frequencies.size();
        if (peak_amplitude != nullptr) *peak_amplitude = spectrum.peak_amplitude;
        if (peak_frequency != nullptr) *peak_frequency = spectrum.peak_frequency;
        return ISN_OK;
    });
}

isn_survey_options isn_survey_options_default(void)
{
    return {0.2, 1000.0, 0.25, 0, 1, 1, 0, 0};
}

isn_status isn_run_survey(int n_spins, const isn_survey_options* options, const char* out_dir,
                          char** catalog_path_out)
{
    return wrap([&]() -> isn_status {
        if (options == nullptr || out_dir == nullptr)
            throw std::invalid_argument("NULL argument");
        isingnet::SurveyOptions opts;
        opts.hx = options->hx;
        opts.tau = options->tau;
        opts.dt = options->dt;
        opts.shard_index = options->shard_index;
        opts.shard_count = options->shard_count;
        opts.sample_stride = options->sample_stride;
        opts.skip_dynamics = options->skip_dynamics != 0;
        opts.workers = options->workers;
        const auto path = isingnet::run_survey(n_spins, opts, out_dir);
        if (catalog_path_out != nullptr) *catalog_path_out = duplicate(path.string());
        return ISN_OK;
    });
}

isn_status isn_correlate(const char* catalog_path, const char* x_field, const char* y_field,
                         char** report_json_out)
{
    return wrap([&]() -> isn_status {
        if (catalog_path == nullptr || x_field == nullptr || y_field == nullptr ||
            report_json_out == nullptr)
            throw std::invalid_argument("NULL argument");
        const auto result = isingnet::correlate_catalog(catalog_path, x_field, y_field);
        *report_json_out = duplicate(isingnet::correlation_report_json(result.report));
        return ISN_OK;
    });
}

isn_status isn_figure_data(const char* catalog_path, const char* figure,
                           const char* scatter_path, const char* density_path)
{
    return wrap([&]() -> isn_status {
        if (catalog_path == nullptr || figure == nullptr || scatter_path == nullptr ||
            density_path == nullptr)
            throw std::invalid_argument("NULL argument");
        std::ostringstream scatter, density;
        isingnet::write_figure_data(catalog_path, figure, scatter, density);
        auto emit = [](const char* path, const std::string& text) {
            if (std::strcmp(path, "-") == 0) {
                std::cout << text;
                return true;
            }
            std::ofstream out(path);
            if (!out) return false;
            out << text;
            return static_cast<bool>(out);
        };
        if (!emit(scatter_path, scatter.str()) || !emit(density_path, density.str())) {
            set_error("cannot write figure data files");
            return ISN_ERROR_IO;
        }
        return ISN_OK;
    });
}

}  // extern "C"
