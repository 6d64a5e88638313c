// Command-line front end. Talks to the engine exclusively through the C API
// in isingnet.h.
#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "isingnet.h"

namespace {

struct NetworksDeleter {
    void operator()(isn_networks* p) const { isn_networks_free(p); }
};
using NetworksHandle = std::unique_ptr<isn_networks, NetworksDeleter>;

[[noreturn]] void fail(const char* what, isn_status status)
{
    std::cerr << "error: " << what << ": " << isn_status_name(status) << " ("
              << isn_last_error() << ")\n";
    std::exit(1);
}

void check(isn_status status, const char* what)
{
    if (status != ISN_OK) fail(what, status);
}

// Loads the network set containing `id`, from a catalog when given, otherwise
// by enumerating the size parsed from the id ("N<n>-<ordinal>").
NetworksHandle load_networks(const std::string& id, const std::string& catalog, size_t& index)
{
    isn_networks* raw = nullptr;
    if (!catalog.empty()) {
        check(isn_networks_from_catalog(catalog.c_str(), &raw), "loading catalog");
    } else {
        int n = 0;
        if (std::sscanf(id.c_str(), "N%d-", &n) != 1)
            fail("network id must look like N5-17", ISN_ERROR_INVALID_ARGUMENT);
        check(isn_networks_enumerate(n, &raw), "enumerating networks");
    }
    NetworksHandle nets(raw);
    check(isn_networks_find(nets.get(), id.c_str(), &index), "looking up network id");
    return nets;
}

void write_two_columns(const std::string& path, const char* header, const double* a,
                       const double* b, size_t count)
{
    std::ofstream out(path);
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        std::exit(1);
    }
    out << header << '\n';
    char buf[96];
    for (size_t k = 0; k < count; ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g", a[k], b[k]);
        out << buf << '\n';
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exhaustive signed-network survey of the transverse-field Ising model"};
    app.require_subcommand(1);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "List interaction networks as JSONL");
    int enum_spins = 0;
    std::string enum_out = "-";
    enumerate->add_option("--spins", enum_spins, "Number of spins (1-7)")->required();
    enumerate->add_option("--out", enum_out, "Output file ('-' = stdout)");

    // landscape
    auto* landscape = app.add_subcommand("landscape", "Dump the equienergy subgraph as JSON");
    std::string ls_id, ls_catalog, ls_out = "-";
    landscape->add_option("--net-id", ls_id, "Network id, e.g. N4-7")->required();
    landscape->add_option("--catalog", ls_catalog, "Catalog file to read the network from");
    landscape->add_option("--out", ls_out, "Output file ('-' = stdout)");

    // dynamics
    auto* dynamics = app.add_subcommand("dynamics", "Quench dynamics for one network");
    std::string dy_id, dy_catalog, dy_trace, dy_spectrum, dy_initial = "closest";
    isn_dynamics_params dy_params = isn_dynamics_params_default();
    dynamics->add_option("--net-id", dy_id, "Network id")->required();
    dynamics->add_option("--catalog", dy_catalog, "Catalog file to read the network from");
    dynamics->add_option("--hx", dy_params.hx, "Transverse field");
    dynamics->add_option("--tau", dy_params.tau, "Total duration");
    dynamics->add_option("--dt", dy_params.dt, "Sample spacing");
    dynamics->add_option("--initial", dy_initial, "Initial Fock state: closest|furthest");
    dynamics->add_option("--emit-trace", dy_trace, "Write t,imbalance CSV");
    dynamics->add_option("--emit-spectrum", dy_spectrum, "Write f,amplitude CSV");

    // survey
    auto* survey = app.add_subcommand("survey", "Sweep every network of one size");
    int sv_spins = 0;
    std::string sv_out, sv_shard = "0/1", sv_sample = "1/1";
    isn_survey_options sv_opts = isn_survey_options_default();
    survey->add_option("--spins", sv_spins, "Number of spins (3-7)")->required();
    survey->add_option("--hx", sv_opts.hx, "Transverse field");
    survey->add_option("--tau", sv_opts.tau, "Total duration");
    survey->add_option("--dt", sv_opts.dt, "Sample spacing");
    survey->add_option("--out", sv_out, "Output directory")->required();
    survey->add_option("--shard", sv_shard, "Shard i/k of the network list");
    survey->add_option("--sample", sv_sample, "Deterministic ordinal sample 1/k");
    survey->add_flag("--skip-dynamics", "Skip the quench-dynamics columns");
    survey->add_option("--workers", sv_opts.workers, "Worker threads (0 = auto)");

    // correlate
    auto* correlate = app.add_subcommand("correlate", "Pearson correlation of two columns");
    std::string co_x, co_y, co_file, co_out;
    correlate->add_option("--x", co_x, "X column name")->required();
    correlate->add_option("--y", co_y, "Y column name")->required();
    correlate->add_option("file", co_file, "Catalog file")->required();
    correlate->add_option("--out", co_out, "Also write the JSON report here");

    // plot-data
    auto* plot = app.add_subcommand("plot-data", "Scatter + 64x64 density data for a figure");
    std::string pd_figure, pd_file, pd_out;
    plot->add_option("--figure", pd_figure, "fig2|fig3|fig4|fig5")->required();
    plot->add_option("file", pd_file, "Catalog file")->required();
    plot->add_option("--out", pd_out, "Output prefix (writes PREFIX.scatter.csv and "
                                      "PREFIX.density.csv; default stdout)");

    CLI11_PARSE(app, argc, argv);

    if (*enumerate) {
        check(isn_enumerate_to_file(enum_spins, enum_out.c_str()), "enumerate");
        return 0;
    }

    if (*landscape) {
        size_t index = 0;
        auto nets = load_networks(ls_id, ls_catalog, index);
        char* json = nullptr;
        check(isn_landscape_json(nets.get(), index, &json), "landscape");
        if (ls_out == "-") {
            std::cout << json << '\n';
        } else {
            std::ofstream out(ls_out);
            out << json << '\n';
            if (!out) {
                std::cerr << "error: cannot write " << ls_out << "\n";
                isn_string_free(json);
                return 1;
            }
        }
        isn_string_free(json);
        return 0;
    }

    if (*dynamics) {
        if (dy_trace.empty() && dy_spectrum.empty()) {
            std::cerr << "error: nothing to do, pass --emit-trace and/or --emit-spectrum\n";
            return 1;
        }
        int initial;
        if (dy_initial == "closest") initial = ISN_INITIAL_CLOSEST;
        else if (dy_initial == "furthest") initial = ISN_INITIAL_FURTHEST;
        else {
            std::cerr << "error: --initial must be closest or furthest\n";
            return 1;
        }
        size_t index = 0;
        auto nets = load_networks(dy_id, dy_catalog, index);
        if (!dy_trace.empty()) {
            double *times = nullptr, *values = nullptr;
            size_t count = 0;
            check(isn_imbalance_trace(nets.get(), index, &dy_params, initial, &times, &values,
                                      &count),
                  "imbalance trace");
            write_two_columns(dy_trace, "t,imbalance", times, values, count);
            isn_buffer_free(times);
            isn_buffer_free(values);
        }
        if (!dy_spectrum.empty()) {
            double *freqs = nullptr, *amps = nullptr;
            size_t count = 0;
            double peak_amp = 0.0, peak_freq = 0.0;
            check(isn_imbalance_spectrum(nets.get(), index, &dy_params, initial, &freqs, &amps,
                                         &count, &peak_amp, &peak_freq),
                  "imbalance spectrum");
            write_two_columns(dy_spectrum, "f,amplitude", freqs, amps, count);
            std::printf("peak amplitude %.17g at f = %.17g\n", peak_amp, peak_freq);
            isn_buffer_free(freqs);
            isn_buffer_free(amps);
        }
        return 0;
    }

    if (*survey) {
        if (std::sscanf(sv_shard.c_str(), "%d/%d", &sv_opts.shard_index,
                        &sv_opts.shard_count) != 2) {
            std::cerr << "error: --shard must look like i/k\n";
            return 1;
        }
        int sample_num = 1;
        if (std::sscanf(sv_sample.c_str(), "%d/%d", &sample_num, &sv_opts.sample_stride) != 2 ||
            sample_num != 1) {
            std::cerr << "error: --sample must look like 1/k\n";
            return 1;
        }
        sv_opts.skip_dynamics = survey->count("--skip-dynamics") > 0 ? 1 : 0;
        char* path = nullptr;
        check(isn_run_survey(sv_spins, &sv_opts, sv_out.c_str(), &path), "survey");
        std::cout << path << '\n';
        isn_string_free(path);
        return 0;
    }

    if (*correlate) {
        char* report = nullptr;
        check(isn_correlate(co_file.c_str(), co_x.c_str(), co_y.c_str(), &report), "correlate");
        std::cout << report << '\n';
        if (!co_out.empty()) {
            std::ofstream out(co_out);
            out << report << '\n';
            if (!out) {
                std::cerr << "error: cannot write " << co_out << "\n";
                isn_string_free(report);
                return 1;
            }
        }
        isn_string_free(report);
        return 0;
    }

    if (*plot) {
        std::string scatter = "-", density = "-";
        if (!pd_out.empty()) {
            scatter = pd_out + ".scatter.csv";
            density = pd_out + ".density.csv";
        }
        check(isn_figure_data(pd_file.c_str(), pd_figure.c_str(), scatter.c_str(),
                              density.c_str()),
              "plot-data");
        return 0;
    }
    return 0;
}
