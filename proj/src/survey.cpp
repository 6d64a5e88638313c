#include "isingnet/survey.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "isingnet/enumeration.hpp"

namespace isingnet {
namespace {

int resolve_workers(int workers)
{
    if (workers > 0) return workers;
    if (const char* env = std::getenv("ISINGNET_WORKERS")) {
        const int w = std::atoi(env);
        if (w > 0) return w;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

std::string fmt_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

template <typename Fn>
auto run_stage(const std::string& id, const char* stage, Fn&& fn)
{
    try {
        return fn();
    } catch (const std::exception& e) {
        throw std::runtime_error("survey of " + id + " failed at " + stage + ": " + e.what());
    }
}

}  // namespace

NetworkRecord survey_network(const Network& net, const FieldParams& fields,
                             const DynamicsParams& params, bool skip_dynamics)
{
    NetworkRecord record;
    record.id = net.id;
    record.n_spins = net.n;
    record.edges = edge_list(net.couplings);

    const auto spectrum = run_stage(net.id, "diagonalization", [&] {
        return diagonalize(build_hamiltonian_fock(net.couplings, fields));
    });
    const auto minq = run_stage(net.id, "entanglement", [&] {
        return min_eigenstate_entanglement(spectrum);
    });
    record.q_min = minq.q_min;
    record.nu = minq.index;
    record.degenerate = has_degenerate_levels(spectrum);

    const auto subgraph = run_stage(net.id, "equienergy subgraph", [&] {
        return build_equienergy_subgraph(net.couplings);
    });
    record.circuit_rank = subgraph.rank;
    record.unconstrained_pairs = degree_profile(net.couplings).unconstrained_pairs;

    if (!skip_dynamics) {
        record.dynamics = run_stage(net.id, "dynamics", [&] {
            return dynamics_record(spectrum, minq.index, net.n, params);
        });
    }
    return record;
}

std::string catalog_filename(int n_spins, const SurveyOptions& options)
{
    std::string name = "catalog_n" + std::to_string(n_spins);
    if (options.sample_stride > 1) name += "_sample" + std::to_string(options.sample_stride);
    if (options.shard_count > 1)
        name += "_shard" + std::to_string(options.shard_index) + "of" +
                std::to_string(options.shard_count);
    return name + ".csv";
}

std::filesystem::path run_survey(int n_spins, const SurveyOptions& options,
                                 const std::filesystem::path& out_dir)
{
    if (n_spins < 3 || n_spins > kMaxSpins)
        throw unsupported_size_error("survey requires 3 <= n <= 7, got " +
                                     std::to_string(n_spins));
    if (options.shard_count < 1 || options.shard_index < 0 ||
        options.shard_index >= options.shard_count)
        throw std::invalid_argument("shard index/count misconfigured");
    if (options.sample_stride < 1) throw std::invalid_argument("sample stride must be >= 1");

    const FieldParams fields = FieldParams::uniform_transverse(options.hx);
    DynamicsParams params;
    params.tau = options.tau;
    params.dt = options.dt;
    params.validate();

    std::filesystem::create_directories(out_dir);
    const auto path = out_dir / catalog_filename(n_spins, options);
    if (std::filesystem::exists(path)) return path;  // complete shard, resume

    const int workers = resolve_workers(options.workers);
    const auto forms = enumerate_canonical_forms(n_spins, workers);

    // Sample first (every stride-th ordinal), then cut the shard's contiguous
    // block out of the sampled list.
    std::vector<std::uint64_t> ordinals;
    for (std::uint64_t o = 1; o <= forms.size(); ++o)
        if ((o - 1) % static_cast<std::uint64_t>(options.sample_stride) == 0)
            ordinals.push_back(o);
    const std::uint64_t per_shard =
        (ordinals.size() + options.shard_count - 1) / options.shard_count;
    const std::uint64_t begin = per_shard * static_cast<std::uint64_t>(options.shard_index);
    const std::uint64_t end = std::min<std::uint64_t>(ordinals.size(), begin + per_shard);
    const std::size_t count = begin < end ? static_cast<std::size_t>(end - begin) : 0;

    std::vector<NetworkRecord> records(count);
    {
        std::atomic<std::size_t> next{0};
        std::exception_ptr error;
        std::mutex error_mutex;
        auto body = [&] {
            try {
                for (;;) {
                    const std::size_t t = next.fetch_add(1);
                    if (t >= count) return;
                    const std::uint64_t ordinal = ordinals[begin + t];
                    const auto net = network_from_canonical(forms[ordinal - 1], ordinal);
                    records[t] = survey_network(net, fields, params, options.skip_dynamics);
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        };
        std::vector<std::thread> pool;
        const int w = std::min<int>(workers, static_cast<int>(std::max<std::size_t>(count, 1)));
        for (int i = 0; i < w; ++i) pool.emplace_back(body);
        for (auto& t : pool) t.join();
        if (error) std::rethrow_exception(error);
    }

    Catalog catalog;
    catalog.header = {1, n_spins, options.hx, options.tau, options.dt, !options.skip_dynamics};
    catalog.records = std::move(records);

    // Write-then-rename keeps interrupted runs from leaving a half catalog
    // behind at the final name.
    auto tmp = path;
    tmp += ".tmp";
    write_catalog(tmp, catalog);
    std::filesystem::path tmp_schema = tmp;
    tmp_schema += ".schema.json";
    std::filesystem::path schema = path;
    schema += ".schema.json";
    std::filesystem::rename(tmp_schema, schema);
    std::filesystem::rename(tmp, path);
    return path;
}

std::vector<double> catalog_column(const Catalog& catalog, const std::string& field)
{
    enum class Kind { QMin, Nu, Degenerate, Rank, Pairs, CImax, CFmax, FImax, FFmax };
    Kind kind;
    bool needs_dynamics = false;
    if (field == "q_min") kind = Kind::QMin;
    else if (field == "nu") kind = Kind::Nu;
    else if (field == "degenerate") kind = Kind::Degenerate;
    else if (field == "circuit_rank") kind = Kind::Rank;
    else if (field == "unconstrained_pairs") kind = Kind::Pairs;
    else if (field == "closest_imax") { kind = Kind::CImax; needs_dynamics = true; }
    else if (field == "closest_fmax") { kind = Kind::CFmax; needs_dynamics = true; }
    else if (field == "furthest_imax") { kind = Kind::FImax; needs_dynamics = true; }
    else if (field == "furthest_fmax") { kind = Kind::FFmax; needs_dynamics = true; }
    else throw std::invalid_argument("unknown catalog field '" + field + "'");

    std::vector<double> values;
    values.reserve(catalog.records.size());
    for (const auto& r : catalog.records) {
        if (needs_dynamics && !r.dynamics)
            throw std::runtime_error("record " + r.id + " has no dynamics columns");
        switch (kind) {
            case Kind::QMin: values.push_back(r.q_min); break;
            case Kind::Nu: values.push_back(r.nu); break;
            case Kind::Degenerate: values.push_back(r.degenerate ? 1.0 : 0.0); break;
            case Kind::Rank: values.push_back(static_cast<double>(r.circuit_rank)); break;
            case Kind::Pairs: values.push_back(static_cast<double>(r.unconstrained_pairs)); break;
            case Kind::CImax: values.push_back(r.dynamics->closest.amplitude); break;
            case Kind::CFmax: values.push_back(r.dynamics->closest.frequency); break;
            case Kind::FImax: values.push_back(r.dynamics->furthest.amplitude); break;
            case Kind::FFmax: values.push_back(r.dynamics->furthest.frequency); break;
        }
    }
    return values;
}

CorrelationResult correlate_catalog(const std::filesystem::path& catalog_path,
                                    const std::string& x_field, const std::string& y_field)
{
    const auto catalog = read_catalog(catalog_path);
    if (catalog.records.size() < 3)
        throw std::runtime_error("catalog has fewer than 3 records");
    const auto xs = catalog_column(catalog, x_field);
    const auto ys = catalog_column(catalog, y_field);
    CorrelationResult result;
    result.report = pearson(xs, ys, x_field, y_field);
    result.histogram = histogram2d(xs, ys);
    return result;
}

std::string correlation_report_json(const CorrelationReport& report)
{
    nlohmann::ordered_json obj;
    obj["x"] = report.x_name;
    obj["y"] = report.y_name;
    obj["count"] = report.count;
    if (report.defined) obj["pearson_r"] = report.pearson_r;
    else obj["pearson_r"] = nullptr;
    obj["p"] = report.p_band;
    return obj.dump();
}

namespace {

void write_scatter(std::ostream& out, const std::string& x_name, const std::string& y_name,
                   std::span<const double> xs, std::span<const double> ys)
{
    out << x_name << ',' << y_name << '\n';
    for (std::size_t i = 0; i < xs.size(); ++i)
        out << fmt_double(xs[i]) << ',' << fmt_double(ys[i]) << '\n';
}

void write_density(std::ostream& out, const Histogram2D& h, const std::string& prefix,
                   bool header)
{
    if (header) {
        if (!prefix.empty()) out << "state,";
        out << "x_bin,y_bin,x_lo,x_hi,y_lo,y_hi,count\n";
    }
    for (int by = 0; by < h.ny; ++by)
        for (int bx = 0; bx < h.nx; ++bx) {
            const auto c = h.at(bx, by);
            if (c == 0) continue;
            if (!prefix.empty()) out << prefix << ',';
            out << bx << ',' << by << ',' << fmt_double(h.x_edges[bx]) << ','
                << fmt_double(h.x_edges[bx + 1]) << ',' << fmt_double(h.y_edges[by]) << ','
                << fmt_double(h.y_edges[by + 1]) << ',' << c << '\n';
        }
}

}  // namespace

void write_figure_data(const std::filesystem::path& catalog_path, const std::string& figure,
                       std::ostream& scatter_out, std::ostream& density_out)
{
    const auto catalog = read_catalog(catalog_path);
    if (catalog.records.empty()) throw std::runtime_error("catalog has no records");

    if (figure == "fig2" || figure == "fig3" || figure == "fig4") {
        std::string x_field, y_field;
        if (figure == "fig2") { x_field = "circuit_rank"; y_field = "q_min"; }
        else if (figure == "fig3") { x_field = "unconstrained_pairs"; y_field = "circuit_rank"; }
        else { x_field = "unconstrained_pairs"; y_field = "q_min"; }
        const auto xs = catalog_column(catalog, x_field);
        const auto ys = catalog_column(catalog, y_field);
        write_scatter(scatter_out, x_field, y_field, xs, ys);
        write_density(density_out, histogram2d(xs, ys), "", true);
        return;
    }
    if (figure == "fig5") {
        const auto cf = catalog_column(catalog, "closest_fmax");
        const auto ci = catalog_column(catalog, "closest_imax");
        const auto ff = catalog_column(catalog, "furthest_fmax");
        const auto fi = catalog_column(catalog, "furthest_imax");
        scatter_out << "state,f_max,i_max\n";
        for (std::size_t k = 0; k < cf.size(); ++k)
            scatter_out << "closest," << fmt_double(cf[k]) << ',' << fmt_double(ci[k]) << '\n';
        for (std::size_t k = 0; k < ff.size(); ++k)
            scatter_out << "furthest," << fmt_double(ff[k]) << ',' << fmt_double(fi[k]) << '\n';
        write_density(density_out, histogram2d(cf, ci), "closest", true);
        write_density(density_out, histogram2d(ff, fi), "furthest", false);
        return;
    }
    throw std::invalid_argument("unknown figure '" + figure + "' (use fig2|fig3|fig4|fig5)");
}

}  // namespace isingnet
