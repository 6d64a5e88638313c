#include "isingnet/catalog.hpp"

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "isingnet/enumeration.hpp"

namespace isingnet {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt_double(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<std::string> split(const std::string& line, char sep)
{
    std::vector<std::string> parts;
    std::string::size_type start = 0;
    for (;;) {
        const auto pos = line.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(line.substr(start));
            return parts;
        }
        parts.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_double(const std::string& s, const char* what)
{
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("catalog: bad ") + what + " value '" + s + "'");
    }
}

long long parse_int(const std::string& s, const char* what)
{
    try {
        std::size_t used = 0;
        const long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error(std::string("catalog: bad ") + what + " value '" + s + "'");
    }
}

}  // namespace

std::string encode_edges(const std::vector<Edge>& edges)
{
    std::string out;
    for (std::size_t k = 0; k < edges.size(); ++k) {
        if (k > 0) out += ';';
        out += std::to_string(edges[k].i);
        out += edges[k].sign > 0 ? '+' : '-';
        out += std::to_string(edges[k].j);
    }
    return out;
}

std::vector<Edge> decode_edges(const std::string& text)
{
    std::vector<Edge> edges;
    if (text.empty()) return edges;
    for (const auto& token : split(text, ';')) {
        const auto plus = token.find('+');
        const auto minus = token.find('-');
        std::size_t pos;
        int sign;
        if (plus != std::string::npos) {
            pos = plus;
            sign = 1;
        } else if (minus != std::string::npos) {
            pos = minus;
            sign = -1;
        } else {
            throw std::runtime_error("catalog: bad edge token '" + token + "'");
        }
        Edge e;
        e.i = static_cast<int>(parse_int(token.substr(0, pos), "edge endpoint"));
        e.j = static_cast<int>(parse_int(token.substr(pos + 1), "edge endpoint"));
        e.sign = sign;
        edges.push_back(e);
    }
    return edges;
}

std::string catalog_csv_columns()
{
    return "id,n_spins,edges,q_min,nu,degenerate,circuit_rank,unconstrained_pairs,"
           "closest_imax,closest_fmax,furthest_imax,furthest_fmax";
}

std::string record_to_csv(const NetworkRecord& r)
{
    std::string line = r.id;
    line += ',' + std::to_string(r.n_spins);
    line += ',' + encode_edges(r.edges);
    line += ',' + fmt_double(r.q_min);
    line += ',' + std::to_string(r.nu);
    line += r.degenerate ? ",1" : ",0";
    line += ',' + std::to_string(r.circuit_rank);
    line += ',' + std::to_string(r.unconstrained_pairs);
    if (r.dynamics) {
        line += ',' + fmt_double(r.dynamics->closest.amplitude);
        line += ',' + fmt_double(r.dynamics->closest.frequency);
        line += ',' + fmt_double(r.dynamics->furthest.amplitude);
        line += ',' + fmt_double(r.dynamics->furthest.frequency);
    } else {
        line += ",,,,";
    }
    return line;
}

namespace {

void write_schema_sidecar(const std::filesystem::path& catalog_path)
{
    ordered_json schema;
    schema["format"] = "isingnet-catalog";
    schema["version"] = 1;
    schema["row"] = "one interaction network per line, canonical id order";
    auto col = [](const char* name, const char* type, const char* description) {
        ordered_json c;
        c["name"] = name;
        c["type"] = type;
        c["description"] = description;
        return c;
    };
    schema["columns"] = ordered_json::array({
        col("id", "string", "network id N<n>-<ordinal>, ordinals ascending by canonical form"),
        col("n_spins", "int", "number of spins"),
        col("edges", "string", "semicolon list i<sign>j, e.g. 0+1;1-2, 0-based, i<j"),
        col("q_min", "float", "minimum eigenstate entanglement over all eigenstates"),
        col("nu", "int", "index of the minimizing eigenstate, ascending energy order"),
        col("degenerate", "bool01", "1 if any adjacent eigenvalue gap < 1e-9"),
        col("circuit_rank", "int", "circuit rank e - v + c of the equienergy subgraph"),
        col("unconstrained_pairs", "int", "non-adjacent pairs of even-degree spins"),
        col("closest_imax", "float", "peak imbalance amplitude, closest Fock start"),
        col("closest_fmax", "float", "peak frequency, closest Fock start"),
        col("furthest_imax", "float", "peak imbalance amplitude, furthest Fock start"),
        col("furthest_fmax", "float", "peak frequency, furthest Fock start"),
    });
    schema["empty_dynamics_columns"] = "survey ran with dynamics disabled";

    std::filesystem::path sidecar = catalog_path;
    sidecar += ".schema.json";
    std::ofstream out(sidecar);
    if (!out) throw std::runtime_error("cannot write " + sidecar.string());
    out << schema.dump(2) << '\n';
}

}  // namespace

void write_catalog(const std::filesystem::path& path, const Catalog& catalog)
{
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << "# isingnet-catalog v" << catalog.header.version << " n=" << catalog.header.n_spins
        << " hx=" << fmt_double(catalog.header.hx) << " tau=" << fmt_double(catalog.header.tau)
        << " dt=" << fmt_double(catalog.header.dt)
        << " dynamics=" << (catalog.header.has_dynamics ? 1 : 0) << '\n';
    out << catalog_csv_columns() << '\n';
    for (const auto& record : catalog.records) out << record_to_csv(record) << '\n';
    if (!out) throw std::runtime_error("write failed for " + path.string());
    out.close();
    write_schema_sidecar(path);
}

Catalog read_catalog(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog " + path.string());

    Catalog catalog;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("catalog is empty: " + path.string());
    {
        std::istringstream header(line);
        std::string magic, version;
        header >> magic >> version;
        if (magic != "#" || version != "isingnet-catalog")
            throw std::runtime_error("not an isingnet catalog: " + path.string());
        // remaining tokens: v1 n=... hx=... tau=... dt=... dynamics=...
        std::string token;
        header >> token;
        if (token != "v1") throw std::runtime_error("unsupported catalog version " + token);
        while (header >> token) {
            const auto eq = token.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = token.substr(0, eq);
            const std::string value = token.substr(eq + 1);
            if (key == "n") catalog.header.n_spins = static_cast<int>(parse_int(value, "n"));
            else if (key == "hx") catalog.header.hx = parse_double(value, "hx");
            else if (key == "tau") catalog.header.tau = parse_double(value, "tau");
            else if (key == "dt") catalog.header.dt = parse_double(value, "dt");
            else if (key == "dynamics") catalog.header.has_dynamics = value == "1";
        }
    }
    if (!std::getline(in, line) || line != catalog_csv_columns())
        throw std::runtime_error("catalog column header mismatch in " + path.string());

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto parts = split(line, ',');
        if (parts.size() != 12)
            throw std::runtime_error("catalog row has " + std::to_string(parts.size()) +
                                     " fields, expected 12");
        NetworkRecord r;
        r.id = parts[0];
        r.n_spins = static_cast<int>(parse_int(parts[1], "n_spins"));
        r.edges = decode_edges(parts[2]);
        r.q_min = parse_double(parts[3], "q_min");
        r.nu = static_cast<int>(parse_int(parts[4], "nu"));
        r.degenerate = parse_int(parts[5], "degenerate") != 0;
        r.circuit_rank = parse_int(parts[6], "circuit_rank");
        r.unconstrained_pairs = parse_int(parts[7], "unconstrained_pairs");
        const bool has_dyn = !parts[8].empty() || !parts[9].empty() || !parts[10].empty() ||
                             !parts[11].empty();
        if (has_dyn) {
            DynamicsRecord d;
            d.closest = {parse_double(parts[8], "closest_imax"),
                         parse_double(parts[9], "closest_fmax")};
            d.furthest = {parse_double(parts[10], "furthest_imax"),
                          parse_double(parts[11], "furthest_fmax")};
            r.dynamics = d;
        }
        if (r.n_spins != catalog.header.n_spins)
            throw std::runtime_error("catalog mixes spin counts (" + path.string() + ")");
        catalog.records.push_back(std::move(r));
    }
    return catalog;
}

void write_networks_jsonl(std::ostream& out, int n_spins, int workers)
{
    const auto forms = enumerate_canonical_forms(n_spins, workers);
    for (std::size_t k = 0; k < forms.size(); ++k) {
        const auto net = network_from_canonical(forms[k], k + 1);
        ordered_json obj;
        obj["id"] = net.id;
        obj["n"] = net.n;
        auto edges = ordered_json::array();
        for (const auto& e : edge_list(net.couplings))
            edges.push_back(ordered_json::array({e.i, e.j, e.sign}));
        obj["edges"] = std::move(edges);
        out << obj.dump() << '\n';
    }
}

std::string subgraph_to_json(const EquienergySubgraph& subgraph)
{
    ordered_json obj;
    obj["vertices"] = subgraph.vertices;
    auto edges = ordered_json::array();
    for (const auto& [a, b] : subgraph.edges) edges.push_back(ordered_json::array({a, b}));
    obj["edges"] = std::move(edges);
    obj["c"] = subgraph.components;
    obj["r"] = subgraph.rank;
    return obj.dump();
}

}  // namespace isingnet
