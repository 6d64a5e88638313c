#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "isingnet/dynamics.hpp"
#include "isingnet/landscape.hpp"
#include "isingnet/network.hpp"

namespace isingnet {

// One catalog row. Dynamics peaks are absent when the survey ran with
// dynamics disabled.
struct NetworkRecord {
    std::string id;
    int n_spins = 0;
    std::vector<Edge> edges;
    double q_min = 0.0;
    int nu = 0;
    bool degenerate = false;
    long long circuit_rank = 0;
    long long unconstrained_pairs = 0;
    std::optional<DynamicsRecord> dynamics;
};

struct CatalogHeader {
    int version = 1;
    int n_spins = 0;
    double hx = 0.0;
    double tau = 0.0;
    double dt = 0.0;
    bool has_dynamics = true;
};

struct Catalog {
    CatalogHeader header;
    std::vector<NetworkRecord> records;
};

// Compact CSV-safe edge serialization: "0+1;1-2" means edges (0,1,+1) and
// (1,2,-1), sorted by (i, j).
std::string encode_edges(const std::vector<Edge>& edges);
std::vector<Edge> decode_edges(const std::string& text);

std::string catalog_csv_columns();
std::string record_to_csv(const NetworkRecord& record);

// Writes the versioned header line, the column header, and one row per
// record; floats carry 17 significant digits. A JSON schema sidecar is
// written next to the catalog (suffix ".schema.json").
void write_catalog(const std::filesystem::path& path, const Catalog& catalog);

Catalog read_catalog(const std::filesystem::path& path);

// One JSON object per line: {"id": ..., "n": ..., "edges": [[i, j, sign]...]}
// with 0-based i < j and edges sorted by (i, j).
void write_networks_jsonl(std::ostream& out, int n_spins, int workers = 0);

std::string subgraph_to_json(const EquienergySubgraph& subgraph);

}  // namespace isingnet
