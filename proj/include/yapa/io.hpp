#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "yapa/dag.hpp"

namespace yapa {

/// Shortest round-trip decimal form, locale independent.
inline std::string format_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
    return std::string(buf, ptr);
}

inline const char* to_string(GeneratorKind kind) {
    return kind == GeneratorKind::reference ? "reference" : "accelerated";
}

inline GeneratorKind generator_kind_from_string(std::string_view s) {
    if (s == "reference") return GeneratorKind::reference;
    if (s == "accelerated") return GeneratorKind::accelerated;
    throw std::invalid_argument("unknown generator kind: " + std::string(s));
}

/// CSV emitter: `# key=value` comment lines first (schema_version always
/// present), then the column header, then rows. UTF-8, LF, '.' decimals.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::string& columns,
              const std::vector<std::pair<std::string, std::string>>& config_echo)
        : out_(path, std::ios::binary) {
        if (!out_) throw std::runtime_error("cannot open for writing: " + path.string());
        out_ << "# schema_version=1\n";
        for (const auto& [key, value] : config_echo) out_ << "# " << key << "=" << value << "\n";
        out_ << columns << "\n";
    }

    void row(const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out_ << ',';
            out_ << cells[i];
        }
        out_ << '\n';
    }

private:
    std::ofstream out_;
};

inline void write_edge_list(const std::filesystem::path& path, const Dag& dag) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << "source,target\n";
    for (VertexId v = 1; v < dag.arcs.size(); ++v)
        for (VertexId t : dag.arcs[v]) out << v << ',' << t << '\n';
}

inline void write_metadata(const std::filesystem::path& path, const Dag& dag) {
    nlohmann::json meta{
        {"schema_version", 1},
        {"alpha", dag.params.alpha},
        {"beta", dag.params.beta},
        {"n_vertices", dag.n_vertices()},
        {"seed", dag.seed},
        {"generator_kind", to_string(dag.kind)},
        {"init", {{"genesis_fanout", dag.init.genesis_fanout}}},
        {"rooted", dag.rooted},
    };
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << meta.dump(2) << '\n';
}

/// Reads an edge list plus its metadata sidecar back into a Dag and validates
/// the structural invariants.
inline Dag read_dag(const std::filesystem::path& edges_path,
                    const std::filesystem::path& meta_path) {
    std::ifstream meta_in(meta_path, std::ios::binary);
    if (!meta_in) throw std::runtime_error("cannot open: " + meta_path.string());
    nlohmann::json meta = nlohmann::json::parse(meta_in);

    Dag dag(Params(meta.at("alpha").get<double>(), meta.at("beta").get<double>()));
    dag.seed = meta.at("seed").get<std::uint64_t>();
    dag.kind = generator_kind_from_string(meta.at("generator_kind").get<std::string>());
    dag.init.genesis_fanout = meta.at("init").at("genesis_fanout").get<std::uint64_t>();
    dag.rooted = meta.value("rooted", false);
    dag.arcs.resize(meta.at("n_vertices").get<std::uint64_t>() + 1);

    std::ifstream in(edges_path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + edges_path.string());
    std::string line;
    if (!std::getline(in, line) || line != "source,target")
        throw std::runtime_error("edge list missing 'source,target' header: " +
                                 edges_path.string());
    std::uint64_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("malformed edge list line " + std::to_string(lineno));
        const std::uint64_t source = std::stoull(line.substr(0, comma));
        const std::uint64_t target = std::stoull(line.substr(comma + 1));
        if (source >= dag.arcs.size())
            throw std::runtime_error("edge list source out of range at line " +
                                     std::to_string(lineno));
        dag.arcs[source].push_back(target);
    }
    check_invariants(dag);
    return dag;
}

}  // namespace yapa
