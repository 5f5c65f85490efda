#include "entherm/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace entherm {

namespace {

using nlohmann::json;

void hash_bytes(std::uint64_t& h, const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t k = 0; k < n; ++k) {
        h ^= p[k];
        h *= 0x100000001b3ULL;
    }
}

void hash_string(std::uint64_t& h, const std::string& s) {
    hash_bytes(h, s.data(), s.size());
    hash_bytes(h, "\x1f", 1);  // field separator
}

json geometry_to_json(const ClusterSpec& g) {
    json j;
    j["kind"] = to_string(g.kind);
    j["n_sites"] = g.n_sites;
    if (g.has_vectors)
        j["vectors"] = {{g.vectors[0].x, g.vectors[0].y},
                        {g.vectors[1].x, g.vectors[1].y}};
    if (!g.explicit_bonds.empty()) {
        json bonds = json::array();
        for (const Bond& b : g.explicit_bonds) bonds.push_back({b.i, b.j});
        j["bonds"] = bonds;
    }
    return j;
}

} // namespace

void validate(const RunConfig& c) {
    if (c.j_a <= 0 || c.jb_over_ja <= 0)
        throw std::invalid_argument("couplings must be positive");
    if (c.lambda_max <= 0 || c.dlambda <= 0)
        throw std::invalid_argument("lambda grid must be positive");
    if (c.t_min <= 0 || c.t_max <= c.t_min || c.beta_points < 2)
        throw std::invalid_argument("invalid temperature grid");
    if (c.tol <= 0 || c.max_iter < 1)
        throw std::invalid_argument("invalid solver settings");
    if (c.geometry.n_sites < 2)
        throw std::invalid_argument("geometry needs at least two sites");
}

RunConfig run_config_from_json(const std::string& text) {
    json j = json::parse(text);
    RunConfig c;
    if (j.contains("geometry"))
        c.geometry = cluster_spec_from_json(j.at("geometry").dump());
    c.j_a = j.value("j_a", c.j_a);
    c.jb_over_ja = j.value("jb_over_ja", c.jb_over_ja);
    c.lambda_max = j.value("lambda_max", c.lambda_max);
    c.dlambda = j.value("dlambda", c.dlambda);
    c.t_min = j.value("t_min", c.t_min);
    c.t_max = j.value("t_max", c.t_max);
    c.beta_points = j.value("beta_points", c.beta_points);
    c.tol = j.value("tol", c.tol);
    c.max_iter = j.value("max_iter", c.max_iter);
    c.seed = j.value("seed", c.seed);
    c.out_dir = j.value("out_dir", c.out_dir);
    validate(c);
    return c;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return run_config_from_json(buf.str());
}

std::uint64_t config_hash(const RunConfig& c) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    hash_string(h, geometry_to_json(c.geometry).dump());
    for (double v : {c.j_a, c.jb_over_ja, c.lambda_max, c.dlambda, c.t_min,
                     c.t_max, c.tol})
        hash_bytes(h, &v, sizeof v);
    for (std::uint64_t v :
         {std::uint64_t(c.beta_points), std::uint64_t(c.max_iter), c.seed})
        hash_bytes(h, &v, sizeof v);
    return h;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string& s) {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad number: " + s);
    return v;
}

void write_csv(const std::string& path, const CsvTable& table) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    for (std::size_t k = 0; k < table.header.size(); ++k)
        out << (k ? "," : "") << table.header[k];
    out << '\n';
    for (const auto& row : table.rows) {
        if (row.size() != table.header.size())
            throw std::invalid_argument("row width does not match header");
        for (std::size_t k = 0; k < row.size(); ++k)
            out << (k ? "," : "") << row[k];
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    CsvTable table;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.push_back("");
        if (first) {
            table.header = std::move(fields);
            first = false;
        } else {
            if (fields.size() != table.header.size())
                throw std::runtime_error("malformed CSV row in " + path);
            table.rows.push_back(std::move(fields));
        }
    }
    if (first) throw std::runtime_error("empty CSV: " + path);
    return table;
}

void write_metadata(const std::string& path, const RunConfig& c,
                    const std::string& command) {
    json j;
    char hash[32];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(config_hash(c)));
    j["config_hash"] = hash;
    j["command"] = command;
    j["config"] = {
        {"geometry", geometry_to_json(c.geometry)},
        {"j_a", c.j_a},
        {"jb_over_ja", c.jb_over_ja},
        {"lambda_max", c.lambda_max},
        {"dlambda", c.dlambda},
        {"t_min", c.t_min},
        {"t_max", c.t_max},
        {"beta_points", c.beta_points},
        {"tol", c.tol},
        {"max_iter", c.max_iter},
        {"seed", c.seed},
    };
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace entherm
