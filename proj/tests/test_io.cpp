#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "entherm/io.hpp"
#include "entherm/svg.hpp"

using namespace entherm;

namespace {

std::string temp_file(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("doubles survive the CSV round trip exactly") {
    const std::vector<double> values{0.1, 1.0 / 3.0, -2.7182818284590452,
                                     1e-300, 12870.0, 5.04871e-17};
    CsvTable table;
    table.header = {"x"};
    for (double v : values) table.rows.push_back({format_double(v)});
    const std::string path = temp_file("entherm_roundtrip.csv");
    write_csv(path, table);
    const CsvTable back = read_csv(path);
    REQUIRE(back.rows.size() == values.size());
    for (std::size_t k = 0; k < values.size(); ++k)
        CHECK(parse_double(back.rows[k][0]) == values[k]);
    std::remove(path.c_str());
}

TEST_CASE("config hash tracks physics fields only") {
    RunConfig a;
    const std::uint64_t base = config_hash(a);

    RunConfig b = a;
    b.out_dir = "/somewhere/else";
    CHECK(config_hash(b) == base);

    for (auto mutate : std::vector<void (*)(RunConfig&)>{
             [](RunConfig& c) { c.j_a = 2.0; },
             [](RunConfig& c) { c.jb_over_ja = 0.5; },
             [](RunConfig& c) { c.lambda_max = 4.0; },
             [](RunConfig& c) { c.dlambda = 0.01; },
             [](RunConfig& c) { c.seed = 42; },
             [](RunConfig& c) { c.geometry.n_sites = 10; },
             [](RunConfig& c) { c.geometry.kind = ClusterKind::square; },
         }) {
        RunConfig c = a;
        mutate(c);
        CHECK(config_hash(c) != base);
    }
}

TEST_CASE("run config JSON parsing with defaults") {
    const RunConfig c = run_config_from_json(
        R"({"geometry": {"kind": "chain", "n_sites": 10},
            "jb_over_ja": 1.5, "seed": 7})");
    CHECK(c.geometry.n_sites == 10);
    CHECK(c.jb_over_ja == doctest::Approx(1.5));
    CHECK(c.seed == 7);
    CHECK(c.dlambda == doctest::Approx(0.02));
    CHECK(c.j_b() == doctest::Approx(1.5));

    CHECK_THROWS(run_config_from_json(R"({"dlambda": -1})"));
    CHECK_THROWS(run_config_from_json(R"({"j_a": 0})"));
}

TEST_CASE("metadata sidecar carries the hash") {
    RunConfig c;
    const std::string path = temp_file("entherm_meta.json");
    write_metadata(path, c, "sweep");
    const std::string text = slurp(path);
    CHECK(text.find("config_hash") != std::string::npos);
    CHECK(text.find("sweep") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("empty plot still renders an axes frame") {
    PlotSpec spec;
    spec.title = "empty";
    const std::string svg = render_plot(spec);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<rect") != std::string::npos);
    CHECK(svg.find("polyline") == std::string::npos);
}

TEST_CASE("single point renders one marker") {
    PlotSpec spec;
    PlotSeries s;
    s.x = {1.0};
    s.y = {2.0};
    spec.series.push_back(s);
    const std::string svg = render_plot(spec);
    CHECK(svg.find("<circle") != std::string::npos);
}

TEST_CASE("overlay plot holds both series") {
    PlotSpec spec;
    spec.log_x = true;
    PlotSeries line;
    line.x = {0.01, 0.1, 1.0, 10.0};
    line.y = {0.0, 0.2, 0.6, 0.69};
    PlotSeries marks;
    marks.x = {0.05, 0.5, 5.0};
    marks.y = {0.1, 0.4, 0.68};
    marks.line = false;
    marks.markers = true;
    spec.series = {line, marks};
    const std::string svg = render_plot(spec);
    CHECK(svg.find("polyline") != std::string::npos);
    CHECK(svg.find("circle") != std::string::npos);
}
