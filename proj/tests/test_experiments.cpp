#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "qsdist/experiments.hpp"

using namespace qsdist;
namespace fs = std::filesystem;

namespace {

constexpr double pi = std::numbers::pi;

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir =
        fs::temp_directory_path() / ("qsdist_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count_occurrences(const std::string& text,
                              const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++n;
    }
    return n;
}

/// Minimal well-formedness scan: every '<' opens a tag that closes, tags
/// nest properly, and attribute quotes are balanced within each tag.
bool svg_is_well_formed(const std::string& text) {
    std::vector<std::string> stack;
    std::size_t pos = 0;
    while ((pos = text.find('<', pos)) != std::string::npos) {
        const std::size_t end = text.find('>', pos);
        if (end == std::string::npos) return false;
        std::string tag = text.substr(pos + 1, end - pos - 1);
        if (count_occurrences(tag, "\"") % 2 != 0) return false;
        if (!tag.empty() && tag.front() == '/') {
            if (stack.empty()) return false;
            if (stack.back() != tag.substr(1)) return false;
            stack.pop_back();
        } else if (!tag.empty() && tag.back() != '/') {
            const std::size_t sp = tag.find_first_of(" \t\n");
            stack.push_back(sp == std::string::npos ? tag : tag.substr(0, sp));
        }
        pos = end + 1;
    }
    return stack.empty();
}

}  // namespace

TEST_SUITE("experiments") {

TEST_CASE("experiment names round trip and reject unknowns") {
    for (const char* name :
         {"spin-distance", "spin-speed", "cat-fact-theta", "cat-fact-phi",
          "ising-distance", "ising-speed", "hs-mixed"}) {
        CHECK(experiment_name(parse_experiment_name(name)) == name);
    }
    CHECK_THROWS_AS(parse_experiment_name("bogus"), std::invalid_argument);
}

TEST_CASE("sweep_points covers the inclusive grid") {
    const std::vector<double> pts = sweep_points({0.0, 2 * pi, pi / 20});
    REQUIRE(pts.size() == 41);
    CHECK(pts.front() == 0.0);
    CHECK(pts.back() == doctest::Approx(2 * pi).epsilon(1e-12));
    CHECK_THROWS_AS(sweep_points({0.0, 1.0, -0.5}), std::invalid_argument);
    CHECK_THROWS_AS(sweep_points({1.0, 0.0, 0.5}), std::invalid_argument);
}

TEST_CASE("default specs fill the standard grids") {
    const ExperimentSpec spin =
        default_experiment_spec(ExperimentKind::SpinDistance);
    CHECK(sweep_points(spin.sweep).size() == 41);
    CHECK(spin.shots == 1024);
    CHECK(spin.mode == RunMode::Sampled);
    const ExperimentSpec ising =
        default_experiment_spec(ExperimentKind::IsingDistance);
    CHECK(sweep_points(ising.sweep).size() == 41);
    REQUIRE(ising.theta_values.size() == 4);
    CHECK(ising.theta_values[0] == doctest::Approx(pi / 2));
}

TEST_CASE("exact spin sweep equals its oracle column") {
    ExperimentSpec spec = default_experiment_spec(ExperimentKind::SpinDistance);
    spec.mode = RunMode::Exact;
    const ResultTable table = run_experiment(spec);
    REQUIRE(table.rows.size() == 41);
    CHECK(table.param_name == "theta");
    for (const ResultRow& row : table.rows) {
        CHECK(std::abs(row.estimate - row.oracle) < 1e-12);
        CHECK(row.std_error == 0.0);
    }
}

TEST_CASE("sampled estimates sit within a few pooled errors") {
    ExperimentSpec spec = default_experiment_spec(ExperimentKind::SpinDistance);
    spec.seed = 21;
    const ResultTable table = run_experiment(spec);
    int outliers = 0;
    for (const ResultRow& row : table.rows) {
        const double slack = std::max(4.0 * row.std_error, 0.05);
        if (std::abs(row.estimate - row.oracle) > slack) ++outliers;
    }
    CHECK(outliers == 0);
}

TEST_CASE("block experiments lay out one series per theta") {
    ExperimentSpec spec = default_experiment_spec(ExperimentKind::IsingDistance);
    spec.mode = RunMode::Exact;
    const ResultTable table = run_experiment(spec);
    CHECK(table.rows.size() == 164);
    REQUIRE(table.series_starts.size() == 4);
    CHECK(table.series_starts[1] == 41);
    CHECK(table.param_name == "chi");
    // Same chi grid in each block.
    CHECK(table.rows[0].param == table.rows[41].param);
    CHECK(table.rows[40].param == doctest::Approx(4 * pi));
}

TEST_CASE("tables are independent of worker scheduling") {
    ExperimentSpec spec = default_experiment_spec(ExperimentKind::CatFactTheta);
    spec.seed = 5;
    const ResultTable a = run_experiment(spec);
    const ResultTable b = run_experiment(spec);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
        CHECK(a.rows[i].estimate == b.rows[i].estimate);
        CHECK(a.rows[i].std_error == b.rows[i].std_error);
    }
}

TEST_CASE("csv writing, header, and parse round trip") {
    const fs::path dir = fresh_dir("csv");
    ExperimentSpec spec = default_experiment_spec(ExperimentKind::SpinDistance);
    spec.seed = 13;
    const ResultTable table = run_experiment(spec);
    const fs::path file = dir / "out.csv";
    write_csv(table, file.string());

    const std::string text = slurp(file);
    CHECK(text.rfind("param,estimate,std_error,oracle\n", 0) == 0);
    CHECK(count_occurrences(text, "\n") == 42);  // header + 41 rows
    CHECK(text.find('\r') == std::string::npos);

    const ResultTable parsed = read_csv(file.string());
    REQUIRE(parsed.rows.size() == table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        CHECK(std::abs(parsed.rows[i].param - table.rows[i].param) < 1e-9);
        CHECK(std::abs(parsed.rows[i].estimate - table.rows[i].estimate) <
              1e-9);
    }
    fs::remove_all(dir);
}

TEST_CASE("read_csv rejects malformed files") {
    const fs::path dir = fresh_dir("badcsv");
    const fs::path file = dir / "bad.csv";
    std::ofstream(file) << "wrong,header\n";
    CHECK_THROWS_AS(read_csv(file.string()), std::invalid_argument);
    std::ofstream(file, std::ios::trunc)
        << "param,estimate,std_error,oracle\n1.0,2.0\n";
    CHECK_THROWS_AS(read_csv(file.string()), std::invalid_argument);
    std::ofstream(file, std::ios::trunc)
        << "param,estimate,std_error,oracle\n1.0,2.0,x,4.0\n";
    CHECK_THROWS_AS(read_csv(file.string()), std::invalid_argument);
    fs::remove_all(dir);
}

TEST_CASE("identical seeds give byte-identical csv files") {
    const fs::path dir = fresh_dir("repro");
    ExperimentSpec spec = default_experiment_spec(ExperimentKind::HsMixed);
    spec.seed = 7;
    const fs::path f1 = dir / "a.csv", f2 = dir / "b.csv";
    write_csv(run_experiment(spec), f1.string());
    write_csv(run_experiment(spec), f2.string());
    CHECK(slurp(f1) == slurp(f2));
    spec.seed = 8;
    write_csv(run_experiment(spec), f2.string());
    CHECK(slurp(f1) != slurp(f2));
    fs::remove_all(dir);
}

TEST_CASE("svg output is well formed and complete") {
    const fs::path dir = fresh_dir("svg");
    ExperimentSpec spec = default_experiment_spec(ExperimentKind::SpinDistance);
    spec.mode = RunMode::Exact;
    const ResultTable table = run_experiment(spec);
    const fs::path file = dir / "plot.svg";
    write_svg(table, file.string());
    const std::string text = slurp(file);
    CHECK(svg_is_well_formed(text));
    CHECK(count_occurrences(text, "<circle") == 41);
    CHECK(count_occurrences(text, "<polyline") == 1);
    CHECK(text.find(">theta</text>") != std::string::npos);

    ExperimentSpec blocks =
        default_experiment_spec(ExperimentKind::IsingDistance);
    blocks.mode = RunMode::Exact;
    write_svg(run_experiment(blocks), file.string());
    const std::string text4 = slurp(file);
    CHECK(svg_is_well_formed(text4));
    CHECK(count_occurrences(text4, "<polyline") == 4);
    CHECK(count_occurrences(text4, "<circle") == 164);

    CHECK_THROWS_AS(write_svg(ResultTable{}, (dir / "x.svg").string()),
                    std::invalid_argument);
    fs::remove_all(dir);
}

TEST_CASE("qasm export writes one named file per point") {
    const fs::path dir = fresh_dir("qasm");
    ExperimentSpec spec = default_experiment_spec(ExperimentKind::SpinDistance);
    spec.sweep = {0.0, pi, pi / 2};
    const auto files = emit_qasm(spec, dir.string());
    REQUIRE(files.size() == 3);
    CHECK(fs::exists(dir / "spin-distance_theta0.0000.qasm"));
    CHECK(fs::exists(dir / "spin-distance_theta1.5708.qasm"));
    CHECK(fs::exists(dir / "spin-distance_theta3.1416.qasm"));
    // theta = pi/2 lowers to the three-op form with a single sx.
    const std::string text = slurp(dir / "spin-distance_theta1.5708.qasm");
    CHECK(count_occurrences(text, "sx q[0];") == 1);
    CHECK(text.substr(0, 13) == "OPENQASM 2.0;");

    ExperimentSpec ising =
        default_experiment_spec(ExperimentKind::IsingDistance);
    ising.sweep = {pi, pi, 1.0};
    ising.theta_values = {pi / 4};
    const auto ifiles = emit_qasm(ising, dir.string());
    REQUIRE(ifiles.size() == 1);
    const std::string itext = slurp(ifiles[0]);
    // Four bond units, each with two Cnots.
    CHECK(count_occurrences(itext, "cx q[") == 8);
    fs::remove_all(dir);
}

TEST_CASE("noise model files parse with broadcast and lists") {
    const fs::path dir = fresh_dir("noisefile");
    const fs::path file = dir / "model.txt";
    std::ofstream(file) << "# device-like numbers\n"
                        << "readout_flip_prob=0.01,0.02,0.03,0.02,0.01\n"
                        << "gate_error_prob_1q = 0.004\n"
                        << "gate_error_prob_2q = 0.07\n";
    const NoiseModel m = load_noise_model(file.string());
    REQUIRE(m.readout_flip_prob.size() == 5);
    CHECK(m.readout_flip_prob[2] == doctest::Approx(0.03));
    CHECK(m.gate_error_prob_1q == doctest::Approx(0.004));

    std::ofstream(file, std::ios::trunc) << "unknown_key=1\n";
    CHECK_THROWS_AS(load_noise_model(file.string()), std::invalid_argument);
    std::ofstream(file, std::ios::trunc) << "gate_error_prob_1q=abc\n";
    CHECK_THROWS_AS(load_noise_model(file.string()), std::invalid_argument);
    fs::remove_all(dir);
}

TEST_CASE("noisy sampled runs bias distances away from the oracle") {
    ExperimentSpec spec = default_experiment_spec(ExperimentKind::CatFactTheta);
    spec.sweep = {pi / 2, pi / 2, 1.0};
    spec.seed = 9;
    spec.shots = 4096;
    spec.noise = default_noise_model(5);
    const ResultTable noisy = run_experiment(spec);
    spec.noise.reset();
    const ResultTable clean = run_experiment(spec);
    REQUIRE(noisy.rows.size() == 1);
    // Depolarization suppresses the all-zeros return probability, so the
    // measured distance overshoots by more than clean shot noise.
    CHECK(noisy.rows[0].estimate > clean.rows[0].oracle);
    CHECK(std::abs(noisy.rows[0].estimate - noisy.rows[0].oracle) >
          std::abs(clean.rows[0].estimate - clean.rows[0].oracle));
}

TEST_CASE("cli runs an experiment end to end") {
    const fs::path dir = fresh_dir("cli");
    const fs::path csv = dir / "table.csv";
    std::ostringstream cmd;
    cmd << QSDIST_CLI_PATH << " --experiment spin-distance --mode exact"
        << " --quiet --out " << csv;
    CHECK(std::system(cmd.str().c_str()) == 0);
    const ResultTable table = read_csv(csv.string());
    CHECK(table.rows.size() == 41);

    std::ostringstream bad;
    bad << QSDIST_CLI_PATH << " --experiment nonsense 2>/dev/null";
    CHECK(std::system(bad.str().c_str()) != 0);
    fs::remove_all(dir);
}

}  // TEST_SUITE
