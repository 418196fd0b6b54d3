// End-to-end tests that drive the built netlang binary. The binary path
// arrives via the NETLANG_BIN environment variable (set by ctest).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string binary() {
    const char* bin = std::getenv("NETLANG_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "NETLANG_BIN must point at the netlang binary");
    return bin;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("netlang_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string read_text(const std::string& path) {
    std::ifstream f(path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream f(path);
    f << text;
}

RunResult run(const std::string& args, const TempDir& tmp) {
    const std::string out_path = tmp.file("__stdout");
    const std::string err_path = tmp.file("__stderr");
    const std::string cmd = binary() + " " + args + " >" + out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());
    RunResult res;
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    res.out = read_text(out_path);
    res.err = read_text(err_path);
    return res;
}

std::size_t count_edge_lines(const std::string& path) {
    std::ifstream f(path);
    std::string line;
    std::size_t n = 0;
    while (std::getline(f, line)) {
        if (!line.empty() && line[0] != '#') ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("generate writes the requested network") {
    TempDir tmp;
    const std::string out = tmp.file("ring.txt");
    auto res = run("generate --family regular --nodes 400 --mean-degree 20 --seed 1 --out " + out,
                   tmp);
    CHECK(res.exit_code == 0);
    CHECK(count_edge_lines(out) == 4000);
    const std::string text = read_text(out);
    CHECK(text.find("# generator: family=regular nodes=400 mean_degree=20") != std::string::npos);
    CHECK(text.back() == '\n');

    auto sw = run("generate --family smallworld --nodes 400 --mean-degree 20 --rewire-p 0.01 "
                  "--seed 1 --out " + tmp.file("sw.txt"),
                  tmp);
    CHECK(sw.exit_code == 0);
    CHECK(count_edge_lines(tmp.file("sw.txt")) == 4000);
}

TEST_CASE("missing required flag exits 2 with usage text") {
    TempDir tmp;
    auto res = run("generate --family regular --nodes 400 --mean-degree 20", tmp);
    CHECK(res.exit_code == 2);
    CHECK(res.err.find("--out") != std::string::npos);

    auto unknown = run("grow --model nosuch --n-final 10 --out " + tmp.file("x.txt"), tmp);
    CHECK(unknown.exit_code == 2);
    CHECK(unknown.err.find("motter") != std::string::npos);
    CHECK(unknown.err.find("dm") != std::string::npos);
    CHECK(unknown.err.find("st") != std::string::npos);
}

TEST_CASE("analyze a complete graph") {
    TempDir tmp;
    const std::string k10 = tmp.file("k10.txt");
    run("generate --family complete --nodes 10 --out " + k10, tmp);
    auto res = run("analyze " + k10, tmp);
    CHECK(res.exit_code == 0);
    // CSV row: n,m,mean_degree,density,C,L,...
    CHECK(res.out.find("\n10,45,9,1,1,1,") != std::string::npos);
}

TEST_CASE("strict analyze of a disconnected file exits 3") {
    TempDir tmp;
    const std::string path = tmp.file("two.txt");
    write_text(path, "0 1\n2 3\n");
    auto res = run("analyze --strict " + path, tmp);
    CHECK(res.exit_code == 3);
    CHECK(res.err.find("graph has 2 components") != std::string::npos);

    auto loose = run("analyze " + path, tmp);
    CHECK(loose.exit_code == 0);
}

TEST_CASE("analyze warns about dropped lines and writes a label map") {
    TempDir tmp;
    const std::string path = tmp.file("words.txt");
    write_text(path, "cat dog\ndog cat\nowl owl\ndog tree\ntree cat\n");
    const std::string map = tmp.file("map.tsv");
    auto res = run("analyze --label-map " + map + " " + path, tmp);
    CHECK(res.exit_code == 0);
    CHECK(res.err.find("1 self-loop") != std::string::npos);
    CHECK(res.err.find("1 duplicate") != std::string::npos);
    CHECK(read_text(map).find("0\tcat\n") == 0);
}

TEST_CASE("parse error reports the line and exits 3") {
    TempDir tmp;
    const std::string path = tmp.file("bad.txt");
    write_text(path, "0 1\nnot numeric\n");
    auto res = run("analyze " + path, tmp);
    CHECK(res.exit_code == 3);
    CHECK(res.err.find("line 2") != std::string::npos);
}

TEST_CASE("simulate learning: strong bias always completes") {
    TempDir tmp;
    const std::string stats = tmp.file("stats.csv");
    auto res = run("simulate --model learning --network scalefree --nodes 400 --mean-degree 20 "
                   "--beta 10 --innovators 10 --alpha-adult 0.001 --runs 3 --seed 7 --stats-out " +
                       stats,
                   tmp);
    CHECK(res.exit_code == 0);
    const std::string csv = read_text(stats);
    CHECK(csv.find("learning,scalefree,400,") != std::string::npos);
    // success_prob column reads 1
    std::istringstream lines(csv);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream rs(row);
    while (std::getline(rs, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() >= 12);
    CHECK(cells[11] == "1");
}

TEST_CASE("simulate writes trajectories") {
    TempDir tmp;
    const std::string traj = tmp.file("traj.csv");
    auto res = run("simulate --model static --network complete --nodes 100 --alpha 0.5 "
                   "--t-max 20000 --runs 2 --seed 5 --traj-out " + traj,
                   tmp);
    CHECK(res.exit_code == 0);
    const std::string text = read_text(traj);
    CHECK(text.rfind("run,step,count_c,fraction_c\n", 0) == 0);
    CHECK(text.find("\n1,") != std::string::npos);  // second run present
}

TEST_CASE("sweep emits one row per value and topology") {
    TempDir tmp;
    auto res = run("sweep --model learning --axis beta --values 2,10 "
                   "--networks regular,random --nodes 200 --mean-degree 10 --innovators 10 "
                   "--alpha-adult 0.001 --runs 2 --seed 3",
                   tmp);
    CHECK(res.exit_code == 0);
    // header + 4 rows
    CHECK(std::count(res.out.begin(), res.out.end(), '\n') == 5);

    auto bad = run("sweep --model learning --axis nosuch --values 1 --runs 1", tmp);
    CHECK(bad.exit_code == 2);
    CHECK(bad.err.find("valid axes") != std::string::npos);
}

TEST_CASE("logistic curve output") {
    TempDir tmp;
    auto res = run("logistic --n 400 --alpha 0.0001 --c0 200 --dt 0.5 --t-end 50", tmp);
    CHECK(res.exit_code == 0);
    std::istringstream lines(res.out);
    std::string header, first;
    std::getline(lines, header);
    CHECK(header == "t,c,fraction");
    std::getline(lines, first);
    CHECK(first == "0,200,0.5");

    // fraction column is monotone non-decreasing
    double prev = 0.0;
    std::string line;
    while (std::getline(lines, line)) {
        const auto last_comma = line.rfind(',');
        const double frac = std::stod(line.substr(last_comma + 1));
        CHECK(frac >= prev - 1e-15);
        prev = frac;
    }
}

TEST_CASE("grow writes trees and validates the model name") {
    TempDir tmp;
    const std::string out = tmp.file("tree.txt");
    auto res = run("grow --model motter --m 1 --n-final 100 --seed 2 --out " + out, tmp);
    CHECK(res.exit_code == 0);
    CHECK(count_edge_lines(out) == 99);
}

TEST_CASE("grow dm c=0 and generate scalefree agree through analyze") {
    TempDir tmp;
    const std::string a = tmp.file("dm.txt");
    const std::string b = tmp.file("sf.txt");
    run("grow --model dm --c 0 --m 3 --n-final 2000 --seed 9 --out " + a, tmp);
    run("generate --family scalefree --m0 3 --m 3 --nodes 2000 --seed 10 --out " + b, tmp);
    auto ra = run("analyze --kmin 3 " + a, tmp);
    auto rb = run("analyze --kmin 3 " + b, tmp);
    CHECK(ra.exit_code == 0);
    CHECK(rb.exit_code == 0);
    auto gamma_of = [](const std::string& out) {
        const auto pos = out.rfind('\n', out.size() - 2);
        std::istringstream row(out.substr(pos + 1));
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(row, cell, ',')) cells.push_back(cell);
        return std::stod(cells.at(9));
    };
    const double ga = gamma_of(ra.out);
    const double gb = gamma_of(rb.out);
    CHECK(std::abs(ga - gb) < 0.8);  // same family of exponents at desk scale
}

TEST_CASE("config file supplies defaults and flags override it") {
    TempDir tmp;
    const std::string cfg = tmp.file("gen.json");
    const std::string out = tmp.file("from_config.txt");
    write_text(cfg, "{\"family\": \"regular\", \"nodes\": 100, \"mean_degree\": 4, \"seed\": 5, "
                    "\"out\": \"" + out + "\"}");
    auto res = run("generate --config " + cfg, tmp);
    CHECK(res.exit_code == 0);
    CHECK(count_edge_lines(out) == 200);

    // flag wins over the config value
    auto res2 = run("generate --config " + cfg + " --mean-degree 6 --out " + out, tmp);
    CHECK(res2.exit_code == 0);
    CHECK(count_edge_lines(out) == 300);

    // unknown keys are rejected
    const std::string bad = tmp.file("bad.json");
    write_text(bad, "{\"nodes\": 100, \"bogus_key\": 1}");
    auto res3 = run("generate --config " + bad, tmp);
    CHECK(res3.exit_code == 2);
    CHECK(res3.err.find("bogus_key") != std::string::npos);

    // probabilities validated
    auto res4 = run("simulate --model static --network complete --nodes 50 --alpha 1.5 --runs 1",
                    tmp);
    CHECK(res4.exit_code == 2);
    CHECK(res4.err.find("[0,1]") != std::string::npos);
}

TEST_CASE("repeated commands produce byte-identical outputs") {
    TempDir tmp;
    const std::string a1 = tmp.file("a1.txt"), a2 = tmp.file("a2.txt");
    run("generate --family scalefree --nodes 500 --m0 5 --m 3 --seed 11 --out " + a1, tmp);
    run("generate --family scalefree --nodes 500 --m0 5 --m 3 --seed 11 --out " + a2, tmp);
    CHECK(read_text(a1) == read_text(a2));

    const std::string s1 = tmp.file("s1.csv"), s2 = tmp.file("s2.csv");
    const std::string t1 = tmp.file("t1.csv"), t2 = tmp.file("t2.csv");
    const std::string sim_args =
        "simulate --model interaction --network random --nodes 200 --mean-degree 10 "
        "--alpha-child 0.5 --alpha-adult 0.001 --runs 4 --seed 21 ";
    run(sim_args + "--stats-out " + s1 + " --traj-out " + t1, tmp);
    run(sim_args + "--stats-out " + s2 + " --traj-out " + t2, tmp);
    CHECK(read_text(s1) == read_text(s2));
    CHECK(read_text(t1) == read_text(t2));
    CHECK(!read_text(t1).empty());
}
