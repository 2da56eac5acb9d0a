#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

std::string bin() {
    const char* b = std::getenv("PCC_BIN");
    REQUIRE(b != nullptr);
    return b;
}

fs::path work_dir() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "pcc_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

int run(const std::string& args, std::string* output = nullptr) {
    auto out_file = work_dir() / "cmd.out";
    std::string cmd = bin() + " " + args + " > " + out_file.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    if (output) {
        std::ifstream in(out_file);
        std::stringstream ss;
        ss << in.rdbuf();
        *output = ss.str();
    }
    if (WIFEXITED(status))
        return WEXITSTATUS(status);
    return -1;
}

std::string file_path(const std::string& name) { return (work_dir() / name).string(); }

void write_file(const std::string& name, const std::string& content) {
    std::ofstream out(file_path(name));
    out << content;
}

std::string read_file(const std::string& name) {
    std::ifstream in(file_path(name));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("generate, color, verify pipeline exits 0") {
    CHECK(run("generate fans 2 3 -o " + file_path("f.g")) == 0);
    CHECK(run("color --algo outerplanar -p 2 -g " + file_path("f.g") + " -o " +
              file_path("f.col")) == 0);
    CHECK(run("verify -g " + file_path("f.g") + " -c " + file_path("f.col") + " -p 2") == 0);
    CHECK(run("verify -g " + file_path("f.g") + " -c " + file_path("f.col") +
              " -p 2 --mode subsets") == 0);
}

TEST_CASE("failed verification exits 1 and prints the violation") {
    write_file("p4.g", "4 3\n0 1\n1 2\n2 3\n");
    write_file("p4.col", "4 1 2\n0 0\n1 1\n2 0\n3 1\n");
    std::string output;
    CHECK(run("verify -g " + file_path("p4.g") + " -c " + file_path("p4.col") + " -p 2",
              &output) == 1);
    CHECK(output.find("NOT p-centered") != std::string::npos);
    CHECK(output.find("violator") != std::string::npos);
}

TEST_CASE("exact command") {
    write_file("p4.g", "4 3\n0 1\n1 2\n2 3\n");
    std::string output;
    CHECK(run("exact -g " + file_path("p4.g") + " -p 2 -o " + file_path("p4w.col"), &output) == 0);
    CHECK(output.find("chi_p = 3") != std::string::npos);
    CHECK(run("verify -g " + file_path("p4.g") + " -c " + file_path("p4w.col") + " -p 2") == 0);

    // Both proper 2-colorings of P4 alternate with no unique color, so
    // lin_2(P4) = 3.
    CHECK(run("exact -g " + file_path("p4.g") + " -p 2 --linear --decision 3", &output) == 0);
    CHECK(output.find("lin_p >= 3: true") != std::string::npos);
    CHECK(run("exact -g " + file_path("p4.g") + " -p 2 --linear --decision 4", &output) == 0);
    CHECK(output.find("lin_p >= 4: false") != std::string::npos);
    CHECK(run("exact -g " + file_path("p4.g") + " -p 2 --linear", &output) == 0);
    CHECK(output.find("lin_p = 3") != std::string::npos);
}

TEST_CASE("bench emits the golden csv schema with verified rows") {
    auto csv = file_path("bench.csv");
    CHECK(run("bench --family stacked --n 25 --p 1..2 --seeds 2 --csv " + csv) == 0);
    std::string content = read_file("bench.csv");
    std::stringstream in(content);
    std::string header;
    std::getline(in, header);
    CHECK(header == "family,n,p,seed,colors_used,palette_bound,iterations,runtime_ms,verified");
    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        ++rows;
        CHECK(line.find("true") != std::string::npos);
        CHECK(line.rfind("stacked,25,", 0) == 0);
        // colors_used <= palette_bound on every deterministic row.
        std::stringstream fields(line);
        std::string tok;
        std::vector<std::string> cols;
        while (std::getline(fields, tok, ',')) cols.push_back(tok);
        REQUIRE(cols.size() == 9);
        CHECK(std::stoll(cols[4]) <= std::stoll(cols[5]));
    }
    CHECK(rows == 4);
}

TEST_CASE("bench records failed randomized runs as unverified") {
    auto csv = file_path("bench_fail.csv");
    CHECK(run("bench --family bounded-degree --n 20 --delta 3 --edges 25 --p 1 --seeds 1 "
              "--palette-scale 0.00001 --csv " +
              csv) == 0);
    std::string content = read_file("bench_fail.csv");
    CHECK(content.find("false") != std::string::npos);
    CHECK(content.find("true") == std::string::npos);
}

TEST_CASE("usage and input errors exit 2") {
    std::string output;
    CHECK(run("frobnicate", &output) == 2);
    CHECK(run("generate nosuchfamily 1 -o " + file_path("x.g"), &output) == 2);
    CHECK(run("generate stacked 10 -o " + file_path("x.g"), &output) == 2);  // missing --seed
    CHECK(output.find("--seed") != std::string::npos);
    write_file("bad.g", "2 1\n1 0\n");
    CHECK(run("verify -g " + file_path("bad.g") + " -c nope.col -p 1", &output) == 2);

    // Randomized coloring without --seed.
    CHECK(run("generate bounded-degree 20 3 20 --seed 1 -o " + file_path("b.g")) == 0);
    CHECK(run("color --algo degree -p 1 -g " + file_path("b.g") + " -o " + file_path("b.col"),
              &output) == 2);
    CHECK(output.find("--seed") != std::string::npos);
}

TEST_CASE("resource failures exit 3") {
    std::string output;
    // One color on an edge can never finish; the cap fails honestly.
    write_file("k2.g", "2 1\n0 1\n");
    CHECK(run("color --algo degree -p 1 --seed 4 --palette 1 --iteration-cap 40 -g " +
                  file_path("k2.g") + " -o " + file_path("k2.col"),
              &output) == 3);
    CHECK(!fs::exists(file_path("k2.col")));  // no unverified coloring is written

    CHECK(run("generate lower-bound 3 3 2 4 -o " + file_path("big.g"), &output) == 3);
    CHECK(output.find("cap") != std::string::npos);
}

TEST_CASE("stw and compose paths through the cli") {
    CHECK(run("generate stacked 30 --seed 6 -o " + file_path("s.g") + " --decomposition " +
              file_path("s.dec")) == 0);
    CHECK(run("color --algo stw -p 2 -g " + file_path("s.g") + " --decomposition " +
              file_path("s.dec") + " -o " + file_path("s.col") + " --verify") == 0);

    CHECK(run("generate synth-product 12 5 3 --seed 8 -o " + file_path("prod.g") +
              " --layering " + file_path("prod.lay") + " --partition " + file_path("prod.part") +
              " --quotient " + file_path("prod.quot") + " --decomposition " +
              file_path("prod.dec")) == 0);
    CHECK(run("color --algo stw -p 2 -g " + file_path("prod.quot") + " --decomposition " +
              file_path("prod.dec") + " -o " + file_path("psi.col")) == 0);
    CHECK(run("color --algo planar-compose -p 2 -g " + file_path("prod.g") + " --layering " +
              file_path("prod.lay") + " --partition " + file_path("prod.part") +
              " --quotient-coloring " + file_path("psi.col") + " -o " + file_path("prod.col") +
              " --verify-quotient") == 0);
    CHECK(run("verify -g " + file_path("prod.g") + " -c " + file_path("prod.col") + " -p 2") ==
          0);
}

TEST_CASE("explicit layout files are honored") {
    write_file("c4.g", "4 4\n0 1\n0 3\n1 2\n2 3\n");
    write_file("c4.layout", "0\n1\n2\n3\n");
    CHECK(run("color --algo outerplanar -p 2 -g " + file_path("c4.g") + " --layout " +
              file_path("c4.layout") + " -o " + file_path("c4.col") + " --verify") == 0);
    write_file("c4bad.layout", "0\n2\n1\n3\n");
    std::string output;
    CHECK(run("color --algo outerplanar -p 2 -g " + file_path("c4.g") + " --layout " +
                  file_path("c4bad.layout") + " -o " + file_path("c4b.col"),
              &output) == 2);
}

TEST_CASE("linear verification through the cli") {
    write_file("p4.g", "4 3\n0 1\n1 2\n2 3\n");
    write_file("p4lin.col", "4 1 3\n0 0\n1 1\n2 2\n3 0\n");
    CHECK(run("verify -g " + file_path("p4.g") + " -c " + file_path("p4lin.col") +
              " -p 2 --linear") == 0);
    std::string output;
    write_file("p4bad.col", "4 1 2\n0 0\n1 1\n2 0\n3 1\n");
    CHECK(run("verify -g " + file_path("p4.g") + " -c " + file_path("p4bad.col") +
              " -p 2 --linear", &output) == 1);
    CHECK(output.find("violating path") != std::string::npos);
}

TEST_CASE("genus composition through the cli") {
    // gplus = P3 layered 0,1,2 with a layer-respecting coloring; g adds one
    // apex in layer 1 joined to everything.
    write_file("gp.g", "3 2\n0 1\n1 2\n");
    write_file("gp.lay", "0 0\n1 1\n2 2\n");
    write_file("gp.col", "3 2 2 2\n0 0 0\n1 1 0\n2 0 1\n");
    write_file("gz.g", "4 5\n0 1\n1 2\n0 3\n1 3\n2 3\n");
    write_file("gz.lay", "0 0\n1 1\n2 2\n3 1\n");
    write_file("gz.z", "3\n");
    CHECK(run("color --algo genus-compose -p 1 -g " + file_path("gz.g") + " --layering " +
              file_path("gz.lay") + " --z-set " + file_path("gz.z") + " --gplus " +
              file_path("gp.g") + " --w-layering " + file_path("gp.lay") +
              " --gplus-coloring " + file_path("gp.col") + " --genus 1 -o " +
              file_path("gz.col") + " --verify") == 0);
    CHECK(run("verify -g " + file_path("gz.g") + " -c " + file_path("gz.col") + " -p 1") == 0);
}

TEST_CASE("width-4 coloring via a layer decomposition directory") {
    write_file("k5.g", "5 10\n0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
    write_file("k5.dec", "1\n5 0 1 2 3 4\n");
    auto dir = work_dir() / "layers";
    fs::create_directories(dir);
    {
        std::ofstream l0(dir / "layer0.dec");
        l0 << "1\n1 0\n";
        std::ofstream l1(dir / "layer1.dec");
        l1 << "1\n4 0 1 2 3\n";
    }
    CHECK(run("color --algo stw -p 2 -g " + file_path("k5.g") + " --decomposition " +
              file_path("k5.dec") + " --layer-decompositions " + dir.string() + " -o " +
              file_path("k5.col") + " --verify") == 0);
    // Without the layer decompositions the width-4 input is refused.
    std::string output;
    CHECK(run("color --algo stw -p 2 -g " + file_path("k5.g") + " --decomposition " +
                  file_path("k5.dec") + " -o " + file_path("k5b.col"),
              &output) == 2);
}

TEST_CASE("emitted files parse back through the cli") {
    CHECK(run("generate maximal-outerplanar 40 --seed 2 -o " + file_path("m.g") +
              " --decomposition " + file_path("m.dec")) == 0);
    CHECK(run("color --algo outerplanar -p 3 -g " + file_path("m.g") + " -o " +
              file_path("m.col")) == 0);
    // Both files re-read by independent subcommands.
    CHECK(run("verify -g " + file_path("m.g") + " -c " + file_path("m.col") + " -p 3") == 0);
    CHECK(run("color --algo stw -p 1 -g " + file_path("m.g") + " --decomposition " +
              file_path("m.dec") + " -o " + file_path("m1.col") + " --verify") == 0);
}
