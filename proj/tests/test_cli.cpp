#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "wmsudoku/grid.hpp"

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(WMSUDOKU_CLI) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("wmsudoku_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("generate") {
    const fs::path dir = scratch("generate");
    CHECK(run("generate --clues 32 --seed 7 --out " + (dir / "p.txt").string()) == 0);
    CHECK(wmsudoku::read_grid_file((dir / "p.txt").string()).filled_count() == 32);
    CHECK(run("generate --clues 81 --seed 7 --out " + (dir / "full.txt").string()) == 0);
    CHECK(wmsudoku::read_grid_file((dir / "full.txt").string()).complete());
    CHECK(run("generate --clues 5 --seed 7 --out " + (dir / "bad.txt").string()) == 1);
    CHECK(!fs::exists(dir / "bad.txt"));
    CHECK(run("generate --seed 7") == 1);
}

TEST_CASE("run and report") {
    const fs::path dir = scratch("run");
    const std::string common = "run --set rounds=76,49 --seeds 42,43 --out ";
    REQUIRE(run(common + (dir / "a").string()) == 0);
    REQUIRE(run(common + (dir / "b").string() + " --jobs 2") == 0);
    for (const char* seed : {"seed-42", "seed-43"}) {
        const fs::path la = dir / "a" / "runs" / seed / "tournament.log";
        const fs::path lb = dir / "b" / "runs" / seed / "tournament.log";
        REQUIRE(fs::exists(la));
        CHECK(slurp(la) == slurp(lb));
        CHECK(fs::exists(dir / "a" / "runs" / seed / "config.snapshot"));
    }

    // the snapshot alone reproduces the run
    const fs::path snap = dir / "a" / "runs" / "seed-42" / "config.snapshot";
    REQUIRE(run("run --config " + snap.string() + " --out " + (dir / "c").string()) == 0);
    CHECK(slurp(dir / "c" / "runs" / "seed-42" / "tournament.log") ==
          slurp(dir / "a" / "runs" / "seed-42" / "tournament.log"));

    REQUIRE(run("report --runs " + (dir / "a" / "runs").string() + " --out " + (dir / "ra").string()) == 0);
    REQUIRE(run("report --runs " + (dir / "b" / "runs").string() + " --out " + (dir / "rb").string()) == 0);
    for (const char* f : {"popularity.csv", "effectiveness.csv", "usage_by_memory.csv", "score_matrix.csv"}) {
        REQUIRE(fs::exists(dir / "ra" / f));
        CHECK(!slurp(dir / "ra" / f).empty());
        CHECK(slurp(dir / "ra" / f) == slurp(dir / "rb" / f));
    }
    CHECK(run("report --runs " + (dir / "a" / "runs").string() + " --out " + (dir / "rc").string() +
              " --attribution all --skill 8") == 0);
}

TEST_CASE("error exit codes") {
    const fs::path dir = scratch("errors");
    {
        std::ofstream cfg(dir / "bad.cfg");
        cfg << "mc_max=60\n";
    }
    CHECK(run("run --config " + (dir / "bad.cfg").string() + " --out " + (dir / "x").string()) == 1);
    CHECK(run("run --set nonsense=1 --out " + (dir / "x").string()) == 1);
    CHECK(run("run --config " + (dir / "missing.cfg").string()) == 2);

    fs::create_directories(dir / "empty");
    CHECK(run("report --runs " + (dir / "empty").string() + " --out " + (dir / "r").string()) == 2);

    // mixed configurations
    REQUIRE(run("run --set rounds=76 --seeds 1 --out " + (dir / "mix").string()) == 0);
    REQUIRE(run("run --set rounds=76 --set max_steps=3 --seeds 2 --out " + (dir / "mix").string()) == 0);
    CHECK(run("report --runs " + (dir / "mix" / "runs").string() + " --out " + (dir / "r").string()) == 2);
    CHECK(run("bogus") == 1);
}
