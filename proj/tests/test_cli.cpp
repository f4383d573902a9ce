// Copyright 2026 The fgit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "fgit/io.hpp"

namespace fs = std::filesystem;

namespace {

const std::string cli = FGIT_CLI_PATH;

fs::path scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / "fgit_cli_test";
        fs::remove_all(d);
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

int run(const std::string &args) {
    const int status = std::system((cli + " " + args + " >/dev/null 2>&1").c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string capture(const std::string &args) {
    std::string out;
    FILE *pipe = popen((cli + " " + args + " 2>/dev/null").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t n = 0;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) {
        out.append(buf, n);
    }
    pclose(pipe);
    return out;
}

std::string path(const std::string &name) { return (scratch() / name).string(); }

} // namespace

TEST_CASE("model summaries") {
    const auto a = capture("model --kind A");
    CHECK(a.find("mu1=-0.911\n") != std::string::npos);
    CHECK(a.find("sigma=0.031\n") != std::string::npos);
    REQUIRE(run("model --kind A --n-eigen 2 --out " + path("two.csv")) == 0);
    CHECK(fgit::io::read_file(path("two.csv")).find("omega,weight\n") == 0);
}

TEST_CASE("plan commands") {
    CHECK(capture("plan").find("n_terms=218\n") != std::string::npos);
    CHECK(capture("plan --method variance --model A").find("n_terms=25\n") != std::string::npos);
    CHECK(capture("plan --method variance --model B").find("n_terms=31\n") != std::string::npos);
    CHECK(capture("plan --method variance --mu1 20 --sigma 22 --window 0 100 --delta 1 --Sigma 0.01 --eps 0.01 "
                  "--omega 1")
              .find("n_terms=339\n") != std::string::npos);
    const auto sweep = capture("plan --method variance --model A --sweep 0.001 0.1 3");
    CHECK(sweep.rfind("eps_p,method,period", 0) == 0);
}

TEST_CASE("config file precedence") {
    fgit::io::write_file(path("cfg.txt"), "# plan settings\nmethod=variance\nmodel=B\nwindow=-1 -0.8\neps=0.01\n");
    CHECK(capture("plan --config " + path("cfg.txt")).find("n_terms=31\n") != std::string::npos);
    CHECK(capture("plan --config " + path("cfg.txt") + " --model A").find("n_terms=25\n") != std::string::npos);
    fgit::io::write_file(path("bad.txt"), "no_such_key=1\n");
    CHECK(run("plan --config " + path("bad.txt")) == 1);
}

TEST_CASE("exit codes") {
    CHECK(run("plan --delta -1") == 1);
    CHECK(run("plan --no-such-flag") == 1);
    CHECK(run("plan --method central --order 16 --central-mode simplified --model A") == 2);
    CHECK(run("plan --config " + path("missing.txt")) == 3);
    CHECK(run("model --kind A --out /nonexistent/dir/x.csv") == 3);
    CHECK(run("reconstruct --model B --moments " + path("missing.csv")) == 3);
}

TEST_CASE("outputs are byte-identical across runs") {
    const std::vector<std::string> commands{
        "model --kind B --out {}",
        "moments --model B --method variance --sampled --seed 3 --out {}",
        "reconstruct --model B --method variance --grid-count 64 --out {}",
        "sweep --count 3 --grid-count 64 --out {}",
        "shots-demo --model A --method variance --seed 5 --seeds 4 --grid-count 64 --out {}",
        "report --out {}",
    };
    int i = 0;
    for (auto cmd : commands) {
        const auto pos = cmd.find("{}");
        const auto first = path("first" + std::to_string(i) + ".out");
        const auto second = path("second" + std::to_string(i) + ".out");
        REQUIRE(run(cmd.substr(0, pos) + first) == 0);
        REQUIRE(run(cmd.substr(0, pos) + second) == 0);
        CHECK(fgit::io::read_file(first) == fgit::io::read_file(second));
        ++i;
    }
    CHECK(fgit::io::read_file(path("first2.out.meta")).find("eps_p_measured=") != std::string::npos);
}

TEST_CASE("sampled moments feed reconstruction") {
    REQUIRE(run("moments --model B --method variance --sampled --seed 9 --out " + path("m.csv")) == 0);
    REQUIRE(run("reconstruct --model B --method variance --grid-count 64 --moments " + path("m.csv") + " --out " +
                path("c.csv")) == 0);
    const auto meta = fgit::io::read_file(path("c.csv.meta"));
    CHECK(meta.find("eps_s_measured=") != std::string::npos);
    CHECK(fgit::io::read_file(path("c.csv")).find("sampled_reconstructed") != std::string::npos);
    // Moments from a different plan do not match the kernel period.
    CHECK(run("reconstruct --model B --method general --moments " + path("m.csv")) == 1);
}

TEST_CASE("plan files") {
    REQUIRE(run("plan --method variance --model B --out " + path("plan.txt")) == 0);
    CHECK(run("reconstruct --model B --grid-count 32 --plan " + path("plan.txt") + " --out " + path("p.csv")) == 0);
    CHECK(run("reconstruct --model B --norm 2 --spectrum " + path("first0.out") + " --plan " + path("plan.txt")) == 1);
}
