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

#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "fgit/errors.hpp"
#include "fgit/experiments.hpp"
#include "fgit/io.hpp"

using namespace fgit;

TEST_CASE("number formatting round-trips") {
    for (double v : {0.1, -0.8, 1e-300, 6.02214076e23, 0.0065901022898226082, -0.0}) {
        CHECK(io::parse_double(io::format_double(v)) == v);
    }
    CHECK(io::parse_double(" 2.5 ") == 2.5);
    CHECK_THROWS_AS(io::parse_double("1.0x"), InvalidInput);
    CHECK_THROWS_AS(io::parse_double(""), InvalidInput);
    CHECK_THROWS_AS(io::parse_double("abc"), InvalidInput);
}

TEST_CASE("key=value text") {
    std::istringstream in("# comment\n\na = 1\nb=two words\n");
    const auto kv = io::read_key_values(in);
    REQUIRE(kv.size() == 2);
    CHECK(kv[0] == std::pair<std::string, std::string>{"a", "1"});
    CHECK(kv[1].second == "two words");
    std::istringstream bad("novalue\n");
    CHECK_THROWS_AS(io::read_key_values(bad), InvalidInput);
}

TEST_CASE("spectrum CSV") {
    const auto a = make_model(ModelKind::A, 16);
    std::ostringstream out;
    io::write_spectrum_csv(out, a);
    CHECK(out.str().rfind("omega,weight\n", 0) == 0);
    std::istringstream in(out.str());
    const auto back = io::read_spectrum_csv(in);
    REQUIRE(back.size() == a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        CHECK(back.frequencies()[k] == a.frequencies()[k]);
        CHECK(back.weights()[k] == a.weights()[k]);
    }
    std::istringstream wrong("w,omega\n0,1\n");
    CHECK_THROWS_AS(io::read_spectrum_csv(wrong), InvalidInput);
    std::istringstream short_row("omega,weight\n0.1\n");
    CHECK_THROWS_AS(io::read_spectrum_csv(short_row), InvalidInput);
}

TEST_CASE("moments CSV") {
    const auto b = make_model(ModelKind::B);
    const auto m = sampled_moments(b, 22.3, 12, {100, 77});
    std::ostringstream out;
    io::write_moments_csv(out, m);
    std::istringstream in(out.str());
    const auto back = io::read_moments_csv(in);
    CHECK(back.dt == m.dt);
    CHECK(back.values == m.values);
    CHECK(back.provenance == Provenance::sampled);
    CHECK(back.shots_per_part == 100);
    CHECK(back.seed == 77);
    std::istringstream gap("# dt=1\nn,re,im,provenance,shots,seed\n0,1,0,exact,0,0\n2,1,0,exact,0,0\n");
    CHECK_THROWS_AS(io::read_moments_csv(gap), InvalidInput);
    std::istringstream no_dt("n,re,im,provenance,shots,seed\n0,1,0,exact,0,0\n");
    CHECK_THROWS_AS(io::read_moments_csv(no_dt), InvalidInput);
}

TEST_CASE("curves CSV") {
    TransformCurve c;
    c.grid = {0.0, 0.5};
    c.values = {1.0, 2.0};
    c.kind = CurveKind::reconstructed;
    std::ostringstream out;
    io::write_curves_csv(out, {c});
    CHECK(out.str() == "nu,phi,kind\n0,1,reconstructed\n0.5,2,reconstructed\n");
}

TEST_CASE("plans round-trip through key=value text") {
    const experiments::ModelScenario sc;
    auto req = experiments::model_request(sc, make_model(ModelKind::B), PlanMethod::variance, 0.01, 0.01);
    req.offset = WindowOffset::min_side;
    const auto plan = make_plan(req);
    auto kv = io::plan_to_key_values(plan);
    const auto back = io::plan_from_key_values(kv);
    CHECK(back.period == plan.period);
    CHECK(back.n_terms == plan.n_terms);
    CHECK(back.request.offset == WindowOffset::min_side);

    for (auto &[k, v] : kv) {
        if (k == "n_terms") {
            v = "7";
        }
    }
    CHECK_THROWS_AS(io::plan_from_key_values(kv), InvalidInput);
    CHECK_THROWS_AS(io::plan_from_key_values({{"method", "general"}}), InvalidInput);
}

TEST_CASE("file errors") {
    CHECK_THROWS_AS(io::read_file("/nonexistent/dir/file.txt"), IoError);
    CHECK_THROWS_AS(io::write_file("/nonexistent/dir/file.txt", "x"), IoError);
    const auto path = std::filesystem::temp_directory_path() / "fgit_io_test.txt";
    io::write_file(path, "abc\n");
    CHECK(io::read_file(path) == "abc\n");
    std::filesystem::remove(path);
}
