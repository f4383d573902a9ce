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

#include "fgit/io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

#include "fgit/errors.hpp"

namespace fgit::io {

namespace {

std::string trim(const std::string &s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream ss(line);
    while (std::getline(ss, field, sep)) {
        out.push_back(trim(field));
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

template <class Int> Int parse_int(const std::string &token) {
    Int v{};
    const auto *end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, v);
    if (ec != std::errc{} || ptr != end || token.empty()) {
        throw InvalidInput("not an integer: '" + token + "'");
    }
    return v;
}

bool next_data_line(std::istream &in, std::string &line) {
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!trim(line).empty()) {
            return true;
        }
    }
    return false;
}

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(const std::string &token) {
    const auto t = trim(token);
    if (t.empty()) {
        throw InvalidInput("empty numeric field");
    }
    double v = 0.0;
    const auto *end = t.data() + t.size();
    auto [ptr, ec] = std::from_chars(t.data(), end, v);
    if (ec != std::errc{} || ptr != end) {
        throw InvalidInput("not a number: '" + t + "'");
    }
    return v;
}

KeyValues read_key_values(std::istream &in) {
    KeyValues kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw InvalidInput("line " + std::to_string(lineno) + ": expected key=value");
        }
        kv.emplace_back(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
    }
    return kv;
}

void write_key_values(std::ostream &out, const KeyValues &kv) {
    for (const auto &[k, v] : kv) {
        out << k << '=' << v << '\n';
    }
}

void write_spectrum_csv(std::ostream &out, const DiscreteSpectrum &s) {
    out << "omega,weight\n";
    const auto f = s.frequencies();
    const auto w = s.weights();
    for (std::size_t k = 0; k < s.size(); ++k) {
        out << format_double(f[k]) << ',' << format_double(w[k]) << '\n';
    }
}

DiscreteSpectrum read_spectrum_csv(std::istream &in, double norm_scale) {
    std::string line;
    if (!next_data_line(in, line) || split(line, ',') != std::vector<std::string>{"omega", "weight"}) {
        throw InvalidInput("spectrum CSV: expected header 'omega,weight'");
    }
    std::vector<double> f, w;
    while (next_data_line(in, line)) {
        const auto cols = split(line, ',');
        if (cols.size() != 2) {
            throw InvalidInput("spectrum CSV: expected two columns in '" + line + "'");
        }
        f.push_back(parse_double(cols[0]));
        w.push_back(parse_double(cols[1]));
    }
    return {std::move(f), std::move(w), norm_scale};
}

void write_moments_csv(std::ostream &out, const FourierMomentSet &m) {
    out << "# dt=" << format_double(m.dt) << '\n';
    out << "n,re,im,provenance,shots,seed\n";
    const char *prov = m.provenance == Provenance::exact ? "exact" : "sampled";
    for (std::size_t n = 0; n < m.values.size(); ++n) {
        out << n << ',' << format_double(m.values[n].real()) << ',' << format_double(m.values[n].imag()) << ',' << prov
            << ',' << m.shots_per_part << ',' << m.seed << '\n';
    }
}

FourierMomentSet read_moments_csv(std::istream &in) {
    FourierMomentSet m;
    std::string line;
    bool have_dt = false;
    bool have_header = false;
    while (next_data_line(in, line)) {
        const auto t = trim(line);
        if (t.front() == '#') {
            const auto eq = t.find('=');
            if (eq != std::string::npos && trim(t.substr(1, eq - 1)) == "dt") {
                m.dt = parse_double(t.substr(eq + 1));
                have_dt = true;
            }
            continue;
        }
        if (!have_header) {
            if (split(t, ',') != std::vector<std::string>{"n", "re", "im", "provenance", "shots", "seed"}) {
                throw InvalidInput("moments CSV: unexpected header '" + t + "'");
            }
            have_header = true;
            continue;
        }
        const auto cols = split(t, ',');
        if (cols.size() != 6) {
            throw InvalidInput("moments CSV: expected six columns in '" + t + "'");
        }
        const auto n = parse_int<long>(cols[0]);
        if (n != static_cast<long>(m.values.size())) {
            throw InvalidInput("moments CSV: rows must list n = 0, 1, 2, ... in order");
        }
        m.values.emplace_back(parse_double(cols[1]), parse_double(cols[2]));
        if (cols[3] == "exact") {
            m.provenance = Provenance::exact;
        } else if (cols[3] == "sampled") {
            m.provenance = Provenance::sampled;
        } else {
            throw InvalidInput("moments CSV: unknown provenance '" + cols[3] + "'");
        }
        m.shots_per_part = parse_int<std::int64_t>(cols[4]);
        m.seed = parse_int<std::uint64_t>(cols[5]);
    }
    if (!have_dt || !have_header || m.values.empty()) {
        throw InvalidInput("moments CSV: missing dt line, header, or rows");
    }
    m.mu0 = m.values[0].real();
    return m;
}

void write_curves_csv(std::ostream &out, const std::vector<TransformCurve> &curves) {
    out << "nu,phi,kind\n";
    for (const auto &c : curves) {
        const char *kind = to_string(c.kind);
        for (std::size_t i = 0; i < c.grid.size(); ++i) {
            out << format_double(c.grid[i]) << ',' << format_double(c.values[i]) << ',' << kind << '\n';
        }
    }
}

namespace {

template <class Enum, std::size_t N>
Enum enum_from(const std::string &value, const std::array<Enum, N> &all, const char *what) {
    for (auto e : all) {
        if (value == to_string(e)) {
            return e;
        }
    }
    throw InvalidInput(std::string("plan: unknown ") + what + " '" + value + "'");
}

} // namespace

KeyValues plan_to_key_values(const ExtensionPlan &plan) {
    const auto &r = plan.request;
    const auto &c = plan.choice;
    KeyValues kv{
        {"method", to_string(plan.method)},
        {"requested_method", to_string(r.method)},
        {"period", format_double(plan.period)},
        {"chi", format_double(plan.chi)},
        {"dt", format_double(plan.dt)},
        {"n_terms", std::to_string(plan.n_terms)},
        {"total_shots", std::to_string(plan.total_shots)},
        {"shots_per_part", std::to_string(plan.shots_per_part)},
        {"alpha", format_double(c.alpha)},
        {"eta", format_double(c.eta)},
        {"reach", format_double(c.reach)},
        {"offset", format_double(c.offset)},
        {"analytic_bound", format_double(c.analytic_bound)},
        {"clamped", c.clamped ? "true" : "false"},
        {"delta", format_double(r.kernel.delta)},
        {"sigma_leak", format_double(r.kernel.sigma_leak)},
        {"lambda", format_double(r.kernel.lambda)},
        {"norm_scale", format_double(r.kernel.norm_scale)},
        {"eps_p", format_double(r.budget.eps_p)},
        {"eps_n", format_double(r.budget.eps_n)},
        {"eps_s", format_double(r.budget.eps_s)},
        {"omega", format_double(r.budget.omega_scale)},
        {"confidence_delta", format_double(r.budget.confidence_delta)},
        {"mu0", format_double(r.mu0)},
        {"mu1", format_double(r.mu1)},
        {"sigma", format_double(r.sigma)},
        {"order", std::to_string(r.order)},
        {"mu_tilde", format_double(r.mu_tilde)},
        {"window_offset", to_string(r.offset)},
        {"chi_mode", to_string(r.chi_mode)},
        {"central_mode", to_string(r.central_mode)},
        {"terms_mode", to_string(r.terms_mode)},
        {"shot_mode", to_string(r.shot_mode)},
        {"cap_at_general", r.cap_at_general ? "true" : "false"},
    };
    if (r.window) {
        kv.emplace_back("nu_min", format_double(r.window->nu_min));
        kv.emplace_back("nu_max", format_double(r.window->nu_max));
    }
    for (std::size_t i = 0; i < plan.warnings.size(); ++i) {
        kv.emplace_back("warning." + std::to_string(i), plan.warnings[i]);
    }
    return kv;
}

ExtensionPlan plan_from_key_values(const KeyValues &kv) {
    std::map<std::string, std::string> m(kv.begin(), kv.end());
    auto get = [&](const char *key) -> const std::string & {
        auto it = m.find(key);
        if (it == m.end()) {
            throw InvalidInput(std::string("plan: missing key '") + key + "'");
        }
        return it->second;
    };
    auto num = [&](const char *key) { return parse_double(get(key)); };

    PlanRequest r;
    r.method = enum_from(get("requested_method"),
                         std::array{PlanMethod::general, PlanMethod::variance, PlanMethod::central_moment}, "method");
    r.kernel = KernelSpec{num("delta"), num("sigma_leak"), num("lambda"), num("norm_scale")};
    r.kernel.validate();
    r.budget = ErrorBudget{num("eps_p"), num("eps_n"), num("eps_s"), num("omega"), num("confidence_delta")};
    r.budget.validate();
    r.mu0 = num("mu0");
    r.mu1 = num("mu1");
    r.sigma = num("sigma");
    r.order = parse_int<int>(get("order"));
    r.mu_tilde = num("mu_tilde");
    r.offset = enum_from(get("window_offset"),
                         std::array{WindowOffset::max_side, WindowOffset::min_side, WindowOffset::span}, "offset");
    r.chi_mode = enum_from(get("chi_mode"), std::array{ChiMode::practical, ChiMode::full}, "chi_mode");
    r.central_mode =
        enum_from(get("central_mode"), std::array{CentralMode::bound, CentralMode::simplified}, "central_mode");
    r.terms_mode = enum_from(get("terms_mode"), std::array{TermsMode::standard, TermsMode::tight}, "terms_mode");
    r.shot_mode = enum_from(
        get("shot_mode"), std::array{ShotMode::conservative, ShotMode::uncorrelated, ShotMode::chebyshev}, "shot_mode");
    r.cap_at_general = get("cap_at_general") == "true";
    if (m.count("nu_min") != 0U || m.count("nu_max") != 0U) {
        r.window = FrequencyWindow{num("nu_min"), num("nu_max")};
    }
    auto plan = make_plan(r);
    if (plan.n_terms != parse_int<long>(get("n_terms")) ||
        std::abs(plan.period - num("period")) > 1e-12 * plan.period) {
        throw InvalidInput("plan: stored period / n_terms disagree with the recomputed plan");
    }
    return plan;
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path &path, const std::string &contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << contents;
    if (!out) {
        throw IoError("write to '" + path.string() + "' failed");
    }
}

} // namespace fgit::io
