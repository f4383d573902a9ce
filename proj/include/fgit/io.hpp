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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fgit/moments.hpp"
#include "fgit/planner.hpp"
#include "fgit/spectrum.hpp"
#include "fgit/transform.hpp"

namespace fgit::io {

/// Shortest-safe decimal: 17 significant digits, round-trips every double.
std::string format_double(double v);
/// Strict parse of a full token; throws InvalidInput.
double parse_double(const std::string &token);

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// `key=value` lines; blank lines and lines starting with '#' are skipped.
KeyValues read_key_values(std::istream &in);
void write_key_values(std::ostream &out, const KeyValues &kv);

// Spectrum: header "omega,weight", one row per eigenvalue.
void write_spectrum_csv(std::ostream &out, const DiscreteSpectrum &s);
DiscreteSpectrum read_spectrum_csv(std::istream &in, double norm_scale = 1.0);

// Moments: "# dt=..." line, header "n,re,im,provenance,shots,seed".
void write_moments_csv(std::ostream &out, const FourierMomentSet &m);
FourierMomentSet read_moments_csv(std::istream &in);

// Curves: header "nu,phi,kind"; curves are written one after another.
void write_curves_csv(std::ostream &out, const std::vector<TransformCurve> &curves);

KeyValues plan_to_key_values(const ExtensionPlan &plan);
/// Rebuilds the request from its echo, re-plans, and checks the stored
/// period and N agree with the recomputed ones.
ExtensionPlan plan_from_key_values(const KeyValues &kv);

std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, const std::string &contents);

} // namespace fgit::io
