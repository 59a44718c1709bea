// Copyright 2026 The mdsteer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON and CSV interchange. Doubles are written with 17 significant digits in
// JSON (lossless) and 10 in CSV, always with '.' as decimal separator.

#include <filesystem>
#include <iosfwd>
#include <json.hpp>
#include <string>
#include <vector>

#include "mdsteer/adversary.hpp"
#include "mdsteer/behavior.hpp"
#include "mdsteer/oracle.hpp"
#include "mdsteer/optimizer.hpp"
#include "mdsteer/steering.hpp"

namespace mdsteer {

using Json = nlohmann::ordered_json;

/// {"probabilities": [x][y][a][b]}.
Json behavior_to_json(const Behavior& b);

/// Throws ParseError naming the first entry that is missing, non-numeric,
/// non-finite or negative. Normalization is not checked here.
Behavior behavior_from_json(const Json& doc);

/// {"lambdas": n, "pLambdaGivenX": [x][lambda], "pAGivenXLambda": [x][lambda][a],
///  "states": [x][lambda][4 x [re, im]]}.
Json model_to_json(const MdLhsModel& model);
MdLhsModel model_from_json(const Json& doc);

Json sweep_report_to_json(const SweepReport& r);
Json constraint_report_to_json(const ConstraintReport& r);

/// Reads and parses a JSON file; ParseError on I/O or syntax problems.
Json read_json_file(const std::filesystem::path& path);
/// Throws std::runtime_error when the file cannot be written.
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Locale-independent shortest-form number with `digits` significant digits.
std::string format_number(double v, int digits = 10);

/// CSV with header p,value[,delta][,r][,theta,<direction angles>].
void write_curve_csv(std::ostream& os, CurveKind kind, const std::vector<CurvePoint>& points);

std::string curve_kind_name(CurveKind kind);
CurveKind parse_curve_kind(const std::string& name);

}  // namespace mdsteer
