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

#include "mdsteer/tolerance.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "mdsteer/error.hpp"

namespace mdsteer {
namespace {

double parse_number(std::string_view text) {
  double value = 0.0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || !(value >= 0.0)) {
    throw ValidationError("bad tolerance value '" + std::string(text) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

Tolerances parse_tolerances(std::string_view text, Tolerances base) {
  text = trim(text);
  if (text.empty()) return base;
  if (text.find('=') == std::string_view::npos) {
    const double v = parse_number(text);
    base.normalization = v;
    base.psd = v;
    return base;
  }
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("tolerance entry '" + std::string(item) + "' lacks '='");
    }
    const auto key = trim(item.substr(0, eq));
    const double v = parse_number(trim(item.substr(eq + 1)));
    if (key == "equality") {
      base.equality = v;
    } else if (key == "psd") {
      base.psd = v;
    } else if (key == "normalization") {
      base.normalization = v;
    } else if (key == "nonnegativity") {
      base.nonnegativity = v;
    } else if (key == "no_signalling") {
      base.no_signalling = v;
    } else if (key == "arccos_clamp") {
      base.arccos_clamp = v;
    } else {
      throw ValidationError("unknown tolerance key '" + std::string(key) + "'");
    }
  }
  return base;
}

const Tolerances& tolerances() {
  static const Tolerances instance = [] {
    const char* env = std::getenv("MDSTEER_TOL");
    return env ? parse_tolerances(env) : Tolerances{};
  }();
  return instance;
}

}  // namespace mdsteer
