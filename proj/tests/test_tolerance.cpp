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

#include <doctest.h>

#include "mdsteer/error.hpp"
#include "mdsteer/tolerance.hpp"

using namespace mdsteer;

TEST_CASE("empty override keeps the defaults") {
  const Tolerances t = parse_tolerances("  ");
  CHECK(t.normalization == 1e-10);
  CHECK(t.psd == 1e-10);
  CHECK(t.equality == 1e-12);
}

TEST_CASE("bare number sets normalization and positivity slack") {
  const Tolerances t = parse_tolerances("1e-6");
  CHECK(t.normalization == 1e-6);
  CHECK(t.psd == 1e-6);
  CHECK(t.no_signalling == 1e-9);
}

TEST_CASE("keyed overrides") {
  const Tolerances t = parse_tolerances("psd=1e-8, no_signalling = 2e-7,arccos_clamp=0");
  CHECK(t.psd == 1e-8);
  CHECK(t.no_signalling == 2e-7);
  CHECK(t.arccos_clamp == 0.0);
  CHECK(t.normalization == 1e-10);
}

TEST_CASE("malformed overrides are rejected") {
  CHECK_THROWS_AS(parse_tolerances("psd"), ValidationError);
  CHECK_THROWS_AS(parse_tolerances("psd=abc"), ValidationError);
  CHECK_THROWS_AS(parse_tolerances("bogus=1e-3"), ValidationError);
  CHECK_THROWS_AS(parse_tolerances("-1"), ValidationError);
}
