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

#include "mdsteer/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "mdsteer/error.hpp"

namespace mdsteer {
namespace {

std::string index_path(std::initializer_list<int> idx) {
  std::string s;
  for (int i : idx) s += "[" + std::to_string(i) + "]";
  return s;
}

const Json& child(const Json& node, std::size_t i, std::size_t expected, const std::string& where) {
  if (!node.is_array() || node.size() != expected) {
    throw ParseError("expected an array of " + std::to_string(expected) + " at " + where);
  }
  return node[i];
}

double number_at(const Json& node, const std::string& where) {
  if (!node.is_number()) throw ParseError("non-numeric entry at " + where);
  const double v = node.get<double>();
  if (!std::isfinite(v)) throw ParseError("non-finite entry at " + where);
  return v;
}

const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object() || !doc.contains(name)) {
    throw ParseError(std::string("missing field \"") + name + "\"");
  }
  return doc[name];
}

}  // namespace

Json behavior_to_json(const Behavior& b) {
  Json probs = Json::array();
  for (int x = 0; x < 2; ++x) {
    Json xs = Json::array();
    for (int y = 0; y < 2; ++y) {
      Json ys = Json::array();
      for (int a = 0; a < 2; ++a) ys.push_back({b(x, y, a, 0), b(x, y, a, 1)});
      xs.push_back(ys);
    }
    probs.push_back(xs);
  }
  return Json{{"probabilities", probs}};
}

Behavior behavior_from_json(const Json& doc) {
  const Json& probs = field(doc, "probabilities");
  const double slack = tolerances().nonnegativity;
  Behavior out;
  for (int x = 0; x < 2; ++x) {
    const Json& nx = child(probs, x, 2, "probabilities");
    for (int y = 0; y < 2; ++y) {
      const Json& ny = child(nx, y, 2, index_path({x}));
      for (int a = 0; a < 2; ++a) {
        const Json& na = child(ny, a, 2, index_path({x, y}));
        for (int b = 0; b < 2; ++b) {
          const std::string where = index_path({x, y, a, b});
          const double v = number_at(child(na, b, 2, index_path({x, y, a})), where);
          if (v < -slack) throw ParseError("negative probability at " + where);
          out(x, y, a, b) = v;
        }
      }
    }
  }
  return out;
}

Json model_to_json(const MdLhsModel& m) {
  const int n = m.lambda_count();
  Json p_lambda = Json::array();
  Json p_a = Json::array();
  Json states = Json::array();
  for (int x = 0; x < 2; ++x) {
    Json pl = Json::array();
    Json pa = Json::array();
    Json st = Json::array();
    for (int l = 0; l < n; ++l) {
      pl.push_back(m.p_lambda_given_x(x, l));
      pa.push_back({m.p_a_given_x_lambda[x](0, l), m.p_a_given_x_lambda[x](1, l)});
      Json rho = Json::array();
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          rho.push_back({m.states[x][l](i, j).real(), m.states[x][l](i, j).imag()});
        }
      }
      st.push_back(rho);
    }
    p_lambda.push_back(pl);
    p_a.push_back(pa);
    states.push_back(st);
  }
  return Json{{"lambdas", n}, {"pLambdaGivenX", p_lambda}, {"pAGivenXLambda", p_a},
              {"states", states}};
}

MdLhsModel model_from_json(const Json& doc) {
  const Json& count = field(doc, "lambdas");
  if (!count.is_number_integer() || count.get<int>() < 1) {
    throw ParseError("\"lambdas\" must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(count.get<int>());
  const Json& pl = field(doc, "pLambdaGivenX");
  const Json& pa = field(doc, "pAGivenXLambda");
  const Json& st = field(doc, "states");

  MdLhsModel m;
  m.p_lambda_given_x.resize(2, static_cast<Eigen::Index>(n));
  for (int x = 0; x < 2; ++x) {
    m.p_a_given_x_lambda[x].resize(2, static_cast<Eigen::Index>(n));
    const Json& plx = child(pl, x, 2, "pLambdaGivenX");
    const Json& pax = child(pa, x, 2, "pAGivenXLambda");
    const Json& stx = child(st, x, 2, "states");
    for (std::size_t l = 0; l < n; ++l) {
      const int li = static_cast<int>(l);
      m.p_lambda_given_x(x, li) = number_at(child(plx, l, n, "pLambdaGivenX" + index_path({x})),
                                            "pLambdaGivenX" + index_path({x, li}));
      const Json& pal = child(pax, l, n, "pAGivenXLambda" + index_path({x}));
      for (int a = 0; a < 2; ++a) {
        m.p_a_given_x_lambda[x](a, li) =
            number_at(child(pal, a, 2, "pAGivenXLambda" + index_path({x, li})),
                      "pAGivenXLambda" + index_path({x, li, a}));
      }
      const Json& rho = child(stx, l, n, "states" + index_path({x}));
      Matrix2c<double> r;
      for (int k = 0; k < 4; ++k) {
        const std::string where = "states" + index_path({x, li, k});
        const Json& pair = child(rho, k, 4, "states" + index_path({x, li}));
        r(k / 2, k % 2) = {number_at(child(pair, 0, 2, where), where + "[0]"),
                           number_at(child(pair, 1, 2, where), where + "[1]")};
      }
      m.states[x].push_back(r);
    }
  }
  return m;
}

Json sweep_report_to_json(const SweepReport& r) {
  return Json{{"p", r.p},         {"samples", r.samples}, {"maxI", r.max_value},
              {"bound", r.bound}, {"pass", r.pass},       {"seed", r.seed},
              {"saturation", r.saturation}};
}

Json constraint_report_to_json(const ConstraintReport& r) {
  const auto& m = r.marginals;
  Json p_lambda = Json::array();
  Json p_x = Json::array();
  for (Eigen::Index l = 0; l < m.p_lambda.size(); ++l) {
    p_lambda.push_back(m.p_lambda(l));
    p_x.push_back({m.p_x_given_lambda(l, 0), m.p_x_given_lambda(l, 1)});
  }
  return Json{{"pLambda", p_lambda},
              {"pXGivenLambda", p_x},
              {"pX", {m.p_x1, m.p_x2}},
              {"maxL", r.max_l},
              {"independent", r.measurement_independent},
              {"masqueradesFreeChoice", r.masquerades_free_choice}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError("malformed JSON in " + path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

std::string format_number(double v, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

std::string curve_kind_name(CurveKind kind) {
  switch (kind) {
    case CurveKind::kLocal: return "local";
    case CurveKind::kPrBox: return "prbox";
    case CurveKind::kQuantum: return "quantum";
    case CurveKind::kTilted: return "tilted";
    case CurveKind::kRandomness: return "randomness";
  }
  return "unknown";
}

CurveKind parse_curve_kind(const std::string& name) {
  for (auto kind : {CurveKind::kLocal, CurveKind::kPrBox, CurveKind::kQuantum,
                    CurveKind::kTilted, CurveKind::kRandomness}) {
    if (curve_kind_name(kind) == name) return kind;
  }
  throw ValidationError("unknown curve kind '" + name + "'");
}

void write_curve_csv(std::ostream& os, CurveKind kind, const std::vector<CurvePoint>& points) {
  const bool with_delta = kind != CurveKind::kLocal;
  const bool with_rate = kind == CurveKind::kRandomness;
  const bool with_ansatz = kind == CurveKind::kQuantum;
  os << "p,value";
  if (with_delta) os << ",delta";
  if (with_rate) os << ",r";
  if (with_ansatz) {
    os << ",theta";
    for (const char* name : {"n1", "n2", "m1", "m2"}) os << ',' << name << "_polar," << name << "_azimuth";
  }
  os << '\n';
  for (const auto& pt : points) {
    os << format_number(pt.p) << ',' << format_number(pt.value);
    if (with_delta) os << ',' << format_number(pt.delta.value_or(std::nan("")));
    if (with_rate) os << ',' << format_number(pt.rate.value_or(std::nan("")));
    if (with_ansatz && pt.argmax) {
      os << ',' << format_number(pt.argmax->theta);
      for (const auto& d : pt.argmax->directions) {
        os << ',' << format_number(std::acos(std::clamp(d.nz(), -1.0, 1.0))) << ','
           << format_number(std::atan2(d.ny(), d.nx()));
      }
    }
    os << '\n';
  }
}

}  // namespace mdsteer
