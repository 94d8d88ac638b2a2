#include "polyface/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace polyface {

using nlohmann::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file '" + path + "'");
  out << content;
}

static int require_n(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw ParseError("field 'n' must be an integer");
  int n = j["n"].get<int>();
  if (n < 1 || n > kMaxGroundSet) throw ParseError("field 'n' must be in 1..16");
  return n;
}

RankVector rank_vector_from_json(const json& j) {
  int n = require_n(j);
  if (!j.contains("values") || !j["values"].is_array())
    throw ParseError("field 'values' must be an array");
  const auto& arr = j["values"];
  if (arr.size() != (std::size_t{1} << n))
    throw ParseError("field 'values' must have 2^n entries");
  std::vector<Rational> values;
  values.reserve(arr.size());
  for (const auto& item : arr) {
    if (item.is_string()) {
      try {
        values.push_back(parse_rational(item.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    } else if (item.is_number_integer()) {
      values.push_back(Rational(item.get<long long>()));
    } else {
      throw ParseError("rank entries must be rational strings or integers");
    }
  }
  try {
    return RankVector(n, std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json rank_vector_to_json(const RankVector& h) {
  json arr = json::array();
  for (const Rational& v : h.values) arr.push_back(format_rational(v));
  return json{{"n", h.n}, {"values", arr}};
}

EntropyVector entropy_vector_from_json(const json& j) {
  int n = require_n(j);
  if (!j.contains("values") || !j["values"].is_array())
    throw ParseError("field 'values' must be an array");
  const auto& arr = j["values"];
  if (arr.size() != (std::size_t{1} << n))
    throw ParseError("field 'values' must have 2^n entries");
  std::vector<double> values;
  values.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_number()) throw ParseError("entropy entries must be numbers (nats)");
    values.push_back(item.get<double>());
  }
  return EntropyVector(n, std::move(values));
}

json entropy_vector_to_json(const EntropyVector& h) {
  return json{{"n", h.n}, {"values", h.values}};
}

Matroid matroid_from_json(const json& j) {
  int n = require_n(j);
  bool has_circuits = j.contains("circuits");
  bool has_ranks = j.contains("ranks");
  if (!has_circuits && !has_ranks)
    throw ParseError("matroid file needs 'circuits' or 'ranks'");
  std::optional<Matroid> from_ranks;
  if (has_ranks) {
    const auto& arr = j["ranks"];
    if (!arr.is_array() || arr.size() != (std::size_t{1} << n))
      throw ParseError("field 'ranks' must be an array of 2^n integers");
    std::vector<Rational> values;
    for (const auto& item : arr) {
      if (!item.is_number_integer()) throw ParseError("field 'ranks' must be an array of 2^n integers");
      values.push_back(Rational(item.get<long long>()));
    }
    try {
      from_ranks = Matroid::from_rank(RankVector(n, std::move(values)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (has_circuits) {
    const auto& arr = j["circuits"];
    if (!arr.is_array()) throw ParseError("field 'circuits' must be an array of element lists");
    std::vector<SubsetMask> circuits;
    for (const auto& list : arr) {
      if (!list.is_array()) throw ParseError("each circuit must be a list of elements");
      std::vector<int> elements;
      for (const auto& e : list) {
        if (!e.is_number_integer()) throw ParseError("circuit elements must be integers");
        elements.push_back(e.get<int>());
      }
      try {
        circuits.push_back(mask_of(elements, n));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }
    Matroid from_circ = [&] {
      try {
        return Matroid::from_circuits(n, std::move(circuits));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }();
    if (from_ranks && !(from_circ == *from_ranks))
      throw ParseError("fields 'circuits' and 'ranks' disagree");
    return from_circ;
  }
  return *from_ranks;
}

json matroid_to_json(const Matroid& m) {
  json circuits = json::array();
  for (SubsetMask c : m.circuits()) circuits.push_back(mask_elements(c));
  json ranks = json::array();
  for (const Rational& v : m.rank().values) ranks.push_back(static_cast<long long>(numerator(v)));
  return json{{"n", m.ground_size()}, {"circuits", circuits}, {"ranks", ranks}};
}

JointDistribution distribution_from_json(const json& j) {
  if (!j.is_object() || !j.contains("alphabets") || !j["alphabets"].is_array())
    throw ParseError("field 'alphabets' must be an array of integers");
  std::vector<int> alphabets;
  for (const auto& item : j["alphabets"]) {
    if (!item.is_number_integer()) throw ParseError("field 'alphabets' must be an array of integers");
    alphabets.push_back(item.get<int>());
  }
  if (!j.contains("pmf") || !j["pmf"].is_array())
    throw ParseError("field 'pmf' must be an array of {x, p} entries");
  std::map<Outcome, Rational> pmf;
  for (const auto& entry : j["pmf"]) {
    if (!entry.is_object() || !entry.contains("x") || !entry.contains("p"))
      throw ParseError("each pmf entry needs fields 'x' and 'p'");
    Outcome x;
    for (const auto& s : entry["x"]) {
      if (!s.is_number_integer()) throw ParseError("outcome symbols must be integers");
      x.push_back(s.get<int>());
    }
    Rational p;
    if (entry["p"].is_string()) {
      try {
        p = parse_rational(entry["p"].get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    } else if (entry["p"].is_number_integer()) {
      p = Rational(entry["p"].get<long long>());
    } else {
      throw ParseError("masses must be rational strings");
    }
    if (pmf.count(x)) throw ParseError("duplicate outcome in pmf");
    pmf[x] = p;
  }
  try {
    return JointDistribution(std::move(alphabets), std::move(pmf));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

json distribution_to_json(const JointDistribution& d) {
  json pmf = json::array();
  for (const auto& [x, p] : d.pmf()) pmf.push_back(json{{"x", x}, {"p", format_rational(p)}});
  return json{{"alphabets", d.alphabets()}, {"pmf", pmf}};
}

json certificate_to_json(const Certificate& c) {
  return json{{"distribution", distribution_to_json(c.distribution)},
              {"face", json{{"m_rank", rank_vector_to_json(c.face_m)},
                            {"u_rank", rank_vector_to_json(c.face_u)},
                            {"alpha", mask_elements(c.alpha)}}},
              {"point", json{{"a", c.a}, {"b", c.b}}},
              {"v", c.v},
              {"residual", c.residual}};
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_object() || !j.contains("distribution") || !j.contains("face") || !j.contains("point") ||
      !j["face"].is_object() || !j["point"].is_object())
    throw ParseError("certificate needs 'distribution', 'face' and 'point'");
  const json& face = j["face"];
  if (!face.contains("m_rank") || !face.contains("u_rank") || !face.contains("alpha"))
    throw ParseError("certificate face needs 'm_rank', 'u_rank' and 'alpha'");
  Certificate c{distribution_from_json(j["distribution"]),
                rank_vector_from_json(face["m_rank"]),
                rank_vector_from_json(face["u_rank"]),
                0,
                j.value("v", 0),
                j["point"].value("a", 0.0),
                j["point"].value("b", 0.0),
                0.0};
  std::vector<int> alpha_elements;
  for (const auto& e : face["alpha"]) alpha_elements.push_back(e.get<int>());
  c.alpha = mask_of(alpha_elements, c.face_m.n);
  EntropyVector h = entropy_vector(c.distribution);
  if (h.n != c.face_m.n || h.n != c.face_u.n)
    throw ParseError("certificate parts disagree on the ground set");
  for (SubsetMask m = 0; m < h.values.size(); ++m) {
    double expect = c.a * static_cast<double>(c.face_m.values[m]) +
                    c.b * static_cast<double>(c.face_u.values[m]);
    c.residual = std::max(c.residual, std::abs(h.values[m] - expect));
  }
  if (c.residual >= kTol)
    throw ParseError("certificate does not re-validate: residual " + std::to_string(c.residual));
  return c;
}

json face_report_to_json(const FaceReport& r) {
  json circuits = json::array();
  for (const CircuitAnalysis& c : r.circuit_analysis)
    circuits.push_back(json{{"circuit", mask_elements(c.circuit)},
                            {"size", c.m},
                            {"alpha_overlap", c.t},
                            {"restricted_type", to_string(c.restricted_type)}});
  return json{{"face_type", to_string(r.face_type)},
              {"two_face_confirmed", r.two_face_confirmed},
              {"sum_face_dim", r.sum_face_dim},
              {"circuit_analysis", circuits},
              {"loop_conditions",
               json{{"m_loops_subset_of_u_loops", r.m_loops_subset_of_u_loops},
                    {"u_loops_subset_of_m_loops", r.u_loops_subset_of_m_loops}}},
              {"chi", json{{"probe_lo", ChiOracle::kProbeLo},
                           {"probe_hi", ChiOracle::kProbeHi},
                           {"members", r.chi.members},
                           {"non_members", r.chi.non_members},
                           {"undetermined", r.chi.undetermined}}},
              {"notes", r.notes},
              {"certificates", json::array()}};
}

std::string region_csv(const std::vector<RegionPiece>& pieces) {
  std::ostringstream out;
  out << "label,kind,x1,y1,x2,y2\n";
  char buf[128];
  for (const RegionPiece& p : pieces) {
    std::snprintf(buf, sizeof buf, ",%.17g,%.17g,%.17g,%.17g\n", p.x1, p.y1, p.x2, p.y2);
    out << p.label << "," << to_string(p.kind) << buf;
  }
  return out.str();
}

}  // namespace polyface
