#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "polyface/catalog.hpp"
#include "polyface/classify.hpp"
#include "polyface/cone.hpp"
#include "polyface/constructions.hpp"
#include "polyface/io.hpp"
#include "polyface/sweeps.hpp"

namespace py = pybind11;
using namespace polyface;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<long long>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<unsigned long long>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (auto it = j.begin(); it != j.end(); ++it) out[py::str(it.key())] = json_to_py(it.value());
      return out;
    }
    default: return py::none();
  }
}

RankVector rank_from_py(int n, const std::vector<std::string>& values) {
  std::vector<Rational> parsed;
  parsed.reserve(values.size());
  for (const auto& s : values) parsed.push_back(parse_rational(s));
  return RankVector(n, std::move(parsed));
}

std::vector<std::string> rank_to_py(const RankVector& h) {
  std::vector<std::string> out;
  out.reserve(h.values.size());
  for (const auto& v : h.values) out.push_back(format_rational(v));
  return out;
}

SubsetMask alpha_mask(const std::vector<int>& elements, int n) { return mask_of(elements, n); }

JointDistribution dist_from_py(const std::vector<int>& alphabets,
                               const std::vector<std::pair<std::vector<int>, std::string>>& pmf) {
  std::map<Outcome, Rational> masses;
  for (const auto& [x, p] : pmf) {
    if (masses.count(x)) throw std::invalid_argument("duplicate outcome in pmf");
    masses[x] = parse_rational(p);
  }
  return JointDistribution(alphabets, std::move(masses));
}

py::dict membership_to_py(const FaceMembership& fm) {
  py::dict out;
  out["ok"] = fm.ok;
  out["a"] = fm.a;
  out["b"] = fm.b;
  out["max_residual"] = fm.max_residual;
  out["worst_subset"] = mask_elements(fm.worst_subset);
  return out;
}

}  // namespace

PYBIND11_MODULE(_polyface, m) {
  m.doc() = "polymatroids, Shannon-cone faces and entropic certificates on small ground sets";

  py::class_<RankVector>(m, "RankVector")
      .def(py::init(&rank_from_py), py::arg("n"), py::arg("values"))
      .def_readonly("n", &RankVector::n)
      .def_property_readonly("values", &rank_to_py)
      .def("evaluate",
           [](const RankVector& h, const std::vector<int>& subset) {
             return format_rational(h.at(mask_of(subset, h.n)));
           },
           py::arg("subset"))
      .def("to_floats",
           [](const RankVector& h, double scale) {
             std::vector<double> out;
             for (const auto& v : h.values) out.push_back(scale * static_cast<double>(v));
             return out;
           },
           py::arg("scale") = 1.0)
      .def("__add__", &add)
      .def("scaled", [](const RankVector& h, const std::string& c) { return scaled(parse_rational(c), h); })
      .def("restrict", [](const RankVector& h, const std::vector<int>& s) {
        return restrict_to(h, mask_of(s, h.n));
      })
      .def("relabel", [](const RankVector& h, const std::vector<int>& perm) { return relabel(h, perm); })
      .def("__eq__", [](const RankVector& a, const RankVector& b) { return a == b; })
      .def("__repr__", [](const RankVector& h) {
        return "RankVector(n=" + std::to_string(h.n) + ")";
      });

  py::class_<Matroid>(m, "Matroid")
      .def_static("uniform",
                  [](int k, const std::vector<int>& alpha, int n) {
                    return Matroid::uniform({k, alpha_mask(alpha, n), n});
                  },
                  py::arg("k"), py::arg("alpha"), py::arg("n"))
      .def_static("from_circuits",
                  [](int n, const std::vector<std::vector<int>>& circuits) {
                    std::vector<SubsetMask> masks;
                    for (const auto& c : circuits) masks.push_back(mask_of(c, n));
                    return Matroid::from_circuits(n, std::move(masks));
                  },
                  py::arg("n"), py::arg("circuits"))
      .def_static("from_ranks",
                  [](int n, const std::vector<long long>& ranks) {
                    std::vector<Rational> values(ranks.begin(), ranks.end());
                    return Matroid::from_rank(RankVector(n, std::move(values)));
                  },
                  py::arg("n"), py::arg("ranks"))
      .def_property_readonly("n", &Matroid::ground_size)
      .def("rank_vector", &Matroid::rank)
      .def("full_rank", &Matroid::full_rank)
      .def("circuits",
           [](const Matroid& mat) {
             std::vector<std::vector<int>> out;
             for (SubsetMask c : mat.circuits()) out.push_back(mask_elements(c));
             return out;
           })
      .def("loops", [](const Matroid& mat) { return mask_elements(mat.loops()); })
      .def("parallel_pairs", &Matroid::parallel_pairs)
      .def("connected", &Matroid::connected_after_loop_deletion)
      .def("with_loop", &Matroid::with_loop, py::arg("position"))
      .def("with_parallel_copy", &Matroid::with_parallel_copy, py::arg("source"))
      .def("__eq__", [](const Matroid& a, const Matroid& b) { return a == b; })
      .def("__repr__", [](const Matroid& mat) {
        return "Matroid(n=" + std::to_string(mat.ground_size()) +
               ", rank=" + std::to_string(mat.full_rank()) + ")";
      });

  py::class_<JointDistribution>(m, "JointDistribution")
      .def(py::init(&dist_from_py), py::arg("alphabets"), py::arg("pmf"))
      .def_property_readonly("n", &JointDistribution::coords)
      .def_property_readonly("alphabets", &JointDistribution::alphabets)
      .def("pmf",
           [](const JointDistribution& d) {
             std::vector<std::pair<std::vector<int>, std::string>> out;
             for (const auto& [x, p] : d.pmf()) out.emplace_back(x, format_rational(p));
             return out;
           })
      .def("entropy_vector", [](const JointDistribution& d) { return entropy_vector(d).values; })
      .def("marginal", [](const JointDistribution& d, const std::vector<int>& s) {
        return marginal(d, mask_of(s, d.coords()));
      })
      .def("product", &product)
      .def("add_loop", &add_loop, py::arg("position"))
      .def("parallel_extend", &parallel_extend, py::arg("source"));

  m.def("facet_count", &facet_count, py::arg("n"));
  m.def("enumerate_facets", [](int n) {
    std::vector<std::string> out;
    for (const FacetId& f : enumerate_facets(n)) out.push_back(f.to_string());
    return out;
  });
  m.def("is_polymatroid", [](const RankVector& h) {
    PolymatroidCheck c = is_polymatroid(h);
    return std::pair<bool, std::string>(c.ok, c.ok ? "" : c.message);
  });
  m.def("is_integer_minimal", &is_integer_minimal);
  m.def("is_modular", &is_modular);
  m.def("is_tight", &is_tight);
  m.def("tight_set", [](const RankVector& h) {
    std::vector<std::string> out;
    for (const FacetId& f : tight_set(h).facets) out.push_back(f.to_string());
    return out;
  });
  m.def("minimal_face_dim", &minimal_face_dim);
  m.def("is_extreme_ray", &is_extreme_ray);
  m.def("is_two_face", &is_two_face);

  m.def("uniform_matroid_dist", &uniform_matroid_dist, py::arg("k"), py::arg("n"), py::arg("v"));
  m.def("rank_one_dist",
        [](const std::vector<int>& alpha, int n, double b) {
          return rank_one_dist(alpha_mask(alpha, n), n, b);
        },
        py::arg("alpha"), py::arg("n"), py::arg("b"));
  m.def("matus_certificate",
        [](const Matroid& mat, const std::vector<int>& alpha, int v, double a) {
          Certificate c = matus_boundary_dist(mat, alpha_mask(alpha, mat.ground_size()), v, a);
          return json_to_py(certificate_to_json(c));
        },
        py::arg("matroid"), py::arg("alpha"), py::arg("v"), py::arg("a"));
  m.def("check_face_membership",
        [](const std::vector<double>& h, const RankVector& r1, const RankVector& r2) {
          return membership_to_py(check_face_membership(EntropyVector(r1.n, h), r1, r2));
        },
        py::arg("entropies"), py::arg("r1"), py::arg("r2"));

  m.def("chi_membership", [](const Matroid& mat, int v) {
    switch (ChiOracle().query(mat, v)) {
      case Tri::True: return "true";
      case Tri::False: return "false";
      default: return "unknown";
    }
  });
  m.def("classify_face", [](const Matroid& mat, const std::vector<int>& alpha) {
    return json_to_py(face_report_to_json(classify_face(mat, alpha_mask(alpha, mat.ground_size()))));
  });
  m.def("region_membership",
        [](const Matroid& mat, const std::vector<int>& alpha, double a, double b) {
          ChiOracle chi;
          FaceReport r = classify_face(mat, alpha_mask(alpha, mat.ground_size()), chi);
          return to_string(region_membership(r.face_type, chi.bind(mat), a, b));
        },
        py::arg("matroid"), py::arg("alpha"), py::arg("a"), py::arg("b"));
  m.def("region_csv", [](const Matroid& mat, const std::vector<int>& alpha, double a_max) {
    ChiOracle chi;
    FaceReport r = classify_face(mat, alpha_mask(alpha, mat.ground_size()), chi);
    return region_csv(region_boundary_data(r.face_type, chi.bind(mat), a_max));
  });

  m.def("catalog_names", [] {
    std::vector<std::string> out;
    for (const auto& e : standard_catalog()) out.push_back(e.name);
    return out;
  });
  m.def("catalog_matroid", [](const std::string& name) {
    for (const auto& e : standard_catalog())
      if (e.name == name) return e.matroid;
    throw std::invalid_argument("no catalog entry named '" + name + "'");
  });
  m.def("run_sweeps", [] {
    py::list out;
    for (const SweepResult& r : run_all_sweeps()) {
      py::dict row;
      row["name"] = r.name;
      row["cases"] = r.cases;
      row["failures"] = r.failures;
      out.append(row);
    }
    return out;
  });
}
