// polyface command-line front end: polymatroid checks, Shannon-cone face
// geometry, face classification, region plot data and entropy certificates.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <string>

#include "polyface/classify.hpp"
#include "polyface/cone.hpp"
#include "polyface/constructions.hpp"
#include "polyface/io.hpp"
#include "polyface/sweeps.hpp"

namespace {

using namespace polyface;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitMalformed = 2;

// "0.4" (nats) or "ln:v" for the exact logarithm of an integer.
double parse_nats(const std::string& text) {
  if (text.rfind("ln:", 0) == 0) {
    int v = std::stoi(text.substr(3));
    if (v < 1) throw CLI::ValidationError("--a", "ln:v needs v >= 1");
    return std::log(static_cast<double>(v));
  }
  std::size_t used = 0;
  double value = std::stod(text, &used);
  if (used != text.size()) throw CLI::ValidationError("value", "expected a number or ln:v");
  return value;
}

SubsetMask parse_alpha(const std::string& text, int n) {
  std::vector<int> elements;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    elements.push_back(std::stoi(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return mask_of(elements, n);
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << "\n";
  } else {
    write_text_file(out_path, content);
  }
}

struct Options {
  std::string h_path, h1_path, h2_path, matroid_path, alpha, out_path;
  std::string a_text, a_max_text = "ln:4";
  std::string format = "text";
  int v = 0;
};

int cmd_check_polymatroid(const Options& opt) {
  RankVector h = rank_vector_from_json(load_json_file(opt.h_path));
  PolymatroidCheck check = is_polymatroid(h);
  if (opt.format == "json") {
    json j{{"polymatroid", check.ok}};
    if (!check.ok) j["violates"] = check.violated ? check.violated->to_string() : check.message;
    emit(j.dump(2), opt.out_path);
  } else {
    emit(check.ok ? "polymatroid" : "not a polymatroid: " + check.message, opt.out_path);
  }
  return check.ok ? kExitOk : kExitDomain;
}

int cmd_face_dim(const Options& opt) {
  RankVector h = rank_vector_from_json(load_json_file(opt.h1_path.empty() ? opt.h_path : opt.h1_path));
  if (!opt.h2_path.empty()) h = add(h, rank_vector_from_json(load_json_file(opt.h2_path)));
  int dim = minimal_face_dim(h);  // throws std::domain_error outside Gamma_n
  if (opt.format == "json") emit(json{{"face_dim", dim}}.dump(2), opt.out_path);
  else emit(std::to_string(dim), opt.out_path);
  return kExitOk;
}

int cmd_is_extreme(const Options& opt) {
  RankVector h = rank_vector_from_json(load_json_file(opt.h_path));
  bool extreme = is_extreme_ray(h);
  if (opt.format == "json") emit(json{{"extreme_ray", extreme}}.dump(2), opt.out_path);
  else emit(extreme ? "extreme ray" : "not an extreme ray", opt.out_path);
  return extreme ? kExitOk : kExitDomain;
}

int cmd_is_two_face(const Options& opt) {
  RankVector h1 = rank_vector_from_json(load_json_file(opt.h1_path));
  RankVector h2 = rank_vector_from_json(load_json_file(opt.h2_path));
  bool face = is_two_face(h1, h2);
  if (opt.format == "json") emit(json{{"two_face", face}}.dump(2), opt.out_path);
  else emit(face ? "2-dimensional face" : "not a 2-dimensional face", opt.out_path);
  return face ? kExitOk : kExitDomain;
}

int cmd_circuits(const Options& opt) {
  Matroid m = matroid_from_json(load_json_file(opt.matroid_path));
  if (opt.format == "json") {
    json arr = json::array();
    for (SubsetMask c : m.circuits()) arr.push_back(mask_elements(c));
    emit(json{{"circuits", arr}}.dump(2), opt.out_path);
  } else {
    std::string text;
    for (SubsetMask c : m.circuits()) {
      text += "{";
      auto elems = mask_elements(c);
      for (std::size_t i = 0; i < elems.size(); ++i)
        text += (i ? "," : "") + std::to_string(elems[i]);
      text += "}\n";
    }
    emit(text, opt.out_path);
  }
  return kExitOk;
}

int cmd_classify(const Options& opt) {
  Matroid m = matroid_from_json(load_json_file(opt.matroid_path));
  SubsetMask alpha = parse_alpha(opt.alpha, m.ground_size());
  FaceReport report = classify_face(m, alpha);
  emit(face_report_to_json(report).dump(2), opt.out_path);
  return report.two_face_confirmed ? kExitOk : kExitDomain;
}

int cmd_region(const Options& opt) {
  Matroid m = matroid_from_json(load_json_file(opt.matroid_path));
  SubsetMask alpha = parse_alpha(opt.alpha, m.ground_size());
  FaceReport report = classify_face(m, alpha);
  ChiOracle chi;
  double a_max = parse_nats(opt.a_max_text);
  emit(region_csv(region_boundary_data(report.face_type, chi.bind(m), a_max)), opt.out_path);
  return report.two_face_confirmed ? kExitOk : kExitDomain;
}

int cmd_certify(const Options& opt) {
  Matroid m = matroid_from_json(load_json_file(opt.matroid_path));
  SubsetMask alpha = parse_alpha(opt.alpha, m.ground_size());
  double a = parse_nats(opt.a_text);
  Certificate cert = matus_boundary_dist(m, alpha, opt.v, a);
  emit(certificate_to_json(cert).dump(2), opt.out_path);
  return kExitOk;
}

int cmd_sweep_catalog(const Options& opt) {
  std::string table;
  int failures = 0;
  char line[160];
  std::snprintf(line, sizeof line, "%-28s %8s %9s  %s\n", "suite", "cases", "failures", "status");
  table += line;
  for (const SweepResult& r : run_all_sweeps()) {
    failures += r.failures;
    std::snprintf(line, sizeof line, "%-28s %8d %9d  %s\n", r.name.c_str(), r.cases, r.failures,
                  r.passed() ? "PASS" : "FAIL");
    table += line;
    for (const std::string& d : r.details) table += "    " + d + "\n";
  }
  emit(table, opt.out_path);
  return failures == 0 ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polymatroid and Shannon-cone face toolkit"};
  app.require_subcommand(1);
  Options opt;

  // free the short -h so rank-vector inputs can use --h
  app.set_help_flag("--help", "print help");

  auto add_format = [&opt](CLI::App* cmd) {
    cmd->set_help_flag("--help", "print help");
    cmd->add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_out = [&opt](CLI::App* cmd) {
    cmd->set_help_flag("--help", "print help");
    cmd->add_option("--out", opt.out_path, "output file (default stdout)");
  };

  auto* check = app.add_subcommand("check-polymatroid", "test a rank-vector file against the polymatroid axioms");
  check->add_option("--h", opt.h_path, "rank-vector JSON file")->required();
  add_format(check);
  add_out(check);

  auto* facedim = app.add_subcommand("face-dim", "dimension of the minimal face containing h (or h1+h2)");
  facedim->add_option("--h", opt.h_path, "rank-vector JSON file");
  facedim->add_option("--h1", opt.h1_path, "first rank-vector file");
  facedim->add_option("--h2", opt.h2_path, "second rank-vector file");
  add_format(facedim);
  add_out(facedim);

  auto* extreme = app.add_subcommand("is-extreme", "test whether h spans an extreme ray");
  extreme->add_option("--h", opt.h_path, "rank-vector JSON file")->required();
  add_format(extreme);
  add_out(extreme);

  auto* twoface = app.add_subcommand("is-two-face", "test whether two extreme rays span a 2-dimensional face");
  twoface->add_option("--h1", opt.h1_path, "first rank-vector file")->required();
  twoface->add_option("--h2", opt.h2_path, "second rank-vector file")->required();
  add_format(twoface);
  add_out(twoface);

  auto* circuits = app.add_subcommand("circuits", "list the circuits of a matroid file");
  circuits->add_option("--matroid", opt.matroid_path, "matroid JSON file")->required();
  add_format(circuits);
  add_out(circuits);

  auto* classify = app.add_subcommand("classify", "classify the face (M, U_{1,n'}) and emit a report");
  classify->add_option("--matroid", opt.matroid_path, "matroid JSON file")->required();
  classify->add_option("--alpha", opt.alpha, "support of the rank-1 ray, e.g. 1,2")->required();
  add_out(classify);

  auto* region = app.add_subcommand("region", "emit CSV plot data for the face's entropic region");
  region->add_option("--matroid", opt.matroid_path, "matroid JSON file")->required();
  region->add_option("--alpha", opt.alpha, "support of the rank-1 ray")->required();
  region->add_option("--a-max", opt.a_max_text, "right edge of the plot in nats, or ln:v");
  add_out(region);

  auto* certify = app.add_subcommand("certify", "construct a distribution certificate for a face point");
  certify->add_option("--matroid", opt.matroid_path, "matroid JSON file")->required();
  certify->add_option("--alpha", opt.alpha, "support of the rank-1 ray")->required();
  certify->add_option("--v", opt.v, "alphabet size on the matroid ray")->required();
  certify->add_option("--a", opt.a_text, "marginal entropy in nats, or ln:v")->required();
  add_out(certify);

  auto* sweep = app.add_subcommand("sweep-catalog", "run every property suite over the bundled catalog");
  add_out(sweep);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check_polymatroid(opt);
    if (facedim->parsed()) {
      bool single = !opt.h_path.empty();
      bool pair = !opt.h1_path.empty() && !opt.h2_path.empty();
      if (single == pair) {
        std::cerr << "error: give either --h or both --h1 and --h2\n";
        return kExitMalformed;
      }
      return cmd_face_dim(opt);
    }
    if (extreme->parsed()) return cmd_is_extreme(opt);
    if (twoface->parsed()) return cmd_is_two_face(opt);
    if (circuits->parsed()) return cmd_circuits(opt);
    if (classify->parsed()) return cmd_classify(opt);
    if (region->parsed()) return cmd_region(opt);
    if (certify->parsed()) return cmd_certify(opt);
    if (sweep->parsed()) return cmd_sweep_catalog(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitMalformed;
}
