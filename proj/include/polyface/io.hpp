#ifndef POLYFACE_IO_HPP
#define POLYFACE_IO_HPP

#include <json.hpp>
#include <stdexcept>
#include <string>

#include "polyface/classify.hpp"
#include "polyface/constructions.hpp"
#include "polyface/distribution.hpp"
#include "polyface/matroid.hpp"
#include "polyface/setfn.hpp"

namespace polyface {

// Malformed files and schema violations; the CLI maps this to exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// {"n": int, "values": ["p/q" | int, ...]} indexed by bitmask.
RankVector rank_vector_from_json(const nlohmann::json& j);
nlohmann::json rank_vector_to_json(const RankVector& h);

// {"n": int, "values": [number, ...]} in nats.
EntropyVector entropy_vector_from_json(const nlohmann::json& j);
nlohmann::json entropy_vector_to_json(const EntropyVector& h);

// {"n": int, "circuits": [[ints]]} and/or {"n": int, "ranks": [ints]};
// when both are present they must agree.
Matroid matroid_from_json(const nlohmann::json& j);
nlohmann::json matroid_to_json(const Matroid& m);

// {"alphabets": [ints], "pmf": [{"x": [ints], "p": "p/q"}]}.
JointDistribution distribution_from_json(const nlohmann::json& j);
nlohmann::json distribution_to_json(const JointDistribution& d);

nlohmann::json certificate_to_json(const Certificate& c);
// Recomputes the residual from the embedded distribution; throws ParseError
// when the stored claim fails to re-validate within kTol.
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json face_report_to_json(const FaceReport& r);

// Header line "label,kind,x1,y1,x2,y2" followed by one row per piece.
std::string region_csv(const std::vector<RegionPiece>& pieces);

}  // namespace polyface

#endif
