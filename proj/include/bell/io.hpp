#pragma once

#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "bell/enumerate.hpp"
#include "bell/envelope.hpp"

namespace bell {

inline constexpr const char* kToolVersion = "0.1.0";

// Deterministic 17-significant-digit decimal; used everywhere exactness is
// not required, so reruns are byte-identical.
std::string format_double(double x);

// "# key: value" comment lines echoed at the top of every CSV output.
using Metadata = std::vector<std::pair<std::string, std::string>>;

void write_metadata(std::ostream& os, const Metadata& meta);

void write_point_set_csv(std::ostream& os, const MomentPointSet& set, const Metadata& meta);
void write_envelope_csv(std::ostream& os, const EnvelopePolyline& env, const Metadata& meta);
void write_scatter_csv(std::ostream& os, const std::vector<ScatterPoint>& pts,
                       const Metadata& meta);

nlohmann::json rational_to_json(const Rational& r);
nlohmann::json envelope_to_json(const EnvelopePolyline& env);
nlohmann::json point_set_to_json(const MomentPointSet& set);

}  // namespace bell
