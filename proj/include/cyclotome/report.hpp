#pragma once

#include <string>
#include <vector>

#include "cyclotome/verify.hpp"

namespace cyclotome {

std::string render_text(const std::vector<VerificationReport>& reports, bool verbose = false);
std::string render_markdown(const std::vector<VerificationReport>& reports);
// {"schema": 1, "pass": ..., "reports": [{"relation", "args", "checks": [{"name", "computed", "expected", "pass"}]}]}
std::string render_json(const std::vector<VerificationReport>& reports);

// Every form value attached to an ordered pair, as a schema-1 JSON object.
std::string forms_json(const CycIndex& ci, const VWPair& m1, const VWPair& m2);

}  // namespace cyclotome
