#pragma once

#include <string_view>

#include "cyclotome/dominant.hpp"

namespace cyclotome {

// Sparse-vector literal:
//   literal := "0" | entry ("," entry)*
//   entry   := point ["=" int]
//   point   := vertex ":" height | name
// vertex is 1-based, height is read mod 2h. Names are those printed by the
// tool: S1, P2, I3, t1P2, Sigma<name>, Sigma^k<name>, and sigma(<name>) for
// the point of I-hat below it. Repeated points add up.
VVector parse_v_literal(const CycIndex& ci, std::string_view text);
WVector parse_w_literal(const CycIndex& ci, std::string_view text);

// Pair literal: "v=<literal>;w=<literal>", either part may be omitted.
VWPair parse_pair_literal(const CycIndex& ci, std::string_view text);

}  // namespace cyclotome
