#pragma once

#include <string>
#include <vector>

#include "cyclotome/forms.hpp"
#include "cyclotome/laurent.hpp"

namespace cyclotome {

using LSum = FormalSum<VWPair>;

struct Check {
  std::string name;
  std::string computed;
  std::string expected;
  bool pass = false;
};

struct VerificationReport {
  std::string relation;
  std::string type;
  std::string orientation;
  std::vector<int> args;  // 1-based vertex labels
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool pass() const;
  std::size_t failures() const;
};

std::string to_string(const CycIndex& ci, const LSum& s);

// Product of two basis elements when only the leading term survives:
// t^{exponent} L(m1 + m2), twisted or not.
LSum leading_product(const CycIndex& ci, const VWPair& m1, const VWPair& m2, bool twisted);

// Arguments are 0-based vertices.
VerificationReport verify_ek(const CycIndex& ci, int i, int j);
VerificationReport verify_ef(const CycIndex& ci, int i, int j);
VerificationReport verify_kk(const CycIndex& ci, int i, int j);
VerificationReport verify_serre(const CycIndex& ci, int i, int j);
VerificationReport verify_same_form(const CycIndex& ci);
VerificationReport verify_same_N(const CycIndex& ci, int mass_cap);
VerificationReport chevalley_exponent_table(const CycIndex& ci);

// "all", "ek", "ef", "kk", "serre", "same-form", "same-n" or "exponent-table".
std::vector<VerificationReport> verify_suite(const CycIndex& ci, const std::string& which, int same_n_cap = 3);

}  // namespace cyclotome
