// Acceptance suite: every release criterion runs here, one verdict line each.
// All comparisons are exact; a criterion passes only if every one of its
// sub-checks holds.

#include <chrono>
#include <iostream>
#include <vector>

#include "mixedmult/suite.hpp"

using namespace mm;
using suite::Rng;

namespace {

int failures = 0;

void verdict(int number, const std::string& label, bool pass,
             const std::string& note = "") {
  std::cout << (pass ? "PASS" : "FAIL") << " criterion " << number << ": "
            << label;
  if (!note.empty()) std::cout << " [" << note << "]";
  std::cout << std::endl;
  if (!pass) ++failures;
}

bool lines_pass(const std::vector<IdentityLine>& lines) {
  for (const auto& l : lines)
    if (!l.pass) {
      std::cout << "  failed: " << l.name << " " << l.details << "\n";
      return false;
    }
  return true;
}

}  // namespace

int main() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(20240209);

  {
    std::vector<IdentityLine> lines;
    suite::check_samuel_staircase(rng, 25, lines);
    verdict(1, "Samuel multiplicity equals the staircase volume (25 random + pinned)",
            lines_pass(lines));
  }
  {
    std::vector<IdentityLine> lines;
    suite::check_order_formula(rng, 15, lines);
    verdict(2, "order formula e_1(m|J) = o(J) on 15 ideals", lines_pass(lines));
  }
  {
    std::vector<IdentityLine> lines;
    suite::check_inequalities(rng, 15, lines);
    verdict(3, "expansion identity, power inequalities, log-convexity, Minkowski",
            lines_pass(lines));
  }
  {
    std::vector<IdentityLine> lines;
    suite::check_rees_verma(rng, 10, lines);
    verdict(4, "blowup multiplicity equals the mixed multiplicity sum (10 ideals)",
            lines_pass(lines));
  }
  {
    std::vector<IdentityLine> lines;
    suite::check_multiplicity_sequences(rng, 10, 10, lines);
    verdict(5, "multiplicity sequences: primary collapse and support bracket",
            lines_pass(lines));
  }
  {
    std::vector<IdentityLine> lines;
    suite::check_mixed_volume_kernel(rng, 20, 4, 10, lines);
    verdict(6, "mixed volume kernel, Bezout bounds, volume polynomial, Ehrhart",
            lines_pass(lines));
  }
  {
    std::vector<IdentityLine> lines;
    suite::check_bridge(6, lines);
    verdict(7, "mixed multiplicities equal lattice mixed volumes (6 instances)",
            lines_pass(lines));
  }
  {
    std::vector<IdentityLine> lines;
    suite::check_rees_nonstandard(rng, 8, lines);
    verdict(8, "blowup cone fits, top coefficients and closed-form duals",
            lines_pass(lines));
  }
  {
    std::vector<IdentityLine> lines;
    suite::check_milnor(rng, 10, lines);
    verdict(9, "Milnor sequences of Brieskorn forms (pinned + 10 random)",
            lines_pass(lines));
  }
  {
    std::vector<IdentityLine> lines;
    suite::check_dade(rng, 8, 5, lines);
    verdict(10, "total-grading and associated-graded multiplicity sums",
            lines_pass(lines));
  }
  {
    std::vector<IdentityLine> lines;
    suite::check_rigidity(rng, 10, lines);
    verdict(11, "rigidity brackets, independence and downward closure",
            lines_pass(lines));
  }
  {
    suite::SuiteOptions opt = suite::SuiteOptions::quick();
    Report a = suite::run_suite(7, opt);
    Report b = suite::run_suite(7, opt);
    const bool same = a.to_json().dump() == b.to_json().dump();
    verdict(12, "suite --seed 7 twice produces byte-identical reports",
            same && a.status == "ok");
  }

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << (failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED") << " ("
            << failures << " failing criteria, " << secs << "s)" << std::endl;
  return failures ? 1 : 0;
}
