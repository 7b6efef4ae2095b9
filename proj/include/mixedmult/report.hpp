#ifndef MIXEDMULT_REPORT_HPP
#define MIXEDMULT_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "mixedmult/hilbert.hpp"

namespace mm {

using Json = nlohmann::ordered_json;

// One checked identity; every line names the classical result it tests.
struct IdentityLine {
  std::string name;
  std::string anchor;
  bool pass = false;
  std::string details;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  std::vector<IdentityLine> identities;
  std::string status = "ok";  // ok | inconclusive | invariant-failure | input-error
  double seconds = 0.0;

  bool all_pass() const;
  int exit_code() const;
  Json to_json(bool with_timing = false) const;
  std::string to_text(bool with_timing = false) const;
};

Json poly_to_json(const MultiPoly& p);
Json region_to_json(const StableRegion& r);
Json table_to_json(const HilbertTable& t);
Json bigint_json(const BigInt& v);     // decimal string
Json bigrat_json(const BigRat& v);     // {"num": "...", "den": "..."}

}  // namespace mm

#endif
