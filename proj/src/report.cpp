#include "mixedmult/report.hpp"

#include <sstream>

namespace mm {

bool Report::all_pass() const {
  for (const auto& line : identities)
    if (!line.pass) return false;
  return true;
}

int Report::exit_code() const {
  if (status == "ok") return 0;
  if (status == "inconclusive") return 2;
  if (status == "invariant-failure") return 3;
  return 1;
}

Json Report::to_json(bool with_timing) const {
  Json j;
  j["schema"] = "mixedmult/report/v1";
  j["command"] = command;
  j["status"] = status;
  j["inputs"] = inputs;
  j["results"] = results;
  Json ids = Json::array();
  for (const auto& line : identities) {
    Json l;
    l["name"] = line.name;
    l["anchor"] = line.anchor;
    l["pass"] = line.pass;
    if (!line.details.empty()) l["details"] = line.details;
    ids.push_back(std::move(l));
  }
  j["identities"] = std::move(ids);
  if (with_timing) j["seconds"] = seconds;
  return j;
}

std::string Report::to_text(bool with_timing) const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  os << "status:  " << status << "\n";
  if (!results.empty()) {
    os << "results:\n";
    for (auto it = results.begin(); it != results.end(); ++it)
      os << "  " << it.key() << " = " << it.value().dump() << "\n";
  }
  if (!identities.empty()) {
    os << "identities:\n";
    for (const auto& line : identities) {
      os << "  [" << (line.pass ? "pass" : "FAIL") << "] " << line.name << " ("
         << line.anchor << ")";
      if (!line.details.empty()) os << ": " << line.details;
      os << "\n";
    }
  }
  if (with_timing) os << "seconds: " << seconds << "\n";
  return os.str();
}

Json bigint_json(const BigInt& v) { return v.str(); }

Json bigrat_json(const BigRat& v) {
  Json j;
  j["num"] = boost::multiprecision::numerator(v).str();
  j["den"] = boost::multiprecision::denominator(v).str();
  return j;
}

Json poly_to_json(const MultiPoly& p) {
  Json j;
  j["arity"] = p.arity();
  j["total_degree"] = p.total_degree();
  Json terms = Json::array();
  for (const auto& [k, v] : p.coefficients()) {
    Json t;
    t["alpha"] = k;
    t["num"] = boost::multiprecision::numerator(v).str();
    t["den"] = boost::multiprecision::denominator(v).str();
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  j["display"] = p.str();
  return j;
}

Json region_to_json(const StableRegion& r) {
  Json j;
  if (const auto* box = std::get_if<BoxRegion>(&r)) {
    j["type"] = "box";
    j["corner"] = box->corner;
  } else {
    const auto& cone = std::get<ConeRegion>(r);
    j["type"] = "cone";
    j["slope"] = cone.slope;
    j["u0"] = cone.u0;
    j["v0"] = cone.v0;
  }
  return j;
}

Json table_to_json(const HilbertTable& t) {
  Json j;
  j["lo"] = t.lower();
  j["hi"] = t.upper();
  Json vals = Json::array();
  for (std::size_t i = 0; i < t.cell_count(); ++i)
    vals.push_back(t.at(t.point_of(i)));
  j["values"] = std::move(vals);
  return j;
}

}  // namespace mm
