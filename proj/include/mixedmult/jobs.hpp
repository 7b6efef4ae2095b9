#ifndef MIXEDMULT_JOBS_HPP
#define MIXEDMULT_JOBS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "mixedmult/report.hpp"

namespace mm {

struct JobSpec {
  std::string command;
  Json payload = Json::object();
  std::optional<Exp> box_cap;   // overrides fitting caps
  std::uint64_t seed = 7;       // suite randomness
  bool ehrhart_check = true;
  bool quick_suite = true;      // CLI suite runs the scaled-down counts
};

JobSpec parse_job(const std::string& text);

Report run(const JobSpec& job);

}  // namespace mm

#endif
