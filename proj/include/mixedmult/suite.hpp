#ifndef MIXEDMULT_SUITE_HPP
#define MIXEDMULT_SUITE_HPP

#include <cstdint>
#include <random>

#include "mixedmult/monomial.hpp"
#include "mixedmult/polytope.hpp"
#include "mixedmult/report.hpp"

namespace mm::suite {

// Deterministic generator: identical streams on every platform and run.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return eng_() % n; }
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) {  // inclusive
    return lo + below(hi - lo + 1);
  }

 private:
  std::mt19937_64 eng_;
};

MonomialIdeal random_mprimary(Rng& rng, int nvars, unsigned min_deg,
                              unsigned max_deg, int extra_gens);
MonomialIdeal random_proper(Rng& rng, int nvars, unsigned max_deg, int gens);
geom::LatticePolytope random_polytope(Rng& rng, int dim, unsigned coord_max,
                                      int npts);

struct SuiteOptions {
  int samuel_cases = 25;
  int order_cases = 15;
  int inequality_cases = 15;
  int rees_verma_cases = 10;
  int multseq_primary = 10;
  int multseq_other = 10;
  int mixed_volume_cases = 20;
  unsigned bezout_max_degree = 4;
  int minkowski_poly_cases = 10;
  int bridge_cases = 5;
  int rees_nonstandard_cases = 8;
  int milnor_cases = 10;
  int dade_pairs = 8;
  int dade_primary = 5;
  int rigidity_triples = 10;

  static SuiteOptions quick();       // scaled-down CLI defaults
  static SuiteOptions acceptance();  // full counts
};

void check_samuel_staircase(Rng& rng, int cases, std::vector<IdentityLine>& out);
void check_order_formula(Rng& rng, int cases, std::vector<IdentityLine>& out);
void check_inequalities(Rng& rng, int cases, std::vector<IdentityLine>& out);
void check_rees_verma(Rng& rng, int cases, std::vector<IdentityLine>& out);
void check_multiplicity_sequences(Rng& rng, int primary, int other,
                                  std::vector<IdentityLine>& out);
void check_mixed_volume_kernel(Rng& rng, int cases, unsigned bezout_max,
                               int poly_cases, std::vector<IdentityLine>& out);
void check_bridge(int cases, std::vector<IdentityLine>& out);
void check_rees_nonstandard(Rng& rng, int cases, std::vector<IdentityLine>& out);
void check_milnor(Rng& rng, int cases, std::vector<IdentityLine>& out);
void check_dade(Rng& rng, int pairs, int primary, std::vector<IdentityLine>& out);
void check_rigidity(Rng& rng, int triples, std::vector<IdentityLine>& out);

Report run_suite(std::uint64_t seed, const SuiteOptions& opt);

}  // namespace mm::suite

#endif
