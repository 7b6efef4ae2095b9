#ifndef MIXEDMULT_BRIDGE_HPP
#define MIXEDMULT_BRIDGE_HPP

#include <vector>

#include "mixedmult/multiplicities.hpp"
#include "mixedmult/polytope.hpp"

namespace mm {

// Both sides of the mixed-multiplicity / mixed-volume correspondence for
// single-degree monomial ideals J_1..J_n in n+1 variables.  The zero slot
// carries the standard simplex (the Newton polytope of the variables), which
// is what the lambda-diagonal volume expansion pairs with that slot.
struct BridgeEntry {
  std::vector<int> alpha;
  BigInt e_alpha;
  BigRat mixed_volume;  // lattice-normalized
  bool match = false;
};

struct BridgeReport {
  int n = 0;
  std::vector<BridgeEntry> entries;
  bool all_match = false;
};

BridgeReport mixed_mult_volume_bridge(const std::vector<MonomialIdeal>& Js,
                                      const FitOptions& opt = {});

}  // namespace mm

#endif
