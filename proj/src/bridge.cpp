#include "mixedmult/bridge.hpp"

namespace mm {

namespace {

geom::Point to_point(const ExponentVector& e) {
  geom::Point p(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) p[i] = BigInt(e[i]);
  return p;
}

geom::LatticePolytope ideal_newton_polytope(const MonomialIdeal& I) {
  std::vector<geom::Point> pts;
  for (const auto& g : I.generators()) pts.push_back(to_point(g));
  return geom::LatticePolytope::hull(I.ring().nvars, std::move(pts));
}

}  // namespace

BigInt staircase_volume_multiplicity(const MonomialIdeal& I) {
  if (!is_primary_to_max_ideal(I))
    throw std::invalid_argument("staircase volume needs an m-primary ideal");
  const int n = I.ring().nvars;
  const std::vector<Exp> pp = pure_power_exponents(I);
  BigRat box_volume = 1;
  for (Exp p : pp) box_volume *= BigRat(BigInt(p));

  // Newton polyhedron clipped to the pure-power box is the hull of the
  // subboxes [g, amax]; collect all subbox corners.
  std::vector<geom::Point> corners;
  for (const auto& g : I.generators()) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
      geom::Point c(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i)
        c[static_cast<std::size_t>(i)] =
            (mask >> i & 1) ? BigInt(pp[static_cast<std::size_t>(i)])
                            : BigInt(g[static_cast<std::size_t>(i)]);
      corners.push_back(std::move(c));
    }
  }
  geom::LatticePolytope clipped = geom::LatticePolytope::hull(n, std::move(corners));
  BigRat staircase = box_volume - geom::volume(clipped).value;
  BigRat e = staircase * BigRat(factorial(static_cast<unsigned>(n)));
  if (boost::multiprecision::denominator(e) != 1)
    throw std::logic_error("staircase volume must normalize to an integer");
  BigInt result = boost::multiprecision::numerator(e);
  if (result <= 0)
    throw InvariantFailure("staircase multiplicity must be positive");
  return result;
}

BridgeReport mixed_mult_volume_bridge(const std::vector<MonomialIdeal>& Js,
                                      const FitOptions& opt) {
  if (Js.empty()) throw std::invalid_argument("bridge needs at least one ideal");
  const RingContext& ring = Js[0].ring();
  const int n = ring.nvars - 1;
  if (static_cast<int>(Js.size()) != n)
    throw std::invalid_argument("bridge needs n ideals in n+1 variables");
  for (const auto& J : Js)
    if (!J.generated_in_single_degree())
      throw std::invalid_argument("bridge ideals must be generated in a single degree");

  IdealTuple T = IdealTuple::make(variable_ideal(ring), Js);
  MixedMultiplicityResult mixed = mixed_multiplicities(T, opt);
  if (mixed.degree != n)
    throw InvariantFailure("bridge tuple has unexpected polynomial degree");

  std::vector<geom::LatticePolytope> slot;
  slot.push_back(ideal_newton_polytope(variable_ideal(ring)));  // simplex
  for (const auto& J : Js) slot.push_back(ideal_newton_polytope(J));

  BridgeReport rep;
  rep.n = n;
  rep.all_match = true;
  for (const auto& alpha : monomials_exact(n + 1, n)) {
    std::vector<geom::LatticePolytope> family;
    for (int i = 0; i <= n; ++i)
      for (int c = 0; c < alpha[static_cast<std::size_t>(i)]; ++c)
        family.push_back(slot[static_cast<std::size_t>(i)]);
    BridgeEntry entry;
    entry.alpha = alpha;
    entry.e_alpha = mixed.top.at(alpha);
    entry.mixed_volume = geom::lattice_mixed_volume(family);
    entry.match = BigRat(entry.e_alpha) == entry.mixed_volume;
    rep.all_match = rep.all_match && entry.match;
    rep.entries.push_back(std::move(entry));
  }
  return rep;
}

}  // namespace mm
