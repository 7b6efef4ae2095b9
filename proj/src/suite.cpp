#include "mixedmult/suite.hpp"

#include <sstream>

#include "mixedmult/bridge.hpp"
#include "mixedmult/closed_forms.hpp"
#include "mixedmult/multiplicities.hpp"
#include "mixedmult/rees.hpp"

namespace mm::suite {

namespace {

std::string vec_str(const std::vector<BigInt>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i].str();
  }
  os << ")";
  return os.str();
}

ExponentVector random_monomial(Rng& rng, int nvars, unsigned deg) {
  ExponentVector m(static_cast<std::size_t>(nvars));
  for (unsigned k = 0; k < deg; ++k)
    m[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(nvars)))] += 1;
  return m;
}

void push(std::vector<IdentityLine>& out, const std::string& name,
          const std::string& anchor, bool pass, const std::string& details) {
  out.push_back(IdentityLine{name, anchor, pass, details});
}

}  // namespace

MonomialIdeal random_mprimary(Rng& rng, int nvars, unsigned min_deg,
                              unsigned max_deg, int extra_gens) {
  RingContext ring = RingContext::standard(nvars);
  std::vector<ExponentVector> gens;
  for (int i = 0; i < nvars; ++i)
    gens.push_back(ExponentVector::unit(static_cast<std::size_t>(nvars),
                                        static_cast<std::size_t>(i),
                                        rng.range(min_deg, max_deg)));
  for (int k = 0; k < extra_gens; ++k)
    gens.push_back(random_monomial(rng, nvars,
                                   static_cast<unsigned>(rng.range(min_deg, max_deg))));
  return MonomialIdeal::from_generators(ring, std::move(gens));
}

MonomialIdeal random_proper(Rng& rng, int nvars, unsigned max_deg, int gens) {
  RingContext ring = RingContext::standard(nvars);
  std::vector<ExponentVector> g;
  for (int k = 0; k < gens; ++k)
    g.push_back(random_monomial(rng, nvars,
                                static_cast<unsigned>(rng.range(1, max_deg))));
  return MonomialIdeal::from_generators(ring, std::move(g));
}

geom::LatticePolytope random_polytope(Rng& rng, int dim, unsigned coord_max,
                                      int npts) {
  std::vector<geom::Point> pts;
  for (int k = 0; k < npts; ++k) {
    geom::Point p(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i)
      p[static_cast<std::size_t>(i)] = BigInt(rng.below(coord_max + 1));
    pts.push_back(std::move(p));
  }
  return geom::LatticePolytope::hull(dim, std::move(pts));
}

SuiteOptions SuiteOptions::quick() {
  SuiteOptions o;
  o.samuel_cases = 8;
  o.order_cases = 5;
  o.inequality_cases = 5;
  o.rees_verma_cases = 4;
  o.multseq_primary = 4;
  o.multseq_other = 4;
  o.mixed_volume_cases = 8;
  o.bezout_max_degree = 3;
  o.minkowski_poly_cases = 4;
  o.bridge_cases = 3;
  o.rees_nonstandard_cases = 4;
  o.milnor_cases = 4;
  o.dade_pairs = 3;
  o.dade_primary = 2;
  o.rigidity_triples = 4;
  return o;
}

SuiteOptions SuiteOptions::acceptance() { return SuiteOptions{}; }

void check_samuel_staircase(Rng& rng, int cases, std::vector<IdentityLine>& out) {
  // pinned case first
  {
    RingContext r2 = RingContext::standard(2);
    MonomialIdeal I = parse_ideal("ideal(x1^2, x1*x2, x2^3)", r2);
    BigInt e = samuel_multiplicity(I);
    BigInt v = staircase_volume_multiplicity(I);
    push(out, "samuel-staircase-pinned", "staircase volume of the Newton diagram",
         e == 5 && v == 5, "e=" + e.str() + " vol=" + v.str());
  }
  bool all = true;
  std::string detail;
  for (int c = 0; c < cases; ++c) {
    const int n = 2 + static_cast<int>(rng.below(2));
    MonomialIdeal I = random_mprimary(rng, n, 1, 6, static_cast<int>(rng.below(3)));
    BigInt e = samuel_multiplicity(I);
    BigInt v = staircase_volume_multiplicity(I);
    if (e != v) {
      all = false;
      detail = I.str() + ": e=" + e.str() + " vol=" + v.str();
      break;
    }
  }
  push(out, "samuel-staircase-random", "staircase volume of the Newton diagram",
       all, all ? std::to_string(cases) + " cases" : detail);
}

void check_order_formula(Rng& rng, int cases, std::vector<IdentityLine>& out) {
  bool all = true;
  std::string detail;
  for (int c = 0; c < cases; ++c) {
    const int n = 2 + static_cast<int>(rng.below(2));
    const unsigned o = 1 + static_cast<unsigned>(rng.below(3));
    MonomialIdeal J = random_mprimary(rng, n, o, 6, 1);
    // force the order: add one generator of total degree exactly o
    std::vector<ExponentVector> gens = J.generators();
    gens.push_back(random_monomial(rng, n, o));
    J = MonomialIdeal::from_generators(J.ring(), std::move(gens));
    OrderFormulaReport rep = order_formula_check(J);
    if (!rep.ok || rep.order != o) {
      all = false;
      detail = J.str() + ": e1=" + rep.e1.str() +
               " o=" + std::to_string(rep.order);
      break;
    }
  }
  push(out, "order-formula", "Katz-Verma order identity e_1(m|J) = o(J)", all,
       all ? std::to_string(cases) + " cases" : detail);
}

void check_inequalities(Rng& rng, int cases, std::vector<IdentityLine>& out) {
  {
    RingContext r2 = RingContext::standard(2);
    MonomialIdeal I = variable_ideal(r2);
    MonomialIdeal J = parse_ideal("ideal(x1^2, x1*x2, x2^3)", r2);
    InequalityReport rep = inequality_suite(I, J);
    push(out, "bhattacharya-expansion-pinned", "product multiplicity expansion",
         rep.expansion_ok && rep.e_product == 10,
         "e(IJ)=" + rep.e_product.str() + " e=" + vec_str(rep.e));
  }
  bool expansion = true, teissier = true, logconvex = true, minkowski = true;
  std::string detail;
  for (int c = 0; c < cases; ++c) {
    const int n = 2;
    MonomialIdeal I = random_mprimary(rng, n, 1, 5, static_cast<int>(rng.below(2)));
    MonomialIdeal J = random_mprimary(rng, n, 1, 5, static_cast<int>(rng.below(2)));
    InequalityReport rep = inequality_suite(I, J);
    expansion = expansion && rep.expansion_ok;
    teissier = teissier && rep.teissier_ok;
    logconvex = logconvex && rep.logconvex_ok;
    minkowski = minkowski && rep.minkowski_ok;
    if (!(rep.expansion_ok && rep.teissier_ok && rep.logconvex_ok && rep.minkowski_ok))
      detail = I.str() + " | " + J.str();
  }
  push(out, "bhattacharya-expansion", "product multiplicity expansion", expansion,
       detail);
  push(out, "teissier-power-inequalities", "Teissier-Rees-Sharp bounds", teissier,
       detail);
  push(out, "mixed-multiplicity-log-convexity", "Teissier-Rees-Sharp bounds",
       logconvex, detail);
  push(out, "minkowski-inequality", "Minkowski inequality for multiplicities",
       minkowski, detail);
}

void check_rees_verma(Rng& rng, int cases, std::vector<IdentityLine>& out) {
  // pinned integrally closed cases in two variables: e(A[It]) = 1 + o(I)
  {
    RingContext r2 = RingContext::standard(2);
    bool ok = true;
    std::string detail;
    for (const char* text : {"ideal(x1, x2)", "ideal(x1^2, x1*x2, x2^2)",
                             "ideal(x1^2, x1*x2, x2^3)"}) {
      MonomialIdeal I = parse_ideal(text, r2);
      BigInt e = rees_algebra_multiplicity(I);
      BigInt expect = BigInt(1) + BigInt(order(I));
      if (e != expect) {
        ok = false;
        detail = std::string(text) + " gives " + e.str();
      }
    }
    push(out, "huneke-sally-pinned", "integrally closed blowup multiplicity", ok,
         detail);
  }
  bool all = true;
  std::string detail;
  for (int c = 0; c < cases; ++c) {
    const int n = 2 + static_cast<int>(rng.below(2));
    MonomialIdeal I = (c % 2 == 0)
                          ? random_mprimary(rng, n, 1, 4, 1)
                          : random_proper(rng, n, 4, 1 + static_cast<int>(rng.below(2)));
    BigInt lhs = rees_algebra_multiplicity(I);
    std::vector<BigInt> e = mixed_e_list(variable_ideal(I.ring()), I);
    BigInt rhs = 0;
    for (const BigInt& x : e) rhs += x;
    if (lhs != rhs) {
      all = false;
      detail = I.str() + ": fit=" + lhs.str() + " sum=" + rhs.str();
      break;
    }
  }
  push(out, "rees-verma-sum", "Rees-Verma blowup multiplicity formula", all,
       all ? std::to_string(cases) + " cases" : detail);
}

void check_multiplicity_sequences(Rng& rng, int primary, int other,
                                  std::vector<IdentityLine>& out) {
  {
    RingContext r2 = RingContext::standard(2);
    MonomialIdeal I = parse_ideal("ideal(x1)", r2);
    MultiplicitySequence s = multiplicity_sequence(I);
    push(out, "multiplicity-sequence-principal", "Achilles-Manaresi sequence",
         s.c == std::vector<BigInt>{0, 1, 0}, vec_str(s.c));
  }
  bool all = true;
  std::string detail;
  for (int c = 0; c < primary; ++c) {
    const int n = 2 + static_cast<int>(rng.below(2));
    MonomialIdeal I = random_mprimary(rng, n, 1, 4, 1);
    MultiplicitySequence s = multiplicity_sequence(I);
    BigInt e = samuel_multiplicity(I);
    bool ok = s.c[0] == e;
    for (std::size_t j = 1; j < s.c.size(); ++j) ok = ok && s.c[j] == 0;
    if (!ok) {
      all = false;
      detail = I.str() + ": " + vec_str(s.c) + " e=" + e.str();
      break;
    }
  }
  push(out, "multiplicity-sequence-primary", "Achilles-Manaresi sequence", all,
       all ? std::to_string(primary) + " cases" : detail);

  bool bracket = true;
  std::string detail2;
  for (int c = 0; c < other; ++c) {
    const int n = 2 + static_cast<int>(rng.below(2));
    MonomialIdeal I = random_proper(rng, n, 4, 1 + static_cast<int>(rng.below(2)));
    if (is_primary_to_max_ideal(I)) continue;
    try {
      multiplicity_sequence(I);  // support bracket asserted inside
    } catch (const InvariantFailure& err) {
      bracket = false;
      detail2 = I.str() + ": " + err.what();
      break;
    }
  }
  push(out, "multiplicity-sequence-support", "Achilles-Manaresi support bracket",
       bracket, bracket ? std::to_string(other) + " cases" : detail2);
}

void check_mixed_volume_kernel(Rng& rng, int cases, unsigned bezout_max,
                               int poly_cases, std::vector<IdentityLine>& out) {
  using geom::LatticePolytope;
  {
    LatticePolytope segx = LatticePolytope::hull(2, {{BigInt(0), BigInt(0)},
                                                     {BigInt(1), BigInt(0)}});
    LatticePolytope segy = LatticePolytope::hull(2, {{BigInt(0), BigInt(0)},
                                                     {BigInt(0), BigInt(1)}});
    BigRat mv = geom::mixed_volume({segx, segy});
    push(out, "mixed-volume-unit-square", "mixed volume normalization",
         mv == 1, rat_string(mv));
  }
  bool diag = true, ehrhart = true;
  std::string ddetail, edetail;
  for (int c = 0; c < cases; ++c) {
    const int n = 1 + static_cast<int>(rng.below(3));
    LatticePolytope Q = random_polytope(rng, n, 4, 4 + static_cast<int>(rng.below(5)));
    BigRat vol = geom::volume(Q).value;
    std::vector<LatticePolytope> family(static_cast<std::size_t>(n), Q);
    BigRat mv = geom::mixed_volume(family);
    if (mv != vol * BigRat(factorial(static_cast<unsigned>(n)))) {
      diag = false;
      ddetail = "dim " + std::to_string(n);
    }
    if (Q.affine_dim() == n && geom::ehrhart_volume(Q) != vol) {
      ehrhart = false;
      edetail = "dim " + std::to_string(n);
    }
  }
  push(out, "mixed-volume-diagonal", "diagonal mixed volume identity", diag, ddetail);
  push(out, "ehrhart-volume-agreement", "lattice point count asymptotics", ehrhart,
       edetail);

  // Bezout: MV of dilated standard simplices is the degree product
  bool bezout = true;
  std::string bdetail;
  for (int n = 1; n <= 3 && bezout; ++n) {
    std::vector<geom::Point> simplex;
    simplex.emplace_back(static_cast<std::size_t>(n), BigInt(0));
    for (int i = 0; i < n; ++i) {
      geom::Point p(static_cast<std::size_t>(n), BigInt(0));
      p[static_cast<std::size_t>(i)] = 1;
      simplex.push_back(std::move(p));
    }
    LatticePolytope delta = LatticePolytope::hull(n, simplex);
    std::vector<unsigned> d(static_cast<std::size_t>(n), 1);
    for (;;) {
      std::vector<LatticePolytope> family;
      BigInt expect = 1;
      for (int i = 0; i < n; ++i) {
        family.push_back(delta.dilated(BigInt(d[static_cast<std::size_t>(i)])));
        expect *= d[static_cast<std::size_t>(i)];
      }
      BigRat mv = geom::mixed_volume(family);
      if (mv != BigRat(expect)) {
        bezout = false;
        bdetail = "n=" + std::to_string(n);
        break;
      }
      int i = n - 1;
      while (i >= 0 && d[static_cast<std::size_t>(i)] == bezout_max) {
        d[static_cast<std::size_t>(i)] = 1;
        --i;
      }
      if (i < 0) break;
      d[static_cast<std::size_t>(i)] += 1;
    }
  }
  push(out, "bezout-bound", "Bezout degree product as a mixed volume", bezout,
       bdetail);

  bool poly_ok = true;
  std::string pdetail;
  for (int c = 0; c < poly_cases; ++c) {
    const int n = 2 + static_cast<int>(rng.below(2));
    const int k = 2 + static_cast<int>(rng.below(2));
    std::vector<LatticePolytope> Q;
    for (int i = 0; i < k; ++i)
      Q.push_back(random_polytope(rng, n, 3, 3 + static_cast<int>(rng.below(4))));
    try {
      geom::minkowski_volume_polynomial(Q);  // checks its own coefficients
    } catch (const std::logic_error& err) {
      poly_ok = false;
      pdetail = err.what();
      break;
    }
  }
  push(out, "minkowski-volume-polynomial", "volume polynomial coefficients",
       poly_ok, pdetail);
}

void check_bridge(int cases, std::vector<IdentityLine>& out) {
  struct Instance {
    int nvars;
    std::vector<const char*> ideals;
  };
  const std::vector<Instance> instances = {
      {2, {"ideal(x1, x2)"}},
      {2, {"ideal(x1^2, x2^2)"}},
      {2, {"ideal(x1^2, x1*x2)"}},
      {3, {"ideal(x1^2, x2^2, x3^2)", "ideal(x1^2, x2^2, x3^2)"}},
      {3, {"ideal(x1^2, x2*x3)", "ideal(x2^2, x1*x3)"}},
      {3, {"ideal(x1, x2, x3)", "ideal(x1^2, x2^2, x3^2)"}},
  };
  bool all = true;
  std::string detail;
  int used = 0;
  for (const auto& inst : instances) {
    if (used >= cases) break;
    ++used;
    RingContext ring = RingContext::standard(inst.nvars);
    std::vector<MonomialIdeal> Js;
    for (const char* text : inst.ideals) Js.push_back(parse_ideal(text, ring));
    BridgeReport rep = mixed_mult_volume_bridge(Js);
    if (!rep.all_match) {
      all = false;
      for (const auto& e : rep.entries)
        if (!e.match)
          detail = "alpha mismatch: e=" + e.e_alpha.str() +
                   " mv=" + rat_string(e.mixed_volume);
      break;
    }
  }
  push(out, "mixed-volume-correspondence",
       "mixed multiplicities as lattice mixed volumes", all,
       all ? std::to_string(used) + " instances" : detail);
}

void check_rees_nonstandard(Rng& rng, int cases, std::vector<IdentityLine>& out) {
  {
    RingContext r2 = RingContext::standard(2);
    MonomialIdeal I = parse_ideal("ideal(x1^2)", r2);
    ReesBigradedData R = rees_mixed_multiplicities(I);
    const bool fit_ok = R.fit.poly.str({"u", "v"}) == "u - 2*v + 1";
    push(out, "blowup-pinned-fit", "principal blowup Hilbert polynomial",
         fit_ok && R.e == std::vector<BigInt>{-2, 1},
         R.fit.poly.str({"u", "v"}) + " e=" + vec_str(R.e));
  }
  bool sat_ok = true;
  std::string sdetail;
  for (int c = 0; c < cases; ++c) {
    const int n = 2 + static_cast<int>(rng.below(2));
    MonomialIdeal I = random_proper(rng, n, 3, 1 + static_cast<int>(rng.below(2)));
    try {
      rees_mixed_multiplicities(I);  // asserts e_s against the saturation
    } catch (const InvariantFailure& err) {
      sat_ok = false;
      sdetail = I.str() + ": " + err.what();
      break;
    } catch (const UnstableRegion&) {
      sat_ok = false;
      sdetail = I.str() + ": fit did not stabilize";
      break;
    }
  }
  push(out, "blowup-top-coefficient", "top blowup multiplicity via saturation",
       sat_ok, sat_ok ? std::to_string(cases) + " cases" : sdetail);

  // dual oracles on monomial regular sequences
  struct Seq {
    int nvars;
    std::vector<unsigned> degrees;
  };
  const std::vector<Seq> seqs = {{2, {2}},    {2, {3}},    {2, {1, 2}},
                                 {2, {2, 3}}, {2, {2, 2}}, {3, {2, 3}}};
  bool dual = true;
  std::string ddetail;
  for (const auto& seq : seqs) {
    RingContext ring = RingContext::standard(seq.nvars);
    std::vector<ExponentVector> gens;
    for (std::size_t i = 0; i < seq.degrees.size(); ++i)
      gens.push_back(ExponentVector::unit(static_cast<std::size_t>(seq.nvars), i,
                                          seq.degrees[i]));
    MonomialIdeal I = MonomialIdeal::from_generators(ring, gens);
    ReesBigradedData R = rees_mixed_multiplicities(I);
    std::vector<BigInt> predicted = closed_forms::regular_sequence_rees_mixed(
        seq.degrees, BigInt(1), seq.nvars);
    if (R.e != predicted) {
      dual = false;
      ddetail = I.str() + ": fit=" + vec_str(R.e) + " closed=" + vec_str(predicted);
      break;
    }
    // principal ideals are the free-algebra case
    if (seq.degrees.size() == 1) {
      std::vector<BigInt> free_form = closed_forms::bigraded_free_mixed(
          seq.nvars, 1, {seq.degrees[0]});
      if (R.e != free_form) {
        dual = false;
        ddetail = I.str() + ": free-form mismatch " + vec_str(free_form);
        break;
      }
    }
    // blowup multiplicity against the filter-regular closed form
    BigInt hs = rees_algebra_multiplicity(I);
    BigInt fr = closed_forms::filter_regular_rees(seq.degrees, BigInt(1));
    if (hs != fr) {
      dual = false;
      ddetail = I.str() + ": blowup fit " + hs.str() + " vs closed " + fr.str();
      break;
    }
    // extended blowup against the Katz-Verma evaluation
    BigInt kv = extended_rees_multiplicity(I);
    BigInt fre = closed_forms::filter_regular_extended(seq.degrees, BigInt(1));
    if (kv != fre) {
      dual = false;
      ddetail = I.str() + ": extended " + kv.str() + " vs closed " + fre.str();
      break;
    }
    // colon-ideal mixed multiplicities
    std::vector<BigInt> e_quot;
    for (std::size_t q = 0; q < seq.degrees.size(); ++q) {
      BigInt prod = 1;
      for (std::size_t t = 0; t < q; ++t) prod *= seq.degrees[t];
      e_quot.push_back(prod);  // e(A/(f_1..f_q)) for pure powers
    }
    std::vector<BigInt> hoang = closed_forms::hoang_mixed(
        e_quot, static_cast<int>(seq.degrees.size()), seq.nvars);
    std::vector<BigInt> enumerated = mixed_e_list(variable_ideal(ring), I);
    if (hoang != enumerated) {
      dual = false;
      ddetail = I.str() + ": colon-formula " + vec_str(hoang) + " vs " +
                vec_str(enumerated);
      break;
    }
  }
  push(out, "blowup-dual-oracles",
       "closed blowup formulas against enumeration", dual,
       dual ? std::to_string(seqs.size()) + " sequences" : ddetail);
  (void)rng;
}

void check_milnor(Rng& rng, int cases, std::vector<IdentityLine>& out) {
  {
    MilnorSequence s = milnor_sequence({3, 3, 3});
    push(out, "milnor-pinned", "section Milnor numbers as mixed multiplicities",
         s.mu == std::vector<BigInt>{1, 2, 4, 8}, vec_str(s.mu));
  }
  bool all = true;
  std::string detail;
  for (int c = 0; c < cases; ++c) {
    const int nv = 2 + static_cast<int>(rng.below(2));
    std::vector<unsigned> a;
    for (int i = 0; i < nv; ++i)
      a.push_back(static_cast<unsigned>(rng.range(2, 5)));
    MilnorSequence s = milnor_sequence(a);
    unsigned amin = a[0];
    BigInt top = 1;
    for (unsigned x : a) {
      amin = std::min(amin, x);
      top *= BigInt(x) - 1;
    }
    const bool ok = s.mu.front() == 1 &&
                    s.mu[1] == BigInt(amin) - 1 && s.mu.back() == top;
    if (!ok) {
      all = false;
      detail = vec_str(s.mu);
      break;
    }
  }
  push(out, "milnor-brieskorn", "Brieskorn section Milnor numbers", all,
       all ? std::to_string(cases) + " cases" : detail);
}

void check_dade(Rng& rng, int pairs, int primary, std::vector<IdentityLine>& out) {
  bool total_ok = true;
  std::string tdetail;
  for (int c = 0; c < pairs; ++c) {
    const int n = 2;
    MonomialIdeal I = random_mprimary(rng, n, 1, 4, 1);
    MonomialIdeal J = (c % 2 == 0) ? random_mprimary(rng, n, 1, 4, 1)
                                   : random_proper(rng, n, 4, 2);
    BigInt lhs = pair_total_multiplicity(I, J);
    MixedMultiplicityResult r = mixed_multiplicities(IdealTuple::make(I, {J}));
    BigInt rhs = 0;
    for (const auto& [k, v] : r.top.entries) rhs += v;
    if (lhs != rhs) {
      total_ok = false;
      tdetail = I.str() + " | " + J.str() + ": " + lhs.str() + " vs " + rhs.str();
      break;
    }
  }
  push(out, "dade-total-multiplicity", "Dade total-grading identity", total_ok,
       total_ok ? std::to_string(pairs) + " pairs" : tdetail);

  bool graded_ok = true;
  std::string gdetail;
  for (int c = 0; c < primary; ++c) {
    const int n = 2;
    MonomialIdeal I = random_mprimary(rng, n, 1, 4, 1);
    BigInt lhs = assoc_graded_multiplicity(I);
    MultiplicitySequence s = multiplicity_sequence(I);
    BigInt rhs = 0;
    for (const BigInt& x : s.c) rhs += x;
    if (lhs != rhs) {
      graded_ok = false;
      gdetail = I.str() + ": " + lhs.str() + " vs " + rhs.str();
      break;
    }
  }
  push(out, "dade-sequence-sum", "Dade associated-graded identity", graded_ok,
       graded_ok ? std::to_string(primary) + " cases" : gdetail);
}

void check_rigidity(Rng& rng, int triples, std::vector<IdentityLine>& out) {
  bool all = true;
  std::string detail;
  for (int c = 0; c < triples; ++c) {
    const int n = 2 + static_cast<int>(rng.below(2));
    MonomialIdeal I1 = random_mprimary(rng, n, 1, 4, 1);
    MonomialIdeal I2 = random_mprimary(rng, n, 1, 4, 1);
    MonomialIdeal J = random_proper(rng, n, 4, 1 + static_cast<int>(rng.below(2)));
    RigidityReport r1 = rigidity_check(I1, J);
    RigidityReport r2 = rigidity_check(I2, J);
    const bool ok = r1.positivity_ok && r1.bracket_ok && r1.degree_bound_ok &&
                    r2.positivity_ok && r2.bracket_ok && r1.rho == r2.rho;
    if (!ok) {
      all = false;
      detail = J.str() + ": rho " + std::to_string(r1.rho) + " vs " +
               std::to_string(r2.rho);
      break;
    }
  }
  push(out, "rigidity-and-independence",
       "positivity bracket and independence from the primary slot", all,
       all ? std::to_string(triples) + " triples" : detail);

  // downward closure for tuples: e_beta > 0 whenever beta is dominated by a
  // positive alpha in the non-primary slots
  bool closed = true;
  std::string cdetail;
  for (int c = 0; c < std::max(2, triples / 3); ++c) {
    const int n = 2;
    MonomialIdeal J1 = random_proper(rng, n, 3, 1 + static_cast<int>(rng.below(2)));
    MonomialIdeal J2 = random_proper(rng, n, 3, 1 + static_cast<int>(rng.below(2)));
    IdealTuple T = IdealTuple::make(variable_ideal(J1.ring()), {J1, J2});
    MixedMultiplicityResult r = mixed_multiplicities(T);
    for (const auto& [alpha, e] : r.top.entries) {
      if (e <= 0) continue;
      for (const auto& [beta, eb] : r.top.entries) {
        bool dominated = true;
        for (std::size_t i = 1; i < alpha.size(); ++i)
          dominated = dominated && beta[i] <= alpha[i];
        if (dominated && eb <= 0) {
          closed = false;
          cdetail = J1.str() + ", " + J2.str();
        }
      }
    }
  }
  push(out, "tuple-downward-closure",
       "downward closure of positive tuple multiplicities", closed, cdetail);
}

Report run_suite(std::uint64_t seed, const SuiteOptions& opt) {
  Report rep;
  rep.command = "suite";
  rep.inputs["seed"] = seed;
  Rng rng(seed);
  std::vector<IdentityLine> lines;
  check_samuel_staircase(rng, opt.samuel_cases, lines);
  check_order_formula(rng, opt.order_cases, lines);
  check_inequalities(rng, opt.inequality_cases, lines);
  check_rees_verma(rng, opt.rees_verma_cases, lines);
  check_multiplicity_sequences(rng, opt.multseq_primary, opt.multseq_other, lines);
  check_mixed_volume_kernel(rng, opt.mixed_volume_cases, opt.bezout_max_degree,
                            opt.minkowski_poly_cases, lines);
  check_bridge(opt.bridge_cases, lines);
  check_rees_nonstandard(rng, opt.rees_nonstandard_cases, lines);
  check_milnor(rng, opt.milnor_cases, lines);
  check_dade(rng, opt.dade_pairs, opt.dade_primary, lines);
  check_rigidity(rng, opt.rigidity_triples, lines);
  rep.identities = std::move(lines);
  rep.status = rep.all_pass() ? "ok" : "invariant-failure";
  int passed = 0;
  for (const auto& l : rep.identities)
    if (l.pass) ++passed;
  rep.results["checks"] = rep.identities.size();
  rep.results["passed"] = passed;
  return rep;
}

}  // namespace mm::suite
