#include "mixedmult/jobs.hpp"

#include <chrono>

#include "mixedmult/bridge.hpp"
#include "mixedmult/closed_forms.hpp"
#include "mixedmult/multiplicities.hpp"
#include "mixedmult/rees.hpp"
#include "mixedmult/suite.hpp"

namespace mm {

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw std::invalid_argument("job field '" + field + "': " + why);
}

const Json& need(const Json& j, const std::string& field) {
  if (!j.contains(field)) bad_field(field, "missing");
  return j.at(field);
}

RingContext parse_ring(const Json& j) {
  const Json& r = need(j, "ring");
  if (!r.contains("vars") || !r.at("vars").is_number_integer())
    bad_field("ring.vars", "must be an integer");
  const int n = r.at("vars").get<int>();
  if (n < 1 || n > 16) bad_field("ring.vars", "must be between 1 and 16");
  if (!r.contains("grading")) return RingContext::standard(n);
  RingContext ring;
  ring.nvars = n;
  const Json& g = r.at("grading");
  if (!g.is_array() || g.size() != static_cast<std::size_t>(n))
    bad_field("ring.grading", "needs one degree vector per variable");
  for (const auto& row : g) {
    if (!row.is_array() || row.empty())
      bad_field("ring.grading", "degree vectors must be nonempty arrays");
    std::vector<Exp> d;
    for (const auto& x : row) {
      if (!x.is_number_integer() || x.get<long long>() < 0)
        bad_field("ring.grading", "entries must be non-negative integers");
      d.push_back(static_cast<Exp>(x.get<long long>()));
    }
    ring.grading.push_back(std::move(d));
  }
  ring.grading_rank = static_cast<int>(ring.grading[0].size());
  ring.validate();
  return ring;
}

MonomialIdeal parse_ideal_field(const Json& j, const std::string& field,
                                const RingContext& ring) {
  const Json& v = need(j, field);
  if (!v.is_string()) bad_field(field, "must be an ideal string");
  try {
    return parse_ideal(v.get<std::string>(), ring);
  } catch (const std::exception& e) {
    bad_field(field, e.what());
  }
}

std::vector<Exp> parse_exp_vector(const Json& v, const std::string& field) {
  if (!v.is_array()) bad_field(field, "must be an array");
  std::vector<Exp> out;
  for (const auto& x : v) {
    if (!x.is_number_integer() || x.get<long long>() < 0)
      bad_field(field, "entries must be non-negative integers");
    out.push_back(static_cast<Exp>(x.get<long long>()));
  }
  return out;
}

geom::LatticePolytope parse_polytope(const Json& v, const std::string& field) {
  if (!v.is_object() || !v.contains("dim") || !v.contains("points"))
    bad_field(field, "polytopes need {\"dim\": n, \"points\": [[...]]}");
  const int dim = v.at("dim").get<int>();
  if (dim < 1 || dim > 4) bad_field(field, "dim must be between 1 and 4");
  std::vector<geom::Point> pts;
  for (const auto& row : v.at("points")) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim))
      bad_field(field, "every point needs dim coordinates");
    geom::Point p;
    for (const auto& x : row) p.push_back(BigInt(x.get<long long>()));
    pts.push_back(std::move(p));
  }
  if (pts.empty()) bad_field(field, "needs at least one point");
  return geom::LatticePolytope::hull(dim, std::move(pts));
}

Json evec_json(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

FitOptions options_from(const JobSpec& job) {
  FitOptions opt;
  if (job.box_cap) opt.box_cap = *job.box_cap;
  return opt;
}

// ---- command handlers ----

Report run_hilbert(const JobSpec& job) {
  Report rep;
  rep.command = "hilbert";
  RingContext ring = parse_ring(job.payload);
  MonomialIdeal rel = parse_ideal_field(job.payload, "relations", ring);
  GradedPresentation P = GradedPresentation::make(ring, rel);
  rep.inputs = job.payload;

  const Json& box = need(job.payload, "box");
  std::vector<Exp> lo = parse_exp_vector(need(box, "lo"), "box.lo");
  std::vector<Exp> hi = parse_exp_vector(need(box, "hi"), "box.hi");
  if (static_cast<int>(lo.size()) != ring.grading_rank ||
      static_cast<int>(hi.size()) != ring.grading_rank)
    bad_field("box", "corner arity must match the grading rank");
  HilbertTable T = hilbert_function(P, lo, hi);
  rep.results["table"] = table_to_json(T);

  if (ring.is_standard_multigraded()) {
    const int deg = relevant_total_degree(P);
    rep.results["total_degree"] = deg;
    if (ring.grading_rank == 2) {
      auto [r1, r2] = partial_degrees(P);
      rep.results["partial_degrees"] = Json::array({r1, r2});
    }
    if (job.payload.contains("fit") && job.payload.at("fit").get<bool>()) {
      CellFn f = [&](const std::vector<Exp>& u) {
        return graded_piece_dimension(P, u);
      };
      HilbertPolynomial fit =
          fit_stable_box(f, ring.grading_rank, deg, options_from(job));
      rep.results["polynomial"] = poly_to_json(fit.poly);
      rep.results["region"] = region_to_json(fit.region);
      if (deg >= 0) {
        MixedMultiplicityVector mv = extract_mixed_multiplicities(fit);
        Json e = Json::array();
        for (const auto& [k, v] : mv.entries) {
          Json entry;
          entry["alpha"] = k;
          entry["e"] = v.str();
          e.push_back(std::move(entry));
        }
        rep.results["mixed_multiplicities"] = std::move(e);
        bool nonneg = true;
        for (const auto& [k, v] : mv.entries) nonneg = nonneg && v >= 0;
        rep.identities.push_back(
            {"mixed-multiplicity-nonnegativity",
             "standard multigraded top coefficients", nonneg, ""});
      }
    }
  }
  return rep;
}

Report run_mixedmult(const JobSpec& job) {
  Report rep;
  rep.command = "mixedmult";
  RingContext ring = parse_ring(job.payload);
  MonomialIdeal I = parse_ideal_field(job.payload, "I", ring);
  const Json& jlist = need(job.payload, "J");
  if (!jlist.is_array() || jlist.empty())
    bad_field("J", "must be a nonempty array of ideal strings");
  std::vector<MonomialIdeal> Js;
  for (const auto& s : jlist) {
    if (!s.is_string()) bad_field("J", "entries must be ideal strings");
    Js.push_back(parse_ideal(s.get<std::string>(), ring));
  }
  rep.inputs = job.payload;

  IdealTuple T = IdealTuple::make(I, Js);
  MixedMultiplicityResult r = mixed_multiplicities(T, options_from(job));
  rep.results["degree"] = r.degree;
  rep.results["polynomial"] = poly_to_json(r.fit.poly);
  rep.results["region"] = region_to_json(r.fit.region);
  Json e = Json::array();
  for (const auto& [k, v] : r.top.entries) {
    Json entry;
    entry["alpha"] = k;
    entry["e"] = v.str();
    e.push_back(std::move(entry));
  }
  rep.results["mixed_multiplicities"] = std::move(e);

  // leading-slot identity: e_{(d-1,0,...,0)} equals e(I)
  std::vector<int> lead(Js.size() + 1, 0);
  lead[0] = r.degree;
  BigInt eI = samuel_multiplicity(I);
  rep.identities.push_back({"leading-slot-multiplicity",
                            "mixed multiplicity of the primary slot",
                            r.top.at(lead) == eI,
                            "e_lead=" + r.top.at(lead).str() + " e(I)=" + eI.str()});

  if (Js.size() == 1) {
    const int d = r.degree + 1;
    std::vector<BigInt> elist(static_cast<std::size_t>(d), 0);
    for (int j = 0; j < d; ++j)
      elist[static_cast<std::size_t>(j)] = r.top.at({d - 1 - j, j});
    rep.results["e_list"] = evec_json(elist);
    RigidityReport rr = rigidity_check(I, Js[0], options_from(job));
    rep.results["rho"] = rr.rho;
    rep.identities.push_back({"rigidity-bracket",
                              "positivity range of mixed multiplicities",
                              rr.positivity_ok && rr.bracket_ok &&
                                  rr.degree_bound_ok,
                              "rho=" + std::to_string(rr.rho)});
  }
  return rep;
}

Report run_multseq(const JobSpec& job) {
  Report rep;
  rep.command = "multseq";
  RingContext ring = parse_ring(job.payload);
  MonomialIdeal I = parse_ideal_field(job.payload, "I", ring);
  rep.inputs = job.payload;
  MultiplicitySequence s = multiplicity_sequence(I, options_from(job));
  rep.results["c"] = evec_json(s.c);
  rep.results["j_multiplicity"] = s.c[0].str();
  BigInt lhs = assoc_graded_multiplicity(I);
  BigInt rhs = 0;
  for (const BigInt& x : s.c) rhs += x;
  rep.identities.push_back({"dade-sequence-sum", "Dade associated-graded identity",
                            lhs == rhs,
                            "e(G)=" + lhs.str() + " sum=" + rhs.str()});
  return rep;
}

Report run_rees(const JobSpec& job) {
  Report rep;
  rep.command = "rees";
  RingContext ring = parse_ring(job.payload);
  MonomialIdeal I = parse_ideal_field(job.payload, "I", ring);
  rep.inputs = job.payload;
  ReesBigradedData R = rees_mixed_multiplicities(I, options_from(job));
  rep.results["slope"] = R.slope;
  rep.results["degree"] = R.s;
  rep.results["polynomial"] = poly_to_json(R.fit.poly);
  rep.results["region"] = region_to_json(R.fit.region);
  rep.results["e"] = evec_json(R.e);
  rep.results["rho"] = R.rho;
  BigInt sat = saturated_quotient_multiplicity(I);
  rep.identities.push_back({"blowup-top-coefficient",
                            "top blowup multiplicity via saturation",
                            R.e[static_cast<std::size_t>(R.s)] == sat,
                            "e_s=" + R.e[static_cast<std::size_t>(R.s)].str()});
  if (I.num_generators() == 1) {
    std::vector<BigInt> free_form = closed_forms::bigraded_free_mixed(
        ring.nvars, 1, {static_cast<unsigned>(I.generators()[0].total_degree())});
    rep.identities.push_back({"free-bigraded-signs",
                              "signed closed form of the free case",
                              free_form == R.e, ""});
  }
  if (job.payload.contains("quotient_power")) {
    const Exp v = static_cast<Exp>(job.payload.at("quotient_power").get<long long>());
    MultiPoly q = quotient_hilbert_polynomial(R, v);
    rep.results["quotient_polynomial"] = poly_to_json(q);
  }
  if (job.payload.contains("embedding")) {
    const auto ce = parse_exp_vector(job.payload.at("embedding"), "embedding");
    if (ce.size() != 2) bad_field("embedding", "needs [c, e]");
    BigInt deg = embedded_degree(R, ce[0], ce[1]);
    rep.results["embedded_degree"] = deg.str();
    BigInt diag = embedded_degree_diagonal_fit(I, ce[0], ce[1]);
    rep.identities.push_back({"embedded-degree-diagonal",
                              "blowup embedding degree via the diagonal",
                              deg == diag,
                              "formula=" + deg.str() + " diagonal=" + diag.str()});
  }
  return rep;
}

Report run_mixedvolume(const JobSpec& job) {
  Report rep;
  rep.command = "mixedvolume";
  const Json& plist = need(job.payload, "polytopes");
  if (!plist.is_array() || plist.empty())
    bad_field("polytopes", "must be a nonempty array");
  std::vector<geom::LatticePolytope> Q;
  for (const auto& p : plist) Q.push_back(parse_polytope(p, "polytopes"));
  const int n = Q[0].ambient_dim();
  if (static_cast<int>(Q.size()) != n)
    bad_field("polytopes", "need exactly dim polytopes for a mixed volume");
  rep.inputs = job.payload;
  BigRat mv = geom::mixed_volume(Q);
  rep.results["mixed_volume"] = bigrat_json(mv);
  Json vols = Json::array();
  for (const auto& q : Q) {
    const auto v = geom::volume(q);
    Json one;
    one["vertices"] = static_cast<int>(q.vertices().size());
    one["volume"] = bigrat_json(v.value);
    one["degenerate"] = v.degenerate;
    vols.push_back(std::move(one));
  }
  rep.results["volumes"] = std::move(vols);
  rep.identities.push_back({"mixed-volume-integrality",
                            "lattice mixed volumes are integers",
                            boost::multiprecision::denominator(mv) == 1,
                            rat_string(mv)});
  if (job.ehrhart_check) {
    bool ok = true;
    for (const auto& q : Q)
      if (q.affine_dim() == n && geom::ehrhart_volume(q) != geom::volume(q).value)
        ok = false;
    rep.identities.push_back({"ehrhart-volume-agreement",
                              "lattice point count asymptotics", ok, ""});
  }
  return rep;
}

Report run_bernstein(const JobSpec& job) {
  Report rep;
  rep.command = "bernstein";
  const Json& slist = need(job.payload, "supports");
  if (!slist.is_array() || slist.empty())
    bad_field("supports", "must be a nonempty array of point lists");
  const std::size_t n = slist.size();
  std::vector<std::vector<geom::Point>> supports;
  for (const auto& s : slist) {
    if (!s.is_array() || s.empty())
      bad_field("supports", "every support needs at least one point");
    std::vector<geom::Point> pts;
    for (const auto& row : s) {
      if (!row.is_array() || row.size() != n)
        bad_field("supports", "points must have one coordinate per polynomial");
      geom::Point p;
      for (const auto& x : row) p.push_back(BigInt(x.get<long long>()));
      pts.push_back(std::move(p));
    }
    supports.push_back(std::move(pts));
  }
  rep.inputs = job.payload;
  BigInt bound = geom::bernstein_bound(supports);
  rep.results["bound"] = bound.str();
  rep.identities.push_back({"bkk-integrality", "Bernstein root bound",
                            true, "bound=" + bound.str()});
  return rep;
}

Report run_milnor(const JobSpec& job) {
  Report rep;
  rep.command = "milnor";
  const Json& e = need(job.payload, "exponents");
  if (!e.is_array() || e.size() < 2)
    bad_field("exponents", "need at least two Brieskorn exponents");
  std::vector<unsigned> a;
  for (const auto& x : e) {
    if (!x.is_number_integer() || x.get<long long>() < 2)
      bad_field("exponents", "entries must be integers >= 2");
    a.push_back(static_cast<unsigned>(x.get<long long>()));
  }
  rep.inputs = job.payload;
  MilnorSequence s = milnor_sequence(a);
  // mu* is printed top Milnor number first
  Json mu = Json::array();
  std::string display = "mu* = (";
  for (std::size_t i = s.mu.size(); i-- > 0;) {
    mu.push_back(s.mu[i].str());
    display += s.mu[i].str();
    display += i ? ", " : ")";
  }
  rep.results["mu_star"] = std::move(mu);
  rep.results["display"] = display;
  unsigned amin = a[0];
  BigInt top = 1;
  for (unsigned x : a) {
    amin = std::min(amin, x);
    top *= BigInt(x) - 1;
  }
  rep.identities.push_back({"milnor-order", "section Milnor number order identity",
                            s.mu[1] == BigInt(amin) - 1, ""});
  rep.identities.push_back({"milnor-top", "Milnor number of the Brieskorn form",
                            s.mu.back() == top, ""});
  return rep;
}

Report run_oracle(const JobSpec& job) {
  Report rep;
  rep.command = "oracle";
  const Json& v = need(job.payload, "variant");
  if (!v.is_string()) bad_field("variant", "must be a string");
  const std::string variant = v.get<std::string>();
  rep.inputs = job.payload;
  auto get_biglist = [&](const std::string& f) {
    std::vector<BigInt> out;
    for (const auto& x : need(job.payload, f)) out.push_back(BigInt(x.get<long long>()));
    return out;
  };
  auto get_unsigned_list = [&](const std::string& f) {
    std::vector<unsigned> out;
    for (const auto& x : need(job.payload, f))
      out.push_back(static_cast<unsigned>(x.get<long long>()));
    return out;
  };
  if (variant == "htu") {
    BigInt val = closed_forms::htu_rees(get_biglist("e_quotients"),
                                        need(job.payload, "dim").get<int>(),
                                        need(job.payload, "dim_first").get<int>(),
                                        BigInt(need(job.payload, "e_ambient").get<long long>()));
    rep.results["value"] = val.str();
  } else if (variant == "hoang") {
    auto vals = closed_forms::hoang_mixed(get_biglist("e_quotients"),
                                          need(job.payload, "s").get<int>(),
                                          need(job.payload, "length").get<int>());
    rep.results["values"] = evec_json(vals);
  } else if (variant == "filter_regular") {
    rep.results["value"] =
        closed_forms::filter_regular_rees(get_unsigned_list("degrees"),
                                          BigInt(need(job.payload, "e_ambient").get<long long>()))
            .str();
  } else if (variant == "extended_filter_regular") {
    rep.results["value"] =
        closed_forms::filter_regular_extended(get_unsigned_list("degrees"),
                                              BigInt(need(job.payload, "e_ambient").get<long long>()))
            .str();
  } else if (variant == "regular_sequence_rees") {
    auto vals = closed_forms::regular_sequence_rees_mixed(
        get_unsigned_list("degrees"),
        BigInt(need(job.payload, "e_ambient").get<long long>()),
        need(job.payload, "vars").get<int>());
    rep.results["values"] = evec_json(vals);
  } else if (variant == "maximal_minors") {
    rep.results["values"] = evec_json(closed_forms::minors_mixed(
        need(job.payload, "r").get<int>()));
  } else if (variant == "katz_verma") {
    BigRat val = closed_forms::katz_verma_rhs(
        BigInt(need(job.payload, "e_front").get<long long>()),
        get_biglist("e_list"),
        static_cast<unsigned>(need(job.payload, "d").get<int>()));
    rep.results["value"] = bigrat_json(val);
  } else if (variant == "bigraded_free") {
    auto vals = closed_forms::bigraded_free_mixed(
        need(job.payload, "m").get<int>(), need(job.payload, "n").get<int>(),
        get_unsigned_list("degrees"));
    rep.results["values"] = evec_json(vals);
  } else {
    bad_field("variant", "unknown oracle '" + variant + "'");
  }
  return rep;
}

Report run_suite_cmd(const JobSpec& job) {
  suite::SuiteOptions opt = job.quick_suite ? suite::SuiteOptions::quick()
                                            : suite::SuiteOptions::acceptance();
  return suite::run_suite(job.seed, opt);
}

}  // namespace

JobSpec parse_job(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("job is not valid JSON: ") + e.what());
  }
  JobSpec job;
  if (!j.contains("command") || !j.at("command").is_string())
    bad_field("command", "missing or not a string");
  job.command = j.at("command").get<std::string>();
  job.payload = j;
  if (j.contains("box")) {
    // box caps may ride along inside payloads that use them
  }
  if (j.contains("seed")) job.seed = j.at("seed").get<std::uint64_t>();
  return job;
}

Report run(const JobSpec& job) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  try {
    if (job.command == "hilbert") rep = run_hilbert(job);
    else if (job.command == "mixedmult") rep = run_mixedmult(job);
    else if (job.command == "multseq") rep = run_multseq(job);
    else if (job.command == "rees") rep = run_rees(job);
    else if (job.command == "mixedvolume") rep = run_mixedvolume(job);
    else if (job.command == "bernstein") rep = run_bernstein(job);
    else if (job.command == "milnor") rep = run_milnor(job);
    else if (job.command == "oracle") rep = run_oracle(job);
    else if (job.command == "suite") rep = run_suite_cmd(job);
    else throw std::invalid_argument("unknown command '" + job.command + "'");
  } catch (const UnstableRegion& e) {
    rep.command = job.command;
    rep.status = "inconclusive";
    Json m;
    m["error"] = e.what();
    m["mismatch"] = e.mismatch;
    rep.results = std::move(m);
    return rep;
  } catch (const InvariantFailure& e) {
    rep.command = job.command;
    rep.status = "invariant-failure";
    rep.results["error"] = e.what();
    return rep;
  }
  if (rep.status == "ok" && !rep.all_pass()) rep.status = "invariant-failure";
  rep.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return rep;
}

}  // namespace mm
