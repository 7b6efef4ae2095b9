#include "mixedmult/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace mm {

std::string ExponentVector::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < e_.size(); ++i) {
    if (!e_[i]) continue;
    if (!first) os << "*";
    os << "x" << (i + 1);
    if (e_[i] > 1) os << "^" << e_[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

RingContext RingContext::standard(int n) {
  RingContext r;
  r.nvars = n;
  r.grading_rank = 1;
  r.grading.assign(n, {1});
  return r;
}

RingContext RingContext::blocks(const std::vector<int>& sizes) {
  RingContext r;
  r.grading_rank = static_cast<int>(sizes.size());
  r.nvars = 0;
  for (std::size_t b = 0; b < sizes.size(); ++b) {
    for (int i = 0; i < sizes[b]; ++i) {
      std::vector<Exp> g(sizes.size(), 0);
      g[b] = 1;
      r.grading.push_back(std::move(g));
      ++r.nvars;
    }
  }
  return r;
}

bool RingContext::is_standard_multigraded() const {
  for (const auto& g : grading) {
    int ones = 0;
    for (Exp x : g) {
      if (x == 1) ++ones;
      else if (x != 0) return false;
    }
    if (ones != 1) return false;
  }
  return true;
}

std::vector<int> RingContext::block_assignment() const {
  std::vector<int> blk(nvars, -1);
  for (int v = 0; v < nvars; ++v)
    for (int j = 0; j < grading_rank; ++j)
      if (grading[v][j]) { blk[v] = j; break; }
  return blk;
}

void RingContext::validate() const {
  if (nvars <= 0) throw std::invalid_argument("ring must have at least one variable");
  if (grading_rank < 1) throw std::invalid_argument("grading rank must be >= 1");
  if (static_cast<int>(grading.size()) != nvars)
    throw std::invalid_argument("grading size mismatch");
  for (const auto& g : grading) {
    if (static_cast<int>(g.size()) != grading_rank)
      throw std::invalid_argument("grading vector length mismatch");
    bool nonzero = false;
    for (Exp x : g) nonzero = nonzero || x != 0;
    if (!nonzero) throw std::invalid_argument("grading vector must be nonzero");
  }
}

namespace {

void check_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (!(I.ring() == J.ring()))
    throw std::invalid_argument("ideal operands live in different rings");
}

std::vector<ExponentVector> minimalize_gens(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const ExponentVector& a, const ExponentVector& b) {
              Exp da = a.total_degree(), db = b.total_degree();
              if (da != db) return da < db;
              return a < b;
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // after dedup, a generator can only be divided by one of strictly
  // smaller total degree
  std::vector<ExponentVector> out;
  std::vector<Exp> out_deg;
  for (const auto& g : gens) {
    const Exp dg = g.total_degree();
    bool redundant = false;
    for (std::size_t i = 0; i < out.size() && out_deg[i] < dg; ++i)
      if (out[i].divides(g)) { redundant = true; break; }
    if (!redundant) {
      out.push_back(g);
      out_deg.push_back(dg);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MonomialIdeal MonomialIdeal::from_generators(RingContext ring,
                                             std::vector<ExponentVector> gens) {
  ring.validate();
  for (const auto& g : gens)
    if (static_cast<int>(g.size()) != ring.nvars)
      throw std::invalid_argument("generator length does not match ring");
  MonomialIdeal I(std::move(ring));
  I.gens_ = minimalize_gens(std::move(gens));
  return I;
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && gens_[0].total_degree() == 0;
}

bool MonomialIdeal::contains(const ExponentVector& m) const {
  if (static_cast<int>(m.size()) != ring_.nvars)
    throw std::invalid_argument("monomial length does not match ring");
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

Exp MonomialIdeal::max_generator_degree() const {
  Exp d = 0;
  for (const auto& g : gens_) d = std::max(d, g.total_degree());
  return d;
}

Exp MonomialIdeal::min_generator_degree() const {
  if (gens_.empty()) throw std::invalid_argument("zero ideal has no generator degree");
  Exp d = gens_[0].total_degree();
  for (const auto& g : gens_) d = std::min(d, g.total_degree());
  return d;
}

bool MonomialIdeal::generated_in_single_degree() const {
  if (gens_.empty()) return false;
  Exp d = gens_[0].total_degree();
  for (const auto& g : gens_)
    if (g.total_degree() != d) return false;
  return true;
}

std::string MonomialIdeal::str() const {
  std::ostringstream os;
  os << "ideal(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].str();
  }
  os << ")";
  return os.str();
}

MonomialIdeal zero_ideal(const RingContext& ring) {
  return MonomialIdeal::from_generators(ring, {});
}

MonomialIdeal unit_ideal(const RingContext& ring) {
  return MonomialIdeal::from_generators(ring, {ExponentVector(ring.nvars)});
}

MonomialIdeal variable_ideal(const RingContext& ring) {
  std::vector<ExponentVector> gens;
  for (int i = 0; i < ring.nvars; ++i)
    gens.push_back(ExponentVector::unit(ring.nvars, i));
  return MonomialIdeal::from_generators(ring, std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  if (I.is_zero() || J.is_zero()) return zero_ideal(I.ring());
  std::vector<ExponentVector> gens;
  gens.reserve(I.num_generators() * J.num_generators());
  for (const auto& g : I.generators())
    for (const auto& h : J.generators()) gens.push_back(g + h);
  return MonomialIdeal::from_generators(I.ring(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& I, unsigned k) {
  MonomialIdeal r = unit_ideal(I.ring());
  MonomialIdeal base = I;
  while (k) {
    if (k & 1) r = product(r, base);
    k >>= 1;
    if (k) base = product(base, base);
  }
  return r;
}

MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  std::vector<ExponentVector> gens = I.generators();
  gens.insert(gens.end(), J.generators().begin(), J.generators().end());
  return MonomialIdeal::from_generators(I.ring(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  if (I.is_zero() || J.is_zero()) return zero_ideal(I.ring());
  std::vector<ExponentVector> gens;
  gens.reserve(I.num_generators() * J.num_generators());
  for (const auto& g : I.generators())
    for (const auto& h : J.generators()) gens.push_back(g.lcm(h));
  return MonomialIdeal::from_generators(I.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  if (J.is_zero()) throw std::invalid_argument("colon by the zero ideal is undefined");
  bool first = true;
  MonomialIdeal result;
  for (const auto& t : J.generators()) {
    std::vector<ExponentVector> gens;
    gens.reserve(I.num_generators());
    for (const auto& g : I.generators()) gens.push_back(g.colon_by(t));
    MonomialIdeal c = MonomialIdeal::from_generators(I.ring(), std::move(gens));
    result = first ? c : intersect(result, c);
    first = false;
  }
  return result;
}

MonomialIdeal saturate(const MonomialIdeal& I, const MonomialIdeal& J) {
  check_same_ring(I, J);
  if (J.is_zero()) throw std::invalid_argument("saturation by the zero ideal is undefined");
  MonomialIdeal cur = I;
  for (;;) {
    MonomialIdeal next = colon(cur, J);
    if (next.generators() == cur.generators()) return cur;
    cur = std::move(next);
  }
}

MonomialIdeal radical(const MonomialIdeal& I) {
  std::vector<ExponentVector> gens;
  gens.reserve(I.num_generators());
  for (const auto& g : I.generators()) gens.push_back(g.support());
  return MonomialIdeal::from_generators(I.ring(), std::move(gens));
}

namespace {
constexpr int kMaxSearchVars = 24;  // exhaustive subset searches below
}

int krull_dim(const MonomialIdeal& I) {
  const int n = I.ring().nvars;
  if (n > kMaxSearchVars)
    throw std::invalid_argument("krull_dim: too many variables for subset search");
  if (I.is_zero()) return n;
  std::vector<std::uint64_t> sup;
  sup.reserve(I.num_generators());
  for (const auto& g : I.generators()) sup.push_back(g.support_mask());
  int best = -1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    bool ok = true;
    for (std::uint64_t s : sup)
      if ((s & ~mask) == 0) { ok = false; break; }
    if (ok) best = std::max(best, static_cast<int>(__builtin_popcountll(mask)));
  }
  return best;
}

int height(const MonomialIdeal& I) {
  const int n = I.ring().nvars;
  if (n > kMaxSearchVars)
    throw std::invalid_argument("height: too many variables for subset search");
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("height of the zero or unit ideal is undefined");
  std::vector<std::uint64_t> sup;
  for (const auto& g : I.generators()) sup.push_back(g.support_mask());
  int best = n + 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    bool covers = true;
    for (std::uint64_t s : sup)
      if ((s & mask) == 0) { covers = false; break; }
    if (covers) best = std::min(best, static_cast<int>(__builtin_popcountll(mask)));
  }
  return best;
}

bool is_primary_to_max_ideal(const MonomialIdeal& I) {
  const int n = I.ring().nvars;
  if (I.is_zero() || I.is_unit()) return false;
  std::vector<bool> pure(n, false);
  for (const auto& g : I.generators()) {
    int nz = -1;
    bool single = true;
    for (int i = 0; i < n; ++i) {
      if (!g[i]) continue;
      if (nz >= 0) { single = false; break; }
      nz = i;
    }
    if (single && nz >= 0) pure[nz] = true;
  }
  for (bool p : pure)
    if (!p) return false;
  return true;
}

Exp order(const MonomialIdeal& I) {
  if (I.is_zero() || I.is_unit())
    throw std::invalid_argument("order of the zero or unit ideal is undefined");
  return I.min_generator_degree();
}

std::vector<Exp> pure_power_exponents(const MonomialIdeal& I) {
  const int n = I.ring().nvars;
  std::vector<Exp> pp(n, 0);
  for (const auto& g : I.generators()) {
    int nz = -1;
    bool single = true;
    for (int i = 0; i < n; ++i) {
      if (!g[i]) continue;
      if (nz >= 0) { single = false; break; }
      nz = i;
    }
    if (single && nz >= 0 && (pp[nz] == 0 || g[nz] < pp[nz])) pp[nz] = g[nz];
  }
  for (Exp p : pp)
    if (p == 0) throw std::invalid_argument("ideal is not primary to the variable ideal");
  return pp;
}

Exp primary_containment_bound(const MonomialIdeal& I) {
  Exp b = 1;
  for (Exp p : pure_power_exponents(I)) b = checked_add(b, p - 1);
  return b;
}

// ---- text forms ----

namespace {

void skip_ws(const std::string& s, std::size_t& i) {
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
}

Exp parse_number(const std::string& s, std::size_t& i) {
  skip_ws(s, i);
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw std::invalid_argument("expected a number in '" + s + "'");
  Exp v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    Exp digit = s[i] - '0';
    if (v > (std::numeric_limits<Exp>::max() - digit) / 10)
      throw std::overflow_error("exponent literal too large");
    v = v * 10 + digit;
    ++i;
  }
  return v;
}

}  // namespace

ExponentVector parse_monomial(const std::string& text, int nvars) {
  ExponentVector m(nvars);
  std::size_t i = 0;
  skip_ws(text, i);
  if (i < text.size() && text[i] == '1') {
    ++i;
    skip_ws(text, i);
    if (i == text.size()) return m;
    throw std::invalid_argument("unexpected input after '1' in monomial '" + text + "'");
  }
  for (;;) {
    skip_ws(text, i);
    if (i >= text.size() || text[i] != 'x')
      throw std::invalid_argument("expected variable in monomial '" + text + "'");
    ++i;
    Exp idx = parse_number(text, i);
    if (idx < 1 || idx > static_cast<Exp>(nvars))
      throw std::invalid_argument("variable index out of range in '" + text + "'");
    Exp e = 1;
    skip_ws(text, i);
    if (i < text.size() && text[i] == '^') {
      ++i;
      e = parse_number(text, i);
    }
    m[static_cast<std::size_t>(idx - 1)] =
        checked_add(m[static_cast<std::size_t>(idx - 1)], e);
    skip_ws(text, i);
    if (i >= text.size()) break;
    if (text[i] != '*')
      throw std::invalid_argument("expected '*' in monomial '" + text + "'");
    ++i;
  }
  return m;
}

MonomialIdeal parse_ideal(const std::string& text, const RingContext& ring) {
  std::size_t i = 0;
  skip_ws(text, i);
  const std::string head = "ideal";
  if (text.compare(i, head.size(), head) != 0)
    throw std::invalid_argument("ideal text must start with 'ideal(': " + text);
  i += head.size();
  skip_ws(text, i);
  if (i >= text.size() || text[i] != '(')
    throw std::invalid_argument("expected '(' in ideal text: " + text);
  ++i;
  std::size_t close = text.rfind(')');
  if (close == std::string::npos || close < i)
    throw std::invalid_argument("expected ')' in ideal text: " + text);
  std::string body = text.substr(i, close - i);
  std::vector<ExponentVector> gens;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
    std::size_t j = 0;
    skip_ws(item, j);
    if (j < item.size()) {
      if (item[j] == '0') {
        // "0" contributes nothing; "ideal(0)" is the zero ideal
      } else {
        gens.push_back(parse_monomial(item, ring.nvars));
      }
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return MonomialIdeal::from_generators(ring, std::move(gens));
}

}  // namespace mm
