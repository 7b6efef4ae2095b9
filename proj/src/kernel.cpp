#include "mixedmult/kernel.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>

#include "mixedmult/numeric.hpp"

namespace mm::kernel {

#ifdef MIXEDMULT_HAVE_AVX2
const Variant* avx2_variant_impl();
#endif

const Variant* avx2_variant() {
#ifdef MIXEDMULT_HAVE_AVX2
  return avx2_variant_impl();
#else
  return nullptr;
#endif
}

namespace {

std::atomic<const Variant*> g_active{nullptr};

const Variant* pick_default() {
  if (const char* env = std::getenv("MIXEDMULT_KERNEL")) {
    std::string name = env;
    if (name == "scalar") return &scalar_variant();
    if (name == "avx2" && avx2_variant()) return avx2_variant();
  }
  if (const Variant* v = avx2_variant()) return v;
  return &scalar_variant();
}

}  // namespace

const Variant& active_variant() {
  const Variant* v = g_active.load(std::memory_order_relaxed);
  if (!v) {
    v = pick_default();
    g_active.store(v, std::memory_order_relaxed);
  }
  return *v;
}

bool select_variant(const std::string& name) {
  if (name == "auto") {
    g_active.store(pick_default(), std::memory_order_relaxed);
    return true;
  }
  if (name == "scalar") {
    g_active.store(&scalar_variant(), std::memory_order_relaxed);
    return true;
  }
  if (name == "avx2") {
    if (const Variant* v = avx2_variant()) {
      g_active.store(v, std::memory_order_relaxed);
      return true;
    }
    return false;
  }
  return false;
}

PackedIdeal PackedIdeal::pack(const MonomialIdeal& I) {
  PackedIdeal P;
  P.nvars = I.ring().nvars;
  P.ngens = I.num_generators();
  P.padded = (P.ngens + 15) / 16 * 16;
  P.cols.assign(static_cast<std::size_t>(P.nvars) * P.padded, kNeverDivides);
  for (std::size_t g = 0; g < P.ngens; ++g) {
    const ExponentVector& e = I.generators()[g];
    for (int v = 0; v < P.nvars; ++v) {
      Exp x = e[v];
      P.cols[static_cast<std::size_t>(v) * P.padded + g] =
          x >= kNeverDivides ? kNeverDivides : static_cast<std::uint16_t>(x);
    }
  }
  return P;
}

namespace {

struct BlockLayout {
  std::vector<int> block_of;    // var -> block
  std::vector<int> last_var;    // block -> last variable index
  std::vector<std::vector<int>> tail_count;  // tail_count[v][b] = #vars >= v in block b
};

BlockLayout layout(const std::vector<int>& block_lens, int nvars) {
  BlockLayout L;
  L.block_of.resize(nvars);
  int v = 0;
  for (std::size_t b = 0; b < block_lens.size(); ++b) {
    if (block_lens[b] <= 0) throw std::invalid_argument("empty variable block");
    for (int i = 0; i < block_lens[b]; ++i) L.block_of[v++] = static_cast<int>(b);
    L.last_var.push_back(v - 1);
  }
  if (v != nvars) throw std::invalid_argument("block lengths do not cover ring");
  const int s = static_cast<int>(block_lens.size());
  L.tail_count.assign(nvars + 1, std::vector<int>(s, 0));
  for (int w = nvars - 1; w >= 0; --w) {
    L.tail_count[w] = L.tail_count[w + 1];
    L.tail_count[w][L.block_of[w]]++;
  }
  return L;
}

void check_budgets(const std::vector<Exp>& degs) {
  for (Exp d : degs)
    if (d >= kNeverDivides)
      throw std::invalid_argument("enumeration budget exceeds kernel range");
}

std::uint64_t free_block_count(const std::vector<int>& tail,
                               const std::vector<Exp>& rem) {
  std::uint64_t total = 1;
  for (std::size_t b = 0; b < rem.size(); ++b) {
    if (tail[b] == 0) {
      if (rem[b] != 0) return 0;
      continue;
    }
    total *= binomial_u64(rem[b] + tail[b] - 1, tail[b] - 1);
  }
  return total;
}

class Enumerator {
 public:
  Enumerator(const MonomialIdeal& I, const std::vector<int>& block_lens,
             const std::vector<Exp>& degs)
      : layout_(layout(block_lens, I.ring().nvars)),
        nvars_(I.ring().nvars),
        s_(static_cast<int>(block_lens.size())),
        variant_(active_variant()) {
    check_budgets(degs);
    const auto& gens = I.generators();
    // keep only generators whose block degrees fit the budgets at all
    for (const auto& g : gens) {
      std::vector<Exp> bd(s_, 0);
      bool feasible = true;
      for (int v = 0; v < nvars_ && feasible; ++v) {
        bd[layout_.block_of[v]] = checked_add(bd[layout_.block_of[v]], g[v]);
        if (bd[layout_.block_of[v]] > degs[layout_.block_of[v]]) feasible = false;
      }
      if (feasible) gens_.push_back(g);
    }
    ngens_ = gens_.size();
    // suffix block degrees per variable position
    suf_.assign(static_cast<std::size_t>(nvars_ + 1) * ngens_ * s_, 0);
    for (int v = nvars_ - 1; v >= 0; --v) {
      for (std::size_t g = 0; g < ngens_; ++g) {
        for (int b = 0; b < s_; ++b)
          suf(v, g, b) = suf(v + 1, g, b);
        suf(v, g, layout_.block_of[v]) =
            checked_add(suf(v, g, layout_.block_of[v]), gens_[g][v]);
      }
    }
    alive_.resize(nvars_ + 1);
    lo_.resize(ngens_);
    hi_.resize(ngens_);
  }

  std::uint64_t run(const std::vector<Exp>& degs) {
    if (ngens_ == 0) return 0;
    rem_ = degs;
    auto& a0 = alive_[0];
    a0.clear();
    for (std::size_t g = 0; g < ngens_; ++g) {
      bool ok = true;
      for (int b = 0; b < s_; ++b)
        if (suf(0, g, b) > rem_[b]) { ok = false; break; }
      if (ok) a0.push_back(static_cast<std::uint32_t>(g));
    }
    return rec(0);
  }

 private:
  Exp& suf(int v, std::size_t g, int b) {
    return suf_[(static_cast<std::size_t>(v) * ngens_ + g) * s_ + b];
  }

  std::uint64_t rec(int v) {
    const auto& alive = alive_[v];
    if (alive.empty()) return 0;
    // a generator with no exponents left is fully dominated: whole subtree
    // lies in the ideal
    for (std::uint32_t g : alive) {
      bool done = true;
      for (int b = 0; b < s_; ++b)
        if (suf(v, g, b) != 0) { done = false; break; }
      if (done) return free_block_count(layout_.tail_count[v], rem_);
    }
    if (v == nvars_ - 1) return 1;  // forced value; alive implies divisible

    const int b = layout_.block_of[v];
    if (v == nvars_ - 2 && layout_.block_of[v + 1] == b) {
      std::size_t k = 0;
      for (std::uint32_t g : alive) {
        lo_[k] = static_cast<std::uint16_t>(gens_[g][v]);
        hi_[k] = static_cast<std::uint16_t>(gens_[g][v + 1]);
        ++k;
      }
      return variant_.pair_slice(lo_.data(), hi_.data(), k,
                                 static_cast<std::uint32_t>(rem_[b]));
    }

    if (v == layout_.last_var[b]) {
      // forced: the block budget lands on this variable; every alive
      // generator stays alive
      const Exp saved = rem_[b];
      rem_[b] = 0;
      alive_[v + 1] = alive;
      std::uint64_t total = rec(v + 1);
      rem_[b] = saved;
      return total;
    }

    std::uint64_t total = 0;
    const Exp budget = rem_[b];
    for (Exp a = 0; a <= budget; ++a) {
      auto& next = alive_[v + 1];
      next.clear();
      const Exp left = budget - a;
      for (std::uint32_t g : alive) {
        if (gens_[g][v] > a) continue;
        if (suf(v + 1, g, b) > left) continue;
        next.push_back(g);
      }
      rem_[b] = left;
      total += rec(v + 1);
    }
    rem_[b] = budget;
    return total;
  }

  BlockLayout layout_;
  int nvars_;
  int s_;
  const Variant& variant_;
  std::vector<ExponentVector> gens_;
  std::size_t ngens_ = 0;
  std::vector<Exp> suf_;
  std::vector<Exp> rem_;
  std::vector<std::vector<std::uint32_t>> alive_;
  std::vector<std::uint16_t> lo_, hi_;
};

}  // namespace

std::uint64_t count_monomials(const std::vector<int>& block_lens,
                              const std::vector<Exp>& degs) {
  if (block_lens.size() != degs.size())
    throw std::invalid_argument("block/degree arity mismatch");
  std::uint64_t total = 1;
  for (std::size_t b = 0; b < degs.size(); ++b)
    total *= binomial_u64(degs[b] + block_lens[b] - 1, block_lens[b] - 1);
  return total;
}

std::uint64_t count_members(const MonomialIdeal& I,
                            const std::vector<int>& block_lens,
                            const std::vector<Exp>& degs) {
  if (block_lens.size() != degs.size())
    throw std::invalid_argument("block/degree arity mismatch");
  if (I.is_zero()) return 0;
  Enumerator e(I, block_lens, degs);
  return e.run(degs);
}

std::uint64_t count_members_reference(const MonomialIdeal& I,
                                      const std::vector<int>& block_lens,
                                      const std::vector<Exp>& degs) {
  if (I.is_zero()) return 0;
  check_budgets(degs);
  const int nvars = I.ring().nvars;
  const BlockLayout L = layout(block_lens, nvars);
  const PackedIdeal P = PackedIdeal::pack(I);
  const Variant& variant = active_variant();
  std::vector<std::uint16_t> cand(nvars, 0);
  std::uint64_t total = 0;

  // odometer over per-block compositions
  auto rec = [&](auto&& self, int v, std::vector<Exp>& rem) -> void {
    if (v == nvars) {
      total += variant.divides_any(P.cols.data(), P.padded, P.nvars, P.ngens,
                                   cand.data())
                   ? 1
                   : 0;
      return;
    }
    const int b = L.block_of[v];
    if (v == L.last_var[b]) {
      cand[v] = static_cast<std::uint16_t>(rem[b]);
      const Exp saved = rem[b];
      rem[b] = 0;
      self(self, v + 1, rem);
      rem[b] = saved;
      return;
    }
    for (Exp a = 0; a <= rem[b]; ++a) {
      cand[v] = static_cast<std::uint16_t>(a);
      rem[b] -= a;
      self(self, v + 1, rem);
      rem[b] += a;
    }
  };
  std::vector<Exp> rem = degs;
  rec(rec, 0, rem);
  return total;
}

std::uint64_t count_members_total(const MonomialIdeal& I, Exp t) {
  return count_members(I, {I.ring().nvars}, {t});
}

}  // namespace mm::kernel
