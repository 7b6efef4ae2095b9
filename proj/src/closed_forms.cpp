#include "mixedmult/closed_forms.hpp"

#include <algorithm>
#include <stdexcept>

namespace mm::closed_forms {

namespace {

void require_sorted(const std::vector<unsigned>& a) {
  if (!std::is_sorted(a.begin(), a.end()))
    throw std::invalid_argument("degrees must be non-decreasing");
}

// sum over compositions j_1 + ... + j_q = target of
// d_1^{j_1+1} ... d_{q-1}^{j_{q-1}+1} d_q^{j_q}
BigInt weighted_composition_sum(const std::vector<unsigned>& d, int q, int target) {
  BigInt total = 0;
  std::vector<int> j(static_cast<std::size_t>(q), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == q - 1) {
      j[static_cast<std::size_t>(i)] = left;
      BigInt term = 1;
      for (int k = 0; k < q; ++k) {
        unsigned expn = static_cast<unsigned>(j[static_cast<std::size_t>(k)]);
        if (k < q - 1) expn += 1;
        term *= ipow(BigInt(d[static_cast<std::size_t>(k)]), expn);
      }
      total += term;
      return;
    }
    for (int a = 0; a <= left; ++a) {
      j[static_cast<std::size_t>(i)] = a;
      self(self, i + 1, left - a);
    }
  };
  if (target < 0) return 0;
  rec(rec, 0, target);
  return total;
}

}  // namespace

BigInt htu_rees(const std::vector<BigInt>& e_quotients, int dim_ambient,
                int dim_first_quotient, const BigInt& e_ambient) {
  if (dim_first_quotient > dim_ambient)
    throw std::invalid_argument("quotient dimension exceeds the ambient dimension");
  if (dim_first_quotient <= dim_ambient - 2) return e_ambient;
  BigInt total = 0;
  for (const BigInt& e : e_quotients) total += e;
  if (dim_first_quotient == dim_ambient - 1) total += e_ambient;
  return total;
}

std::vector<BigInt> hoang_mixed(const std::vector<BigInt>& e_quotients, int s,
                                int length) {
  if (static_cast<int>(e_quotients.size()) < s)
    throw std::invalid_argument("need a quotient multiplicity for each index below s");
  std::vector<BigInt> out;
  for (int i = 0; i < length; ++i)
    out.push_back(i < s ? e_quotients[static_cast<std::size_t>(i)] : BigInt(0));
  return out;
}

BigInt filter_regular_rees(const std::vector<unsigned>& a, const BigInt& e_ambient) {
  require_sorted(a);
  const int n = static_cast<int>(a.size());
  BigInt sum = 1;
  BigInt partial = 1;
  for (int i = 1; i <= n - 1; ++i) {
    partial *= a[static_cast<std::size_t>(i) - 1];
    sum += partial;
  }
  return sum * e_ambient;
}

BigInt filter_regular_extended(const std::vector<unsigned>& a,
                               const BigInt& e_ambient) {
  require_sorted(a);
  const int n = static_cast<int>(a.size());
  int l = 0;
  for (int i = 1; i <= n; ++i)
    if (a[static_cast<std::size_t>(i) - 1] == 1) l = i;
  BigInt sum = 1;
  for (int i = l; i <= n - 1; ++i) {
    BigInt partial = 1;
    for (int k = 1; k <= i; ++k) partial *= a[static_cast<std::size_t>(k) - 1];
    sum += partial;
  }
  return sum * e_ambient;
}

std::vector<BigInt> regular_sequence_rees_mixed(const std::vector<unsigned>& d,
                                                const BigInt& e_ambient,
                                                int nvars) {
  require_sorted(d);
  const int r = static_cast<int>(d.size());
  const int s = nvars - 1;
  std::vector<BigInt> out;
  for (int i = 0; i <= s; ++i) {
    BigInt total = 0;
    const int qmax = std::min(r, s - i + 1);
    for (int q = 1; q <= qmax; ++q) {
      const int target = s - q - i + 1;
      BigInt term = e_ambient * weighted_composition_sum(d, q, target);
      if ((target % 2 + 2) % 2 == 1) term = -term;
      total += term;
    }
    out.push_back(total);
  }
  return out;
}

std::vector<BigInt> minors_mixed(int r) {
  if (r < 2) throw std::invalid_argument("minor format needs r >= 2");
  const int s = (r - 1) * r - 1;
  std::vector<BigInt> out;
  for (int i = 0; i <= s; ++i) {
    BigInt total = 0;
    const int qmax = std::min(r, s - i + 1);
    for (int q = 1; q <= qmax; ++q) {
      const int target = s - q - i + 1;
      if (target < 0) continue;
      BigInt term = binomial(BigInt(r - 1), static_cast<unsigned>(q - 1)) *
                    binomial(BigInt(s - i), static_cast<unsigned>(q - 1)) *
                    ipow(BigInt(r), static_cast<unsigned>(target));
      if ((target % 2 + 2) % 2 == 1) term = -term;
      total += term;
    }
    out.push_back(total);
  }
  return out;
}

BigRat katz_verma_rhs(const BigInt& e_front, const std::vector<BigInt>& e_list,
                      unsigned d) {
  if (e_list.size() != d)
    throw std::invalid_argument("need exactly d mixed multiplicities");
  BigInt numer = e_front;
  for (unsigned j = 0; j < d; ++j)
    numer += ipow(BigInt(2), j) * e_list[j];
  return BigRat(numer, ipow(BigInt(2), d));
}

std::vector<BigInt> bigraded_free_mixed(int m, int n,
                                        const std::vector<unsigned>& ds) {
  if (m < 1 || n < 1) throw std::invalid_argument("need m, n >= 1");
  if (static_cast<int>(ds.size()) != n)
    throw std::invalid_argument("need one degree per second-block variable");
  std::vector<BigInt> out;
  for (int i = 0; i <= m + n - 2; ++i) {
    if (i >= m) {
      out.push_back(0);
      continue;
    }
    // sum over j_1 + ... + j_n = m - 1 - i of prod d_k^{j_k}; 0^0 = 1
    BigInt total = 0;
    std::vector<int> j(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto&& self, int k, int left) -> void {
      if (k == n - 1) {
        j[static_cast<std::size_t>(k)] = left;
        BigInt term = 1;
        for (int t = 0; t < n; ++t)
          term *= ipow(BigInt(ds[static_cast<std::size_t>(t)]),
                       static_cast<unsigned>(j[static_cast<std::size_t>(t)]));
        total += term;
        return;
      }
      for (int a = 0; a <= left; ++a) {
        j[static_cast<std::size_t>(k)] = a;
        self(self, k + 1, left - a);
      }
    };
    rec(rec, 0, m - 1 - i);
    if ((m - i - 1) % 2 == 1) total = -total;
    out.push_back(total);
  }
  return out;
}

}  // namespace mm::closed_forms
