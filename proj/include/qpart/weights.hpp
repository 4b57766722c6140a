// Partition weight functions and the enumeration route: weighted sums over
// a partition family at fixed norm, and the generating series they induce.
// Every weight maps the empty partition to 1, so every weighted series has
// constant term 1.

#pragma once

#include <cassert>
#include <functional>
#include <string>
#include <vector>

#include "qpart/bigint.hpp"
#include "qpart/partitions.hpp"
#include "qpart/qseries.hpp"

namespace qpart {

// lambda_nu * prod (lambda_i - lambda_{i+1} - 1); raw product, may vanish or
// go negative outside gap-2 families.
inline BigInt weight_omega(const Partition& p) {
  if (p.empty()) return 1;
  BigInt w = p.smallest();
  for (int i = 0; i + 1 < p.size(); ++i) w *= p[i] - p[i + 1] - 1;
  return w;
}

namespace detail {
inline int even01(int v) { return v % 2 == 0 ? 1 : 0; }
}  // namespace detail

// Half of each parity-adjusted gap, times (lambda_nu + 1 if odd)/2; defined
// as 0 as soon as an adjusted gap is <= 0.  The adjusted gaps are always
// even, so the halves are exact.
inline BigInt weight_omega1(const Partition& p) {
  if (p.empty()) return 1;
  BigInt w = (p.smallest() + p.smallest() % 2) / 2;
  for (int i = 0; i + 1 < p.size(); ++i) {
    const int num = p[i] - p[i + 1] - detail::even01(p[i]) - detail::even01(p[i + 1]);
    if (num <= 0) return 0;
    assert(num % 2 == 0);
    w *= num / 2;
  }
  return w;
}

// Same parity-adjusted gaps extended by lambda_{nu+1} = 0 (an even entry),
// all factors halved; 0 as soon as a factor is <= 0.
inline BigInt weight_omega2(const Partition& p) {
  BigInt w = 1;
  for (int i = 0; i < p.size(); ++i) {
    const int next = (i + 1 < p.size()) ? p[i + 1] : 0;
    const int num = p[i] - next - detail::even01(p[i]) - detail::even01(next);
    if (num <= 0) return 0;
    assert(num % 2 == 0);
    w *= num / 2;
  }
  return w;
}

// prod (2 lambda_i - 2 lambda_{i+1} - 1) closed with lambda_{nu+1} = -1/2,
// i.e. a final factor of 2 lambda_nu.  Raw product.
inline BigInt weight_wt1_tilde(const Partition& p) {
  if (p.empty()) return 1;
  BigInt w = 2 * p.smallest();
  for (int i = 0; i + 1 < p.size(); ++i) w *= 2 * p[i] - 2 * p[i + 1] - 1;
  return w;
}

// Same doubled gaps closed with lambda_{nu+1} = 0 (final factor
// 2 lambda_nu - 1).  Raw product.
inline BigInt weight_wt2_tilde(const Partition& p) {
  BigInt w = 1;
  for (int i = 0; i < p.size(); ++i) {
    const int next = (i + 1 < p.size()) ? p[i + 1] : 0;
    w *= 2 * p[i] - 2 * next - 1;
  }
  return w;
}

// 2^(number of distinct part sizes).
inline BigInt weight_w1_prime(const Partition& p) {
  return pow2(static_cast<unsigned long>(num_distinct_parts(p)));
}

// 2^(distinct even sizes) * (1 + sum over parts v = 3 mod 4 of
// 2^(distinct odd sizes >= v)).
inline BigInt weight_w2_prime(const Partition& p) {
  BigInt s = 1;
  for (int v = 3; v <= p.largest(); v += 4)
    if (p.contains(v))
      s += pow2(static_cast<unsigned long>(num_distinct_odd_ge(p, v)));
  return pow2(static_cast<unsigned long>(num_distinct_even_parts(p))) * s;
}

// Frequency-pattern weight: a base term for partitions where 1 appears at
// most once, plus one term per pivot j whose frequency is >= 2, each a
// product of powers of 2 read off the frequencies.
inline BigInt weight_w2_star(const Partition& p) {
  const auto freq = p.frequencies();
  auto f = [&](int v) {
    auto it = freq.find(v);
    return it == freq.end() ? 0 : it->second;
  };
  const int L = p.largest();
  BigInt total = 0;
  if (f(1) < 2) {
    BigInt base = 1;
    for (int n = 2; n <= L; ++n)
      if (f(n) >= 1) base *= 2;
    total += base;
  }
  for (int j = 1; j <= L; ++j) {
    if (f(j) < 2 || f(2 * j + 1) > 1) continue;
    BigInt t = (f(j) >= 3) ? 2 : 1;
    for (int i = 1; i < j && t != 0; ++i) {
      if (f(i) < 3)
        t = 0;
      else if (f(i) >= 4)
        t *= 2;
    }
    if (t == 0) continue;
    for (int n = j + 1; n <= L; ++n)
      if (n != 2 * j + 1 && f(n) >= 1) t *= 2;
    total += t;
  }
  return total;
}

// 2^(distinct even sizes above the smallest missing positive odd integer).
inline BigInt weight_two_tau(const Partition& p) {
  return pow2(static_cast<unsigned long>(tau(p)));
}

inline BigInt weight_unit(const Partition&) { return 1; }

enum class WeightId {
  Omega, Omega1, Omega2, Wt1Tilde, Wt2Tilde,
  W1Prime, W2Prime, W2Star, TwoTau, Unit
};

class Weight {
 public:
  static const std::vector<std::string>& names() {
    static const std::vector<std::string> n = {
        "omega",   "omega1",   "omega2", "wt1_tilde", "wt2_tilde",
        "w1_prime", "w2_prime", "w2_star", "two_tau",  "unit"};
    return n;
  }

  static Weight by_name(const std::string& name) {
    const auto& ns = names();
    for (size_t i = 0; i < ns.size(); ++i)
      if (ns[i] == name) return Weight(static_cast<WeightId>(i));
    throw std::invalid_argument("Weight: unknown weight '" + name + "'");
  }

  explicit Weight(WeightId id) : id_(id) {}

  WeightId id() const { return id_; }
  std::string name() const { return names()[static_cast<size_t>(id_)]; }

  BigInt operator()(const Partition& p) const {
    switch (id_) {
      case WeightId::Omega: return weight_omega(p);
      case WeightId::Omega1: return weight_omega1(p);
      case WeightId::Omega2: return weight_omega2(p);
      case WeightId::Wt1Tilde: return weight_wt1_tilde(p);
      case WeightId::Wt2Tilde: return weight_wt2_tilde(p);
      case WeightId::W1Prime: return weight_w1_prime(p);
      case WeightId::W2Prime: return weight_w2_prime(p);
      case WeightId::W2Star: return weight_w2_star(p);
      case WeightId::TwoTau: return weight_two_tau(p);
      case WeightId::Unit: return weight_unit(p);
    }
    return 0;
  }

 private:
  WeightId id_;
};

using PartitionPredicate = std::function<bool(const Partition&)>;
using PartitionWeight = std::function<BigInt(const Partition&)>;

// Sum of weights over the members of a family at fixed norm n.
inline BigInt weighted_sum(const PartitionPredicate& pred,
                           const PartitionWeight& weight, int n) {
  BigInt total = 0;
  for_each_partition(n, [&](const Partition& p) {
    if (pred(p)) total += weight(p);
  });
  return total;
}

inline BigInt weighted_sum(const SetPredicate& set, const Weight& weight, int n) {
  return weighted_sum([&](const Partition& p) { return set.contains(p); },
                      [&](const Partition& p) { return weight(p); }, n);
}

// The enumeration route: coefficient of q^n is the weighted count at norm n.
inline QSeries weighted_series(const PartitionPredicate& pred,
                               const PartitionWeight& weight, int order) {
  QSeries r(order);
  for (int n = 0; n <= order; ++n) r.at(n) = weighted_sum(pred, weight, n);
  return r;
}

inline QSeries weighted_series(const SetPredicate& set, const Weight& weight,
                               int order) {
  return weighted_series([&](const Partition& p) { return set.contains(p); },
                         [&](const Partition& p) { return weight(p); }, order);
}

}  // namespace qpart
