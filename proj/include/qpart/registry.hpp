// Built-in identity registry.
//
// Each entry states one verified identity as two or more independently
// constructed sides: q-series closures built from Pochhammer products and
// quadratic-exponent sums, and enumeration sides built from weighted
// partition counts.  The two kinds of side never share evaluation code, so
// a bug in one representation cannot silently confirm itself.
//
// Naming: series identities carry eq_/thm_ style keys; the *_i1/_i2 pairs
// are the two instances of a one-parameter family.  Default orders keep
// desk runtimes small: 30 where a side enumerates partitions, 80 for pure
// series work, 25 for the two-parameter specialization family.

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qpart/bigint.hpp"
#include "qpart/identities.hpp"
#include "qpart/partitions.hpp"
#include "qpart/qseries.hpp"
#include "qpart/weights.hpp"

namespace qpart {
namespace regdetail {

// q^e truncated to `order`; exponents beyond the window vanish.
inline QSeries qpow(long e, int order) {
  if (e > order) return QSeries(order);
  return monomial(static_cast<int>(e), order);
}

inline QSeries pfin(int sign, long offset, long step, long length, int order) {
  return pochhammer(PochSpec{sign, offset, step, length}, order);
}

inline QSeries pinf(int sign, long offset, long step, int order) {
  return pochhammer(PochSpec{sign, offset, step, std::nullopt}, order);
}

inline QSeries inv(const QSeries& s) { return reciprocal(s); }

// (-q;q^2)_inf / (q^2;q^2)_inf
inline QSeries half_prefactor(int order) {
  return pinf(-1, 1, 2, order) * inv(pinf(1, 2, 2, order));
}

// (-q;q)_inf / (q;q)_inf
inline QSeries over_prefactor(int order) {
  return pinf(-1, 1, 1, order) * inv(pinf(1, 1, 1, order));
}

// sum_{n>=0} (-1)^n q^(n^2+n) / (-q;q^2)_(n+1)
inline QSeries alt_sum_half(int order) {
  return sum_of_terms(
      [order](long n) {
        QSeries t = qpow(n * n + n, order) * inv(pfin(-1, 1, 2, n + 1, order));
        return n % 2 ? negate(t) : t;
      },
      order);
}

// sum_{j>=0} q^(3j^2+2j) (1 - q^(2j+1))
inline QSeries false_theta3(int order) {
  return sum_of_terms(
      [order](long j) {
        return qpow(3 * j * j + 2 * j, order) -
               qpow(3 * j * j + 4 * j + 1, order);
      },
      order);
}

// sum_{j>=0} q^((3j^2+j)/2) (1 - q^(2j+1))
inline QSeries false_theta32(int order) {
  return sum_of_terms(
      [order](long j) {
        const long e = (3 * j * j + j) / 2;
        return qpow(e, order) - qpow(e + 2 * j + 1, order);
      },
      order);
}

// 1 + sum_{n>=1} (-1)^n q^(2n-1) / (-q;q^2)_n
inline QSeries fine1(int order) {
  return one(order) + sum_of_terms(
                          [order](long n) {
                            QSeries t = qpow(2 * n - 1, order) *
                                        inv(pfin(-1, 1, 2, n, order));
                            return n % 2 ? negate(t) : t;
                          },
                          order, /*start=*/1);
}

inline BigInt ipow(long base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), BigInt(base).get_mpz_t(), e);
  return r;
}

// Partitions into parts congruent to 2i-1, 4, or 9-2i modulo 8.
inline PartitionPredicate mod8_parts(int i) {
  const int lo = 2 * i - 1;
  const int hi = 9 - 2 * i;
  return [lo, hi](const Partition& p) {
    for (int k = 0; k < p.size(); ++k) {
      const int r = p[k] % 8;
      if (r != lo && r != 4 && r != hi) return false;
    }
    return true;
  };
}

inline IdentitySpec make_spec(std::string name, std::string notes, int order,
                              std::vector<SideExpr> sides) {
  IdentitySpec s;
  s.name = std::move(name);
  s.notes = std::move(notes);
  s.default_order = order;
  s.sides = std::move(sides);
  return s;
}

}  // namespace regdetail

inline std::vector<IdentitySpec> make_builtin_registry() {
  using namespace regdetail;
  std::vector<IdentitySpec> reg;

  reg.push_back(make_spec(
      "thm_1_2", "gap-2 partitions with gap weights count all partitions", 30,
      {enum_side("sum over RR of omega", SetPredicate::RR(),
                 Weight::by_name("omega")),
       enum_side("sum over U of 1", SetPredicate::U(), Weight::by_name("unit")),
       series_side("1/(q;q)_inf",
                   [](int m) { return inv(pinf(1, 1, 1, m)); })}));

  reg.push_back(make_spec(
      "eq_1_5", "omega vanishes on gap-1 pairs, so D replaces RR", 30,
      {enum_side("sum over RR of omega", SetPredicate::RR(),
                 Weight::by_name("omega")),
       enum_side("sum over D of omega", SetPredicate::D(),
                 Weight::by_name("omega"))}));

  reg.push_back(make_spec(
      "slater_gg_i1", "Goellnitz-Gordon series/product, first case", 80,
      {series_side("sum q^(n^2) (-q;q^2)_n / (q^2;q^2)_n",
                   [](int m) {
                     return sum_of_terms(
                         [m](long n) {
                           return qpow(n * n, m) * pfin(-1, 1, 2, n, m) *
                                  inv(pfin(1, 2, 2, n, m));
                         },
                         m);
                   }),
       series_side("1/((q;q^8)(q^4;q^8)(q^7;q^8))_inf", [](int m) {
         return inv(pinf(1, 1, 8, m) * pinf(1, 4, 8, m) * pinf(1, 7, 8, m));
       })}));

  reg.push_back(make_spec(
      "slater_gg_i2", "Goellnitz-Gordon series/product, second case", 80,
      {series_side("sum q^(n^2+2n) (-q;q^2)_n / (q^2;q^2)_n",
                   [](int m) {
                     return sum_of_terms(
                         [m](long n) {
                           return qpow(n * n + 2 * n, m) *
                                  pfin(-1, 1, 2, n, m) *
                                  inv(pfin(1, 2, 2, n, m));
                         },
                         m);
                   }),
       series_side("1/((q^3;q^8)(q^4;q^8)(q^5;q^8))_inf", [](int m) {
         return inv(pinf(1, 3, 8, m) * pinf(1, 4, 8, m) * pinf(1, 5, 8, m));
       })}));

  reg.push_back(make_spec(
      "gg_comb_i1", "GG1 counts equal mod-8 residue class counts", 30,
      {enum_side("sum over GG1 of 1", SetPredicate::GG(1),
                 Weight::by_name("unit")),
       enum_side("sum over parts = 1,4,7 mod 8 of 1", mod8_parts(1),
                 [](const Partition&) { return BigInt(1); }),
       series_side("1/((q;q^8)(q^4;q^8)(q^7;q^8))_inf", [](int m) {
         return inv(pinf(1, 1, 8, m) * pinf(1, 4, 8, m) * pinf(1, 7, 8, m));
       })}));

  reg.push_back(make_spec(
      "gg_comb_i2", "GG2 counts equal mod-8 residue class counts", 30,
      {enum_side("sum over GG2 of 1", SetPredicate::GG(2),
                 Weight::by_name("unit")),
       enum_side("sum over parts = 3,4,5 mod 8 of 1", mod8_parts(2),
                 [](const Partition&) { return BigInt(1); }),
       series_side("1/((q^3;q^8)(q^4;q^8)(q^5;q^8))_inf", [](int m) {
         return inv(pinf(1, 3, 8, m) * pinf(1, 4, 8, m) * pinf(1, 5, 8, m));
       })}));

  reg.push_back(make_spec(
      "thm_3_3_a", "q-Gauss evaluation of the squared-denominator sum", 80,
      {series_side("sum q^(n^2) (-q;q^2)_n / (q^2;q^2)_n^2",
                   [](int m) {
                     return sum_of_terms(
                         [m](long n) {
                           const QSeries d = inv(pfin(1, 2, 2, n, m));
                           return qpow(n * n, m) * pfin(-1, 1, 2, n, m) * d *
                                  d;
                         },
                         m);
                   }),
       series_side("(-q;q^2)_inf/(q^2;q^2)_inf",
                   [](int m) { return half_prefactor(m); })}));

  reg.push_back(make_spec(
      "thm_3_3_b", "shifted squared-denominator sum; three forms", 80,
      {series_side("sum q^(n^2+2n) (-q;q^2)_n / (q^2;q^2)_n^2",
                   [](int m) {
                     return sum_of_terms(
                         [m](long n) {
                           const QSeries d = inv(pfin(1, 2, 2, n, m));
                           return qpow(n * n + 2 * n, m) *
                                  pfin(-1, 1, 2, n, m) * d * d;
                         },
                         m);
                   }),
       series_side("prefactor * alternating sum",
                   [](int m) { return half_prefactor(m) * alt_sum_half(m); }),
       series_side("prefactor * false theta (order 3)", [](int m) {
         return half_prefactor(m) * false_theta3(m);
       })}));

  reg.push_back(make_spec(
      "eq_3_9", "alternating sum equals the order-3 false theta", 80,
      {series_side("sum (-1)^n q^(n^2+n) / (-q;q^2)_(n+1)",
                   [](int m) { return alt_sum_half(m); }),
       series_side("sum q^(3j^2+2j) (1 - q^(2j+1))",
                   [](int m) { return false_theta3(m); })}));

  reg.push_back(make_spec(
      "evenodd_split", "parity split of the alternating sum", 80,
      {series_side("sum (-1)^n q^(n^2+n) / (-q;q^2)_(n+1)",
                   [](int m) { return alt_sum_half(m); }),
       series_side(
           "even-index sum minus odd-index sum",
           [](int m) {
             const QSeries a = sum_of_terms(
                 [m](long j) {
                   return qpow(4 * j * j + 2 * j, m) *
                          inv(pfin(-1, 1, 2, 2 * j + 1, m));
                 },
                 m);
             const QSeries b = sum_of_terms(
                 [m](long j) {
                   return qpow(4 * j * j - 2 * j, m) *
                          inv(pfin(-1, 1, 2, 2 * j, m));
                 },
                 m, /*start=*/1);
             return a - b;
           }),
       series_side("recombined split", [](int m) {
         const QSeries a = sum_of_terms(
             [m](long j) {
               return (qpow(4 * j * j + 2 * j, m) -
                       qpow(4 * j * j + 6 * j + 2, m)) *
                      inv(pfin(-1, 1, 2, 2 * j + 1, m));
             },
             m);
         const QSeries b = sum_of_terms(
             [m](long j) {
               return qpow(4 * j * j + 2 * j - 1, m) *
                      inv(pfin(-1, 1, 2, 2 * j, m));
             },
             m, /*start=*/1);
         return a + b;
       })}));

  reg.push_back(make_spec(
      "eq_3_15", "cancellation step inside the parity split", 80,
      {series_side("sum (q^(4j^2-2j) + q^(4j^2+2j-1)) / (-q;q^2)_(2j)",
                   [](int m) {
                     return sum_of_terms(
                         [m](long j) {
                           return (qpow(4 * j * j - 2 * j, m) +
                                   qpow(4 * j * j + 2 * j - 1, m)) *
                                  inv(pfin(-1, 1, 2, 2 * j, m));
                         },
                         m, /*start=*/1);
                   }),
       series_side("sum q^(4j^2+6j+2) / (-q;q^2)_(2j+1)", [](int m) {
         return sum_of_terms(
             [m](long j) {
               return qpow(4 * j * j + 6 * j + 2, m) *
                      inv(pfin(-1, 1, 2, 2 * j + 1, m));
             },
             m);
       })}));

  reg.push_back(make_spec(
      "thm_3_4", "colored GG1 partitions count distinct-odd partitions", 30,
      {enum_side("sum over GG1 of omega1", SetPredicate::GG(1),
                 Weight::by_name("omega1")),
       enum_side("sum over P_do of 1", SetPredicate::P_do(),
                 Weight::by_name("unit"))}));

  reg.push_back(make_spec(
      "thm_3_7", "GG2 with omega2 meets two unweighted sets", 30,
      {enum_side("sum over GG2 of omega2", SetPredicate::GG(2),
                 Weight::by_name("omega2")),
       enum_side("sum over P_rdo of 1", SetPredicate::P_rdo(),
                 Weight::by_name("unit")),
       enum_side("sum over A of 1", SetPredicate::A(),
                 Weight::by_name("unit"))}));

  reg.push_back(make_spec(
      "false_theta_A", "false-theta product rewritten as a shifted sum", 80,
      {series_side("prefactor * false theta (order 3)",
                   [](int m) { return half_prefactor(m) * false_theta3(m); }),
       series_side(
           "sum q^(3j^2+2j) (-q;q^2)_j/(q^2;q^2)_(2j) * tail products",
           [](int m) {
             return sum_of_terms(
                 [m](long j) {
                   return qpow(3 * j * j + 2 * j, m) * pfin(-1, 1, 2, j, m) *
                          inv(pfin(1, 2, 2, 2 * j, m)) *
                          pinf(-1, 2 * j + 3, 2, m) *
                          inv(pinf(1, 4 * j + 4, 2, m));
                 },
                 m);
           })}));

  reg.push_back(make_spec(
      "thm_4_1_a", "q-Gauss evaluation, (-1;q)_n numerator", 80,
      {series_side("sum q^((n^2+n)/2) (-1;q)_n / (q;q)_n^2",
                   [](int m) {
                     return sum_of_terms(
                         [m](long n) {
                           const QSeries d = inv(pfin(1, 1, 1, n, m));
                           return qpow((n * n + n) / 2, m) *
                                  pfin(-1, 0, 1, n, m) * d * d;
                         },
                         m);
                   }),
       series_side("(-q;q)_inf/(q;q)_inf",
                   [](int m) { return over_prefactor(m); })}));

  reg.push_back(make_spec(
      "thm_4_1_b", "shifted numerator; Fine-sum and false-theta forms", 80,
      {series_side("sum q^((n^2+n)/2) (-q;q)_n / (q;q)_n^2",
                   [](int m) {
                     return sum_of_terms(
                         [m](long n) {
                           const QSeries d = inv(pfin(1, 1, 1, n, m));
                           return qpow((n * n + n) / 2, m) *
                                  pfin(-1, 1, 1, n, m) * d * d;
                         },
                         m);
                   }),
       series_side("prefactor * Fine sum",
                   [](int m) { return over_prefactor(m) * fine1(m); }),
       series_side("prefactor * false theta (order 3/2)", [](int m) {
         return over_prefactor(m) * false_theta32(m);
       })}));

  reg.push_back(make_spec(
      "fine_chain", "three closed forms of one limit", 80,
      {series_side("sum q^((3j^2+j)/2) (1 - q^(2j+1))",
                   [](int m) { return false_theta32(m); }),
       series_side("1 + sum (-1)^n q^(2n-1) / (-q;q^2)_n",
                   [](int m) { return fine1(m); }),
       series_side("sum (-1)^n q^((n^2+n)/2) / (-q;q)_n", [](int m) {
         return sum_of_terms(
             [m](long n) {
               QSeries t =
                   qpow((n * n + n) / 2, m) * inv(pfin(-1, 1, 1, n, m));
               return n % 2 ? negate(t) : t;
             },
             m);
       })}));

  reg.push_back(make_spec(
      "thm_4_2", "distinct parts with doubled-gap weights vs 2^(nu_d)", 30,
      {enum_side("sum over D of wt1_tilde", SetPredicate::D(),
                 Weight::by_name("wt1_tilde")),
       enum_side("sum over U of w1_prime", SetPredicate::U(),
                 Weight::by_name("w1_prime")),
       series_side("(-q;q)_inf/(q;q)_inf",
                   [](int m) { return over_prefactor(m); })}));

  reg.push_back(make_spec(
      "thm_4_4", "distinct parts vs additive odd-part weights", 30,
      {enum_side("sum over D of wt2_tilde", SetPredicate::D(),
                 Weight::by_name("wt2_tilde")),
       enum_side("sum over U of w2_prime", SetPredicate::U(),
                 Weight::by_name("w2_prime")),
       series_side("prefactor * Fine sum",
                   [](int m) { return over_prefactor(m) * fine1(m); })}));

  reg.push_back(make_spec(
      "thm_4_5", "three weighted counts of the same series", 30,
      {enum_side("sum over D of wt2_tilde", SetPredicate::D(),
                 Weight::by_name("wt2_tilde")),
       enum_side("sum over U of w2_prime", SetPredicate::U(),
                 Weight::by_name("w2_prime")),
       enum_side("sum over U of w2_star", SetPredicate::U(),
                 Weight::by_name("w2_star"))}));

  reg.push_back(make_spec(
      "w2star_eq", "front-factor cancellation for the frequency weight", 80,
      {series_side("prefactor * false theta (order 3/2)",
                   [](int m) { return over_prefactor(m) * false_theta32(m); }),
       series_side(
           "(-q;q)_inf * sum q^((3j^2+j)/2)/((q;q)_(2j) (q^(2j+2);q)_inf)",
           [](int m) {
             return pinf(-1, 1, 1, m) * sum_of_terms(
                                            [m](long j) {
                                              return qpow((3 * j * j + j) / 2,
                                                          m) *
                                                     inv(pfin(1, 1, 1, 2 * j,
                                                              m)) *
                                                     inv(pinf(1, 2 * j + 2, 1,
                                                              m));
                                            },
                                            m);
           })}));

  reg.push_back(make_spec(
      "thm_5_1", "restricted double sum equals weighted false theta", 80,
      {series_side("1/(q^2;q^2)_inf * sum q^(2n^2+n) (-q^(2n+2);q)_inf",
                   [](int m) {
                     return inv(pinf(1, 2, 2, m)) *
                            sum_of_terms(
                                [m](long n) {
                                  return qpow(2 * n * n + n, m) *
                                         pinf(-1, 2 * n + 2, 1, m);
                                },
                                m);
                   }),
       series_side("1/(q;q)_inf * false theta (order 3/2)", [](int m) {
         return inv(pinf(1, 1, 1, m)) * false_theta32(m);
       })}));

  reg.push_back(make_spec(
      "ram_9_4_4", "lost-notebook false theta identity", 80,
      {series_side("sum q^(2n^2+n) / (-q;q)_(2n+1)",
                   [](int m) {
                     return sum_of_terms(
                         [m](long n) {
                           return qpow(2 * n * n + n, m) *
                                  inv(pfin(-1, 1, 1, 2 * n + 1, m));
                         },
                         m);
                   }),
       series_side("sum q^((3j^2+j)/2) (1 - q^(2j+1))",
                   [](int m) { return false_theta32(m); })}));

  reg.push_back(make_spec(
      "eq_5_4", "suggestive rewriting behind the restricted identity", 80,
      {series_side(
           "sum q^(2n^2+n)/(q^2;q^2)_n * even tail * distinct-odd tail",
           [](int m) {
             return sum_of_terms(
                 [m](long n) {
                   return qpow(2 * n * n + n, m) * inv(pfin(1, 2, 2, n, m)) *
                          pinf(-1, 2 * n + 2, 2, m) *
                          inv(pinf(1, 2 * n + 2, 2, m)) *
                          pinf(-1, 2 * n + 3, 2, m);
                 },
                 m);
           }),
       series_side("sum q^((3j^2+j)/2)/((q;q)_(2j) (q^(2j+2);q)_inf)",
                   [](int m) {
                     return sum_of_terms(
                         [m](long j) {
                           return qpow((3 * j * j + j) / 2, m) *
                                  inv(pfin(1, 1, 1, 2 * j, m)) *
                                  inv(pinf(1, 2 * j + 2, 1, m));
                         },
                         m);
                   })}));

  reg.push_back(make_spec(
      "thm_5_2", "even-part doubling weight vs initial-condition set", 30,
      {enum_side("sum over P_dom of 2^tau", SetPredicate::P_dom(),
                 Weight::by_name("two_tau")),
       enum_side("sum over U_ic of 1", SetPredicate::U_ic(),
                 Weight::by_name("unit"))}));

  // Two-parameter specialization family: finite product over parts <= n
  // with part-count weight a^nu b^(nu_d), pinned at integer points.
  for (const auto& [a, b] : {std::pair<int, int>{1, 1}, {1, 2}, {2, 3}}) {
    for (int n : {3, 5, 8}) {
      const std::string name = "thm_1_1_spec_a" + std::to_string(a) + "b" +
                               std::to_string(b) + "n" + std::to_string(n);
      const long c = static_cast<long>(a) * (1 - b);
      std::string label = "(" + std::to_string(c) + "q;q)_" +
                          std::to_string(n) + " / (" + std::to_string(a) +
                          "q;q)_" + std::to_string(n);
      reg.push_back(make_spec(
          name,
          "largest part <= " + std::to_string(n) + ", weight " +
              std::to_string(a) + "^nu * " + std::to_string(b) + "^nu_d",
          25,
          {series_side(std::move(label),
                       [a, c, n](int m) {
                         QSeries num = one(m);
                         QSeries den = one(m);
                         for (int i = 1; i <= n; ++i) {
                           mul_binomial_inplace(num, BigInt(-c), i);
                           mul_binomial_inplace(den, BigInt(-a), i);
                         }
                         return num * inv(den);
                       }),
           enum_side("sum over U_" + std::to_string(n) + " of a^nu b^nu_d",
                     [n](const Partition& p) {
                       return p.empty() || p.largest() <= n;
                     },
                     [a, b](const Partition& p) -> BigInt {
                       return ipow(a, p.size()) *
                              ipow(b, num_distinct_parts(p));
                     })}));
    }
  }

  return reg;
}

inline const std::vector<IdentitySpec>& builtin_registry() {
  static const std::vector<IdentitySpec> reg = make_builtin_registry();
  return reg;
}

inline const IdentitySpec* find_identity(const std::string& name) {
  for (const auto& spec : builtin_registry())
    if (spec.name == name) return &spec;
  return nullptr;
}

namespace regdetail {

inline std::size_t edit_distance(const std::string& a, const std::string& b) {
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t prev = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t cur = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1,
                         prev + (a[i - 1] == b[j - 1] ? 0 : 1)});
      prev = cur;
    }
  }
  return row[b.size()];
}

}  // namespace regdetail

// Closest registry names to a (presumably misspelled) query.
inline std::vector<std::string> suggest_identities(const std::string& query,
                                                   std::size_t max_out = 3) {
  std::vector<std::pair<std::size_t, std::string>> ranked;
  for (const auto& spec : builtin_registry())
    ranked.emplace_back(regdetail::edit_distance(query, spec.name), spec.name);
  std::sort(ranked.begin(), ranked.end());
  std::vector<std::string> out;
  for (const auto& [d, name] : ranked) {
    if (out.size() >= max_out) break;
    out.push_back(name);
  }
  return out;
}

}  // namespace qpart
