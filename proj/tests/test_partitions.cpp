// Partition values, enumeration order, conjugations, statistics, and the
// named set predicates.  Set membership lists for norm 12 and norm 8 are
// asserted element-by-element; structural laws (involutions, containments,
// frequency round-trips) run exhaustively over small norms.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "qpart/partitions.hpp"
#include "qpart/qseries.hpp"

using namespace qpart;

namespace {

Partition P(std::initializer_list<int> parts) {
  return Partition(std::vector<int>(parts));
}

std::set<std::string> members(const SetPredicate& s, int n) {
  std::set<std::string> out;
  for_each_partition(n, [&](const Partition& p) {
    if (s.contains(p)) out.insert(format_partition(p));
  });
  return out;
}

}  // namespace

TEST_CASE("partition construction and accessors", "[partitions]") {
  const Partition p = P({3, 8, 1, 3});
  CHECK(p.size() == 4);
  CHECK(p[0] == 8);          // parts are stored in descending order
  CHECK(p[3] == 1);
  CHECK(p.largest() == 8);
  CHECK(p.smallest() == 1);
  CHECK(p.norm() == 15);
  CHECK(p.multiplicity(3) == 2);
  CHECK(p.contains(8));
  CHECK_FALSE(p.contains(2));

  const Partition empty;
  CHECK(empty.empty());
  CHECK(empty.norm() == 0);
  CHECK(empty.size() == 0);

  CHECK_THROWS_AS(P({3, 0}), std::invalid_argument);
  CHECK_THROWS_AS(P({-1}), std::invalid_argument);
}

TEST_CASE("partition text forms", "[partitions]") {
  CHECK(format_partition(P({8, 3, 1})) == "(8,3,1)");
  CHECK(format_partition(Partition()) == "()");
  CHECK(format_frequencies(P({3, 1, 1})) == "1^2 3^1");

  CHECK(parse_partition("(8,3,1)") == P({8, 3, 1}));
  CHECK(parse_partition("( 8 , 3 , 1 )") == P({8, 3, 1}));
  CHECK(parse_partition("8,1,3") == P({8, 3, 1}));
  CHECK(parse_partition("1^2 3^1") == P({3, 1, 1}));
  CHECK(parse_partition("()") == Partition());
  CHECK(parse_partition("") == Partition());
  CHECK_THROWS_AS(parse_partition("(8,,1)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("3^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_partition("(0)"), std::invalid_argument);
}

TEST_CASE("frequency views round-trip", "[partitions][property]") {
  for (int n = 0; n <= 12; ++n)
    for_each_partition(n, [](const Partition& p) {
      REQUIRE(Partition::from_frequencies(p.frequencies()) == p);
    });
}

TEST_CASE("enumeration order and counts", "[partitions]") {
  auto zero = all_partitions(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].empty());

  std::vector<std::string> four;
  for (const Partition& p : all_partitions(4)) four.push_back(format_partition(p));
  CHECK(four == std::vector<std::string>{"(4)", "(3,1)", "(2,2)", "(2,1,1)",
                                         "(1,1,1,1)"});

  CHECK(count_partitions(10) == 42);

  // Reverse-lexicographic: each partition precedes the next one.
  for (int n : {7, 11}) {
    auto all = all_partitions(n);
    for (size_t i = 0; i + 1 < all.size(); ++i) {
      REQUIRE(std::lexicographical_compare(all[i + 1].parts().begin(),
                                           all[i + 1].parts().end(),
                                           all[i].parts().begin(),
                                           all[i].parts().end()));
    }
  }
}

TEST_CASE("enumeration agrees with the generating function",
          "[partitions][oracle]") {
  const int N = 40;
  const QSeries p = reciprocal(pochhammer(1, 1, 1, std::nullopt, N));
  for (int n = 0; n <= N; ++n) REQUIRE(p[n] == count_partitions(n));
}

TEST_CASE("conjugation", "[partitions]") {
  CHECK(conjugate(P({10, 9, 5, 5, 4, 1})) == P({6, 5, 5, 5, 4, 2, 2, 2, 2, 1}));
  CHECK(conjugate(Partition()) == Partition());
  CHECK(conjugate(P({3})) == P({1, 1, 1}));
}

TEST_CASE("conjugation is a norm-preserving involution",
          "[partitions][property]") {
  for (int n = 0; n <= 30; ++n)
    for_each_partition(n, [n](const Partition& p) {
      const Partition c = conjugate(p);
      REQUIRE(c.norm() == n);
      REQUIRE(conjugate(c) == p);
    });
}

TEST_CASE("2-modular conjugation", "[partitions]") {
  CHECK(mod2_conjugate(P({5, 4})) == P({4, 4, 1}));
  CHECK(mod2_conjugate(Partition()) == Partition());
  CHECK(mod2_admissible(P({5, 4})));
  CHECK_FALSE(mod2_admissible(P({10, 9, 5, 5, 4, 1})));  // 5 repeats
  CHECK_THROWS_AS(mod2_conjugate(P({10, 9, 5, 5, 4, 1})), DomainError);
  CHECK(mod2_conjugate(P({4, 4})) == P({4, 4}));  // even parts may repeat
}

TEST_CASE("2-modular conjugation is an involution on distinct-odd partitions",
          "[partitions][property]") {
  for (int n = 0; n <= 30; ++n)
    for_each_partition(n, [n](const Partition& p) {
      if (!has_distinct_odd_parts(p)) return;
      const Partition c = mod2_conjugate(p);
      REQUIRE(c.norm() == n);
      REQUIRE(has_distinct_odd_parts(c));
      REQUIRE(mod2_conjugate(c) == p);
    });
}

TEST_CASE("statistics", "[partitions]") {
  const PartitionStats s = stats(P({10, 10, 5, 5, 4, 1}));
  CHECK(s.nu == 6);
  CHECK(s.nu_d == 4);
  CHECK(s.nu_de == 2);
  CHECK(s.smallest_missing == 2);
  CHECK(s.smallest_missing_odd == 3);

  const PartitionStats e = stats(Partition());
  CHECK(e.nu == 0);
  CHECK(e.nu_d == 0);
  CHECK(e.nu_de == 0);
  CHECK(e.smallest_missing == 1);
  CHECK(e.smallest_missing_odd == 1);

  CHECK(stats(P({5, 2, 1})).smallest_missing_odd == 3);
  CHECK(smallest_missing(P({2, 1})) == 3);
  CHECK(smallest_missing_odd(P({2, 2})) == 1);

  CHECK(mu_odd_ge(P({7, 3}), 3) == 2);
  CHECK(mu_odd_ge(P({7, 3}), 7) == 1);
  CHECK(mu_odd_ge(Partition(), 1) == 0);
  CHECK(mu_odd_ge(P({5, 5, 3}), 1) == 2);  // distinct odd sizes only

  CHECK(tau(P({6, 2})) == 2);       // smallest missing odd is 1
  CHECK(tau(P({5, 3})) == 0);
  CHECK(tau(P({2, 2, 2, 2})) == 1);
  CHECK(tau(P({4, 3, 1})) == 0);    // 5 is the smallest missing odd
  CHECK(tau(P({6, 3, 1})) == 1);
}

TEST_CASE("named predicate membership at norm 12", "[partitions]") {
  CHECK(members(SetPredicate::GG(1), 12) ==
        std::set<std::string>{"(12)", "(11,1)", "(10,2)", "(9,3)", "(8,4)",
                              "(8,3,1)", "(7,5)", "(7,4,1)"});
  CHECK(members(SetPredicate::GG(2), 12) ==
        std::set<std::string>{"(12)", "(9,3)", "(8,4)", "(7,5)"});
  CHECK(members(SetPredicate::P_rdo(), 12) ==
        std::set<std::string>{"(12)", "(9,3)", "(8,4)", "(7,5)", "(7,3,2)",
                              "(6,6)", "(5,4,3)", "(5,3,2,2)", "(4,4,4)",
                              "(4,4,2,2)", "(4,2,2,2,2)"});
  CHECK(members(SetPredicate::A(), 12) ==
        std::set<std::string>{"(12)", "(9,3)", "(8,4)", "(7,5)", "(7,2,2,1)",
                              "(6,6)", "(5,4,3)", "(5,2,2,2,1)", "(4,4,4)",
                              "(4,2,2,2,1,1)", "(2,2,2,2,2,1,1)"});
  CHECK(count_in(SetPredicate::P_do(), 12) == 28);
  CHECK(count_in(SetPredicate::P_rdo(), 12) == 11);
  CHECK(count_in(SetPredicate::A(), 12) == 11);
}

TEST_CASE("named predicate membership at norm 8", "[partitions]") {
  CHECK(members(SetPredicate::P_dom(), 8) ==
        std::set<std::string>{"(8)", "(6,2)", "(5,3)", "(5,2,1)", "(4,4)",
                              "(4,2,2)", "(2,2,2,2)"});
  CHECK(members(SetPredicate::U_ic(), 8) ==
        std::set<std::string>{"(8)", "(6,2)", "(6,1,1)", "(5,3)", "(5,1,1,1)",
                              "(4,4)", "(4,2,2)", "(4,2,1,1)", "(4,1,1,1,1)",
                              "(3,3,2)", "(3,2,1,1,1)", "(2,2,2,2)",
                              "(2,2,2,1,1)", "(2,2,1,1,1,1)",
                              "(2,1,1,1,1,1,1)", "(1,1,1,1,1,1,1,1)"});
  CHECK(count_in(SetPredicate::U_ic(), 8) == 16);
}

TEST_CASE("individual membership checks", "[partitions]") {
  CHECK(SetPredicate::A().contains(P({7, 2, 2, 1})));
  CHECK(SetPredicate::P_dom().contains(P({5, 2, 1})));
  CHECK(SetPredicate::U_ic().contains(P({3, 2, 1, 1, 1})));
  CHECK(SetPredicate::U().contains(Partition()));

  // every named set contains the empty partition ("U_n" takes a bound)
  for (const std::string& name : SetPredicate::names()) {
    const std::string resolvable = name == "U_n" ? "U_n:5" : name;
    CHECK(SetPredicate::by_name(resolvable).contains(Partition()));
  }

  // GG gap rule: a gap of exactly 2 must sit under an odd part
  CHECK(SetPredicate::GG(1).contains(P({7, 5})));
  CHECK_FALSE(SetPredicate::GG(1).contains(P({6, 4})));
  CHECK_FALSE(SetPredicate::GG(1).contains(P({5, 4})));
  CHECK(SetPredicate::GG(2).contains(P({3})));
  CHECK_FALSE(SetPredicate::GG(2).contains(P({1})));

  // P_rdo smallest-part rules
  CHECK_FALSE(SetPredicate::P_rdo().contains(P({3, 1})));  // min part 1
  CHECK(SetPredicate::P_rdo().contains(P({3})));
  CHECK(SetPredicate::P_rdo().contains(P({7, 3, 2})));     // prefix 2,3 = (4j-1) at j=1
  CHECK(SetPredicate::P_rdo().contains(P({4, 2, 2})));     // prefix 2,4 with 5,6 absent
  CHECK_FALSE(SetPredicate::P_rdo().contains(P({5, 2, 2})));
  CHECK_FALSE(SetPredicate::P_rdo().contains(P({6, 2})));
}

TEST_CASE("set names resolve and reject", "[partitions]") {
  for (const std::string& name : SetPredicate::names()) {
    if (name == "U_n") continue;  // parameterized; resolved with a bound below
    const SetPredicate s = SetPredicate::by_name(name);
    CHECK(s.name() == name);
  }
  CHECK(SetPredicate::by_name("U_n:3").name() == "U_n:3");
  const SetPredicate un = SetPredicate::by_name("U_n:3");
  CHECK(un.contains(P({3, 3})));
  CHECK_FALSE(un.contains(P({4})));
  CHECK_THROWS_AS(SetPredicate::by_name("nope"), std::invalid_argument);
  CHECK_THROWS_AS(SetPredicate::by_name("U_n:x"), std::invalid_argument);
}

TEST_CASE("set containment chain", "[partitions][property]") {
  const SetPredicate gg2 = SetPredicate::GG(2);
  const SetPredicate gg1 = SetPredicate::GG(1);
  const SetPredicate rr = SetPredicate::RR();
  const SetPredicate d = SetPredicate::D();
  const SetPredicate u = SetPredicate::U();
  const SetPredicate pdo = SetPredicate::P_do();
  const SetPredicate prdo = SetPredicate::P_rdo();
  const SetPredicate pdom = SetPredicate::P_dom();
  for (int n = 0; n <= 30; ++n)
    for_each_partition(n, [&](const Partition& p) {
      if (gg2.contains(p)) REQUIRE(gg1.contains(p));
      if (gg1.contains(p)) REQUIRE(rr.contains(p));
      if (rr.contains(p)) REQUIRE(d.contains(p));
      REQUIRE(u.contains(p));
      if (prdo.contains(p)) REQUIRE(pdo.contains(p));
      if (pdom.contains(p)) REQUIRE(pdo.contains(p));
    });
}
