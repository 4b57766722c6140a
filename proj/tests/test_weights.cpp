// Weight functions: point values on fixed partitions, column totals at the
// norms where full reference values are known, vanishing/clamping rules off
// the natural domains, and positivity properties.  Cross-checks against the
// series representations guard the boundary conventions (the synthetic
// next-part values behind the gap weights).

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <utility>
#include <vector>

#include "qpart/partitions.hpp"
#include "qpart/qseries.hpp"
#include "qpart/weights.hpp"

using namespace qpart;

namespace {

Partition P(const std::string& text) { return parse_partition(text); }

using Row = std::pair<const char*, long>;

void check_rows(const Weight& w, const std::vector<Row>& rows) {
  for (const auto& [text, expected] : rows) {
    INFO(w.name() << " at " << text);
    CHECK(w(P(text)) == expected);
  }
}

}  // namespace

TEST_CASE("every weight maps the empty partition to one", "[weights]") {
  for (const std::string& name : Weight::names())
    CHECK(Weight::by_name(name)(Partition()) == 1);
}

TEST_CASE("weight names resolve and reject", "[weights]") {
  for (const std::string& name : Weight::names())
    CHECK(Weight::by_name(name).name() == name);
  CHECK_THROWS_AS(Weight::by_name("omega9"), std::invalid_argument);
}

TEST_CASE("omega point values and gap-1 vanishing", "[weights]") {
  const Weight w = Weight::by_name("omega");
  check_rows(w, {{"(3,2)", 0}, {"(12)", 12}, {"(7,4,1)", 4}, {"(5,3)", 3}});
  // last factor is the smallest part; inner factors are gap-minus-one
  CHECK(w(P("(9,5,2)")) == 3 * 2 * 2);
  for (int n = 0; n <= 20; ++n)
    for_each_partition(n, [&](const Partition& p) {
      bool gap1 = false;
      for (int i = 0; i + 1 < p.size(); ++i)
        if (p[i] - p[i + 1] == 1) gap1 = true;
      if (gap1) REQUIRE(w(p) == 0);
    });
}

TEST_CASE("omega over gap-2 partitions counts all partitions",
          "[weights][oracle]") {
  const Weight w = Weight::by_name("omega");
  for (int n = 0; n <= 25; ++n)
    REQUIRE(weighted_sum(SetPredicate::RR(), w, n) == count_partitions(n));
}

TEST_CASE("omega1 point values", "[weights]") {
  const Weight w = Weight::by_name("omega1");
  CHECK(w(P("(18,12,7,5)")) == 12);  // 3*2*2*1
  check_rows(w, {{"(12)", 6},
                 {"(11,1)", 5},
                 {"(10,2)", 3},
                 {"(9,3)", 6},
                 {"(8,4)", 2},
                 {"(8,3,1)", 2},
                 {"(7,5)", 3},
                 {"(7,4,1)", 1}});
  // non-integral or non-positive factors clamp the weight to zero
  CHECK(w(P("(3,2)")) == 0);
  CHECK(w(P("(4,4)")) == 0);
  CHECK(w(P("(2)")) == 1);
  CHECK(w(P("(6,4)")) == 0);
}

TEST_CASE("omega1 totals match distinct-odd counts", "[weights][oracle]") {
  const Weight w = Weight::by_name("omega1");
  CHECK(weighted_sum(SetPredicate::GG(1), w, 12) == 28);
  CHECK(count_in(SetPredicate::P_do(), 12) == 28);
}

TEST_CASE("omega2 point values", "[weights]") {
  const Weight w = Weight::by_name("omega2");
  check_rows(w, {{"(12)", 5}, {"(9,3)", 3}, {"(8,4)", 1}, {"(7,5)", 2}});
  CHECK(weighted_sum(SetPredicate::GG(2), w, 12) == 11);
}

TEST_CASE("omega2 vanishes between GG2 and RR", "[weights][property]") {
  const Weight w = Weight::by_name("omega2");
  const SetPredicate gg2 = SetPredicate::GG(2);
  const SetPredicate rr = SetPredicate::RR();
  for (int n = 0; n <= 20; ++n)
    for_each_partition(n, [&](const Partition& p) {
      if (rr.contains(p) && !gg2.contains(p)) REQUIRE(w(p) == 0);
    });
  for (int n = 0; n <= 30; ++n)
    REQUIRE(weighted_sum(gg2, w, n) == weighted_sum(rr, w, n));
}

TEST_CASE("wt1_tilde point values", "[weights]") {
  const Weight w = Weight::by_name("wt1_tilde");
  check_rows(w, {{"(10)", 20}, {"(2,1)", 2}, {"(1)", 2}, {"(5,2)", 5 * 4}});
}

TEST_CASE("wt2_tilde point values", "[weights]") {
  const Weight w = Weight::by_name("wt2_tilde");
  check_rows(w, {{"(10)", 19},
                 {"(9,1)", 15},
                 {"(8,2)", 33},
                 {"(7,3)", 35},
                 {"(6,4)", 21},
                 {"(6,3,1)", 15},
                 {"(5,4,1)", 5},
                 {"(5,3,2)", 9},
                 {"(4,3,2,1)", 1},
                 {"(7,2,1)", 9}});
  CHECK(weighted_sum(SetPredicate::D(), w, 10) == 162);
}

TEST_CASE("w1_prime is two to the distinct-part count", "[weights]") {
  const Weight w = Weight::by_name("w1_prime");
  check_rows(w, {{"(1)", 2}, {"(2,1)", 4}, {"(2,2)", 2}, {"(5,3,3,1)", 8}});
  CHECK(weighted_series(SetPredicate::U(), w, 4) ==
        QSeries(4, {BigInt(1), BigInt(2), BigInt(4), BigInt(8), BigInt(14)}));
}

TEST_CASE("w2_prime full column at norm 10", "[weights]") {
  const Weight w = Weight::by_name("w2_prime");
  check_rows(
      w,
      {{"(10)", 2},          {"(9,1)", 1},         {"(8,2)", 4},
       {"(8,1,1)", 2},       {"(7,3)", 7},         {"(7,2,1)", 6},
       {"(7,1,1,1)", 3},     {"(6,4)", 4},         {"(6,3,1)", 6},
       {"(6,2,2)", 4},       {"(6,2,1,1)", 4},     {"(6,1,1,1,1)", 2},
       {"(5,5)", 1},         {"(5,4,1)", 2},       {"(5,3,2)", 10},
       {"(5,3,1,1)", 5},     {"(5,2,2,1)", 2},     {"(5,2,1,1,1)", 2},
       {"(5,1,1,1,1,1)", 1}, {"(4,4,2)", 4},       {"(4,4,1,1)", 2},
       {"(4,3,3)", 6},       {"(4,3,2,1)", 12},    {"(4,3,1,1,1)", 6},
       {"(4,2,2,2)", 4},     {"(4,2,2,1,1)", 4},   {"(4,2,1,1,1,1)", 4},
       {"(4,1,1,1,1,1,1)", 2}, {"(3,3,3,1)", 3},   {"(3,3,2,2)", 6},
       {"(3,3,2,1,1)", 6},   {"(3,3,1,1,1,1)", 3}, {"(3,2,2,2,1)", 6},
       {"(3,2,2,1,1,1)", 6}, {"(3,2,1,1,1,1,1)", 6},
       {"(3,1,1,1,1,1,1,1)", 3},
       {"(2,2,2,2,2)", 2},   {"(2,2,2,2,1,1)", 2}, {"(2,2,2,1,1,1,1)", 2},
       {"(2,2,1,1,1,1,1,1)", 2}, {"(2,1,1,1,1,1,1,1,1)", 2},
       {"(1,1,1,1,1,1,1,1,1,1)", 1}});
  CHECK(weighted_sum(SetPredicate::U(), w, 10) == 162);
}

TEST_CASE("w2_star full column at norm 10", "[weights]") {
  const Weight w = Weight::by_name("w2_star");
  check_rows(
      w,
      {{"(10)", 2},          {"(9,1)", 2},         {"(8,2)", 4},
       {"(8,1,1)", 2},       {"(7,3)", 4},         {"(7,2,1)", 4},
       {"(7,1,1,1)", 4},     {"(6,4)", 4},         {"(6,3,1)", 4},
       {"(6,2,2)", 4},       {"(6,2,1,1)", 4},     {"(6,1,1,1,1)", 4},
       {"(5,5)", 2},         {"(5,4,1)", 4},       {"(5,3,2)", 8},
       {"(5,3,1,1)", 2},     {"(5,2,2,1)", 4},     {"(5,2,1,1,1)", 8},
       {"(5,1,1,1,1,1)", 4}, {"(4,4,2)", 4},       {"(4,4,1,1)", 2},
       {"(4,3,3)", 4},       {"(4,3,2,1)", 8},     {"(4,3,1,1,1)", 4},
       {"(4,2,2,2)", 4},     {"(4,2,2,1,1)", 4},   {"(4,2,1,1,1,1)", 8},
       {"(4,1,1,1,1,1,1)", 4}, {"(3,3,3,1)", 2},   {"(3,3,2,2)", 4},
       {"(3,3,2,1,1)", 0},   {"(3,3,1,1,1,1)", 0}, {"(3,2,2,2,1)", 4},
       {"(3,2,2,1,1,1)", 6}, {"(3,2,1,1,1,1,1)", 4},
       {"(3,1,1,1,1,1,1,1)", 2},
       {"(2,2,2,2,2)", 2},   {"(2,2,2,2,1,1)", 2}, {"(2,2,2,1,1,1,1)", 8},
       {"(2,2,1,1,1,1,1,1)", 6}, {"(2,1,1,1,1,1,1,1,1)", 4},
       {"(1,1,1,1,1,1,1,1,1,1)", 2}});
  CHECK(weighted_sum(SetPredicate::U(), w, 10) == 162);
}

TEST_CASE("two_tau point values", "[weights]") {
  const Weight w = Weight::by_name("two_tau");
  check_rows(w, {{"(8)", 2},
                 {"(6,2)", 4},
                 {"(5,3)", 1},
                 {"(5,2,1)", 1},
                 {"(4,4)", 2},
                 {"(4,2,2)", 4},
                 {"(2,2,2,2)", 2}});
  CHECK(weighted_sum(SetPredicate::P_dom(), w, 8) == 16);
  CHECK(count_in(SetPredicate::U_ic(), 8) == 16);
}

TEST_CASE("weighted series against product forms", "[weights][oracle]") {
  const int N = 20;
  CHECK(weighted_series(SetPredicate::RR(), Weight::by_name("omega"), N) ==
        reciprocal(pochhammer(1, 1, 1, std::nullopt, N)));
  CHECK(weighted_series(SetPredicate::D(), Weight::by_name("unit"), 4) ==
        QSeries(4, {BigInt(1), BigInt(1), BigInt(1), BigInt(2), BigInt(2)}));
}

TEST_CASE("positive weights stay positive", "[weights][property]") {
  const Weight w1p = Weight::by_name("w1_prime");
  const Weight w2p = Weight::by_name("w2_prime");
  const Weight tt = Weight::by_name("two_tau");
  const Weight ws = Weight::by_name("w2_star");
  for (int n = 0; n <= 15; ++n)
    for_each_partition(n, [&](const Partition& p) {
      REQUIRE(w1p(p) >= 1);
      REQUIRE(w2p(p) >= 1);
      REQUIRE(tt(p) >= 1);
      REQUIRE(ws(p) >= 0);
    });

  const Weight t1 = Weight::by_name("wt1_tilde");
  const Weight t2 = Weight::by_name("wt2_tilde");
  const SetPredicate d = SetPredicate::D();
  for (int n = 0; n <= 20; ++n)
    for_each_partition(n, [&](const Partition& p) {
      if (!d.contains(p)) return;
      REQUIRE(t1(p) >= 1);
      REQUIRE(t2(p) >= 1);
    });
}

TEST_CASE("replacement with a superset keeps weighted totals",
          "[weights][property]") {
  const Weight w = Weight::by_name("omega");
  for (int n = 0; n <= 30; ++n)
    REQUIRE(weighted_sum(SetPredicate::RR(), w, n) ==
            weighted_sum(SetPredicate::D(), w, n));
}
