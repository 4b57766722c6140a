// Identity specifications and the verification engine.  An identity is a
// named list of independently constructed sides, each a recipe producing a
// truncated q-series at a requested order; verification compares every side
// against side 0 coefficient by coefficient.

#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qpart/bigint.hpp"
#include "qpart/qseries.hpp"
#include "qpart/weights.hpp"

namespace qpart {

enum class SideKind { Series, Enum };

struct SideExpr {
  std::string label;
  SideKind kind;
  std::function<QSeries(int)> eval;
};

inline SideExpr series_side(std::string label, std::function<QSeries(int)> fn) {
  return SideExpr{std::move(label), SideKind::Series, std::move(fn)};
}

inline SideExpr enum_side(std::string label, SetPredicate set, Weight weight) {
  return SideExpr{std::move(label), SideKind::Enum,
                  [set, weight](int order) { return weighted_series(set, weight, order); }};
}

inline SideExpr enum_side(std::string label, PartitionPredicate pred,
                          PartitionWeight weight) {
  return SideExpr{std::move(label), SideKind::Enum,
                  [pred = std::move(pred), weight = std::move(weight)](int order) {
                    return weighted_series(pred, weight, order);
                  }};
}

struct IdentitySpec {
  std::string name;
  std::string notes;
  int default_order;
  std::vector<SideExpr> sides;

  bool has_enum_side() const {
    for (const auto& s : sides)
      if (s.kind == SideKind::Enum) return true;
    return false;
  }
};

enum class Verdict { Ok, Mismatch };

inline const char* to_string(Verdict v) { return v == Verdict::Ok ? "OK" : "MISMATCH"; }

struct VerifyReport {
  std::string name;
  int order = 0;
  Verdict verdict = Verdict::Ok;
  std::optional<int> first_bad_exponent;
  std::vector<std::string> side_labels;
  std::vector<BigInt> coefficients_at_bad;  // parallel to side_labels on mismatch
  double millis = 0.0;
};

// A side that throws is a configuration error, not a mismatch; the side
// label is attached so the failure is attributable.
struct SideEvalError : std::runtime_error {
  SideEvalError(const std::string& identity, const std::string& label,
                const std::string& what)
      : std::runtime_error("identity '" + identity + "', side '" + label +
                           "': " + what) {}
};

inline VerifyReport verify(const IdentitySpec& spec, int order) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<QSeries> values;
  values.reserve(spec.sides.size());
  VerifyReport rep;
  rep.name = spec.name;
  rep.order = order;
  for (const auto& side : spec.sides) {
    rep.side_labels.push_back(side.label);
    try {
      values.push_back(side.eval(order));
    } catch (const std::exception& e) {
      throw SideEvalError(spec.name, side.label, e.what());
    }
    if (values.back().order() != order)
      throw SideEvalError(spec.name, side.label, "returned wrong order");
  }
  std::optional<int> bad;
  for (int n = 0; n <= order && !bad; ++n)
    for (size_t s = 1; s < values.size(); ++s)
      if (values[s][n] != values[0][n]) {
        bad = n;
        break;
      }
  if (bad) {
    rep.verdict = Verdict::Mismatch;
    rep.first_bad_exponent = bad;
    for (const auto& v : values) rep.coefficients_at_bad.push_back(v[*bad]);
  }
  rep.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
                   .count();
  return rep;
}

// Verifies a batch; order == nullopt uses each spec's default.  Parallel
// evaluation fans out one task per identity and reports in input order, so
// both modes produce identical reports (modulo wall-clock timings).
inline std::vector<VerifyReport> verify_all(const std::vector<IdentitySpec>& specs,
                                            std::optional<int> order = std::nullopt,
                                            bool parallel = false) {
  std::vector<VerifyReport> reports(specs.size());
  auto run = [&](size_t i) {
    return verify(specs[i], order ? *order : specs[i].default_order);
  };
  if (parallel) {
    std::vector<std::future<VerifyReport>> futs;
    futs.reserve(specs.size());
    for (size_t i = 0; i < specs.size(); ++i)
      futs.push_back(std::async(std::launch::async, run, i));
    for (size_t i = 0; i < specs.size(); ++i) reports[i] = futs[i].get();
  } else {
    for (size_t i = 0; i < specs.size(); ++i) reports[i] = run(i);
  }
  return reports;
}

// Exact integers are serialized as decimal strings; counts and exponents as
// plain numbers.  Timings are opt-in so repeated runs stay byte-identical.
inline nlohmann::json report_to_json(const VerifyReport& rep,
                                     bool include_millis = false) {
  nlohmann::json j;
  j["name"] = rep.name;
  j["order"] = rep.order;
  j["verdict"] = to_string(rep.verdict);
  if (rep.first_bad_exponent) j["first_bad_exponent"] = *rep.first_bad_exponent;
  nlohmann::json sides = nlohmann::json::array();
  for (size_t s = 0; s < rep.side_labels.size(); ++s) {
    nlohmann::json side;
    side["label"] = rep.side_labels[s];
    if (rep.first_bad_exponent)
      side["coefficient_at_bad"] = to_string(rep.coefficients_at_bad[s]);
    sides.push_back(std::move(side));
  }
  j["sides"] = std::move(sides);
  if (include_millis) j["millis"] = rep.millis;
  return j;
}

inline nlohmann::json reports_to_json(const std::vector<VerifyReport>& reps,
                                      bool include_millis = false) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reps) arr.push_back(report_to_json(r, include_millis));
  return arr;
}

inline std::string report_table(const std::vector<VerifyReport>& reps) {
  size_t name_w = 8;
  for (const auto& r : reps) name_w = std::max(name_w, r.name.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(name_w) + 2) << "identity"
     << std::setw(7) << "order" << std::setw(10) << "verdict"
     << std::right << std::setw(10) << "ms" << '\n';
  for (const auto& r : reps) {
    os << std::left << std::setw(static_cast<int>(name_w) + 2) << r.name
       << std::setw(7) << r.order << std::setw(10) << to_string(r.verdict)
       << std::right << std::setw(10) << std::fixed << std::setprecision(1)
       << r.millis;
    if (r.first_bad_exponent) os << "   first bad exponent " << *r.first_bad_exponent;
    os << '\n';
  }
  return os.str();
}

// Returns a copy of the identity with one side multiplied by (1 + q^exponent);
// used by mutation tests to show the engine catches planted discrepancies.
inline IdentitySpec with_side_multiplied(const IdentitySpec& spec, size_t side,
                                         int exponent) {
  IdentitySpec out = spec;
  const auto inner = out.sides.at(side).eval;
  out.sides.at(side).label += " * (1+q^" + std::to_string(exponent) + ")";
  out.sides.at(side).eval = [inner, exponent](int order) {
    return mul(inner(order), binomial_factor(1, exponent, order));
  };
  return out;
}

}  // namespace qpart
