// Command-line front end.  Subcommands:
//   verify     check identities from the builtin registry or a .qid file
//   table      regenerate a reference table from enumeration plus weights
//   expand     print the coefficients of a DSL expression
//   enumerate  list the members of a partition set with optional weights
//   list       show the builtin registry
//
// Exit codes: 0 all comparisons passed, 1 a verification found a mismatch or
// a regenerated table total diverged, 2 usage, parse, or evaluation error.
// JSON output (--json) is the machine contract; plain text is not.  Timings
// are only emitted under --timing so repeated JSON runs stay byte-identical.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qpart/registry.hpp"
#include "qpart/specdsl.hpp"

namespace {

using namespace qpart;

struct WeightedRow {
  Partition partition;
  BigInt weight;
};

std::vector<WeightedRow> weighted_rows(const SetPredicate& set,
                                       const Weight& weight, int n) {
  std::vector<WeightedRow> rows;
  for_each_partition(n, [&](const Partition& p) {
    if (set.contains(p)) rows.push_back({p, weight(p)});
  });
  return rows;
}

std::optional<int> order_from_env() {
  const char* env = std::getenv("QPART_ORDER");
  if (env == nullptr || *env == '\0') return std::nullopt;
  try {
    size_t used = 0;
    const int value = std::stoi(env, &used);
    if (used != std::string(env).size() || value < 0)
      throw std::invalid_argument("");
    return value;
  } catch (const std::exception&) {
    throw std::runtime_error(
        "QPART_ORDER must be a non-negative integer, got '" +
        std::string(env) + "'");
  }
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string identity;
  std::string file;
  bool all = false;
  int order = -1;  // -1: not set
  bool json = false;
  bool timing = false;
};

int run_verify(const VerifyOptions& opt) {
  std::vector<IdentitySpec> pool;
  if (!opt.file.empty()) {
    pool = dsl::to_identity_specs(dsl::load_identity_file(opt.file));
  } else {
    pool = builtin_registry();
  }

  std::vector<IdentitySpec> selected;
  if (!opt.identity.empty()) {
    for (const auto& spec : pool)
      if (spec.name == opt.identity) selected.push_back(spec);
    if (selected.empty()) {
      std::cerr << "unknown identity '" << opt.identity << "'";
      const auto near = opt.file.empty()
                            ? suggest_identities(opt.identity)
                            : std::vector<std::string>{};
      if (!near.empty()) {
        std::cerr << "; did you mean";
        for (size_t i = 0; i < near.size(); ++i)
          std::cerr << (i ? ", " : " ") << near[i];
      }
      std::cerr << "\n";
      return 2;
    }
  } else if (opt.all || !opt.file.empty()) {
    selected = pool;
  } else {
    std::cerr << "specify --identity NAME, --file PATH, or --all\n";
    return 2;
  }

  std::optional<int> order;
  if (opt.order >= 0)
    order = opt.order;
  else
    order = order_from_env();

  const auto reports = verify_all(selected, order, /*parallel=*/true);
  if (opt.json)
    std::cout << reports_to_json(reports, opt.timing).dump(2) << "\n";
  else
    std::cout << report_table(reports);

  for (const auto& rep : reports)
    if (rep.verdict != Verdict::Ok) return 1;
  return 0;
}

// ---------------------------------------------------------------------------

// Prints one weighted column and compares its total against the expected
// value; marks one reconstructed row when asked (see table 5 below).
bool print_weighted_block(const std::string& title, const SetPredicate& set,
                          const Weight& weight, int n, long expected,
                          const std::string& starred = "") {
  const auto rows = weighted_rows(set, weight, n);
  BigInt total = 0;
  bool used_star = false;
  std::cout << title << "\n";
  for (const auto& row : rows) {
    const std::string text = format_partition(row.partition);
    const bool star = !starred.empty() && text == starred;
    used_star |= star;
    std::cout << "  " << text << "  ->  " << to_string(row.weight)
              << (star ? "   (*)" : "") << "\n";
    total += row.weight;
  }
  const bool ok = total == expected;
  std::cout << "  total " << to_string(total) << " (expected " << expected
            << ") " << (ok ? "ok" : "DIVERGES") << "\n";
  if (used_star)
    std::cout << "  (*) row reconstructed from the weight definition; some "
                 "published tabulations omit it\n";
  return ok;
}

bool print_member_block(const std::string& title, const SetPredicate& set,
                        int n, long expected) {
  std::vector<std::string> members;
  for_each_partition(n, [&](const Partition& p) {
    if (set.contains(p)) members.push_back(format_partition(p));
  });
  std::cout << title << "\n";
  for (const auto& m : members) std::cout << "  " << m << "\n";
  const bool ok = static_cast<long>(members.size()) == expected;
  std::cout << "  count " << members.size() << " (expected " << expected
            << ") " << (ok ? "ok" : "DIVERGES") << "\n";
  return ok;
}

int run_table(int which) {
  bool ok = true;
  switch (which) {
    case 3:
      ok &= print_weighted_block("weight omega1 over GG1, norm 12",
                                 SetPredicate::GG(1), Weight::by_name("omega1"),
                                 12, 28);
      ok &= print_member_block("members of P_do, norm 12", SetPredicate::P_do(),
                               12, 28);
      break;
    case 4:
      ok &= print_weighted_block("weight omega2 over GG2, norm 12",
                                 SetPredicate::GG(2), Weight::by_name("omega2"),
                                 12, 11);
      ok &= print_member_block("members of P_rdo, norm 12",
                               SetPredicate::P_rdo(), 12, 11);
      ok &= print_member_block("members of A, norm 12", SetPredicate::A(), 12,
                               11);
      break;
    case 5:
      ok &= print_weighted_block("weight wt2_tilde over D, norm 10",
                                 SetPredicate::D(), Weight::by_name("wt2_tilde"),
                                 10, 162, "(7,2,1)");
      ok &= print_weighted_block("weight w2_prime over all partitions, norm 10",
                                 SetPredicate::U(), Weight::by_name("w2_prime"),
                                 10, 162);
      break;
    case 6:
      ok &= print_weighted_block("weight w2_star over all partitions, norm 10",
                                 SetPredicate::U(), Weight::by_name("w2_star"),
                                 10, 162);
      break;
    case 7:
      ok &= print_weighted_block("weight two_tau over P_dom, norm 8",
                                 SetPredicate::P_dom(),
                                 Weight::by_name("two_tau"), 8, 16);
      ok &= print_member_block("members of U_ic, norm 8", SetPredicate::U_ic(),
                               8, 16);
      break;
    default:
      std::cerr << "table number must be 3..7\n";
      return 2;
  }
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------------

int run_expand(const std::string& expr, int order) {
  const QSeries s = dsl::evaluate(*dsl::parse_expression(expr), order);
  for (int n = 0; n <= s.order(); ++n)
    std::cout << (n ? " " : "") << to_string(s[n]);
  std::cout << "\n";
  return 0;
}

// ---------------------------------------------------------------------------

struct EnumerateOptions {
  std::string set;
  int n = 0;
  std::string weight = "unit";
  bool json = false;
};

int run_enumerate(const EnumerateOptions& opt) {
  const SetPredicate set = SetPredicate::by_name(opt.set);
  const Weight weight = Weight::by_name(opt.weight);
  const auto rows = weighted_rows(set, weight, opt.n);
  BigInt total = 0;
  for (const auto& row : rows) total += row.weight;

  if (opt.json) {
    nlohmann::json j;
    j["set"] = opt.set;
    j["n"] = opt.n;
    j["weight"] = opt.weight;
    j["count"] = rows.size();
    j["total"] = to_string(total);
    nlohmann::json members = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json m;
      m["partition"] = format_partition(row.partition);
      m["weight"] = to_string(row.weight);
      members.push_back(std::move(m));
    }
    j["members"] = std::move(members);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& row : rows)
      std::cout << format_partition(row.partition) << "  ->  "
                << to_string(row.weight) << "\n";
    std::cout << "count " << rows.size() << "  total " << to_string(total)
              << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

int run_list() {
  size_t name_w = 8;
  for (const auto& spec : builtin_registry())
    name_w = std::max(name_w, spec.name.size());
  for (const auto& spec : builtin_registry()) {
    std::cout << spec.name << std::string(name_w + 2 - spec.name.size(), ' ')
              << "order " << spec.default_order << "  sides "
              << spec.sides.size();
    if (!spec.notes.empty()) std::cout << "  " << spec.notes;
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-series toolkit: weighted partition identities"};
  app.require_subcommand(1);

  VerifyOptions vopt;
  auto* verify_cmd = app.add_subcommand("verify", "verify identities");
  verify_cmd->add_option("--identity", vopt.identity, "identity name");
  verify_cmd->add_option("--file", vopt.file, "a .qid identity file");
  verify_cmd->add_flag("--all", vopt.all, "verify the whole registry");
  verify_cmd->add_option("--order", vopt.order, "truncation order")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_flag("--json", vopt.json, "machine-readable output");
  verify_cmd->add_flag("--timing", vopt.timing, "include timings in JSON");

  int table_number = 0;
  auto* table_cmd = app.add_subcommand("table", "regenerate a reference table");
  table_cmd->add_option("--paper-table", table_number, "table number (3..7)")
      ->required()
      ->check(CLI::Range(3, 7));

  std::string expr;
  int expand_order = 0;
  auto* expand_cmd = app.add_subcommand("expand", "expand a DSL expression");
  expand_cmd->add_option("--expr", expr, "expression")->required();
  expand_cmd->add_option("--order", expand_order, "truncation order")
      ->required()
      ->check(CLI::NonNegativeNumber);

  EnumerateOptions eopt;
  auto* enum_cmd = app.add_subcommand("enumerate", "list a weighted set");
  enum_cmd->add_option("--set", eopt.set, "set name")->required();
  enum_cmd->add_option("--n", eopt.n, "norm")->required()->check(
      CLI::NonNegativeNumber);
  enum_cmd->add_option("--weight", eopt.weight, "weight name");
  enum_cmd->add_flag("--json", eopt.json, "machine-readable output");

  auto* list_cmd = app.add_subcommand("list", "show the builtin registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify_cmd->parsed()) return run_verify(vopt);
    if (table_cmd->parsed()) return run_table(table_number);
    if (expand_cmd->parsed()) return run_expand(expr, expand_order);
    if (enum_cmd->parsed()) return run_enumerate(eopt);
    if (list_cmd->parsed()) return run_list();
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  return 2;
}
