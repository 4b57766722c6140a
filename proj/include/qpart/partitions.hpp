// Integer partitions: representation, exhaustive enumeration in
// reverse-lexicographic order, Ferrers and 2-modular Ferrers conjugation,
// part statistics, and the named partition families used by the identity
// registry.

#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qpart/errors.hpp"

namespace qpart {

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    for (int p : parts_)
      if (p < 1) throw std::invalid_argument("Partition: parts must be >= 1");
  }

  // Internal fast path for enumeration: input is already sorted descending.
  struct SortedTag {};
  Partition(std::vector<int> parts, SortedTag) : parts_(std::move(parts)) {}

  static Partition from_frequencies(const std::map<int, int>& freq) {
    std::vector<int> parts;
    for (auto it = freq.rbegin(); it != freq.rend(); ++it) {
      if (it->first < 1) throw std::invalid_argument("Partition: parts must be >= 1");
      if (it->second < 0) throw std::invalid_argument("Partition: negative multiplicity");
      for (int k = 0; k < it->second; ++k) parts.push_back(it->first);
    }
    return Partition(std::move(parts), SortedTag{});
  }

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](int i) const { return parts_.at(static_cast<size_t>(i)); }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }
  int smallest() const { return parts_.empty() ? 0 : parts_.back(); }

  int norm() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  int multiplicity(int value) const {
    int c = 0;
    for (int p : parts_) c += (p == value);
    return c;
  }

  bool contains(int value) const { return multiplicity(value) > 0; }

  std::map<int, int> frequencies() const {
    std::map<int, int> f;
    for (int p : parts_) ++f[p];
    return f;
  }

  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
  bool operator<(const Partition& o) const { return parts_ < o.parts_; }

 private:
  std::vector<int> parts_;
};

// "(8,3,1)"; the empty partition prints as "()".
inline std::string format_partition(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

// Ascending frequency notation: "1^2 3^1".
inline std::string format_frequencies(const Partition& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [value, count] : p.frequencies()) {
    if (!first) os << ' ';
    os << value << '^' << count;
    first = false;
  }
  return os.str();
}

// Accepts both "(8,3,1)" (parens optional, any order) and frequency
// notation "1^2 3^1".
inline Partition parse_partition(const std::string& text) {
  std::string s;
  for (char c : text) s += std::isspace(static_cast<unsigned char>(c)) ? ' ' : c;
  // trim
  size_t b = s.find_first_not_of(' ');
  size_t e = s.find_last_not_of(' ');
  s = (b == std::string::npos) ? "" : s.substr(b, e - b + 1);
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  b = s.find_first_not_of(' ');
  if (b == std::string::npos) return Partition();
  auto parse_int = [](const std::string& tok) {
    size_t pos = 0;
    int v = std::stoi(tok, &pos);
    if (pos != tok.size()) throw std::invalid_argument("parse_partition: bad integer '" + tok + "'");
    return v;
  };
  if (s.find('^') != std::string::npos) {
    std::map<int, int> freq;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) {
      size_t caret = tok.find('^');
      if (caret == std::string::npos || caret == 0 || caret + 1 == tok.size())
        throw std::invalid_argument("parse_partition: bad frequency token '" + tok + "'");
      int value = parse_int(tok.substr(0, caret));
      int count = parse_int(tok.substr(caret + 1));
      if (value < 1 || count < 0)
        throw std::invalid_argument("parse_partition: bad frequency token '" + tok + "'");
      freq[value] += count;
    }
    return Partition::from_frequencies(freq);
  }
  std::vector<int> parts;
  std::string tok;
  std::istringstream is(s);
  while (std::getline(is, tok, ',')) {
    size_t tb = tok.find_first_not_of(' ');
    size_t te = tok.find_last_not_of(' ');
    if (tb == std::string::npos) throw std::invalid_argument("parse_partition: empty part");
    parts.push_back(parse_int(tok.substr(tb, te - tb + 1)));
  }
  return Partition(std::move(parts));
}

// Streams the partitions of n as descending part lists in
// reverse-lexicographic order: (n), (n-1,1), ..., (1,...,1).
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("PartitionEnumerator: n must be >= 0");
  }

  // Returns the next partition's parts, or nullptr when exhausted.
  // The pointee is reused between calls.
  const std::vector<int>* next() {
    if (done_) return nullptr;
    if (first_) {
      first_ = false;
      if (n_ > 0) cur_.assign(1, n_);
      return &cur_;
    }
    // Rightmost part > 1 sheds one unit; the tail is repacked greedily.
    int k = static_cast<int>(cur_.size()) - 1;
    while (k >= 0 && cur_[static_cast<size_t>(k)] == 1) --k;
    if (k < 0) {
      done_ = true;
      return nullptr;
    }
    int rem = static_cast<int>(cur_.size()) - 1 - k + 1;  // shed unit + trailing ones
    int m = --cur_[static_cast<size_t>(k)];
    cur_.resize(static_cast<size_t>(k) + 1);
    while (rem > m) {
      cur_.push_back(m);
      rem -= m;
    }
    cur_.push_back(rem);
    return &cur_;
  }

 private:
  int n_;
  bool first_ = true;
  bool done_ = false;
  std::vector<int> cur_;
};

template <typename F>
inline void for_each_partition(int n, F&& f) {
  PartitionEnumerator en(n);
  while (const std::vector<int>* parts = en.next())
    f(Partition(std::vector<int>(*parts), Partition::SortedTag{}));
}

inline std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](Partition p) { out.push_back(std::move(p)); });
  return out;
}

inline long count_partitions(int n) {
  long c = 0;
  PartitionEnumerator en(n);
  while (en.next()) ++c;
  return c;
}

// Ferrers transpose.
inline Partition conjugate(const Partition& p) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(p.largest()));
  for (int j = 1; j <= p.largest(); ++j) {
    int col = 0;
    for (int i = 0; i < p.size(); ++i) col += (p[i] >= j);
    out.push_back(col);
  }
  return Partition(std::move(out), Partition::SortedTag{});
}

// 2-modular Ferrers diagrams exist only when odd parts are distinct: row i
// holds ceil(part/2) boxes labelled 2, the last downgraded to 1 when the
// part is odd.  The conjugate reads columns, summing labels.
inline bool mod2_admissible(const Partition& p) {
  for (int i = 0; i + 1 < p.size(); ++i)
    if (p[i] == p[i + 1] && p[i] % 2 == 1) return false;
  return true;
}

inline Partition mod2_conjugate(const Partition& p) {
  if (!mod2_admissible(p))
    throw DomainError("mod2_conjugate: repeated odd part, no 2-modular diagram");
  const int cols = (p.largest() + 1) / 2;
  std::vector<int> out;
  out.reserve(static_cast<size_t>(cols));
  for (int j = 1; j <= cols; ++j) {
    int sum = 0;
    for (int i = 0; i < p.size(); ++i) {
      const int row_cols = (p[i] + 1) / 2;
      if (row_cols < j) continue;
      sum += (row_cols == j && p[i] % 2 == 1) ? 1 : 2;
    }
    out.push_back(sum);
  }
  return Partition(std::move(out), Partition::SortedTag{});
}

// ---- part statistics ----------------------------------------------------

// Least positive integer that is not a part.
inline int smallest_missing(const Partition& p) {
  int v = 1;
  while (p.contains(v)) ++v;
  return v;
}

// Least positive odd integer that is not a part.
inline int smallest_missing_odd(const Partition& p) {
  int v = 1;
  while (p.contains(v)) v += 2;
  return v;
}

// Number of different part sizes.
inline int num_distinct_parts(const Partition& p) {
  int c = 0;
  for (int i = 0; i < p.size(); ++i) c += (i == 0 || p[i] != p[i - 1]);
  return c;
}

inline int num_distinct_even_parts(const Partition& p) {
  int c = 0;
  for (int i = 0; i < p.size(); ++i)
    c += (p[i] % 2 == 0 && (i == 0 || p[i] != p[i - 1]));
  return c;
}

// Number of different odd part sizes >= bound.
inline int num_distinct_odd_ge(const Partition& p, int bound) {
  int c = 0;
  for (int i = 0; i < p.size(); ++i)
    c += (p[i] % 2 == 1 && p[i] >= bound && (i == 0 || p[i] != p[i - 1]));
  return c;
}

inline int mu_odd_ge(const Partition& p, int bound) {
  return num_distinct_odd_ge(p, bound);
}

// One-stop summary of the counting statistics used by the weight functions.
struct PartitionStats {
  int nu = 0;                   // number of parts
  int nu_d = 0;                 // number of different part sizes
  int nu_de = 0;                // number of different even part sizes
  int smallest_missing = 1;     // least positive integer that is not a part
  int smallest_missing_odd = 1; // least positive odd integer that is not a part
};

inline PartitionStats stats(const Partition& p) {
  PartitionStats s;
  s.nu = p.size();
  s.nu_d = num_distinct_parts(p);
  s.nu_de = num_distinct_even_parts(p);
  s.smallest_missing = smallest_missing(p);
  s.smallest_missing_odd = smallest_missing_odd(p);
  return s;
}

// Number of different even parts exceeding the smallest missing positive
// odd integer.
inline int tau(const Partition& p) {
  const int m = smallest_missing_odd(p);
  int c = 0;
  for (int i = 0; i < p.size(); ++i)
    c += (p[i] % 2 == 0 && p[i] > m && (i == 0 || p[i] != p[i - 1]));
  return c;
}

// ---- elementary predicates ----------------------------------------------

inline bool has_distinct_parts(const Partition& p) {
  for (int i = 0; i + 1 < p.size(); ++i)
    if (p[i] == p[i + 1]) return false;
  return true;
}

inline bool has_distinct_odd_parts(const Partition& p) {
  for (int i = 0; i + 1 < p.size(); ++i)
    if (p[i] == p[i + 1] && p[i] % 2 == 1) return false;
  return true;
}

inline bool gaps_at_least_two(const Partition& p) {
  for (int i = 0; i + 1 < p.size(); ++i)
    if (p[i] - p[i + 1] < 2) return false;
  return true;
}

// Gap >= 2, smallest part >= 2i-1, and a gap of exactly 2 only below an odd
// part (equivalently: no two consecutive even numbers both appear).
inline bool in_gg(const Partition& p, int i) {
  if (p.empty()) return true;
  if (p.smallest() < 2 * i - 1) return false;
  for (int k = 0; k + 1 < p.size(); ++k) {
    const int gap = p[k] - p[k + 1];
    if (gap < 2) return false;
    if (gap == 2 && p[k] % 2 == 0) return false;
  }
  return true;
}

// Distinct odd parts and, when the smallest part is 2, one of the two
// admissible frequency prefixes:
//   (a) evens 2,4,...,4j-2 all present, odds below 4j-1 absent, 4j-1 a part;
//   (b) evens 2,4,...,4j all present, odds below 4j+1 absent, and neither
//       4j+1 nor 4j+2 a part.
inline bool in_p_rdo(const Partition& p) {
  if (!has_distinct_odd_parts(p)) return false;
  if (p.empty()) return true;
  if (p.smallest() == 1) return false;
  if (p.smallest() > 2) return true;
  const auto freq = p.frequencies();
  auto f = [&](int v) {
    auto it = freq.find(v);
    return it == freq.end() ? 0 : it->second;
  };
  for (int j = 1; 4 * j - 2 <= p.largest() + 3; ++j) {
    bool ok = true;  // prefix (a) with this j
    for (int v = 2; ok && v <= 4 * j - 2; v += 2) ok = f(v) >= 1;
    for (int v = 1; ok && v < 4 * j - 1; v += 2) ok = f(v) == 0;
    if (ok && f(4 * j - 1) == 1) return true;
    ok = true;  // prefix (b) with this j
    for (int v = 2; ok && v <= 4 * j; v += 2) ok = f(v) >= 1;
    for (int v = 1; ok && v < 4 * j + 1; v += 2) ok = f(v) == 0;
    if (ok && f(4 * j + 1) == 0 && f(4 * j + 2) == 0) return true;
  }
  return false;
}

// m = smallest missing positive integer must be odd, 2m must not be a part,
// evens below m appear at least twice, odds below m at most twice, and odds
// above m are never repeated.
inline bool in_a(const Partition& p) {
  const int m = smallest_missing(p);
  if (m % 2 == 0) return false;
  if (p.contains(2 * m)) return false;
  const auto freq = p.frequencies();
  for (const auto& [v, f] : freq) {
    if (v < m && v % 2 == 0 && f < 2) return false;
    if (v < m && v % 2 == 1 && f > 2) return false;
    if (v > m && v % 2 == 1 && f > 1) return false;
  }
  return true;
}

// Distinct odd parts and odd smallest missing positive integer.
inline bool in_p_dom(const Partition& p) {
  return has_distinct_odd_parts(p) && smallest_missing(p) % 2 == 1;
}

// With 2j+1 the smallest odd non-part: every even number <= j is a part and
// every odd number <= j appears at least twice.
inline bool in_u_ic(const Partition& p) {
  const int j = (smallest_missing_odd(p) - 1) / 2;
  for (int v = 2; v <= j; v += 2)
    if (!p.contains(v)) return false;
  for (int v = 1; v <= j; v += 2)
    if (p.multiplicity(v) < 2) return false;
  return true;
}

// ---- named families ------------------------------------------------------

enum class SetId { U, Un, D, RR, GG1, GG2, Pdo, Prdo, A, Pdom, Uic };

class SetPredicate {
 public:
  static SetPredicate U() { return SetPredicate(SetId::U); }
  static SetPredicate U_n(int n) { return SetPredicate(SetId::Un, n); }
  static SetPredicate D() { return SetPredicate(SetId::D); }
  static SetPredicate RR() { return SetPredicate(SetId::RR); }
  static SetPredicate GG(int i) {
    if (i != 1 && i != 2) throw std::invalid_argument("SetPredicate: GG index must be 1 or 2");
    return SetPredicate(i == 1 ? SetId::GG1 : SetId::GG2);
  }
  static SetPredicate P_do() { return SetPredicate(SetId::Pdo); }
  static SetPredicate P_rdo() { return SetPredicate(SetId::Prdo); }
  static SetPredicate A() { return SetPredicate(SetId::A); }
  static SetPredicate P_dom() { return SetPredicate(SetId::Pdom); }
  static SetPredicate U_ic() { return SetPredicate(SetId::Uic); }

  static const std::vector<std::string>& names() {
    static const std::vector<std::string> n = {"U",    "U_n",  "D", "RR",
                                               "GG1",  "GG2",  "P_do",
                                               "P_rdo", "A",   "P_dom", "U_ic"};
    return n;
  }

  // "U_n" takes its bound after a colon: "U_n:5".
  static SetPredicate by_name(const std::string& name) {
    if (name == "U") return U();
    if (name == "D") return D();
    if (name == "RR") return RR();
    if (name == "GG1") return GG(1);
    if (name == "GG2") return GG(2);
    if (name == "P_do") return P_do();
    if (name == "P_rdo") return P_rdo();
    if (name == "A") return A();
    if (name == "P_dom") return P_dom();
    if (name == "U_ic") return U_ic();
    if (name.rfind("U_n:", 0) == 0) return U_n(std::stoi(name.substr(4)));
    throw std::invalid_argument("SetPredicate: unknown set '" + name + "'");
  }

  SetId id() const { return id_; }

  std::string name() const {
    switch (id_) {
      case SetId::U: return "U";
      case SetId::Un: return "U_n:" + std::to_string(param_);
      case SetId::D: return "D";
      case SetId::RR: return "RR";
      case SetId::GG1: return "GG1";
      case SetId::GG2: return "GG2";
      case SetId::Pdo: return "P_do";
      case SetId::Prdo: return "P_rdo";
      case SetId::A: return "A";
      case SetId::Pdom: return "P_dom";
      case SetId::Uic: return "U_ic";
    }
    return "?";
  }

  bool contains(const Partition& p) const {
    switch (id_) {
      case SetId::U: return true;
      case SetId::Un: return p.largest() <= param_;
      case SetId::D: return has_distinct_parts(p);
      case SetId::RR: return gaps_at_least_two(p);
      case SetId::GG1: return in_gg(p, 1);
      case SetId::GG2: return in_gg(p, 2);
      case SetId::Pdo: return has_distinct_odd_parts(p);
      case SetId::Prdo: return in_p_rdo(p);
      case SetId::A: return in_a(p);
      case SetId::Pdom: return in_p_dom(p);
      case SetId::Uic: return in_u_ic(p);
    }
    return false;
  }

 private:
  explicit SetPredicate(SetId id, int param = 0) : id_(id), param_(param) {}
  SetId id_;
  int param_;
};

inline long count_in(const SetPredicate& set, int n) {
  long c = 0;
  for_each_partition(n, [&](const Partition& p) { c += set.contains(p); });
  return c;
}

}  // namespace qpart
