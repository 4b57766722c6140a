// Truncated formal power series in q with exact integer coefficients.
//
// A QSeries of order N stores the coefficients of q^0 .. q^N inclusive.
// All binary operations require both operands to have the same order;
// mixing orders is a hard error, not a silent re-truncation.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qpart/bigint.hpp"
#include "qpart/errors.hpp"

namespace qpart {

class QSeries {
 public:
  // Zero series of the given truncation order.
  explicit QSeries(int order) : coeffs_(static_cast<size_t>(check_order(order)) + 1) {}

  QSeries(int order, std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    check_order(order);
    if (coeffs_.size() != static_cast<size_t>(order) + 1)
      throw std::invalid_argument("QSeries: coefficient list must have order+1 entries");
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const BigInt& operator[](int n) const {
    if (n < 0 || n > order())
      throw std::out_of_range("QSeries: exponent " + std::to_string(n) +
                              " outside [0, " + std::to_string(order()) + "]");
    return coeffs_[static_cast<size_t>(n)];
  }

  BigInt& at(int n) { return coeffs_.at(static_cast<size_t>(n)); }

  const std::vector<BigInt>& coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  // Smallest exponent with nonzero coefficient, or nullopt for the zero series.
  std::optional<int> min_exponent() const {
    for (int n = 0; n <= order(); ++n)
      if (coeffs_[static_cast<size_t>(n)] != 0) return n;
    return std::nullopt;
  }

  bool operator==(const QSeries& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const QSeries& other) const { return !(*this == other); }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("QSeries: order must be >= 0");
    return order;
  }
  std::vector<BigInt> coeffs_;
};

inline void require_same_order(const QSeries& a, const QSeries& b, const char* op) {
  if (a.order() != b.order())
    throw OrderMismatchError(std::string(op) + ": operand orders differ (" +
                             std::to_string(a.order()) + " vs " +
                             std::to_string(b.order()) + ")");
}

inline QSeries one(int order) {
  QSeries r(order);
  r.at(0) = 1;
  return r;
}

// q^exponent as a series; exponents beyond the order truncate to zero.
inline QSeries monomial(int exponent, int order) {
  if (exponent < 0) throw std::invalid_argument("monomial: negative exponent");
  QSeries r(order);
  if (exponent <= order) r.at(exponent) = 1;
  return r;
}

inline QSeries add(const QSeries& a, const QSeries& b) {
  require_same_order(a, b, "add");
  QSeries r(a.order());
  for (int n = 0; n <= a.order(); ++n) r.at(n) = a[n] + b[n];
  return r;
}

inline QSeries sub(const QSeries& a, const QSeries& b) {
  require_same_order(a, b, "sub");
  QSeries r(a.order());
  for (int n = 0; n <= a.order(); ++n) r.at(n) = a[n] - b[n];
  return r;
}

inline QSeries negate(const QSeries& a) {
  QSeries r(a.order());
  for (int n = 0; n <= a.order(); ++n) r.at(n) = -a[n];
  return r;
}

inline QSeries scale(const QSeries& a, const BigInt& c) {
  QSeries r(a.order());
  for (int n = 0; n <= a.order(); ++n) r.at(n) = c * a[n];
  return r;
}

// Cauchy product truncated at the common order.
inline QSeries mul(const QSeries& a, const QSeries& b) {
  require_same_order(a, b, "mul");
  const int N = a.order();
  QSeries r(N);
  for (int i = 0; i <= N; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= N; ++j) {
      if (b[j] == 0) continue;
      r.at(i + j) += a[i] * b[j];
    }
  }
  return r;
}

// Multiplicative inverse; requires constant term +1 or -1 so that the
// inverse has integer coefficients (b_n = -c_0 * sum_{k>=1} c_k b_{n-k}).
inline QSeries reciprocal(const QSeries& a) {
  if (a[0] != 1 && a[0] != -1)
    throw DomainError("reciprocal: constant term must be +1 or -1, got " +
                      to_string(a[0]));
  const int N = a.order();
  QSeries b(N);
  b.at(0) = a[0];
  for (int n = 1; n <= N; ++n) {
    BigInt acc = 0;
    for (int k = 1; k <= n; ++k) acc += a[k] * b[n - k];
    b.at(n) = -a[0] * acc;
  }
  return b;
}

inline QSeries div(const QSeries& a, const QSeries& b) {
  require_same_order(a, b, "div");
  return mul(a, reciprocal(b));
}

inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator-(const QSeries& a) { return negate(a); }

// Re-truncate to a lower (or equal) order.
inline QSeries truncate(const QSeries& a, int new_order) {
  if (new_order < 0 || new_order > a.order())
    throw std::invalid_argument("truncate: new order outside [0, order]");
  std::vector<BigInt> c(a.coefficients().begin(),
                        a.coefficients().begin() + new_order + 1);
  return QSeries(new_order, std::move(c));
}

inline bool equal_up_to(const QSeries& a, const QSeries& b, int m) {
  if (m < 0 || m > a.order() || m > b.order())
    throw std::invalid_argument("equal_up_to: bound outside both orders");
  for (int n = 0; n <= m; ++n)
    if (a[n] != b[n]) return false;
  return true;
}

// In-place multiply by the sparse factor (1 + c*q^e); the workhorse behind
// pochhammer products. e > order is a no-op at this truncation.
inline void mul_binomial_inplace(QSeries& a, const BigInt& c, long e) {
  if (e < 0) throw std::invalid_argument("mul_binomial_inplace: negative exponent");
  const int N = a.order();
  if (e > N) return;
  if (e == 0) {
    const BigInt f = 1 + c;
    for (int n = 0; n <= N; ++n) a.at(n) *= f;
    return;
  }
  for (int n = N; n >= static_cast<int>(e); --n) a.at(n) += c * a[n - static_cast<int>(e)];
}

inline QSeries binomial_factor(const BigInt& c, long e, int order) {
  QSeries r = one(order);
  mul_binomial_inplace(r, c, e);
  return r;
}

// q-Pochhammer specification: the symbol (sign*q^offset ; q^step)_length,
// i.e. the product over k of (1 - sign * q^(offset + k*step)).
// length == nullopt means the infinite product (truncated at the order).
struct PochSpec {
  int sign;                     // +1 or -1, the sign written inside the symbol
  long offset;                  // exponent a in (s*q^a; q^b)
  long step;                    // exponent b, must be >= 1
  std::optional<long> length;   // number of factors; nullopt = infinite

  void validate() const {
    if (sign != 1 && sign != -1) throw std::invalid_argument("PochSpec: sign must be +-1");
    if (offset < 0) throw std::invalid_argument("PochSpec: offset must be >= 0");
    if (step < 1) throw std::invalid_argument("PochSpec: step must be >= 1");
    if (length && *length < 0) throw std::invalid_argument("PochSpec: length must be >= 0");
  }

  std::string text() const {
    std::ostringstream os;
    os << '(' << (sign < 0 ? "-" : "") << 'q';
    if (offset != 1) os << '^' << offset;
    os << ";q";
    if (step != 1) os << '^' << step;
    os << ')';
    if (length)
      os << '_' << *length;
    else
      os << "_inf";
    return os.str();
  }
};

inline QSeries pochhammer(const PochSpec& spec, int order) {
  spec.validate();
  QSeries r = one(order);
  const BigInt c = -spec.sign;  // factor is (1 - sign*q^e)
  if (spec.length) {
    for (long k = 0; k < *spec.length; ++k) {
      const long e = spec.offset + k * spec.step;
      if (e > order) continue;  // factor invisible at this truncation
      mul_binomial_inplace(r, c, e);
    }
  } else {
    if (spec.offset == 0)
      throw std::invalid_argument("pochhammer: infinite product needs offset >= 1");
    for (long e = spec.offset; e <= order; e += spec.step) mul_binomial_inplace(r, c, e);
  }
  return r;
}

inline QSeries pochhammer(int sign, long offset, long step,
                          std::optional<long> length, int order) {
  return pochhammer(PochSpec{sign, offset, step, length}, order);
}

constexpr long kDefaultDivergenceGuard = 10000;

// Sum term(start) + term(start+1) + ... stopping at the first index whose
// term vanishes at this truncation (all exponents beyond the order).
// Aborts if `guard` consecutive terms keep contributing, which signals a
// sum whose minimum exponent does not grow.
inline QSeries sum_of_terms(const std::function<QSeries(long)>& term, int order,
                            long start = 0, long guard = kDefaultDivergenceGuard) {
  QSeries acc(order);
  for (long n = start;; ++n) {
    if (n - start >= guard)
      throw DivergenceError("sum_of_terms: " + std::to_string(guard) +
                            " consecutive terms stayed below order " +
                            std::to_string(order));
    QSeries t = term(n);
    require_same_order(acc, t, "sum_of_terms");
    if (t.is_zero()) break;
    acc = add(acc, t);
  }
  return acc;
}

inline std::string to_string(const QSeries& a) {
  std::ostringstream os;
  bool printed = false;
  for (int n = 0; n <= a.order(); ++n) {
    const BigInt& c = a[n];
    if (c == 0) continue;
    if (printed)
      os << (c > 0 ? " + " : " - ");
    else if (c < 0)
      os << "-";
    BigInt m = abs(c);
    if (n == 0)
      os << m.get_str();
    else {
      if (m != 1) os << m.get_str() << "*";
      os << "q";
      if (n != 1) os << "^" << n;
    }
    printed = true;
  }
  if (!printed) os << "0";
  os << " + O(q^" << (a.order() + 1) << ")";
  return os.str();
}

}  // namespace qpart
