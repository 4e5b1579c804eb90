#pragma once

// Powers of the Catalan generating series T = 1 + t + 2t^2 + 5t^3 + ...,
// which satisfies T = 1 + t T^2. Everything here is a finite truncation.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hypercat/bigint.hpp"

namespace hypercat::catpow {

/// Dense polynomial in t with exact coefficients; no trailing zeros.
class UniPoly {
 public:
  static constexpr std::ptrdiff_t kZeroDegree = std::numeric_limits<std::ptrdiff_t>::min();

  UniPoly() = default;
  explicit UniPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  UniPoly(std::initializer_list<long long> coeffs) {
    for (auto c : coeffs) coeffs_.emplace_back(c);
    normalize();
  }

  static UniPoly monomial(std::size_t degree, const BigInt& c = 1) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
  }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Degree, or kZeroDegree (standing in for minus infinity) for 0.
  std::ptrdiff_t degree() const {
    return coeffs_.empty() ? kZeroDegree : static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }

  BigInt operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  UniPoly& operator+=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return mul_truncated(a, b, a.coeffs_.size() + b.coeffs_.size() - 2);
  }

  /// Product keeping degrees <= order.
  friend UniPoly mul_truncated(const UniPoly& a, const UniPoly& b, std::size_t order) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(std::min(order + 1, a.coeffs_.size() + b.coeffs_.size() - 1));
    for (std::size_t i = 0; i < a.coeffs_.size() && i < out.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size() && i + j < out.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return UniPoly(std::move(out));
  }

  /// Drops degrees above `order`.
  UniPoly truncated(std::size_t order) const {
    if (coeffs_.size() <= order + 1) return *this;
    return UniPoly(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
  }

  bool operator==(const UniPoly&) const = default;

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<BigInt> coeffs_;
};

/// "1 - 3 t + t^2"
inline std::string to_string(const UniPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const auto& c = p.coeffs()[i];
    if (c == 0) continue;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << ' ';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << to_string(p); }

/// C_n = binom(2n, n) / (n + 1).
inline BigNat catalan(std::size_t n) {
  return exact_quotient(binomial(2 * n, n), BigInt(n + 1), "catalan");
}

/// [t^m] T^r = r/(2m+r) binom(2m+r, m) = r (2m+r-1)! / ((m+r)! m!).
inline BigNat catalan_power(std::size_t r, std::size_t m) {
  if (r < 1) throw std::invalid_argument("catalan_power: r must be >= 1");
  return exact_quotient(BigInt(r) * factorial(2 * m + r - 1), factorial(m + r) * factorial(m),
                        "catalan_power");
}

/// T truncated to degree <= order.
inline UniPoly catalan_series(std::size_t order) {
  std::vector<BigInt> c;
  c.reserve(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c.push_back(catalan(n));
  return UniPoly(std::move(c));
}

/// T^r truncated to degree <= order, by repeated truncated multiplication.
inline UniPoly catalan_series_power(std::size_t r, std::size_t order) {
  const auto t = catalan_series(order);
  UniPoly out{1};
  for (std::size_t i = 0; i < r; ++i) out = mul_truncated(out, t, order);
  return out;
}

/// P_0 = 0, P_1 = 1, P_r = P_{r-1} - t P_{r-2}.
inline UniPoly p_poly(std::size_t r) {
  UniPoly prev;      // P_0
  UniPoly cur{1};    // P_1
  if (r == 0) return prev;
  const auto t = UniPoly::monomial(1);
  for (std::size_t i = 2; i <= r; ++i) {
    auto next = cur - t * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Q_1 = 0 and Q_{r+1} = -P_r.
inline UniPoly q_poly(std::size_t r) {
  if (r < 1) throw std::invalid_argument("q_poly: r must be >= 1");
  return -p_poly(r - 1);
}

/// t^(r-1) T^r - (P_r T + Q_r), computed with T truncated at order d + r and
/// compared through degree d. The identity says this is zero.
inline UniPoly verify_power_identity(std::size_t r, std::size_t d) {
  if (r < 1) throw std::invalid_argument("verify_power_identity: r must be >= 1");
  const std::size_t order = d + r;
  const auto t_series = catalan_series(order);
  const auto lhs = UniPoly::monomial(r - 1) * catalan_series_power(r, order);
  const auto rhs = mul_truncated(p_poly(r), t_series, order) + q_poly(r);
  return (lhs - rhs).truncated(d);
}

/// C^(r)_m = C^(r-1)_{m+1} - C^(r-2)_{m+1}, both sides from the closed form.
inline bool power_recurrence_check(std::size_t r, std::size_t m) {
  if (r < 3) throw std::invalid_argument("power_recurrence_check: r must be >= 3");
  return catalan_power(r, m) == catalan_power(r - 1, m + 1) - catalan_power(r - 2, m + 1);
}

}  // namespace hypercat::catpow
