#pragma once

// Closed-form hyper-Catalan combinatorics over subdigon type vectors.
//
// A type vector m = [m2, m3, ...] counts the faces of a subdigon: m_k faces
// are (k+1)-gons. From m alone we get the vertex/edge/face counts, the number
// of subdigons of that type, the number with a given central polygon, the
// coefficients of powers of the series zero, and Raney's list count.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypercat/bigint.hpp"

namespace hypercat {

/// Index k of a (k+1)-gon; always >= 2.
using Gon = std::uint32_t;
using Count = std::uint32_t;

inline constexpr Gon kMinGon = 2;

/// Sparse multiset of polygon sizes: the exponent vector of t^m.
///
/// Stored as (k, m_k) pairs sorted by k with every m_k >= 1, so structural
/// equality is equality of types.
class TypeVector {
 public:
  struct Entry {
    Gon k;
    Count count;
    auto operator<=>(const Entry&) const = default;
  };

  TypeVector() = default;

  /// From (k, m_k) pairs in any order. Zero counts are dropped and repeated k
  /// accumulate.
  TypeVector(std::initializer_list<std::pair<Gon, Count>> pairs) {
    for (auto [k, c] : pairs) add(k, c);
  }

  /// From the dense form [m2, m3, ..., mq]; trailing zeros allowed.
  static TypeVector from_dense(std::span<const Count> dense) {
    TypeVector out;
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (dense[i] != 0) out.entries_.push_back({static_cast<Gon>(i + kMinGon), dense[i]});
    }
    return out;
  }

  static TypeVector from_dense(std::initializer_list<Count> dense) {
    return from_dense(std::span<const Count>(dense.begin(), dense.size()));
  }

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  Count operator[](Gon k) const {
    auto it = find(k);
    return it != entries_.end() && it->k == k ? it->count : 0;
  }

  /// Largest k with m_k > 0, or 0 for the empty type.
  Gon max_gon() const { return entries_.empty() ? 0 : entries_.back().k; }

  std::vector<Count> dense() const {
    std::vector<Count> out;
    if (empty()) return out;
    out.assign(max_gon() - kMinGon + 1, 0);
    for (const auto& e : entries_) out[e.k - kMinGon] = e.count;
    return out;
  }

  /// Adds `delta` copies of the (k+1)-gon.
  TypeVector& add(Gon k, Count delta) {
    check_gon(k);
    if (delta == 0) return *this;
    auto it = find(k);
    if (it != entries_.end() && it->k == k) {
      it->count += delta;
    } else {
      entries_.insert(it, Entry{k, delta});
    }
    return *this;
  }

  /// Removes `delta` copies of the (k+1)-gon; throws if fewer are present.
  TypeVector& remove(Gon k, Count delta) {
    if (delta == 0) return *this;
    auto it = find(k);
    if (it == entries_.end() || it->k != k || it->count < delta) {
      throw std::domain_error("TypeVector: removing more gons than present");
    }
    it->count -= delta;
    if (it->count == 0) entries_.erase(it);
    return *this;
  }

  TypeVector& operator+=(const TypeVector& other) {
    for (const auto& e : other.entries_) add(e.k, e.count);
    return *this;
  }

  TypeVector& operator-=(const TypeVector& other) {
    for (const auto& e : other.entries_) remove(e.k, e.count);
    return *this;
  }

  friend TypeVector operator+(TypeVector a, const TypeVector& b) { return a += b; }
  friend TypeVector operator-(TypeVector a, const TypeVector& b) { return a -= b; }

  /// Entrywise a <= b.
  bool divides(const TypeVector& other) const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [&](const Entry& e) { return other[e.k] >= e.count; });
  }

  // Structural order on the sorted entry list. Only used for container keys;
  // display and division use monomial_greater.
  auto operator<=>(const TypeVector&) const = default;

 private:
  static void check_gon(Gon k) {
    if (k < kMinGon) throw std::invalid_argument("TypeVector: gon index must be >= 2");
  }

  std::vector<Entry>::iterator find(Gon k) {
    return std::lower_bound(entries_.begin(), entries_.end(), k,
                            [](const Entry& e, Gon key) { return e.k < key; });
  }
  std::vector<Entry>::const_iterator find(Gon k) const {
    return std::lower_bound(entries_.begin(), entries_.end(), k,
                            [](const Entry& e, Gon key) { return e.k < key; });
  }

  std::vector<Entry> entries_;
};

/// Lexicographic monomial order with t2 > t3 > t4 > ...: compares the dense
/// exponent vectors and the first larger exponent wins. This is the order the
/// layer tables print terms in.
inline bool monomial_greater(const TypeVector& a, const TypeVector& b) {
  const auto& ea = a.entries();
  const auto& eb = b.entries();
  std::size_t i = 0;
  for (; i < ea.size() && i < eb.size(); ++i) {
    if (ea[i].k != eb[i].k) return ea[i].k < eb[i].k;  // a has a smaller variable b lacks
    if (ea[i].count != eb[i].count) return ea[i].count > eb[i].count;
  }
  return i < ea.size() && i == eb.size();
}

/// m with m_j = 1 and every other entry 0.
inline TypeVector unit_type(Gon j) {
  if (j < kMinGon) throw std::invalid_argument("unit_type: gon index must be >= 2");
  TypeVector out;
  out.add(j, 1);
  return out;
}

/// Face count F = sum m_k.
inline std::size_t face_count(const TypeVector& m) {
  std::size_t f = 0;
  for (const auto& e : m.entries()) f += e.count;
  return f;
}

/// m! = m2! m3! ...
inline BigInt type_factorial(const TypeVector& m) {
  BigInt out = 1;
  for (const auto& e : m.entries()) out *= factorial(e.count);
  return out;
}

struct VEF {
  std::size_t vertices;
  std::size_t edges;
  std::size_t faces;
  bool operator==(const VEF&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const VEF& v) {
  return os << "V=" << v.vertices << " E=" << v.edges << " F=" << v.faces;
}

inline VEF vef(const TypeVector& m) {
  VEF out{2, 1, 0};
  for (const auto& e : m.entries()) {
    out.vertices += static_cast<std::size_t>(e.k - 1) * e.count;
    out.edges += static_cast<std::size_t>(e.k) * e.count;
    out.faces += e.count;
  }
  return out;
}

/// Number of subdigons of type m: (E-1)! / ((V-1)! m!).
inline BigNat hyper_catalan(const TypeVector& m) {
  const auto [v, e, f] = vef(m);
  return exact_quotient(factorial(e - 1), factorial(v - 1) * type_factorial(m), "hyper_catalan");
}

/// Number of subdigons of type m whose central polygon is an (r+1)-gon:
/// r m_r C_m / (E-1), computed as r m_r (E-2)! / ((V-1)! m!).
inline BigNat central_count(const TypeVector& m, Gon r) {
  const Count mr = m[r];
  if (m.empty() || mr == 0) return 0;
  const auto [v, e, f] = vef(m);
  return exact_quotient(BigInt(r) * mr * factorial(e - 2),
                        factorial(v - 1) * type_factorial(m), "central_count");
}

/// Coefficient of t^m in S^r: r (r-2+E)! / ((r-2+V)! m!).
inline BigNat power_coeff(const TypeVector& m, std::size_t r) {
  if (r < 1) throw std::invalid_argument("power_coeff: power must be >= 1");
  const auto [v, e, f] = vef(m);
  return exact_quotient(BigInt(r) * factorial(r - 2 + e), factorial(r - 2 + v) * type_factorial(m),
                        "power_coeff");
}

/// Symbol composition of a Raney string: m0 zeros, m1 ones, and the counts of
/// symbols k >= 2 in `tail`.
struct Composition {
  std::size_t m0 = 0;
  std::size_t m1 = 0;
  TypeVector tail;

  /// The composition of a rank -n list: m0 = n + m2 + 2 m3 + ...
  static Composition for_lists(std::size_t n, std::size_t m1, TypeVector tail) {
    Composition c{n, m1, std::move(tail)};
    for (const auto& e : c.tail.entries()) c.m0 += static_cast<std::size_t>(e.k - 1) * e.count;
    return c;
  }

  std::size_t length() const { return m0 + m1 + face_count(tail); }

  std::ptrdiff_t rank() const {
    std::ptrdiff_t r = -static_cast<std::ptrdiff_t>(m0);
    for (const auto& e : tail.entries()) r += static_cast<std::ptrdiff_t>(e.k - 1) * e.count;
    return r;
  }

  /// All counts in symbol order (m0, m1, m2, ...), zeros included.
  std::vector<std::size_t> counts() const {
    std::vector<std::size_t> out{m0, m1};
    for (auto c : tail.dense()) out.push_back(c);
    return out;
  }

  bool operator==(const Composition&) const = default;
};

/// Raney's L(n, m1, m2, ...): the number of lists of n words with m1 ones,
/// m2 twos, ... and the zeros that make the rank -n. Equals (n/m) times the
/// multinomial of the composition, m the string length.
inline BigNat raney_count(std::size_t n, std::size_t m1, const TypeVector& tail) {
  if (n < 1) throw std::invalid_argument("raney_count: n must be >= 1");
  const auto c = Composition::for_lists(n, m1, tail);
  const auto length = c.length();
  BigInt denominator = factorial(c.m0) * factorial(c.m1) * type_factorial(tail);
  return exact_quotient(BigInt(n) * factorial(length - 1), denominator, "raney_count");
}

// ---------------------------------------------------------------------------
// Text and JSON forms

/// Monomial text such as "t2^2 t3", or "1" for the empty type.
inline std::string monomial_string(const TypeVector& m) {
  if (m.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& e : m.entries()) {
    if (!first) os << ' ';
    first = false;
    os << 't' << e.k;
    if (e.count != 1) os << '^' << e.count;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const TypeVector& m) {
  os << '[';
  auto d = m.dense();
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  return os << ']';
}

inline std::string to_string(const TypeVector& m) {
  std::string out = "[";
  const auto d = m.dense();
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
  return out + "]";
}

/// Parses "2,1", "[2,1]", "2 1" or "" into the dense type [m2, m3, ...].
inline TypeVector parse_type_vector(std::string_view text) {
  std::vector<Count> dense;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw std::invalid_argument("bad type vector entry '" + token + "'");
    dense.push_back(static_cast<Count>(value));
    token.clear();
  };
  for (char ch : text) {
    if (ch == '[' || ch == ']') continue;
    if (ch == ',' || ch == ' ' || ch == '\t') {
      flush();
    } else {
      token.push_back(ch);
    }
  }
  flush();
  return TypeVector::from_dense(dense);
}

inline void to_json(nlohmann::json& j, const TypeVector& m) { j = m.dense(); }

inline void from_json(const nlohmann::json& j, TypeVector& m) {
  if (!j.is_array()) throw std::invalid_argument("type vector JSON must be an array");
  m = TypeVector::from_dense(j.get<std::vector<Count>>());
}

}  // namespace hypercat
