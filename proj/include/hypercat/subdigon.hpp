#pragma once

// Subdigons: roofed polygons subdivided by non-crossing diagonals, kept as
// their recursive structure only. A subdigon is the null subdigon or a
// central (k+1)-gon with k child subdigons glued roof-to-side in order.
//
// This module is the brute-force oracle for the closed forms in core.hpp.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypercat/bigint.hpp"
#include "hypercat/core.hpp"
#include "hypercat/notation.hpp"
#include "hypercat/series.hpp"

namespace hypercat {

class Subdigon {
 public:
  /// The null subdigon: two vertices, one edge, no faces.
  Subdigon() = default;

  static Subdigon null() { return Subdigon(); }

  /// Central (k+1)-gon with `children` attached to sides 1..k.
  static Subdigon panel(Gon k, std::vector<Subdigon> children) {
    if (k < kMinGon) throw std::invalid_argument("panel: arity must be >= 2");
    if (children.size() != k) {
      throw std::invalid_argument("panel: arity " + std::to_string(k) + " needs " + std::to_string(k) +
                                  " children, got " + std::to_string(children.size()));
    }
    Subdigon s;
    s.node_ = std::make_shared<const Node>(Node{k, std::move(children)});
    return s;
  }

  bool is_null() const { return node_ == nullptr; }

  /// k of the central polygon, 0 for null.
  Gon arity() const { return node_ ? node_->arity : 0; }

  std::span<const Subdigon> children() const {
    if (!node_) return {};
    return node_->children;
  }

  /// Recovers (k, children) from a non-null subdigon.
  std::pair<Gon, std::vector<Subdigon>> unpanel() const {
    if (!node_) throw std::logic_error("unpanel: null subdigon has no central polygon");
    return {node_->arity, node_->children};
  }

  friend bool operator==(const Subdigon& a, const Subdigon& b) {
    if (a.node_ == b.node_) return true;
    if (!a.node_ || !b.node_) return false;
    return a.node_->arity == b.node_->arity && a.node_->children == b.node_->children;
  }

 private:
  struct Node {
    Gon arity;
    std::vector<Subdigon> children;
  };
  // Immutable and shared: enumeration reuses child subtrees freely.
  std::shared_ptr<const Node> node_;
};

using SubdigonMultiset = std::vector<Subdigon>;

/// m_k = number of nodes of arity k.
inline TypeVector type_of(const Subdigon& s) {
  TypeVector out;
  if (s.is_null()) return out;
  out.add(s.arity(), 1);
  for (const auto& c : s.children()) out += type_of(c);
  return out;
}

/// Counts vertices, edges and faces by gluing: each child shares its two roof
/// vertices and its roof edge with a side of the central polygon.
inline VEF vef_structural(const Subdigon& s) {
  if (s.is_null()) return {2, 1, 0};
  const std::size_t sides = s.arity() + 1;
  VEF out{sides, sides, 1};
  for (const auto& c : s.children()) {
    const auto child = vef_structural(c);
    out.vertices += child.vertices - 2;
    out.edges += child.edges - 1;
    out.faces += child.faces;
  }
  return out;
}

inline std::optional<Gon> central_arity(const Subdigon& s) {
  if (s.is_null()) return std::nullopt;
  return s.arity();
}

/// Accounting monomial t^type.
inline LayeredPoly psi(const Subdigon& s) { return LayeredPoly::monomial(type_of(s)); }

inline LayeredPoly psi(std::span<const Subdigon> multiset) {
  LayeredPoly out;
  for (const auto& s : multiset) out.add_term(type_of(s), 1);
  return out;
}

/// Preorder word: "0" for null, k followed by the children otherwise.
inline std::string serialize(const Subdigon& s) {
  if (s.is_null()) return "0";
  std::string out = symbol_text(s.arity());
  for (const auto& c : s.children()) out += serialize(c);
  return out;
}

namespace detail {

inline Subdigon parse_subdigon(std::string_view text, std::size_t& pos) {
  const auto start = pos;
  const Symbol k = read_symbol(text, pos);
  if (k == 0) return Subdigon::null();
  if (k == 1) throw ParseError("arity 1 is not a polygon", start);
  std::vector<Subdigon> children;
  children.reserve(k);
  for (Symbol i = 0; i < k; ++i) children.push_back(parse_subdigon(text, pos));
  return Subdigon::panel(k, std::move(children));
}

}  // namespace detail

inline Subdigon parse_subdigon(std::string_view text) {
  std::size_t pos = 0;
  auto s = detail::parse_subdigon(text, pos);
  if (pos != text.size()) throw ParseError("trailing input", pos);
  return s;
}

inline nlohmann::json multiset_to_json(std::span<const Subdigon> multiset) {
  auto out = nlohmann::json::array();
  for (const auto& s : multiset) out.push_back(serialize(s));
  return out;
}

inline SubdigonMultiset multiset_from_json(const nlohmann::json& j) {
  SubdigonMultiset out;
  for (const auto& item : j) out.push_back(parse_subdigon(item.get<std::string>()));
  return out;
}

/// All sub-vectors a <= x entrywise, in a fixed order (empty first).
inline std::vector<TypeVector> sub_types(const TypeVector& x) {
  std::vector<TypeVector> out{TypeVector{}};
  for (const auto& e : x.entries()) {
    const auto prior = out.size();
    for (Count c = 1; c <= e.count; ++c) {
      for (std::size_t i = 0; i < prior; ++i) {
        auto a = out[i];
        a.add(e.k, c);
        out.push_back(std::move(a));
      }
    }
  }
  return out;
}

inline constexpr std::size_t kDefaultMaxFaces = 8;

/// Exhaustive generation by type. Splits on the central polygon first, then
/// hands out the remaining type to the ordered children. Child enumerations
/// are memoized for the lifetime of the enumerator.
class SubdigonEnumerator {
 public:
  explicit SubdigonEnumerator(std::size_t max_faces = kDefaultMaxFaces) : max_faces_(max_faces) {}

  const SubdigonMultiset& all(const TypeVector& m) {
    if (auto it = memo_.find(m); it != memo_.end()) return it->second;
    if (face_count(m) > max_faces_) {
      throw std::length_error("enumerate_subdigons: face count " + std::to_string(face_count(m)) +
                              " exceeds cap " + std::to_string(max_faces_));
    }
    SubdigonMultiset out;
    if (m.empty()) {
      out.push_back(Subdigon::null());
    } else {
      for (const auto& e : m.entries()) {
        const Gon r = e.k;
        std::vector<Subdigon> prefix;
        for_each_tuple(r, m - unit_type(r), prefix, [&](const std::vector<Subdigon>& children) {
          out.push_back(Subdigon::panel(r, children));
        });
      }
    }
    return memo_.emplace(m, std::move(out)).first->second;
  }

 private:
  template <typename Emit>
  void for_each_tuple(std::size_t slots, const TypeVector& remaining, std::vector<Subdigon>& prefix,
                      Emit&& emit) {
    if (slots == 1) {
      for (const auto& s : all(remaining)) {
        prefix.push_back(s);
        emit(prefix);
        prefix.pop_back();
      }
      return;
    }
    for (const auto& first : sub_types(remaining)) {
      const auto rest = remaining - first;
      // References into std::map stay valid while the recursion inserts.
      for (const auto& s : all(first)) {
        prefix.push_back(s);
        for_each_tuple(slots - 1, rest, prefix, emit);
        prefix.pop_back();
      }
    }
  }

  std::size_t max_faces_;
  std::map<TypeVector, SubdigonMultiset> memo_;
};

/// Every subdigon of type m exactly once, in a deterministic order.
inline SubdigonMultiset enumerate_subdigons(const TypeVector& m, std::size_t max_faces = kDefaultMaxFaces) {
  SubdigonEnumerator enumerator(max_faces);
  return enumerator.all(m);
}

/// Counting form of the enumeration recursion, without materializing subdigons.
class SubdigonCounter {
 public:
  BigNat count(const TypeVector& m) {
    if (auto it = counts_.find(m); it != counts_.end()) return it->second;
    BigNat total = 0;
    if (m.empty()) {
      total = 1;
    } else {
      for (const auto& e : m.entries()) total += count_central(m, e.k);
    }
    counts_.emplace(m, total);
    return total;
  }

  /// Subdigons of type m whose central polygon is an (r+1)-gon.
  BigNat count_central(const TypeVector& m, Gon r) {
    if (m[r] == 0) return 0;
    return tuples(r, m - unit_type(r));
  }

 private:
  /// Ordered `slots`-tuples of subdigons whose types sum to x.
  BigNat tuples(std::size_t slots, const TypeVector& x) {
    if (slots == 0) return x.empty() ? 1 : 0;
    if (slots == 1) return count(x);
    const auto key = std::make_pair(slots, x);
    if (auto it = tuples_.find(key); it != tuples_.end()) return it->second;
    BigNat total = 0;
    for (const auto& a : sub_types(x)) total += count(a) * tuples(slots - 1, x - a);
    tuples_.emplace(key, total);
    return total;
  }

  std::map<TypeVector, BigNat> counts_;
  std::map<std::pair<std::size_t, TypeVector>, BigNat> tuples_;
};

inline BigNat count_subdigons(const TypeVector& m) {
  SubdigonCounter counter;
  return counter.count(m);
}

}  // namespace hypercat
