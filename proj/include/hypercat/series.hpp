#pragma once

// Sparse exact polynomials in t2, t3, ... with layer truncation.
//
// The layering variables v, e, f are never stored. A monomial t^m carries
// v^(V-2) e^(E-1) f^F implicitly, so "mod v^(d+1)" is the same as dropping
// every term whose vertex level exceeds d, and likewise for edges and faces.

#include <algorithm>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypercat/bigint.hpp"
#include "hypercat/core.hpp"

namespace hypercat {

enum class LevelMeasure { Vertex, Edge, Face };

inline std::string_view to_string(LevelMeasure measure) {
  switch (measure) {
    case LevelMeasure::Vertex: return "vertex";
    case LevelMeasure::Edge: return "edge";
    case LevelMeasure::Face: return "face";
  }
  return "?";
}

inline LevelMeasure parse_measure(std::string_view text) {
  if (text == "vertex" || text == "v") return LevelMeasure::Vertex;
  if (text == "edge" || text == "e") return LevelMeasure::Edge;
  if (text == "face" || text == "f") return LevelMeasure::Face;
  throw std::invalid_argument("unknown level measure '" + std::string(text) + "'");
}

/// Layer variable letter used in table headers.
inline char layer_variable(LevelMeasure measure) {
  switch (measure) {
    case LevelMeasure::Vertex: return 'v';
    case LevelMeasure::Edge: return 'e';
    case LevelMeasure::Face: return 'f';
  }
  return '?';
}

/// Level of a single (k+1)-gon. Every measure is linear in m with these weights.
inline std::size_t gon_level(Gon k, LevelMeasure measure) {
  switch (measure) {
    case LevelMeasure::Vertex: return k - 1;
    case LevelMeasure::Edge: return k;
    case LevelMeasure::Face: return 1;
  }
  return 0;
}

/// V-2, E-1 or F.
inline std::size_t level(const TypeVector& m, LevelMeasure measure) {
  std::size_t out = 0;
  for (const auto& e : m.entries()) out += gon_level(e.k, measure) * e.count;
  return out;
}

struct LayerSpec {
  LevelMeasure measure = LevelMeasure::Vertex;
  std::size_t max_level = 0;
  std::optional<Gon> gon_bound;

  /// Face layers are infinite without a gon bound.
  void validate() const {
    if (measure == LevelMeasure::Face && !gon_bound) {
      throw std::invalid_argument("face layering requires a gon bound q");
    }
    if (gon_bound && *gon_bound < kMinGon) {
      throw std::invalid_argument("gon bound q must be >= 2");
    }
  }

  bool admits(const TypeVector& m) const {
    if (gon_bound && m.max_gon() > *gon_bound) return false;
    return level(m, measure) <= max_level;
  }

  /// Largest k whose (k+1)-gon alone still fits within the layer.
  Gon largest_gon() const {
    Gon k = 0;
    switch (measure) {
      case LevelMeasure::Vertex: k = static_cast<Gon>(max_level + 1); break;
      case LevelMeasure::Edge: k = static_cast<Gon>(max_level); break;
      case LevelMeasure::Face: k = *gon_bound; break;
    }
    if (gon_bound) k = std::min(k, *gon_bound);
    return k;
  }
};

/// Finite map TypeVector -> nonzero BigInt.
class LayeredPoly {
 public:
  using Terms = std::map<TypeVector, BigInt>;

  LayeredPoly() = default;

  static LayeredPoly constant(const BigInt& c) { return monomial(TypeVector{}, c); }

  static LayeredPoly monomial(const TypeVector& m, const BigInt& c = 1) {
    LayeredPoly p;
    p.add_term(m, c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  BigInt coeff(const TypeVector& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(const TypeVector& m, const BigInt& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LayeredPoly& operator+=(const LayeredPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
  }
  LayeredPoly& operator-=(const LayeredPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
  }

  friend LayeredPoly operator+(LayeredPoly a, const LayeredPoly& b) { return a += b; }
  friend LayeredPoly operator-(LayeredPoly a, const LayeredPoly& b) { return a -= b; }
  friend LayeredPoly operator-(LayeredPoly a) {
    for (auto& [m, c] : a.terms_) c = -c;
    return a;
  }

  /// Full product, no truncation.
  friend LayeredPoly operator*(const LayeredPoly& a, const LayeredPoly& b) {
    LayeredPoly out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
    }
    return out;
  }

  bool operator==(const LayeredPoly&) const = default;

  /// Terms in display order: ascending level, then t2 > t3 > ... lexicographic.
  std::vector<std::pair<TypeVector, BigInt>> sorted(LevelMeasure measure) const {
    std::vector<std::pair<TypeVector, BigInt>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [measure](const auto& a, const auto& b) {
      const auto la = level(a.first, measure);
      const auto lb = level(b.first, measure);
      if (la != lb) return la < lb;
      return monomial_greater(a.first, b.first);
    });
    return out;
  }

 private:
  Terms terms_;
};

/// Keeps exactly the terms the spec admits.
inline LayeredPoly truncate(const LayeredPoly& p, const LayerSpec& spec) {
  spec.validate();
  LayeredPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (spec.admits(m)) out.add_term(m, c);
  }
  return out;
}

/// truncate(p * q, spec), pruning partial products as soon as their level
/// exceeds the bound. Levels add under products, so nothing pruned can come back.
inline LayeredPoly mul_truncated(const LayeredPoly& p, const LayeredPoly& q, const LayerSpec& spec) {
  spec.validate();
  const auto d = spec.max_level;
  // Bucket the right factor by level so each left term scans only what fits.
  std::vector<std::vector<std::pair<const TypeVector*, const BigInt*>>> by_level(d + 1);
  for (const auto& [m, c] : q.terms()) {
    if (spec.admits(m)) by_level[level(m, spec.measure)].emplace_back(&m, &c);
  }
  LayeredPoly out;
  for (const auto& [mp, cp] : p.terms()) {
    if (!spec.admits(mp)) continue;
    const auto lp = level(mp, spec.measure);
    for (std::size_t lq = 0; lp + lq <= d; ++lq) {
      for (const auto& [mq, cq] : by_level[lq]) out.add_term(mp + *mq, cp * *cq);
    }
  }
  return out;
}

/// Terms of p at exactly `n` under `measure`.
inline LayeredPoly layer_slice(const LayeredPoly& p, LevelMeasure measure, std::size_t n) {
  LayeredPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (level(m, measure) == n) out.add_term(m, c);
  }
  return out;
}

/// Every type the spec admits, ordered by level then t2 > t3 > ... lexicographic.
inline std::vector<TypeVector> enumerate_types(const LayerSpec& spec) {
  spec.validate();
  std::vector<TypeVector> out;
  const Gon top = spec.largest_gon();
  TypeVector current;
  // Choose m_k for k = top down to 2 within the remaining level budget.
  auto recurse = [&](auto&& self, Gon k, std::size_t budget) -> void {
    if (k < kMinGon) {
      out.push_back(current);
      return;
    }
    const auto weight = gon_level(k, spec.measure);
    for (Count c = 0; static_cast<std::size_t>(c) * weight <= budget; ++c) {
      if (c > 0) current.add(k, 1);
      self(self, k - 1, budget - c * weight);
    }
    current.remove(k, current[k]);
  };
  recurse(recurse, top, spec.max_level);
  std::sort(out.begin(), out.end(), [&](const TypeVector& a, const TypeVector& b) {
    const auto la = level(a, spec.measure);
    const auto lb = level(b, spec.measure);
    if (la != lb) return la < lb;
    return monomial_greater(a, b);
  });
  return out;
}

/// The layered truncation of the series zero: sum of C_m t^m over the admitted types.
inline LayeredPoly build_beta(const LayerSpec& spec) {
  LayeredPoly out;
  for (const auto& m : enumerate_types(spec)) out.add_term(m, hyper_catalan(m));
  return out;
}

/// One t_n * beta^n summand of the geometric polynomial, truncated.
struct GeometricTerm {
  Gon n;
  LayeredPoly value;
};

/// t_n beta^n for every n that can contribute within the layer. The monomial
/// t_n alone has level gon_level(n), which bounds n.
inline std::vector<GeometricTerm> geometric_terms(const LayeredPoly& beta, const LayerSpec& spec) {
  spec.validate();
  const LayeredPoly base = truncate(beta, spec);
  std::vector<GeometricTerm> out;
  const Gon top = spec.largest_gon();
  if (top < kMinGon) return out;
  LayeredPoly power = base;
  for (Gon n = kMinGon; n <= top; ++n) {
    power = mul_truncated(power, base, spec);
    out.push_back({n, mul_truncated(LayeredPoly::monomial(unit_type(n)), power, spec)});
  }
  return out;
}

/// truncate(1 - beta + sum t_n beta^n, spec). Zero when beta is the layered
/// series zero truncated to the same spec.
inline LayeredPoly evaluate_geometric(const LayeredPoly& beta, const LayerSpec& spec) {
  spec.validate();
  LayeredPoly out = LayeredPoly::constant(1) - truncate(beta, spec);
  for (const auto& term : geometric_terms(beta, spec)) out += term.value;
  return truncate(out, spec);
}

struct NonzeroRemainder : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Divides p by the given divisor using the t2 > t3 > ... lexicographic order.
/// Returns (quotient, remainder).
inline std::pair<LayeredPoly, LayeredPoly> divide(LayeredPoly p, const LayeredPoly& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("divide: zero divisor");
  auto leading = [](const LayeredPoly& x) {
    auto it = x.terms().begin();
    for (auto jt = x.terms().begin(); jt != x.terms().end(); ++jt) {
      if (monomial_greater(jt->first, it->first)) it = jt;
    }
    return *it;
  };
  const auto [lead_m, lead_c] = leading(divisor);
  LayeredPoly quotient;
  LayeredPoly remainder;
  while (!p.is_zero()) {
    const auto [m, c] = leading(p);
    BigInt q;
    BigInt r;
    boost::multiprecision::divide_qr(c, lead_c, q, r);
    if (lead_m.divides(m) && r == 0) {
      const auto step = LayeredPoly::monomial(m - lead_m, q);
      quotient += step;
      p -= step * divisor;
    } else {
      remainder.add_term(m, c);
      p.add_term(m, -c);
    }
  }
  return {quotient, remainder};
}

/// Quotient of the face-level-d slice of (beta_{d,face,q} - 1) by t2 + ... + tq.
inline LayeredPoly geode_quotient(std::size_t d, Gon q) {
  if (d < 1) throw std::invalid_argument("geode_quotient: face level must be >= 1");
  if (q < kMinGon) throw std::invalid_argument("geode_quotient: gon bound must be >= 2");
  const LayerSpec spec{LevelMeasure::Face, d, q};
  const auto slice = layer_slice(build_beta(spec) - LayeredPoly::constant(1), LevelMeasure::Face, d);
  LayeredPoly divisor;
  for (Gon k = kMinGon; k <= q; ++k) divisor.add_term(unit_type(k), 1);
  auto [quotient, remainder] = divide(slice, divisor);
  if (!remainder.is_zero()) {
    throw NonzeroRemainder("geode_quotient: nonzero remainder at face level " + std::to_string(d));
  }
  return quotient;
}

// ---------------------------------------------------------------------------
// Rendering

/// "42 t2^5 + 84 t2^3 t3 + t6", "0" for the zero polynomial.
inline std::string poly_string(const LayeredPoly& p, LevelMeasure measure = LevelMeasure::Vertex) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.sorted(measure)) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.empty()) {
      os << mag;
    } else {
      if (mag != 1) os << mag << ' ';
      os << monomial_string(m);
    }
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const LayeredPoly& p) { return os << poly_string(p); }

/// [{"type": [m2, ...], "coeff": "decimal"}], terms in display order.
inline nlohmann::json series_to_json(const LayeredPoly& p, LevelMeasure measure = LevelMeasure::Vertex) {
  auto out = nlohmann::json::array();
  for (const auto& [m, c] : p.sorted(measure)) {
    out.push_back({{"type", m}, {"coeff", c.str()}});
  }
  return out;
}

inline LayeredPoly series_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("series JSON must be an array");
  LayeredPoly out;
  for (const auto& term : j) {
    out.add_term(term.at("type").get<TypeVector>(), BigInt(term.at("coeff").get<std::string>()));
  }
  return out;
}

/// One row of a layer table: a source summand (or the total) at one level.
struct TableRow {
  std::size_t level;
  /// 0 for the total row beta - 1, otherwise the n of t_n beta^n.
  Gon source;
  LayeredPoly value;
};

/// Rows of the layer table for `spec`: for each level, the nonzero
/// t_n beta^n slices followed by the beta - 1 total. The total row always
/// equals the sum of the source rows at its level.
inline std::vector<TableRow> layer_table(const LayerSpec& spec) {
  spec.validate();
  const auto beta = build_beta(spec);
  const auto terms = geometric_terms(beta, spec);
  const auto beta_minus_one = beta - LayeredPoly::constant(1);
  std::vector<TableRow> rows;
  for (std::size_t lvl = 0; lvl <= spec.max_level; ++lvl) {
    for (const auto& term : terms) {
      auto slice = layer_slice(term.value, spec.measure, lvl);
      if (!slice.is_zero()) rows.push_back({lvl, term.n, std::move(slice)});
    }
    rows.push_back({lvl, 0, layer_slice(beta_minus_one, spec.measure, lvl)});
  }
  return rows;
}

inline std::string row_source_label(const TableRow& row) {
  if (row.source == 0) return "beta-1";
  return "t" + std::to_string(row.source) + "*beta^" + std::to_string(row.source);
}

inline std::string row_level_label(const TableRow& row, LevelMeasure measure) {
  return std::string("[") + layer_variable(measure) + "^" + std::to_string(row.level) + "]";
}

enum class TableFormat { Csv, Markdown, Text, Json };

inline void write_table(std::ostream& os, const std::vector<TableRow>& rows, const LayerSpec& spec,
                        TableFormat format) {
  const auto measure = spec.measure;
  switch (format) {
    case TableFormat::Csv:
      os << "level,source,polynomial\n";
      for (const auto& r : rows) {
        os << r.level << ',' << row_source_label(r) << ',' << poly_string(r.value, measure) << '\n';
      }
      break;
    case TableFormat::Markdown:
      os << "| level | source | polynomial |\n|---|---|---|\n";
      for (const auto& r : rows) {
        os << "| " << row_level_label(r, measure) << " | " << row_source_label(r) << " | "
           << poly_string(r.value, measure) << " |\n";
      }
      break;
    case TableFormat::Text:
      for (const auto& r : rows) {
        os << row_level_label(r, measure) << ' ' << row_source_label(r) << " = "
           << poly_string(r.value, measure) << '\n';
      }
      break;
    case TableFormat::Json: {
      auto out = nlohmann::json::array();
      for (const auto& r : rows) {
        out.push_back({{"level", r.level},
                       {"source", row_source_label(r)},
                       {"terms", series_to_json(r.value, measure)}});
      }
      os << out.dump(2) << '\n';
      break;
    }
  }
}

}  // namespace hypercat
