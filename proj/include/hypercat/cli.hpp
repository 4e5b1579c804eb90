#pragma once

// Command implementations behind the `hypercat` executable. Each command
// writes to a stream and returns the process exit code, so the same code
// paths are exercised by tests without spawning processes.

#include <cmath>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hypercat/bigint.hpp"
#include "hypercat/catpow.hpp"
#include "hypercat/core.hpp"
#include "hypercat/raney.hpp"
#include "hypercat/series.hpp"
#include "hypercat/subdigon.hpp"

namespace hypercat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

enum class Format { Text, Json, Csv, Markdown };

inline Format parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "markdown" || text == "md") return Format::Markdown;
  throw std::invalid_argument("unknown format '" + std::string(text) + "'");
}

struct Options {
  Format format = Format::Text;
  std::size_t max_faces = kDefaultMaxFaces;
  bool exact = true;
};

// ---------------------------------------------------------------------------
// coeff

inline int cmd_coeff(const TypeVector& m, bool central, std::optional<std::size_t> power,
                     const Options& opts, std::ostream& out) {
  const auto [v, e, f] = vef(m);
  const auto c = hyper_catalan(m);
  if (opts.format == Format::Json) {
    nlohmann::json j{{"type", m}, {"C", c.str()}, {"V", v}, {"E", e}, {"F", f}};
    if (central) {
      auto row = nlohmann::json::object();
      for (const auto& entry : m.entries()) row[std::to_string(entry.k)] = central_count(m, entry.k).str();
      j["central"] = row;
    }
    if (power) j["power"] = {{"r", *power}, {"coeff", power_coeff(m, *power).str()}};
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "type " << m << '\n';
  out << "C = " << c << '\n';
  out << "V=" << v << " E=" << e << " F=" << f << '\n';
  if (central) {
    bool first = true;
    for (const auto& entry : m.entries()) {
      out << (first ? "" : " ") << "central-" << entry.k + 1 << ':' << central_count(m, entry.k);
      first = false;
    }
    if (!first) out << '\n';
  }
  if (power) out << "C^(" << *power << ") = " << power_coeff(m, *power) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// table / verify

inline int cmd_table(const LayerSpec& spec, const Options& opts, std::ostream& out) {
  const auto rows = layer_table(spec);
  TableFormat format = TableFormat::Csv;
  switch (opts.format) {
    case Format::Csv: format = TableFormat::Csv; break;
    case Format::Markdown: format = TableFormat::Markdown; break;
    case Format::Text: format = TableFormat::Text; break;
    case Format::Json: format = TableFormat::Json; break;
  }
  write_table(out, rows, spec, format);
  return kExitOk;
}

/// Prints ZERO when the geometric polynomial vanishes on the layered series
/// zero, otherwise the nonzero slices.
inline int cmd_verify(const LayerSpec& spec, const Options& opts, std::ostream& out) {
  const auto residual = evaluate_geometric(build_beta(spec), spec);
  if (opts.format == Format::Json) {
    out << nlohmann::json{{"measure", to_string(spec.measure)},
                          {"level", spec.max_level},
                          {"zero", residual.is_zero()},
                          {"residual", series_to_json(residual, spec.measure)}}
               .dump()
        << '\n';
  } else if (residual.is_zero()) {
    out << "ZERO\n";
  } else {
    out << "NONZERO\n";
    for (std::size_t lvl = 0; lvl <= spec.max_level; ++lvl) {
      const auto slice = layer_slice(residual, spec.measure, lvl);
      if (!slice.is_zero()) {
        out << '[' << layer_variable(spec.measure) << '^' << lvl << "] " << poly_string(slice, spec.measure)
            << '\n';
      }
    }
  }
  return residual.is_zero() ? kExitOk : kExitVerifyFailed;
}

// ---------------------------------------------------------------------------
// solve

/// Exact value of a decimal or fraction literal: "1/5", "-0.25", "2e-3".
inline Rational parse_rational(std::string_view text) {
  const std::string s(text);
  auto fail = [&]() -> Rational { throw std::invalid_argument("not a finite number: '" + s + "'"); };
  if (s.empty()) return fail();
  if (const auto slash = s.find('/'); slash != std::string::npos) {
    const auto num = parse_rational(s.substr(0, slash));
    const auto den = parse_rational(s.substr(slash + 1));
    if (den == 0) return fail();
    return num / den;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  BigInt digits = 0;
  long long exponent = 0;
  std::size_t count = 0;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    const char ch = s[pos];
    if (ch >= '0' && ch <= '9') {
      digits = digits * 10 + (ch - '0');
      if (seen_point) --exponent;
      ++count;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (count == 0) return fail();
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') return fail();
    std::size_t used = 0;
    long long e = 0;
    try {
      e = std::stoll(s.substr(pos + 1), &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (pos + 1 + used != s.size() || std::llabs(e) > 4096) return fail();
    exponent += e;
  }
  Rational value(digits);
  BigInt scale = 1;
  for (long long i = 0; i < std::llabs(exponent); ++i) scale *= 10;
  value = exponent >= 0 ? value * scale : value / scale;
  return negative ? -value : value;
}

struct SolveRequest {
  /// t2, t3, ..., tq.
  std::vector<Rational> coeffs;
  LayerSpec spec;
  bool exact = true;

  Gon q() const { return static_cast<Gon>(coeffs.size() + 1); }

  /// Binds the spec's gon bound to q; face layers must already agree with q.
  void validate() {
    if (coeffs.empty()) throw std::invalid_argument("solve: need at least t2");
    if (spec.measure == LevelMeasure::Face && spec.gon_bound && *spec.gon_bound != q()) {
      throw std::invalid_argument("solve: face gon bound must equal q = " + std::to_string(q()));
    }
    spec.gon_bound = q();
    spec.validate();
  }
};

struct SolveReport {
  bool exact = true;
  /// Partial sums of the layered series zero through each level.
  std::vector<double> partial_sums;
  double alpha = 0;
  /// g(alpha) = 1 - alpha + sum t_k alpha^k.
  double residual = 0;
  /// Exact values, present in exact mode.
  std::vector<Rational> partial_sums_exact;
  std::optional<Rational> alpha_exact;
  std::optional<Rational> residual_exact;
};

namespace detail {

template <typename Number>
Number geometric_value(const std::vector<Number>& t, const Number& alpha) {
  Number value = Number(1) - alpha;
  Number power = alpha;
  for (const auto& tk : t) {
    power *= alpha;
    value += tk * power;
  }
  return value;
}

template <typename Number>
Number power_of(const Number& base, Count n) {
  Number out = 1;
  for (Count i = 0; i < n; ++i) out *= base;
  return out;
}

}  // namespace detail

/// Evaluates the layered series zero at the given t_k, summing in ascending
/// level. Exact mode accumulates rationals; float mode accumulates doubles.
inline SolveReport solve(SolveRequest req) {
  req.validate();
  const auto& spec = req.spec;
  SolveReport report;
  report.exact = req.exact;
  std::vector<double> t_float;
  for (const auto& t : req.coeffs) t_float.push_back(t.convert_to<double>());

  std::vector<std::vector<TypeVector>> by_level(spec.max_level + 1);
  for (const auto& m : enumerate_types(spec)) {
    bool vanishes = false;
    for (const auto& e : m.entries()) vanishes |= req.coeffs[e.k - kMinGon] == 0;
    if (!vanishes) by_level[level(m, spec.measure)].push_back(m);
  }

  if (req.exact) {
    Rational sum = 0;
    for (const auto& types : by_level) {
      for (const auto& m : types) {
        Rational term(hyper_catalan(m));
        for (const auto& e : m.entries()) term *= detail::power_of(req.coeffs[e.k - kMinGon], e.count);
        sum += term;
      }
      report.partial_sums_exact.push_back(sum);
      report.partial_sums.push_back(sum.convert_to<double>());
    }
    report.alpha_exact = sum;
    report.residual_exact = detail::geometric_value(req.coeffs, sum);
    report.alpha = sum.convert_to<double>();
    report.residual = report.residual_exact->convert_to<double>();
  } else {
    double sum = 0;
    for (const auto& types : by_level) {
      for (const auto& m : types) {
        double term = hyper_catalan(m).convert_to<double>();
        for (const auto& e : m.entries()) term *= detail::power_of(t_float[e.k - kMinGon], e.count);
        sum += term;
      }
      report.partial_sums.push_back(sum);
    }
    report.alpha = sum;
    report.residual = detail::geometric_value(t_float, sum);
  }
  return report;
}

namespace detail {

inline std::string fixed(double x, int digits = 15) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

inline std::string scientific(double x) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(6) << x;
  return os.str();
}

}  // namespace detail

inline int cmd_solve(const SolveRequest& req, const Options& opts, std::ostream& out) {
  const auto report = solve(req);
  auto value_text = [&](std::size_t lvl) {
    return report.exact ? to_decimal(report.partial_sums_exact[lvl], 15) : detail::fixed(report.partial_sums[lvl]);
  };
  const std::string alpha = report.exact ? to_decimal(*report.alpha_exact, 15) : detail::fixed(report.alpha);
  const std::string residual = detail::scientific(report.residual);
  if (opts.format == Format::Json) {
    nlohmann::json j{{"mode", report.exact ? "exact" : "float"}, {"alpha", alpha}, {"residual", residual}};
    auto levels = nlohmann::json::array();
    for (std::size_t lvl = 0; lvl < report.partial_sums.size(); ++lvl) {
      levels.push_back({{"level", lvl}, {"partial_sum", value_text(lvl)}});
    }
    j["levels"] = levels;
    out << j.dump() << '\n';
    return kExitOk;
  }
  out << "mode " << (report.exact ? "exact" : "float") << " (level-ascending summation)\n";
  out << "alpha = " << alpha << '\n';
  out << "residual g(alpha) = " << residual << '\n';
  for (std::size_t lvl = 0; lvl < report.partial_sums.size(); ++lvl) {
    out << "level " << lvl << ": " << value_text(lvl) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// subdigons

enum class SubdigonMode { Count, List, Json };

inline int cmd_subdigons(const TypeVector& m, SubdigonMode mode, const Options& opts, std::ostream& out) {
  if (mode == SubdigonMode::Count) {
    SubdigonCounter counter;
    const auto total = counter.count(m);
    if (opts.format == Format::Json) {
      auto split = nlohmann::json::object();
      for (const auto& e : m.entries()) split[std::to_string(e.k + 1)] = counter.count_central(m, e.k).str();
      out << nlohmann::json{{"type", m}, {"count", total.str()}, {"central", split}}.dump() << '\n';
      return kExitOk;
    }
    out << total << '\n';
    bool first = true;
    for (const auto& e : m.entries()) {
      out << (first ? "" : " ") << "central-" << e.k + 1 << ':' << counter.count_central(m, e.k);
      first = false;
    }
    if (!first) out << '\n';
    return kExitOk;
  }
  const auto all = enumerate_subdigons(m, opts.max_faces);
  if (mode == SubdigonMode::Json) {
    out << multiset_to_json(all).dump() << '\n';
  } else {
    for (const auto& s : all) out << serialize(s) << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// raney

inline int cmd_raney_rank(const raney::RaneyString& s, std::ostream& out) {
  out << raney::rank(s) << '\n';
  return kExitOk;
}

/// Word and list status; exit 1 when the string is neither a word nor (with n) a list of n words.
inline int cmd_raney_check(const raney::RaneyString& s, std::optional<std::size_t> n, const Options& opts,
                           std::ostream& out) {
  const bool word = raney::is_word(s);
  const bool prefix = raney::is_word_prefix_criterion(s);
  const std::size_t pieces = n.value_or(1);
  const bool list = raney::is_word_list(s, pieces);
  if (opts.format == Format::Json) {
    out << nlohmann::json{{"string", raney::format_string(s)},
                          {"rank", raney::rank(s)},
                          {"word", word},
                          {"word_prefix_criterion", prefix},
                          {"n", pieces},
                          {"list", list}}
               .dump()
        << '\n';
  } else {
    out << "rank " << raney::rank(s) << '\n';
    out << "word " << (word ? "yes" : "no") << '\n';
    out << "list of " << pieces << ' ' << (list ? "yes" : "no") << '\n';
  }
  return (n ? list : word) ? kExitOk : kExitVerifyFailed;
}

inline int cmd_raney_rotations(const raney::RaneyString& s, const Options& opts, std::ostream& out) {
  const auto offsets = raney::list_rotations(s);
  if (opts.format == Format::Json) {
    auto rows = nlohmann::json::array();
    for (auto o : offsets) rows.push_back({{"offset", o}, {"rotation", raney::format_string(raney::rotate(s, o))}});
    out << rows.dump() << '\n';
    return kExitOk;
  }
  for (auto o : offsets) out << o << ' ' << raney::format_string(raney::rotate(s, o)) << '\n';
  return kExitOk;
}

inline int cmd_raney_identify(const raney::RaneyString& s, bool cyclic, bool trace, const Options& opts,
                              std::ostream& out) {
  const auto b = raney::identify_words(s, cyclic);
  if (opts.format == Format::Json) {
    out << nlohmann::json{{"string", raney::format_string(s)},
                          {"cyclic", cyclic},
                          {"words", b.words_text()},
                          {"count", b.word_count()},
                          {"complete", b.complete()},
                          {"rounds", b.rounds}}
               .dump()
        << '\n';
  } else {
    if (trace) {
      out << raney::format_string(s) << '\n';
      for (const auto& line : b.rounds) out << line << '\n';
    }
    out << b.words_text() << '\n';
  }
  return b.complete() ? kExitOk : kExitVerifyFailed;
}

inline int cmd_raney_enumerate(std::size_t n, std::size_t m1, const TypeVector& tail, const Options& opts,
                               std::ostream& out) {
  const auto lists = raney::enumerate_lists(n, m1, tail);
  if (opts.format == Format::Json) {
    auto arr = nlohmann::json::array();
    for (const auto& s : lists) arr.push_back(raney::format_string(s));
    out << nlohmann::json{{"n", n}, {"count", lists.size()}, {"lists", arr}}.dump() << '\n';
    return kExitOk;
  }
  for (const auto& s : lists) out << raney::format_string(s) << '\n';
  out << lists.size() << " lists\n";
  return kExitOk;
}

// ---------------------------------------------------------------------------
// powers

/// Catalan power queries: C^(r)_m for m = 0..max_m, P_r, Q_r and the residual
/// of t^(r-1) T^r = P_r T + Q_r through degree `order`.
inline int cmd_powers(std::size_t r, std::size_t max_m, std::size_t order, const Options& opts,
                      std::ostream& out) {
  const auto residual = catpow::verify_power_identity(r, order);
  std::vector<std::string> row;
  for (std::size_t m = 0; m <= max_m; ++m) row.push_back(catpow::catalan_power(r, m).str());
  if (opts.format == Format::Json) {
    out << nlohmann::json{{"r", r},
                          {"coefficients", row},
                          {"P", catpow::to_string(catpow::p_poly(r))},
                          {"Q", catpow::to_string(catpow::q_poly(r))},
                          {"identity_order", order},
                          {"identity_zero", residual.is_zero()}}
               .dump()
        << '\n';
  } else {
    out << "C^(" << r << ")_m, m=0.." << max_m << ":";
    for (const auto& c : row) out << ' ' << c;
    out << '\n';
    out << "P_" << r << " = " << catpow::p_poly(r) << '\n';
    out << "Q_" << r << " = " << catpow::q_poly(r) << '\n';
    out << "identity through t^" << order << ": " << (residual.is_zero() ? "ZERO" : catpow::to_string(residual))
        << '\n';
  }
  return residual.is_zero() ? kExitOk : kExitVerifyFailed;
}

}  // namespace hypercat::cli
