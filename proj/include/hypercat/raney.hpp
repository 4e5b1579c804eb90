#pragma once

// Raney strings: finite sequences of naturals read as Polish-notation
// function compositions. A word is "0" or "n w1 ... wn" for words wi; the
// rank of a string is sum(a_i - 1), and every word has rank -1.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <numeric>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypercat/core.hpp"
#include "hypercat/notation.hpp"
#include "hypercat/subdigon.hpp"

namespace hypercat::raney {

using RaneyString = std::vector<Symbol>;

/// Accepts "0 0 2", "0,0,2", or the compact form "002" / "[12]00...".
inline RaneyString parse_string(std::string_view text) {
  RaneyString out;
  const bool separated = text.find_first_of(", \t\n") != std::string_view::npos;
  if (separated) {
    std::string token;
    auto flush = [&](std::size_t at) {
      if (token.empty()) return;
      if (!std::all_of(token.begin(), token.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw ParseError("expected a natural number, got '" + token + "'", at - token.size());
      }
      out.push_back(static_cast<Symbol>(std::stoul(token)));
      token.clear();
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char ch = text[i];
      if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
        flush(i);
      } else {
        token.push_back(ch);
      }
    }
    flush(text.size());
    return out;
  }
  std::size_t pos = 0;
  while (pos < text.size()) out.push_back(read_symbol(text, pos));
  return out;
}

/// Digits when every symbol is at most 9, comma separated otherwise.
inline std::string format_string(std::span<const Symbol> s) {
  const bool compact = std::all_of(s.begin(), s.end(), [](Symbol a) { return a <= 9; });
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (compact) {
      out.push_back(static_cast<char>('0' + s[i]));
    } else {
      if (i) out += ",";
      out += std::to_string(s[i]);
    }
  }
  return out;
}

inline std::ptrdiff_t rank(std::span<const Symbol> s) {
  std::ptrdiff_t r = 0;
  for (auto a : s) r += static_cast<std::ptrdiff_t>(a) - 1;
  return r;
}

inline Composition composition_of(std::span<const Symbol> s) {
  Composition c;
  for (auto a : s) {
    if (a == 0) {
      ++c.m0;
    } else if (a == 1) {
      ++c.m1;
    } else {
      c.tail.add(a, 1);
    }
  }
  return c;
}

/// Word test by the recursive grammar. A stack holds how many subwords each
/// open node still expects.
inline bool is_word(std::span<const Symbol> s) {
  std::vector<Symbol> pending{1};
  for (auto a : s) {
    if (pending.empty()) return false;
    if (--pending.back() == 0) pending.pop_back();
    if (a > 0) pending.push_back(a);
  }
  return pending.empty();
}

/// Word test by prefix ranks: rank -1 and no proper prefix of negative rank.
inline bool is_word_prefix_criterion(std::span<const Symbol> s) {
  if (s.empty()) return false;
  std::ptrdiff_t r = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    r += static_cast<std::ptrdiff_t>(s[i]) - 1;
    if (r < 0) return false;
  }
  r += static_cast<std::ptrdiff_t>(s.back()) - 1;
  return r == -1;
}

/// Greedy split: cut at the first prefix of rank -1, then repeat on the rest.
/// Returns the pieces and whatever tail never reached rank -1.
struct WordSplit {
  std::vector<RaneyString> words;
  RaneyString leftover;
};

inline WordSplit split_words(std::span<const Symbol> s) {
  WordSplit out;
  RaneyString piece;
  std::ptrdiff_t r = 0;
  for (auto a : s) {
    piece.push_back(a);
    r += static_cast<std::ptrdiff_t>(a) - 1;
    if (r == -1) {
      out.words.push_back(std::move(piece));
      piece.clear();
      r = 0;
    }
  }
  out.leftover = std::move(piece);
  return out;
}

/// True iff s is a concatenation of exactly n words.
inline bool is_word_list(std::span<const Symbol> s, std::size_t n) {
  const auto split = split_words(s);
  if (!split.leftover.empty() || split.words.size() != n) return false;
  return std::all_of(split.words.begin(), split.words.end(),
                     [](const RaneyString& w) { return is_word(w); });
}

/// The rank form of the list test: rank -n and no proper prefix of rank <= -n.
inline bool is_word_list_rank_criterion(std::span<const Symbol> s, std::size_t n) {
  if (n == 0 || s.empty()) return false;
  const auto bound = -static_cast<std::ptrdiff_t>(n);
  std::ptrdiff_t r = 0;
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    r += static_cast<std::ptrdiff_t>(s[i]) - 1;
    if (r <= bound) return false;
  }
  r += static_cast<std::ptrdiff_t>(s.back()) - 1;
  return r == bound;
}

inline RaneyString rotate(std::span<const Symbol> s, std::size_t offset) {
  RaneyString out(s.size());
  if (s.empty()) return out;
  offset %= s.size();
  std::rotate_copy(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(offset), s.end(), out.begin());
  return out;
}

/// n for a string of rank -n, n >= 1; throws otherwise.
inline std::size_t list_count(std::span<const Symbol> s) {
  const auto r = rank(s);
  if (r >= 0) throw std::invalid_argument("rank must be negative, got " + std::to_string(r));
  return static_cast<std::size_t>(-r);
}

/// Offsets whose rotation is a list of n words, for a string of rank -n.
/// There are always exactly n of them.
inline std::vector<std::size_t> list_rotations(std::span<const Symbol> s) {
  const auto n = list_count(s);
  std::vector<std::size_t> out;
  for (std::size_t offset = 0; offset < s.size(); ++offset) {
    if (is_word_list(rotate(s, offset), n)) out.push_back(offset);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Word identification on a circular string

/// An item of a partially bracketed string: an identified word (a 0, or a
/// symbol i grouped with its i identified words) or a symbol not yet grouped.
struct Item {
  std::size_t position;
  Symbol symbol;
  bool identified;
  std::vector<Item> children;

  bool operator==(const Item&) const = default;
};

/// "0", "(200)", "(4(200)0(30(1(300(10)0)))0)"; unresolved symbols render bare.
inline std::string render_item(const Item& item) {
  if (!item.identified || item.symbol == 0) return symbol_text(item.symbol);
  std::string out = "(" + symbol_text(item.symbol);
  for (const auto& c : item.children) out += render_item(c);
  return out + ")";
}

struct Bracketing {
  RaneyString input;
  bool cyclic = true;
  /// Top-level items ordered by the position of their first symbol.
  std::vector<Item> top_level;
  /// Linear rendering after each grouping round; groups may wrap.
  std::vector<std::string> rounds;

  std::size_t word_count() const {
    return static_cast<std::size_t>(
        std::count_if(top_level.begin(), top_level.end(), [](const Item& i) { return i.identified; }));
  }

  /// Every top-level item is an identified word.
  bool complete() const {
    return std::all_of(top_level.begin(), top_level.end(), [](const Item& i) { return i.identified; });
  }

  /// "(10), 0, 0, (4(200)0(30(1(300(10)0)))0)"
  std::string words_text() const {
    std::string out;
    for (std::size_t i = 0; i < top_level.size(); ++i) {
      if (i) out += ", ";
      out += render_item(top_level[i]);
    }
    return out;
  }
};

namespace detail {

inline std::size_t last_position(const Item& item) {
  return item.children.empty() ? item.position : last_position(item.children.back());
}

inline void mark_groups(const Item& item, std::vector<bool>& opens, std::vector<std::size_t>& closes) {
  if (!item.identified || item.symbol == 0) return;
  opens[item.position] = true;
  ++closes[last_position(item)];
  for (const auto& c : item.children) mark_groups(c, opens, closes);
}

/// The string in its original order with "(" before each group head and ")"
/// after each group's last symbol.
inline std::string render_linear(std::span<const Symbol> input, std::span<const Item> live) {
  std::vector<bool> opens(input.size(), false);
  std::vector<std::size_t> closes(input.size(), 0);
  for (const auto& item : live) mark_groups(item, opens, closes);
  std::string out;
  for (std::size_t j = 0; j < input.size(); ++j) {
    if (opens[j]) out += '(';
    out += symbol_text(input[j]);
    out.append(closes[j], ')');
  }
  return out;
}

/// Whether the raw symbol at live index p is followed by enough identified words.
inline bool can_group(std::span<const Item> live, std::size_t p, bool cyclic) {
  const auto& head = live[p];
  if (head.identified) return false;
  const std::size_t need = head.symbol;
  const std::size_t size = live.size();
  if (need >= size) return false;
  if (!cyclic && p + need >= size) return false;
  for (std::size_t j = 1; j <= need; ++j) {
    if (!live[(p + j) % size].identified) return false;
  }
  return true;
}

/// Groups every head in `heads` (non-overlapping) and returns the new live list.
inline std::vector<Item> apply_groups(const std::vector<Item>& live, const std::vector<std::size_t>& heads) {
  const std::size_t size = live.size();
  std::vector<bool> is_head(size, false);
  std::vector<bool> consumed(size, false);
  for (auto p : heads) {
    is_head[p] = true;
    for (std::size_t j = 1; j <= live[p].symbol; ++j) consumed[(p + j) % size] = true;
  }
  std::vector<Item> next;
  for (std::size_t p = 0; p < size; ++p) {
    if (consumed[p]) continue;
    Item item = live[p];
    if (is_head[p]) {
      item.identified = true;
      for (std::size_t j = 1; j <= item.symbol; ++j) item.children.push_back(live[(p + j) % size]);
    }
    next.push_back(std::move(item));
  }
  return next;
}

/// Extended rank: identified words count -1, raw symbols a count a - 1.
inline std::ptrdiff_t live_rank(std::span<const Item> live) {
  std::ptrdiff_t r = 0;
  for (const auto& item : live) r += item.identified ? -1 : static_cast<std::ptrdiff_t>(item.symbol) - 1;
  return r;
}

inline std::vector<Item> initial_items(std::span<const Symbol> s) {
  std::vector<Item> live;
  live.reserve(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) live.push_back(Item{j, s[j], s[j] == 0, {}});
  return live;
}

inline Bracketing finish(std::span<const Symbol> s, bool cyclic, std::vector<Item> live,
                         std::vector<std::string> rounds) {
  std::sort(live.begin(), live.end(), [](const Item& a, const Item& b) { return a.position < b.position; });
  return Bracketing{RaneyString(s.begin(), s.end()), cyclic, std::move(live), std::move(rounds)};
}

}  // namespace detail

/// Repeatedly groups each symbol i > 0 that is followed by i identified words
/// until no grouping is possible. Each round applies every grouping available
/// at the start of the round. For a string of rank -n read cyclically, this
/// always ends with exactly n identified words.
inline Bracketing identify_words(std::span<const Symbol> s, bool cyclic) {
  const auto n = list_count(s);
  auto live = detail::initial_items(s);
  std::vector<std::string> rounds;
  for (;;) {
    std::vector<std::size_t> heads;
    for (std::size_t p = 0; p < live.size(); ++p) {
      if (detail::can_group(live, p, cyclic)) heads.push_back(p);
    }
    if (heads.empty()) break;
    live = detail::apply_groups(live, heads);
    if (detail::live_rank(live) != -static_cast<std::ptrdiff_t>(n)) {
      throw std::logic_error("identify_words: rank invariant violated");
    }
    rounds.push_back(detail::render_linear(s, live));
  }
  return detail::finish(s, cyclic, std::move(live), std::move(rounds));
}

/// Same process, one grouping at a time, chosen uniformly among those
/// available. The final bracketing does not depend on the order of moves.
template <typename Rng>
Bracketing identify_words_random_order(std::span<const Symbol> s, bool cyclic, Rng& rng) {
  const auto n = list_count(s);
  auto live = detail::initial_items(s);
  std::vector<std::string> rounds;
  for (;;) {
    std::vector<std::size_t> heads;
    for (std::size_t p = 0; p < live.size(); ++p) {
      if (detail::can_group(live, p, cyclic)) heads.push_back(p);
    }
    if (heads.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, heads.size() - 1);
    live = detail::apply_groups(live, {heads[pick(rng)]});
    if (detail::live_rank(live) != -static_cast<std::ptrdiff_t>(n)) {
      throw std::logic_error("identify_words: rank invariant violated");
    }
    rounds.push_back(detail::render_linear(s, live));
  }
  return detail::finish(s, cyclic, std::move(live), std::move(rounds));
}

// ---------------------------------------------------------------------------
// Enumeration

/// All lists of n words with m1 ones and the symbol counts of `tail`, the
/// number of zeros fixed by the rank. Lexicographic order.
inline std::vector<RaneyString> enumerate_lists(std::size_t n, std::size_t m1, const TypeVector& tail) {
  if (n < 1) throw std::invalid_argument("enumerate_lists: n must be >= 1");
  const auto comp = Composition::for_lists(n, m1, tail);
  std::vector<std::pair<Symbol, std::size_t>> stock{{0, comp.m0}};
  if (m1) stock.emplace_back(1, m1);
  for (const auto& e : tail.entries()) stock.emplace_back(e.k, e.count);

  const std::size_t length = comp.length();
  const auto bound = -static_cast<std::ptrdiff_t>(n);
  std::vector<RaneyString> out;
  RaneyString current;
  current.reserve(length);

  auto recurse = [&](auto&& self, std::ptrdiff_t prefix_rank) -> void {
    if (current.size() == length) {
      if (is_word_list(current, n)) out.push_back(current);
      return;
    }
    for (auto& [symbol, left] : stock) {
      if (left == 0) continue;
      const auto r = prefix_rank + static_cast<std::ptrdiff_t>(symbol) - 1;
      // A proper prefix at rank <= -n can never start a list of n words.
      if (current.size() + 1 < length && r <= bound) continue;
      --left;
      current.push_back(symbol);
      self(self, r);
      current.pop_back();
      ++left;
    }
  };
  recurse(recurse, 0);
  return out;
}

// ---------------------------------------------------------------------------
// Plane trees

struct PlaneTree {
  std::vector<PlaneTree> children;
  bool operator==(const PlaneTree&) const = default;
};

namespace detail {

inline PlaneTree read_tree(std::span<const Symbol> s, std::size_t& pos) {
  if (pos >= s.size()) throw std::invalid_argument("word_to_tree: not a word (ran out of symbols)");
  const Symbol a = s[pos++];
  PlaneTree t;
  t.children.reserve(a);
  for (Symbol i = 0; i < a; ++i) t.children.push_back(read_tree(s, pos));
  return t;
}

inline void write_tree(const PlaneTree& t, RaneyString& out) {
  out.push_back(static_cast<Symbol>(t.children.size()));
  for (const auto& c : t.children) write_tree(c, out);
}

}  // namespace detail

inline PlaneTree word_to_tree(std::span<const Symbol> s) {
  if (!is_word(s)) throw std::invalid_argument("word_to_tree: not a word");
  std::size_t pos = 0;
  return detail::read_tree(s, pos);
}

inline RaneyString tree_to_word(const PlaneTree& t) {
  RaneyString out;
  detail::write_tree(t, out);
  return out;
}

/// Arity-k node to a central (k+1)-gon. Unary nodes have no subdigon image.
inline Subdigon to_subdigon(const PlaneTree& t) {
  if (t.children.empty()) return Subdigon::null();
  if (t.children.size() == 1) throw std::invalid_argument("to_subdigon: unary node");
  std::vector<Subdigon> kids;
  kids.reserve(t.children.size());
  for (const auto& c : t.children) kids.push_back(to_subdigon(c));
  const auto k = static_cast<Gon>(kids.size());
  return Subdigon::panel(k, std::move(kids));
}

inline PlaneTree to_plane_tree(const Subdigon& s) {
  PlaneTree t;
  for (const auto& c : s.children()) t.children.push_back(to_plane_tree(c));
  return t;
}

}  // namespace hypercat::raney
