#include <map>
#include <set>

#include <gtest/gtest.h>

#include "hypercat/subdigon.hpp"
#include "oracles.hpp"

using namespace hypercat;

namespace {

Subdigon triangle() { return Subdigon::panel(2, {Subdigon::null(), Subdigon::null()}); }

Subdigon empty_panel(Gon k) { return Subdigon::panel(k, std::vector<Subdigon>(k)); }

/// Every subdigon with at most `max_faces` faces and gons <= max_gon.
std::vector<Subdigon> all_subdigons(Gon max_gon, std::size_t max_faces) {
  SubdigonEnumerator enumerator(max_faces);
  std::vector<Subdigon> out;
  for (const auto& m : oracle::types_up_to(max_gon, max_faces)) {
    const auto& batch = enumerator.all(m);
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

}  // namespace

TEST(Panel, Construction) {
  const auto tri = triangle();
  EXPECT_FALSE(tri.is_null());
  EXPECT_EQ(type_of(tri), (TypeVector{{2, 1}}));

  const auto quad = Subdigon::panel(3, {tri, Subdigon::null(), tri});
  EXPECT_EQ(central_arity(quad), 3u);
  EXPECT_EQ(type_of(quad), (TypeVector{{2, 2}, {3, 1}}));

  EXPECT_EQ(type_of(Subdigon::panel(2, {tri, Subdigon::null()})), (TypeVector{{2, 2}}));
  EXPECT_THROW(Subdigon::panel(3, {tri}), std::invalid_argument);
  EXPECT_THROW(Subdigon::panel(1, {tri}), std::invalid_argument);
}

TEST(Panel, UnpanelRecoversChildren) {
  const auto quad = Subdigon::panel(3, {triangle(), Subdigon::null(), empty_panel(4)});
  const auto [k, children] = quad.unpanel();
  EXPECT_EQ(k, 3u);
  EXPECT_EQ(Subdigon::panel(k, children), quad);
  EXPECT_THROW(Subdigon::null().unpanel(), std::logic_error);

  for (const auto& s : all_subdigons(4, 4)) {
    if (s.is_null()) continue;
    const auto [kk, cs] = s.unpanel();
    EXPECT_EQ(Subdigon::panel(kk, cs), s);
  }
}

TEST(TypeOf, Examples) {
  EXPECT_TRUE(type_of(Subdigon::null()).empty());
  EXPECT_EQ(type_of(empty_panel(4)), (TypeVector{{4, 1}}));
  EXPECT_EQ(type_of(Subdigon::panel(2, {empty_panel(3), Subdigon::null()})), (TypeVector{{2, 1}, {3, 1}}));
}

TEST(VefStructural, Examples) {
  EXPECT_EQ(vef_structural(Subdigon::null()), (VEF{2, 1, 0}));
  EXPECT_EQ(vef_structural(triangle()), (VEF{3, 3, 1}));
}

TEST(VefStructural, AgreesWithClosedFormExhaustively) {
  const auto all = all_subdigons(5, 5);
  EXPECT_GT(all.size(), 1000u);
  for (const auto& s : all) EXPECT_EQ(vef_structural(s), vef(type_of(s))) << serialize(s);
}

TEST(CentralArity, Examples) {
  EXPECT_FALSE(central_arity(Subdigon::null()).has_value());
  EXPECT_EQ(central_arity(triangle()), 2u);

  std::map<Gon, int> split;
  for (const auto& s : enumerate_subdigons(TypeVector{{2, 2}, {3, 1}})) ++split[*central_arity(s)];
  EXPECT_EQ(split, (std::map<Gon, int>{{2, 12}, {3, 9}}));
}

TEST(Enumerate, Examples) {
  const auto null_only = enumerate_subdigons(TypeVector{});
  ASSERT_EQ(null_only.size(), 1u);
  EXPECT_TRUE(null_only[0].is_null());
  EXPECT_EQ(enumerate_subdigons(TypeVector{{2, 2}, {3, 1}}).size(), 21u);
  EXPECT_EQ(enumerate_subdigons(TypeVector{{2, 2}, {3, 1}, {4, 1}}).size(), 495u);
  EXPECT_THROW(enumerate_subdigons(TypeVector{{2, 9}}), std::length_error);
  EXPECT_THROW(enumerate_subdigons(TypeVector{{2, 3}}, 2), std::length_error);
}

TEST(Enumerate, DistinctCorrectTypeDeterministic) {
  for (const auto& m : oracle::types_up_to(5, 4)) {
    const auto all = enumerate_subdigons(m);
    std::set<std::string> words;
    for (const auto& s : all) {
      EXPECT_EQ(type_of(s), m);
      words.insert(serialize(s));
    }
    EXPECT_EQ(words.size(), all.size()) << m;
    EXPECT_EQ(all, enumerate_subdigons(m));
  }
}

TEST(Enumerate, PsiProjection) {
  const TypeVector m{{2, 2}, {3, 1}, {4, 1}};
  EXPECT_EQ(psi(enumerate_subdigons(m)), LayeredPoly::monomial(m, 495));
  for (const auto& mm : oracle::types_up_to(4, 4)) {
    EXPECT_EQ(psi(enumerate_subdigons(mm)), LayeredPoly::monomial(mm, hyper_catalan(mm)));
  }
  EXPECT_EQ(psi(triangle()), LayeredPoly::monomial(TypeVector{{2, 1}}));
}

TEST(Count, Examples) {
  const BigNat catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (Count n = 0; n <= 6; ++n) {
    EXPECT_EQ(count_subdigons(n ? TypeVector{{2, n}} : TypeVector{}), catalan[n]) << n;
  }
  EXPECT_EQ(count_subdigons(TypeVector{{2, 2}, {3, 1}}), 21);
  EXPECT_EQ(count_subdigons(TypeVector{{2, 4}}), 14);
}

TEST(Count, MatchesEnumerationAndClosedForms) {
  SubdigonCounter counter;
  SubdigonEnumerator enumerator(5);
  for (const auto& m : oracle::types_up_to(5, 5)) {
    const auto& all = enumerator.all(m);
    EXPECT_EQ(counter.count(m), all.size()) << m;
    std::map<Gon, std::size_t> split;
    for (const auto& s : all) {
      if (!s.is_null()) ++split[s.arity()];
    }
    for (const auto& e : m.entries()) {
      EXPECT_EQ(counter.count_central(m, e.k), split[e.k]) << m << " r=" << e.k;
    }
  }
}

TEST(Count, OracleAgreesWithClosedForms) {
  SubdigonCounter counter;
  for (const auto& m : oracle::types_up_to(6, 6)) {
    EXPECT_EQ(counter.count(m), hyper_catalan(m)) << m;
    for (const auto& e : m.entries()) EXPECT_EQ(counter.count_central(m, e.k), central_count(m, e.k)) << m;
  }
}

TEST(Serialize, Examples) {
  EXPECT_EQ(serialize(Subdigon::null()), "0");
  EXPECT_EQ(serialize(triangle()), "200");
  EXPECT_EQ(serialize(empty_panel(12)), "[12]000000000000");
  EXPECT_EQ(parse_subdigon("200"), triangle());
  EXPECT_EQ(parse_subdigon("[12]000000000000"), empty_panel(12));
}

TEST(Serialize, ParseErrorsCarryPosition) {
  auto position_of = [](std::string_view text) -> std::size_t {
    try {
      parse_subdigon(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return SIZE_MAX;
  };
  EXPECT_EQ(position_of("20"), 2u);     // missing child
  EXPECT_EQ(position_of("2000"), 3u);   // trailing input
  EXPECT_EQ(position_of("210"), 1u);    // 2-gon
  EXPECT_EQ(position_of("2x0"), 1u);
  EXPECT_EQ(position_of("[12"), 0u);
}

TEST(Serialize, RoundTripAll495) {
  const auto all = enumerate_subdigons(TypeVector{{2, 2}, {3, 1}, {4, 1}});
  for (const auto& s : all) EXPECT_EQ(parse_subdigon(serialize(s)), s);
  EXPECT_EQ(multiset_from_json(multiset_to_json(all)), all);
}
