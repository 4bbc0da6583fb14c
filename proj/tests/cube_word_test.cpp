#include <gtest/gtest.h>

#include <random>
#include <set>
#include <string>
#include <vector>

#include "cubrecon/cube_word.hpp"
#include "cubrecon/errors.hpp"
#include "test_support.hpp"

using cubrecon::CubeWord;
using cubrecon::Letter;

TEST(CubeWord, ParseAndPrint) {
  const auto w = CubeWord::parse("0*1*");
  EXPECT_EQ(w.ambient_dim(), 4u);
  EXPECT_EQ(w.dim(), 2u);
  EXPECT_EQ(w.str(), "0*1*");
  EXPECT_EQ(w[0], Letter::Zero);
  EXPECT_EQ(w[1], Letter::Star);
  EXPECT_EQ(w[2], Letter::One);
  EXPECT_FALSE(w.is_vertex());
  EXPECT_TRUE(CubeWord::parse("0110").is_vertex());
}

TEST(CubeWord, RejectsBadLetters) {
  EXPECT_THROW(CubeWord::parse("01x"), cubrecon::StructuralError);
  EXPECT_THROW(CubeWord(65), cubrecon::StructuralError);
  EXPECT_THROW(CubeWord::from_masks(3, 0b1000, 0), cubrecon::StructuralError);
}

TEST(CubeWord, Ambient64) {
  const std::string s(64, '*');
  const auto w = CubeWord::parse(s);
  EXPECT_EQ(w.dim(), 64u);
  EXPECT_EQ(w.str(), s);
}

TEST(CubeWord, LexOrderZeroOneStar) {
  EXPECT_LT(CubeWord::parse("0"), CubeWord::parse("1"));
  EXPECT_LT(CubeWord::parse("1"), CubeWord::parse("*"));
  EXPECT_LT(CubeWord::parse("0*"), CubeWord::parse("10"));
  EXPECT_LT(CubeWord::parse("*0"), CubeWord::parse("**"));
}

TEST(CubeWord, OrderMatchesStringOrderWithRemappedLetters) {
  // Oracle: map 0,1,* to a,b,c and compare strings.
  auto key = [](std::string s) {
    for (auto& c : s) c = c == '0' ? 'a' : (c == '1' ? 'b' : 'c');
    return s;
  };
  const auto words = oracle::all_words(4);
  for (const auto& a : words) {
    for (const auto& b : words) {
      EXPECT_EQ(CubeWord::parse(a) < CubeWord::parse(b), key(a) < key(b)) << a << " " << b;
    }
  }
}

TEST(CubeWord, PrecedesAndMeets) {
  EXPECT_TRUE(CubeWord::parse("01").precedes(CubeWord::parse("0*")));
  EXPECT_TRUE(CubeWord::parse("0*").precedes(CubeWord::parse("**")));
  EXPECT_FALSE(CubeWord::parse("1*").precedes(CubeWord::parse("0*")));
  EXPECT_TRUE(CubeWord::parse("0*").meets(CubeWord::parse("*1")));
  EXPECT_FALSE(CubeWord::parse("0*").meets(CubeWord::parse("1*")));
}

TEST(CubeWord, PrecedesAgreesWithVertexContainment) {
  const auto words = oracle::all_words(3);
  for (const auto& a : words) {
    const auto va = oracle::string_vertices(a);
    for (const auto& b : words) {
      const auto vb = oracle::string_vertices(b);
      const std::set<std::string> sb(vb.begin(), vb.end());
      bool subset = true, meet = false;
      for (const auto& v : va) {
        subset = subset && sb.count(v);
        meet = meet || sb.count(v);
      }
      EXPECT_EQ(CubeWord::parse(a).precedes(CubeWord::parse(b)), subset) << a << " " << b;
      EXPECT_EQ(CubeWord::parse(a).meets(CubeWord::parse(b)), meet) << a << " " << b;
    }
  }
}

TEST(CubeWord, FacetsAndSubfaces) {
  const auto w = CubeWord::parse("*1*");
  std::vector<std::string> facets;
  for (const auto& f : w.facets()) facets.push_back(f.str());
  EXPECT_EQ(facets, (std::vector<std::string>{"01*", "11*", "*10", "*11"}));
  // Mixed order is irrelevant; compare as sets with the string oracle.
  const auto expected = oracle::string_facets("*1*");
  EXPECT_EQ(std::set<std::string>(facets.begin(), facets.end()),
            std::set<std::string>(expected.begin(), expected.end()));
  std::size_t count = 0;
  w.for_each_subface([&](const CubeWord&) { ++count; });
  EXPECT_EQ(count, 9u);
  std::set<std::string> verts;
  w.for_each_vertex([&](const CubeWord& v) { verts.insert(v.str()); });
  EXPECT_EQ(verts, (std::set<std::string>{"010", "011", "110", "111"}));
}

TEST(CubeWord, ConcatAndSpan) {
  EXPECT_EQ(CubeWord::parse("0*").concat(CubeWord::parse("1*0")).str(), "0*1*0");
  EXPECT_EQ(CubeWord::parse("01").concat(CubeWord(0)).str(), "01");
  const auto span = cubrecon::span_of_vertices(3, {CubeWord::parse("010"), CubeWord::parse("111")});
  EXPECT_EQ(span.str(), "*1*");
}

TEST(CubeWord, WithReplacesLetter) {
  const auto w = CubeWord::parse("0*1");
  EXPECT_EQ(w.with(0, Letter::Star).str(), "**1");
  EXPECT_EQ(w.with(1, Letter::One).str(), "011");
  EXPECT_EQ(w.with(2, Letter::Zero).str(), "0*0");
}

TEST(CubeWord, RandomRoundTrip) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> len(0, 64), letter(0, 2);
  for (int t = 0; t < 500; ++t) {
    std::string s;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) s += "01*"[letter(rng)];
    const auto w = CubeWord::parse(s);
    EXPECT_EQ(w.str(), s);
    EXPECT_EQ(w.dim(), oracle::stars(s));
    EXPECT_EQ(std::hash<CubeWord>{}(w), std::hash<CubeWord>{}(CubeWord::parse(s)));
  }
}
