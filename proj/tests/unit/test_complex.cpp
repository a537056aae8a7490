#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "stochtop/codec.hpp"
#include "stochtop/complex.hpp"
#include "stochtop/error.hpp"
#include "stochtop/sampler.hpp"

using namespace stochtop;
using namespace stochtop::testing;

TEST(CloseAndInsert, TriangleIntoEmpty) {
  const SimplicialComplex x = close_and_insert(make(4, {}), Simplex{1, 2, 3});
  EXPECT_EQ(x.f_vector(), (std::vector<std::size_t>{3, 3, 1}));
}

TEST(CloseAndInsert, Idempotent) {
  const Simplex s{1, 2, 3};
  const SimplicialComplex once = close_and_insert(make(4, {}), s);
  EXPECT_EQ(close_and_insert(once, s), once);
}

TEST(CloseAndInsert, ClosureAbsorbsFaces) {
  const SimplicialComplex a = close_and_insert(close_and_insert(make(4, {}), Simplex{1, 2}), Simplex{1, 2, 3});
  const SimplicialComplex b = close_and_insert(make(4, {}), Simplex{1, 2, 3});
  EXPECT_EQ(a, b);
}

TEST(CloseAndInsert, RejectsVertexOutOfRange) {
  EXPECT_THROW(close_and_insert(make(3, {}), Simplex{1, 3}), InvalidArgument);
}

TEST(Faces, OfTriangle) {
  const std::vector<Simplex> f = faces(Simplex{1, 2, 3});
  std::vector<Simplex> edges;
  for (const Simplex& s : f) {
    if (s.size() == 2) edges.push_back(s);
  }
  EXPECT_EQ(edges, (std::vector<Simplex>{{1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(f.back(), (Simplex{1, 2, 3}));
  EXPECT_EQ(f.size(), 7u);
}

TEST(Degree, Examples) {
  EXPECT_EQ(degree(hollow_triangle(), Simplex{0, 1}), 0u);
  EXPECT_EQ(degree(filled_triangle(), Simplex{0, 1}), 1u);
  EXPECT_EQ(degree(full_simplex(4), Simplex{0, 1}), 2u);
  EXPECT_THROW(degree(hollow_triangle(), Simplex{0, 1, 2}), InvalidArgument);
}

TEST(ExternalSimplices, Examples) {
  EXPECT_EQ(external_simplices(hollow_triangle(), 2), (std::vector<Simplex>{{0, 1, 2}}));
  EXPECT_TRUE(external_simplices(filled_triangle(), 2).empty());
  const SimplicialComplex two_edges = make(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(external_simplices(two_edges, 1), (std::vector<Simplex>{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
}

TEST(ExternalSimplices, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SimplicialComplex y = random_complex(7, 2, 6, seed);
    for (int i = 0; i <= 3; ++i) {
      std::vector<Simplex> expected;
      const std::size_t n = 7;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<int>(__builtin_popcount(mask)) != i + 1) continue;
        Simplex s;
        for (Vertex v = 0; v < n; ++v) {
          if (mask & (1u << v)) s.push_back(v);
        }
        if (y.contains(s)) continue;
        bool boundary = true;
        for (std::size_t j = 0; j < s.size() && s.size() > 1; ++j) {
          Simplex f = s;
          f.erase(f.begin() + static_cast<std::ptrdiff_t>(j));
          boundary = boundary && y.contains(f);
        }
        if (boundary) expected.push_back(s);
      }
      std::sort(expected.begin(), expected.end());
      EXPECT_EQ(external_simplices(y, i), expected) << "seed " << seed << " i " << i;
    }
  }
}

TEST(Euler, Examples) {
  EXPECT_EQ(hollow_triangle().f_vector(), (std::vector<std::size_t>{3, 3}));
  EXPECT_EQ(reduced_euler_characteristic(hollow_triangle()), -1);
  EXPECT_EQ(reduced_euler_characteristic(make(1, {{0}})), 0);
  EXPECT_EQ(reduced_euler_characteristic(tetra_boundary()), 1);
}

TEST(Codec, ParsesHollowTriangle) {
  EXPECT_EQ(parse_complex(std::string("n=3\n0 1\n0 2\n1 2\n")), hollow_triangle());
}

TEST(Codec, CommentsAndCanonicalForm) {
  const std::string text = "# a comment\nn=4\n\n1 2 3 # triangle\n0 1\n2 3\n";
  const SimplicialComplex x = parse_complex(text);
  EXPECT_EQ(format_complex(x), format_complex(parse_complex(format_complex(x))));
  EXPECT_EQ(format_complex(x), "n=4\n0 1\n1 2 3\n");
}

TEST(Codec, RejectsMalformedInput) {
  EXPECT_THROW(parse_complex(std::string("n=3\n2 1\n")), ParseError);
  EXPECT_THROW(parse_complex(std::string("n=3\n0 3\n")), ParseError);
  EXPECT_THROW(parse_complex(std::string("n=3\n0 x\n")), ParseError);
  EXPECT_THROW(parse_complex(std::string("0 1\n")), ParseError);
}

TEST(CodecProperty, RoundTripOnRandomComplexes) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SimplicialComplex x = random_complex(9, 3, 8, seed);
    EXPECT_EQ(parse_complex(format_complex(x)), x);
  }
}

TEST(ComplexProperty, ClosureHoldsExhaustively) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const SimplicialComplex x = random_complex(8, 3, 6, seed);
    for (int k = 0; k <= x.top_dimension(); ++k) {
      for (const Simplex& s : x.simplices(k)) {
        for (const Simplex& f : faces(s)) EXPECT_TRUE(x.contains(f));
      }
    }
  }
}

TEST(ComplexProperty, DoubleCounting) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const SimplicialComplex x = lm_sample(14, 2, 0.3, seed);
    for (int k = 0; k <= 1; ++k) {
      std::size_t total = 0;
      for (const Simplex& t : x.simplices(k)) total += degree(x, t);
      EXPECT_EQ(total, static_cast<std::size_t>(k + 2) * x.f(k + 1));
    }
  }
}

TEST(ComplexProperty, MaximalSimplicesRecoverComplex) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SimplicialComplex x = random_complex(8, 3, 7, seed);
    EXPECT_EQ(make(8, maximal_simplices(x)), x);
  }
}
