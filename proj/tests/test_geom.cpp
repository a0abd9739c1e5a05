#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubix/geom.hpp"

using namespace cubix;

namespace {
// independent oracle: number of maximal chains in the Boolean lattice [1]^n
std::size_t maximal_chain_count(int n) {
  std::vector<std::size_t> paths(1u << n, 0);
  paths[0] = 1;
  for (std::uint32_t v = 1; v < (1u << n); ++v)
    for (int b = 0; b < n; ++b)
      if (v & (1u << b)) paths[v] += paths[v & ~(1u << b)];
  return paths[(1u << n) - 1];
}
}  // namespace

TEST_CASE("interval tensor interval is the square") {
  auto c1 = standard_cube(1, 2);
  auto c2 = standard_cube(2, 2);
  auto T = tensor(c1.cs, c1.cs);
  CHECK(are_isomorphic(T.cs, c2.cs));
  // and via the explicit block map, on the nose
  auto iso = representable_tensor_iso(c1, c1, T, c2);
  CHECK(is_natural(T.cs, c2.cs, iso));
  CHECK(is_bijective(T.cs, c2.cs, iso));
}

TEST_CASE("tensor unit") {
  auto x = open_box(2, 1, 0, 2);
  auto pt = standard_cube(0, 2);
  CHECK(are_isomorphic(tensor(x.cs, pt.cs).cs, x.cs));
  CHECK(are_isomorphic(tensor(pt.cs, x.cs).cs, x.cs));
}

TEST_CASE("tensor of two boundary points sets") {
  auto b = boundary_cell(1, 2);
  auto T = tensor(b.cs, b.cs);
  CHECK(T.cs.counts[0] == 4);
  CHECK(T.cs.nondegenerate_count(1) == 0);
  CHECK(T.cs.nondegenerate_count(2) == 0);
}

TEST_CASE("tensor associativity on representables, total dimension <= 4") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c) {
        if (a + b + c > 4 || a + b + c == 0) continue;
        const int D = a + b + c;
        auto A = standard_cube(a, D), B = standard_cube(b, D), C = standard_cube(c, D);
        auto left = tensor(tensor(A.cs, B.cs).cs, C.cs);
        auto right = tensor(A.cs, tensor(B.cs, C.cs).cs);
        auto full = standard_cube(a + b + c, D);
        CHECK(are_isomorphic(left.cs, full.cs));
        CHECK(are_isomorphic(right.cs, full.cs));
      }
}

TEST_CASE("internal hom basics") {
  auto pt = standard_cube(0, 1);
  auto c1 = standard_cube(1, 1);
  auto b1 = boundary_cell(1, 1);

  auto h0 = internal_hom(pt.cs, c1.cs, 1);
  CHECK(are_isomorphic(h0.cs, c1.cs));

  auto h1 = internal_hom(c1.cs, pt.cs, 1);
  CHECK(are_isomorphic(h1.cs, pt.cs));

  auto h2 = internal_hom(b1.cs, c1.cs, 1);
  CHECK(h2.cs.counts[0] == 4);  // vertices are maps boundary -> interval
}

TEST_CASE("currying bijection") {
  auto c1 = standard_cube(1, 1);
  auto b1 = boundary_cell(1, 1);
  auto pt = standard_cube(0, 1);
  struct Triple {
    CubicalSet Z, X, Y;
  };
  std::vector<Triple> corpus = {
      {c1.cs, b1.cs, c1.cs}, {b1.cs, c1.cs, c1.cs}, {pt.cs, c1.cs, b1.cs}, {b1.cs, b1.cs, b1.cs}};
  for (const auto& t : corpus) {
    auto ZX = tensor(t.Z, t.X);
    auto H = internal_hom(t.X, t.Y, t.Y.max_dim);
    auto direct = enumerate_maps(ZX.cs, t.Y);
    auto curried = enumerate_maps(t.Z, H.cs);
    CHECK(direct.size() == curried.size());
    // the transpose is injective into the curried set
    std::set<std::vector<std::uint32_t>> seen;
    for (const auto& F : direct) {
      auto tr = hom_transpose(t.Z, ZX, F, H);
      CHECK(is_natural(t.Z, H.cs, tr));
      std::vector<std::uint32_t> key;
      for (auto& lvl : tr.level) key.insert(key.end(), lvl.begin(), lvl.end());
      CHECK(seen.insert(key).second);
    }
  }
}

TEST_CASE("representable internal hom fast path agrees with enumeration") {
  auto c1_3 = standard_cube(1, 3);
  auto M = c1_3.cs;
  auto fast = internal_hom_representable(1, M, 2);
  auto slow = internal_hom(standard_cube(1, 3).cs, M, 2);
  CHECK(are_isomorphic(fast, slow.cs));
}

TEST_CASE("triangulation of cubes") {
  auto t0 = triangulate(standard_cube(0, 0).cs);
  CHECK(t0.ss.counts[0] == 1);

  for (int n = 1; n <= 3; ++n) {
    auto tn = triangulate(standard_cube(n, n).cs);
    CHECK(are_isomorphic(tn.ss, delta1_power(n, n).ss));
    CHECK(tn.ss.nondegenerate_count(n) == maximal_chain_count(n));
  }
  CHECK(maximal_chain_count(4) == 24);
  auto t2 = triangulate(standard_cube(2, 2).cs);
  CHECK(t2.ss.nondegenerate_count(2) == 2);
}

TEST_CASE("triangulation is strong monoidal on the corpus") {
  auto c1 = standard_cube(1, 2);
  auto T11 = tensor(c1.cs, c1.cs);
  auto lhs = triangulate(T11.cs);
  auto d1 = triangulate(c1.cs);
  auto rhs = sset_product(d1.ss, d1.ss);
  CHECK(are_isomorphic(lhs.ss, rhs.ss));

  auto b1 = boundary_cell(1, 2);
  auto Tb = tensor(b1.cs, c1.cs);
  auto lhs2 = triangulate(Tb.cs);
  auto rhs2 = sset_product(triangulate(b1.cs).ss, d1.ss);
  CHECK(are_isomorphic(lhs2.ss, rhs2.ss));
}

TEST_CASE("triangulate_map") {
  auto b1 = boundary_cell(1, 1);
  auto c1 = standard_cube(1, 1);
  auto maps = enumerate_maps(b1.cs, c1.cs);
  auto TB = triangulate(b1.cs), TC = triangulate(c1.cs);
  for (const auto& f : maps) {
    auto tf = triangulate_map(b1.cs, f, TB, TC);
    CHECK(is_natural(TB.ss, TC.ss, tf));
  }
}

TEST_CASE("cotriangulation") {
  auto d1 = standard_simplex(1, 2);
  auto U = cotriangulate(d1, 1);
  CHECK(U.cs.counts[0] == 2);
  CHECK(U.cs.counts[1] == 3);  // Yoneda: simplicial maps Delta^1 -> Delta^1

  // monoidality structure map is natural
  auto UA = cotriangulate(d1, 1);
  auto T = tensor(UA.cs, UA.cs);
  auto prod = sset_product(d1, d1);
  auto UAB = cotriangulate(prod.ss, 1);
  auto alpha = monoidal_structure_map(d1, d1, UA, UA, T, prod, UAB);
  CHECK(is_natural(T.cs, UAB.cs, alpha));
}

TEST_CASE("diagonal of the levelwise discrete bicubical is the original") {
  for (auto cell : {standard_cube(1, 1), boundary_cell(2, 2), open_box(2, 1, 0, 2)}) {
    auto B = levelwise_discrete_bicubical(cell.cs);
    auto d = diagonal(B);
    CHECK(are_isomorphic(d, cell.cs));
    CHECK(pi0_rowwise(B).count == pi0(d).count);
  }
}

TEST_CASE("diagonal of a constant bicubical is the value") {
  auto y = open_box(2, 1, 0, 2);
  BicubicalSet B;
  B.max_h = 2;
  B.rows.assign(3, y.cs);
  B.hfaces.resize(3);
  B.hdegens.resize(3);
  B.hconns.resize(3);
  for (int m = 1; m <= 2; ++m) {
    for (int t = 0; t < 2 * m; ++t) B.hfaces[m].push_back(identity_map(y.cs));
    for (int t = 0; t < m; ++t) B.hdegens[m].push_back(identity_map(y.cs));
    if (m >= 2)
      for (int t = 0; t < 2 * (m - 1); ++t) B.hconns[m].push_back(identity_map(y.cs));
  }
  validate(B);
  CHECK(are_isomorphic(diagonal(B), y.cs));
}
