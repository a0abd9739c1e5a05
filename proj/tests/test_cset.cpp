#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubix/cset.hpp"

using namespace cubix;

TEST_CASE("standard cube counts") {
  auto c1 = standard_cube(1, 1);
  CHECK(c1.cs.counts[0] == 2);
  CHECK(c1.cs.counts[1] == 3);  // id plus the two degenerate edges
  CHECK(c1.cs.nondegenerate_count(1) == 1);

  auto b1 = boundary_cell(1, 1);
  CHECK(b1.cs.counts[0] == 2);
  CHECK(b1.cs.nondegenerate_count(1) == 0);

  auto box = open_box(2, 1, 0, 2);
  CHECK(box.cs.counts[0] == 4);
  CHECK(box.cs.nondegenerate_count(1) == 3);  // boundary minus the (1,0) face

  auto b2 = boundary_cell(2, 2);
  CHECK(b2.cs.counts[0] == 4);
  CHECK(b2.cs.nondegenerate_count(1) == 4);
  CHECK(b2.cs.nondegenerate_count(2) == 0);

  auto c2 = standard_cube(2, 2);
  CHECK(c2.cs.counts[0] == 4);
  CHECK(c2.cs.nondegenerate_count(1) == 4);
  CHECK(c2.cs.nondegenerate_count(2) == 1);
}

TEST_CASE("enumerate_maps agrees with Yoneda") {
  auto pt = standard_cube(0, 1);
  auto c1 = standard_cube(1, 1);
  CHECK(enumerate_maps(pt.cs, c1.cs).size() == c1.cs.counts[0]);

  // maps cube^1 -> cube^1 are the 1-cubes of cube^1
  CHECK(enumerate_maps(c1.cs, c1.cs).size() == 3);

  // maps from the boundary of the interval: pairs of vertices
  auto b1 = boundary_cell(1, 1);
  CHECK(enumerate_maps(b1.cs, c1.cs).size() == 4);

  // Yoneda at dimension 2
  auto c2 = standard_cube(2, 2);
  auto b2 = standard_cube(1, 2);
  CHECK(enumerate_maps(b2.cs, c2.cs).size() == c2.cs.counts[1]);
}

TEST_CASE("pi0") {
  CHECK(pi0(standard_cube(2, 2).cs).count == 1);
  CHECK(pi0(boundary_cell(1, 1).cs).count == 2);
  CHECK(pi0(open_box(2, 1, 0, 2).cs).count == 1);
}

TEST_CASE("pi0 ignores degenerate cubes") {
  // discrete set: every 1-cube is degenerate on a vertex
  auto d = discrete_cset(5, 2);
  CHECK(pi0(d).count == 5);
}

TEST_CASE("kan_box_check") {
  // a point is Kan
  CHECK(kan_box_check(standard_cube(0, 2).cs, 2).empty());
  // the interval is not Kan in dimension 2
  auto c1 = standard_cube(1, 2);
  auto failures = kan_box_check(c1.cs, 2);
  CHECK(!failures.empty());
  for (const auto& f : failures) CHECK(f.n == 2);
  // dimension 1 boxes over the interval do fill (it has both endpoints... they do not:
  // a (1,eps) box in dim 1 is a vertex, and a filler is an edge with that face)
  auto f1 = kan_box_check(c1.cs, 1);
  CHECK(f1.empty());  // degenerate edges fill vertex boxes
}

TEST_CASE("maps are natural and validated sets pass validate") {
  auto c2 = standard_cube(2, 2);
  auto box = open_box(2, 1, 0, 2);
  auto maps = enumerate_maps(box.cs, c2.cs);
  CHECK(!maps.empty());
  for (const auto& m : maps) CHECK(is_natural(box.cs, c2.cs, m));
}

TEST_CASE("isomorphism search") {
  auto a = standard_cube(1, 2);
  auto b = standard_cube(1, 2);
  CHECK(are_isomorphic(a.cs, b.cs));
  CHECK(!are_isomorphic(a.cs, boundary_cell(1, 2).cs));
}

TEST_CASE("json round trip") {
  auto box = open_box(2, 1, 0, 2);
  std::string text = cset_to_json(box.cs);
  CubicalSet back = cset_from_json(text);
  CHECK(back.max_dim == box.cs.max_dim);
  CHECK(back.counts == box.cs.counts);
  CHECK(are_isomorphic(back, box.cs));
  CHECK(cset_to_json(back) == text);
}
