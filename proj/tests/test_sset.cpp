#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubix/fincat.hpp"
#include "cubix/sset.hpp"

using namespace cubix;

TEST_CASE("standard simplices") {
  auto d2 = standard_simplex(2, 2);
  CHECK(d2.counts[0] == 3);
  CHECK(d2.nondegenerate_count(1) == 3);
  CHECK(d2.nondegenerate_count(2) == 1);
}

TEST_CASE("delta1 powers count maximal chains") {
  auto p2 = delta1_power(2, 2);
  CHECK(p2.ss.counts[0] == 4);
  CHECK(p2.ss.nondegenerate_count(2) == 2);  // two lattice paths in the square
  auto p3 = delta1_power(3, 3);
  CHECK(p3.ss.nondegenerate_count(3) == 6);
}

TEST_CASE("simplicial product and maps") {
  auto d1 = standard_simplex(1, 2);
  auto p = sset_product(d1, d1);
  CHECK(are_isomorphic(p.ss, delta1_power(2, 2).ss));
  CHECK(enumerate_simplicial_maps(standard_simplex(0, 2), d1).size() == 2);
}

TEST_CASE("nerve of categories") {
  auto arrow = nerve(walking_arrow(), 2);
  CHECK(arrow.counts[0] == 2);
  CHECK(arrow.nondegenerate_count(1) == 1);
  CHECK(arrow.nondegenerate_count(2) == 0);

  auto e1 = thin_interval(3);
  CHECK(e1.counts[0] == 2);
  for (int k = 1; k <= 3; ++k) CHECK(e1.counts[k] == (1u << (k + 1)));  // functor chains

  auto bz2 = nerve(cyclic_group_category(2), 3);
  CHECK(bz2.counts[0] == 1);
  CHECK(bz2.nondegenerate_count(1) == 1);

  auto chain = nerve(poset_chain(2), 2);
  CHECK(chain.nondegenerate_count(2) == 1);
  CHECK(initial_object(poset_chain(2)) == 0);
  CHECK(terminal_object(poset_chain(2)) == 2);
  CHECK(!initial_object(discrete_category(2)).has_value());
}

TEST_CASE("sset json round trip") {
  auto d2 = standard_simplex(2, 2);
  auto back = sset_from_json(sset_to_json(d2));
  CHECK(are_isomorphic(back, d2));
}
