#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cubix/graphs.hpp"

using namespace cubix;

TEST_CASE("graph builders and box product") {
  CHECK(graphs_isomorphic(box_product(interval_graph(1), interval_graph(1)), cycle_graph(4)));
  auto x = cycle_graph(5);
  CHECK(graphs_isomorphic(box_product(x, interval_graph(0)), x));
  CHECK(box_product(interval_graph(2), interval_graph(3)).order() == 12);
}

TEST_CASE("graph json round trip") {
  auto g = cycle_graph(5);
  auto back = graph_from_json(graph_to_json(g));
  CHECK(graphs_isomorphic(g, back));
  CHECK(graph_to_json(back) == graph_to_json(g));
  CHECK(graphs_isomorphic(graph_by_name("K3"), complete_graph(3)));
}

TEST_CASE("hom graphs") {
  auto i0 = interval_graph(0), i1 = interval_graph(1);
  auto c5 = cycle_graph(5);

  CHECK(graphs_isomorphic(hom_graph(i0, c5).g, c5));

  auto h11 = hom_graph(i1, i1);
  CHECK(h11.g.order() == 4);
  for (std::uint32_t i = 0; i < 4; ++i)
    for (std::uint32_t j = 0; j < 4; ++j) CHECK(h11.g.adjacent(i, j));

  auto h55 = hom_graph(c5, c5);
  auto comp = graph_components(h55.g);
  std::vector<std::uint32_t> id{0, 1, 2, 3, 4}, konst{0, 0, 0, 0, 0};
  CHECK(comp.cls[h55.index.at(id)] != comp.cls[h55.index.at(konst)]);
}

TEST_CASE("homotopy classes") {
  CHECK(homotopy_classes(cycle_graph(4), interval_graph(0)).classes.count == 1);
  CHECK(homotopy_classes(interval_graph(0), cycle_graph(5)).classes.count == 1);
  CHECK(homotopy_classes(cycle_graph(3), cycle_graph(3)).classes.count == 1);
  // C4 is contractible: all self-maps homotopic
  CHECK(homotopy_classes(cycle_graph(4), cycle_graph(4)).classes.count == 1);
  // C5 is not: at least id and constants differ
  CHECK(homotopy_classes(cycle_graph(5), cycle_graph(5)).classes.count >= 2);
}

TEST_CASE("adjunction bijection on small triples") {
  struct T {
    Graph x, y, z;
  };
  std::vector<T> corpus = {{interval_graph(1), interval_graph(1), cycle_graph(3)},
                           {interval_graph(0), cycle_graph(4), interval_graph(2)},
                           {cycle_graph(3), interval_graph(1), complete_graph(3)},
                           {interval_graph(2), interval_graph(1), cycle_graph(5)}};
  for (const auto& t : corpus) {
    auto lhs = enumerate_graph_maps(box_product(t.x, t.y), t.z);
    auto H = hom_graph(t.y, t.z);
    auto rhs = enumerate_graph_maps(t.x, H.g);
    // curried maps X -> hom(Y,Z) must be exactly the graph maps into the hom graph
    std::set<std::vector<std::uint32_t>> curried;
    for (const auto& f : lhs) {
      std::vector<std::uint32_t> cur(t.x.order());
      for (std::uint32_t a = 0; a < t.x.order(); ++a) {
        std::vector<std::uint32_t> slice(t.y.order());
        for (std::uint32_t b = 0; b < t.y.order(); ++b)
          slice[b] = f[a + t.x.order() * b];
        cur[a] = H.index.at(slice);
      }
      CHECK(is_graph_map(t.x, H.g, cur));
      CHECK(curried.insert(cur).second);
    }
    CHECK(curried.size() == rhs.size());
  }
}

TEST_CASE("homotopy paths concatenate into box homotopies") {
  auto c4 = cycle_graph(4);
  auto hc = homotopy_classes(c4, c4);
  std::vector<std::uint32_t> id{0, 1, 2, 3}, konst{0, 0, 0, 0};
  auto path = homotopy_path(hc.hom, id, konst);
  REQUIRE(path.has_value());
  CHECK(path->size() >= 2);
  auto H = chain_to_box_homotopy(c4, *path);
  auto dom = box_product(c4, interval_graph(static_cast<int>(path->size()) - 1));
  CHECK(is_graph_map(dom, c4, H));
  CHECK(std::vector<std::uint32_t>(H.begin(), H.begin() + 4) == id);
  CHECK(std::vector<std::uint32_t>(H.end() - 4, H.end()) == konst);
}

TEST_CASE("homotopy equivalences") {
  auto c4 = cycle_graph(4);
  auto c3 = cycle_graph(3);
  auto c5 = cycle_graph(5);
  auto i0 = interval_graph(0);

  // identity
  auto r = is_homotopy_equivalence(c5, c5, {0, 1, 2, 3, 4});
  CHECK(r.verdict == Certainty::Yes);

  // collapse C4 -> I0 and C3 -> I0
  auto r4 = is_homotopy_equivalence(c4, i0, {0, 0, 0, 0});
  REQUIRE(r4.verdict == Certainty::Yes);
  // witness data is a genuine homotopy: endpoints id and inverse-composite
  {
    auto hc = hom_graph(c4, c4);
    (void)hc;
    auto H = chain_to_box_homotopy(c4, r4.homotopy_gf);
    auto dom = box_product(c4, interval_graph(static_cast<int>(r4.homotopy_gf.size()) - 1));
    CHECK(is_graph_map(dom, c4, H));
  }
  CHECK(is_homotopy_equivalence(c3, i0, {0, 0, 0}).verdict == Certainty::Yes);

  // C5 -> I0 is refuted by H1 of the 1-nerve
  auto r5 = is_homotopy_equivalence(c5, i0, {0, 0, 0, 0, 0});
  CHECK(r5.verdict == Certainty::No);
  CHECK(r5.note.find("H_1") != std::string::npos);
}

TEST_CASE("nerve cell counts") {
  auto n_i0 = graph_nerve(interval_graph(0), 1, 2);
  for (int k = 0; k <= 2; ++k) CHECK(n_i0.cs.counts[k] == 1);

  auto n_c4 = graph_nerve(cycle_graph(4), 1, 2);
  CHECK(n_c4.cs.counts[0] == 4);
  CHECK(n_c4.cs.counts[1] == 12);

  // pi0 of the nerve of a hom graph matches homotopy classes
  for (auto [x, y] : {std::pair{cycle_graph(4), interval_graph(0)},
                      std::pair{cycle_graph(5), cycle_graph(5)}}) {
    auto hc = homotopy_classes(x, y);
    auto nerve = graph_nerve(hc.hom.g, 1, 1);
    CHECK(pi0(nerve.cs).count == hc.classes.count);
  }
}

TEST_CASE("nerve homology separates cycles") {
  auto h4 = homology_groups(graph_nerve(cycle_graph(4), 1, 2).cs, 1);
  CHECK(h4[1].text() == "H_1 = 0");
  auto h5 = homology_groups(graph_nerve(cycle_graph(5), 1, 2).cs, 1);
  CHECK(h5[1].text() == "H_1 = Z");
  auto h6 = homology_groups(graph_nerve(cycle_graph(6), 1, 2).cs, 1);
  CHECK(h6[1].text() == "H_1 = Z");
}

TEST_CASE("nerve of a contractible graph is Kan within truncation 2") {
  auto n = graph_nerve(complete_graph(2), 1, 2);
  CHECK(kan_box_check(n.cs, 2).empty());
}

TEST_CASE("level maps are injective cubical maps") {
  auto c4 = cycle_graph(4);
  auto n1 = graph_nerve(c4, 1, 2);
  auto n2 = graph_nerve(c4, 2, 2);
  for (bool left : {true, false}) {
    auto f = nerve_level_map(n1, n2, left);
    CHECK(is_natural(n1.cs, n2.cs, f));
    for (int k = 0; k <= 2; ++k) {
      std::set<std::uint32_t> img(f.level[k].begin(), f.level[k].end());
      CHECK(img.size() == n1.cs.counts[k]);  // injective
    }
  }
}

TEST_CASE("relative nerve over a parameter graph") {
  // V(X)_k = Graph(X box Q_k, Y): vertices are plain graph maps X -> Y
  auto V = graph_nerve_rel(cycle_graph(4), cycle_graph(4), 1, 1);
  CHECK(V.cs.counts[0] == 84);
  CHECK(pi0(V.cs).count == 1);  // C4 contractible: all maps homotopic
}
