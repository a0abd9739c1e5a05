#ifndef CUBIX_GRAPHS_HPP
#define CUBIX_GRAPHS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cubix/cset.hpp"
#include "cubix/homology.hpp"

namespace cubix {

// A finite reflexive graph: symmetric adjacency with an implicit loop at
// every vertex (loops are stored on the diagonal but never serialized).
struct Graph {
  std::vector<std::string> vnames;
  std::vector<std::vector<bool>> adj;

  std::size_t order() const { return adj.size(); }
  bool adjacent(std::uint32_t u, std::uint32_t v) const { return adj[u][v]; }
  std::string vertex_name(std::uint32_t v) const;
};

Graph make_graph(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                 std::vector<std::string> names = {});
Graph interval_graph(int n);  // I_n: 0 - 1 - ... - n
Graph cycle_graph(int n);     // C_n, n >= 3
Graph complete_graph(int n);  // K_n
// Builder from names like "I0", "C5", "K3".
Graph graph_by_name(const std::string& name);

void validate(const Graph& g);
bool graphs_isomorphic(const Graph& a, const Graph& b);

std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// --- box product and maps -----------------------------------------------------

// Vertex (a, b) of A box B is encoded as a + |A| * b.
Graph box_product(const Graph& A, const Graph& B);

bool is_graph_map(const Graph& X, const Graph& Y, const std::vector<std::uint32_t>& img);

// All graph maps X -> Y in lexicographic image order.
std::vector<std::vector<std::uint32_t>> enumerate_graph_maps(const Graph& X, const Graph& Y);

// The exponential graph for the box product: vertices are graph maps,
// f ~ g iff f(x) ~ g(x) for every vertex x (equivalently, a one-step homotopy
// H : X box I_1 -> Y with ends f and g exists).
struct HomGraph {
  Graph g;
  std::vector<std::vector<std::uint32_t>> maps;
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
};
HomGraph hom_graph(const Graph& X, const Graph& Y);

struct Partition {
  std::vector<std::uint32_t> cls;
  std::size_t count = 0;
};
Partition graph_components(const Graph& g);

// Partition of Graph(X, Y) into components of the hom graph.
struct HomotopyClasses {
  HomGraph hom;
  Partition classes;
};
HomotopyClasses homotopy_classes(const Graph& X, const Graph& Y);

// Shortest chain of one-step homotopies from f to g, if they are homotopic.
std::optional<std::vector<std::vector<std::uint32_t>>> homotopy_path(
    const HomGraph& H, const std::vector<std::uint32_t>& f, const std::vector<std::uint32_t>& g);

// Assemble a chain of one-step homotopies into H : X box I_k -> Y.
std::vector<std::uint32_t> chain_to_box_homotopy(const Graph& X,
                                                 const std::vector<std::vector<std::uint32_t>>& chain);

// --- homotopy equivalence --------------------------------------------------------

enum class Certainty { Yes, No, Unknown };

struct EquivalenceResult {
  Certainty verdict = Certainty::Unknown;
  std::vector<std::uint32_t> inverse;
  std::vector<std::vector<std::uint32_t>> homotopy_gf;  // id_X to g o f
  std::vector<std::vector<std::uint32_t>> homotopy_fg;  // id_Y to f o g
  std::string note;
};

// Yes: explicit inverse and homotopy chains.  No: only with an invariant
// certificate (component count or H1 of the 1-nerve).  Otherwise Unknown.
EquivalenceResult is_homotopy_equivalence(const Graph& X, const Graph& Y,
                                          const std::vector<std::uint32_t>& f,
                                          std::size_t search_bound = 2'000'000);

// --- nerves -----------------------------------------------------------------------

// grid I_m^{box k}; digits are little-endian base (m+1)
std::uint32_t grid_size(int m, int k);
Graph grid_graph(int m, int k);

// Relative nerve: k-cubes are graph maps P box I_m^{box k} -> X, with the
// cubical actions on the grid block (endpoint insertion, projection,
// max/min merge).  P = I_0 gives the plain nerve N^G_m.
struct GraphNerve {
  CubicalSet cs;
  int m = 1;
  std::size_t p_order = 1;
  // cubes[k][id]: images indexed by p + p_order * grid_encode(w)
  std::vector<std::vector<std::vector<std::uint16_t>>> cubes;
  std::vector<std::unordered_map<std::string, std::uint32_t>> index;  // key = raw bytes

  std::uint32_t cube_of(const std::vector<std::uint16_t>& img, int k) const;
};

GraphNerve graph_nerve_rel(const Graph& P, const Graph& X, int m, int D);
inline GraphNerve graph_nerve(const Graph& X, int m, int D) {
  return graph_nerve_rel(interval_graph(0), X, m, D);
}

// l* (left = true) or r* : N_m -> N_{m+1} on relative nerves over the same P.
CubicalMap nerve_level_map(const GraphNerve& Nm, const GraphNerve& Nm1, bool left);

}  // namespace cubix

#endif
