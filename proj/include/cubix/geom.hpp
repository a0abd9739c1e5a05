#ifndef CUBIX_GEOM_HPP
#define CUBIX_GEOM_HPP

#include <array>
#include <map>

#include "cubix/cset.hpp"
#include "cubix/sset.hpp"

namespace cubix {

// --- geometric product -------------------------------------------------------

// X tensor Y.  k-cubes are pairs (x in X_m, y in Y_n), m+n = k, subject to
// (x.s_{m+1}, y) = (x, y.s_1); the canonical representative pushes last-slot
// degeneracies of the left factor into the right factor.
struct TensorResult {
  CubicalSet cs;  // truncated at min of the factor truncations
  std::vector<std::vector<std::array<std::uint32_t, 3>>> pairs;  // [k]: (m, x, y)
  std::vector<std::map<std::array<std::uint32_t, 3>, std::uint32_t>> index;
  // rewriting data
  std::vector<std::vector<std::int64_t>> left_sigma_last_pre;  // [m][x]
  std::vector<std::vector<std::uint32_t>> right_sigma1;        // [n]: Y_{n-1} -> Y_n

  // canonical cube id of the class of (x in X_m, y in Y_{k-m})
  std::uint32_t pair_cube(int k, int m, std::uint32_t x, std::uint32_t y) const;
};

TensorResult tensor(const CubicalSet& X, const CubicalSet& Y);

// f tensor id_Y and id_X tensor f.
CubicalMap tensor_map_left(const CubicalSet& A, const CubicalSet& B, const CubicalMap& f,
                           const CubicalSet& Y, const TensorResult& AY, const TensorResult& BY);
CubicalMap tensor_map_right(const CubicalSet& X, const TensorResult& XA,
                            const TensorResult& XB, const CubicalSet& A, const CubicalSet& B,
                            const CubicalMap& f);

// Block sum of box morphisms: u tensor v with the left factor on low slots.
BoxMorphism box_tensor(const BoxMorphism& u, const BoxMorphism& v);

// The canonical isomorphism cube^a tensor cube^b -> cube^{a+b}.
CubicalMap representable_tensor_iso(const StandardCell& A, const StandardCell& B,
                                    const TensorResult& T, const StandardCell& AB);

// --- internal hom --------------------------------------------------------------

// Right adjoint to - tensor X, computed by map enumeration:
// hom(X, Y)_n = maps(cube^n tensor X -> Y), actions by precomposition.
struct InternalHom {
  CubicalSet cs;                               // truncated at D
  std::vector<std::vector<CubicalMap>> maps;   // per dim n, in cs index order
  std::vector<StandardCell> cube_n;            // per n
  std::vector<TensorResult> dom;               // per n: cube^n tensor X
  std::vector<std::map<std::vector<std::uint32_t>, std::uint32_t>> lookup;  // flattened map key

  std::uint32_t index_of(const CubicalMap& f, int n) const;
};

InternalHom internal_hom(const CubicalSet& X, const CubicalSet& Y, int D);

// Fast path for a representable first argument:
// hom(cube^m, M)_n = M_{n+m} with actions inherited from the low block.
// Requires D + m <= M.max_dim.
CubicalSet internal_hom_representable(int m, const CubicalSet& M, int D);

// hom(A, g) for g: M -> N, on the representable fast path carriers.
CubicalMap internal_hom_representable_map(int m, const CubicalSet& M, const CubicalSet& N,
                                          const CubicalMap& g, int D);

// Adjunction transpose of F: Z tensor X -> Y into Z -> hom(X, Y).
CubicalMap hom_transpose(const CubicalSet& Z, const TensorResult& ZX, const CubicalMap& F,
                         const InternalHom& H);

// --- triangulation ---------------------------------------------------------------

// T X, computed as the literal colimit over the cubes of X of (Delta^1)^n.
// Suitable for small inputs; homology uses the normalized-complex route instead.
struct Triangulation {
  SimplicialSet ss;
  // per simplex, a representative (cube dim, cube, vertex chain)
  std::vector<std::vector<std::tuple<int, std::uint32_t, std::vector<std::uint32_t>>>> reps;
  // class of every generating (cube dim, cube, chain) triple
  std::vector<std::map<std::tuple<int, std::uint32_t, std::vector<std::uint32_t>>, std::uint32_t>>
      index;

  std::uint32_t class_of(int k, int n, std::uint32_t x, const std::vector<std::uint32_t>& chain) const {
    return index[k].at({n, x, chain});
  }
};
Triangulation triangulate(const CubicalSet& X);

// Induced simplicial map T f for f: X -> Y.
SimplicialMap triangulate_map(const CubicalSet& X, const CubicalMap& f, const Triangulation& TX,
                              const Triangulation& TY);

// U: right adjoint to triangulation, (U S)_n = sSet((Delta^1)^n, S) for n <= D.
struct CotriangulationResult {
  CubicalSet cs;
  std::vector<std::vector<SimplicialMap>> maps;  // per dim
  std::vector<std::map<std::vector<std::uint32_t>, std::uint32_t>> lookup;
  std::uint32_t index_of(const SimplicialMap& f, int n) const;
};
CotriangulationResult cotriangulate(const SimplicialSet& S, int D);

// Lax monoidality structure map alpha: U A tensor U B -> U (A x B).
CubicalMap monoidal_structure_map(const SimplicialSet& A, const SimplicialSet& B,
                                  const CotriangulationResult& UA,
                                  const CotriangulationResult& UB, const TensorResult& UAUB,
                                  const SsetProduct& AxB, const CotriangulationResult& UAxB);

// --- bicubical sets ---------------------------------------------------------------

// Rows are cubical sets in the vertical direction; horizontal structure is a
// family of cubical maps between rows.  Naturality of those maps is exactly
// the commutation of the two action families.
struct BicubicalSet {
  int max_h = 0;
  std::vector<CubicalSet> rows;  // rows[m] = B_{m, *}
  // hfaces[m][(i-1)*2+e]: rows[m] -> rows[m-1], 1 <= i <= m
  std::vector<std::vector<CubicalMap>> hfaces;
  // hdegens[m][i-1]: rows[m-1] -> rows[m], 1 <= i <= m
  std::vector<std::vector<CubicalMap>> hdegens;
  // hconns[m][(i-1)*2+e]: rows[m-1] -> rows[m], 1 <= i <= m-1
  std::vector<std::vector<CubicalMap>> hconns;
};

void validate(const BicubicalSet& B);

// [1]^m |-> discrete cubical set on X_m.
BicubicalSet levelwise_discrete_bicubical(const CubicalSet& X);

CubicalSet diagonal(const BicubicalSet& B);

// pi0 of the diagonal computed from the (0,*) row glued along horizontal edges.
Pi0 pi0_rowwise(const BicubicalSet& B);

}  // namespace cubix

#endif
