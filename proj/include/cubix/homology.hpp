#ifndef CUBIX_HOMOLOGY_HPP
#define CUBIX_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "cubix/cset.hpp"
#include "cubix/sset.hpp"

namespace cubix {

using Int = boost::multiprecision::cpp_int;

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<Int>> a;

  static IntMatrix zero(std::size_t r, std::size_t c) {
    IntMatrix m;
    m.rows = r;
    m.cols = c;
    m.a.assign(r, std::vector<Int>(c, 0));
    return m;
  }
  Int& at(std::size_t r, std::size_t c) { return a[r][c]; }
  const Int& at(std::size_t r, std::size_t c) const { return a[r][c]; }
};

struct SmithResult {
  std::vector<Int> divisors;  // nonzero invariant factors, d1 | d2 | ...
  std::size_t rank() const { return divisors.size(); }
};

// Exact Smith normal form; pivoting by minimal absolute value.
// When kernel_basis is non-null it receives an integer basis of ker(M)
// as column vectors.
SmithResult smith_normal_form(IntMatrix M, std::vector<std::vector<Int>>* kernel_basis = nullptr);

// Sparse integer matrix in triplet/row form for large boundary matrices.
struct SparseIntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, long long>>> col_entries;  // per column

  static SparseIntMatrix zero(std::size_t r, std::size_t c) {
    SparseIntMatrix m;
    m.rows = r;
    m.cols = c;
    m.col_entries.resize(c);
    return m;
  }
  void add(std::uint32_t r, std::uint32_t c, long long v) { col_entries[c].push_back({r, v}); }
  IntMatrix dense() const;
};

// SNF of a sparse matrix: unit-pivot elimination first, dense SNF on the core.
SmithResult smith_normal_form_sparse(const SparseIntMatrix& M);

// --- chain complexes ------------------------------------------------------------

struct HomologyGroup {
  int degree = 0;
  std::size_t betti = 0;
  std::vector<Int> torsion;  // > 1, divisibility chain

  bool operator==(const HomologyGroup& o) const {
    return degree == o.degree && betti == o.betti && torsion == o.torsion;
  }
  std::string text() const;  // "Z^b + Z/d1 + ..."
};

struct ChainComplex {
  std::vector<std::size_t> dims;            // cells per degree 0..K
  std::vector<SparseIntMatrix> boundary;    // boundary[k]: C_k -> C_{k-1}, k >= 1

  int top_degree() const { return static_cast<int>(dims.size()) - 1; }
};

// boundary o boundary = 0 (checked exactly).
bool boundaries_square_to_zero(const ChainComplex& C);

std::vector<HomologyGroup> homology_of_complex(const ChainComplex& C, int up_to);

// Normalized chain complex of a truncated simplicial set (nondegenerate
// simplices, alternating-sign faces, degenerate faces dropped).
struct SimplicialComplexCells {
  ChainComplex cc;
  std::vector<std::vector<std::uint32_t>> cell_of_simplex;  // simplex id -> cell id or NONE
  std::vector<std::vector<std::uint32_t>> simplex_of_cell;
  static constexpr std::uint32_t NONE = UINT32_MAX;
};
SimplicialComplexCells normalized_complex(const SimplicialSet& S);

// Normalized complex of the triangulation of a cubical set, built directly on
// (nondegenerate cube, interior chain) cells; scales to large inputs.
struct CubicalTriangulatedComplex {
  ChainComplex cc;
  // cells[k]: (cube dim, cube id, strictly increasing interior vertex chain)
  std::vector<std::vector<std::tuple<int, std::uint32_t, std::vector<std::uint32_t>>>> cells;
  std::vector<std::map<std::tuple<int, std::uint32_t, std::vector<std::uint32_t>>, std::uint32_t>>
      index;
};
CubicalTriangulatedComplex triangulated_complex(const CubicalSet& X);

// Normalize a (cube, chain) pair to a cell id, or NONE if it is degenerate.
std::uint32_t normalize_cell(const CubicalSet& X,
                             const std::vector<std::vector<std::optional<DegeneracyWitness>>>& wit,
                             const CubicalTriangulatedComplex& T, int k, int n, std::uint32_t x,
                             std::vector<std::uint32_t> chain);

// Cell map in each degree induced by a cubical map (entries: target cell or NONE).
std::vector<std::vector<std::uint32_t>> triangulated_cell_map(const CubicalSet& X,
                                                              const CubicalSet& Y,
                                                              const CubicalMap& f,
                                                              const CubicalTriangulatedComplex& TX,
                                                              const CubicalTriangulatedComplex& TY);

// Convenience: homology of a cubical set through triangulation.
std::vector<HomologyGroup> homology_groups(const CubicalSet& X, int up_to);
std::vector<HomologyGroup> homology_groups(const SimplicialSet& S, int up_to);

// --- induced map on H1 -------------------------------------------------------------

struct H1ComparisonReport {
  HomologyGroup h1_src, h1_dst;
  bool abstract_equal = false;
  bool surjective = false;
  bool isomorphism() const { return abstract_equal && surjective; }
};

// Decides whether the induced map H1(src) -> H1(dst) is an isomorphism.
// Surjectivity plus abstract equality suffices (finitely generated abelian
// groups are Hopfian).  The source side must be small enough for dense kernels.
H1ComparisonReport h1_induced_comparison(const CubicalSet& X, const CubicalSet& Y,
                                         const CubicalMap& f);

}  // namespace cubix

#endif
