#ifndef CUBIX_CSET_HPP
#define CUBIX_CSET_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubix/cube_site.hpp"
#include "cubix/errors.hpp"

namespace cubix {

// A finite cubical set truncated at max_dim.  Contravariant actions are stored
// as index tables: faces lower dimension by one, degeneracies and connections
// raise it by one.
struct CubicalSet {
  int max_dim = 0;
  std::vector<std::size_t> counts;                         // [0..max_dim]
  std::vector<std::vector<std::string>> names;             // optional per dim
  // faces_[n][(i-1)*2+eps] : X_n -> X_{n-1}   (1 <= i <= n <= max_dim)
  std::vector<std::vector<std::vector<std::uint32_t>>> faces_;
  // degens_[n][i-1]        : X_{n-1} -> X_n   (1 <= i <= n <= max_dim)
  std::vector<std::vector<std::vector<std::uint32_t>>> degens_;
  // conns_[n][(i-1)*2+eps] : X_{n-1} -> X_n   (1 <= i <= n-1, 2 <= n <= max_dim)
  std::vector<std::vector<std::vector<std::uint32_t>>> conns_;
  std::vector<std::vector<bool>> degenerate;

  std::size_t size(int n) const { return n >= 0 && n <= max_dim ? counts[n] : 0; }
  std::uint32_t face(int n, int i, int eps, std::uint32_t x) const {
    return faces_[n][(i - 1) * 2 + eps][x];
  }
  std::uint32_t degen(int n, int i, std::uint32_t x) const { return degens_[n][i - 1][x]; }
  std::uint32_t conn(int n, int i, int eps, std::uint32_t x) const {
    return conns_[n][(i - 1) * 2 + eps][x];
  }
  std::string cube_name(int n, std::uint32_t x) const;

  std::size_t total_cubes() const;
  std::size_t nondegenerate_count(int n) const;

  void allocate(int D);  // resize all tables for counts set per dim
};

// Action of a single covariant generator on a cube.  For faces, x lives in
// dimension cube_dim and the result in cube_dim-1; for degeneracies and
// connections, x lives in cube_dim and the result in cube_dim+1.
std::uint32_t act(const CubicalSet& X, const Generator& g, int cube_dim, std::uint32_t x);

// Action of a whole box morphism (x has the morphism's destination dimension,
// the result has its source dimension).
std::uint32_t act_word(const CubicalSet& X, const std::vector<Generator>& word, int dst_dim,
                       std::uint32_t x);

// Recompute degeneracy flags from the sigma/gamma action images.
void recompute_degenerate(CubicalSet& X);

// For each degenerate cube, one (generator, preimage) witness.
struct DegeneracyWitness {
  Generator g;
  std::uint32_t preimage;
};
std::vector<std::vector<std::optional<DegeneracyWitness>>> degeneracy_witnesses(
    const CubicalSet& X);

// Full structural validation: totality of action tables, every contravariant
// cubical identity within the truncation, and degeneracy-flag consistency.
// Throws DomainError on the first violation.
void validate(const CubicalSet& X);

// --- standard cells ---------------------------------------------------------

enum class CellKind { Cube, Boundary, OpenBox };

// A representable (or sub-representable) cubical set together with the box
// morphisms its cubes stand for.
struct StandardCell {
  CubicalSet cs;
  std::vector<std::vector<BoxMorphism>> cubes;              // per dim
  std::vector<std::map<VertexMap, std::uint32_t>> index;    // table -> cube id
  int n = 0;

  std::uint32_t id_cube() const { return index[n].at(identity_morphism(n).table); }
  std::uint32_t cube_of(const VertexMap& t, int k) const { return index[k].at(t); }
};

StandardCell standard_cell(CellKind kind, int n, int i, int eps, int D);
inline StandardCell standard_cube(int n, int D) {
  return standard_cell(CellKind::Cube, n, 0, 0, D);
}
inline StandardCell boundary_cell(int n, int D) {
  return standard_cell(CellKind::Boundary, n, 0, 0, D);
}
inline StandardCell open_box(int n, int i, int eps, int D) {
  return standard_cell(CellKind::OpenBox, n, i, eps, D);
}

CubicalSet empty_cset(int D);
CubicalSet discrete_cset(std::size_t points, int D);  // all cubes degenerate above dim 0

// --- maps --------------------------------------------------------------------

struct CubicalMap {
  std::vector<std::vector<std::uint32_t>> level;  // per dim 0..D
};

CubicalMap identity_map(const CubicalSet& X);
CubicalMap compose(const CubicalSet& /*unused*/, const CubicalMap& g, const CubicalMap& f);
bool is_natural(const CubicalSet& X, const CubicalSet& Y, const CubicalMap& f);
bool is_bijective(const CubicalSet& X, const CubicalSet& Y, const CubicalMap& f);
CubicalMap inverse_map(const CubicalSet& X, const CubicalSet& Y, const CubicalMap& f);

// The complete set of cubical maps X -> Y (equal truncations required),
// in deterministic order.  Throws ResourceError past the cell budget.
std::vector<CubicalMap> enumerate_maps(const CubicalSet& X, const CubicalSet& Y);

// Structure-refined cube colors computed jointly on two sets, so that any
// isomorphism must match colors.  Used to prune the isomorphism search.
std::pair<std::vector<std::vector<std::uint32_t>>, std::vector<std::vector<std::uint32_t>>>
joint_refinement_colors(const CubicalSet& X, const CubicalSet& Y);

// Search for a levelwise bijective natural map; nullopt if none exists.
std::optional<CubicalMap> find_isomorphism(const CubicalSet& X, const CubicalSet& Y);
inline bool are_isomorphic(const CubicalSet& X, const CubicalSet& Y) {
  return find_isomorphism(X, Y).has_value();
}

// --- invariants ----------------------------------------------------------------

struct Pi0 {
  std::vector<std::uint32_t> component;  // per vertex, ids 0..count-1 in first-seen order
  std::size_t count = 0;
};
Pi0 pi0(const CubicalSet& X);

// Map on path components induced by a cubical map.
std::vector<std::uint32_t> pi0_map(const CubicalSet& X, const CubicalSet& Y, const CubicalMap& f);

struct KanFailure {
  int n;
  int i;
  int eps;
  std::size_t box_map_index;
};
// Exhaustive open-box filler search in dimensions <= d (within truncation).
std::vector<KanFailure> kan_box_check(const CubicalSet& X, int d);

// --- JSON ----------------------------------------------------------------------

std::string cset_to_json(const CubicalSet& X);
CubicalSet cset_from_json(const std::string& text);

}  // namespace cubix

#endif
