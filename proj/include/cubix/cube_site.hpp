#ifndef CUBIX_CUBE_SITE_HPP
#define CUBIX_CUBE_SITE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cubix/errors.hpp"

namespace cubix {

// The cube category: objects are the posets [1]^n, morphisms are generated by
// faces d(i,e), degeneracies s(i) and connections g(i,e).  A morphism is
// identified with its underlying monotone vertex map {0,1}^m -> {0,1}^n;
// generator words are a presentation only.

enum class GenKind : std::uint8_t { Face, Degeneracy, Connection };

struct Generator {
  GenKind kind;
  int index;  // 1-based coordinate index
  int eps;    // 0 or 1; unused for degeneracies

  bool operator==(const Generator&) const = default;
};

// Vertices of [1]^n are bitmasks: bit (i-1) holds coordinate x_i.
using VertexMap = std::vector<std::uint32_t>;  // size 2^src_dim, values < 2^dst_dim

struct BoxMorphism {
  int src_dim = 0;
  int dst_dim = 0;
  VertexMap table;               // the faithful underlying function
  std::vector<Generator> word;   // canonical form, composition order (word[0] outermost)

  bool operator==(const BoxMorphism& o) const {
    return src_dim == o.src_dim && dst_dim == o.dst_dim && table == o.table;
  }
};

// --- generators -----------------------------------------------------------

// Dimension shift of a generator: faces +1, degeneracies/connections -1.
int generator_shift(GenKind k);

// Vertex table of a single generator applied at source dimension `from_dim`.
// Face d(i,e): [1]^from -> [1]^{from+1} inserts e at slot i (1 <= i <= from+1).
// Degeneracy s(i): [1]^from -> [1]^{from-1} omits slot i (1 <= i <= from).
// Connection g(i,e): [1]^from -> [1]^{from-1} merges slots i, i+1 by
// max (e = 0) or min (e = 1), for 1 <= i <= from-1.
VertexMap generator_table(const Generator& g, int from_dim);

BoxMorphism identity_morphism(int dim);
BoxMorphism face(int n, int i, int eps);        // [1]^{n-1} -> [1]^n
BoxMorphism degeneracy(int n, int i);           // [1]^n -> [1]^{n-1}
BoxMorphism connection(int n, int i, int eps);  // [1]^n -> [1]^{n-1}

// --- words and tables ------------------------------------------------------

// Table of a generator word (composition order), given the source dimension.
// Returns the composite table and writes the destination dimension.
VertexMap word_table(const std::vector<Generator>& word, int src_dim, int* dst_dim = nullptr);

bool is_monotone(const VertexMap& table, int src_dim, int dst_dim);

// g o f on tables.
VertexMap compose_tables(const VertexMap& g, const VertexMap& f);

// --- operations ------------------------------------------------------------

// Composition in the cube category; the result carries a canonical word.
BoxMorphism compose(const BoxMorphism& g, const BoxMorphism& f);

inline const VertexMap& underlying_function(const BoxMorphism& f) { return f.table; }

// Canonical word for a monotone vertex map, or nullopt if the map is not a
// composite of generators (NotInBox).  Throws DomainError on non-monotone
// input.  Canonical form: a block of degeneracies/connections applied first,
// then a block of faces, each deterministic.
std::optional<BoxMorphism> normal_form(const VertexMap& table, int src_dim, int dst_dim);

// Canonicalize an arbitrary type-correct word.
std::optional<BoxMorphism> normal_form_word(const std::vector<Generator>& word, int src_dim);

// All box morphisms [1]^k -> [1]^n (each in canonical form), enumerated
// deterministically.  Used to build representable cubical sets.
std::vector<BoxMorphism> all_morphisms(int k, int n);

// Surjective-part lookup: every canonical word of a degeneracy/connection
// composite [1]^m ->> [1]^k, keyed by table.  Cached per source dimension.
const std::vector<std::pair<VertexMap, std::vector<Generator>>>& surjection_words(int m, int k);

// --- cubical identities ----------------------------------------------------

struct IdentityInstance {
  std::vector<Generator> lhs;  // composition order
  std::vector<Generator> rhs;  // composition order; empty = identity
  int src_dim;
  const char* family;
};

// Every instance of the cubical identity table whose ambient dimension
// (largest object involved) is at most `max_ambient`.
std::vector<IdentityInstance> identity_instances(int max_ambient);

// --- text ------------------------------------------------------------------

std::string generator_text(const Generator& g);
std::string word_text(const std::vector<Generator>& word);  // "id" when empty
std::vector<Generator> parse_word(const std::string& text);
std::string table_text(const VertexMap& table, int src_dim, int dst_dim);

}  // namespace cubix

#endif
