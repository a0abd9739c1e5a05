#ifndef CUBIX_SSET_HPP
#define CUBIX_SSET_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubix/errors.hpp"

namespace cubix {

// A finite simplicial set truncated at max_dim.  Face indices are 0-based.
struct SimplicialSet {
  int max_dim = 0;
  std::vector<std::size_t> counts;
  std::vector<std::vector<std::string>> names;
  // faces_[n][i]  : X_n -> X_{n-1}, 0 <= i <= n
  std::vector<std::vector<std::vector<std::uint32_t>>> faces_;
  // degens_[n][i] : X_{n-1} -> X_n, 0 <= i <= n-1
  std::vector<std::vector<std::vector<std::uint32_t>>> degens_;
  std::vector<std::vector<bool>> degenerate;

  std::size_t size(int n) const { return n >= 0 && n <= max_dim ? counts[n] : 0; }
  std::uint32_t face(int n, int i, std::uint32_t x) const { return faces_[n][i][x]; }
  std::uint32_t degen(int n, int i, std::uint32_t x) const { return degens_[n][i][x]; }
  std::string simplex_name(int n, std::uint32_t x) const;
  std::size_t nondegenerate_count(int n) const;

  void allocate(int D);
};

void recompute_degenerate(SimplicialSet& X);
void validate(const SimplicialSet& X);

// Standard simplex Delta^n truncated at D; simplices are monotone vertex chains.
SimplicialSet standard_simplex(int n, int D);

// (Delta^1)^n: k-simplices are weakly increasing chains in the poset [1]^n
// (vertices as bitmasks).  Chain payloads are retrievable for gluing.
struct CubePower {
  SimplicialSet ss;
  std::vector<std::vector<std::vector<std::uint32_t>>> chains;  // per dim, per simplex
  std::vector<std::map<std::vector<std::uint32_t>, std::uint32_t>> index;
  int n = 0;
};
CubePower delta1_power(int n, int D);

struct SimplicialMap {
  std::vector<std::vector<std::uint32_t>> level;
};

SimplicialMap identity_map(const SimplicialSet& X);
bool is_natural(const SimplicialSet& X, const SimplicialSet& Y, const SimplicialMap& f);
std::vector<SimplicialMap> enumerate_simplicial_maps(const SimplicialSet& X,
                                                     const SimplicialSet& Y);
std::optional<SimplicialMap> find_simplicial_isomorphism(const SimplicialSet& X,
                                                         const SimplicialSet& Y);
inline bool are_isomorphic(const SimplicialSet& X, const SimplicialSet& Y) {
  return find_simplicial_isomorphism(X, Y).has_value();
}

// Levelwise product with componentwise actions.
struct SsetProduct {
  SimplicialSet ss;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> pairs;
  std::vector<std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t>> index;
};
SsetProduct sset_product(const SimplicialSet& A, const SimplicialSet& B);

std::string sset_to_json(const SimplicialSet& X);
SimplicialSet sset_from_json(const std::string& text);

}  // namespace cubix

#endif
