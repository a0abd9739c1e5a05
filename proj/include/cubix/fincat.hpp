#ifndef CUBIX_FINCAT_HPP
#define CUBIX_FINCAT_HPP

#include <optional>
#include <string>
#include <vector>

#include "cubix/sset.hpp"

namespace cubix {

// A small ordinary category given by explicit composition tables.
struct FiniteCategory {
  struct Mor {
    int src;
    int dst;
    std::string name;
  };
  std::vector<std::string> objects;
  std::vector<Mor> mors;
  std::vector<int> identity;              // per object, morphism id
  std::vector<std::vector<int>> compose;  // compose[g][f] = g o f, -1 if not composable

  int comp(int g, int f) const { return compose[g][f]; }
  std::vector<int> hom(int a, int b) const;
};

void validate(const FiniteCategory& C);

FiniteCategory discrete_category(int n);
FiniteCategory walking_arrow();             // 0 -> 1
FiniteCategory poset_chain(int n);          // 0 -> 1 -> ... -> n, all composites
FiniteCategory thin_groupoid(int n);        // exactly one morphism between any two objects
FiniteCategory cyclic_group_category(int n);  // one object, Z/n

std::optional<int> initial_object(const FiniteCategory& C);
std::optional<int> terminal_object(const FiniteCategory& C);
bool is_isomorphism_in(const FiniteCategory& C, int f);

// Nerve truncated at n_max: k-simplices are composable chains, degeneracies
// insert identities.
SimplicialSet nerve(const FiniteCategory& C, int n_max);

// The nerve of the thin groupoid on {0,1}.
inline SimplicialSet thin_interval(int n_max = 3) { return nerve(thin_groupoid(2), n_max); }

}  // namespace cubix

#endif
