#include "cubix/fincat.hpp"

#include <functional>
#include <map>

#include "cubix/errors.hpp"

namespace cubix {

std::vector<int> FiniteCategory::hom(int a, int b) const {
  std::vector<int> out;
  for (std::size_t m = 0; m < mors.size(); ++m)
    if (mors[m].src == a && mors[m].dst == b) out.push_back(static_cast<int>(m));
  return out;
}

void validate(const FiniteCategory& C) {
  auto fail = [](const std::string& m) { throw DomainError("category invalid: " + m); };
  const int M = static_cast<int>(C.mors.size());
  if (static_cast<int>(C.identity.size()) != static_cast<int>(C.objects.size())) fail("identity list");
  for (std::size_t o = 0; o < C.objects.size(); ++o) {
    int e = C.identity[o];
    if (C.mors[e].src != static_cast<int>(o) || C.mors[e].dst != static_cast<int>(o))
      fail("identity endpoints");
  }
  if (static_cast<int>(C.compose.size()) != M) fail("composition table");
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f) {
      int gf = C.compose[g][f];
      const bool composable = C.mors[f].dst == C.mors[g].src;
      if (!composable) {
        if (gf != -1) fail("composite of non-composable pair");
        continue;
      }
      if (gf < 0 || gf >= M) fail("composite out of range");
      if (C.mors[gf].src != C.mors[f].src || C.mors[gf].dst != C.mors[g].dst)
        fail("composite endpoints");
    }
  for (int f = 0; f < M; ++f) {
    if (C.comp(C.identity[C.mors[f].dst], f) != f) fail("left unit");
    if (C.comp(f, C.identity[C.mors[f].src]) != f) fail("right unit");
  }
  for (int h = 0; h < M; ++h)
    for (int g = 0; g < M; ++g)
      for (int f = 0; f < M; ++f)
        if (C.mors[f].dst == C.mors[g].src && C.mors[g].dst == C.mors[h].src)
          if (C.comp(C.comp(h, g), f) != C.comp(h, C.comp(g, f))) fail("associativity");
}

namespace {
FiniteCategory from_graph(std::vector<std::string> objects,
                          std::vector<FiniteCategory::Mor> mors,
                          const std::function<int(int, int)>& comp_rule) {
  FiniteCategory C;
  C.objects = std::move(objects);
  C.mors = std::move(mors);
  C.identity.assign(C.objects.size(), -1);
  for (std::size_t m = 0; m < C.mors.size(); ++m)
    if (C.mors[m].name == "id" + std::to_string(C.mors[m].src) && C.mors[m].src == C.mors[m].dst)
      C.identity[C.mors[m].src] = static_cast<int>(m);
  const int M = static_cast<int>(C.mors.size());
  C.compose.assign(M, std::vector<int>(M, -1));
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f)
      if (C.mors[f].dst == C.mors[g].src) C.compose[g][f] = comp_rule(g, f);
  validate(C);
  return C;
}
}  // namespace

FiniteCategory discrete_category(int n) {
  std::vector<std::string> obj;
  std::vector<FiniteCategory::Mor> mors;
  for (int i = 0; i < n; ++i) {
    obj.push_back("x" + std::to_string(i));
    mors.push_back({i, i, "id" + std::to_string(i)});
  }
  return from_graph(obj, mors, [](int g, int f) { return g == f ? g : -1; });
}

FiniteCategory walking_arrow() { return poset_chain(1); }

FiniteCategory poset_chain(int n) {
  std::vector<std::string> obj;
  for (int i = 0; i <= n; ++i) obj.push_back(std::to_string(i));
  std::vector<FiniteCategory::Mor> mors;
  std::map<std::pair<int, int>, int> id_of;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      id_of[{i, j}] = static_cast<int>(mors.size());
      mors.push_back({i, j, i == j ? "id" + std::to_string(i)
                                   : std::to_string(i) + "<" + std::to_string(j)});
    }
  FiniteCategory C;
  C.objects = obj;
  C.mors = mors;
  C.identity.resize(obj.size());
  for (int i = 0; i <= n; ++i) C.identity[i] = id_of[{i, i}];
  const int M = static_cast<int>(mors.size());
  C.compose.assign(M, std::vector<int>(M, -1));
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f)
      if (C.mors[f].dst == C.mors[g].src)
        C.compose[g][f] = id_of[{C.mors[f].src, C.mors[g].dst}];
  validate(C);
  return C;
}

FiniteCategory thin_groupoid(int n) {
  std::vector<std::string> obj;
  for (int i = 0; i < n; ++i) obj.push_back(std::to_string(i));
  std::vector<FiniteCategory::Mor> mors;
  std::map<std::pair<int, int>, int> id_of;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      id_of[{i, j}] = static_cast<int>(mors.size());
      mors.push_back({i, j, i == j ? "id" + std::to_string(i)
                                   : std::to_string(i) + ">" + std::to_string(j)});
    }
  FiniteCategory C;
  C.objects = obj;
  C.mors = mors;
  C.identity.resize(n);
  for (int i = 0; i < n; ++i) C.identity[i] = id_of[{i, i}];
  const int M = static_cast<int>(mors.size());
  C.compose.assign(M, std::vector<int>(M, -1));
  for (int g = 0; g < M; ++g)
    for (int f = 0; f < M; ++f)
      if (C.mors[f].dst == C.mors[g].src)
        C.compose[g][f] = id_of[{C.mors[f].src, C.mors[g].dst}];
  validate(C);
  return C;
}

FiniteCategory cyclic_group_category(int n) {
  FiniteCategory C;
  C.objects = {"*"};
  for (int k = 0; k < n; ++k)
    C.mors.push_back({0, 0, k == 0 ? "id0" : "r" + std::to_string(k)});
  C.identity = {0};
  C.compose.assign(n, std::vector<int>(n, -1));
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) C.compose[g][f] = (g + f) % n;
  validate(C);
  return C;
}

std::optional<int> initial_object(const FiniteCategory& C) {
  for (std::size_t a = 0; a < C.objects.size(); ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < C.objects.size() && ok; ++b)
      if (C.hom(static_cast<int>(a), static_cast<int>(b)).size() != 1) ok = false;
    if (ok) return static_cast<int>(a);
  }
  return std::nullopt;
}

std::optional<int> terminal_object(const FiniteCategory& C) {
  for (std::size_t b = 0; b < C.objects.size(); ++b) {
    bool ok = true;
    for (std::size_t a = 0; a < C.objects.size() && ok; ++a)
      if (C.hom(static_cast<int>(a), static_cast<int>(b)).size() != 1) ok = false;
    if (ok) return static_cast<int>(b);
  }
  return std::nullopt;
}

bool is_isomorphism_in(const FiniteCategory& C, int f) {
  const int a = C.mors[f].src, b = C.mors[f].dst;
  for (int g : C.hom(b, a))
    if (C.comp(g, f) == C.identity[a] && C.comp(f, g) == C.identity[b]) return true;
  return false;
}

SimplicialSet nerve(const FiniteCategory& C, int n_max) {
  SimplicialSet X;
  X.allocate(n_max);
  // k-simplices: chains (f_1, ..., f_k) with dst(f_i) = src(f_{i+1});
  // a 0-simplex is an object.
  std::vector<std::vector<std::vector<int>>> simp(n_max + 1);
  std::vector<std::map<std::vector<int>, std::uint32_t>> idx(n_max + 1);
  for (std::size_t o = 0; o < C.objects.size(); ++o) {
    idx[0][{static_cast<int>(o)}] = static_cast<std::uint32_t>(simp[0].size());
    simp[0].push_back({static_cast<int>(o)});
    X.names[0].push_back(C.objects[o]);
  }
  for (int k = 1; k <= n_max; ++k) {
    std::vector<int> chain;
    // depth-first enumeration of composable chains
    std::function<void()> rec = [&]() {
      if (static_cast<int>(chain.size()) == k) {
        idx[k][chain] = static_cast<std::uint32_t>(simp[k].size());
        std::string nm;
        for (std::size_t i = 0; i < chain.size(); ++i) {
          if (i) nm += "|";
          nm += C.mors[chain[i]].name;
        }
        simp[k].push_back(chain);
        X.names[k].push_back(nm);
        return;
      }
      for (std::size_t m = 0; m < C.mors.size(); ++m) {
        if (!chain.empty() && C.mors[chain.back()].dst != C.mors[m].src) continue;
        chain.push_back(static_cast<int>(m));
        rec();
        chain.pop_back();
      }
    };
    rec();
  }
  for (int k = 0; k <= n_max; ++k) X.counts[k] = simp[k].size();
  for (int k = 1; k <= n_max; ++k) {
    X.faces_[k].assign(k + 1, std::vector<std::uint32_t>(X.counts[k]));
    for (std::uint32_t s = 0; s < X.counts[k]; ++s) {
      const auto& ch = simp[k][s];
      for (int i = 0; i <= k; ++i) {
        std::vector<int> nc;
        if (k == 1) {
          nc = {i == 0 ? C.mors[ch[0]].dst : C.mors[ch[0]].src};
        } else if (i == 0) {
          nc.assign(ch.begin() + 1, ch.end());
        } else if (i == k) {
          nc.assign(ch.begin(), ch.end() - 1);
        } else {
          nc.assign(ch.begin(), ch.end());
          int comp = C.comp(nc[i], nc[i - 1]);
          nc[i - 1] = comp;
          nc.erase(nc.begin() + i);
        }
        X.faces_[k][i][s] = idx[k - 1].at(nc);
      }
    }
    X.degens_[k].assign(k, std::vector<std::uint32_t>(X.counts[k - 1]));
    for (std::uint32_t s = 0; s < X.counts[k - 1]; ++s) {
      const auto& ch = simp[k - 1][s];
      for (int i = 0; i < k; ++i) {
        std::vector<int> nc;
        if (k == 1) {
          nc = {C.identity[ch[0]]};
        } else {
          nc.assign(ch.begin(), ch.end());
          int obj = i == 0 ? C.mors[ch[0]].src : C.mors[ch[i - 1]].dst;
          nc.insert(nc.begin() + i, C.identity[obj]);
        }
        X.degens_[k][i][s] = idx[k].at(nc);
      }
    }
  }
  recompute_degenerate(X);
  validate(X);
  return X;
}

}  // namespace cubix
