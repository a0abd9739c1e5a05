#include "cubix/geom.hpp"

#include <algorithm>
#include <functional>
#include <tuple>
#include <numeric>

namespace cubix {

namespace {
constexpr std::size_t kNameCap = 20000;  // skip semantic names on bigger carriers
}

// --- tensor ---------------------------------------------------------------------

std::uint32_t TensorResult::pair_cube(int k, int m, std::uint32_t x, std::uint32_t y) const {
  while (m >= 1 && left_sigma_last_pre[m][x] >= 0) {
    const int n = k - m;
    x = static_cast<std::uint32_t>(left_sigma_last_pre[m][x]);
    y = right_sigma1[n + 1][y];
    --m;
  }
  return index[k].at({static_cast<std::uint32_t>(m), x, y});
}

TensorResult tensor(const CubicalSet& X, const CubicalSet& Y) {
  const int D = std::min(X.max_dim, Y.max_dim);
  TensorResult T;
  T.cs.allocate(D);
  T.pairs.resize(D + 1);
  T.index.resize(D + 1);

  T.left_sigma_last_pre.resize(X.max_dim + 1);
  for (int m = 0; m <= X.max_dim; ++m) T.left_sigma_last_pre[m].assign(X.counts[m], -1);
  for (int m = 1; m <= X.max_dim; ++m)
    for (std::uint32_t p = 0; p < X.counts[m - 1]; ++p)
      T.left_sigma_last_pre[m][X.degen(m, m, p)] = p;
  T.right_sigma1.resize(Y.max_dim + 1);
  for (int n = 1; n <= Y.max_dim; ++n) T.right_sigma1[n] = Y.degens_[n][0];

  const bool with_names = [&] {
    std::size_t worst = 0;
    for (int k = 0; k <= D; ++k)
      for (int m = 0; m <= k; ++m) worst += X.size(m) * Y.size(k - m);
    return worst <= kNameCap;
  }();

  for (int k = 0; k <= D; ++k) {
    for (int m = 0; m <= k; ++m) {
      const int n = k - m;
      for (std::uint32_t x = 0; x < X.counts[m]; ++x) {
        if (m >= 1 && T.left_sigma_last_pre[m][x] >= 0) continue;  // non-canonical
        for (std::uint32_t y = 0; y < Y.counts[n]; ++y) {
          T.index[k][{static_cast<std::uint32_t>(m), x, y}] =
              static_cast<std::uint32_t>(T.pairs[k].size());
          T.pairs[k].push_back({static_cast<std::uint32_t>(m), x, y});
          if (with_names)
            T.cs.names[k].push_back(X.cube_name(m, x) + "(x)" + Y.cube_name(n, y));
        }
      }
    }
    T.cs.counts[k] = T.pairs[k].size();
    check_budget(T.pairs[k].size(), "tensor");
  }

  for (int k = 1; k <= D; ++k) {
    T.cs.faces_[k].assign(2 * k, std::vector<std::uint32_t>(T.cs.counts[k]));
    for (int i = 1; i <= k; ++i)
      for (int e = 0; e <= 1; ++e) {
        auto& tab = T.cs.faces_[k][(i - 1) * 2 + e];
        for (std::uint32_t c = 0; c < T.cs.counts[k]; ++c) {
          auto [m, x, y] = T.pairs[k][c];
          const int mm = static_cast<int>(m), n = k - mm;
          if (i <= mm) tab[c] = T.pair_cube(k - 1, mm - 1, X.face(mm, i, e, x), y);
          else tab[c] = T.pair_cube(k - 1, mm, x, Y.face(n, i - mm, e, y));
        }
      }
    T.cs.degens_[k].assign(k, std::vector<std::uint32_t>(T.cs.counts[k - 1]));
    for (int i = 1; i <= k; ++i) {
      auto& tab = T.cs.degens_[k][i - 1];
      for (std::uint32_t c = 0; c < T.cs.counts[k - 1]; ++c) {
        auto [m, x, y] = T.pairs[k - 1][c];
        const int mm = static_cast<int>(m), n = k - 1 - mm;
        if (i <= mm) tab[c] = T.pair_cube(k, mm + 1, X.degen(mm + 1, i, x), y);
        else tab[c] = T.pair_cube(k, mm, x, Y.degen(n + 1, i - mm, y));
      }
    }
    if (k >= 2) {
      T.cs.conns_[k].assign(2 * (k - 1), std::vector<std::uint32_t>(T.cs.counts[k - 1]));
      for (int i = 1; i + 1 <= k; ++i)
        for (int e = 0; e <= 1; ++e) {
          auto& tab = T.cs.conns_[k][(i - 1) * 2 + e];
          for (std::uint32_t c = 0; c < T.cs.counts[k - 1]; ++c) {
            auto [m, x, y] = T.pairs[k - 1][c];
            const int mm = static_cast<int>(m), n = k - 1 - mm;
            if (i <= mm) tab[c] = T.pair_cube(k, mm + 1, X.conn(mm + 1, i, e, x), y);
            else tab[c] = T.pair_cube(k, mm, x, Y.conn(n + 1, i - mm, e, y));
          }
        }
    }
  }
  recompute_degenerate(T.cs);
  validate(T.cs);
  return T;
}

CubicalMap tensor_map_left(const CubicalSet& A, const CubicalSet& /*B*/, const CubicalMap& f,
                           const CubicalSet& /*Y*/, const TensorResult& AY,
                           const TensorResult& BY) {
  (void)A;
  CubicalMap h;
  const int D = AY.cs.max_dim;
  h.level.resize(D + 1);
  for (int k = 0; k <= D; ++k) {
    h.level[k].resize(AY.cs.counts[k]);
    for (std::uint32_t c = 0; c < AY.cs.counts[k]; ++c) {
      auto [m, a, y] = AY.pairs[k][c];
      h.level[k][c] = BY.pair_cube(k, static_cast<int>(m), f.level[m][a], y);
    }
  }
  return h;
}

CubicalMap tensor_map_right(const CubicalSet& /*X*/, const TensorResult& XA,
                            const TensorResult& XB, const CubicalSet& /*A*/,
                            const CubicalSet& /*B*/, const CubicalMap& f) {
  CubicalMap h;
  const int D = XA.cs.max_dim;
  h.level.resize(D + 1);
  for (int k = 0; k <= D; ++k) {
    h.level[k].resize(XA.cs.counts[k]);
    for (std::uint32_t c = 0; c < XA.cs.counts[k]; ++c) {
      auto [m, x, a] = XA.pairs[k][c];
      const int n = k - static_cast<int>(m);
      h.level[k][c] = XB.pair_cube(k, static_cast<int>(m), x, f.level[n][a]);
    }
  }
  return h;
}

BoxMorphism box_tensor(const BoxMorphism& u, const BoxMorphism& v) {
  BoxMorphism w;
  w.src_dim = u.src_dim + v.src_dim;
  w.dst_dim = u.dst_dim + v.dst_dim;
  w.table.resize(1u << w.src_dim);
  for (std::uint32_t z = 0; z < w.table.size(); ++z) {
    const std::uint32_t zu = z & ((1u << u.src_dim) - 1u);
    const std::uint32_t zv = z >> u.src_dim;
    w.table[z] = u.table[zu] | (v.table[zv] << u.dst_dim);
  }
  auto nf = normal_form(w.table, w.src_dim, w.dst_dim);
  if (nf) w.word = nf->word;
  return w;
}

CubicalMap representable_tensor_iso(const StandardCell& A, const StandardCell& B,
                                    const TensorResult& T, const StandardCell& AB) {
  CubicalMap h;
  const int D = T.cs.max_dim;
  h.level.resize(D + 1);
  for (int k = 0; k <= D; ++k) {
    h.level[k].resize(T.cs.counts[k]);
    for (std::uint32_t c = 0; c < T.cs.counts[k]; ++c) {
      auto [m, x, y] = T.pairs[k][c];
      const BoxMorphism w = box_tensor(A.cubes[m][x], B.cubes[k - m][y]);
      h.level[k][c] = AB.cube_of(w.table, k);
    }
  }
  return h;
}

// --- internal hom -------------------------------------------------------------------

namespace {
std::vector<std::uint32_t> flatten_map(const CubicalMap& f) {
  std::vector<std::uint32_t> key;
  for (const auto& lvl : f.level) {
    key.push_back(static_cast<std::uint32_t>(lvl.size()));
    key.insert(key.end(), lvl.begin(), lvl.end());
  }
  return key;
}

std::vector<std::uint32_t> flatten_map(const SimplicialMap& f) {
  std::vector<std::uint32_t> key;
  for (const auto& lvl : f.level) {
    key.push_back(static_cast<std::uint32_t>(lvl.size()));
    key.insert(key.end(), lvl.begin(), lvl.end());
  }
  return key;
}

// postcomposition map of representables a -> b induced by the box morphism g
CubicalMap representable_map(const BoxMorphism& g, const StandardCell& a, const StandardCell& b) {
  CubicalMap h;
  const int D = a.cs.max_dim;
  h.level.resize(D + 1);
  for (int k = 0; k <= D; ++k) {
    h.level[k].resize(a.cs.counts[k]);
    for (std::uint32_t c = 0; c < a.cs.counts[k]; ++c)
      h.level[k][c] = b.cube_of(compose_tables(g.table, a.cubes[k][c].table), k);
  }
  return h;
}
}  // namespace

std::uint32_t InternalHom::index_of(const CubicalMap& f, int n) const {
  return lookup[n].at(flatten_map(f));
}

InternalHom internal_hom(const CubicalSet& X, const CubicalSet& Y, int D) {
  if (X.max_dim != Y.max_dim) throw DomainError("internal_hom: truncation mismatch");
  InternalHom H;
  H.cs.allocate(D);
  H.cube_n.resize(D + 1);
  H.dom.resize(D + 1);
  H.maps.resize(D + 1);
  H.lookup.resize(D + 1);
  for (int n = 0; n <= D; ++n) {
    H.cube_n[n] = standard_cube(n, Y.max_dim);
    H.dom[n] = tensor(H.cube_n[n].cs, X);
    H.maps[n] = enumerate_maps(H.dom[n].cs, Y);
    H.cs.counts[n] = H.maps[n].size();
    for (std::uint32_t i = 0; i < H.maps[n].size(); ++i)
      H.lookup[n][flatten_map(H.maps[n][i])] = i;
  }
  for (int n = 1; n <= D; ++n) {
    H.cs.faces_[n].assign(2 * n, std::vector<std::uint32_t>(H.cs.counts[n]));
    for (int i = 1; i <= n; ++i)
      for (int e = 0; e <= 1; ++e) {
        const CubicalMap lower = tensor_map_left(
            H.cube_n[n - 1].cs, H.cube_n[n].cs,
            representable_map(face(n, i, e), H.cube_n[n - 1], H.cube_n[n]), X, H.dom[n - 1],
            H.dom[n]);
        auto& tab = H.cs.faces_[n][(i - 1) * 2 + e];
        for (std::uint32_t c = 0; c < H.cs.counts[n]; ++c)
          tab[c] = H.lookup[n - 1].at(flatten_map(compose(Y, H.maps[n][c], lower)));
      }
    H.cs.degens_[n].assign(n, std::vector<std::uint32_t>(H.cs.counts[n - 1]));
    for (int i = 1; i <= n; ++i) {
      const CubicalMap raiser = tensor_map_left(
          H.cube_n[n].cs, H.cube_n[n - 1].cs,
          representable_map(degeneracy(n, i), H.cube_n[n], H.cube_n[n - 1]), X, H.dom[n],
          H.dom[n - 1]);
      auto& tab = H.cs.degens_[n][i - 1];
      for (std::uint32_t c = 0; c < H.cs.counts[n - 1]; ++c)
        tab[c] = H.lookup[n].at(flatten_map(compose(Y, H.maps[n - 1][c], raiser)));
    }
    if (n >= 2) {
      H.cs.conns_[n].assign(2 * (n - 1), std::vector<std::uint32_t>(H.cs.counts[n - 1]));
      for (int i = 1; i + 1 <= n; ++i)
        for (int e = 0; e <= 1; ++e) {
          const CubicalMap raiser = tensor_map_left(
              H.cube_n[n].cs, H.cube_n[n - 1].cs,
              representable_map(connection(n, i, e), H.cube_n[n], H.cube_n[n - 1]), X, H.dom[n],
              H.dom[n - 1]);
          auto& tab = H.cs.conns_[n][(i - 1) * 2 + e];
          for (std::uint32_t c = 0; c < H.cs.counts[n - 1]; ++c)
            tab[c] = H.lookup[n].at(flatten_map(compose(Y, H.maps[n - 1][c], raiser)));
        }
    }
  }
  recompute_degenerate(H.cs);
  validate(H.cs);
  return H;
}

CubicalSet internal_hom_representable(int m, const CubicalSet& M, int D) {
  if (D + m > M.max_dim)
    throw TruncationError("internal_hom_representable: need truncation " + std::to_string(D + m));
  CubicalSet H;
  H.allocate(D);
  for (int n = 0; n <= D; ++n) H.counts[n] = M.counts[n + m];
  for (int n = 1; n <= D; ++n) {
    H.faces_[n].assign(2 * n, std::vector<std::uint32_t>(H.counts[n]));
    for (int i = 1; i <= n; ++i)
      for (int e = 0; e <= 1; ++e)
        for (std::uint32_t u = 0; u < H.counts[n]; ++u)
          H.faces_[n][(i - 1) * 2 + e][u] = M.face(n + m, i, e, u);
    H.degens_[n].assign(n, std::vector<std::uint32_t>(H.counts[n - 1]));
    for (int i = 1; i <= n; ++i)
      for (std::uint32_t u = 0; u < H.counts[n - 1]; ++u)
        H.degens_[n][i - 1][u] = M.degen(n + m, i, u);
    if (n >= 2) {
      H.conns_[n].assign(2 * (n - 1), std::vector<std::uint32_t>(H.counts[n - 1]));
      for (int i = 1; i + 1 <= n; ++i)
        for (int e = 0; e <= 1; ++e)
          for (std::uint32_t u = 0; u < H.counts[n - 1]; ++u)
            H.conns_[n][(i - 1) * 2 + e][u] = M.conn(n + m, i, e, u);
    }
  }
  recompute_degenerate(H);
  validate(H);
  return H;
}

CubicalMap internal_hom_representable_map(int m, const CubicalSet& /*M*/,
                                          const CubicalSet& /*N*/, const CubicalMap& g, int D) {
  CubicalMap h;
  h.level.resize(D + 1);
  for (int n = 0; n <= D; ++n) h.level[n] = g.level[n + m];
  return h;
}

CubicalMap hom_transpose(const CubicalSet& Z, const TensorResult& ZX, const CubicalMap& F,
                         const InternalHom& H) {
  const int D = static_cast<int>(H.cs.max_dim);
  CubicalMap tr;
  tr.level.resize(D + 1);
  for (int n = 0; n <= D; ++n) {
    tr.level[n].resize(Z.counts[n]);
    for (std::uint32_t z = 0; z < Z.counts[n]; ++z) {
      // the map cube^n tensor X -> Y sending (c, x) to F(z.c, x)
      CubicalMap g;
      g.level.resize(H.dom[n].cs.max_dim + 1);
      for (int k = 0; k <= H.dom[n].cs.max_dim; ++k) {
        g.level[k].resize(H.dom[n].cs.counts[k]);
        for (std::uint32_t c = 0; c < H.dom[n].cs.counts[k]; ++c) {
          auto [m, ci, x] = H.dom[n].pairs[k][c];
          const std::uint32_t zc =
              act_word(Z, H.cube_n[n].cubes[m][ci].word, n, z);
          g.level[k][c] = F.level[k][ZX.pair_cube(k, static_cast<int>(m), zc, x)];
        }
      }
      tr.level[n][z] = H.index_of(g, n);
    }
  }
  return tr;
}

// --- triangulation ----------------------------------------------------------------

Triangulation triangulate(const CubicalSet& X) {
  const int D = X.max_dim;
  std::vector<CubePower> powers;
  for (int n = 0; n <= D; ++n) powers.push_back(delta1_power(n, D));

  Triangulation T;
  T.ss.allocate(D);
  T.reps.resize(D + 1);
  T.index.resize(D + 1);

  // chain transformation under a vertex table
  auto map_chain = [](const VertexMap& gt, const std::vector<std::uint32_t>& c) {
    std::vector<std::uint32_t> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = gt[c[i]];
    return out;
  };

  std::vector<std::vector<std::uint32_t>> clazz(D + 1);  // DSU parent per k over element ids
  std::vector<std::vector<std::vector<std::size_t>>> base(D + 1);  // [k][n]: offset per cube
  for (int k = 0; k <= D; ++k) {
    std::size_t total = 0;
    base[k].resize(D + 1);
    for (int n = 0; n <= D; ++n) {
      base[k][n].resize(X.counts[n] + 1);
      for (std::uint32_t x = 0; x <= X.counts[n]; ++x)
        base[k][n][x] = total + x * powers[n].chains[k].size();
      total += X.counts[n] * powers[n].chains[k].size();
    }
    check_budget(total, "triangulate");
    clazz[k].resize(total);
    std::iota(clazz[k].begin(), clazz[k].end(), 0u);
  }
  std::function<std::uint32_t(int, std::uint32_t)> find = [&](int k, std::uint32_t a) {
    while (clazz[k][a] != a) a = clazz[k][a] = clazz[k][clazz[k][a]];
    return a;
  };
  auto unite = [&](int k, std::uint32_t a, std::uint32_t b) { clazz[k][find(k, a)] = find(k, b); };
  auto elem = [&](int k, int n, std::uint32_t x, const std::vector<std::uint32_t>& c) {
    return static_cast<std::uint32_t>(base[k][n][x] + powers[n].index[k].at(c));
  };

  for (int k = 0; k <= D; ++k) {
    // face relations: (x.d, c) ~ (x, d o c)
    for (int n = 1; n <= D; ++n)
      for (int i = 1; i <= n; ++i)
        for (int e = 0; e <= 1; ++e) {
          const VertexMap gt = generator_table({GenKind::Face, i, e}, n - 1);
          for (std::uint32_t x = 0; x < X.counts[n]; ++x) {
            const std::uint32_t xd = X.face(n, i, e, x);
            for (const auto& c : powers[n - 1].chains[k])
              unite(k, elem(k, n - 1, xd, c), elem(k, n, x, map_chain(gt, c)));
          }
        }
    // degeneracy/connection relations: (y.g, c) ~ (y, g o c)
    for (int n = 1; n <= D; ++n) {
      std::vector<Generator> lowers;
      for (int i = 1; i <= n; ++i) lowers.push_back({GenKind::Degeneracy, i, 0});
      for (int i = 1; i + 1 <= n; ++i)
        for (int e = 0; e <= 1; ++e) lowers.push_back({GenKind::Connection, i, e});
      for (const Generator& g : lowers) {
        const VertexMap gt = generator_table(g, n);
        for (std::uint32_t y = 0; y < X.counts[n - 1]; ++y) {
          const std::uint32_t yg = act(X, g, n - 1, y);
          for (const auto& c : powers[n].chains[k])
            unite(k, elem(k, n, yg, c), elem(k, n - 1, y, map_chain(gt, c)));
        }
      }
    }
  }

  // collect classes
  std::vector<std::map<std::uint32_t, std::uint32_t>> root_id(D + 1);
  for (int k = 0; k <= D; ++k) {
    for (int n = 0; n <= D; ++n)
      for (std::uint32_t x = 0; x < X.counts[n]; ++x)
        for (const auto& c : powers[n].chains[k]) {
          std::uint32_t r = find(k, elem(k, n, x, c));
          auto it = root_id[k].find(r);
          std::uint32_t id;
          if (it == root_id[k].end()) {
            id = static_cast<std::uint32_t>(T.reps[k].size());
            root_id[k].emplace(r, id);
            T.reps[k].push_back({n, x, c});
            if (X.counts[n] * powers[n].chains[k].size() <= kNameCap)
              T.ss.names[k].push_back(X.cube_name(n, x) + "@" + [&] {
                std::string s;
                for (std::size_t i = 0; i < c.size(); ++i) {
                  if (i) s += '.';
                  s += std::to_string(c[i]);
                }
                return s;
              }());
          } else {
            id = it->second;
          }
          T.index[k][{n, x, c}] = id;
        }
    T.ss.counts[k] = T.reps[k].size();
  }

  for (int k = 1; k <= D; ++k) {
    T.ss.faces_[k].assign(k + 1, std::vector<std::uint32_t>(T.ss.counts[k]));
    for (int i = 0; i <= k; ++i)
      for (std::uint32_t s = 0; s < T.ss.counts[k]; ++s) {
        auto [n, x, c] = T.reps[k][s];
        auto cc = c;
        cc.erase(cc.begin() + i);
        T.ss.faces_[k][i][s] = T.index[k - 1].at({n, x, cc});
      }
    T.ss.degens_[k].assign(k, std::vector<std::uint32_t>(T.ss.counts[k - 1]));
    for (int i = 0; i < k; ++i)
      for (std::uint32_t s = 0; s < T.ss.counts[k - 1]; ++s) {
        auto [n, x, c] = T.reps[k - 1][s];
        auto cc = c;
        cc.insert(cc.begin() + i, c[i]);
        T.ss.degens_[k][i][s] = T.index[k].at({n, x, cc});
      }
  }
  recompute_degenerate(T.ss);
  validate(T.ss);
  return T;
}

SimplicialMap triangulate_map(const CubicalSet& /*X*/, const CubicalMap& f,
                              const Triangulation& TX, const Triangulation& TY) {
  SimplicialMap h;
  const int D = static_cast<int>(TX.reps.size()) - 1;
  h.level.resize(D + 1);
  for (int k = 0; k <= D; ++k) {
    h.level[k].resize(TX.ss.counts[k]);
    for (std::uint32_t s = 0; s < TX.ss.counts[k]; ++s) {
      auto [n, x, c] = TX.reps[k][s];
      h.level[k][s] = TY.index[k].at({n, f.level[n][x], c});
    }
  }
  return h;
}

// --- cotriangulation -----------------------------------------------------------------

std::uint32_t CotriangulationResult::index_of(const SimplicialMap& f, int n) const {
  return lookup[n].at(flatten_map(f));
}

CotriangulationResult cotriangulate(const SimplicialSet& S, int D) {
  CotriangulationResult U;
  U.cs.allocate(D);
  U.maps.resize(D + 1);
  U.lookup.resize(D + 1);
  std::vector<CubePower> powers;
  for (int n = 0; n <= D; ++n) powers.push_back(delta1_power(n, S.max_dim));
  for (int n = 0; n <= D; ++n) {
    U.maps[n] = enumerate_simplicial_maps(powers[n].ss, S);
    U.cs.counts[n] = U.maps[n].size();
    for (std::uint32_t i = 0; i < U.maps[n].size(); ++i)
      U.lookup[n][flatten_map(U.maps[n][i])] = i;
  }
  // precomposition with (Delta^1)^g
  auto power_map = [&](const BoxMorphism& g) {
    SimplicialMap pm;
    pm.level.resize(S.max_dim + 1);
    for (int k = 0; k <= S.max_dim; ++k) {
      pm.level[k].resize(powers[g.src_dim].chains[k].size());
      for (std::uint32_t s = 0; s < pm.level[k].size(); ++s) {
        std::vector<std::uint32_t> c = powers[g.src_dim].chains[k][s];
        for (auto& v : c) v = g.table[v];
        pm.level[k][s] = powers[g.dst_dim].index[k].at(c);
      }
    }
    return pm;
  };
  auto precompose = [&](const SimplicialMap& F, const SimplicialMap& along) {
    SimplicialMap h;
    h.level.resize(S.max_dim + 1);
    for (int k = 0; k <= S.max_dim; ++k) {
      h.level[k].resize(along.level[k].size());
      for (std::uint32_t s = 0; s < along.level[k].size(); ++s)
        h.level[k][s] = F.level[k][along.level[k][s]];
    }
    return h;
  };
  for (int n = 1; n <= D; ++n) {
    U.cs.faces_[n].assign(2 * n, std::vector<std::uint32_t>(U.cs.counts[n]));
    for (int i = 1; i <= n; ++i)
      for (int e = 0; e <= 1; ++e) {
        const SimplicialMap pm = power_map(face(n, i, e));
        for (std::uint32_t c = 0; c < U.cs.counts[n]; ++c)
          U.cs.faces_[n][(i - 1) * 2 + e][c] =
              U.lookup[n - 1].at(flatten_map(precompose(U.maps[n][c], pm)));
      }
    U.cs.degens_[n].assign(n, std::vector<std::uint32_t>(U.cs.counts[n - 1]));
    for (int i = 1; i <= n; ++i) {
      const SimplicialMap pm = power_map(degeneracy(n, i));
      for (std::uint32_t c = 0; c < U.cs.counts[n - 1]; ++c)
        U.cs.degens_[n][i - 1][c] = U.lookup[n].at(flatten_map(precompose(U.maps[n - 1][c], pm)));
    }
    if (n >= 2) {
      U.cs.conns_[n].assign(2 * (n - 1), std::vector<std::uint32_t>(U.cs.counts[n - 1]));
      for (int i = 1; i + 1 <= n; ++i)
        for (int e = 0; e <= 1; ++e) {
          const SimplicialMap pm = power_map(connection(n, i, e));
          for (std::uint32_t c = 0; c < U.cs.counts[n - 1]; ++c)
            U.cs.conns_[n][(i - 1) * 2 + e][c] =
                U.lookup[n].at(flatten_map(precompose(U.maps[n - 1][c], pm)));
        }
    }
  }
  recompute_degenerate(U.cs);
  validate(U.cs);
  return U;
}

CubicalMap monoidal_structure_map(const SimplicialSet& A, const SimplicialSet& B,
                                  const CotriangulationResult& UA,
                                  const CotriangulationResult& UB, const TensorResult& UAUB,
                                  const SsetProduct& AxB, const CotriangulationResult& UAxB) {
  const int D = UAUB.cs.max_dim;
  std::vector<CubePower> powers;
  const int SD = A.max_dim;
  for (int n = 0; n <= 2 * D; ++n) powers.push_back(delta1_power(n, SD));
  CubicalMap alpha;
  alpha.level.resize(D + 1);
  for (int k = 0; k <= D; ++k) {
    alpha.level[k].resize(UAUB.cs.counts[k]);
    for (std::uint32_t c = 0; c < UAUB.cs.counts[k]; ++c) {
      auto [m, fa, gb] = UAUB.pairs[k][c];
      const int mm = static_cast<int>(m), n = k - mm;
      const SimplicialMap& f = UA.maps[mm][fa];
      const SimplicialMap& g = UB.maps[n][gb];
      // (Delta^1)^{m+n} -> A x B : chain c |-> (f(c | low), g(c | high))
      SimplicialMap h;
      h.level.resize(SD + 1);
      for (int kk = 0; kk <= SD; ++kk) {
        h.level[kk].resize(powers[k].chains[kk].size());
        for (std::uint32_t s = 0; s < h.level[kk].size(); ++s) {
          std::vector<std::uint32_t> lo, hi;
          for (std::uint32_t v : powers[k].chains[kk][s]) {
            lo.push_back(v & ((1u << mm) - 1u));
            hi.push_back(v >> mm);
          }
          const std::uint32_t ia = f.level[kk][powers[mm].index[kk].at(lo)];
          const std::uint32_t ib = g.level[kk][powers[n].index[kk].at(hi)];
          h.level[kk][s] = AxB.index[kk].at({ia, ib});
        }
      }
      alpha.level[k][c] = UAxB.index_of(h, k);
    }
  }
  return alpha;
}

// --- bicubical sets ----------------------------------------------------------------

namespace {
CubicalMap horizontal_act(const BicubicalSet& B, const Generator& g, int row_dim) {
  switch (g.kind) {
    case GenKind::Face:
      return B.hfaces[row_dim][(g.index - 1) * 2 + g.eps];
    case GenKind::Degeneracy:
      return B.hdegens[row_dim + 1][g.index - 1];
    case GenKind::Connection:
      return B.hconns[row_dim + 1][(g.index - 1) * 2 + g.eps];
  }
  return {};
}
}  // namespace

void validate(const BicubicalSet& B) {
  auto fail = [](const std::string& m) { throw DomainError("bicubical set invalid: " + m); };
  if (static_cast<int>(B.rows.size()) != B.max_h + 1) fail("row count");
  for (const auto& row : B.rows) validate(row);
  for (int m = 1; m <= B.max_h; ++m) {
    if (static_cast<int>(B.hfaces[m].size()) != 2 * m) fail("hface count");
    for (const auto& f : B.hfaces[m])
      if (!is_natural(B.rows[m], B.rows[m - 1], f)) fail("hface naturality");
    if (static_cast<int>(B.hdegens[m].size()) != m) fail("hdegen count");
    for (const auto& f : B.hdegens[m])
      if (!is_natural(B.rows[m - 1], B.rows[m], f)) fail("hdegen naturality");
    const int nconn = m >= 2 ? 2 * (m - 1) : 0;
    if (static_cast<int>(B.hconns[m].size()) != nconn) fail("hconn count");
    for (const auto& f : B.hconns[m])
      if (!is_natural(B.rows[m - 1], B.rows[m], f)) fail("hconn naturality");
  }
  // horizontal cubical identities as equations of composite cubical maps
  for (const auto& inst : identity_instances(B.max_h)) {
    int lq = inst.src_dim;
    for (const auto& g : inst.lhs) lq += generator_shift(g.kind);
    if (lq > B.max_h) continue;
    auto apply = [&](const std::vector<Generator>& word) {
      CubicalMap acc = identity_map(B.rows[lq]);
      int dim = lq;
      for (const Generator& g : word) {
        acc = compose(B.rows[0], horizontal_act(B, g, dim), acc);
        dim -= generator_shift(g.kind);
      }
      return acc;
    };
    CubicalMap l = apply(inst.lhs), r = apply(inst.rhs);
    if (l.level != r.level) fail(std::string("horizontal identity ") + inst.family);
  }
}

BicubicalSet levelwise_discrete_bicubical(const CubicalSet& X) {
  BicubicalSet B;
  B.max_h = X.max_dim;
  const int Dv = X.max_dim;
  B.rows.resize(B.max_h + 1);
  B.hfaces.resize(B.max_h + 1);
  B.hdegens.resize(B.max_h + 1);
  B.hconns.resize(B.max_h + 1);
  for (int m = 0; m <= B.max_h; ++m) B.rows[m] = discrete_cset(X.counts[m], Dv);
  auto constant_map = [&](const std::vector<std::uint32_t>& table) {
    CubicalMap f;
    f.level.assign(Dv + 1, table);
    return f;
  };
  for (int m = 1; m <= B.max_h; ++m) {
    for (int i = 1; i <= m; ++i)
      for (int e = 0; e <= 1; ++e) B.hfaces[m].push_back(constant_map(X.faces_[m][(i - 1) * 2 + e]));
    for (int i = 1; i <= m; ++i) B.hdegens[m].push_back(constant_map(X.degens_[m][i - 1]));
    if (m >= 2)
      for (int i = 1; i + 1 <= m; ++i)
        for (int e = 0; e <= 1; ++e)
          B.hconns[m].push_back(constant_map(X.conns_[m][(i - 1) * 2 + e]));
  }
  validate(B);
  return B;
}

CubicalSet diagonal(const BicubicalSet& B) {
  int Dv = B.rows.empty() ? 0 : B.rows[0].max_dim;
  for (const auto& row : B.rows) Dv = std::min(Dv, row.max_dim);
  const int D = std::min(B.max_h, Dv);
  CubicalSet X;
  X.allocate(D);
  for (int n = 0; n <= D; ++n) X.counts[n] = B.rows[n].counts[n];
  for (int n = 1; n <= D; ++n) {
    X.faces_[n].assign(2 * n, std::vector<std::uint32_t>(X.counts[n]));
    for (int i = 1; i <= n; ++i)
      for (int e = 0; e <= 1; ++e)
        for (std::uint32_t u = 0; u < X.counts[n]; ++u)
          X.faces_[n][(i - 1) * 2 + e][u] =
              B.hfaces[n][(i - 1) * 2 + e].level[n - 1][B.rows[n].face(n, i, e, u)];
    X.degens_[n].assign(n, std::vector<std::uint32_t>(X.counts[n - 1]));
    for (int i = 1; i <= n; ++i)
      for (std::uint32_t u = 0; u < X.counts[n - 1]; ++u)
        X.degens_[n][i - 1][u] = B.hdegens[n][i - 1].level[n][B.rows[n - 1].degen(n, i, u)];
    if (n >= 2) {
      X.conns_[n].assign(2 * (n - 1), std::vector<std::uint32_t>(X.counts[n - 1]));
      for (int i = 1; i + 1 <= n; ++i)
        for (int e = 0; e <= 1; ++e)
          for (std::uint32_t u = 0; u < X.counts[n - 1]; ++u)
            X.conns_[n][(i - 1) * 2 + e][u] =
                B.hconns[n][(i - 1) * 2 + e].level[n][B.rows[n - 1].conn(n, i, e, u)];
    }
  }
  recompute_degenerate(X);
  validate(X);
  return X;
}

Pi0 pi0_rowwise(const BicubicalSet& B) {
  // components of B_{0,0} under vertical edges of row 0 and horizontal edges B_{1,0}
  const auto& row0 = B.rows[0];
  std::vector<std::uint32_t> parent(row0.counts[0]);
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  auto unite = [&](std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); };
  if (row0.max_dim >= 1)
    for (std::uint32_t e = 0; e < row0.counts[1]; ++e)
      unite(row0.face(1, 1, 0, e), row0.face(1, 1, 1, e));
  if (B.max_h >= 1)
    for (std::uint32_t u = 0; u < B.rows[1].counts[0]; ++u)
      unite(B.hfaces[1][0].level[0][u], B.hfaces[1][1].level[0][u]);
  Pi0 p;
  p.component.assign(row0.counts[0], 0);
  std::map<std::uint32_t, std::uint32_t> ids;
  for (std::uint32_t v = 0; v < row0.counts[0]; ++v) {
    std::uint32_t r = find(v);
    auto it = ids.find(r);
    if (it == ids.end()) it = ids.emplace(r, static_cast<std::uint32_t>(ids.size())).first;
    p.component[v] = it->second;
  }
  p.count = ids.size();
  return p;
}

}  // namespace cubix
