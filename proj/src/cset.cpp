#include "cubix/cset.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace cubix {

std::string CubicalSet::cube_name(int n, std::uint32_t x) const {
  if (n < static_cast<int>(names.size()) && x < names[n].size() && !names[n][x].empty())
    return names[n][x];
  return "c" + std::to_string(n) + "#" + std::to_string(x);
}

std::size_t CubicalSet::total_cubes() const {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

std::size_t CubicalSet::nondegenerate_count(int n) const {
  if (n > max_dim) return 0;
  std::size_t c = 0;
  for (std::uint32_t x = 0; x < counts[n]; ++x)
    if (!degenerate[n][x]) ++c;
  return c;
}

void CubicalSet::allocate(int D) {
  max_dim = D;
  counts.assign(D + 1, 0);
  names.assign(D + 1, {});
  faces_.assign(D + 1, {});
  degens_.assign(D + 1, {});
  conns_.assign(D + 1, {});
  degenerate.assign(D + 1, {});
}

std::uint32_t act(const CubicalSet& X, const Generator& g, int cube_dim, std::uint32_t x) {
  switch (g.kind) {
    case GenKind::Face:
      return X.face(cube_dim, g.index, g.eps, x);
    case GenKind::Degeneracy:
      return X.degen(cube_dim + 1, g.index, x);
    case GenKind::Connection:
      return X.conn(cube_dim + 1, g.index, g.eps, x);
  }
  return 0;
}

std::uint32_t act_word(const CubicalSet& X, const std::vector<Generator>& word, int dst_dim,
                       std::uint32_t x) {
  int dim = dst_dim;
  for (const Generator& g : word) {
    x = act(X, g, dim, x);
    dim -= generator_shift(g.kind);
  }
  return x;
}

void recompute_degenerate(CubicalSet& X) {
  X.degenerate.assign(X.max_dim + 1, {});
  for (int n = 0; n <= X.max_dim; ++n) X.degenerate[n].assign(X.counts[n], false);
  for (int n = 1; n <= X.max_dim; ++n) {
    for (const auto& tab : X.degens_[n])
      for (std::uint32_t v : tab) X.degenerate[n][v] = true;
    for (const auto& tab : X.conns_[n])
      for (std::uint32_t v : tab) X.degenerate[n][v] = true;
  }
}

std::vector<std::vector<std::optional<DegeneracyWitness>>> degeneracy_witnesses(
    const CubicalSet& X) {
  std::vector<std::vector<std::optional<DegeneracyWitness>>> w(X.max_dim + 1);
  for (int n = 0; n <= X.max_dim; ++n) w[n].assign(X.counts[n], std::nullopt);
  for (int n = 1; n <= X.max_dim; ++n) {
    for (int i = 1; i <= n; ++i)
      for (std::uint32_t y = 0; y < X.counts[n - 1]; ++y) {
        std::uint32_t v = X.degen(n, i, y);
        if (!w[n][v]) w[n][v] = DegeneracyWitness{{GenKind::Degeneracy, i, 0}, y};
      }
    for (int i = 1; i + 1 <= n; ++i)
      for (int eps = 0; eps <= 1; ++eps)
        for (std::uint32_t y = 0; y < X.counts[n - 1]; ++y) {
          std::uint32_t v = X.conn(n, i, eps, y);
          if (!w[n][v]) w[n][v] = DegeneracyWitness{{GenKind::Connection, i, eps}, y};
        }
  }
  return w;
}

void validate(const CubicalSet& X) {
  const int D = X.max_dim;
  auto fail = [](const std::string& msg) { throw DomainError("cubical set invalid: " + msg); };
  if (static_cast<int>(X.counts.size()) != D + 1) fail("counts size");
  for (int n = 1; n <= D; ++n) {
    if (static_cast<int>(X.faces_[n].size()) != 2 * n) fail("face table count at dim " + std::to_string(n));
    for (const auto& tab : X.faces_[n]) {
      if (tab.size() != X.counts[n]) fail("face table size");
      for (std::uint32_t v : tab)
        if (v >= X.counts[n - 1]) fail("face index range");
    }
    if (static_cast<int>(X.degens_[n].size()) != n) fail("degeneracy table count");
    for (const auto& tab : X.degens_[n]) {
      if (tab.size() != X.counts[n - 1]) fail("degeneracy table size");
      for (std::uint32_t v : tab)
        if (v >= X.counts[n]) fail("degeneracy index range");
    }
    const int nconn = n >= 2 ? 2 * (n - 1) : 0;
    if (static_cast<int>(X.conns_[n].size()) != nconn) fail("connection table count");
    for (const auto& tab : X.conns_[n]) {
      if (tab.size() != X.counts[n - 1]) fail("connection table size");
      for (std::uint32_t v : tab)
        if (v >= X.counts[n]) fail("connection index range");
    }
  }
  // contravariant cubical identities
  for (const auto& inst : identity_instances(D)) {
    int lq = inst.src_dim, rq = inst.src_dim;
    for (const auto& g : inst.lhs) lq += generator_shift(g.kind);
    for (const auto& g : inst.rhs) rq += generator_shift(g.kind);
    if (lq != rq) fail("identity instance dims");
    if (lq > D) continue;
    for (std::uint32_t x = 0; x < X.counts[lq]; ++x)
      if (act_word(X, inst.lhs, lq, x) != act_word(X, inst.rhs, rq, x))
        fail(std::string("identity ") + inst.family + " fails: " + word_text(inst.lhs) +
             " != " + word_text(inst.rhs) + " on cube " + X.cube_name(lq, x));
  }
  // degeneracy flags
  CubicalSet copy = X;
  recompute_degenerate(copy);
  for (int n = 0; n <= D; ++n)
    if (copy.degenerate[n] != X.degenerate[n]) fail("degeneracy flags at dim " + std::to_string(n));
}

// --- standard cells -----------------------------------------------------------

StandardCell standard_cell(CellKind kind, int n, int i, int eps, int D) {
  if (n < 0) throw DomainError("standard_cell: negative dimension");
  if (kind == CellKind::OpenBox && (n < 1 || i < 1 || i > n))
    throw DomainError("standard_cell: open box index out of range");
  if (kind == CellKind::Boundary && n < 1)
    throw DomainError("standard_cell: boundary needs n >= 1");

  auto member = [&](const VertexMap& t) {
    if (kind == CellKind::Cube) return true;
    for (int c = 0; c < n; ++c) {
      bool all0 = true, all1 = true;
      for (std::uint32_t v : t) {
        if (v & (1u << c)) all0 = false;
        else all1 = false;
      }
      for (int e = 0; e <= 1; ++e) {
        if (e == 0 && !all0) continue;
        if (e == 1 && !all1) continue;
        if (kind == CellKind::Boundary) return true;
        if (c + 1 != i || e != eps) return true;  // open box: any face but (i, eps)
      }
    }
    return false;
  };

  StandardCell cell;
  cell.n = n;
  cell.cs.allocate(D);
  cell.cubes.resize(D + 1);
  cell.index.resize(D + 1);
  for (int k = 0; k <= D; ++k) {
    for (auto& m : all_morphisms(k, n)) {
      if (!member(m.table)) continue;
      cell.index[k][m.table] = static_cast<std::uint32_t>(cell.cubes[k].size());
      cell.cs.names[k].push_back(word_text(m.word));
      cell.cubes[k].push_back(std::move(m));
    }
    cell.cs.counts[k] = cell.cubes[k].size();
  }
  for (int k = 1; k <= D; ++k) {
    cell.cs.faces_[k].assign(2 * k, std::vector<std::uint32_t>(cell.cs.counts[k]));
    for (int ii = 1; ii <= k; ++ii)
      for (int e = 0; e <= 1; ++e) {
        auto gt = generator_table({GenKind::Face, ii, e}, k - 1);
        auto& tab = cell.cs.faces_[k][(ii - 1) * 2 + e];
        for (std::uint32_t x = 0; x < cell.cs.counts[k]; ++x)
          tab[x] = cell.index[k - 1].at(compose_tables(cell.cubes[k][x].table, gt));
      }
    cell.cs.degens_[k].assign(k, std::vector<std::uint32_t>(cell.cs.counts[k - 1]));
    for (int ii = 1; ii <= k; ++ii) {
      auto gt = generator_table({GenKind::Degeneracy, ii, 0}, k);
      auto& tab = cell.cs.degens_[k][ii - 1];
      for (std::uint32_t y = 0; y < cell.cs.counts[k - 1]; ++y)
        tab[y] = cell.index[k].at(compose_tables(cell.cubes[k - 1][y].table, gt));
    }
    if (k >= 2) {
      cell.cs.conns_[k].assign(2 * (k - 1), std::vector<std::uint32_t>(cell.cs.counts[k - 1]));
      for (int ii = 1; ii + 1 <= k; ++ii)
        for (int e = 0; e <= 1; ++e) {
          auto gt = generator_table({GenKind::Connection, ii, e}, k);
          auto& tab = cell.cs.conns_[k][(ii - 1) * 2 + e];
          for (std::uint32_t y = 0; y < cell.cs.counts[k - 1]; ++y)
            tab[y] = cell.index[k].at(compose_tables(cell.cubes[k - 1][y].table, gt));
        }
    }
  }
  recompute_degenerate(cell.cs);
  validate(cell.cs);
  return cell;
}

CubicalSet empty_cset(int D) {
  CubicalSet X;
  X.allocate(D);
  for (int n = 1; n <= D; ++n) {
    X.faces_[n].assign(2 * n, {});
    X.degens_[n].assign(n, {});
    if (n >= 2) X.conns_[n].assign(2 * (n - 1), {});
  }
  validate(X);
  return X;
}

CubicalSet discrete_cset(std::size_t points, int D) {
  CubicalSet X;
  X.allocate(D);
  for (int n = 0; n <= D; ++n) X.counts[n] = points;
  std::vector<std::uint32_t> id_tab(points);
  for (std::uint32_t v = 0; v < points; ++v) id_tab[v] = v;
  for (int n = 1; n <= D; ++n) {
    X.faces_[n].assign(2 * n, id_tab);
    X.degens_[n].assign(n, id_tab);
    if (n >= 2) X.conns_[n].assign(2 * (n - 1), id_tab);
  }
  recompute_degenerate(X);
  validate(X);
  return X;
}

// --- maps -----------------------------------------------------------------------

CubicalMap identity_map(const CubicalSet& X) {
  CubicalMap f;
  f.level.resize(X.max_dim + 1);
  for (int n = 0; n <= X.max_dim; ++n) {
    f.level[n].resize(X.counts[n]);
    for (std::uint32_t x = 0; x < X.counts[n]; ++x) f.level[n][x] = x;
  }
  return f;
}

CubicalMap compose(const CubicalSet&, const CubicalMap& g, const CubicalMap& f) {
  CubicalMap h;
  h.level.resize(f.level.size());
  for (std::size_t n = 0; n < f.level.size(); ++n) {
    h.level[n].resize(f.level[n].size());
    for (std::size_t x = 0; x < f.level[n].size(); ++x) h.level[n][x] = g.level[n][f.level[n][x]];
  }
  return h;
}

bool is_natural(const CubicalSet& X, const CubicalSet& Y, const CubicalMap& f) {
  if (X.max_dim != Y.max_dim) return false;
  if (static_cast<int>(f.level.size()) != X.max_dim + 1) return false;
  for (int n = 0; n <= X.max_dim; ++n) {
    if (f.level[n].size() != X.counts[n]) return false;
    for (std::uint32_t v : f.level[n])
      if (v >= Y.counts[n]) return false;
  }
  for (int n = 1; n <= X.max_dim; ++n) {
    for (int i = 1; i <= n; ++i)
      for (int e = 0; e <= 1; ++e)
        for (std::uint32_t x = 0; x < X.counts[n]; ++x)
          if (f.level[n - 1][X.face(n, i, e, x)] != Y.face(n, i, e, f.level[n][x])) return false;
    for (int i = 1; i <= n; ++i)
      for (std::uint32_t y = 0; y < X.counts[n - 1]; ++y)
        if (f.level[n][X.degen(n, i, y)] != Y.degen(n, i, f.level[n - 1][y])) return false;
    for (int i = 1; i + 1 <= n; ++i)
      for (int e = 0; e <= 1; ++e)
        for (std::uint32_t y = 0; y < X.counts[n - 1]; ++y)
          if (f.level[n][X.conn(n, i, e, y)] != Y.conn(n, i, e, f.level[n - 1][y])) return false;
  }
  return true;
}

bool is_bijective(const CubicalSet& X, const CubicalSet& Y, const CubicalMap& f) {
  for (int n = 0; n <= X.max_dim; ++n) {
    if (X.counts[n] != Y.counts[n]) return false;
    std::vector<bool> hit(Y.counts[n], false);
    for (std::uint32_t v : f.level[n]) {
      if (hit[v]) return false;
      hit[v] = true;
    }
  }
  return true;
}

CubicalMap inverse_map(const CubicalSet& X, const CubicalSet& Y, const CubicalMap& f) {
  if (!is_bijective(X, Y, f)) throw DomainError("inverse_map: map is not bijective");
  CubicalMap g;
  g.level.resize(X.max_dim + 1);
  for (int n = 0; n <= X.max_dim; ++n) {
    g.level[n].resize(Y.counts[n]);
    for (std::uint32_t x = 0; x < X.counts[n]; ++x) g.level[n][f.level[n][x]] = x;
  }
  return g;
}

std::pair<std::vector<std::vector<std::uint32_t>>, std::vector<std::vector<std::uint32_t>>>
joint_refinement_colors(const CubicalSet& X, const CubicalSet& Y) {
  const int D = std::max(X.max_dim, Y.max_dim);
  auto init = [&](const CubicalSet& S) {
    std::vector<std::vector<std::uint32_t>> c(S.max_dim + 1);
    for (int n = 0; n <= S.max_dim; ++n) {
      c[n].resize(S.counts[n]);
      for (std::uint32_t x = 0; x < S.counts[n]; ++x)
        c[n][x] = static_cast<std::uint32_t>(2 * n + (S.degenerate[n][x] ? 1 : 0));
    }
    return c;
  };
  auto cx = init(X), cy = init(Y);

  for (int round = 0; round < D + 3; ++round) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> dict;
    auto relabel = [&](const CubicalSet& S, std::vector<std::vector<std::uint32_t>>& col) {
      std::vector<std::vector<std::uint32_t>> next(col.size());
      for (int n = 0; n <= S.max_dim; ++n) {
        // incoming face colors from the dimension above, one pass
        std::vector<std::vector<std::uint32_t>> in(S.counts[n]);
        if (n + 1 <= S.max_dim)
          for (int i = 1; i <= n + 1; ++i)
            for (int e = 0; e <= 1; ++e)
              for (std::uint32_t z = 0; z < S.counts[n + 1]; ++z)
                in[S.face(n + 1, i, e, z)].push_back(
                    static_cast<std::uint32_t>((i * 2 + e) << 20) ^ col[n + 1][z]);
        next[n].resize(S.counts[n]);
        for (std::uint32_t x = 0; x < S.counts[n]; ++x) {
          std::vector<std::uint32_t> sig{static_cast<std::uint32_t>(n), col[n][x]};
          if (n >= 1)
            for (int i = 1; i <= n; ++i)
              for (int e = 0; e <= 1; ++e) sig.push_back(col[n - 1][S.face(n, i, e, x)]);
          if (n + 1 <= S.max_dim) {
            for (int i = 1; i <= n + 1; ++i) sig.push_back(col[n + 1][S.degen(n + 1, i, x)]);
            for (int i = 1; i + 1 <= n + 1; ++i)
              for (int e = 0; e <= 1; ++e) sig.push_back(col[n + 1][S.conn(n + 1, i, e, x)]);
            std::sort(in[x].begin(), in[x].end());
            sig.push_back(0xffffffffu);
            sig.insert(sig.end(), in[x].begin(), in[x].end());
          }
          auto it = dict.find(sig);
          if (it == dict.end()) it = dict.emplace(sig, static_cast<std::uint32_t>(dict.size())).first;
          next[n][x] = it->second;
        }
      }
      col = std::move(next);
    };
    relabel(X, cx);
    relabel(Y, cy);
  }
  return {cx, cy};
}

namespace {

struct MapEnumerator {
  const CubicalSet& X;
  const CubicalSet& Y;
  bool bijective;
  bool first_only;
  std::vector<std::vector<std::optional<DegeneracyWitness>>> wit;
  std::vector<std::vector<std::uint32_t>> nondeg;  // per dim
  CubicalMap img;
  std::vector<std::vector<bool>> used;
  std::vector<CubicalMap> out;
  std::size_t nodes = 0;
  // in bijective mode, refinement colors both sides must match
  std::vector<std::vector<std::uint32_t>> col_x, col_y;

  MapEnumerator(const CubicalSet& x, const CubicalSet& y, bool bij, bool first)
      : X(x), Y(y), bijective(bij), first_only(first) {
    wit = degeneracy_witnesses(X);
    nondeg.resize(X.max_dim + 1);
    for (int n = 0; n <= X.max_dim; ++n)
      for (std::uint32_t c = 0; c < X.counts[n]; ++c)
        if (!X.degenerate[n][c]) nondeg[n].push_back(c);
    img.level.resize(X.max_dim + 1);
    used.resize(X.max_dim + 1);
    for (int n = 0; n <= X.max_dim; ++n) {
      img.level[n].assign(X.counts[n], 0);
      used[n].assign(Y.counts[n], false);
    }
    if (bijective) {
      auto [cx, cy] = joint_refinement_colors(X, Y);
      col_x = std::move(cx);
      col_y = std::move(cy);
      // rare colors first makes mismatches fail early
      for (int n = 0; n <= X.max_dim; ++n) {
        std::map<std::uint32_t, std::size_t> freq;
        for (std::uint32_t c : nondeg[n]) ++freq[col_x[n][c]];
        std::stable_sort(nondeg[n].begin(), nondeg[n].end(),
                         [&](std::uint32_t a, std::uint32_t b) {
                           return freq[col_x[n][a]] < freq[col_x[n][b]];
                         });
      }
    }
  }

  bool naturality_at(int n) {
    if (n == 0) return true;
    for (int i = 1; i <= n; ++i)
      for (int e = 0; e <= 1; ++e)
        for (std::uint32_t x = 0; x < X.counts[n]; ++x)
          if (img.level[n - 1][X.face(n, i, e, x)] != Y.face(n, i, e, img.level[n][x]))
            return false;
    for (int i = 1; i <= n; ++i)
      for (std::uint32_t y = 0; y < X.counts[n - 1]; ++y)
        if (img.level[n][X.degen(n, i, y)] != Y.degen(n, i, img.level[n - 1][y])) return false;
    for (int i = 1; i + 1 <= n; ++i)
      for (int e = 0; e <= 1; ++e)
        for (std::uint32_t y = 0; y < X.counts[n - 1]; ++y)
          if (img.level[n][X.conn(n, i, e, y)] != Y.conn(n, i, e, img.level[n - 1][y]))
            return false;
    return true;
  }

  bool emit() {
    out.push_back(img);
    check_budget(out.size() * std::max<std::size_t>(X.total_cubes(), 1), "enumerate_maps output");
    return first_only;
  }

  // returns true to stop the whole search
  bool assign(int n, std::size_t pos) {
    check_budget(++nodes, "enumerate_maps search");
    if (n > X.max_dim) return emit();
    if (pos == 0) {
      // force degenerate cubes from dimension below
      for (std::uint32_t c = 0; c < X.counts[n]; ++c)
        if (X.degenerate[n][c]) {
          const auto& w = *wit[n][c];
          img.level[n][c] = act(Y, w.g, n - 1, img.level[n - 1][w.preimage]);
        }
    }
    if (pos == nondeg[n].size()) {
      if (!naturality_at(n)) return false;
      if (bijective) {
        // degenerate images must also be fresh relative to each other
        std::vector<bool> hit(Y.counts[n], false);
        for (std::uint32_t v : img.level[n]) {
          if (hit[v]) return false;
          hit[v] = true;
        }
      }
      return assign(n + 1, 0);
    }
    const std::uint32_t x = nondeg[n][pos];
    for (std::uint32_t y = 0; y < Y.counts[n]; ++y) {
      if (bijective && (used[n][y] || col_x[n][x] != col_y[n][y])) continue;
      bool ok = true;
      for (int i = 1; i <= n && ok; ++i)
        for (int e = 0; e <= 1 && ok; ++e)
          if (Y.face(n, i, e, y) != img.level[n - 1][X.face(n, i, e, x)]) ok = false;
      if (!ok) continue;
      img.level[n][x] = y;
      if (bijective) used[n][y] = true;
      if (assign(n, pos + 1)) return true;
      if (bijective) used[n][y] = false;
    }
    return false;
  }
};

}  // namespace

std::vector<CubicalMap> enumerate_maps(const CubicalSet& X, const CubicalSet& Y) {
  if (X.max_dim != Y.max_dim)
    throw DomainError("enumerate_maps: truncation mismatch (" + std::to_string(X.max_dim) +
                      " vs " + std::to_string(Y.max_dim) + ")");
  MapEnumerator e(X, Y, false, false);
  e.assign(0, 0);
  return std::move(e.out);
}

std::optional<CubicalMap> find_isomorphism(const CubicalSet& X, const CubicalSet& Y) {
  if (X.max_dim != Y.max_dim) return std::nullopt;
  for (int n = 0; n <= X.max_dim; ++n)
    if (X.counts[n] != Y.counts[n] || X.nondegenerate_count(n) != Y.nondegenerate_count(n))
      return std::nullopt;
  MapEnumerator e(X, Y, true, true);
  // color histograms must agree for an isomorphism to exist
  for (int n = 0; n <= X.max_dim; ++n) {
    std::map<std::uint32_t, long> hist;
    for (std::uint32_t c : e.col_x[n]) ++hist[c];
    for (std::uint32_t c : e.col_y[n]) --hist[c];
    for (const auto& [color, d] : hist)
      if (d != 0) return std::nullopt;
  }
  e.assign(0, 0);
  if (e.out.empty()) return std::nullopt;
  return e.out.front();
}

// --- invariants -------------------------------------------------------------------

namespace {
struct DSU {
  std::vector<std::uint32_t> parent;
  explicit DSU(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<std::uint32_t>(i);
  }
  std::uint32_t find(std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};
}  // namespace

Pi0 pi0(const CubicalSet& X) {
  DSU dsu(X.counts[0]);
  if (X.max_dim >= 1)
    for (std::uint32_t e = 0; e < X.counts[1]; ++e)
      dsu.unite(X.face(1, 1, 0, e), X.face(1, 1, 1, e));
  Pi0 p;
  p.component.assign(X.counts[0], 0);
  std::map<std::uint32_t, std::uint32_t> ids;
  for (std::uint32_t v = 0; v < X.counts[0]; ++v) {
    std::uint32_t r = dsu.find(v);
    auto it = ids.find(r);
    if (it == ids.end()) it = ids.emplace(r, static_cast<std::uint32_t>(ids.size())).first;
    p.component[v] = it->second;
  }
  p.count = ids.size();
  return p;
}

std::vector<std::uint32_t> pi0_map(const CubicalSet& X, const CubicalSet& Y, const CubicalMap& f) {
  Pi0 px = pi0(X), py = pi0(Y);
  std::vector<std::uint32_t> out(px.count, UINT32_MAX);
  for (std::uint32_t v = 0; v < X.counts[0]; ++v) {
    std::uint32_t cx = px.component[v], cy = py.component[f.level[0][v]];
    if (out[cx] == UINT32_MAX) out[cx] = cy;
    else if (out[cx] != cy)
      throw DomainError("pi0_map: map does not respect components");
  }
  return out;
}

std::vector<KanFailure> kan_box_check(const CubicalSet& X, int d) {
  if (d > X.max_dim)
    throw TruncationError("kan_box_check: bound exceeds truncation");
  std::vector<KanFailure> failures;
  for (int n = 1; n <= d; ++n)
    for (int i = 1; i <= n; ++i)
      for (int eps = 0; eps <= 1; ++eps) {
        StandardCell box = open_box(n, i, eps, X.max_dim);
        auto maps = enumerate_maps(box.cs, X);
        for (std::size_t mi = 0; mi < maps.size(); ++mi) {
          bool filled = false;
          for (std::uint32_t z = 0; z < X.counts[n] && !filled; ++z) {
            bool ok = true;
            for (int j = 1; j <= n && ok; ++j)
              for (int h = 0; h <= 1 && ok; ++h) {
                if (j == i && h == eps) continue;
                auto ft = face(n, j, h).table;
                std::uint32_t boxcube = box.cube_of(ft, n - 1);
                if (X.face(n, j, h, z) != maps[mi].level[n - 1][boxcube]) ok = false;
              }
            if (ok) filled = true;
          }
          if (!filled) failures.push_back({n, i, eps, mi});
        }
      }
  return failures;
}

// --- JSON ---------------------------------------------------------------------------

std::string cset_to_json(const CubicalSet& X) {
  nlohmann::json j;
  j["max_dim"] = X.max_dim;
  nlohmann::json cubes = nlohmann::json::object();
  for (int n = 0; n <= X.max_dim; ++n) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::uint32_t x = 0; x < X.counts[n]; ++x) arr.push_back(X.cube_name(n, x));
    cubes[std::to_string(n)] = std::move(arr);
  }
  j["cubes"] = std::move(cubes);
  nlohmann::json faces = nlohmann::json::object(), degens = nlohmann::json::object(),
                 conns = nlohmann::json::object();
  for (int n = 1; n <= X.max_dim; ++n) {
    nlohmann::json fd = nlohmann::json::object();
    for (int i = 1; i <= n; ++i)
      for (int e = 0; e <= 1; ++e) {
        nlohmann::json arr = nlohmann::json::array();
        for (std::uint32_t x = 0; x < X.counts[n]; ++x)
          arr.push_back(X.cube_name(n - 1, X.face(n, i, e, x)));
        fd[generator_text({GenKind::Face, i, e})] = std::move(arr);
      }
    faces[std::to_string(n)] = std::move(fd);
    nlohmann::json dd = nlohmann::json::object();
    for (int i = 1; i <= n; ++i) {
      nlohmann::json arr = nlohmann::json::array();
      for (std::uint32_t y = 0; y < X.counts[n - 1]; ++y)
        arr.push_back(X.cube_name(n, X.degen(n, i, y)));
      dd[generator_text({GenKind::Degeneracy, i, 0})] = std::move(arr);
    }
    degens[std::to_string(n)] = std::move(dd);
    if (n >= 2) {
      nlohmann::json cd = nlohmann::json::object();
      for (int i = 1; i + 1 <= n; ++i)
        for (int e = 0; e <= 1; ++e) {
          nlohmann::json arr = nlohmann::json::array();
          for (std::uint32_t y = 0; y < X.counts[n - 1]; ++y)
            arr.push_back(X.cube_name(n, X.conn(n, i, e, y)));
          cd[generator_text({GenKind::Connection, i, e})] = std::move(arr);
        }
      conns[std::to_string(n)] = std::move(cd);
    }
  }
  j["faces"] = std::move(faces);
  j["degens"] = std::move(degens);
  j["conns"] = std::move(conns);
  return j.dump(2);
}

CubicalSet cset_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CubicalSet X;
  X.allocate(j.at("max_dim").get<int>());
  std::vector<std::map<std::string, std::uint32_t>> idx(X.max_dim + 1);
  for (int n = 0; n <= X.max_dim; ++n) {
    const auto& arr = j.at("cubes").at(std::to_string(n));
    for (const auto& name : arr) {
      const std::string s = name.get<std::string>();
      if (idx[n].count(s)) throw DomainError("cset_from_json: duplicate cube name " + s);
      idx[n][s] = static_cast<std::uint32_t>(X.names[n].size());
      X.names[n].push_back(s);
    }
    X.counts[n] = X.names[n].size();
  }
  auto read_table = [&](const nlohmann::json& arr, int dim) {
    std::vector<std::uint32_t> t;
    for (const auto& name : arr) {
      auto it = idx[dim].find(name.get<std::string>());
      if (it == idx[dim].end())
        throw DomainError("cset_from_json: unknown cube " + name.get<std::string>());
      t.push_back(it->second);
    }
    return t;
  };
  for (int n = 1; n <= X.max_dim; ++n) {
    X.faces_[n].resize(2 * n);
    const auto& fd = j.at("faces").at(std::to_string(n));
    for (int i = 1; i <= n; ++i)
      for (int e = 0; e <= 1; ++e)
        X.faces_[n][(i - 1) * 2 + e] =
            read_table(fd.at(generator_text({GenKind::Face, i, e})), n - 1);
    X.degens_[n].resize(n);
    const auto& dd = j.at("degens").at(std::to_string(n));
    for (int i = 1; i <= n; ++i)
      X.degens_[n][i - 1] = read_table(dd.at(generator_text({GenKind::Degeneracy, i, 0})), n);
    if (n >= 2) {
      X.conns_[n].resize(2 * (n - 1));
      const auto& cd = j.at("conns").at(std::to_string(n));
      for (int i = 1; i + 1 <= n; ++i)
        for (int e = 0; e <= 1; ++e)
          X.conns_[n][(i - 1) * 2 + e] =
              read_table(cd.at(generator_text({GenKind::Connection, i, e})), n);
    }
  }
  recompute_degenerate(X);
  validate(X);
  return X;
}

}  // namespace cubix
