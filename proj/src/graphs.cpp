#include "cubix/graphs.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "json.hpp"

namespace cubix {

std::string Graph::vertex_name(std::uint32_t v) const {
  if (v < vnames.size() && !vnames[v].empty()) return vnames[v];
  return std::to_string(v);
}

Graph make_graph(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                 std::vector<std::string> names) {
  Graph g;
  g.vnames = std::move(names);
  g.adj.assign(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) g.adj[v][v] = true;
  for (auto [a, b] : edges) {
    g.adj[a][b] = true;
    g.adj[b][a] = true;
  }
  validate(g);
  return g;
}

Graph interval_graph(int n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (int i = 0; i < n; ++i) e.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i + 1)});
  return make_graph(n + 1, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle_graph: need n >= 3");
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (int i = 0; i < n; ++i)
    e.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>((i + 1) % n)});
  return make_graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      e.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)});
  return make_graph(n, e);
}

Graph graph_by_name(const std::string& name) {
  if (name.size() < 2) throw DomainError("graph_by_name: unknown graph '" + name + "'");
  const int n = std::stoi(name.substr(1));
  switch (name[0]) {
    case 'I':
      return interval_graph(n);
    case 'C':
      return cycle_graph(n);
    case 'K':
      return complete_graph(n);
    default:
      throw DomainError("graph_by_name: unknown graph '" + name + "'");
  }
}

void validate(const Graph& g) {
  const std::size_t n = g.order();
  for (std::size_t v = 0; v < n; ++v) {
    if (g.adj[v].size() != n) throw DomainError("graph: adjacency not square");
    if (!g.adj[v][v]) throw DomainError("graph: missing reflexive loop");
    for (std::size_t w = 0; w < n; ++w)
      if (g.adj[v][w] != g.adj[w][v]) throw DomainError("graph: adjacency not symmetric");
  }
}

bool graphs_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  const std::size_t n = a.order();
  std::vector<std::size_t> da(n, 0), db(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) {
      da[v] += a.adj[v][w];
      db[v] += b.adj[v][w];
    }
  {
    auto sa = da, sb = db;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  std::vector<std::uint32_t> img(n, UINT32_MAX);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) return true;
    for (std::uint32_t c = 0; c < n; ++c) {
      if (used[c] || da[v] != db[c]) continue;
      bool ok = true;
      for (std::size_t w = 0; w < v && ok; ++w)
        if (a.adj[v][w] != b.adj[c][img[w]]) ok = false;
      if (!ok) continue;
      img[v] = c;
      used[c] = true;
      if (rec(v + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return rec(0);
}

std::string graph_to_json(const Graph& g) {
  nlohmann::json j;
  nlohmann::json verts = nlohmann::json::array();
  for (std::uint32_t v = 0; v < g.order(); ++v) verts.push_back(g.vertex_name(v));
  j["vertices"] = std::move(verts);
  nlohmann::json edges = nlohmann::json::array();
  for (std::uint32_t v = 0; v < g.order(); ++v)
    for (std::uint32_t w = v + 1; w < g.order(); ++w)
      if (g.adj[v][w]) edges.push_back({g.vertex_name(v), g.vertex_name(w)});
  j["edges"] = std::move(edges);
  return j.dump(2);
}

Graph graph_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Graph g;
  std::map<std::string, std::uint32_t> idx;
  for (const auto& v : j.at("vertices")) {
    const std::string s = v.get<std::string>();
    if (idx.count(s)) throw DomainError("graph_from_json: duplicate vertex " + s);
    idx[s] = static_cast<std::uint32_t>(g.vnames.size());
    g.vnames.push_back(s);
  }
  const std::size_t n = g.vnames.size();
  g.adj.assign(n, std::vector<bool>(n, false));
  for (std::size_t v = 0; v < n; ++v) g.adj[v][v] = true;
  for (const auto& e : j.at("edges")) {
    const std::uint32_t a = idx.at(e.at(0).get<std::string>());
    const std::uint32_t b = idx.at(e.at(1).get<std::string>());
    g.adj[a][b] = true;
    g.adj[b][a] = true;
  }
  validate(g);
  return g;
}

// --- box product and maps ------------------------------------------------------

Graph box_product(const Graph& A, const Graph& B) {
  Graph g;
  const std::size_t na = A.order(), nb = B.order();
  g.adj.assign(na * nb, std::vector<bool>(na * nb, false));
  g.vnames.resize(na * nb);
  for (std::uint32_t b = 0; b < nb; ++b)
    for (std::uint32_t a = 0; a < na; ++a)
      g.vnames[a + na * b] = A.vertex_name(a) + "|" + B.vertex_name(b);
  for (std::uint32_t b = 0; b < nb; ++b)
    for (std::uint32_t a = 0; a < na; ++a)
      for (std::uint32_t b2 = 0; b2 < nb; ++b2)
        for (std::uint32_t a2 = 0; a2 < na; ++a2) {
          const bool e = (a == a2 && B.adjacent(b, b2)) || (b == b2 && A.adjacent(a, a2));
          if (e) g.adj[a + na * b][a2 + na * b2] = true;
        }
  validate(g);
  return g;
}

bool is_graph_map(const Graph& X, const Graph& Y, const std::vector<std::uint32_t>& img) {
  if (img.size() != X.order()) return false;
  for (std::uint32_t v = 0; v < X.order(); ++v)
    for (std::uint32_t w = v; w < X.order(); ++w)
      if (X.adjacent(v, w) && !Y.adjacent(img[v], img[w])) return false;
  return true;
}

namespace {

// backtracking enumeration in BFS vertex order with adjacency pruning;
// emits images in lexicographic order of the natural vertex indexing
template <typename Emit>
void enumerate_maps_impl(const Graph& X, const Graph& Y, Emit&& emit) {
  const std::size_t n = X.order();
  if (n == 0) {
    emit(std::vector<std::uint32_t>{});
    return;
  }
  std::vector<std::vector<std::uint32_t>> earlier(n);
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t w = 0; w < v; ++w)
      if (v != w && X.adjacent(v, w)) earlier[v].push_back(w);
  std::vector<std::uint32_t> img(n, 0);
  std::size_t nodes = 0;
  std::function<void(std::uint32_t)> rec = [&](std::uint32_t v) {
    check_budget(++nodes, "enumerate_graph_maps");
    if (v == n) {
      emit(img);
      return;
    }
    for (std::uint32_t c = 0; c < Y.order(); ++c) {
      bool ok = true;
      for (std::uint32_t w : earlier[v])
        if (!Y.adjacent(c, img[w])) {
          ok = false;
          break;
        }
      if (ok) {
        img[v] = c;
        rec(v + 1);
      }
    }
  };
  rec(0);
}

}  // namespace

std::vector<std::vector<std::uint32_t>> enumerate_graph_maps(const Graph& X, const Graph& Y) {
  std::vector<std::vector<std::uint32_t>> out;
  enumerate_maps_impl(X, Y, [&](const std::vector<std::uint32_t>& img) { out.push_back(img); });
  return out;
}

HomGraph hom_graph(const Graph& X, const Graph& Y) {
  HomGraph H;
  H.maps = enumerate_graph_maps(X, Y);
  check_budget(H.maps.size() * std::max<std::size_t>(X.order(), 1), "hom_graph");
  const std::size_t n = H.maps.size();
  for (std::uint32_t i = 0; i < n; ++i) H.index[H.maps[i]] = i;
  H.g.adj.assign(n, std::vector<bool>(n, false));
  H.g.vnames.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::string nm;
    for (std::size_t v = 0; v < H.maps[i].size(); ++v) {
      if (v) nm += ',';
      nm += std::to_string(H.maps[i][v]);
    }
    H.g.vnames[i] = nm;
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    H.g.adj[i][i] = true;
    for (std::uint32_t j = i + 1; j < n; ++j) {
      bool adj = true;
      for (std::uint32_t v = 0; v < X.order() && adj; ++v)
        if (!Y.adjacent(H.maps[i][v], H.maps[j][v])) adj = false;
      if (adj) {
        H.g.adj[i][j] = true;
        H.g.adj[j][i] = true;
      }
    }
  }
  return H;
}

Partition graph_components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t w = v + 1; w < n; ++w)
      if (g.adj[v][w]) parent[find(v)] = find(w);
  Partition p;
  p.cls.assign(n, 0);
  std::map<std::uint32_t, std::uint32_t> ids;
  for (std::uint32_t v = 0; v < n; ++v) {
    std::uint32_t r = find(v);
    auto it = ids.find(r);
    if (it == ids.end()) it = ids.emplace(r, static_cast<std::uint32_t>(ids.size())).first;
    p.cls[v] = it->second;
  }
  p.count = ids.size();
  return p;
}

HomotopyClasses homotopy_classes(const Graph& X, const Graph& Y) {
  HomotopyClasses hc{hom_graph(X, Y), {}};
  hc.classes = graph_components(hc.hom.g);
  return hc;
}

std::optional<std::vector<std::vector<std::uint32_t>>> homotopy_path(
    const HomGraph& H, const std::vector<std::uint32_t>& f, const std::vector<std::uint32_t>& g) {
  const std::uint32_t s = H.index.at(f), t = H.index.at(g);
  std::vector<std::int64_t> pred(H.g.order(), -2);
  std::deque<std::uint32_t> q{s};
  pred[s] = -1;
  while (!q.empty()) {
    std::uint32_t v = q.front();
    q.pop_front();
    if (v == t) break;
    for (std::uint32_t w = 0; w < H.g.order(); ++w)
      if (H.g.adj[v][w] && pred[w] == -2) {
        pred[w] = v;
        q.push_back(w);
      }
  }
  if (pred[t] == -2) return std::nullopt;
  std::vector<std::vector<std::uint32_t>> chain;
  for (std::int64_t v = t; v != -1; v = pred[v]) chain.push_back(H.maps[v]);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::vector<std::uint32_t> chain_to_box_homotopy(
    const Graph& X, const std::vector<std::vector<std::uint32_t>>& chain) {
  // vertex (x, i) of X box I_k encoded as x + |X| * i
  std::vector<std::uint32_t> H(X.order() * chain.size());
  for (std::size_t i = 0; i < chain.size(); ++i)
    for (std::uint32_t x = 0; x < X.order(); ++x) H[x + X.order() * i] = chain[i][x];
  return H;
}

// --- homotopy equivalence ----------------------------------------------------------

EquivalenceResult is_homotopy_equivalence(const Graph& X, const Graph& Y,
                                          const std::vector<std::uint32_t>& f,
                                          std::size_t search_bound) {
  if (!is_graph_map(X, Y, f)) throw DomainError("is_homotopy_equivalence: f is not a graph map");
  EquivalenceResult res;
  std::vector<std::uint32_t> idx(X.order()), idy(Y.order());
  std::iota(idx.begin(), idx.end(), 0u);
  std::iota(idy.begin(), idy.end(), 0u);
  try {
    HomGraph HX = hom_graph(X, X);
    HomGraph HY = hom_graph(Y, Y);
    auto candidates = enumerate_graph_maps(Y, X);
    if (candidates.size() > search_bound)
      throw ResourceError("candidate count above search bound");
    Partition px = graph_components(HX.g), py = graph_components(HY.g);
    for (const auto& g : candidates) {
      std::vector<std::uint32_t> gf(X.order()), fg(Y.order());
      for (std::uint32_t v = 0; v < X.order(); ++v) gf[v] = g[f[v]];
      for (std::uint32_t v = 0; v < Y.order(); ++v) fg[v] = f[g[v]];
      if (px.cls[HX.index.at(gf)] != px.cls[HX.index.at(idx)]) continue;
      if (py.cls[HY.index.at(fg)] != py.cls[HY.index.at(idy)]) continue;
      res.verdict = Certainty::Yes;
      res.inverse = g;
      res.homotopy_gf = *homotopy_path(HX, idx, gf);
      res.homotopy_fg = *homotopy_path(HY, idy, fg);
      return res;
    }
  } catch (const ResourceError& e) {
    res.note = std::string("search truncated: ") + e.what();
  }
  // invariant certificates for a definite No
  if (graph_components(X).count != graph_components(Y).count) {
    res.verdict = Certainty::No;
    res.note = "component counts differ";
    return res;
  }
  auto h1 = [](const Graph& G) {
    return homology_groups(graph_nerve(G, 1, 2).cs, 1)[1];
  };
  try {
    HomologyGroup hx = h1(X), hy = h1(Y);
    if (!(hx.betti == hy.betti && hx.torsion == hy.torsion)) {
      res.verdict = Certainty::No;
      res.note = "H_1 of the 1-nerve differs: " + hx.text() + " vs " + hy.text();
      return res;
    }
  } catch (const ResourceError& e) {
    if (res.note.empty()) res.note = e.what();
  }
  if (res.verdict != Certainty::Yes) res.verdict = Certainty::Unknown;
  return res;
}

// --- nerves ---------------------------------------------------------------------------

std::uint32_t grid_size(int m, int k) {
  std::uint32_t s = 1;
  for (int i = 0; i < k; ++i) s *= static_cast<std::uint32_t>(m + 1);
  return s;
}

Graph grid_graph(int m, int k) {
  Graph base = interval_graph(m);
  Graph g = interval_graph(0);
  for (int i = 0; i < k; ++i) g = box_product(g, base);
  return g;
}

namespace {
std::string key_of(const std::vector<std::uint16_t>& img) {
  return std::string(reinterpret_cast<const char*>(img.data()), img.size() * 2);
}
}  // namespace

std::uint32_t GraphNerve::cube_of(const std::vector<std::uint16_t>& img, int k) const {
  return index[k].at(key_of(img));
}

GraphNerve graph_nerve_rel(const Graph& P, const Graph& X, int m, int D) {
  if (m < 1) throw DomainError("graph_nerve: need m >= 1");
  if (X.order() > 65535) throw ResourceError("graph_nerve: target too large");
  GraphNerve N;
  N.m = m;
  N.p_order = P.order();
  N.cs.allocate(D);
  N.cubes.resize(D + 1);
  N.index.resize(D + 1);

  const std::uint32_t np = static_cast<std::uint32_t>(P.order());
  for (int k = 0; k <= D; ++k) {
    const Graph dom = box_product(P, grid_graph(m, k));
    enumerate_maps_impl(dom, X, [&](const std::vector<std::uint32_t>& img) {
      std::vector<std::uint16_t> b(img.size());
      for (std::size_t i = 0; i < img.size(); ++i) b[i] = static_cast<std::uint16_t>(img[i]);
      N.index[k].emplace(key_of(b), static_cast<std::uint32_t>(N.cubes[k].size()));
      N.cubes[k].push_back(std::move(b));
    });
    N.cs.counts[k] = N.cubes[k].size();
    check_budget(N.cubes[k].size(), "graph_nerve cells");
  }

  // grid vertex maps; digit d of grid(m,k) at position i
  auto digits = [&](std::uint32_t w, int k) {
    std::vector<std::uint32_t> d(k);
    for (int i = 0; i < k; ++i) {
      d[i] = w % (m + 1);
      w /= (m + 1);
    }
    return d;
  };
  auto encode = [&](const std::vector<std::uint32_t>& d) {
    std::uint32_t w = 0;
    for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i)
      w = w * (m + 1) + d[i];
    return w;
  };

  for (int k = 1; k <= D; ++k) {
    const std::uint32_t lo_cells = np * grid_size(m, k - 1);
    const std::uint32_t hi_cells = np * grid_size(m, k);
    // face (i, e): insert digit e*m at slot i-1, then restrict the map
    N.cs.faces_[k].assign(2 * k, std::vector<std::uint32_t>(N.cs.counts[k]));
    for (int i = 1; i <= k; ++i)
      for (int e = 0; e <= 1; ++e) {
        std::vector<std::uint32_t> reindex(lo_cells);
        for (std::uint32_t w = 0; w < grid_size(m, k - 1); ++w) {
          auto d = digits(w, k - 1);
          d.insert(d.begin() + (i - 1), e == 0 ? 0u : static_cast<std::uint32_t>(m));
          for (std::uint32_t p = 0; p < np; ++p)
            reindex[p + np * w] = p + np * encode(d);
        }
        auto& tab = N.cs.faces_[k][(i - 1) * 2 + e];
        std::vector<std::uint16_t> img(lo_cells);
        for (std::uint32_t c = 0; c < N.cs.counts[k]; ++c) {
          for (std::uint32_t t = 0; t < lo_cells; ++t) img[t] = N.cubes[k][c][reindex[t]];
          tab[c] = N.index[k - 1].at(key_of(img));
        }
      }
    // degeneracy s(i): delete digit i-1
    N.cs.degens_[k].assign(k, std::vector<std::uint32_t>(N.cs.counts[k - 1]));
    for (int i = 1; i <= k; ++i) {
      std::vector<std::uint32_t> reindex(hi_cells);
      for (std::uint32_t w = 0; w < grid_size(m, k); ++w) {
        auto d = digits(w, k);
        d.erase(d.begin() + (i - 1));
        for (std::uint32_t p = 0; p < np; ++p) reindex[p + np * w] = p + np * encode(d);
      }
      auto& tab = N.cs.degens_[k][i - 1];
      std::vector<std::uint16_t> img(hi_cells);
      for (std::uint32_t c = 0; c < N.cs.counts[k - 1]; ++c) {
        for (std::uint32_t t = 0; t < hi_cells; ++t) img[t] = N.cubes[k - 1][c][reindex[t]];
        tab[c] = N.index[k].at(key_of(img));
      }
    }
    // connection g(i, e): merge digits i-1 and i by max (e=0) or min (e=1)
    if (k >= 2) {
      N.cs.conns_[k].assign(2 * (k - 1), std::vector<std::uint32_t>(N.cs.counts[k - 1]));
      for (int i = 1; i + 1 <= k; ++i)
        for (int e = 0; e <= 1; ++e) {
          std::vector<std::uint32_t> reindex(hi_cells);
          for (std::uint32_t w = 0; w < grid_size(m, k); ++w) {
            auto d = digits(w, k);
            const std::uint32_t merged =
                e == 0 ? std::max(d[i - 1], d[i]) : std::min(d[i - 1], d[i]);
            d[i - 1] = merged;
            d.erase(d.begin() + i);
            for (std::uint32_t p = 0; p < np; ++p) reindex[p + np * w] = p + np * encode(d);
          }
          auto& tab = N.cs.conns_[k][(i - 1) * 2 + e];
          std::vector<std::uint16_t> img(hi_cells);
          for (std::uint32_t c = 0; c < N.cs.counts[k - 1]; ++c) {
            for (std::uint32_t t = 0; t < hi_cells; ++t) img[t] = N.cubes[k - 1][c][reindex[t]];
            tab[c] = N.index[k].at(key_of(img));
          }
        }
    }
  }
  recompute_degenerate(N.cs);
  validate(N.cs);
  return N;
}

CubicalMap nerve_level_map(const GraphNerve& Nm, const GraphNerve& Nm1, bool left) {
  if (Nm1.m != Nm.m + 1 || Nm.p_order != Nm1.p_order)
    throw DomainError("nerve_level_map: levels must be m and m+1 over the same base");
  const int D = Nm.cs.max_dim;
  const int m = Nm.m;
  const std::uint32_t np = static_cast<std::uint32_t>(Nm.p_order);
  // l repeats 0, r repeats m: apply digitwise to the larger grid
  auto collapse = [&](std::uint32_t digit) {
    if (left) return digit == 0 ? 0u : digit - 1;
    return std::min(digit, static_cast<std::uint32_t>(m));
  };
  CubicalMap f;
  f.level.resize(D + 1);
  for (int k = 0; k <= D; ++k) {
    const std::uint32_t cells = np * grid_size(m + 1, k);
    std::vector<std::uint32_t> reindex(cells);
    for (std::uint32_t w = 0; w < grid_size(m + 1, k); ++w) {
      std::uint32_t t = w, out = 0, scale = 1;
      for (int i = 0; i < k; ++i) {
        out += collapse(t % (m + 2)) * scale;
        t /= (m + 2);
        scale *= (m + 1);
      }
      for (std::uint32_t p = 0; p < np; ++p) reindex[p + np * w] = p + np * out;
    }
    f.level[k].resize(Nm.cs.counts[k]);
    std::vector<std::uint16_t> img(cells);
    for (std::uint32_t c = 0; c < Nm.cs.counts[k]; ++c) {
      for (std::uint32_t t = 0; t < cells; ++t) img[t] = Nm.cubes[k][c][reindex[t]];
      f.level[k][c] = Nm1.index[k].at(key_of(img));
    }
  }
  return f;
}

}  // namespace cubix
