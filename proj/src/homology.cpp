#include "cubix/homology.hpp"

#include <algorithm>
#include <deque>
#include <queue>
#include <numeric>

namespace cubix {

IntMatrix SparseIntMatrix::dense() const {
  IntMatrix m = IntMatrix::zero(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (const auto& [r, v] : col_entries[c]) m.a[r][c] += v;
  return m;
}

// --- dense Smith normal form ---------------------------------------------------

SmithResult smith_normal_form(IntMatrix M, std::vector<std::vector<Int>>* kernel_basis) {
  const std::size_t R = M.rows, C = M.cols;
  std::vector<std::vector<Int>> V;
  if (kernel_basis) {
    V.assign(C, std::vector<Int>(C, 0));
    for (std::size_t i = 0; i < C; ++i) V[i][i] = 1;  // V[i] is column i
  }
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < R; ++r) std::swap(M.a[r][a], M.a[r][b]);
    if (kernel_basis) std::swap(V[a], V[b]);
  };
  auto addmul_col = [&](std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < R; ++r) M.a[r][dst] -= q * M.a[r][src];
    if (kernel_basis)
      for (std::size_t i = 0; i < C; ++i) V[dst][i] -= q * V[src][i];
  };

  std::size_t t = 0;
  while (t < R && t < C) {
    // min-abs nonzero pivot in the trailing block
    std::size_t pr = R, pc = C;
    Int best = 0;
    for (std::size_t r = t; r < R; ++r)
      for (std::size_t c = t; c < C; ++c) {
        if (M.a[r][c] == 0) continue;
        Int v = abs(M.a[r][c]);
        if (pr == R || v < best) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    if (pr == R) break;
    std::swap(M.a[t], M.a[pr]);
    swap_cols(t, pc);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t r = t + 1; r < R; ++r) {
        if (M.a[r][t] == 0) continue;
        Int q = M.a[r][t] / M.a[t][t];
        for (std::size_t c = t; c < C; ++c) M.a[r][c] -= q * M.a[t][c];
        if (M.a[r][t] != 0) {  // remainder becomes the smaller pivot
          std::swap(M.a[t], M.a[r]);
          clean = false;
        }
      }
      for (std::size_t c = t + 1; c < C; ++c) {
        if (M.a[t][c] == 0) continue;
        Int q = M.a[t][c] / M.a[t][t];
        addmul_col(c, t, q);
        if (M.a[t][c] != 0) {
          swap_cols(t, c);
          clean = false;
        }
      }
    }
    ++t;
  }

  SmithResult res;
  for (std::size_t i = 0; i < t; ++i) {
    Int d = M.a[i][i];
    if (d < 0) d = -d;
    res.divisors.push_back(d);
  }
  // divisibility chain
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < res.divisors.size(); ++i) {
      Int &a = res.divisors[i], &b = res.divisors[i + 1];
      if (b % a != 0) {
        Int g = gcd(a, b), l = a / g * b;
        a = g;
        b = l;
        changed = true;
      }
    }
  }
  if (kernel_basis) {
    kernel_basis->clear();
    for (std::size_t c = t; c < C; ++c) kernel_basis->push_back(V[c]);
  }
  return res;
}

// --- sparse Smith normal form ----------------------------------------------------

namespace {

// Unit-pivot sparse elimination with Markowitz-style pivot selection.
// Clearing the pivot row by column operations keeps the fill bounded by
// (row degree - 1) * (column size - 1); columns are short for boundary
// matrices, so low-cost pivots cascade.
struct SparseElim {
  std::size_t rows, cols;
  std::vector<std::vector<std::pair<std::uint32_t, long long>>> col;  // sorted by row
  std::vector<std::vector<std::uint32_t>> row_cols;  // superset, validated lazily
  std::vector<std::uint32_t> row_deg;
  std::vector<bool> row_dead, col_dead;
  std::size_t unit_pivots = 0;
  std::size_t work = 0;
  // (cost, r, c); lazily validated on pop
  using QE = std::tuple<long long, std::uint32_t, std::uint32_t>;
  std::priority_queue<QE, std::vector<QE>, std::greater<QE>> pq;

  explicit SparseElim(const SparseIntMatrix& M) : rows(M.rows), cols(M.cols) {
    col.resize(cols);
    row_cols.resize(rows);
    row_deg.assign(rows, 0);
    row_dead.assign(rows, false);
    col_dead.assign(cols, false);
    for (std::size_t c = 0; c < cols; ++c) {
      auto entries = M.col_entries[c];
      std::sort(entries.begin(), entries.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      for (std::size_t i = 0; i < entries.size();) {
        std::size_t j = i;
        long long v = 0;
        while (j < entries.size() && entries[j].first == entries[i].first) v += entries[j++].second;
        if (v != 0) col[c].push_back({entries[i].first, v});
        i = j;
      }
      for (const auto& [r, v] : col[c]) {
        row_cols[r].push_back(static_cast<std::uint32_t>(c));
        ++row_deg[r];
      }
    }
    for (std::uint32_t c = 0; c < cols; ++c) push_candidates(c);
  }

  long long value(std::uint32_t r, std::uint32_t c) const {
    const auto& v = col[c];
    auto it = std::lower_bound(v.begin(), v.end(), r,
                               [](const auto& e, std::uint32_t key) { return e.first < key; });
    return it != v.end() && it->first == r ? it->second : 0;
  }

  long long cost_of(std::uint32_t r, std::uint32_t c) const {
    return static_cast<long long>(row_deg[r] - 1) * static_cast<long long>(col[c].size() - 1);
  }

  void push_candidates(std::uint32_t c) {
    if (col_dead[c]) return;
    for (const auto& [r, v] : col[c])
      if ((v == 1 || v == -1) && !row_dead[r]) pq.push({cost_of(r, c), r, c});
  }

  // current columns of row r with nonzero entries (compacts the superset)
  std::vector<std::uint32_t> live_row(std::uint32_t r) {
    std::vector<std::uint32_t> out;
    std::sort(row_cols[r].begin(), row_cols[r].end());
    row_cols[r].erase(std::unique(row_cols[r].begin(), row_cols[r].end()), row_cols[r].end());
    for (std::uint32_t c : row_cols[r])
      if (!col_dead[c] && value(r, c) != 0) out.push_back(c);
    row_cols[r] = out;
    row_deg[r] = static_cast<std::uint32_t>(out.size());
    return out;
  }

  // dst -= q * src (columns), maintaining row bookkeeping
  void axpy_col(std::uint32_t dst, std::uint32_t src, long long q) {
    std::vector<std::pair<std::uint32_t, long long>> merged;
    merged.reserve(col[dst].size() + col[src].size());
    auto a = col[dst].begin(), ae = col[dst].end();
    auto b = col[src].begin(), be = col[src].end();
    while (a != ae || b != be) {
      ++work;
      if (b == be || (a != ae && a->first < b->first)) {
        merged.push_back(*a++);
      } else if (a == ae || b->first < a->first) {
        long long prod;
        if (__builtin_mul_overflow(q, b->second, &prod))
          throw ResourceError("sparse snf overflow");
        if (prod != 0) {
          merged.push_back({b->first, -prod});
          row_cols[b->first].push_back(dst);
          ++row_deg[b->first];
        }
        ++b;
      } else {
        long long prod, next;
        if (__builtin_mul_overflow(q, b->second, &prod))
          throw ResourceError("sparse snf overflow");
        if (__builtin_sub_overflow(a->second, prod, &next))
          throw ResourceError("sparse snf overflow");
        if (next != 0) merged.push_back({a->first, next});
        else if (row_deg[a->first] > 0) --row_deg[a->first];
        ++a;
        ++b;
      }
    }
    col[dst] = std::move(merged);
  }

  void run() {
    while (!pq.empty()) {
      auto [cost, r, c] = pq.top();
      pq.pop();
      if (row_dead[r] || col_dead[c]) continue;
      const long long pv = value(r, c);
      if (pv != 1 && pv != -1) continue;
      const long long now = cost_of(r, c);
      if (now > cost) {  // stale estimate; requeue at the true cost
        pq.push({now, r, c});
        continue;
      }
      // clear the pivot row by column operations
      auto live = live_row(r);
      std::vector<std::uint32_t> touched;
      for (std::uint32_t c2 : live) {
        if (c2 == c) continue;
        const long long w = value(r, c2);
        if (w == 0) continue;
        axpy_col(c2, c, w * pv);  // subtract (w/pv) * col_c
        touched.push_back(c2);
      }
      // the pivot column now disappears along with row r
      for (const auto& [r2, v2] : col[c])
        if (r2 != r && row_deg[r2] > 0) --row_deg[r2];
      col[c].clear();
      col_dead[c] = true;
      row_dead[r] = true;
      row_deg[r] = 0;
      ++unit_pivots;
      for (std::uint32_t c2 : touched) push_candidates(c2);
      check_budget(work + unit_pivots, "sparse snf");
    }
  }
};

}  // namespace

SmithResult smith_normal_form_sparse(const SparseIntMatrix& M) {
  SparseElim elim(M);
  elim.run();

  // dense core of the survivors
  std::map<std::uint32_t, std::size_t> rid, cid;
  for (std::uint32_t c = 0; c < elim.cols; ++c) {
    if (elim.col_dead[c]) continue;
    for (const auto& [r, v] : elim.col[c]) {
      if (elim.row_dead[r] || v == 0) continue;
      rid.emplace(r, rid.size());
      cid.emplace(c, cid.size());
    }
  }
  SmithResult res;
  if (!rid.empty()) {
    if (rid.size() > 4000 || cid.size() > 4000)
      throw ResourceError("sparse snf: residual core too large (" + std::to_string(rid.size()) +
                          " x " + std::to_string(cid.size()) + ")");
    IntMatrix core = IntMatrix::zero(rid.size(), cid.size());
    for (std::uint32_t c = 0; c < elim.cols; ++c) {
      if (elim.col_dead[c]) continue;
      for (const auto& [r, v] : elim.col[c])
        if (!elim.row_dead[r] && v != 0) core.a[rid.at(r)][cid.at(c)] = v;
    }
    res = smith_normal_form(std::move(core));
  }
  std::vector<Int> divisors(elim.unit_pivots, Int(1));
  divisors.insert(divisors.end(), res.divisors.begin(), res.divisors.end());
  res.divisors = std::move(divisors);
  return res;
}

// --- chain complexes ----------------------------------------------------------------

std::string HomologyGroup::text() const {
  std::string s = "H_" + std::to_string(degree) + " = ";
  if (betti == 0 && torsion.empty()) return s + "0";
  bool first = true;
  if (betti > 0) {
    s += betti == 1 ? "Z" : "Z^" + std::to_string(betti);
    first = false;
  }
  for (const Int& d : torsion) {
    if (!first) s += " + ";
    s += "Z/" + d.str();
    first = false;
  }
  return s;
}

bool boundaries_square_to_zero(const ChainComplex& C) {
  for (int k = 2; k <= C.top_degree(); ++k) {
    const auto& hi = C.boundary[k];
    const auto& lo = C.boundary[k - 1];
    for (std::size_t c = 0; c < hi.cols; ++c) {
      std::map<std::uint32_t, long long> acc;
      for (const auto& [r, v] : hi.col_entries[c])
        for (const auto& [r2, v2] : lo.col_entries[r]) acc[r2] += v * v2;
      for (const auto& [r2, total] : acc)
        if (total != 0) return false;
    }
  }
  return true;
}

std::vector<HomologyGroup> homology_of_complex(const ChainComplex& C, int up_to) {
  if (up_to + 1 > C.top_degree())
    throw DomainError("homology: need chain degree " + std::to_string(up_to + 1) +
                      " but complex stops at " + std::to_string(C.top_degree()));
  std::vector<SmithResult> snf(C.top_degree() + 1);
  for (int k = 1; k <= std::min(up_to + 1, C.top_degree()); ++k)
    snf[k] = smith_normal_form_sparse(C.boundary[k]);
  std::vector<HomologyGroup> out;
  for (int d = 0; d <= up_to; ++d) {
    HomologyGroup g;
    g.degree = d;
    const std::size_t rk_d = d >= 1 ? snf[d].rank() : 0;
    const std::size_t rk_up = snf[d + 1].rank();
    g.betti = C.dims[d] - rk_d - rk_up;
    for (const Int& v : snf[d + 1].divisors)
      if (v > 1) g.torsion.push_back(v);
    out.push_back(std::move(g));
  }
  return out;
}

SimplicialComplexCells normalized_complex(const SimplicialSet& S) {
  SimplicialComplexCells out;
  const int D = S.max_dim;
  out.cell_of_simplex.resize(D + 1);
  out.simplex_of_cell.resize(D + 1);
  out.cc.dims.assign(D + 1, 0);
  for (int k = 0; k <= D; ++k) {
    out.cell_of_simplex[k].assign(S.counts[k], SimplicialComplexCells::NONE);
    for (std::uint32_t s = 0; s < S.counts[k]; ++s)
      if (!S.degenerate[k][s]) {
        out.cell_of_simplex[k][s] = static_cast<std::uint32_t>(out.simplex_of_cell[k].size());
        out.simplex_of_cell[k].push_back(s);
      }
    out.cc.dims[k] = out.simplex_of_cell[k].size();
  }
  out.cc.boundary.resize(D + 1);
  for (int k = 1; k <= D; ++k) {
    auto& B = out.cc.boundary[k];
    B = SparseIntMatrix::zero(out.cc.dims[k - 1], out.cc.dims[k]);
    for (std::uint32_t cell = 0; cell < out.cc.dims[k]; ++cell) {
      const std::uint32_t s = out.simplex_of_cell[k][cell];
      for (int i = 0; i <= k; ++i) {
        const std::uint32_t f = S.face(k, i, s);
        const std::uint32_t fc = out.cell_of_simplex[k - 1][f];
        if (fc != SimplicialComplexCells::NONE) B.add(fc, cell, (i % 2 == 0) ? 1 : -1);
      }
    }
  }
  return out;
}

// --- triangulated complexes of cubical sets ---------------------------------------

namespace {
// strictly increasing chains of k+1 vertices in [1]^n with no constant coordinate
void interior_chains(int n, int k, std::vector<std::vector<std::uint32_t>>& out) {
  std::vector<std::uint32_t> cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == k + 1) {
      for (int c = 0; c < n; ++c) {
        bool all0 = true, all1 = true;
        for (std::uint32_t v : cur) {
          if (v & (1u << c)) all0 = false;
          else all1 = false;
        }
        if (all0 || all1) return;
      }
      out.push_back(cur);
      return;
    }
    const std::uint32_t lo = cur.empty() ? 0 : cur.back();
    for (std::uint32_t v = cur.empty() ? 0 : lo + 1; v < (1u << n); ++v) {
      if (!cur.empty() && ((lo & ~v) || lo == v)) continue;  // need lo < v in the poset
      cur.push_back(v);
      rec();
      cur.pop_back();
    }
  };
  rec();
}
}  // namespace

CubicalTriangulatedComplex triangulated_complex(const CubicalSet& X) {
  const int D = X.max_dim;
  CubicalTriangulatedComplex T;
  T.cells.resize(D + 1);
  T.index.resize(D + 1);
  T.cc.dims.assign(D + 1, 0);
  std::vector<std::vector<std::vector<std::vector<std::uint32_t>>>> chains(D + 1);
  for (int n = 0; n <= D; ++n) {
    chains[n].resize(D + 1);
    for (int k = 0; k <= n; ++k) interior_chains(n, k, chains[n][k]);
  }
  for (int k = 0; k <= D; ++k) {
    for (int n = k; n <= D; ++n)
      for (std::uint32_t x = 0; x < X.counts[n]; ++x) {
        if (X.degenerate[n][x]) continue;
        for (const auto& c : chains[n][k]) {
          T.index[k][{n, x, c}] = static_cast<std::uint32_t>(T.cells[k].size());
          T.cells[k].push_back({n, x, c});
        }
      }
    T.cc.dims[k] = T.cells[k].size();
    check_budget(T.cells[k].size(), "triangulated_complex");
  }
  auto wit = degeneracy_witnesses(X);
  T.cc.boundary.resize(D + 1);
  for (int k = 1; k <= D; ++k) {
    auto& B = T.cc.boundary[k];
    B = SparseIntMatrix::zero(T.cc.dims[k - 1], T.cc.dims[k]);
    for (std::uint32_t cell = 0; cell < T.cc.dims[k]; ++cell) {
      auto [n, x, c] = T.cells[k][cell];
      for (int i = 0; i <= k; ++i) {
        auto cc = c;
        cc.erase(cc.begin() + i);
        const std::uint32_t f = normalize_cell(X, wit, T, k - 1, n, x, std::move(cc));
        if (f != UINT32_MAX) B.add(f, cell, (i % 2 == 0) ? 1 : -1);
      }
    }
  }
  return T;
}

std::uint32_t normalize_cell(const CubicalSet& X,
                             const std::vector<std::vector<std::optional<DegeneracyWitness>>>& wit,
                             const CubicalTriangulatedComplex& T, int k, int n, std::uint32_t x,
                             std::vector<std::uint32_t> chain) {
  while (true) {
    // degenerate chain: dies in the normalized complex
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      if (chain[i] == chain[i + 1]) return UINT32_MAX;
    // strip a constant coordinate (face of the cube)
    int const_pos = -1, const_val = 0;
    for (int c = n - 1; c >= 0 && const_pos < 0; --c) {
      bool all0 = true, all1 = true;
      for (std::uint32_t v : chain) {
        if (v & (1u << c)) all0 = false;
        else all1 = false;
      }
      if (all0) {
        const_pos = c;
        const_val = 0;
      } else if (all1) {
        const_pos = c;
        const_val = 1;
      }
    }
    if (const_pos >= 0) {
      x = X.face(n, const_pos + 1, const_val, x);
      const std::uint32_t low = (1u << const_pos) - 1u;
      for (auto& v : chain) v = (v & low) | ((v >> (const_pos + 1)) << const_pos);
      --n;
      continue;
    }
    if (X.degenerate[n][x]) {
      const auto& w = *wit[n][x];
      const VertexMap gt = generator_table(w.g, n);
      x = w.preimage;
      for (auto& v : chain) v = gt[v];
      --n;
      continue;
    }
    return T.index[k].at({n, x, chain});
  }
}

std::vector<std::vector<std::uint32_t>> triangulated_cell_map(const CubicalSet& X,
                                                              const CubicalSet& Y,
                                                              const CubicalMap& f,
                                                              const CubicalTriangulatedComplex& TX,
                                                              const CubicalTriangulatedComplex& TY) {
  auto wit = degeneracy_witnesses(Y);
  std::vector<std::vector<std::uint32_t>> out(TX.cells.size());
  for (std::size_t k = 0; k < TX.cells.size(); ++k) {
    out[k].resize(TX.cells[k].size());
    for (std::uint32_t cell = 0; cell < TX.cells[k].size(); ++cell) {
      auto [n, x, c] = TX.cells[k][cell];
      out[k][cell] = normalize_cell(Y, wit, TY, static_cast<int>(k), n, f.level[n][x], c);
    }
  }
  (void)X;
  return out;
}

std::vector<HomologyGroup> homology_groups(const CubicalSet& X, int up_to) {
  if (up_to + 1 > X.max_dim)
    throw DomainError("homology_groups: need truncation >= " + std::to_string(up_to + 1) +
                      " (given " + std::to_string(X.max_dim) + ")");
  auto T = triangulated_complex(X);
  return homology_of_complex(T.cc, up_to);
}

std::vector<HomologyGroup> homology_groups(const SimplicialSet& S, int up_to) {
  if (up_to + 1 > S.max_dim)
    throw DomainError("homology_groups: need truncation >= " + std::to_string(up_to + 1) +
                      " (given " + std::to_string(S.max_dim) + ")");
  return homology_of_complex(normalized_complex(S).cc, up_to);
}

// --- induced map on H1 -----------------------------------------------------------------

H1ComparisonReport h1_induced_comparison(const CubicalSet& X, const CubicalSet& Y,
                                         const CubicalMap& f) {
  auto TX = triangulated_complex(X);
  auto TY = triangulated_complex(Y);
  H1ComparisonReport rep;
  rep.h1_src = homology_of_complex(TX.cc, 1)[1];
  rep.h1_dst = homology_of_complex(TY.cc, 1)[1];
  rep.abstract_equal = rep.h1_src.betti == rep.h1_dst.betti &&
                       rep.h1_src.torsion == rep.h1_dst.torsion;

  // integer kernel of the small side's boundary
  std::vector<std::vector<Int>> kernel;
  smith_normal_form(TX.cc.boundary[1].dense(), &kernel);
  const auto cell_map = triangulated_cell_map(X, Y, f, TX, TY);

  // [d2_Y | phi(kernel)] must span the cycle lattice of Y
  SparseIntMatrix M = SparseIntMatrix::zero(TY.cc.dims[1], TY.cc.dims[2] + kernel.size());
  M.col_entries = TY.cc.boundary[2].col_entries;
  M.col_entries.resize(TY.cc.dims[2] + kernel.size());
  for (std::size_t j = 0; j < kernel.size(); ++j) {
    for (std::size_t i = 0; i < kernel[j].size(); ++i) {
      if (kernel[j][i] == 0) continue;
      const std::uint32_t t = cell_map[1][i];
      if (t == UINT32_MAX) continue;
      // kernel entries are small in practice; bail out if not representable
      if (kernel[j][i] > std::numeric_limits<long long>::max() ||
          kernel[j][i] < std::numeric_limits<long long>::min())
        throw ResourceError("h1 comparison: kernel entry too large");
      M.add(t, static_cast<std::uint32_t>(TY.cc.dims[2] + j),
            static_cast<long long>(kernel[j][i]));
    }
  }
  auto snf1 = smith_normal_form_sparse(TY.cc.boundary[1]);
  auto snfM = smith_normal_form_sparse(M);
  const std::size_t cycle_rank = TY.cc.dims[1] - snf1.rank();
  bool all_ones = true;
  for (const Int& d : snfM.divisors)
    if (d != 1) all_ones = false;
  rep.surjective = snfM.rank() == cycle_rank && all_ones;
  return rep;
}

}  // namespace cubix
