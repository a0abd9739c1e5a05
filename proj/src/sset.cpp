#include "cubix/sset.hpp"

#include <algorithm>

#include "json.hpp"

namespace cubix {

std::string SimplicialSet::simplex_name(int n, std::uint32_t x) const {
  if (n < static_cast<int>(names.size()) && x < names[n].size() && !names[n][x].empty())
    return names[n][x];
  return "s" + std::to_string(n) + "#" + std::to_string(x);
}

std::size_t SimplicialSet::nondegenerate_count(int n) const {
  if (n > max_dim) return 0;
  std::size_t c = 0;
  for (std::uint32_t x = 0; x < counts[n]; ++x)
    if (!degenerate[n][x]) ++c;
  return c;
}

void SimplicialSet::allocate(int D) {
  max_dim = D;
  counts.assign(D + 1, 0);
  names.assign(D + 1, {});
  faces_.assign(D + 1, {});
  degens_.assign(D + 1, {});
  degenerate.assign(D + 1, {});
}

void recompute_degenerate(SimplicialSet& X) {
  X.degenerate.assign(X.max_dim + 1, {});
  for (int n = 0; n <= X.max_dim; ++n) X.degenerate[n].assign(X.counts[n], false);
  for (int n = 1; n <= X.max_dim; ++n)
    for (const auto& tab : X.degens_[n])
      for (std::uint32_t v : tab) X.degenerate[n][v] = true;
}

void validate(const SimplicialSet& X) {
  const int D = X.max_dim;
  auto fail = [](const std::string& msg) { throw DomainError("simplicial set invalid: " + msg); };
  for (int n = 1; n <= D; ++n) {
    if (static_cast<int>(X.faces_[n].size()) != n + 1) fail("face table count");
    for (const auto& tab : X.faces_[n]) {
      if (tab.size() != X.counts[n]) fail("face table size");
      for (std::uint32_t v : tab)
        if (v >= X.counts[n - 1]) fail("face range");
    }
    if (static_cast<int>(X.degens_[n].size()) != n) fail("degeneracy table count");
    for (const auto& tab : X.degens_[n]) {
      if (tab.size() != X.counts[n - 1]) fail("degeneracy table size");
      for (std::uint32_t v : tab)
        if (v >= X.counts[n]) fail("degeneracy range");
    }
  }
  // simplicial identities, applied contravariantly
  for (int n = 2; n <= D; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        for (std::uint32_t x = 0; x < X.counts[n]; ++x)
          if (X.face(n - 1, i, X.face(n, j, x)) != X.face(n - 1, j - 1, X.face(n, i, x)))
            fail("dd identity");
  for (int n = 2; n <= D; ++n)
    for (int j = 0; j <= n - 2; ++j)
      for (int i = 0; i <= j; ++i)
        for (std::uint32_t x = 0; x < X.counts[n - 2]; ++x)
          if (X.degen(n, j + 1, X.degen(n - 1, i, x)) != X.degen(n, i, X.degen(n - 1, j, x)))
            fail("ss identity");
  for (int n = 1; n <= D; ++n)
    for (int j = 0; j <= n - 1; ++j)
      for (int i = 0; i <= n; ++i)
        for (std::uint32_t x = 0; x < X.counts[n - 1]; ++x) {
          std::uint32_t lhs = X.face(n, i, X.degen(n, j, x));
          std::uint32_t rhs;
          if (i < j)
            rhs = n - 1 >= 1 ? X.degen(n - 1, j - 1, X.face(n - 1, i, x)) : 0;
          else if (i == j || i == j + 1)
            rhs = x;
          else
            rhs = n - 1 >= 1 ? X.degen(n - 1, j, X.face(n - 1, i - 1, x)) : 0;
          if (i < j || i > j + 1) {
            if (lhs != rhs) fail("ds identity");
          } else if (lhs != x) {
            fail("ds identity (section)");
          }
        }
  SimplicialSet copy = X;
  recompute_degenerate(copy);
  for (int n = 0; n <= D; ++n)
    if (copy.degenerate[n] != X.degenerate[n]) fail("degeneracy flags");
}

// --- standard cells ------------------------------------------------------------

namespace {

// weakly increasing sequences of length len over 0..top
void monotone_seqs(int top, int len, std::vector<std::uint32_t>& cur,
                   std::vector<std::vector<std::uint32_t>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  const std::uint32_t lo = cur.empty() ? 0 : cur.back();
  for (std::uint32_t v = lo; v <= static_cast<std::uint32_t>(top); ++v) {
    cur.push_back(v);
    monotone_seqs(top, len, cur, out);
    cur.pop_back();
  }
}

std::string chain_name(const std::vector<std::uint32_t>& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(c[i]);
  }
  return s;
}

}  // namespace

SimplicialSet standard_simplex(int n, int D) {
  SimplicialSet X;
  X.allocate(D);
  std::vector<std::vector<std::vector<std::uint32_t>>> simp(D + 1);
  std::vector<std::map<std::vector<std::uint32_t>, std::uint32_t>> idx(D + 1);
  for (int k = 0; k <= D; ++k) {
    std::vector<std::uint32_t> cur;
    monotone_seqs(n, k + 1, cur, simp[k]);
    for (std::uint32_t s = 0; s < simp[k].size(); ++s) {
      idx[k][simp[k][s]] = s;
      X.names[k].push_back(chain_name(simp[k][s]));
    }
    X.counts[k] = simp[k].size();
  }
  for (int k = 1; k <= D; ++k) {
    X.faces_[k].assign(k + 1, std::vector<std::uint32_t>(X.counts[k]));
    for (int i = 0; i <= k; ++i)
      for (std::uint32_t s = 0; s < X.counts[k]; ++s) {
        auto c = simp[k][s];
        c.erase(c.begin() + i);
        X.faces_[k][i][s] = idx[k - 1].at(c);
      }
    X.degens_[k].assign(k, std::vector<std::uint32_t>(X.counts[k - 1]));
    for (int i = 0; i < k; ++i)
      for (std::uint32_t s = 0; s < X.counts[k - 1]; ++s) {
        auto c = simp[k - 1][s];
        c.insert(c.begin() + i, c[i]);
        X.degens_[k][i][s] = idx[k].at(c);
      }
  }
  recompute_degenerate(X);
  validate(X);
  return X;
}

namespace {
// weakly increasing chains in the poset [1]^n (bitmask subset order)
void poset_chains(int n, int len, std::vector<std::uint32_t>& cur,
                  std::vector<std::vector<std::uint32_t>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  const std::uint32_t size = 1u << n;
  for (std::uint32_t v = 0; v < size; ++v) {
    if (!cur.empty() && (cur.back() & ~v)) continue;  // need cur.back() <= v
    cur.push_back(v);
    poset_chains(n, len, cur, out);
    cur.pop_back();
  }
}
}  // namespace

CubePower delta1_power(int n, int D) {
  CubePower P;
  P.n = n;
  P.ss.allocate(D);
  P.chains.resize(D + 1);
  P.index.resize(D + 1);
  for (int k = 0; k <= D; ++k) {
    std::vector<std::uint32_t> cur;
    poset_chains(n, k + 1, cur, P.chains[k]);
    for (std::uint32_t s = 0; s < P.chains[k].size(); ++s) {
      P.index[k][P.chains[k][s]] = s;
      P.ss.names[k].push_back(chain_name(P.chains[k][s]));
    }
    P.ss.counts[k] = P.chains[k].size();
  }
  for (int k = 1; k <= D; ++k) {
    P.ss.faces_[k].assign(k + 1, std::vector<std::uint32_t>(P.ss.counts[k]));
    for (int i = 0; i <= k; ++i)
      for (std::uint32_t s = 0; s < P.ss.counts[k]; ++s) {
        auto c = P.chains[k][s];
        c.erase(c.begin() + i);
        P.ss.faces_[k][i][s] = P.index[k - 1].at(c);
      }
    P.ss.degens_[k].assign(k, std::vector<std::uint32_t>(P.ss.counts[k - 1]));
    for (int i = 0; i < k; ++i)
      for (std::uint32_t s = 0; s < P.ss.counts[k - 1]; ++s) {
        auto c = P.chains[k - 1][s];
        c.insert(c.begin() + i, c[i]);
        P.ss.degens_[k][i][s] = P.index[k].at(c);
      }
  }
  recompute_degenerate(P.ss);
  validate(P.ss);
  return P;
}

// --- maps -------------------------------------------------------------------------

SimplicialMap identity_map(const SimplicialSet& X) {
  SimplicialMap f;
  f.level.resize(X.max_dim + 1);
  for (int n = 0; n <= X.max_dim; ++n) {
    f.level[n].resize(X.counts[n]);
    for (std::uint32_t x = 0; x < X.counts[n]; ++x) f.level[n][x] = x;
  }
  return f;
}

bool is_natural(const SimplicialSet& X, const SimplicialSet& Y, const SimplicialMap& f) {
  if (X.max_dim != Y.max_dim) return false;
  for (int n = 1; n <= X.max_dim; ++n) {
    for (int i = 0; i <= n; ++i)
      for (std::uint32_t x = 0; x < X.counts[n]; ++x)
        if (f.level[n - 1][X.face(n, i, x)] != Y.face(n, i, f.level[n][x])) return false;
    for (int i = 0; i < n; ++i)
      for (std::uint32_t y = 0; y < X.counts[n - 1]; ++y)
        if (f.level[n][X.degen(n, i, y)] != Y.degen(n, i, f.level[n - 1][y])) return false;
  }
  return true;
}

namespace {

struct SMapEnumerator {
  const SimplicialSet& X;
  const SimplicialSet& Y;
  bool bijective, first_only;
  std::vector<std::vector<std::pair<int, std::uint32_t>>> wit;  // (degen index, preimage)
  std::vector<std::vector<std::uint32_t>> nondeg;
  SimplicialMap img;
  std::vector<std::vector<bool>> used;
  std::vector<SimplicialMap> out;
  std::size_t nodes = 0;

  SMapEnumerator(const SimplicialSet& x, const SimplicialSet& y, bool bij, bool first)
      : X(x), Y(y), bijective(bij), first_only(first) {
    wit.resize(X.max_dim + 1);
    nondeg.resize(X.max_dim + 1);
    for (int n = 0; n <= X.max_dim; ++n) {
      wit[n].assign(X.counts[n], {-1, 0});
      for (std::uint32_t c = 0; c < X.counts[n]; ++c)
        if (!X.degenerate[n][c]) nondeg[n].push_back(c);
    }
    for (int n = 1; n <= X.max_dim; ++n)
      for (int i = 0; i < n; ++i)
        for (std::uint32_t yv = 0; yv < X.counts[n - 1]; ++yv) {
          std::uint32_t v = X.degen(n, i, yv);
          if (wit[n][v].first < 0) wit[n][v] = {i, yv};
        }
    img.level.resize(X.max_dim + 1);
    used.resize(X.max_dim + 1);
    for (int n = 0; n <= X.max_dim; ++n) {
      img.level[n].assign(X.counts[n], 0);
      used[n].assign(Y.counts[n], false);
    }
  }

  bool naturality_at(int n) {
    if (n == 0) return true;
    for (int i = 0; i <= n; ++i)
      for (std::uint32_t x = 0; x < X.counts[n]; ++x)
        if (img.level[n - 1][X.face(n, i, x)] != Y.face(n, i, img.level[n][x])) return false;
    for (int i = 0; i < n; ++i)
      for (std::uint32_t y = 0; y < X.counts[n - 1]; ++y)
        if (img.level[n][X.degen(n, i, y)] != Y.degen(n, i, img.level[n - 1][y])) return false;
    return true;
  }

  bool assign(int n, std::size_t pos) {
    check_budget(++nodes, "enumerate_simplicial_maps");
    if (n > X.max_dim) {
      out.push_back(img);
      return first_only;
    }
    if (pos == 0)
      for (std::uint32_t c = 0; c < X.counts[n]; ++c)
        if (X.degenerate[n][c]) {
          const auto& [i, pre] = wit[n][c];
          img.level[n][c] = Y.degen(n, i, img.level[n - 1][pre]);
        }
    if (pos == nondeg[n].size()) {
      if (!naturality_at(n)) return false;
      if (bijective) {
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
      if (bijective && used[n][y]) continue;
      bool ok = true;
      for (int i = 0; i <= n && ok; ++i)
        if (n >= 1 && Y.face(n, i, y) != img.level[n - 1][X.face(n, i, x)]) ok = false;
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

std::vector<SimplicialMap> enumerate_simplicial_maps(const SimplicialSet& X,
                                                     const SimplicialSet& Y) {
  if (X.max_dim != Y.max_dim) throw DomainError("enumerate_simplicial_maps: truncation mismatch");
  SMapEnumerator e(X, Y, false, false);
  e.assign(0, 0);
  return std::move(e.out);
}

std::optional<SimplicialMap> find_simplicial_isomorphism(const SimplicialSet& X,
                                                         const SimplicialSet& Y) {
  if (X.max_dim != Y.max_dim) return std::nullopt;
  for (int n = 0; n <= X.max_dim; ++n)
    if (X.counts[n] != Y.counts[n] || X.nondegenerate_count(n) != Y.nondegenerate_count(n))
      return std::nullopt;
  SMapEnumerator e(X, Y, true, true);
  e.assign(0, 0);
  if (e.out.empty()) return std::nullopt;
  return e.out.front();
}

SsetProduct sset_product(const SimplicialSet& A, const SimplicialSet& B) {
  if (A.max_dim != B.max_dim) throw DomainError("sset_product: truncation mismatch");
  SsetProduct P;
  const int D = A.max_dim;
  P.ss.allocate(D);
  P.pairs.resize(D + 1);
  P.index.resize(D + 1);
  for (int k = 0; k <= D; ++k) {
    for (std::uint32_t a = 0; a < A.counts[k]; ++a)
      for (std::uint32_t b = 0; b < B.counts[k]; ++b) {
        P.index[k][{a, b}] = static_cast<std::uint32_t>(P.pairs[k].size());
        P.ss.names[k].push_back(A.simplex_name(k, a) + "*" + B.simplex_name(k, b));
        P.pairs[k].push_back({a, b});
      }
    P.ss.counts[k] = P.pairs[k].size();
  }
  for (int k = 1; k <= D; ++k) {
    P.ss.faces_[k].assign(k + 1, std::vector<std::uint32_t>(P.ss.counts[k]));
    for (int i = 0; i <= k; ++i)
      for (std::uint32_t s = 0; s < P.ss.counts[k]; ++s) {
        auto [a, b] = P.pairs[k][s];
        P.ss.faces_[k][i][s] = P.index[k - 1].at({A.face(k, i, a), B.face(k, i, b)});
      }
    P.ss.degens_[k].assign(k, std::vector<std::uint32_t>(P.ss.counts[k - 1]));
    for (int i = 0; i < k; ++i)
      for (std::uint32_t s = 0; s < P.ss.counts[k - 1]; ++s) {
        auto [a, b] = P.pairs[k - 1][s];
        P.ss.degens_[k][i][s] = P.index[k].at({A.degen(k, i, a), B.degen(k, i, b)});
      }
  }
  recompute_degenerate(P.ss);
  validate(P.ss);
  return P;
}

// --- JSON ---------------------------------------------------------------------------

std::string sset_to_json(const SimplicialSet& X) {
  nlohmann::json j;
  j["max_dim"] = X.max_dim;
  nlohmann::json cells = nlohmann::json::object();
  for (int n = 0; n <= X.max_dim; ++n) {
    nlohmann::json arr = nlohmann::json::array();
    for (std::uint32_t x = 0; x < X.counts[n]; ++x) arr.push_back(X.simplex_name(n, x));
    cells[std::to_string(n)] = std::move(arr);
  }
  j["simplices"] = std::move(cells);
  nlohmann::json faces = nlohmann::json::object(), degens = nlohmann::json::object();
  for (int n = 1; n <= X.max_dim; ++n) {
    nlohmann::json fd = nlohmann::json::object();
    for (int i = 0; i <= n; ++i) {
      nlohmann::json arr = nlohmann::json::array();
      for (std::uint32_t x = 0; x < X.counts[n]; ++x)
        arr.push_back(X.simplex_name(n - 1, X.face(n, i, x)));
      fd["d(" + std::to_string(i) + ")"] = std::move(arr);
    }
    faces[std::to_string(n)] = std::move(fd);
    nlohmann::json dd = nlohmann::json::object();
    for (int i = 0; i < n; ++i) {
      nlohmann::json arr = nlohmann::json::array();
      for (std::uint32_t y = 0; y < X.counts[n - 1]; ++y)
        arr.push_back(X.simplex_name(n, X.degen(n, i, y)));
      dd["s(" + std::to_string(i) + ")"] = std::move(arr);
    }
    degens[std::to_string(n)] = std::move(dd);
  }
  j["faces"] = std::move(faces);
  j["degens"] = std::move(degens);
  return j.dump(2);
}

SimplicialSet sset_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SimplicialSet X;
  X.allocate(j.at("max_dim").get<int>());
  std::vector<std::map<std::string, std::uint32_t>> idx(X.max_dim + 1);
  for (int n = 0; n <= X.max_dim; ++n) {
    for (const auto& name : j.at("simplices").at(std::to_string(n))) {
      const std::string s = name.get<std::string>();
      if (idx[n].count(s)) throw DomainError("sset_from_json: duplicate simplex name " + s);
      idx[n][s] = static_cast<std::uint32_t>(X.names[n].size());
      X.names[n].push_back(s);
    }
    X.counts[n] = X.names[n].size();
  }
  auto read_table = [&](const nlohmann::json& arr, int dim) {
    std::vector<std::uint32_t> t;
    for (const auto& name : arr) t.push_back(idx[dim].at(name.get<std::string>()));
    return t;
  };
  for (int n = 1; n <= X.max_dim; ++n) {
    X.faces_[n].resize(n + 1);
    for (int i = 0; i <= n; ++i)
      X.faces_[n][i] =
          read_table(j.at("faces").at(std::to_string(n)).at("d(" + std::to_string(i) + ")"), n - 1);
    X.degens_[n].resize(n);
    for (int i = 0; i < n; ++i)
      X.degens_[n][i] =
          read_table(j.at("degens").at(std::to_string(n)).at("s(" + std::to_string(i) + ")"), n);
  }
  recompute_degenerate(X);
  validate(X);
  return X;
}

}  // namespace cubix
