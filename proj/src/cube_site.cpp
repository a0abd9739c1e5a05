#include "cubix/cube_site.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace cubix {

int generator_shift(GenKind k) { return k == GenKind::Face ? 1 : -1; }

VertexMap generator_table(const Generator& g, int from_dim) {
  const std::uint32_t size = 1u << from_dim;
  VertexMap t(size);
  switch (g.kind) {
    case GenKind::Face: {
      if (g.index < 1 || g.index > from_dim + 1)
        throw DomainError("face index out of range: d(" + std::to_string(g.index) + ") at dim " +
                          std::to_string(from_dim));
      const std::uint32_t low = (1u << (g.index - 1)) - 1u;
      for (std::uint32_t x = 0; x < size; ++x)
        t[x] = (x & low) | (static_cast<std::uint32_t>(g.eps) << (g.index - 1)) |
               ((x & ~low) << 1);
      break;
    }
    case GenKind::Degeneracy: {
      if (g.index < 1 || g.index > from_dim)
        throw DomainError("degeneracy index out of range: s(" + std::to_string(g.index) +
                          ") at dim " + std::to_string(from_dim));
      const std::uint32_t low = (1u << (g.index - 1)) - 1u;
      for (std::uint32_t x = 0; x < size; ++x)
        t[x] = (x & low) | ((x >> g.index) << (g.index - 1));
      break;
    }
    case GenKind::Connection: {
      if (g.index < 1 || g.index > from_dim - 1)
        throw DomainError("connection index out of range: g(" + std::to_string(g.index) +
                          ") at dim " + std::to_string(from_dim));
      const std::uint32_t low = (1u << (g.index - 1)) - 1u;
      for (std::uint32_t x = 0; x < size; ++x) {
        const std::uint32_t a = (x >> (g.index - 1)) & 1u;
        const std::uint32_t b = (x >> g.index) & 1u;
        const std::uint32_t merged = g.eps == 0 ? (a | b) : (a & b);
        t[x] = (x & low) | (merged << (g.index - 1)) | ((x >> (g.index + 1)) << g.index);
      }
      break;
    }
  }
  return t;
}

BoxMorphism identity_morphism(int dim) {
  BoxMorphism m;
  m.src_dim = m.dst_dim = dim;
  m.table.resize(1u << dim);
  for (std::uint32_t x = 0; x < m.table.size(); ++x) m.table[x] = x;
  return m;
}

static BoxMorphism single_generator(const Generator& g, int from_dim) {
  BoxMorphism m;
  m.src_dim = from_dim;
  m.dst_dim = from_dim + generator_shift(g.kind);
  m.table = generator_table(g, from_dim);
  m.word = {g};
  return m;
}

BoxMorphism face(int n, int i, int eps) {
  return single_generator({GenKind::Face, i, eps}, n - 1);
}
BoxMorphism degeneracy(int n, int i) {
  return single_generator({GenKind::Degeneracy, i, 0}, n);
}
BoxMorphism connection(int n, int i, int eps) {
  return single_generator({GenKind::Connection, i, eps}, n);
}

VertexMap word_table(const std::vector<Generator>& word, int src_dim, int* dst_dim) {
  VertexMap t(1u << src_dim);
  for (std::uint32_t x = 0; x < t.size(); ++x) t[x] = x;
  int dim = src_dim;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const VertexMap g = generator_table(*it, dim);
    for (auto& v : t) v = g[v];
    dim += generator_shift(it->kind);
  }
  if (dst_dim) *dst_dim = dim;
  return t;
}

bool is_monotone(const VertexMap& table, int src_dim, int dst_dim) {
  const std::uint32_t size = 1u << src_dim;
  if (table.size() != size) return false;
  for (std::uint32_t x = 0; x < size; ++x) {
    if (table[x] >= (1u << dst_dim)) return false;
    for (int j = 0; j < src_dim; ++j) {
      if (x & (1u << j)) continue;
      const std::uint32_t y = x | (1u << j);
      if (table[x] & ~table[y]) return false;  // f(x) <= f(y) coordinatewise
    }
  }
  return true;
}

VertexMap compose_tables(const VertexMap& g, const VertexMap& f) {
  VertexMap t(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) t[x] = g[f[x]];
  return t;
}

// --- canonical surjection words ---------------------------------------------

namespace {

struct SurjLevels {
  // by_target[k]: all degeneracy/connection composites [1]^m ->> [1]^k in
  // BFS discovery order, plus a table lookup.
  std::vector<std::vector<std::pair<VertexMap, std::vector<Generator>>>> by_target;
  std::vector<std::map<VertexMap, std::size_t>> index;
};

const SurjLevels& surj_levels(int m) {
  static std::map<int, SurjLevels> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  if (m > 12) throw ResourceError("surjection table dimension too large: " + std::to_string(m));

  SurjLevels lv;
  lv.by_target.resize(m + 1);
  lv.index.resize(m + 1);
  BoxMorphism id = identity_morphism(m);
  lv.by_target[m].push_back({id.table, {}});
  lv.index[m][id.table] = 0;
  for (int d = m; d >= 1; --d) {
    std::vector<Generator> gens;
    for (int i = 1; i <= d; ++i) gens.push_back({GenKind::Degeneracy, i, 0});
    for (int i = 1; i + 1 <= d; ++i)
      for (int eps = 0; eps <= 1; ++eps) gens.push_back({GenKind::Connection, i, eps});
    for (const auto& [tab, word] : lv.by_target[d]) {
      for (const Generator& g : gens) {
        VertexMap nt = compose_tables(generator_table(g, d), tab);
        if (lv.index[d - 1].count(nt)) continue;
        std::vector<Generator> nw;
        nw.reserve(word.size() + 1);
        nw.push_back(g);
        nw.insert(nw.end(), word.begin(), word.end());
        lv.index[d - 1][nt] = lv.by_target[d - 1].size();
        lv.by_target[d - 1].push_back({std::move(nt), std::move(nw)});
      }
    }
  }
  return cache.emplace(m, std::move(lv)).first->second;
}

}  // namespace

const std::vector<std::pair<VertexMap, std::vector<Generator>>>& surjection_words(int m, int k) {
  if (k < 0 || k > m) throw DomainError("surjection_words: bad target dimension");
  return surj_levels(m).by_target[k];
}

// --- normal form -------------------------------------------------------------

std::optional<BoxMorphism> normal_form(const VertexMap& table, int src_dim, int dst_dim) {
  if (table.size() != (1u << src_dim))
    throw DomainError("normal_form: table size does not match source dimension");
  if (!is_monotone(table, src_dim, dst_dim)) throw DomainError("normal_form: map is not monotone");

  // Constant output coordinates are exactly the face-inserted ones.
  std::vector<std::pair<int, int>> constants;  // (1-based position, value)
  std::uint32_t keep_mask = 0;
  for (int c = 0; c < dst_dim; ++c) {
    bool all0 = true, all1 = true;
    for (std::uint32_t x = 0; x < table.size(); ++x) {
      if (table[x] & (1u << c)) all0 = false;
      else all1 = false;
    }
    if (all0) constants.push_back({c + 1, 0});
    else if (all1) constants.push_back({c + 1, 1});
    else keep_mask |= 1u << c;
  }
  const int k = dst_dim - static_cast<int>(constants.size());
  if (k > src_dim) return std::nullopt;

  // Squash out the constant coordinates.
  VertexMap squashed(table.size());
  for (std::uint32_t x = 0; x < table.size(); ++x) {
    std::uint32_t v = 0;
    int out = 0;
    for (int c = 0; c < dst_dim; ++c) {
      if (!(keep_mask & (1u << c))) continue;
      if (table[x] & (1u << c)) v |= 1u << out;
      ++out;
    }
    squashed[x] = v;
  }

  std::vector<Generator> word;
  for (auto it = constants.rbegin(); it != constants.rend(); ++it)
    word.push_back({GenKind::Face, it->first, it->second});

  const auto& lv = surj_levels(src_dim);
  auto hit = lv.index[k].find(squashed);
  if (hit == lv.index[k].end()) return std::nullopt;
  const auto& surj_word = lv.by_target[k][hit->second].second;
  word.insert(word.end(), surj_word.begin(), surj_word.end());

  BoxMorphism m;
  m.src_dim = src_dim;
  m.dst_dim = dst_dim;
  m.table = table;
  m.word = std::move(word);
  return m;
}

std::optional<BoxMorphism> normal_form_word(const std::vector<Generator>& word, int src_dim) {
  int dst = 0;
  VertexMap t = word_table(word, src_dim, &dst);
  return normal_form(t, src_dim, dst);
}

BoxMorphism compose(const BoxMorphism& g, const BoxMorphism& f) {
  if (f.dst_dim != g.src_dim)
    throw DomainError("compose: dimension mismatch (" + std::to_string(f.dst_dim) +
                      " vs " + std::to_string(g.src_dim) + ")");
  auto nf = normal_form(compose_tables(g.table, f.table), f.src_dim, g.dst_dim);
  if (!nf)
    throw DomainError("compose: composite table has no generator word");  // cannot happen
  return *nf;
}

std::vector<BoxMorphism> all_morphisms(int k, int n) {
  if (k < 0 || n < 0) throw DomainError("all_morphisms: negative dimension");
  std::vector<BoxMorphism> out;
  for (std::uint32_t cmask = 0; cmask < (1u << n); ++cmask) {
    const int t = n - __builtin_popcount(cmask);
    if (t > k) continue;
    // value bits range over subsets of cmask
    for (std::uint32_t val = cmask;; val = (val - 1) & cmask) {
      for (const auto& [surj_tab, surj_word] : surjection_words(k, t)) {
        BoxMorphism m;
        m.src_dim = k;
        m.dst_dim = n;
        m.table.resize(1u << k);
        for (std::uint32_t x = 0; x < m.table.size(); ++x) {
          std::uint32_t v = 0;
          int out_bit = 0;
          const std::uint32_t s = surj_tab[x];
          for (int c = 0; c < n; ++c) {
            if (cmask & (1u << c)) {
              if (val & (1u << c)) v |= 1u << c;
            } else {
              if (s & (1u << out_bit)) v |= 1u << c;
              ++out_bit;
            }
          }
          m.table[x] = v;
        }
        std::vector<std::pair<int, int>> constants;
        for (int c = 0; c < n; ++c)
          if (cmask & (1u << c)) constants.push_back({c + 1, (val >> c) & 1});
        for (auto it = constants.rbegin(); it != constants.rend(); ++it)
          m.word.push_back({GenKind::Face, it->first, it->second});
        m.word.insert(m.word.end(), surj_word.begin(), surj_word.end());
        out.push_back(std::move(m));
      }
      if (val == 0) break;
    }
  }
  return out;
}

// --- identity table -----------------------------------------------------------

std::vector<IdentityInstance> identity_instances(int max_ambient) {
  std::vector<IdentityInstance> out;
  auto F = [](int i, int e) { return Generator{GenKind::Face, i, e}; };
  auto S = [](int i) { return Generator{GenKind::Degeneracy, i, 0}; };
  auto G = [](int i, int e) { return Generator{GenKind::Connection, i, e}; };

  for (int n = 1; n <= max_ambient; ++n) {
    // faces: d(j,e') d(i,e) = d(i+1,e) d(j,e') for j <= i, inner face lands in [1]^{n-1}
    if (n >= 2) {
      for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= i; ++j)
          for (int e = 0; e <= 1; ++e)
            for (int e2 = 0; e2 <= 1; ++e2)
              out.push_back({{F(j, e2), F(i, e)}, {F(i + 1, e), F(j, e2)}, n - 2, "dd"});
    }
    // s(j) d(i,e)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int e = 0; e <= 1; ++e) {
          if (j < i) out.push_back({{S(j), F(i, e)}, {F(i - 1, e), S(j)}, n - 1, "sd"});
          else if (j == i) out.push_back({{S(j), F(i, e)}, {}, n - 1, "sd"});
          else out.push_back({{S(j), F(i, e)}, {F(i, e), S(j - 1)}, n - 1, "sd"});
        }
    // s(i) s(j) = s(j) s(i+1) for j <= i
    for (int j = 1; j <= n; ++j)
      for (int i = j; i <= n - 1; ++i)
        out.push_back({{S(i), S(j)}, {S(j), S(i + 1)}, n, "ss"});
    // g(j,e') g(i,e)
    for (int i = 1; i + 1 <= n; ++i)
      for (int e = 0; e <= 1; ++e) {
        for (int j = i + 1; j + 1 <= n - 1; ++j)
          for (int e2 = 0; e2 <= 1; ++e2)
            out.push_back({{G(j, e2), G(i, e)}, {G(i, e), G(j + 1, e2)}, n, "gg"});
        if (i + 1 <= n - 1)
          out.push_back({{G(i, e), G(i, e)}, {G(i, e), G(i + 1, e)}, n, "gg"});
      }
    // g(j,e') d(i,e)
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j + 1 <= n; ++j)
        for (int e = 0; e <= 1; ++e)
          for (int e2 = 0; e2 <= 1; ++e2) {
            if (j < i - 1) {
              out.push_back({{G(j, e2), F(i, e)}, {F(i - 1, e), G(j, e2)}, n - 1, "gd"});
            } else if (j == i - 1 || j == i) {
              if (e == e2) out.push_back({{G(j, e2), F(i, e)}, {}, n - 1, "gd"});
              else out.push_back({{G(j, e2), F(i, e)}, {F(j, e), S(j)}, n - 1, "gd"});
            } else {
              out.push_back({{G(j, e2), F(i, e)}, {F(i, e), G(j - 1, e2)}, n - 1, "gd"});
            }
          }
    // s(j) g(i,e)
    for (int i = 1; i + 1 <= n; ++i)
      for (int j = 1; j <= n - 1; ++j)
        for (int e = 0; e <= 1; ++e) {
          if (j < i) out.push_back({{S(j), G(i, e)}, {G(i - 1, e), S(j)}, n, "sg"});
          else if (j == i) out.push_back({{S(j), G(i, e)}, {S(i), S(i)}, n, "sg"});
          else out.push_back({{S(j), G(i, e)}, {G(i, e), S(j + 1)}, n, "sg"});
        }
  }
  return out;
}

// --- text ----------------------------------------------------------------------

std::string generator_text(const Generator& g) {
  switch (g.kind) {
    case GenKind::Face:
      return "d(" + std::to_string(g.index) + "," + std::to_string(g.eps) + ")";
    case GenKind::Degeneracy:
      return "s(" + std::to_string(g.index) + ")";
    case GenKind::Connection:
      return "g(" + std::to_string(g.index) + "," + std::to_string(g.eps) + ")";
  }
  return {};
}

std::string word_text(const std::vector<Generator>& word) {
  if (word.empty()) return "id";
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ';';
    s += generator_text(word[i]);
  }
  return s;
}

std::vector<Generator> parse_word(const std::string& text) {
  std::vector<Generator> word;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    std::string t;
    for (char c : item)
      if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty() || t == "id") continue;
    Generator g{};
    char kind = t[0];
    if (kind == 'd') g.kind = GenKind::Face;
    else if (kind == 's') g.kind = GenKind::Degeneracy;
    else if (kind == 'g') g.kind = GenKind::Connection;
    else throw DomainError("parse_word: unknown generator '" + t + "'");
    if (t.size() < 4 || t[1] != '(' || t.back() != ')')
      throw DomainError("parse_word: malformed generator '" + t + "'");
    const std::string args = t.substr(2, t.size() - 3);
    const auto comma = args.find(',');
    if (g.kind == GenKind::Degeneracy) {
      if (comma != std::string::npos) throw DomainError("parse_word: s takes one index");
      g.index = std::stoi(args);
    } else {
      if (comma == std::string::npos) throw DomainError("parse_word: missing epsilon");
      g.index = std::stoi(args.substr(0, comma));
      g.eps = std::stoi(args.substr(comma + 1));
      if (g.eps != 0 && g.eps != 1) throw DomainError("parse_word: epsilon must be 0 or 1");
    }
    word.push_back(g);
  }
  return word;
}

std::string table_text(const VertexMap& table, int src_dim, int dst_dim) {
  auto bits = [](std::uint32_t v, int d) {
    std::string s;
    for (int i = 0; i < d; ++i) s += (v & (1u << i)) ? '1' : '0';
    return s.empty() ? std::string("*") : s;
  };
  std::string s;
  for (std::uint32_t x = 0; x < table.size(); ++x) {
    if (x) s += ' ';
    s += bits(x, src_dim) + "->" + bits(table[x], dst_dim);
  }
  return s;
}

}  // namespace cubix
