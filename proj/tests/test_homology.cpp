#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cubix/geom.hpp"
#include "cubix/homology.hpp"

using namespace cubix;

namespace {

// independent oracle: invariant factors as ratios of gcds of k x k minors
Int minor_gcd(const IntMatrix& M, std::size_t k, std::vector<std::size_t>& rsel,
              std::vector<std::size_t>& csel);

Int det_submatrix(const IntMatrix& M, const std::vector<std::size_t>& rsel,
                  const std::vector<std::size_t>& csel) {
  const std::size_t n = rsel.size();
  if (n == 0) return 1;
  IntMatrix A = IntMatrix::zero(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A.a[i][j] = M.a[rsel[i]][csel[j]];
  // fraction-free Gaussian elimination; the sign is irrelevant for gcds
  for (std::size_t p = 0; p < n; ++p) {
    if (A.a[p][p] == 0) {
      std::size_t s = p + 1;
      while (s < n && A.a[s][p] == 0) ++s;
      if (s == n) return 0;
      std::swap(A.a[p], A.a[s]);
    }
    for (std::size_t i = p + 1; i < n; ++i)
      for (std::size_t j = p + 1; j < n; ++j)
        A.a[i][j] = (A.a[i][j] * A.a[p][p] - A.a[i][p] * A.a[p][j]) /
                    (p == 0 ? Int(1) : A.a[p - 1][p - 1]);
  }
  return A.a[n - 1][n - 1];
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

std::vector<Int> invariant_factors_by_minors(const IntMatrix& M) {
  std::vector<Int> gcds{1};  // gcd of 0x0 minors
  for (std::size_t k = 1; k <= std::min(M.rows, M.cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    subsets(M.rows, k, rs);
    subsets(M.cols, k, cs);
    Int g = 0;
    for (auto& r : rs)
      for (auto& c : cs) {
        Int d = det_submatrix(M, r, c);
        if (d < 0) d = -d;
        g = gcd(g, d);
      }
    if (g == 0) break;
    gcds.push_back(g);
  }
  std::vector<Int> inv;
  for (std::size_t k = 1; k < gcds.size(); ++k) inv.push_back(gcds[k] / gcds[k - 1]);
  return inv;
}

}  // namespace

TEST_CASE("smith normal form basics") {
  IntMatrix a = IntMatrix::zero(1, 1);
  a.a[0][0] = 2;
  CHECK(smith_normal_form(a).divisors == std::vector<Int>{2});

  IntMatrix b = IntMatrix::zero(2, 2);
  b.a[0][0] = 2;
  b.a[1][1] = 3;
  CHECK(smith_normal_form(b).divisors == std::vector<Int>{1, 6});

  IntMatrix z = IntMatrix::zero(3, 2);
  CHECK(smith_normal_form(z).divisors.empty());
}

TEST_CASE("smith normal form against the minor-gcd oracle") {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> dim(1, 6), val(-6, 6);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m = IntMatrix::zero(dim(rng), dim(rng));
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c) m.a[r][c] = val(rng);
    auto got = smith_normal_form(m).divisors;
    auto expect = invariant_factors_by_minors(m);
    CHECK(got == expect);
    for (std::size_t i = 0; i + 1 < got.size(); ++i) CHECK(got[i + 1] % got[i] == 0);
    // sparse route agrees
    SparseIntMatrix sp = SparseIntMatrix::zero(m.rows, m.cols);
    for (std::size_t r = 0; r < m.rows; ++r)
      for (std::size_t c = 0; c < m.cols; ++c)
        if (m.a[r][c] != 0)
          sp.add(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(c),
                 static_cast<long long>(m.a[r][c]));
    auto sparse = smith_normal_form_sparse(sp).divisors;
    std::vector<Int> nontrivial_dense, nontrivial_sparse;
    for (auto& d : got) nontrivial_dense.push_back(d);
    for (auto& d : sparse) nontrivial_sparse.push_back(d);
    CHECK(nontrivial_dense == nontrivial_sparse);
  }
}

TEST_CASE("kernel basis") {
  // x + y + z = 0 over Z: kernel rank 2
  IntMatrix m = IntMatrix::zero(1, 3);
  m.a[0][0] = 1;
  m.a[0][1] = 1;
  m.a[0][2] = 1;
  std::vector<std::vector<Int>> kernel;
  smith_normal_form(m, &kernel);
  REQUIRE(kernel.size() == 2);
  for (const auto& v : kernel) CHECK(v[0] + v[1] + v[2] == 0);
}

TEST_CASE("homology of standard cells") {
  auto c1 = standard_cube(1, 2);
  auto h = homology_groups(c1.cs, 1);
  CHECK(h[0].text() == "H_0 = Z");
  CHECK(h[1].text() == "H_1 = 0");

  auto square = standard_cube(2, 2);
  h = homology_groups(square.cs, 1);
  CHECK(h[0].betti == 1);
  CHECK(h[1].betti == 0);

  // the boundary of the square is a circle
  auto circle = boundary_cell(2, 2);
  h = homology_groups(circle.cs, 1);
  CHECK(h[0].betti == 1);
  CHECK(h[1].betti == 1);
  CHECK(h[1].torsion.empty());

  // two points
  auto pts = boundary_cell(1, 2);
  h = homology_groups(pts.cs, 1);
  CHECK(h[0].betti == 2);

  CHECK_THROWS_AS(homology_groups(standard_cube(1, 1).cs, 1), DomainError);
}

TEST_CASE("normalized complexes square to zero and match the generic colimit") {
  for (auto cell : {standard_cube(2, 2), boundary_cell(2, 2), open_box(2, 1, 0, 2),
                    standard_cube(3, 3)}) {
    auto direct = triangulated_complex(cell.cs);
    CHECK(boundaries_square_to_zero(direct.cc));
    auto generic = normalized_complex(triangulate(cell.cs).ss);
    CHECK(boundaries_square_to_zero(generic.cc));
    REQUIRE(direct.cc.dims == generic.cc.dims);
    const int top = direct.cc.top_degree();
    for (int d = 0; d + 1 <= top; ++d) {
      auto a = homology_of_complex(direct.cc, d);
      auto b = homology_of_complex(generic.cc, d);
      CHECK(a == b);
    }
  }
}

TEST_CASE("homology unchanged by adding degenerate cubes") {
  // compare boundary-of-square at truncation 2 vs truncation 3 (extra cubes degenerate)
  auto a = homology_groups(boundary_cell(2, 2).cs, 1);
  auto b = homology_groups(boundary_cell(2, 3).cs, 1);
  CHECK(a == b);
}

TEST_CASE("torsion presentation") {
  ChainComplex C;
  C.dims = {1, 1, 1};
  C.boundary.resize(3);
  C.boundary[1] = SparseIntMatrix::zero(1, 1);
  C.boundary[2] = SparseIntMatrix::zero(1, 1);
  C.boundary[2].add(0, 0, 2);
  auto h = homology_of_complex(C, 1);
  CHECK(h[1].betti == 0);
  REQUIRE(h[1].torsion.size() == 1);
  CHECK(h[1].torsion[0] == 2);
  CHECK(h[1].text() == "H_1 = Z/2");
}

TEST_CASE("H0 equals pi0") {
  for (auto cell : {boundary_cell(1, 2), open_box(2, 1, 0, 2), standard_cube(2, 2)}) {
    auto h = homology_groups(cell.cs, 0);
    CHECK(h[0].betti == pi0(cell.cs).count);
  }
}

TEST_CASE("induced H1 comparison") {
  auto circle = boundary_cell(2, 2);
  auto idrep = h1_induced_comparison(circle.cs, circle.cs, identity_map(circle.cs));
  CHECK(idrep.isomorphism());

  // inclusion of the circle into the filled square kills H1
  auto square = standard_cube(2, 2);
  CubicalMap inc;
  inc.level.resize(3);
  for (int k = 0; k <= 2; ++k) {
    inc.level[k].resize(circle.cs.counts[k]);
    for (std::uint32_t x = 0; x < circle.cs.counts[k]; ++x)
      inc.level[k][x] = square.cube_of(circle.cubes[k][x].table, k);
  }
  REQUIRE(is_natural(circle.cs, square.cs, inc));
  auto rep = h1_induced_comparison(circle.cs, square.cs, inc);
  CHECK(!rep.abstract_equal);
  CHECK(!rep.isomorphism());
}
