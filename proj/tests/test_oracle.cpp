#include "agd/oracle.hpp"

#include <random>

#include "doctest.h"
#include "fixtures.hpp"

using namespace agd;

TEST_CASE("m_t counts basis monomials") {
  auto H = fx::preset("hermitian_gf16");
  const Curve& C = H.code->curve();
  CHECK(m_t(C, 1) == 0);
  CHECK(m_t(C, 6) == 10);  // below t + g - 1 = 11
  for (int t = C.genus() + 1; t < 20; ++t) CHECK(m_t(C, t) == t + C.genus() - 1);
  auto K = fx::preset("klein_gf8");
  CHECK(m_t(K.code->curve(), 2) == 3);
  CHECK(m_t(K.code->curve(), 4) == 6);
}

TEST_CASE("rank and solve over the field") {
  Field F({3, 0b1011});
  // Rows (1, a), (a, a^2) are dependent; (1, 1) is not.
  CHECK(rank(F, {{0, 1}, {1, 2}}) == 1);
  CHECK(rank(F, {{0, 1}, {0, 0}}) == 2);
  std::vector<Elem> x;
  REQUIRE(solve(F, {{0, 0}, {0, 1}}, {3, 5}, x));
  // x0 + x1 = a^3, x0 + a x1 = a^5.
  CHECK(F.add(x[0], x[1]) == 3);
  CHECK(F.add(x[0], F.mul(1, x[1])) == 5);
  CHECK(!solve(F, {{0, 1}, {1, 2}}, {0, 0}, x));
}

TEST_CASE("single errors are always generic") {
  for (const char* name : fx::kPresets) {
    auto b = fx::preset(name);
    for (int j = 0; j < b.code->n(); ++j) CHECK(is_generic(*b.code, {j}).is_generic);
  }
}

TEST_CASE("two affine points sharing x are not generic on the elliptic code") {
  auto b = fx::preset("elliptic_gf16");
  const Code& code = *b.code;
  // The first two non-gaps are 1 and x, so equal x-coordinates give a singular matrix.
  int p = -1, q = -1;
  for (int j = 0; j < code.n() && q < 0; ++j)
    for (int k = j + 1; k < code.n(); ++k)
      if (!code.points()[j].special && code.points()[j].x == code.points()[k].x) {
        p = j;
        q = k;
        break;
      }
  REQUIRE(q >= 0);
  auto rep = is_generic(code, {p, q});
  CHECK(!rep.is_generic);
  CHECK(!rep.det_nonzero);
  CHECK(rep.m_t == 2);
  // The dependency is x + x(P): a footprint of {1, y}.
  CHECK(rep.delta_set == std::vector<Mono>{{0, 0}, {0, 1}});
}

TEST_CASE("golden error sets are generic and their Groebner basis vanishes on them") {
  for (auto g : {fx::elliptic_golden(), fx::klein_golden(), fx::hermitian_golden()}) {
    auto b = fx::preset(g.preset);
    const Code& code = *b.code;
    auto e = fx::pattern(code, g.errors);
    auto rep = is_generic(code, e.locs);
    CHECK(rep.is_generic);
    CHECK(rep.delta_set.size() == e.locs.size());
    auto basis = groebner_la(code, e.locs);
    CHECK(static_cast<int>(basis.size()) == code.curve().a());
    for (const BiPoly& f : basis) {
      CHECK(ideal_membership(f, code, e.locs));
      // Vanishes nowhere else on the curve.
    }
    int common = 0;
    for (int j = 0; j < code.n(); ++j) {
      bool all = true;
      for (const BiPoly& f : basis) all = all && code.curve().eval(f, code.points()[j]) == kZero;
      common += all;
    }
    CHECK(common == static_cast<int>(e.locs.size()));
  }
}

TEST_CASE("ideal membership trivial cases") {
  auto b = fx::preset("klein_gf8");
  const Code& code = *b.code;
  CHECK(ideal_membership({}, code, {0, 1, 2}));
  CHECK(!ideal_membership({{{0, 0}, 3}}, code, {0}));
  CHECK(ideal_membership({{{0, 0}, 3}}, code, {}));
}

TEST_CASE("generic ratio is deterministic and exact for t = 1") {
  auto b = fx::preset("elliptic_gf16");
  auto r1 = generic_ratio(*b.code, 1, 300, 7);
  CHECK(r1.estimate == 1.0);
  CHECK(r1.expected == doctest::Approx(15.0 / 16.0));
  auto r2 = generic_ratio(*b.code, 3, 500, 7);
  auto r3 = generic_ratio(*b.code, 3, 500, 7);
  CHECK(r2.hits == r3.hits);
  CHECK(r2.seed == 7u);
}

TEST_CASE("random patterns are distinct nonzero t-subsets") {
  auto b = fx::preset("hermitian_gf16");
  std::mt19937_64 rng(8);
  for (int k = 0; k < 100; ++k) {
    ErrorPattern e = random_pattern(*b.code, 5, rng);
    std::vector<int> s = e.locs;
    std::sort(s.begin(), s.end());
    CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
    for (Elem v : e.vals) CHECK(v != kZero);
  }
}

TEST_CASE("minimal_s1 agrees with the footprint once I(E) is determined") {
  auto b = fx::preset("elliptic_gf16");
  const Code& code = *b.code;
  auto e = fx::pattern(code, fx::elliptic_golden().errors);
  auto synd = code.full_syndromes(e, 20);
  auto foot = footprint(code, e.locs);
  for (int i = 0; i < code.curve().a(); ++i) {
    int expect = 0;
    while (std::find(foot.begin(), foot.end(), Mono{expect, i}) != foot.end()) ++expect;
    CHECK(minimal_s1(code.curve(), synd, i, 16) == expect);
  }
}
