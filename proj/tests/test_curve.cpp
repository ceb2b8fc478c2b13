#include "agd/curve.hpp"

#include <memory>
#include <stdexcept>

#include "doctest.h"

using namespace agd;

namespace {

std::shared_ptr<const Curve> make(CurveSpec cs, FieldSpec fs) {
  return std::make_shared<Curve>(cs, std::make_shared<Field>(fs));
}

// Affine solutions of an equation evaluated in polynomial-basis arithmetic,
// independent of the curve module.
template <class Eq>
int count_affine(const FieldSpec& fs, Eq eq) {
  const unsigned q = 1u << fs.w;
  auto m = [&](unsigned u, unsigned v) { return clmul_mod(u, v, fs); };
  int n = 0;
  for (unsigned x = 0; x < q; ++x)
    for (unsigned y = 0; y < q; ++y) n += eq(x, y, m) == 0;
  return n;
}

}  // namespace

TEST_CASE("point counts") {
  auto E = make(elliptic_spec(), {4, 0b10011});
  auto K = make(klein_spec(), {3, 0b1011});
  auto H = make(hermitian_spec(), {4, 0b10011});
  CHECK(E->points().size() == 24);
  CHECK(K->points().size() == 23);
  CHECK(H->points().size() == 64);
  auto m2 = [](auto m, unsigned u) { return m(u, u); };
  CHECK(count_affine({4, 0b10011}, [&](unsigned x, unsigned y, auto m) {
          return m2(m, y) ^ y ^ m(m2(m, x), x) ^ x;
        }) == 24);
  CHECK(count_affine({3, 0b1011}, [&](unsigned x, unsigned y, auto m) {
          return m(m2(m, x), x) ^ m(x, m(m2(m, y), y)) ^ y;
        }) == 22);
  CHECK(count_affine({4, 0b10011}, [&](unsigned x, unsigned y, auto m) {
          return m2(m, m2(m, y)) ^ y ^ m(m2(m, m2(m, x)), x);
        }) == 64);
  CHECK(K->points().back().special);
  for (auto* C : {E.get(), K.get(), H.get()})
    for (const Point& P : C->points())
      if (!P.special) CHECK(C->eval_equation(P.x, P.y) == kZero);
}

TEST_CASE("pole orders, gaps and genus") {
  auto E = make(elliptic_spec(), {4, 0b10011});
  auto K = make(klein_spec(), {3, 0b1011});
  auto H = make(hermitian_spec(), {4, 0b10011});
  // g gaps below 2g.
  for (auto* C : {E.get(), K.get(), H.get()}) {
    int gaps = 0;
    for (int p = 0; p < 2 * C->genus(); ++p) gaps += !C->is_nongap(p);
    CHECK(gaps == C->genus());
    CHECK(C->count_nongaps(4 * C->genus() + 5) == 4 * C->genus() + 6 - C->genus());
  }
  CHECK(!K->is_nongap(1));
  CHECK(!K->is_nongap(2));
  CHECK(!K->is_nongap(4));
  CHECK(K->is_nongap(3));
  CHECK(K->class_start(0) == Mono{0, 0});
  CHECK(K->class_start(1) == Mono{1, 1});
  CHECK(K->class_start(2) == Mono{1, 2});
  CHECK(E->binv() == 1);
  CHECK(K->binv() == 2);
  CHECK(H->binv() == 1);
}

TEST_CASE("l_of and ibar are consistent") {
  auto K = make(klein_spec(), {3, 0b1011});
  auto H = make(hermitian_spec(), {4, 0b10011});
  for (auto* C : {K.get(), H.get()})
    for (int N = 0; N < 30; ++N)
      for (int i = 0; i < C->a(); ++i) {
        auto l = C->l_of(i, N);
        const int j = C->ibar(i, N);
        CHECK(C->ibar(j, N) == i);
        if (l) {
          CHECK(C->o(*l) == N);
          CHECK(l->n2 - i == j);
          CHECK(C->l_of(j, N) == l);
        }
      }
}

TEST_CASE("reduction preserves values on the curve") {
  auto H = make(hermitian_spec(), {4, 0b10011});
  BiPoly raw{{{2, 5}, 3}, {{0, 4}, 1}, {{1, 6}, 7}};
  BiPoly red = H->reduce(raw);
  for (auto& [n, c] : red) CHECK(n.n2 < 4);
  for (const Point& P : H->points()) CHECK(H->eval(raw, P) == H->eval(red, P));
}

TEST_CASE("formal derivative matches implicit differentiation") {
  auto E = make(elliptic_spec(), {4, 0b10011});
  // y' = x^2 + 1 on y^2 + y = x^3 + x.
  Derivative d = E->formal_derivative({{{0, 1}, kOne}});
  CHECK(d.num == BiPoly{{{2, 0}, kOne}, {{0, 0}, kOne}});
  auto K = make(klein_spec(), {3, 0b1011});
  // (xy)' = y + x y' with y' = (x^2 + y^3) / (x y^2 + 1).
  Derivative dk = K->formal_derivative({{{1, 1}, kOne}});
  int checked = 0;
  for (const Point& P : K->points()) {
    if (P.special) continue;
    const Field& F = K->field();
    Elem den = F.add(F.mul(P.x, F.mul(P.y, P.y)), kOne);
    if (den == kZero) continue;
    Elem dy = F.mul(F.add(F.mul(P.x, P.x), F.pow(P.y, 3)), F.inv(den));
    CHECK(K->eval_derivative(dk, P) == F.add(P.y, F.mul(P.x, dy)));
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("special Klein point evaluation") {
  auto K = make(klein_spec(), {3, 0b1011});
  const Point& P = K->points().back();
  CHECK(K->eval_mono({0, 0}, P) == kOne);
  CHECK(K->eval_mono({1, 2}, P) == kOne);
  CHECK(K->eval_mono({1, 1}, P) == kZero);
  CHECK_THROWS_AS(K->eval_mono({0, 1}, P), std::domain_error);
}

TEST_CASE("invalid curves are rejected") {
  auto F = std::make_shared<Field>(FieldSpec{4, 0b10011});
  CHECK_THROWS_AS(Curve({"x", 2, 4, kOne, {}, 1, false}, F), std::invalid_argument);
  CHECK_THROWS_AS(Curve({"x", 2, 3, kZero, {}, 1, false}, F), std::invalid_argument);
  CHECK_THROWS_AS(Curve({"x", 2, 3, kOne, {}, 2, false}, F), std::invalid_argument);
  CHECK_THROWS_AS(Curve({"x", 2, 3, kOne, {{{0, 2}, kOne}}, 1, false}, F), std::invalid_argument);
  CHECK_THROWS_AS(Curve({"k", 3, 2, kOne, {}, 2, true}, F), std::invalid_argument);
}
