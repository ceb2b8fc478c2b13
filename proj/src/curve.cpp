#include "agd/curve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace agd {

void add_term(BiPoly& P, Mono n, Elem c, const Field& F) {
  if (c == kZero) return;
  auto it = P.find(n);
  if (it == P.end()) {
    P.emplace(n, c);
    return;
  }
  it->second = F.add(it->second, c);
  if (it->second == kZero) P.erase(it);
}

Curve::Curve(CurveSpec spec, std::shared_ptr<const Field> field)
    : spec_(std::move(spec)), field_(std::move(field)) {
  const int a = spec_.a, b = spec_.b;
  if (a < 1 || b < 1 || std::gcd(a, b) != 1)
    throw std::invalid_argument("curve needs coprime a, b >= 1");
  if (spec_.klein) {
    if (a != 3 || b != 2 || spec_.genus != 3)
      throw std::invalid_argument("Klein quartic requires (a,b,g)=(3,2,3)");
    excluded_ = {{0, 1}, {0, 2}};
    eq_ = {{{3, 0}, kOne}, {{1, 3}, kOne}, {{0, 1}, kOne}};
    lead_ = {1, 3};
  } else {
    if (spec_.e == kZero) throw std::invalid_argument("coefficient e must be nonzero");
    if (spec_.genus != (a - 1) * (b - 1) / 2)
      throw std::invalid_argument("genus does not match (a-1)(b-1)/2");
    eq_[{0, a}] = kOne;
    add_term(eq_, {b, 0}, spec_.e, *field_);
    for (auto [n, c] : spec_.chi) {
      if (n.n2 >= a || o(n) >= a * b)
        throw std::invalid_argument("lower term exceeds the curve's leading pole order");
      if (!field_->valid(c)) throw std::invalid_argument("chi coefficient outside field");
      add_term(eq_, n, c, *field_);
    }
    lead_ = {0, a};
  }
  binv_ = 0;
  for (int k = 0; k < a; ++k)
    if ((b * k) % a == 1 % a) {
      binv_ = k;
      break;
    }
  enumerate_points();
}

bool Curve::regular(Mono n) const {
  if (n.n1 < 0 || n.n2 < 0) return false;
  return !klein() || 2 * n.n1 >= n.n2;
}

bool Curve::in_basis(Mono n) const {
  return n.n1 >= 0 && n.n2 >= 0 && n.n2 < a() && !excluded_.count(n);
}

Mono Curve::class_start(int i) const {
  Mono n{0, i};
  while (!in_basis(n)) ++n.n1;
  return n;
}

std::vector<Mono> Curve::phi(int i, int A, int Ap) const {
  std::vector<Mono> out;
  for (int n2 = i; n2 < i + A; ++n2)
    for (int n1 = 0; o({n1, n2}) <= Ap; ++n1) out.push_back({n1, n2});
  std::sort(out.begin(), out.end(), [&](Mono u, Mono v) {
    return o(u) != o(v) ? o(u) < o(v) : u.n2 < v.n2;
  });
  return out;
}

std::vector<Mono> Curve::basis(int Ap) const {
  auto all = phi(0, a(), Ap);
  std::vector<Mono> out;
  for (Mono n : all)
    if (in_basis(n)) out.push_back(n);
  return out;
}

bool Curve::is_nongap(int p) const {
  if (p < 0) return false;
  for (int n2 = 0; n2 < a(); ++n2) {
    int r = p - n2 * b();
    if (r >= 0 && r % a() == 0 && in_basis({r / a(), n2})) return true;
  }
  return false;
}

std::optional<Mono> Curve::l_of(int i, int N) const {
  for (int n2 = i; n2 < i + a(); ++n2) {
    int r = N - n2 * b();
    if (r >= 0 && r % a() == 0) return Mono{r / a(), n2};
  }
  return std::nullopt;
}

int Curve::ibar(int i, int N) const {
  int r = (binv_ * N - i) % a();
  return r < 0 ? r + a() : r;
}

Elem Curve::eval_equation(Elem x, Elem y) const {
  return eval(eq_, Point{false, x, y});
}

void Curve::enumerate_points() {
  const Field& F = *field_;
  std::vector<Elem> els{kZero};
  for (int k = 0; k < F.order(); ++k) els.push_back(k);
  for (Elem x : els)
    for (Elem y : els)
      if (eval_equation(x, y) == kZero) points_.push_back({false, x, y});
  if (klein()) points_.push_back({true, kZero, kZero});
}

Elem Curve::eval_mono(Mono n, const Point& P) const {
  if (P.special) {
    if (!regular(n)) throw std::domain_error("monomial has a pole at the special point");
    return 2 * n.n1 == n.n2 ? kOne : kZero;
  }
  const Field& F = *field_;
  return F.mul(F.pow(P.x, n.n1), F.pow(P.y, n.n2));
}

Elem Curve::eval(const BiPoly& P, const Point& pt) const {
  const Field& F = *field_;
  Elem r = kZero;
  for (auto [n, c] : P) r = F.add(r, F.mul(c, eval_mono(n, pt)));
  return r;
}

BiPoly Curve::reduce(const BiPoly& raw) const {
  const Field& F = *field_;
  const Elem lead_inv = F.inv(eq_.at(lead_));
  BiPoly cur = raw;
  for (;;) {
    // Rewrite the reducible monomial of highest pole order first; the rule
    // preserves pole order so this terminates.
    auto best = cur.end();
    for (auto it = cur.begin(); it != cur.end(); ++it) {
      Mono n = it->first;
      if (n.n2 >= a() && n.n1 >= lead_.n1 && (best == cur.end() || o(n) > o(best->first)))
        best = it;
    }
    if (best == cur.end()) break;
    Mono n = best->first;
    Elem c = F.mul(best->second, lead_inv);
    cur.erase(best);
    for (auto [k, ck] : eq_) {
      if (k == lead_) continue;
      add_term(cur, n - lead_ + k, F.mul(c, ck), F);
    }
  }
  for (auto& [n, c] : cur)
    if (n.n2 >= a()) throw std::domain_error("irreducible monomial outside the coordinate ring basis");
  return cur;
}

BiPoly Curve::add(const BiPoly& u, const BiPoly& v) const {
  BiPoly r = u;
  for (auto [n, c] : v) add_term(r, n, c, *field_);
  return r;
}

BiPoly Curve::scale(const BiPoly& u, Elem c) const {
  BiPoly r;
  if (c == kZero) return r;
  for (auto [n, x] : u) r[n] = field_->mul(x, c);
  return r;
}

BiPoly Curve::mul(const BiPoly& u, const BiPoly& v) const {
  BiPoly raw;
  for (auto [n, x] : u)
    for (auto [k, y] : v) add_term(raw, n + k, field_->mul(x, y), *field_);
  return reduce(raw);
}

BiPoly Curve::dx(const BiPoly& F) {
  BiPoly r;
  for (auto [n, c] : F)
    if (n.n1 % 2 == 1) r[{n.n1 - 1, n.n2}] = c;
  return r;
}

BiPoly Curve::dy(const BiPoly& F) {
  BiPoly r;
  for (auto [n, c] : F)
    if (n.n2 % 2 == 1) r[{n.n1, n.n2 - 1}] = c;
  return r;
}

Derivative Curve::formal_derivative(const BiPoly& F) const {
  // y' = D_x / D_y; char 2 makes the sign irrelevant.
  BiPoly Dx = dx(eq_), Dy = dy(eq_);
  Derivative d;
  if (Dy.size() == 1 && Dy.begin()->first == Mono{0, 0}) {
    Elem cinv = field_->inv(Dy.begin()->second);
    d.num = add(dx(F), scale(mul(dy(F), Dx), cinv));
    d.den = {{{0, 0}, kOne}};
  } else {
    d.num = add(mul(dx(F), Dy), mul(dy(F), Dx));
    d.den = reduce(Dy);
  }
  return d;
}

Elem Curve::eval_derivative(const Derivative& d, const Point& P, OpCounter* ctr) const {
  Elem den = eval(d.den, P);
  if (den == kZero) throw std::domain_error("derivative denominator vanishes at point");
  Elem num = eval(d.num, P);
  if (d.den.size() == 1 && d.den.begin()->first == Mono{0, 0}) return num;
  return field_->mul(num, field_->inv(den, ctr), ctr);
}

int Curve::degree_order(const BiPoly& F) const {
  int best = -1;
  for (auto& [n, c] : F) best = std::max(best, o(n));
  return best;
}

std::optional<Mono> Curve::leading(const BiPoly& F) const {
  std::optional<Mono> best;
  for (auto& [n, c] : F)
    if (!best || o(n) > o(*best)) best = n;
  return best;
}

CurveSpec elliptic_spec() {
  // y^2 + y = x^3 + x
  return {"elliptic", 2, 3, kOne, {{{0, 1}, kOne}, {{1, 0}, kOne}}, 1, false};
}

CurveSpec klein_spec() { return {"klein", 3, 2, kOne, {}, 3, true}; }

CurveSpec hermitian_spec() {
  // y^4 + y = x^5
  return {"hermitian", 4, 5, kOne, {{{0, 1}, kOne}}, 6, false};
}

}  // namespace agd
