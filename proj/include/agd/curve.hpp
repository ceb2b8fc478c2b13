#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "agd/galois.hpp"

namespace agd {

// Exponent pair of x^n1 y^n2.
struct Mono {
  int n1 = 0;
  int n2 = 0;
  friend auto operator<=>(const Mono&, const Mono&) = default;
};
inline Mono operator+(Mono u, Mono v) { return {u.n1 + v.n1, u.n2 + v.n2}; }
inline Mono operator-(Mono u, Mono v) { return {u.n1 - v.n1, u.n2 - v.n2}; }

// Sparse bivariate polynomial; zero coefficients are never stored.
using BiPoly = std::map<Mono, Elem>;

struct Point {
  bool special = false;  // Klein's P_(1:0:0)
  Elem x = kZero;
  Elem y = kZero;
  friend bool operator==(const Point&, const Point&) = default;
};

// y^a + e x^b + sum chi_n x^n1 y^n2 = 0 for C_a^b curves. The Klein quartic
// is x^3 + x y^3 + y = 0 with o(x)=3, o(y)=2 and y, y^2 dropped from the
// basis; its e/chi fields are ignored.
struct CurveSpec {
  std::string name;
  int a = 0;
  int b = 0;
  Elem e = kOne;
  std::vector<std::pair<Mono, Elem>> chi;
  int genus = 0;
  bool klein = false;
};

struct Derivative {
  BiPoly num;
  BiPoly den;  // {(0,0): 1} when D_y is constant
};

class Curve {
 public:
  Curve(CurveSpec spec, std::shared_ptr<const Field> field);

  const CurveSpec& spec() const { return spec_; }
  const Field& field() const { return *field_; }
  std::shared_ptr<const Field> field_ptr() const { return field_; }
  int a() const { return spec_.a; }
  int b() const { return spec_.b; }
  int genus() const { return spec_.genus; }
  bool klein() const { return spec_.klein; }
  int binv() const { return binv_; }
  const std::set<Mono>& excluded() const { return excluded_; }

  int o(Mono n) const { return n.n1 * a() + n.n2 * b(); }
  // Regular on every code point (only restrictive for Klein: 2 n1 >= n2).
  bool regular(Mono n) const;
  bool in_basis(Mono n) const;
  // First basis monomial with n2 = i.
  Mono class_start(int i) const;

  // { n : i <= n2 < i+A, o(n) <= Ap }, ordered by pole order then n2.
  std::vector<Mono> phi(int i, int A, int Ap) const;
  // Basis monomials of pole order <= Ap.
  std::vector<Mono> basis(int Ap) const;
  std::optional<Mono> l_of(int i, int N) const;
  int ibar(int i, int N) const;
  bool is_nongap(int p) const;  // some basis monomial has pole order p
  int count_nongaps(int m) const { return static_cast<int>(basis(m).size()); }

  const std::vector<Point>& points() const { return points_; }
  const BiPoly& equation() const { return eq_; }
  Elem eval_equation(Elem x, Elem y) const;

  Elem eval_mono(Mono n, const Point& P) const;
  Elem eval(const BiPoly& F, const Point& P) const;

  BiPoly reduce(const BiPoly& raw) const;
  BiPoly mul(const BiPoly& u, const BiPoly& v) const;
  BiPoly add(const BiPoly& u, const BiPoly& v) const;
  BiPoly scale(const BiPoly& u, Elem c) const;
  static BiPoly dx(const BiPoly& F);
  static BiPoly dy(const BiPoly& F);
  Derivative formal_derivative(const BiPoly& F) const;
  // Value of a derivative at an affine point; throws on a zero denominator.
  Elem eval_derivative(const Derivative& d, const Point& P, OpCounter* ctr = nullptr) const;

  int degree_order(const BiPoly& F) const;  // max pole order, -1 for F = 0
  std::optional<Mono> leading(const BiPoly& F) const;

 private:
  void enumerate_points();

  CurveSpec spec_;
  std::shared_ptr<const Field> field_;
  std::set<Mono> excluded_;
  int binv_ = 0;
  BiPoly eq_;
  Mono lead_;
  std::vector<Point> points_;
};

void add_term(BiPoly& P, Mono n, Elem c, const Field& F);

CurveSpec elliptic_spec();
CurveSpec klein_spec();
CurveSpec hermitian_spec();

}  // namespace agd
