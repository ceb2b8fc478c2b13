#include "agd/oracle.hpp"

#include "agd/bms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace agd {

int m_t(const Curve& C, int t) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  int m = 0;
  while (C.count_nongaps(m) < t) ++m;
  return m;
}

namespace {

// Row reduction in place; returns pivot columns.
std::vector<int> eliminate(const Field& F, std::vector<std::vector<Elem>>& A) {
  std::vector<int> piv;
  if (A.empty()) return piv;
  const size_t cols = A[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < A.size(); ++col) {
    size_t p = row;
    while (p < A.size() && A[p][col] == kZero) ++p;
    if (p == A.size()) continue;
    std::swap(A[p], A[row]);
    Elem inv = F.inv(A[row][col]);
    for (auto& x : A[row]) x = F.mul(x, inv);
    for (size_t r = 0; r < A.size(); ++r) {
      if (r == row || A[r][col] == kZero) continue;
      Elem f = A[r][col];
      for (size_t j = 0; j < cols; ++j) A[r][j] = F.add(A[r][j], F.mul(f, A[row][j]));
    }
    piv.push_back(static_cast<int>(col));
    ++row;
  }
  return piv;
}

}  // namespace

int rank(const Field& F, std::vector<std::vector<Elem>> A) {
  return static_cast<int>(eliminate(F, A).size());
}

bool solve(const Field& F, std::vector<std::vector<Elem>> A, std::vector<Elem> b, std::vector<Elem>& x) {
  const size_t n = A.empty() ? 0 : A[0].size();
  for (size_t r = 0; r < A.size(); ++r) A[r].push_back(b[r]);
  auto piv = eliminate(F, A);
  x.assign(n, kZero);
  for (size_t r = 0; r < piv.size(); ++r) {
    if (piv[r] == static_cast<int>(n)) return false;  // pivot in the right-hand side
    x[piv[r]] = A[r][n];
  }
  return true;
}

std::vector<Mono> footprint(const Code& code, const std::vector<int>& locs) {
  const Curve& C = code.curve();
  const Field& F = C.field();
  const int t = static_cast<int>(locs.size());
  std::vector<Mono> out;
  std::vector<std::vector<Elem>> rows;
  // Basis monomials far enough out that t independent ones are always found.
  for (Mono n : C.basis(2 * t + 4 * C.genus() + 2 * C.a())) {
    if (static_cast<int>(out.size()) == t) break;
    std::vector<Elem> r;
    for (int j : locs) r.push_back(C.eval_mono(n, code.points()[j]));
    rows.push_back(r);
    if (rank(F, rows) == static_cast<int>(rows.size())) {
      out.push_back(n);
    } else {
      rows.pop_back();
    }
  }
  return out;
}

GenericityReport is_generic(const Code& code, const std::vector<int>& locs) {
  const Curve& C = code.curve();
  const int t = static_cast<int>(locs.size());
  GenericityReport rep;
  if (t == 0) {
    rep.is_generic = rep.det_nonzero = true;
    return rep;
  }
  rep.m_t = m_t(C, t);
  auto first = C.basis(rep.m_t);
  std::vector<std::vector<Elem>> A;
  for (Mono l : first) {
    std::vector<Elem> r;
    for (int j : locs) r.push_back(C.eval_mono(l, code.points()[j]));
    A.push_back(r);
  }
  rep.det_nonzero = rank(C.field(), A) == t;
  rep.is_generic = rep.det_nonzero;
  rep.delta_set = footprint(code, locs);
  return rep;
}

std::vector<BiPoly> groebner_la(const Code& code, const std::vector<int>& locs) {
  const Curve& C = code.curve();
  const Field& F = C.field();
  auto foot = footprint(code, locs);
  std::vector<BiPoly> out;
  for (int i = 0; i < C.a(); ++i) {
    Mono s = C.class_start(i);
    while (std::find(foot.begin(), foot.end(), s) != foot.end()) ++s.n1;
    // z^s = sum_l c_l z^l on E, over footprint monomials l.
    std::vector<std::vector<Elem>> A(locs.size(), std::vector<Elem>(foot.size()));
    std::vector<Elem> b(locs.size());
    for (size_t r = 0; r < locs.size(); ++r) {
      const Point& P = code.points()[locs[r]];
      for (size_t k = 0; k < foot.size(); ++k) A[r][k] = C.eval_mono(foot[k], P);
      b[r] = C.eval_mono(s, P);
    }
    std::vector<Elem> x;
    if (!solve(F, A, b, x)) throw std::logic_error("footprint does not span the evaluations");
    BiPoly f{{s, kOne}};
    for (size_t k = 0; k < foot.size(); ++k) add_term(f, foot[k], x[k], F);
    out.push_back(f);
  }
  return out;
}

bool ideal_membership(const BiPoly& Fp, const Code& code, const std::vector<int>& locs) {
  for (int j : locs)
    if (code.curve().eval(Fp, code.points()[j]) != kZero) return false;
  return true;
}

int minimal_s1(const Curve& C, const SyndromeTable& synd, int i, int N) {
  const Field& F = C.field();
  for (int z = C.class_start(i).n1;; ++z) {
    const Mono s{z, i};
    if (C.o(s) > N + C.a() * C.b() + C.a()) return z;  // no constraint can reach this degree
    std::vector<Mono> lower;
    for (Mono n : C.basis(C.o(s) - 1)) lower.push_back(n);
    std::vector<std::vector<Elem>> A;
    std::vector<Elem> b;
    for (int Np = 0; Np < N; ++Np) {
      auto l = C.l_of(i, Np);
      if (!checks(C, l, s, Np)) continue;
      auto u = [&](Mono n) {
        auto idx = syndrome_index(C, n, s, *l);
        return idx ? synd.at(*idx) : kZero;
      };
      std::vector<Elem> row;
      for (Mono n : lower) row.push_back(u(n));
      A.push_back(row);
      b.push_back(u(s));  // char 2: moving the leading term across keeps its sign
    }
    std::vector<Elem> x;
    if (A.empty() || solve(F, A, b, x)) return z;
  }
}

ErrorPattern random_pattern(const Code& code, int t, std::mt19937_64& rng) {
  std::vector<int> idx(code.n());
  std::iota(idx.begin(), idx.end(), 0);
  ErrorPattern e;
  for (int k = 0; k < t; ++k) {
    std::uniform_int_distribution<int> pick(k, code.n() - 1);
    std::swap(idx[k], idx[pick(rng)]);
    e.locs.push_back(idx[k]);
  }
  std::uniform_int_distribution<int> val(0, code.field().order() - 1);
  for (int k = 0; k < t; ++k) e.vals.push_back(val(rng));
  return e;
}

RatioReport generic_ratio(const Code& code, int t, int trials, std::uint64_t seed) {
  RatioReport rep;
  rep.trials = trials;
  rep.seed = seed;
  rep.expected = static_cast<double>(code.field().order()) / code.field().q();
  std::mt19937_64 rng(seed);
  for (int k = 0; k < trials; ++k) {
    ErrorPattern e = random_pattern(code, t, rng);
    if (is_generic(code, e.locs).is_generic) ++rep.hits;
  }
  rep.estimate = trials ? static_cast<double>(rep.hits) / trials : 0.0;
  return rep;
}

}  // namespace agd
