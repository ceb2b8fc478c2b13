#include "agd/bms.hpp"

#include <sstream>
#include <stdexcept>

namespace agd {

const char* mode_name(Mode m) { return m == Mode::InverseFree ? "inverse_free" : "division"; }

bool ZPoly::zero_outside(int lo, int hi) const {
  for (int h = 0; h < cap(); ++h)
    if ((h < lo || h > hi) && c[h] != kZero) return false;
  return true;
}

namespace {

// Z * p, dropping nothing: the capacity covers every reachable exponent.
ZPoly zshift(const ZPoly& p) {
  ZPoly r(p.cap());
  if (p.c.back() != kZero) throw std::logic_error("Z-series capacity exceeded");
  for (int h = 0; h + 1 < p.cap(); ++h) r.c[h + 1] = p.c[h];
  return r;
}

// alpha*p + beta*q
ZPoly lincomb(const Field& F, Elem alpha, const ZPoly& p, Elem beta, const ZPoly& q, OpCounter* ctr) {
  ZPoly r(p.cap());
  for (int h = 0; h < p.cap(); ++h) {
    Elem x = F.mul(alpha, p.c[h], ctr);
    Elem y = F.mul(beta, q.c[h], ctr);
    r.c[h] = F.add(x, y, ctr);
  }
  return r;
}

ZPoly scaled(const Field& F, Elem alpha, const ZPoly& p, OpCounter* ctr) {
  ZPoly r(p.cap());
  for (int h = 0; h < p.cap(); ++h) r.c[h] = F.mul(alpha, p.c[h], ctr);
  return r;
}

}  // namespace

bool checks(const Curve& C, const std::optional<Mono>& l, Mono s, int N) {
  if (!l || l->n1 < s.n1) return false;
  // Klein: a gap offset has no multiplier function, so nothing is constrained.
  return !C.klein() || C.is_nongap(N - C.o(s));
}

BmsState init_state(const Code& code, const SyndromeTable& synd, Mode mode, int horizon) {
  const Curve& C = code.curve();
  const int a = C.a();
  const int H = horizon < 0 ? code.m() : horizon;
  const int cap = 2 * H + 4;
  BmsState st;
  st.mode = mode;
  st.N = 0;
  st.horizon = H;
  st.s1.resize(a);
  st.c1.resize(a);
  st.M.assign(a, -1);
  st.T.assign(a, Mono{0, 0});
  st.d.assign(a, kZero);
  st.e.assign(a, kZero);
  for (int i = 0; i < a; ++i) {
    Mono s0 = C.class_start(i);
    st.s1[i] = s0.n1;
    st.c1[i] = s0.n1 - 1;
    // Block i starts from F = z^{s0}; its series carries u_{s0+k} at Z^{o(s0)+o(k)}.
    ZPoly v(cap);
    for (Mono k : C.basis(H - C.o(s0))) {
      Mono idx = s0 + k;
      if (!synd.has(idx)) throw std::invalid_argument("syndrome table does not cover the horizon");
      v.c[C.o(idx)] = synd.at(idx);
    }
    st.v.push_back(v);
    ZPoly one(cap);
    one.c[0] = kOne;
    st.f.push_back(one);
    st.w.push_back(one);
    st.g.emplace_back(cap);
  }
  return st;
}

void step(BmsState& st, const Curve& C, OpCounter* ctr, StepRecord* rec) {
  const Field& F = C.field();
  const int a = C.a();
  const int N = st.N;
  if (N > st.horizon) throw std::logic_error("step beyond syndrome horizon");

  std::vector<std::optional<Mono>> l(a);
  for (int i = 0; i < a; ++i) {
    l[i] = C.l_of(i, N);
    st.d[i] = checks(C, l[i], Mono{st.s1[i], i}, N) ? st.v[i].at(N) : kZero;
  }
  for (int j = 0; j < a; ++j) st.e[j] = st.w[j].at(N);

  if (rec) {
    rec->N = N;
    rec->s1 = st.s1;
    rec->c1 = st.c1;
    rec->d = st.d;
    rec->e = st.e;
    rec->f = st.f;
    rec->g = st.g;
    rec->v = st.v;
    rec->w = st.w;
    rec->updated.assign(a, false);
  }

  BmsState nx = st;
  for (int i = 0; i < a; ++i) {
    const int j = C.ibar(i, N);
    const Elem d = st.d[i];
    const bool P = d == kZero || st.s1[i] >= l[i]->n1 - st.c1[j];
    const Elem ef = st.mode == Mode::InverseFree ? st.e[j] : kOne;
    nx.f[i] = lincomb(F, ef, st.f[i], d, st.g[j], ctr);
    nx.v[i] = lincomb(F, ef, st.v[i], d, st.w[j], ctr);
    nx.v[i].c[N] = kZero;  // mod Z^N
    if (P) {
      nx.g[j] = zshift(st.g[j]);
      nx.w[j] = zshift(st.w[j]);
    } else {
      nx.s1[i] = l[i]->n1 - st.c1[j];
      nx.c1[j] = l[i]->n1 - st.s1[i];
      if (st.mode == Mode::InverseFree) {
        nx.g[j] = zshift(st.f[i]);
        nx.w[j] = zshift(st.v[i]);
      } else {
        Elem dinv = F.inv(d, ctr);
        nx.g[j] = scaled(F, dinv, zshift(st.f[i]), ctr);
        nx.w[j] = scaled(F, dinv, zshift(st.v[i]), ctr);
      }
      nx.M[j] = N;
      nx.T[j] = Mono{st.s1[i], i};
      if (rec) rec->updated[i] = true;
    }
  }
  nx.N = N + 1;
  st = std::move(nx);
}

BmsState run(const Code& code, const SyndromeTable& synd, Mode mode, int N_max, OpCounter* ctr,
             std::vector<StepRecord>* trace) {
  BmsState st = init_state(code, synd, mode, N_max);
  while (st.N <= N_max) {
    if (trace) {
      trace->emplace_back();
      step(st, code.curve(), ctr, &trace->back());
    } else {
      step(st, code.curve(), ctr);
    }
  }
  return st;
}

BiPoly locator_at(const BmsState& st, const Curve& C, int i) {
  const Mono s{st.s1[i], i};
  const int os = C.o(s);
  BiPoly P;
  for (Mono n : C.phi(0, C.a(), os)) {
    if (C.excluded().count(n)) continue;
    Elem x = st.f[i].at(os - C.o(n));
    if (x != kZero) P[n] = x;
  }
  return P;
}

BiPoly auxiliary_at(const BmsState& st, const Curve& C, int slot) {
  BiPoly P;
  if (st.M[slot] < 0) return P;
  const Mono t = st.T[slot];
  const int ot = C.o(t);
  const int off = st.N - st.M[slot];
  for (Mono n : C.phi(0, C.a(), ot)) {
    if (C.excluded().count(n)) continue;
    Elem x = st.g[slot].at(ot - C.o(n) + off);
    if (x != kZero) P[n] = x;
  }
  return P;
}

LocatorOutput extract_locators(const BmsState& st, const Curve& C) {
  const int a = C.a();
  LocatorOutput out;
  out.N = st.N;
  out.s_final = st.s1;
  out.c_final = st.c1;
  const int last = st.N > 0 ? st.N - 1 : 0;
  out.G.resize(a);
  out.head_e.resize(a);
  out.dual.resize(a);
  for (int i = 0; i < a; ++i) {
    out.F.push_back(locator_at(st, C, i));
    out.lead_F.push_back(st.f[i].at(0));
    const int slot = C.ibar(i, last);
    out.G[i] = auxiliary_at(st, C, slot);
    // An untouched w is Z^N with head 1.
    Elem e = st.w[slot].at(st.N);
    out.head_e[i] = e;
    out.dual[i] = C.ibar(i, last);  // label whose slot is i
  }
  return out;
}

std::vector<Mono> delta_set(const std::vector<int>& s1, const Curve& C) {
  std::vector<Mono> out;
  for (int i = 0; i < C.a(); ++i)
    for (int n1 = C.class_start(i).n1; n1 < s1[i]; ++n1) out.push_back({n1, i});
  return out;
}

int delta_size(const BmsState& st, const Curve& C) {
  return static_cast<int>(delta_set(st.s1, C).size());
}

std::optional<Mono> syndrome_index(const Curve& C, Mono n, Mono s, Mono l) {
  if (!C.klein()) return n + (l - s);
  // y^2 and y are not functions in the basis, so a class-n2 monomial is read
  // as z^{s0} x^{n1 - s0_1} and x-part times z^{l-s} is re-expressed in the basis
  // by pole order.
  const Mono s0 = C.class_start(n.n2);
  const int p = C.o(n) - C.o(s0) + C.o(l) - C.o(s);
  for (Mono k : C.basis(p))
    if (C.o(k) == p) return s0 + k;
  return std::nullopt;  // gap: the series carries no syndrome at this order
}

Elem discrepancy_direct(const Curve& C, const BiPoly& Fp, Mono s, const SyndromeTable& synd, int N) {
  auto l = C.l_of(s.n2, N);
  if (!checks(C, l, s, N)) return kZero;
  const Field& F = C.field();
  Elem r = kZero;
  for (auto [n, x] : Fp)
    if (auto idx = syndrome_index(C, n, s, *l)) r = F.add(r, F.mul(x, synd.at(*idx)));
  return r;
}

namespace {
void put_series(std::ostringstream& os, const char* tag, const ZPoly& p) {
  os << ' ' << tag << ':';
  for (int h = 0; h < p.cap(); ++h)
    if (p.c[h] != kZero) os << ' ' << h << '=' << p.c[h];
}
}  // namespace

std::string dump_record(const StepRecord& r) {
  std::ostringstream os;
  for (size_t i = 0; i < r.s1.size(); ++i) {
    os << "N=" << r.N << " i=" << i << " s1=" << r.s1[i] << " c1=" << r.c1[i] << " d=" << r.d[i]
       << " e=" << r.e[i];
    put_series(os, "f", r.f[i]);
    put_series(os, "g", r.g[i]);
    put_series(os, "v", r.v[i]);
    put_series(os, "w", r.w[i]);
    os << '\n';
  }
  return os.str();
}

}  // namespace agd
