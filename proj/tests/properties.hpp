#pragma once

// Property checks shared by the unit tests and the acceptance binary. Each
// returns a violation count so callers can aggregate over many runs.

#include <algorithm>
#include <string>
#include <vector>

#include "agd/bms.hpp"
#include "agd/oracle.hpp"

namespace props {

using namespace agd;

struct Invariants {
  int steps = 0;
  int a = 0;    // F_N has a nonzero discrepancy below N
  int b = 0;    // leading monomial differs from s
  int c = 0;    // s1 chain out of order (relative to class starts)
  int d = 0;    // s1 not minimal
  int s_c = 0;  // s1 != c1 + 1
  int disc = 0;  // step's d differs from the direct discrepancy
  int total() const { return a + b + c + d + s_c + disc; }
};

// Steps BMS from 0 to N_max and checks every invariant after each step.
inline Invariants check_invariants(const Code& code, const SyndromeTable& synd, Mode mode, int N_max, bool minimality = true) {
  const Curve& C = code.curve();
  const int a = C.a();
  Invariants r;
  BmsState st = init_state(code, synd, mode, N_max);
  while (st.N <= N_max) {
    std::vector<Elem> direct(a);
    for (int i = 0; i < a; ++i)
      direct[i] = discrepancy_direct(C, locator_at(st, C, i), Mono{st.s1[i], i}, synd, st.N);
    step(st, C);
    ++r.steps;
    for (int i = 0; i < a; ++i) {
      r.disc += direct[i] != st.d[i];
      const Mono s{st.s1[i], i};
      const BiPoly F = locator_at(st, C, i);
      auto lead = C.leading(F);
      r.b += !lead || *lead != s;
      for (int Np = 0; Np < st.N; ++Np)
        if (discrepancy_direct(C, F, s, synd, Np) != kZero) {
          ++r.a;
          break;
        }
      r.s_c += st.s1[i] != st.c1[i] + 1;
      if (i > 0)
        r.c += st.s1[i] - C.class_start(i).n1 > st.s1[i - 1] - C.class_start(i - 1).n1;
      if (minimality) r.d += minimal_s1(C, synd, i, st.N) != st.s1[i];
    }
  }
  return r;
}

// Count of basis members that fail to vanish on E, plus one if the delta set
// size differs from |E|.
inline int ideal_violations(const Code& code, const BmsState& st, const std::vector<int>& locs) {
  const Curve& C = code.curve();
  int bad = 0;
  for (int i = 0; i < C.a(); ++i) bad += !ideal_membership(locator_at(st, C, i), code, locs);
  bad += delta_size(st, C) != static_cast<int>(locs.size());
  return bad;
}

struct ModeCompare {
  bool trajectories = true;  // (s1, c1) identical at every N
  bool vanish = true;        // both final bases vanish on E
  bool deltas = true;        // equal delta sets
  bool ok() const { return trajectories && vanish && deltas; }
};

inline ModeCompare compare_modes(const Code& code, const SyndromeTable& synd, const std::vector<int>& locs) {
  const Curve& C = code.curve();
  std::vector<StepRecord> ti, td;
  BmsState si = run(code, synd, Mode::InverseFree, code.m(), nullptr, &ti);
  BmsState sd = run(code, synd, Mode::Division, code.m(), nullptr, &td);
  ModeCompare r;
  for (size_t k = 0; k < ti.size(); ++k)
    r.trajectories &= ti[k].s1 == td[k].s1 && ti[k].c1 == td[k].c1;
  r.trajectories &= si.s1 == sd.s1 && si.c1 == sd.c1;
  for (const BmsState* st : {&si, &sd})
    for (int i = 0; i < C.a(); ++i) r.vanish &= ideal_membership(locator_at(*st, C, i), code, locs);
  r.deltas = delta_set(si.s1, C) == delta_set(sd.s1, C);
  return r;
}

// Syndrome horizon that determines I(E) for any pattern of weight t.
inline int ideal_horizon(const Curve& C, int t) { return 2 * t + 4 * C.genus() - 2 + C.a(); }

}  // namespace props
