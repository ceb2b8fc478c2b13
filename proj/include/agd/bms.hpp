#pragma once

#include <optional>
#include <string>
#include <vector>

#include "agd/agcode.hpp"

namespace agd {

enum class Mode { InverseFree, Division };
const char* mode_name(Mode m);

// Univariate series in the formal variable Z; dense, index = exponent.
struct ZPoly {
  std::vector<Elem> c;
  explicit ZPoly(int cap = 0, Elem fill = kZero) : c(cap, fill) {}
  Elem at(int h) const { return h >= 0 && h < static_cast<int>(c.size()) ? c[h] : kZero; }
  int cap() const { return static_cast<int>(c.size()); }
  bool zero_outside(int lo, int hi) const;  // all coefficients outside [lo,hi] are zero
  friend bool operator==(const ZPoly&, const ZPoly&) = default;
};

// Per-block quantities (s, f, v) are indexed by i; per-slot quantities
// (c, g, w, e, M, T) by the partner index that reads them.
struct BmsState {
  Mode mode = Mode::InverseFree;
  int N = 0;
  int horizon = 0;  // largest N the syndromes support
  std::vector<int> s1;
  std::vector<int> c1;
  std::vector<ZPoly> f, v;
  std::vector<ZPoly> g, w;
  std::vector<int> M;    // step of the last g replacement, -1 if none
  std::vector<Mono> T;   // degree of G at that replacement
  std::vector<Elem> d;   // discrepancies of the last step, per block
  std::vector<Elem> e;   // head coefficients w_{N,N}, per slot
};

struct StepRecord {
  int N;
  std::vector<int> s1, c1;
  std::vector<Elem> d, e;
  std::vector<bool> updated;  // non-(P) branch taken, per block
  std::vector<ZPoly> f, g, v, w;  // pre-step
};

struct LocatorOutput {
  std::vector<BiPoly> F;     // per block i
  std::vector<BiPoly> G;     // G[i]: auxiliary polynomial partnered with F^(i) at the last step
  std::vector<Elem> lead_F;  // F^(i)_s
  std::vector<Elem> head_e;  // e_{m+1} of G[i]
  std::vector<int> dual;     // G[dual[i]] pairs with F^(i) in the error-value formula
  std::vector<int> s_final, c_final;
  int N = 0;
};

BmsState init_state(const Code& code, const SyndromeTable& synd, Mode mode, int horizon = -1);
// One iteration of the loop at state.N; all blocks read the pre-step state.
void step(BmsState& st, const Curve& C, OpCounter* ctr = nullptr, StepRecord* rec = nullptr);
BmsState run(const Code& code, const SyndromeTable& synd, Mode mode, int N_max,
             OpCounter* ctr = nullptr, std::vector<StepRecord>* trace = nullptr);

// F_N^(i) read off f^(i); coefficient at n is f_{o(s)-o(n)}.
BiPoly locator_at(const BmsState& st, const Curve& C, int i);
BiPoly auxiliary_at(const BmsState& st, const Curve& C, int slot);
LocatorOutput extract_locators(const BmsState& st, const Curve& C);
int delta_size(const BmsState& st, const Curve& C);
std::vector<Mono> delta_set(const std::vector<int>& s1, const Curve& C);

// Discrepancy of F (degree s) at pole order N: sum_n F_n u_{n + l - s} with
// l the class-s2 monomial of pole order N; zero when l is absent or l1 < s1.
// Whether the discrepancy of a degree-s polynomial is examined at pole order N.
bool checks(const Curve& C, const std::optional<Mono>& l, Mono s, int N);
// Syndrome index paired with monomial n of F (degree s) at l; absent when the
// Klein series has a gap there.
std::optional<Mono> syndrome_index(const Curve& C, Mono n, Mono s, Mono l);
Elem discrepancy_direct(const Curve& C, const BiPoly& F, Mono s, const SyndromeTable& synd, int N);

std::string dump_record(const StepRecord& r);

}  // namespace agd
