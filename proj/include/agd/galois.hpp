#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace agd {

// Field elements are stored by discrete log with respect to the primitive
// element alpha; -1 stands for zero.
using Elem = int;
inline constexpr Elem kZero = -1;
inline constexpr Elem kOne = 0;

struct FieldSpec {
  int w = 0;
  unsigned prim_poly = 0;  // includes the x^w bit, e.g. 0b10011
};

struct OpCounter {
  std::uint64_t muls = 0;
  std::uint64_t invs = 0;
  std::uint64_t adds = 0;
  std::uint64_t inv_muls = 0;  // multiplications spent inside inversions
  void reset() { muls = invs = adds = inv_muls = 0; }
};

class Field {
 public:
  explicit Field(FieldSpec spec);

  const FieldSpec& spec() const { return spec_; }
  int w() const { return spec_.w; }
  int q() const { return q_; }
  int order() const { return q_ - 1; }

  Elem add(Elem a, Elem b, OpCounter* ctr = nullptr) const;
  Elem mul(Elem a, Elem b, OpCounter* ctr = nullptr) const;
  // a^(q-2) by the square-and-multiply chain; second is the number of
  // multiplications spent (always 2w-3).
  std::pair<Elem, int> inv_chain(Elem a, OpCounter* ctr = nullptr) const;
  Elem inv(Elem a, OpCounter* ctr = nullptr) const { return inv_chain(a, ctr).first; }
  Elem pow(Elem a, long long k) const;

  unsigned to_vec(Elem a) const { return a < 0 ? 0u : exp_[a]; }
  Elem from_vec(unsigned v) const { return log_.at(v); }
  bool valid(Elem a) const { return a >= -1 && a < order(); }

 private:
  FieldSpec spec_;
  int q_;
  std::vector<unsigned> exp_;
  std::vector<Elem> log_;
};

// Polynomial-basis multiplication over GF(2)[x]/(prim), independent of the
// log tables.
unsigned clmul_mod(unsigned a, unsigned b, const FieldSpec& spec);

}  // namespace agd
