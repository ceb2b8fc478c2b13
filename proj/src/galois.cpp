#include "agd/galois.hpp"

#include <stdexcept>
#include <string>

namespace agd {

Field::Field(FieldSpec spec) : spec_(spec) {
  if (spec.w < 2 || spec.w > 16)
    throw std::invalid_argument("field degree must lie in [2,16]");
  q_ = 1 << spec.w;
  if ((spec.prim_poly >> spec.w) != 1u)
    throw std::invalid_argument("primitive polynomial must have degree w");
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, kZero);
  unsigned x = 1;
  for (int k = 0; k < q_ - 1; ++k) {
    if (log_[x] != kZero)
      throw std::invalid_argument("polynomial " + std::to_string(spec.prim_poly) +
                                  " is not primitive");
    exp_[k] = x;
    log_[x] = k;
    x <<= 1;
    if (x & static_cast<unsigned>(q_)) x ^= spec.prim_poly;
  }
  if (x != 1) throw std::invalid_argument("polynomial is not primitive");
}

Elem Field::add(Elem a, Elem b, OpCounter* ctr) const {
  if (ctr) ++ctr->adds;
  return log_[to_vec(a) ^ to_vec(b)];
}

Elem Field::mul(Elem a, Elem b, OpCounter* ctr) const {
  if (ctr) ++ctr->muls;
  if (a < 0 || b < 0) return kZero;
  int s = a + b;
  if (s >= order()) s -= order();
  return s;
}

std::pair<Elem, int> Field::inv_chain(Elem a, OpCounter* ctr) const {
  if (a < 0) throw std::domain_error("inversion of zero");
  // q-2 = 0b11..10: (w-2) rounds of square-then-multiply, one final square.
  int used = 0;
  Elem x = a;
  for (int r = 0; r < w() - 2; ++r) {
    x = mul(x, x, ctr);
    x = mul(x, a, ctr);
    used += 2;
  }
  x = mul(x, x, ctr);
  ++used;
  if (ctr) {
    ++ctr->invs;
    ctr->inv_muls += used;
  }
  return {x, used};
}

Elem Field::pow(Elem a, long long k) const {
  if (k == 0) return kOne;
  if (a < 0) return kZero;
  long long r = (static_cast<long long>(a) * k) % order();
  if (r < 0) r += order();
  return static_cast<Elem>(r);
}

unsigned clmul_mod(unsigned a, unsigned b, const FieldSpec& spec) {
  unsigned r = 0;
  const unsigned top = 1u << spec.w;
  while (b) {
    if (b & 1u) r ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= spec.prim_poly;
  }
  return r;
}

}  // namespace agd
