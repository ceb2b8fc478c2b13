#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "agd/agcode.hpp"

namespace agd {

struct GenericityReport {
  bool is_generic = false;
  int m_t = 0;
  std::vector<Mono> delta_set;  // footprint of I(E), in pole order
  bool det_nonzero = false;
};

// Smallest m with exactly t basis monomials of pole order <= m.
int m_t(const Curve& C, int t);

// Rank of a matrix over GF(2^w), entries in log form.
int rank(const Field& F, std::vector<std::vector<Elem>> A);
// Solves A x = b; returns false when inconsistent. Free variables are set to 0.
bool solve(const Field& F, std::vector<std::vector<Elem>> A, std::vector<Elem> b, std::vector<Elem>& x);

GenericityReport is_generic(const Code& code, const std::vector<int>& locs);
// Footprint of I(E): basis monomials whose evaluation vectors on E are
// independent of all smaller ones.
std::vector<Mono> footprint(const Code& code, const std::vector<int>& locs);
// Reduced basis of I(E): per class i, z^{s(i)} plus footprint terms.
std::vector<BiPoly> groebner_la(const Code& code, const std::vector<int>& locs);
bool ideal_membership(const BiPoly& F, const Code& code, const std::vector<int>& locs);

// Smallest n1 such that some F with leading monomial (n1, i) has zero
// discrepancy at every pole order <= N-1.
int minimal_s1(const Curve& C, const SyndromeTable& synd, int i, int N);

struct RatioReport {
  int trials = 0;
  int hits = 0;
  double estimate = 0;
  double expected = 0;
  std::uint64_t seed = 0;
};
RatioReport generic_ratio(const Code& code, int t, int trials, std::uint64_t seed);

// Uniform t-subset of point indices with uniform nonzero values.
ErrorPattern random_pattern(const Code& code, int t, std::mt19937_64& rng);

}  // namespace agd
