#pragma once

#include <string>
#include <vector>

#include "agd/bms.hpp"

namespace agd {

enum class DecodeStatus { Success, NotGenericDetected, Failure };
const char* status_name(DecodeStatus s);

struct DecodeResult {
  DecodeStatus status = DecodeStatus::Failure;
  std::vector<int> error_locs;
  std::vector<Elem> error_vals;
  Word corrected;
  LocatorOutput basis;
  std::string reason;
  // "formula" when the closed-form evaluator was accepted, "syndrome_solve"
  // when its values failed the parity re-check and the fallback was used.
  std::string value_method;
  OpCounter bms_ops;   // BMS phase only
  OpCounter eval_ops;  // Chien search and error evaluation
};

// Points where every F^(i) vanishes.
std::vector<int> chien_search(const LocatorOutput& basis, const Code& code, OpCounter* ctr = nullptr);

// Error values at the located points. When `monic` is set the basis heads are
// all 1 and the two normalising divisions are skipped. A non-affine point gets
// u_(0,0) minus the affine values. Throws std::domain_error when the sum
// vanishes.
std::vector<Elem> error_values(const std::vector<int>& E, const LocatorOutput& basis, const Code& code,
                               const SyndromeTable& synd, bool monic, OpCounter* ctr = nullptr);

// Error values as the solution of u_l = sum_j e_j z^l(P_j) over every known
// syndrome. Empty when the system is singular or inconsistent.
std::vector<Elem> solve_error_values(const std::vector<int>& E, const Code& code, const SyndromeTable& synd,
                                     OpCounter* ctr = nullptr);

struct DecodeOptions {
  Mode mode = Mode::InverseFree;
  std::vector<StepRecord>* trace = nullptr;
};

DecodeResult decode(const Code& code, const Word& received, const DecodeOptions& opt = {});

}  // namespace agd
