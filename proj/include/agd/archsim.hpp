#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "agd/bms.hpp"

namespace agd {

enum class Arch { Systolic, Koetter, ParallelBms, InverseFree, Serial, SerialInverseFree };
const char* arch_name(Arch a);
Arch parse_arch(const std::string& s);  // throws std::invalid_argument

// Stream layout shared by all three simulated machines. A sequence carries A
// interleaved lanes; element j = A*k + p is group k of lane p.
//   vf groups: [v_N .. v_m | f_0 .. f_N]          (m+2 groups)
//   wg groups: [w_N .. w_m | g_0 .. g_N | spare]   (m+3 groups)
// Multiplying by Z leaves every element at its stream position, so the only
// per-period rewrites are the deleted head group of vf and the w_m -> g_0
// boundary of wg.
struct RegisterFile {
  std::vector<std::vector<Elem>> vf;  // per sequence
  std::vector<std::vector<Elem>> wg;
  std::vector<Elem> exch;             // exchange chain (serial types)
  std::vector<Elem> supp_v, supp_w;   // supplementary chains (serial inverse-free)
  std::vector<Elem> disc, head, dinv; // per-lane latches
  std::vector<bool> preserve;         // condition (P) per lane
};

struct Switches {
  bool combine = false;   // A: vf element is updated (not the deleted head group)
  bool preserve = false;  // B: wg keeps its own element
  bool update = false;    // U: wg loads the vf element
  bool exchange = false;  // exchange switch takes the delayed value
  bool latch = false;     // discrepancy/head registers latch this clock
  bool zero = false;      // zero-setting of the stale w_m element
  std::string str() const;
};

// Register-extracted state at the start of period N (N = 0 .. m+1).
struct BoundaryState {
  int N = 0;
  std::vector<int> s1, c1;
  std::vector<ZPoly> f, v;  // per block
  std::vector<ZPoly> g, w;  // per slot
};

struct ArchTrace {
  Arch arch = Arch::InverseFree;
  int period = 0;
  long long total_clocks = 0;
  std::vector<BoundaryState> boundaries;
  std::vector<std::string> mismatches;  // empty when every boundary equals the reference
  int mult_budget = 0;
  int max_mults_per_clock = 0;
  long long inverter_uses = 0;
  long long update_branches = 0;  // non-(P) branches with d != 0
  int vf_regs = 0, wg_regs = 0, exch_regs = 0, supp_regs = 0;
  LocatorOutput basis;  // read from the final boundary
  bool ok() const { return mismatches.empty(); }
};

struct SimOptions {
  std::ostream* csv = nullptr;  // per-clock register dump
  bool compare = true;          // check boundaries against the reference BMS
};

ArchTrace sim_inverse_free(const Code& code, const SyndromeTable& synd, const SimOptions& opt = {});
ArchTrace sim_serial(const Code& code, const SyndromeTable& synd, const SimOptions& opt = {});
ArchTrace sim_serial_inverse_free(const Code& code, const SyndromeTable& synd, const SimOptions& opt = {});
ArchTrace simulate(Arch arch, const Code& code, const SyndromeTable& synd, const SimOptions& opt = {});

// Compares register-extracted boundaries with a reference run; returns one
// message per differing field.
std::vector<std::string> compare_boundary(const BoundaryState& b, const BmsState& ref, const Curve& C, int m);
std::string dump_boundary(const BoundaryState& b);

struct ResourceEstimate {
  Arch arch = Arch::InverseFree;
  // Leading-order closed forms; the systolic inverter count am/2 may be fractional.
  double multipliers = 0;
  double inverters = 0;
  double registers = 0;
  double clocks = 0;
  long long measured_clocks = -1;  // from simulation, -1 when not simulated
};

ResourceEstimate resources(Arch arch, int a, int m);

}  // namespace agd
