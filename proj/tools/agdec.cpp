#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "agd/archsim.hpp"
#include "agd/codefile.hpp"
#include "agd/decoder.hpp"
#include "agd/oracle.hpp"

using namespace agd;

namespace {

// Exit codes shared by every subcommand.
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitNotGeneric = 2;
constexpr int kExitFailure = 3;

// A bare preset name resolves against the bundled preset directory.
std::string resolve_spec(const std::string& s) {
  namespace fs = std::filesystem;
  if (fs::exists(s)) return s;
  fs::path p = fs::path(AGD_PRESET_DIR) / (s + ".json");
  if (fs::exists(p)) return p.string();
  return s;
}

void header(const CodeBundle& b, const std::string& seed) {
  std::cout << "spec " << b.name << " hash " << b.hash << " seed " << seed << '\n';
}

std::string point_str(const Point& P) {
  if (P.special) return "(1:0:0)";
  return "(" + std::to_string(P.x) + "," + std::to_string(P.y) + ")";
}

std::string num(double x) {
  if (x == std::floor(x)) return std::to_string(static_cast<long long>(x));
  std::ostringstream os;
  os << x;
  return os.str();
}

struct DecodeArgs {
  std::string spec, received, mode = "inverse_free", dump;
};

int cmd_decode(const DecodeArgs& a) {
  CodeBundle b = load_code_spec(resolve_spec(a.spec));
  Word r = load_word(a.received, *b.code);
  DecodeOptions opt;
  if (a.mode == "division") opt.mode = Mode::Division;
  else if (a.mode != "inverse_free") throw ParseError("unknown mode " + a.mode);
  std::vector<StepRecord> trace;
  if (!a.dump.empty()) opt.trace = &trace;

  DecodeResult res = decode(*b.code, r, opt);
  header(b, "-");
  std::cout << "mode " << mode_name(opt.mode) << '\n'
            << "status " << status_name(res.status) << '\n';
  if (!res.reason.empty()) std::cout << "reason " << res.reason << '\n';
  std::cout << "bms_ops muls " << res.bms_ops.muls << " invs " << res.bms_ops.invs << '\n';
  std::cout << "errors " << res.error_vals.size() << '\n';
  for (size_t k = 0; k < res.error_vals.size(); ++k)
    std::cout << res.error_locs[k] << ' ' << res.error_vals[k] << "  # "
              << point_str(b.code->points()[res.error_locs[k]]) << '\n';
  std::cout << "corrected";
  for (Elem x : res.corrected) std::cout << ' ' << x;
  std::cout << '\n';

  if (!a.dump.empty()) {
    std::ofstream os(a.dump);
    if (!os) throw ParseError("cannot write " + a.dump);
    os << "# spec " << b.name << " hash " << b.hash << " mode " << mode_name(opt.mode) << '\n';
    for (const StepRecord& rec : trace) os << dump_record(rec);
  }
  switch (res.status) {
    case DecodeStatus::Success: return kExitOk;
    case DecodeStatus::NotGenericDetected: return kExitNotGeneric;
    case DecodeStatus::Failure: return kExitFailure;
  }
  return kExitFailure;
}

struct TraceArgs {
  std::string spec, received, arch, out, boundaries;
};

int cmd_trace_arch(const TraceArgs& a) {
  CodeBundle b = load_code_spec(resolve_spec(a.spec));
  Word r = load_word(a.received, *b.code);
  Arch arch;
  try {
    arch = parse_arch(a.arch);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (arch != Arch::InverseFree && arch != Arch::Serial && arch != Arch::SerialInverseFree)
    throw ParseError(std::string(arch_name(arch)) + " is estimated only, not simulated");

  std::ofstream csv(a.out);
  if (!csv) throw ParseError("cannot write " + a.out);
  csv << "# spec " << b.name << " hash " << b.hash << " arch " << arch_name(arch) << '\n'
      << "clock,block,reg_name,index,value_log,switch_states\n";
  SimOptions opt;
  opt.csv = &csv;
  ArchTrace tr = simulate(arch, *b.code, b.code->syndromes(r), opt);

  if (!a.boundaries.empty()) {
    std::ofstream os(a.boundaries);
    if (!os) throw ParseError("cannot write " + a.boundaries);
    os << "# spec " << b.name << " hash " << b.hash << " arch " << arch_name(arch) << '\n';
    for (const BoundaryState& bs : tr.boundaries) os << dump_boundary(bs);
  }

  header(b, "-");
  std::cout << "arch " << arch_name(arch) << '\n'
            << "period " << tr.period << '\n'
            << "total_clocks " << tr.total_clocks << '\n'
            << "boundaries " << tr.boundaries.size() << '\n'
            << "multipliers " << tr.mult_budget << " peak " << tr.max_mults_per_clock << '\n'
            << "inverter_uses " << tr.inverter_uses << " update_branches " << tr.update_branches << '\n'
            << "registers vf " << tr.vf_regs << " wg " << tr.wg_regs << " exch " << tr.exch_regs << " supp "
            << tr.supp_regs << '\n'
            << "mismatches " << tr.mismatches.size() << '\n';
  for (const std::string& m : tr.mismatches) std::cout << "  " << m << '\n';
  return tr.ok() ? kExitOk : kExitFailure;
}

struct StatsArgs {
  std::string spec;
  int t = 0, trials = 2000;
  std::uint64_t seed = 1;
};

int cmd_stats(const StatsArgs& a) {
  CodeBundle b = load_code_spec(resolve_spec(a.spec));
  int t = a.t > 0 ? a.t : b.t;
  if (t < 1) throw ParseError("--t is required when the spec has no code.t");
  if (t > b.code->n()) throw ParseError("t exceeds the code length");
  RatioReport rep = generic_ratio(*b.code, t, a.trials, a.seed);
  header(b, std::to_string(rep.seed));
  std::printf("t %d\ntrials %d\nhits %d\nestimate %.6f\nexpected %.6f\n", t, rep.trials, rep.hits,
              rep.estimate, rep.expected);
  return kExitOk;
}

struct BenchArgs {
  std::string spec;
  std::uint64_t seed = 1;
};

int cmd_bench(const BenchArgs& a) {
  CodeBundle b = load_code_spec(resolve_spec(a.spec));
  const Code& code = *b.code;
  const int a_ = code.curve().a();
  // Clock counts do not depend on the error values; any pattern drives the machines.
  std::mt19937_64 rng(a.seed);
  int t = std::max(1, b.t > 0 ? b.t : 1);
  Word r = inject_errors(code, code.zero_word(), random_pattern(code, t, rng));
  SyndromeTable synd = code.syndromes(r);

  header(b, std::to_string(a.seed));
  std::printf("a %d m %d\n", a_, code.m());
  std::printf("%-20s %12s %10s %10s %12s %14s %8s\n", "arch", "multipliers", "inverters", "registers",
              "clocks", "measured", "period");
  for (Arch arch : {Arch::Systolic, Arch::Koetter, Arch::ParallelBms, Arch::InverseFree, Arch::Serial,
                    Arch::SerialInverseFree}) {
    ResourceEstimate re = resources(arch, a_, code.m());
    std::string measured = "-", period = "-";
    if (arch == Arch::InverseFree || arch == Arch::Serial || arch == Arch::SerialInverseFree) {
      SimOptions opt;
      opt.compare = false;
      ArchTrace tr = simulate(arch, code, synd, opt);
      measured = std::to_string(tr.total_clocks);
      period = std::to_string(tr.period);
    }
    std::printf("%-20s %12s %10s %10s %12s %14s %8s\n", arch_name(arch), num(re.multipliers).c_str(),
                num(re.inverters).c_str(), num(re.registers).c_str(), num(re.clocks).c_str(),
                measured.c_str(), period.c_str());
  }
  return kExitOk;
}

struct GenArgs {
  std::string spec, out, received;
  int t = 0;
  std::uint64_t seed = 1;
};

int cmd_gen_errors(const GenArgs& a) {
  CodeBundle b = load_code_spec(resolve_spec(a.spec));
  const Code& code = *b.code;
  int t = a.t > 0 ? a.t : b.t;
  if (t < 1 || t > code.n()) throw ParseError("bad error weight");
  std::mt19937_64 rng(a.seed);
  ErrorPattern e = random_pattern(code, t, rng);
  {
    std::ofstream os(a.out);
    if (!os) throw ParseError("cannot write " + a.out);
    os << "# spec " << b.name << " hash " << b.hash << " seed " << a.seed << '\n';
    write_errors(os, e);
  }
  if (!a.received.empty()) {
    // A random codeword plus the pattern.
    std::uniform_int_distribution<int> sym(-1, code.field().order() - 1);
    std::vector<Elem> msg(code.k());
    for (Elem& x : msg) x = sym(rng);
    std::ofstream os(a.received);
    if (!os) throw ParseError("cannot write " + a.received);
    os << "# spec " << b.name << " hash " << b.hash << " seed " << a.seed << '\n';
    write_word(os, inject_errors(code, code.encode(msg), e));
  }
  header(b, std::to_string(a.seed));
  std::cout << "errors " << e.locs.size() << '\n';
  write_errors(std::cout, e);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decoder and architecture simulator for one-point algebraic-geometry codes"};
  app.require_subcommand(1);

  DecodeArgs da;
  auto* dec = app.add_subcommand("decode", "Decode a received word");
  dec->add_option("spec", da.spec, "Code-spec JSON file or preset name")->required();
  dec->add_option("received", da.received, "Received word file")->required();
  dec->add_option("--mode", da.mode, "BMS variant")->check(CLI::IsMember({"inverse_free", "division"}));
  dec->add_option("--dump-state", da.dump, "Write per-N BMS state dumps");

  TraceArgs ta;
  auto* tra = app.add_subcommand("trace-arch", "Clock-level simulation with a CSV register trace");
  tra->add_option("spec", ta.spec, "Code-spec JSON file or preset name")->required();
  tra->add_option("received", ta.received, "Received word file")->required();
  tra->add_option("--arch", ta.arch, "inverse_free, serial or serial_inverse_free")->required();
  tra->add_option("--out", ta.out, "CSV output path")->required();
  tra->add_option("--boundaries", ta.boundaries, "Write register-extracted states at each N");

  StatsArgs sa;
  auto* st = app.add_subcommand("stats-generic", "Estimate the fraction of generic error patterns");
  st->add_option("spec", sa.spec, "Code-spec JSON file or preset name")->required();
  st->add_option("--t", sa.t, "Error weight (default: code.t)");
  st->add_option("--trials", sa.trials, "Number of trials")->check(CLI::PositiveNumber);
  st->add_option("--seed", sa.seed, "PRNG seed");

  BenchArgs ba;
  auto* be = app.add_subcommand("bench", "Resource comparison table");
  be->add_option("spec", ba.spec, "Code-spec JSON file or preset name")->required();
  be->add_option("--seed", ba.seed, "Seed of the pattern driving the simulators");

  GenArgs ga;
  auto* ge = app.add_subcommand("gen-errors", "Write a random error file");
  ge->add_option("spec", ga.spec, "Code-spec JSON file or preset name")->required();
  ge->add_option("--t", ga.t, "Error weight (default: code.t)");
  ge->add_option("--seed", ga.seed, "PRNG seed");
  ge->add_option("--out", ga.out, "Error file path")->required();
  ge->add_option("--received", ga.received, "Also write a random codeword with these errors");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*dec) return cmd_decode(da);
    if (*tra) return cmd_trace_arch(ta);
    if (*st) return cmd_stats(sa);
    if (*be) return cmd_bench(ba);
    if (*ge) return cmd_gen_errors(ga);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitParse;
}
