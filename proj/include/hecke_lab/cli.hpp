#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hecke_lab/root_datum.hpp"
#include "hecke_lab/serialize.hpp"

namespace hecke_lab::cli {

inline constexpr const char* kToolName = "hecke_lab";
inline constexpr const char* kToolVersion = "0.1.0";

/// One datum to analyse, as read from a case file:
///   {"type": "C", "rank": 2, "decoration": [2,1,1], "lattice": "coweight", "p": 3}
/// "lattice" may also be "coroot" or a list of basis rows in
/// fundamental-coweight coordinates. The decoration is per class (S_1, S_2,
/// ...) or per node; empty means all ones.
struct CaseSpec {
  char type = 'A';
  int rank = 1;
  std::vector<int> decoration;
  LatticeChoice lattice;
  std::optional<std::int64_t> p;
  Json echo;  // normalized copy written back into reports
};

/// Accepts a bare case or {"case": {...}, "expect": {...}}. Throws
/// InvalidInput on malformed fields; the datum itself is built lazily.
CaseSpec parse_case(const Json& j);
DatumPtr build_case(const CaseSpec& spec);

struct RunOptions {
  std::optional<std::int64_t> p;  // overrides the case files
  bool exhaustive = false;
  std::uint64_t seed = 20240601;
  int threads = 1;
};

Json cmd_build(const CaseSpec& spec);
Json cmd_characters(const CaseSpec& spec, const RunOptions& options);
Json cmd_classify(const CaseSpec& spec, const RunOptions& options);

struct VerifyOutcome {
  Json report;
  int exit_code = 0;  // 0 all pass, 1 mismatch, 3 unexpected internal error
};
/// Suite: {"cases": [{"name": ..., "case": {...}, "expect": {"verdict": ..., "r": ..., "error": ...}}]}
/// or a bare array of such entries. Cases run in parallel; results keep suite order.
VerifyOutcome cmd_verify(const Json& suite, const RunOptions& options);

/// The built-in suite covering every supported type.
const std::string& default_suite_text();

/// Threads from HECKE_LAB_THREADS, else the hardware concurrency.
int default_threads();

/// Full command line without the program name. Writes the report to `out`
/// (or to --json <file>), diagnostics and timing to `err`, and returns the
/// exit code: 0 success, 1 verification mismatch, 2 invalid input,
/// 3 internal invariant breach.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hecke_lab::cli
