#pragma once

// Exhaustive census of extension classes: enumerate the kernels of
// codimension r in the wedge square, dedup by change-of-basis orbit, and
// record fan size, maximal pair count, and the unramified quotient
// dimension per orbit, one JSON line each. Output is deterministic, so a
// finished file is byte-reproducible and an interrupted one resumes by
// verifying the recorded prefix and appending the rest.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "liftfan/extension.hpp"

namespace liftfan {

inline constexpr const char* kToolVersion = "liftfan 0.1.0";

// Largest kernel count a single scan will enumerate.
inline constexpr std::uint64_t kScanKernelCap = 200000;

struct ScanRecord {
  unsigned l = 3;
  int n = 2;
  int r = 0;
  std::vector<std::vector<int>> kernel;  // canonical representative basis
  int fan_size = 0;
  int delta_pair_count = 0;
  int quotient_dim = 0;
  std::string dedup;  // "gl-orbit" (n <= 4) or "perm-min" (n in {5, 6})
  std::string tool;   // version stamp

  std::string to_line() const;  // one canonical JSON line with newline
  static ScanRecord parse_line(const std::string& line);
  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

struct ScanSummary {
  int orbits_total = 0;    // records in the file after the run
  int orbits_written = 0;  // appended by this invocation
  bool partial_dedup = false;
};

// Appends records for every orbit not already present. With resume the
// existing file must be a prefix of this scan's deterministic output
// (a trailing half-written line is discarded); without it the output file
// must not already contain data. log, when given, receives warnings.
ScanSummary run_scan(Modulus l, int n, int r,
                     const std::filesystem::path& out, bool resume,
                     std::ostream* log = nullptr);

// All complete records of a results file, in file order.
std::vector<ScanRecord> read_scan_records(const std::filesystem::path& path);

}  // namespace liftfan
