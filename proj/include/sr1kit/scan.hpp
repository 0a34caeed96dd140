#pragma once

#include "sr1kit/integers.hpp"

#include <string>
#include <vector>

namespace sr1kit {

struct ScanOptions {
  long entry_bound = 9;
  Int clean_bound = 100;    // conic fallback bound inside is_clean
  Int exchange_bound = 6;   // witness search bound
  int jobs = 0;             // 0 = default_jobs()
};

// Aggregated counters for one a11-block or for a whole scan. The "nonneg"
// mirror restricts to matrices with every entry >= 0, and the "le6" mirror
// to max |entry| <= 6; both are interpretation variants for the reported
// density figures.
struct ScanCounts {
  unsigned long total = 0;
  unsigned long sr1 = 0;  // det in {-1,0,1}, units included
  unsigned long units = 0;
  unsigned long det_zero = 0;
  unsigned long clean = 0;
  unsigned long not_clean = 0;
  unsigned long unknown_clean = 0;
  unsigned long exchange_found = 0;
  unsigned long exchange_not_found = 0;
  unsigned long not_clean_le6 = 0;
  unsigned long nonneg_total = 0;
  unsigned long nonneg_sr1 = 0;
  unsigned long nonneg_units = 0;
  unsigned long nonneg_det_zero = 0;
  unsigned long nonneg_not_clean = 0;
  unsigned long nonneg_not_clean_le6 = 0;

  ScanCounts& operator+=(const ScanCounts& o);
};

struct ScanChunk {
  long a11 = 0;
  ScanCounts counts;
  std::vector<std::string> not_clean;           // matrix literals, scan order
  std::vector<std::string> unknown_clean;
  std::vector<std::string> exchange_not_found;
};

struct ScanSummary {
  ScanOptions options;
  ScanCounts counts;
  std::vector<std::string> not_clean;
  std::vector<std::string> unknown_clean;
  std::vector<std::string> exchange_not_found;
  double elapsed_seconds = 0.0;  // never serialized into machine output
};

// One a11-block of the grid, deterministic in isolation.
ScanChunk scan_block(long a11, const ScanOptions& options);

// Full scan, parallel over blocks, deterministic aggregate.
ScanSummary density_scan(const ScanOptions& options);

// Chunked scan writing one JSON record per block to `path`; an existing
// partial file with a matching header is resumed rather than recomputed.
ScanSummary run_chunked_scan(const ScanOptions& options, const std::string& path);

}  // namespace sr1kit
