#pragma once

#include <cstdint>

namespace nband {

/// Resource limits shared by the exhaustive routines. Every routine that can
/// blow up checks its own limit up front and throws ResourceError instead of
/// starting work it cannot finish.
struct Budget {
  /// Maximum number of cells in a materialized table (extend, brute-force
  /// candidate tables).
  std::uint64_t max_cells = std::uint64_t{1} << 28;
  /// canonical_form enumerates all m! relabelings; refuse above this m.
  unsigned max_canonical_size = 8;
  /// Candidate count for brute_force_bands (m^free_multisets).
  std::uint64_t max_band_candidates = std::uint64_t{1} << 24;
  /// Candidate count for brute_force_reductions (m^(m(m+1)/2) by default,
  /// m^(m*m) for the general oracle). 4^10 fits exactly.
  std::uint64_t max_reduction_candidates = std::uint64_t{1} << 20;
  /// Largest carrier accepted by enumerate_bands.
  unsigned max_enumerate_size = 6;
  /// Worker threads for partitioned scans; 0 means hardware concurrency.
  unsigned workers = 0;
};

}  // namespace nband
