#pragma once

#include <iosfwd>
#include <vector>

#include "strangeroots/checked.hpp"

namespace strangeroots {

// All chain predecessors of <i+1, v>: which values u make <i, u> step to v?
// At most two candidates exist; the extra one appears exactly when i divides
// v-1. Returns them in increasing order (possibly empty for values no live
// chain can reach).
std::vector<Int> inverse_step(Int i, Int v);

// The backward chain from the terminal pair <r,r>:
//   x_r = r,   x_i = x_{i+1} - 1 + floor((x_{i+1} - 1) / i).
// x_1 is the largest seed with strange root r, and the divisibility hits
// (i | x_{i+1} - 1 for 2 <= i <= r-2) flag roots with extra preimages.
struct XSequence {
  Int root = 0;
  std::vector<Int> values;        // x_r, x_{r-1}, ..., x_1
  std::vector<Int> divisible_at;  // ascending i in {2..r-2} with i | x_{i+1}-1

  Int x1() const { return values.back(); }
  bool unique() const { return divisible_at.empty(); }
};

XSequence x_sequence(Int r);

// Does r have at most two preimages? Backward-chain divisibility test for
// r >= 5; direct enumeration settles r = 2, 3, 4.
bool is_unique_root(Int r);

struct RootRecord {
  Int root = 0;
  Int preimage_lo = 0;            // preimages are the whole interval [lo, hi]
  Int preimage_hi = 0;
  std::vector<Int> preimages;     // materialized when the count fits the cap

  Int count() const { return preimage_hi - preimage_lo + 1; }
  friend bool operator==(const RootRecord&, const RootRecord&) = default;
};

struct ScanOptions {
  int jobs = 0;                   // 0: $STRANGEROOTS_JOBS, else hardware threads
  Int preimage_cap = 64;          // larger preimage sets stay as [lo, hi] only
  Int checkpoint_every = 0;       // emit progress each this many roots; 0 = 4096
  std::ostream* progress = nullptr;  // checkpoint sink (the CLI passes stderr)
};

// Every r in [2, r_max] with at most two preimages, ascending. Work is
// partitioned across threads in fixed blocks and merged in order, so the
// result (and any output rendered from it) is identical for any job count.
std::vector<RootRecord> scan_unique_roots(Int r_max, const ScanOptions& options = {});

// Largest r the 64-bit backward chain provably handles (x_1 grows like
// r^2/pi); scan_unique_roots refuses anything beyond it.
inline constexpr Int kScanMaxRoot = Int{1} << 31;

}  // namespace strangeroots
