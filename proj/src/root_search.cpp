#include "strangeroots/root_search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

#include "strangeroots/alist.hpp"

namespace strangeroots {

namespace {

// Backward chain with early exit: 0 as soon as a divisibility hit rules the
// root out, else x_1. The per-root cost of the whole scan lives here, so the
// loop stays lean: one division yields both quotient and remainder.
Int probe_unique(Int r) {
  Int x = r;
  for (Int i = r - 1; i >= 1; --i) {
    const Int xm = x - 1;
    const Int q = xm / i;
    if (i >= 2 && i <= r - 2 && xm - q * i == 0) return 0;
    x = checked::add(xm, q);
  }
  return x;
}

// r <= 4: enumerate seeds until the root passes r (roots are monotone).
std::vector<Int> small_root_preimages(Int r) {
  std::vector<Int> pre;
  for (Int n = 1;; ++n) {
    const Int s = strange_root(n);
    if (s == r) pre.push_back(n);
    if (s > r) break;
  }
  return pre;
}

int resolve_jobs(int requested) {
  int jobs = requested;
  if (jobs <= 0) {
    if (const char* env = std::getenv("STRANGEROOTS_JOBS")) {
      char* end = nullptr;
      const long v = std::strtol(env, &end, 10);
      if (end != env && *end == '\0' && v >= 1 && v <= 512) jobs = static_cast<int>(v);
    }
  }
  if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
  return std::clamp(jobs, 1, 512);
}

}  // namespace

std::vector<Int> inverse_step(Int i, Int v) {
  if (i < 1) throw std::invalid_argument("inverse_step: index must be >= 1");
  if (v < 2) throw std::invalid_argument("inverse_step: value must be >= 2");
  const Int q = (v - 1) / i;
  std::vector<Int> out;
  if ((v - 1) % i == 0) {
    const Int u = checked::add(v - 2, q);
    if (u > i && alist_step(i, u) == v) out.push_back(u);
  }
  const Int u = checked::add(v - 1, q);
  if (u > i && alist_step(i, u) == v) out.push_back(u);
  return out;
}

XSequence x_sequence(Int r) {
  if (r < 2) throw std::invalid_argument("x_sequence: root must be >= 2");
  XSequence xs;
  xs.root = r;
  xs.values.reserve(static_cast<std::size_t>(r));
  Int x = r;
  xs.values.push_back(x);
  for (Int i = r - 1; i >= 1; --i) {
    const Int xm = x - 1;
    if (i >= 2 && i <= r - 2 && xm % i == 0) xs.divisible_at.push_back(i);
    x = checked::add(xm, xm / i);
    xs.values.push_back(x);
  }
  std::reverse(xs.divisible_at.begin(), xs.divisible_at.end());
  return xs;
}

bool is_unique_root(Int r) {
  if (r < 2) throw std::invalid_argument("is_unique_root: root must be >= 2");
  if (r <= 4) return static_cast<Int>(small_root_preimages(r).size()) <= 2;
  return probe_unique(r) != 0;
}

std::vector<RootRecord> scan_unique_roots(Int r_max, const ScanOptions& options) {
  if (r_max < 2) throw std::invalid_argument("scan_unique_roots: r_max must be >= 2");
  if (r_max > kScanMaxRoot)
    throw std::invalid_argument("scan_unique_roots: r_max " + std::to_string(r_max) +
                                " exceeds the 64-bit-safe bound " + std::to_string(kScanMaxRoot));

  const auto start = std::chrono::steady_clock::now();
  const Int block = 1024;
  const Int first = 2;
  const Int nblocks = (r_max - first) / block + 1;
  const Int interval = options.checkpoint_every > 0 ? options.checkpoint_every : 4096;

  std::vector<std::vector<RootRecord>> slots(static_cast<std::size_t>(nblocks));
  std::vector<char> done(static_cast<std::size_t>(nblocks), 0);
  std::atomic<Int> next_block{0};
  std::atomic<bool> failed{false};
  std::mutex mu;  // guards frontier bookkeeping, the failure slot, the progress stream
  Int frontier = 0;
  Int frontier_found = 0;
  Int next_checkpoint = interval;
  std::exception_ptr first_error;

  auto block_finished = [&](Int block_index) {
    std::lock_guard<std::mutex> lock(mu);
    done[static_cast<std::size_t>(block_index)] = 1;
    while (frontier < nblocks && done[static_cast<std::size_t>(frontier)]) {
      frontier_found += static_cast<Int>(slots[static_cast<std::size_t>(frontier)].size());
      ++frontier;
    }
    if (options.progress == nullptr) return;
    const Int reached = std::min(r_max, first + frontier * block - 1);
    if (frontier == nblocks || reached >= next_checkpoint) {
      while (next_checkpoint <= reached) next_checkpoint += interval;
      const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      char line[160];
      std::snprintf(line, sizeof line, "# scan r=%lld/%lld found=%lld elapsed=%.1fs\n",
                    static_cast<long long>(frontier == nblocks ? r_max : reached),
                    static_cast<long long>(r_max), static_cast<long long>(frontier_found), elapsed);
      *options.progress << line << std::flush;
    }
  };

  auto worker = [&]() {
    for (;;) {
      const Int b = next_block.fetch_add(1);
      if (b >= nblocks || failed.load(std::memory_order_relaxed)) break;
      const Int lo = first + b * block;
      const Int hi = std::min(r_max, lo + block - 1);
      std::vector<RootRecord>& found = slots[static_cast<std::size_t>(b)];
      Int r_cur = lo;
      try {
        for (Int r = lo; r <= hi; ++r) {
          r_cur = r;
          if (r <= 4) {
            const std::vector<Int> pre = small_root_preimages(r);
            if (static_cast<Int>(pre.size()) <= 2)
              found.push_back({r, pre.front(), pre.back(), pre});
            continue;
          }
          const Int x1 = probe_unique(r);
          if (x1 != 0) found.push_back({r, x1 - 1, x1, {x1 - 1, x1}});
        }
      } catch (const std::overflow_error& e) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failed.exchange(true))
          first_error = std::make_exception_ptr(
              std::overflow_error("scan_unique_roots: overflow at r=" + std::to_string(r_cur) + ": " + e.what()));
        break;
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failed.exchange(true)) first_error = std::current_exception();
        break;
      }
      block_finished(b);
    }
  };

  const int jobs = static_cast<int>(std::min<Int>(resolve_jobs(options.jobs), nblocks));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker);
    for (auto& th : threads) th.join();
  }
  if (failed.load()) std::rethrow_exception(first_error);

  std::vector<RootRecord> out;
  for (auto& slot : slots)
    for (auto& rec : slot) out.push_back(std::move(rec));
  for (auto& rec : out)
    if (rec.count() > options.preimage_cap) rec.preimages.clear();
  if (options.progress != nullptr) {
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char line[160];
    std::snprintf(line, sizeof line, "# scan done r_max=%lld roots=%lld jobs=%d elapsed=%.1fs\n",
                  static_cast<long long>(r_max), static_cast<long long>(out.size()), jobs, elapsed);
    *options.progress << line << std::flush;
  }
  return out;
}

}  // namespace strangeroots
