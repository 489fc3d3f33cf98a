#include "strangeroots/verify.hpp"

#include <ostream>
#include <string>
#include <vector>

#include "strangeroots/alist.hpp"
#include "strangeroots/correspondence.hpp"
#include "strangeroots/fagan.hpp"
#include "strangeroots/root_search.hpp"
#include "strangeroots/tchoukaillon.hpp"

namespace strangeroots {

namespace {

struct SuiteResult {
  bool ok = true;
  std::string detail;
  std::vector<std::string> notes;
};

SuiteResult fail(std::string why) { return {false, std::move(why), {}}; }

Int bound(VerifyLevel level, Int quick, Int full) { return level == VerifyLevel::quick ? quick : full; }

std::string seq_str(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

// ---- frozen reference rows ----

const std::vector<std::vector<Int>> kChainValues = {
    {1}, {2, 2}, {3, 3, 3}, {4, 3, 3}, {5, 4, 4, 4}, {6, 4, 4, 4},
    {7, 5, 5, 5, 5}, {8, 5, 5, 5, 5}, {9, 6, 5, 5, 5}, {10, 6, 5, 5, 5},
    {11, 7, 6, 6, 6, 6}, {12, 7, 6, 6, 6, 6}, {13, 8, 7, 7, 7, 7, 7}, {14, 8, 7, 7, 7, 7, 7},
    {15, 9, 7, 7, 7, 7, 7}, {16, 9, 7, 7, 7, 7, 7}, {17, 10, 8, 7, 7, 7, 7}, {18, 10, 8, 7, 7, 7, 7},
    {19, 11, 9, 8, 8, 8, 8, 8}, {20, 11, 9, 8, 8, 8, 8, 8}};

const std::vector<Int> kRootRow = {1, 2, 3, 3, 4, 4, 5, 5, 5, 5, 6, 6, 7, 7, 7, 7, 7, 7, 8, 8};

const std::vector<std::vector<Int>> kBoards = {
    {}, {1}, {0, 2}, {1, 2}, {0, 1, 3}, {1, 1, 3}, {0, 0, 2, 4}, {1, 0, 2, 4},
    {0, 2, 2, 4}, {1, 2, 2, 4}, {0, 1, 1, 3, 5}, {1, 1, 1, 3, 5}, {0, 0, 0, 2, 4, 6}, {1, 0, 0, 2, 4, 6}};

const std::vector<std::vector<Int>> kMoveVectors = {
    {1}, {1, 1}, {2, 1}, {2, 1, 1}, {3, 1, 1}, {3, 1, 1, 1}, {4, 1, 1, 1}, {4, 2, 1, 1},
    {5, 2, 1, 1}, {5, 2, 1, 1, 1}, {6, 2, 1, 1, 1}, {6, 2, 1, 1, 1, 1}, {7, 2, 1, 1, 1, 1}};

const std::vector<Int> kTFirst14 = {1, 2, 4, 6, 10, 12, 18, 22, 30, 34, 42, 48, 58, 60};

// ---- suites ----

SuiteResult chain_goldens(VerifyLevel) {
  for (Int n = 1; n <= 20; ++n) {
    const AlistSequence seq = alist(n);
    const auto& want = kChainValues[static_cast<std::size_t>(n - 1)];
    if (seq.pairs.size() != want.size()) return fail("alist(" + std::to_string(n) + ") has the wrong length");
    for (std::size_t k = 0; k < want.size(); ++k) {
      if (seq.pairs[k].index != static_cast<Int>(k + 1) || seq.pairs[k].value != want[k])
        return fail("alist(" + std::to_string(n) + ") differs at index " + std::to_string(k + 1));
    }
    if (strange_root(n) != kRootRow[static_cast<std::size_t>(n - 1)])
      return fail("strange_root(" + std::to_string(n) + ") is off the reference row");
  }
  if (alist_step(1, 8) != 5 || alist_step(4, 5) != 5 || alist_step(2, 3) != 3)
    return fail("alist_step examples");
  if (w_sequence(8) != std::vector<Int>{4, 1, 1, 1} || w_sequence(2) != std::vector<Int>{1} ||
      w_sequence(11) != std::vector<Int>{5, 2, 1, 1, 1})
    return fail("w_sequence examples");
  return {true, "first 20 chains, root row, step and w examples", {}};
}

SuiteResult chain_laws(VerifyLevel level) {
  const Int N = bound(level, 20000, 1000000);
  Int prev_root = 0;
  for (Int n = 1; n <= N; ++n) {
    Int i = 1;
    Int y = n;
    while (y > i) {
      const Int p = checked::mul(i, checked::add(y, 1));
      const Int next = p / (i + 1) + 1;
      // the successor is the least value strictly past the ratio: sandwich check
      if (!(checked::mul(i + 1, next) > p && p >= checked::mul(i + 1, next - 1)))
        return fail("successor sandwich broken at n=" + std::to_string(n) + " i=" + std::to_string(i));
      if (next > y) return fail("values not weakly decreasing at n=" + std::to_string(n));
      if (next < i + 1) return fail("value fell below index+1 at n=" + std::to_string(n));
      y = next;
      ++i;
    }
    if (y != i) return fail("chain for n=" + std::to_string(n) + " terminated below its index");
    if (i < prev_root) return fail("strange root not monotone at n=" + std::to_string(n));
    prev_root = i;
  }
  return {true, "termination, sandwich, monotone roots for n <= " + std::to_string(N), {}};
}

SuiteResult w_recurrence(VerifyLevel level) {
  const Int N = bound(level, 5000, 100000);
  for (Int n = 2; n <= N; ++n) {
    const std::vector<Int> w = w_sequence(n);
    // independent reconstruction: w_i = ceil((n-1 - consumed) / (i+1))
    Int rem = n - 1;
    for (std::size_t k = 0; k < w.size(); ++k) {
      const Int expect = ceil_div(rem, static_cast<Int>(k) + 2);
      if (w[k] != expect)
        return fail("w_sequence(" + std::to_string(n) + ") disagrees with the ceiling recurrence at i=" +
                    std::to_string(k + 1));
      rem -= w[k];
    }
    if (rem != 0) return fail("w_sequence(" + std::to_string(n) + ") does not sum to n-1");
  }
  return {true, "ceiling recurrence and sums for n <= " + std::to_string(N), {}};
}

SuiteResult fagan_laws(VerifyLevel level) {
  const Int M = bound(level, 5000, 100000);
  for (Int m = 1; m <= M; ++m) {
    const FaganSequence fs = fagan_sequence(m);
    for (std::size_t k = 0; k < fs.pairs.size(); ++k) {
      const auto& p = fs.pairs[k];
      if ((p.index + p.value) % 2 != 0)
        return fail("fagan pair parity broken at m=" + std::to_string(m));
      if (k + 1 < fs.pairs.size()) {
        const auto& q = fs.pairs[k + 1];
        // strict dominance: the chosen value never lands on the boundary product
        if (checked::mul(q.index, q.value) == checked::mul(p.index, p.value))
          return fail("fagan boundary product equality at m=" + std::to_string(m));
        if (!(checked::mul(q.index, q.value) > checked::mul(p.index, p.value)))
          return fail("fagan product not increasing at m=" + std::to_string(m));
      }
    }
    if (cf(m) != strange_root(2 * m)) return fail("cf(m) != strange_root(2m) at m=" + std::to_string(m));
    // the doubling map carries the chain for 2m onto the fagan chain, pair by pair
    const AlistSequence a = alist(2 * m);
    if (a.pairs.size() != fs.pairs.size() + 1)
      return fail("chain lengths disagree at m=" + std::to_string(m));
    for (std::size_t k = 1; k < a.pairs.size(); ++k) {
      if (to_fagan(a.pairs[k]) != fs.pairs[k - 1])
        return fail("doubling map mismatch at m=" + std::to_string(m));
      if (from_fagan(fs.pairs[k - 1]) != a.pairs[k])
        return fail("doubling map does not invert at m=" + std::to_string(m));
    }
  }
  return {true, "parity, dominance, cf=root of 2m, pair maps for m <= " + std::to_string(M), {}};
}

SuiteResult board_goldens(VerifyLevel) {
  for (Int n = 0; n <= 13; ++n) {
    const Board want{std::vector<Int>(kBoards[static_cast<std::size_t>(n)])};
    if (tchouk(n) != want) return fail("tchouk(" + std::to_string(n) + ") is off the reference row");
    if (tchouk_recursive(n) != want) return fail("tchouk_recursive(" + std::to_string(n) + ") is off");
  }
  for (Int n = 1; n <= 13; ++n) {
    const auto& want = kMoveVectors[static_cast<std::size_t>(n - 1)];
    if (move_vector(n) != want) return fail("move_vector(" + std::to_string(n) + ") is off");
    if (move_vector_from_board(tchouk(n)) != want)
      return fail("move_vector_from_board(tchouk(" + std::to_string(n) + ")) is off");
    const auto trace = solve(tchouk(n), false);
    if (!trace || static_cast<Int>(trace->selections.size()) != n)
      return fail("solve(tchouk(" + std::to_string(n) + ")) did not win in n moves");
    std::vector<Int> counts(want.size(), 0);
    for (Int hole : trace->selections) ++counts[static_cast<std::size_t>(hole - 1)];
    if (counts != want) return fail("play counts for n=" + std::to_string(n) + " disagree");
  }
  SuiteResult r{true, "boards and move vectors for n <= 13, three ways", {}};
  r.notes.push_back(
      "movevec(12) = (6,2,1,1,1,1); a published table lists (6,2,2,1,1), which has five entries "
      "for the six-hole board (0,0,0,2,4,6) and contradicts direct play counting");
  return r;
}

SuiteResult board_laws(VerifyLevel level) {
  const Int N = bound(level, 5000, 100000);
  TchoukBuilder builder;
  for (Int n = 1; n <= N; ++n) {
    builder.advance();
    const Board direct = tchouk(n);
    if (direct.counts() != builder.raw())
      return fail("modular and recursive boards disagree at n=" + std::to_string(n));
    if (direct.total() != n) return fail("board stone count is not n at n=" + std::to_string(n));
    for (Int i = 1; i <= direct.length(); ++i)
      if (direct.stones(i) < 0 || direct.stones(i) > i)
        return fail("count out of range at n=" + std::to_string(n) + " hole " + std::to_string(i));
    if (direct.stones(direct.length()) != direct.length())
      return fail("last hole does not hold its index at n=" + std::to_string(n));
  }
  return {true, "modular == recursive, ranges, terminal hole for n <= " + std::to_string(N), {}};
}

SuiteResult play_laws(VerifyLevel level) {
  const Int N = bound(level, 1000, 10000);
  for (Int n = 1; n <= N; ++n) {
    const Board b = tchouk(n);
    const auto trace = solve(b, false);
    if (!trace) return fail("tchouk(" + std::to_string(n) + ") is not winnable by index play");
    if (static_cast<Int>(trace->selections.size()) != n)
      return fail("winning tchouk(" + std::to_string(n) + ") took the wrong number of moves");
    const std::vector<Int> mv = move_vector(n);
    std::vector<Int> counts(mv.size(), 0);
    for (Int hole : trace->selections) {
      if (hole < 1 || hole > static_cast<Int>(mv.size()))
        return fail("selection out of board range at n=" + std::to_string(n));
      ++counts[static_cast<std::size_t>(hole - 1)];
    }
    if (counts != mv) return fail("per-hole play counts differ from move_vector at n=" + std::to_string(n));
  }
  return {true, "winnability and play counts for n <= " + std::to_string(N), {}};
}

SuiteResult movevec_methods(VerifyLevel level) {
  const Int N = bound(level, 5000, 100000);
  for (Int n = 1; n <= N; ++n)
    if (move_vector(n) != move_vector_from_board(tchouk(n)))
      return fail("recurrence and board formula disagree at n=" + std::to_string(n));
  return {true, "recurrence == board formula for n <= " + std::to_string(N), {}};
}

SuiteResult t_goldens(VerifyLevel) {
  for (Int k = 1; k <= 14; ++k)
    if (t(k) != kTFirst14[static_cast<std::size_t>(k - 1)])
      return fail("t(" + std::to_string(k) + ") is off the reference row");
  if (t(100) != 3234 || t(300) != 28770 || t(2000) != 1273762) return fail("t spot values are off");
  constexpr double kPi = 3.14159265358979323846;
  const double ratio = static_cast<double>(t(2000)) * kPi / (2000.0 * 2000.0);
  if (!(ratio >= 0.99 && ratio <= 1.01))
    return fail("t(2000)*pi/2000^2 = " + std::to_string(ratio) + " is outside [0.99, 1.01]");
  return {true, "first 14 values, spot values, quadratic growth ratio", {}};
}

SuiteResult t_agreement(VerifyLevel level) {
  const Int K = bound(level, 100, 500);
  // one incremental sweep records every first appearance up to K
  std::vector<Int> first(static_cast<std::size_t>(K + 1), 0);
  Int seen = 0;
  TchoukBuilder builder;
  const Int cap = checked::add(checked::mul(K, K), checked::mul(11, K));
  while (seen < K) {
    if (builder.n() > cap) return fail("first-appearance sweep overran its bound");
    const Int filled = builder.advance();
    auto record = [&](Int v) {
      if (v >= 1 && v <= K && first[static_cast<std::size_t>(v)] == 0) {
        first[static_cast<std::size_t>(v)] = builder.n();
        ++seen;
      }
    };
    record(filled);
    for (Int j = 0; j + 1 < filled; ++j) record(builder.raw()[static_cast<std::size_t>(j)]);
  }
  for (Int k = 1; k <= K; ++k)
    if (first[static_cast<std::size_t>(k)] != t(k))
      return fail("rounding t(" + std::to_string(k) + ") != first appearance " +
                  std::to_string(first[static_cast<std::size_t>(k)]));
  return {true, "backward rounding == first appearance for k <= " + std::to_string(K), {}};
}

SuiteResult bijection(VerifyLevel level) {
  const Int N = bound(level, 500, 5000);
  for (Int n = 2; n <= N; ++n) {
    const AlistSequence seq = alist(n);
    const Board b = alist_to_board(seq);
    if (b != tchouk(n - 1)) return fail("chain board != tchouk(n-1) at n=" + std::to_string(n));
    if (board_to_alist(b, n) != seq) return fail("board does not map back to the chain at n=" + std::to_string(n));
    if (strange_root(n) != b.length() + 1)
      return fail("root != board length + 1 at n=" + std::to_string(n));
    if (w_sequence(n) != move_vector(n - 1))
      return fail("w sequence != move vector of n-1 at n=" + std::to_string(n));
  }
  return {true, "chain<->board round trip, length and w bridges for n <= " + std::to_string(N), {}};
}

SuiteResult counting(VerifyLevel level) {
  const Int K = bound(level, 60, 300);
  const Int top = t(K);
  std::vector<Int> tally(static_cast<std::size_t>(K + 2), 0);
  for (Int n = 1; n <= top; ++n) {
    const Int r = strange_root(n);
    if (r > K + 1) return fail("root overshot the tally at n=" + std::to_string(n));
    ++tally[static_cast<std::size_t>(r)];
  }
  Int cumulative = 0;
  for (Int k = 1; k <= K; ++k) {
    cumulative += tally[static_cast<std::size_t>(k)];
    if (k >= 2 && preimage_count(k) != tally[static_cast<std::size_t>(k)])
      return fail("preimage_count(" + std::to_string(k) + ") != direct enumeration");
    if (t(k) != cumulative)
      return fail("t(" + std::to_string(k) + ") != number of seeds with root <= k");
    if (k >= 2) {
      const PreimageInterval iv = preimage_interval(k);
      if (iv.count() != tally[static_cast<std::size_t>(k)])
        return fail("preimage interval width is off at k=" + std::to_string(k));
    }
  }
  return {true, "counts and intervals against enumeration for k <= " + std::to_string(K), {}};
}

SuiteResult inverse_soundness(VerifyLevel level) {
  const Int N = bound(level, 5000, 100000);
  for (Int n = 2; n <= N; ++n) {
    const AlistSequence seq = alist(n);
    for (std::size_t k = 0; k + 1 < seq.pairs.size(); ++k) {
      const std::vector<Int> pred = inverse_step(seq.pairs[k].index, seq.pairs[k + 1].value);
      bool found = false;
      for (Int u : pred) found = found || u == seq.pairs[k].value;
      if (!found)
        return fail("chain value missing from inverse_step at n=" + std::to_string(n) + " i=" +
                    std::to_string(seq.pairs[k].index));
    }
  }
  return {true, "every chain step is recovered by inverse_step for n <= " + std::to_string(N), {}};
}

SuiteResult inverse_completeness(VerifyLevel level) {
  const Int I = bound(level, 20, 50);
  const Int V = bound(level, 80, 200);
  for (Int i = 1; i <= I; ++i) {
    for (Int v = 2; v <= V; ++v) {
      const std::vector<Int> got = inverse_step(i, v);
      std::vector<Int> brute;
      for (Int u = i + 1; u <= 3 * v + 1; ++u)
        if (alist_step(i, u) == v) brute.push_back(u);
      if (got != brute)
        return fail("inverse_step(" + std::to_string(i) + "," + std::to_string(v) +
                    ") = " + seq_str(got) + " but brute force finds " + seq_str(brute));
    }
  }
  return {true, "matches brute force for i <= " + std::to_string(I) + ", v <= " + std::to_string(V), {}};
}

SuiteResult x_t_identity(VerifyLevel level) {
  const Int R = bound(level, 300, 2000);
  for (Int r = 2; r <= R; ++r)
    if (x_sequence(r).x1() != t(r))
      return fail("x_1(" + std::to_string(r) + ") != t(" + std::to_string(r) + ")");
  return {true, "x_1 == t for roots <= " + std::to_string(R), {}};
}

SuiteResult unique_predicate(VerifyLevel level) {
  const Int R = bound(level, 60, 300);
  for (Int r = 2; r <= R; ++r)
    if (is_unique_root(r) != (preimage_count(r) <= 2))
      return fail("divisibility test and preimage count disagree at r=" + std::to_string(r));
  return {true, "divisibility test == counting test for roots <= " + std::to_string(R), {}};
}

SuiteResult root_scan(VerifyLevel level) {
  const Int R = bound(level, 2000, 40000);
  const std::vector<RootRecord> recs = scan_unique_roots(R);
  std::vector<Int> roots;
  for (const auto& rec : recs) roots.push_back(rec.root);
  const std::vector<Int> want =
      level == VerifyLevel::quick ? std::vector<Int>{2, 3, 4, 6, 14, 1760}
                                  : std::vector<Int>{2, 3, 4, 6, 14, 1760, 39046};
  if (roots != want) return fail("scan(" + std::to_string(R) + ") found " + seq_str(roots));
  for (const auto& rec : recs) {
    if (rec.count() != preimage_count(rec.root))
      return fail("scan preimage count is off at r=" + std::to_string(rec.root));
    if (rec.preimage_hi != t(rec.root))
      return fail("scan preimage interval is off at r=" + std::to_string(rec.root));
    for (Int n : rec.preimages)
      if (strange_root(n) != rec.root)
        return fail("reported preimage has the wrong root at r=" + std::to_string(rec.root));
    // the two-preimage boards: tchouk of the smaller preimage carries the marker shape
    if (rec.root >= 3 && !fagan_property(tchouk(rec.preimage_lo)))
      return fail("board of the smaller preimage lacks the marker shape at r=" + std::to_string(rec.root));
  }
  SuiteResult r{true, "unique roots to " + std::to_string(R) + " with verified preimages and marker boards", {}};
  r.notes.push_back(
      "for preimages {n-1, n} the marker board is tchouk(n-1), one stone short of the larger preimage");
  return r;
}

SuiteResult cf_uniqueness(VerifyLevel level) {
  const Int R = bound(level, 60, 300);
  const Int M = t(R) / 2;
  std::vector<Int> tally(static_cast<std::size_t>(R + 1), 0);
  for (Int m = 1; m <= M; ++m) {
    const Int c = cf(m);
    if (c <= R) ++tally[static_cast<std::size_t>(c)];
  }
  for (Int r = 2; r <= R; ++r)
    if ((tally[static_cast<std::size_t>(r)] == 1) != is_unique_root(r))
      return fail("cf seed multiplicity disagrees with uniqueness at r=" + std::to_string(r));
  return {true, "exactly-one-seed cf values == unique roots for r <= " + std::to_string(R), {}};
}

struct Suite {
  const char* name;
  SuiteResult (*run)(VerifyLevel);
};

const Suite kSuites[] = {
    {"chain-goldens", chain_goldens},
    {"chain-laws", chain_laws},
    {"w-recurrence", w_recurrence},
    {"fagan-laws", fagan_laws},
    {"board-goldens", board_goldens},
    {"board-laws", board_laws},
    {"play-laws", play_laws},
    {"movevec-methods", movevec_methods},
    {"t-goldens", t_goldens},
    {"t-agreement", t_agreement},
    {"bijection", bijection},
    {"counting", counting},
    {"inverse-soundness", inverse_soundness},
    {"inverse-completeness", inverse_completeness},
    {"x-t-identity", x_t_identity},
    {"unique-predicate", unique_predicate},
    {"root-scan", root_scan},
    {"cf-uniqueness", cf_uniqueness},
};

}  // namespace

bool run_verify(VerifyLevel level, std::ostream& report) {
  int passed = 0;
  int total = 0;
  for (const Suite& suite : kSuites) {
    ++total;
    SuiteResult result;
    try {
      result = suite.run(level);
    } catch (const std::exception& e) {
      result = fail(std::string("threw: ") + e.what());
    }
    report << (result.ok ? "[PASS] " : "[FAIL] ") << suite.name << ": " << result.detail << "\n";
    for (const std::string& note : result.notes) report << "  note: " << note << "\n";
    report.flush();
    if (result.ok) ++passed;
  }
  report << "verify: " << passed << "/" << total << " suites passed (level="
         << (level == VerifyLevel::quick ? "quick" : "full") << ")\n";
  return passed == total;
}

}  // namespace strangeroots
