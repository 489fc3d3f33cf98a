#include "strangeroots/correspondence.hpp"

#include <stdexcept>
#include <string>

namespace strangeroots {

namespace {

// A genuine chain: indices 1..r, every step obeys the successor rule, and the
// final value sits on its index. Rejecting synthetic input here keeps the
// board formula from quietly emitting junk.
void require_alist(const AlistSequence& a) {
  if (a.pairs.empty()) throw std::invalid_argument("alist_to_board: empty chain");
  if (a.pairs.front().index != 1 || a.pairs.front().value != a.seed)
    throw std::invalid_argument("alist_to_board: chain must start at <1, seed>");
  for (std::size_t k = 0; k + 1 < a.pairs.size(); ++k) {
    const auto& cur = a.pairs[k];
    const auto& nxt = a.pairs[k + 1];
    if (nxt.index != cur.index + 1 || nxt.value != alist_step(cur.index, cur.value))
      throw std::invalid_argument("alist_to_board: pairs do not follow the successor rule");
  }
  const auto& last = a.pairs.back();
  if (last.value != last.index)
    throw std::invalid_argument("alist_to_board: chain does not end on a terminal pair");
}

}  // namespace

Board alist_to_board(const AlistSequence& a) {
  require_alist(a);
  if (a.seed < 2)
    throw std::invalid_argument("alist_to_board: seed 1 has a one-pair chain and no board");
  const auto& ps = a.pairs;
  std::vector<Int> counts;
  counts.reserve(ps.size() - 1);
  for (std::size_t k = 0; k + 1 < ps.size(); ++k) {
    const Int i = ps[k].index;
    // b_i = 2i + 1 + i*y_i - (i+1)*y_{i+1}
    const Int bi = checked::sub(checked::add(2 * i + 1, checked::mul(i, ps[k].value)),
                                checked::mul(i + 1, ps[k + 1].value));
    counts.push_back(bi);
  }
  return Board(std::move(counts));
}

AlistSequence board_to_alist(const Board& b, Int n) {
  if (n < 2) throw std::invalid_argument("board_to_alist: n must be >= 2");
  const Int r = b.length() + 1;
  AlistSequence seq;
  seq.seed = n;
  seq.pairs.reserve(static_cast<std::size_t>(r));
  // suffix sums taken from hole i upward: y_i = i + (b_i + ... + b_l)/i
  std::vector<Int> values(static_cast<std::size_t>(r));
  Int suffix = 0;
  for (Int i = r; i >= 1; --i) {
    if (i <= b.length()) suffix = checked::add(suffix, b.stones(i));
    if (suffix % i != 0)
      throw std::domain_error("board_to_alist: suffix sum at hole " + std::to_string(i) +
                              " is not divisible by " + std::to_string(i) +
                              "; not a winning configuration");
    values[static_cast<std::size_t>(i - 1)] = checked::add(i, suffix / i);
  }
  if (values.front() != n)
    throw std::domain_error("board_to_alist: board holds " + std::to_string(suffix) +
                            " stones, which pairs with seed " + std::to_string(values.front()) +
                            ", not " + std::to_string(n));
  for (Int i = 1; i <= r; ++i) seq.pairs.push_back({i, values[static_cast<std::size_t>(i - 1)]});
  // the reconstructed values must themselves form a chain, or the board was
  // integral by coincidence rather than a winning configuration
  for (Int i = 1; i + 1 <= r; ++i) {
    const Int yi = seq.pairs[static_cast<std::size_t>(i - 1)].value;
    if (yi <= i || alist_step(i, yi) != seq.pairs[static_cast<std::size_t>(i)].value)
      throw std::domain_error("board_to_alist: reconstructed values break the successor rule at index " +
                              std::to_string(i) + "; not a winning configuration");
  }
  if (seq.pairs.back().value != r)
    throw std::domain_error("board_to_alist: reconstructed chain does not terminate");
  return seq;
}

AlistSequence board_to_alist(const Board& b) {
  return board_to_alist(b, checked::add(b.total(), 1));
}

Int preimage_count(Int k) {
  if (k < 2) throw std::invalid_argument("preimage_count: k must be >= 2");
  return t(k) - t(k - 1);
}

PreimageInterval preimage_interval(Int k) {
  if (k < 2) throw std::invalid_argument("preimage_interval: k must be >= 2");
  return {t(k - 1) + 1, t(k)};
}

}  // namespace strangeroots
