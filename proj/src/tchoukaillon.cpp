#include "strangeroots/tchoukaillon.hpp"

#include <stdexcept>
#include <string>

namespace strangeroots {

Board::Board(std::vector<Int> counts) : counts_(std::move(counts)) {
  for (Int c : counts_)
    if (c < 0) throw std::invalid_argument("Board: negative stone count");
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
}

Int Board::stones(Int hole) const {
  if (hole < 1) throw std::invalid_argument("Board::stones: holes are numbered from 1");
  if (hole > length()) return 0;
  return counts_[static_cast<std::size_t>(hole - 1)];
}

Int Board::total() const {
  Int sum = 0;
  for (Int c : counts_) sum = checked::add(sum, c);
  return sum;
}

bool Board::winning_shape() const {
  for (Int i = 1; i <= length(); ++i)
    if (counts_[static_cast<std::size_t>(i - 1)] > i) return false;
  return counts_.empty() || counts_.back() == length();
}

std::optional<Board> play_move(const Board& b, Int hole) {
  if (hole < 1 || hole > b.length())
    throw std::invalid_argument("play_move: hole " + std::to_string(hole) + " is not on the board");
  const Int s = b.stones(hole);
  if (s < 1) throw std::invalid_argument("play_move: hole " + std::to_string(hole) + " is empty");
  if (s > hole) return std::nullopt;  // last stone overshoots the pit
  std::vector<Int> counts = b.counts();
  counts[static_cast<std::size_t>(hole - 1)] = 0;
  // one stone into each of holes hole-1 .. hole-s; hole 0 is the pit
  for (Int j = hole - s; j < hole; ++j)
    if (j >= 1) ++counts[static_cast<std::size_t>(j - 1)];
  return Board(std::move(counts));
}

Board tchouk(Int n) {
  if (n < 0) throw std::invalid_argument("tchouk: stone count must be >= 0");
  std::vector<Int> counts;
  Int rem = n;
  Int k = 1;
  while (rem > 0) {
    // the remainder shrinks before k can pass it, so k stays within n+1
    if (k > n + 1) throw std::logic_error("tchouk: construction overran its board");
    const Int c = rem % (k + 1);
    counts.push_back(c);
    rem -= c;
    ++k;
  }
  return Board(std::move(counts));
}

Int TchoukBuilder::advance() {
  std::size_t i = 0;  // leftmost empty hole, 0-based
  while (i < counts_.size() && counts_[i] != 0) ++i;
  if (i == counts_.size()) counts_.push_back(0);
  counts_[i] = static_cast<Int>(i) + 1;
  for (std::size_t j = 0; j < i; ++j) --counts_[j];
  ++n_;
  return static_cast<Int>(i) + 1;
}

Board tchouk_recursive(Int n) {
  if (n < 0) throw std::invalid_argument("tchouk_recursive: stone count must be >= 0");
  TchoukBuilder builder;
  for (Int s = 0; s < n; ++s) builder.advance();
  return builder.board();
}

std::optional<PlayTrace> solve(const Board& b, bool record_states) {
  PlayTrace trace;
  Board cur = b;
  Int remaining = cur.total();
  while (!cur.empty()) {
    Int hole = 0;
    for (Int i = 1; i <= cur.length(); ++i) {
      if (cur.stones(i) == i) {
        hole = i;
        break;
      }
    }
    if (hole == 0) return std::nullopt;  // stuck: no hole holds its own index
    auto next = play_move(cur, hole);    // count == hole can never overshoot
    cur = std::move(*next);
    trace.selections.push_back(hole);
    if (record_states) trace.states.push_back(cur);
    // each such move banks exactly one stone, so this cannot loop
    if (--remaining < 0) throw std::logic_error("solve: played more moves than stones");
  }
  return trace;
}

std::vector<Int> move_vector(Int n) {
  if (n < 1) throw std::invalid_argument("move_vector: stone count must be >= 1");
  std::vector<Int> moves;
  Int rem = n;
  Int k = 1;
  while (rem > 0) {
    const Int m = ceil_div(rem, k + 1);
    moves.push_back(m);
    rem -= m;
    ++k;
  }
  return moves;
}

std::vector<Int> move_vector_from_board(const Board& b) {
  if (b.empty()) throw std::invalid_argument("move_vector_from_board: empty board");
  if (!b.winning_shape())
    throw std::invalid_argument("move_vector_from_board: board is not shaped like a winning configuration");
  const Int l = b.length();
  std::vector<Int> moves(static_cast<std::size_t>(l));
  Int suffix = 0;  // b_{i+1} + ... + b_l
  for (Int i = l; i >= 1; --i) {
    const Int bi = b.stones(i);
    const Int num = checked::add(checked::mul(i + 1, bi), suffix);
    const Int den = checked::mul(i, i + 1);
    if (num % den != 0 || num / den < 1)
      throw std::domain_error("move_vector_from_board: hole " + std::to_string(i) +
                              " does not resolve to a whole move count; not a winning configuration");
    moves[static_cast<std::size_t>(i - 1)] = num / den;
    suffix = checked::add(suffix, bi);
  }
  return moves;
}

Int t(Int k) {
  if (k < 1) throw std::invalid_argument("t: k must be >= 1");
  Int v = k;
  for (Int j = k - 1; j >= 1; --j) {
    const Int r = v % j;
    if (r != 0) v = checked::add(v, j - r);  // round up to the next multiple of j
  }
  return v;
}

Int t_by_scan(Int k) {
  if (k < 1) throw std::invalid_argument("t_by_scan: k must be >= 1");
  TchoukBuilder builder;
  // t(k) grows like k^2/pi, so k^2 + 10k + 10 gives comfortable headroom
  const Int cap = checked::add(checked::mul(k, k), checked::add(checked::mul(10, k), 10));
  while (builder.n() <= cap) {
    const Int filled = builder.advance();
    if (filled == k) return builder.n();
    // the decremented holes may expose k too; they sit below the filled hole
    for (Int j = 0; j + 1 < filled; ++j)
      if (builder.raw()[static_cast<std::size_t>(j)] == k) return builder.n();
  }
  throw std::logic_error("t_by_scan: " + std::to_string(k) + " never appeared within its bound");
}

bool fagan_property(const Board& b) {
  if (b.empty()) throw std::invalid_argument("fagan_property: defined for non-empty boards");
  const Int k = b.length();
  if (b.stones(1) != 1 || b.stones(k) != k) return false;
  for (Int i = 2; i < k; ++i) {
    const Int c = b.stones(i);
    if (c < 1 || c >= i) return false;
  }
  return true;
}

}  // namespace strangeroots
