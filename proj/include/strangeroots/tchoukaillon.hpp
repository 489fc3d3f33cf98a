#pragma once

#include <optional>
#include <vector>

#include "strangeroots/checked.hpp"

namespace strangeroots {

// Tchoukaillon row: holes 1..length with counts, pit not stored. Canonical
// form trims trailing empty holes, so equality is equality of positions.
class Board {
 public:
  Board() = default;
  explicit Board(std::vector<Int> counts);

  Int length() const { return static_cast<Int>(counts_.size()); }
  bool empty() const { return counts_.empty(); }
  Int stones(Int hole) const;  // 1-indexed; holes past the end are empty
  Int total() const;
  const std::vector<Int>& counts() const { return counts_; }

  // Necessary shape of a winning configuration: 0 <= c_i <= i and the last
  // hole holds exactly its own index.
  bool winning_shape() const;

  friend bool operator==(const Board&, const Board&) = default;

 private:
  std::vector<Int> counts_;
};

struct PlayTrace {
  std::vector<Int> selections;  // holes played, in order
  std::vector<Board> states;    // board after each play (when recorded)
};

// Sow hole's stones one per hole leftward, last one aiming at the pit.
// Overshooting the pit (count > hole) loses: nullopt. Selecting an empty or
// nonexistent hole is a contract violation and throws.
std::optional<Board> play_move(const Board& b, Int hole);

// Winning configuration with n stones, by modular remainders: c_k is
// (n - sum so far) mod (k+1), stopping once the sum reaches n.
Board tchouk(Int n);

// Same configuration grown one stone at a time: drop i stones in the leftmost
// empty hole i and take one from each hole below it.
Board tchouk_recursive(Int n);

// Incremental form of the recursive construction; advance() turns the board
// for n stones into the one for n+1 and reports which hole it filled.
class TchoukBuilder {
 public:
  Int advance();
  Int n() const { return n_; }
  const std::vector<Int>& raw() const { return counts_; }  // never has a trailing zero
  Board board() const { return Board(counts_); }

 private:
  std::vector<Int> counts_;
  Int n_ = 0;
};

// Repeatedly play the leftmost hole whose count equals its index. Winning
// boards drain exactly one stone into the pit per move; anything else gets
// stuck and returns nullopt. Recording states costs a board copy per move,
// so bulk sweeps can turn it off.
std::optional<PlayTrace> solve(const Board& b, bool record_states = true);

// m_k = ceil((n - m_1 - ... - m_{k-1}) / (k+1)) until the remainder is gone.
std::vector<Int> move_vector(Int n);

// Per-hole play counts recovered from a winning board alone:
// i(i+1)*m_i = (i+1)*b_i + (b_{i+1} + ... + b_l), exactly. A non-integral or
// non-positive quotient means the board is not a winning configuration.
std::vector<Int> move_vector_from_board(const Board& b);

// Least stone count whose winning configuration reaches hole k, by Brown's
// backward rounding: start at k and round up to the next multiple of each of
// k-1, ..., 1 in turn.
Int t(Int k);

// Same quantity found the honest way: grow boards one stone at a time until
// an entry equal to k first appears.
Int t_by_scan(Int k);

// b_1 = 1, the last hole holds its index, and every interior hole i holds
// between 1 and i-1 stones. Boards shaped like this pin down the roots with
// exactly two preimages.
bool fagan_property(const Board& b);

}  // namespace strangeroots
