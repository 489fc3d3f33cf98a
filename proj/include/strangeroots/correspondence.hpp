#pragma once

#include "strangeroots/alist.hpp"
#include "strangeroots/tchoukaillon.hpp"

namespace strangeroots {

// The bijection between chains and boards: the chain seeded with n maps to
// the winning configuration of n-1 stones via
//   b_i = 2i + 1 + i*y_i - (i+1)*y_{i+1},  i = 1 .. r-1.
// Seed 1 has a one-pair chain and no board counterpart here.
Board alist_to_board(const AlistSequence& a);

// Inverse direction: y_i = i + (b_i + ... + b_l)/i for i = 1 .. l+1. Taking n
// explicitly (rather than counting stones) lets the divisibility and step
// checks genuinely validate the pairing; the overload without n infers it.
AlistSequence board_to_alist(const Board& b, Int n);
AlistSequence board_to_alist(const Board& b);

struct PreimageInterval {
  Int lo = 0;
  Int hi = 0;
  Int count() const { return hi - lo + 1; }
};

// How many integers have strange root k, and which ones. Roots are monotone
// in the seed, so the preimages of k are exactly the interval (t(k-1), t(k)].
Int preimage_count(Int k);
PreimageInterval preimage_interval(Int k);

}  // namespace strangeroots
