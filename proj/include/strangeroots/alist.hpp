#pragma once

#include <stdexcept>
#include <vector>

#include "strangeroots/checked.hpp"

namespace strangeroots {

struct AlistPair {
  Int index = 0;
  Int value = 0;
  friend bool operator==(const AlistPair&, const AlistPair&) = default;
};

// The chain <1,n> -> <2,y_2> -> ... -> <r,r>, stepping until the value meets
// the index. The terminal index r is the strange root of the seed n.
struct AlistSequence {
  Int seed = 0;
  std::vector<AlistPair> pairs;

  Int root() const { return pairs.back().index; }
  friend bool operator==(const AlistSequence&, const AlistSequence&) = default;
};

// Successor value: the smallest y' with (i+1)*y' > i*(y+1). Defined only for
// non-terminal pairs, i.e. y > i >= 1. Inline because the sweeps in the
// verifier and the root search hammer this kernel.
inline Int alist_step(Int i, Int y) {
  if (i < 1) throw std::invalid_argument("alist_step: index must be >= 1");
  if (y <= i) throw std::invalid_argument("alist_step: pair is terminal (value <= index), no successor");
  return checked::mul(i, checked::add(y, 1)) / (i + 1) + 1;
}

AlistSequence alist(Int n);
Int strange_root(Int n);

// (w_1, ..., w_{r-1}) with w_i = y_i - y_{i+1} + 1; entries sum to n-1.
// Needs at least one step, so n >= 2.
std::vector<Int> w_sequence(Int n);

}  // namespace strangeroots
