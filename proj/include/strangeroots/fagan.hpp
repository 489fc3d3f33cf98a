#pragma once

#include <vector>

#include "strangeroots/alist.hpp"

namespace strangeroots {

struct FaganPair {
  Int index = 0;
  Int value = 0;
  friend bool operator==(const FaganPair&, const FaganPair&) = default;
};

// Fagan's doubling game seeded with m: (2,2m) -> (3,a_3) -> ... -> (cf,cf),
// where each a_{i+1} is the least z with (i+1)*z > i*a_i and i+1+z even.
struct FaganSequence {
  Int seed = 0;
  std::vector<FaganPair> pairs;

  Int cf() const { return pairs.back().index; }
  friend bool operator==(const FaganSequence&, const FaganSequence&) = default;
};

FaganSequence fagan_sequence(Int m);
Int cf(Int m);

// The linear bridge between the two chain families: <x,y> |-> (x, 2y-x) and
// back. Index/value sums stay even on the Fagan side, which is what makes the
// inverse well defined.
FaganPair to_fagan(const AlistPair& p);
AlistPair from_fagan(const FaganPair& p);

}  // namespace strangeroots
