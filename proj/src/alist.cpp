#include "strangeroots/alist.hpp"

#include <stdexcept>

namespace strangeroots {

AlistSequence alist(Int n) {
  if (n < 1) throw std::invalid_argument("alist: seed must be >= 1");
  AlistSequence seq;
  seq.seed = n;
  Int i = 1;
  Int y = n;
  seq.pairs.push_back({i, y});
  while (y > i) {
    y = alist_step(i, y);
    ++i;
    seq.pairs.push_back({i, y});
  }
  // the value can only land exactly on the index; undershooting it would
  // break the chain's defining inequality
  if (y != i) throw std::logic_error("alist: chain terminated below its index");
  return seq;
}

Int strange_root(Int n) {
  if (n < 1) throw std::invalid_argument("strange_root: n must be >= 1");
  Int i = 1;
  Int y = n;
  while (y > i) {
    y = checked::mul(i, checked::add(y, 1)) / (i + 1) + 1;
    ++i;
  }
  if (y != i) throw std::logic_error("strange_root: chain terminated below its index");
  return i;
}

std::vector<Int> w_sequence(Int n) {
  if (n < 2) throw std::invalid_argument("w_sequence: needs a chain with at least one step (n >= 2)");
  const AlistSequence seq = alist(n);
  std::vector<Int> w;
  w.reserve(seq.pairs.size() - 1);
  for (std::size_t k = 0; k + 1 < seq.pairs.size(); ++k)
    w.push_back(seq.pairs[k].value - seq.pairs[k + 1].value + 1);
  return w;
}

}  // namespace strangeroots
