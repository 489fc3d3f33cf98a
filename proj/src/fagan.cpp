#include "strangeroots/fagan.hpp"

#include <stdexcept>

namespace strangeroots {

namespace {

// least z with (i+1)*z > i*a and i+1+z even
Int fagan_step(Int i, Int a) {
  Int z = checked::mul(i, a) / (i + 1) + 1;
  if ((i + 1 + z) % 2 != 0) ++z;
  return z;
}

}  // namespace

FaganSequence fagan_sequence(Int m) {
  if (m < 1) throw std::invalid_argument("fagan_sequence: seed must be >= 1");
  FaganSequence seq;
  seq.seed = m;
  Int i = 2;
  Int a = checked::mul(2, m);
  seq.pairs.push_back({i, a});
  while (a > i) {
    a = fagan_step(i, a);
    ++i;
    seq.pairs.push_back({i, a});
  }
  if (a != i) throw std::logic_error("fagan_sequence: chain terminated below its index");
  return seq;
}

Int cf(Int m) {
  if (m < 1) throw std::invalid_argument("cf: seed must be >= 1");
  Int i = 2;
  Int a = checked::mul(2, m);
  while (a > i) {
    a = fagan_step(i, a);
    ++i;
  }
  if (a != i) throw std::logic_error("cf: chain terminated below its index");
  return i;
}

FaganPair to_fagan(const AlistPair& p) {
  if (p.index < 1 || p.value < 1) throw std::invalid_argument("to_fagan: pair entries must be positive");
  const Int v = checked::sub(checked::mul(2, p.value), p.index);
  if (v <= 0) throw std::invalid_argument("to_fagan: 2*value - index is not positive");
  return {p.index, v};
}

AlistPair from_fagan(const FaganPair& p) {
  if (p.index < 1 || p.value < 1) throw std::invalid_argument("from_fagan: pair entries must be positive");
  if ((p.index + p.value) % 2 != 0)
    throw std::invalid_argument("from_fagan: index + value must be even");
  return {p.index, checked::add(p.index, p.value) / 2};
}

}  // namespace strangeroots
