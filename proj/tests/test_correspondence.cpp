#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "strangeroots/alist.hpp"
#include "strangeroots/correspondence.hpp"
#include "strangeroots/tchoukaillon.hpp"

using namespace strangeroots;

TEST_CASE("alist_to_board on worked examples") {
  CHECK(alist_to_board(alist(11)) == Board({0, 1, 1, 3, 5}));
  CHECK(alist_to_board(alist(2)) == Board({1}));
  CHECK(alist_to_board(alist(13)) == Board({0, 0, 0, 2, 4, 6}));
}

TEST_CASE("alist_to_board rejects chains it cannot place") {
  CHECK_THROWS_AS(alist_to_board(alist(1)), std::invalid_argument);

  AlistSequence broken;
  broken.seed = 5;
  broken.pairs = {{1, 5}, {2, 9}};
  CHECK_THROWS_AS(alist_to_board(broken), std::invalid_argument);

  AlistSequence truncated;
  truncated.seed = 8;
  truncated.pairs = {{1, 8}, {2, 5}, {3, 5}, {4, 5}};
  CHECK_THROWS_AS(alist_to_board(truncated), std::invalid_argument);

  AlistSequence mislabeled = alist(8);
  mislabeled.seed = 7;
  CHECK_THROWS_AS(alist_to_board(mislabeled), std::invalid_argument);

  AlistSequence empty;
  empty.seed = 4;
  CHECK_THROWS_AS(alist_to_board(empty), std::invalid_argument);
}

TEST_CASE("board_to_alist on worked examples") {
  const AlistSequence a11 = board_to_alist(Board({0, 1, 1, 3, 5}), 11);
  CHECK(a11 == alist(11));
  CHECK(a11.pairs.front().value == 11);
  CHECK(a11.pairs.back() == AlistPair{6, 6});

  CHECK(board_to_alist(Board({1}), 2) == alist(2));
  CHECK(board_to_alist(Board({1, 2, 2, 4}), 10) == alist(10));
}

TEST_CASE("board_to_alist infers the seed from the stone count") {
  CHECK(board_to_alist(Board({0, 1, 1, 3, 5})) == alist(11));
  CHECK(board_to_alist(Board({1})) == alist(2));
  for (Int n = 2; n <= 200; ++n) CHECK(board_to_alist(tchouk(n - 1)) == alist(n));
}

TEST_CASE("board_to_alist rejects boards that pair with nothing") {
  CHECK_THROWS_AS(board_to_alist(Board({1}), 3), std::domain_error);   // stone count says 2
  CHECK_THROWS_AS(board_to_alist(Board({0, 1}), 2), std::domain_error);  // suffix 1 not divisible by 2
  CHECK_THROWS_AS(board_to_alist(Board({2}), 3), std::domain_error);   // integral but breaks the successor rule
  CHECK_THROWS_AS(board_to_alist(Board({1}), 1), std::invalid_argument);
}

TEST_CASE("the correspondence round-trips against both constructions") {
  for (Int n = 2; n <= 2000; ++n) {
    const AlistSequence a = alist(n);
    const Board b = alist_to_board(a);
    CHECK(b == tchouk(n - 1));
    CHECK(board_to_alist(b, n) == a);
    CHECK(strange_root(n) == b.length() + 1);
    CHECK(w_sequence(n) == move_vector(n - 1));
  }
}

TEST_CASE("board entries follow the two-term difference formula") {
  for (Int n = 2; n <= 500; ++n) {
    const AlistSequence a = alist(n);
    const Board b = alist_to_board(a);
    for (std::size_t k = 0; k + 1 < a.pairs.size(); ++k) {
      const Int i = a.pairs[k].index;
      const Int want = 2 * i + 1 + i * a.pairs[k].value - (i + 1) * a.pairs[k + 1].value;
      CHECK(b.stones(i) == want);
    }
  }
}

TEST_CASE("preimage counts match the construction gaps") {
  CHECK(preimage_count(2) == 1);
  CHECK(preimage_count(5) == 4);
  CHECK(preimage_count(6) == 2);

  const PreimageInterval i5 = preimage_interval(5);
  CHECK(i5.lo == 7);
  CHECK(i5.hi == 10);
  CHECK(i5.count() == 4);
  const PreimageInterval i6 = preimage_interval(6);
  CHECK(i6.lo == 11);
  CHECK(i6.hi == 12);
  const PreimageInterval i2 = preimage_interval(2);
  CHECK(i2.lo == 2);
  CHECK(i2.hi == 2);

  CHECK_THROWS_AS(preimage_count(1), std::invalid_argument);
  CHECK_THROWS_AS(preimage_interval(0), std::invalid_argument);
}

TEST_CASE("every seed in the interval has the interval's root") {
  for (Int k = 2; k <= 60; ++k) {
    const PreimageInterval iv = preimage_interval(k);
    CHECK(iv.count() == preimage_count(k));
    CHECK(strange_root(iv.lo) == k);
    CHECK(strange_root(iv.hi) == k);
    if (iv.lo > 2) CHECK(strange_root(iv.lo - 1) == k - 1);
    CHECK(strange_root(iv.hi + 1) == k + 1);
  }
}
