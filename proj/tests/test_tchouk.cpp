#include <optional>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "strangeroots/alist.hpp"
#include "strangeroots/tchoukaillon.hpp"

using namespace strangeroots;

namespace {

const std::vector<std::vector<Int>> kSmallBoards = {
    {},
    {1},
    {0, 2},
    {1, 2},
    {0, 1, 3},
    {1, 1, 3},
    {0, 0, 2, 4},
    {1, 0, 2, 4},
    {0, 2, 2, 4},
    {1, 2, 2, 4},
    {0, 1, 1, 3, 5},
    {1, 1, 1, 3, 5},
    {0, 0, 0, 2, 4, 6},
    {1, 0, 0, 2, 4, 6},
};

}  // namespace

TEST_CASE("board construction and accessors") {
  const Board b({0, 1, 1, 3, 5});
  CHECK(b.length() == 5);
  CHECK(b.stones(1) == 0);
  CHECK(b.stones(2) == 1);
  CHECK(b.stones(5) == 5);
  CHECK(b.stones(6) == 0);
  CHECK(b.total() == 10);
  CHECK_FALSE(b.empty());
  CHECK(Board().empty());
  CHECK(Board({0, 0, 0}).empty());  // trailing zeros trim away
  CHECK(Board({1, 0, 0}).length() == 1);
  CHECK_THROWS_AS(b.stones(0), std::invalid_argument);
  CHECK_THROWS_AS(Board({1, -2}), std::invalid_argument);
}

TEST_CASE("winning boards for n = 0..13") {
  for (std::size_t n = 0; n < kSmallBoards.size(); ++n) {
    const Board got = tchouk(static_cast<Int>(n));
    CHECK(got == Board(kSmallBoards[n]));
    CHECK(got.winning_shape());
  }
  CHECK_THROWS_AS(tchouk(-1), std::invalid_argument);
}

TEST_CASE("winning_shape rejects overfull and short boards") {
  CHECK(Board().winning_shape());
  CHECK_FALSE(Board({2}).winning_shape());      // hole 1 holds more than 1
  CHECK_FALSE(Board({0, 1}).winning_shape());   // last hole short of its index
  CHECK_FALSE(Board({1, 1}).winning_shape());
  CHECK(Board({1, 2}).winning_shape());
  CHECK(Board({0, 2}).winning_shape());
}

TEST_CASE("builder agrees with the direct construction") {
  TchoukBuilder builder;
  for (Int n = 1; n <= 3000; ++n) {
    builder.advance();
    CHECK(builder.n() == n);
  }
  TchoukBuilder fresh;
  for (Int n = 1; n <= 300; ++n) {
    fresh.advance();
    CHECK(fresh.board() == tchouk(n));
  }
}

TEST_CASE("builder fills holes in the documented order") {
  const Int want[] = {1, 2, 1, 3, 1, 4, 1, 2, 1, 5, 1, 6, 1};
  TchoukBuilder builder;
  for (Int n = 0; n < 13; ++n) CHECK(builder.advance() == want[n]);
}

TEST_CASE("recursive construction matches the explicit one") {
  for (Int n = 0; n <= 400; ++n) CHECK(tchouk_recursive(n) == tchouk(n));
}

TEST_CASE("play_move sows one stone into each hole to the left") {
  const Board b({1, 2, 3});
  const std::optional<Board> after = play_move(b, 3);
  REQUIRE(after.has_value());
  CHECK(*after == Board({2, 3}));

  const std::optional<Board> again = play_move(Board({0, 0, 2}), 3);
  REQUIRE(again.has_value());
  CHECK(*again == Board({1, 1}));

  CHECK_FALSE(play_move(Board({3}), 1).has_value());   // overshoots the board
  CHECK_FALSE(play_move(Board({0, 4}), 2).has_value());

  CHECK_THROWS_AS(play_move(b, 0), std::invalid_argument);
  CHECK_THROWS_AS(play_move(b, 4), std::invalid_argument);
  CHECK_THROWS_AS(play_move(Board({0, 2}), 1), std::invalid_argument);  // empty hole
}

TEST_CASE("solve wins every winning board and records the trace") {
  for (Int n = 0; n <= 300; ++n) {
    const Board start = tchouk(n);
    const std::optional<PlayTrace> trace = solve(start);
    REQUIRE(trace.has_value());
    CHECK(trace->states.size() == trace->selections.size());
    Board prev = start;
    for (std::size_t k = 0; k < trace->selections.size(); ++k) {
      const std::optional<Board> next = play_move(prev, trace->selections[k]);
      REQUIRE(next.has_value());
      CHECK(*next == trace->states[k]);
      prev = trace->states[k];
    }
    CHECK(prev.empty());
  }
}

TEST_CASE("solve reproduces the worked ten-move game") {
  const std::optional<PlayTrace> trace = solve(Board({0, 1, 1, 3, 5}));
  REQUIRE(trace.has_value());
  const std::vector<Int> moves = {5, 1, 2, 1, 4, 1, 3, 1, 2, 1};
  CHECK(trace->selections == moves);
  const std::vector<std::vector<Int>> states = {
      {1, 2, 2, 4}, {0, 2, 2, 4}, {1, 0, 2, 4}, {0, 0, 2, 4}, {1, 1, 3},
      {0, 1, 3},    {1, 2},       {0, 2},       {1},          {},
  };
  REQUIRE(trace->states.size() == states.size());
  for (std::size_t k = 0; k < states.size(); ++k) CHECK(trace->states[k] == Board(states[k]));
}

TEST_CASE("solve returns nothing for losing boards") {
  CHECK_FALSE(solve(Board({2})).has_value());
  CHECK_FALSE(solve(Board({0, 1})).has_value());
  CHECK_FALSE(solve(Board({1, 1})).has_value());
  CHECK_FALSE(solve(Board({0, 0, 1})).has_value());
}

TEST_CASE("move vectors for n = 1..13") {
  const std::vector<std::vector<Int>> want = {
      {1},
      {1, 1},
      {2, 1},
      {2, 1, 1},
      {3, 1, 1},
      {3, 1, 1, 1},
      {4, 1, 1, 1},
      {4, 2, 1, 1},
      {5, 2, 1, 1},
      {5, 2, 1, 1, 1},
      {6, 2, 1, 1, 1},
      {6, 2, 1, 1, 1, 1},
      {7, 2, 1, 1, 1, 1},
  };
  for (std::size_t k = 0; k < want.size(); ++k) {
    CHECK(move_vector(static_cast<Int>(k + 1)) == want[k]);
  }
  CHECK_THROWS_AS(move_vector(0), std::invalid_argument);
}

TEST_CASE("three ways of counting moves agree") {
  for (Int n = 1; n <= 1000; ++n) {
    const std::vector<Int> direct = move_vector(n);
    CHECK(direct == move_vector_from_board(tchouk(n)));
    CHECK(direct == w_sequence(n + 1));

    const std::optional<PlayTrace> trace = solve(tchouk(n));
    REQUIRE(trace.has_value());
    std::vector<Int> counted(tchouk(n).length(), 0);
    for (Int hole : trace->selections) ++counted[static_cast<std::size_t>(hole - 1)];
    CHECK(direct == counted);
  }
}

TEST_CASE("move_vector_from_board rejects boards that cannot win") {
  CHECK_THROWS_AS(move_vector_from_board(Board()), std::invalid_argument);
  CHECK_THROWS_AS(move_vector_from_board(Board({0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(move_vector_from_board(Board({1, 1})), std::invalid_argument);
  // right shape, but stone counts that belong to no winning position
  CHECK_THROWS_AS(move_vector_from_board(Board({1, 0, 3})), std::domain_error);
  CHECK_THROWS_AS(move_vector_from_board(Board({0, 0, 3})), std::domain_error);
}

TEST_CASE("t gives the first board of each length") {
  const Int first14[] = {1, 2, 4, 6, 10, 12, 18, 22, 30, 34, 42, 48, 58, 60};
  for (Int k = 1; k <= 14; ++k) CHECK(t(k) == first14[k - 1]);
  CHECK(t(20) == 132);
  CHECK(t(100) == 3234);
  for (Int k = 1; k <= 200; ++k) CHECK(t(k) == t_by_scan(k));
  CHECK_THROWS_AS(t(0), std::invalid_argument);
  CHECK_THROWS_AS(t_by_scan(0), std::invalid_argument);
}

TEST_CASE("board length first reaches k at n = t(k)") {
  const Int kMax = 20;
  const Int limit = t(kMax);
  TchoukBuilder builder;
  std::vector<Int> first_seen(static_cast<std::size_t>(kMax) + 1, 0);
  for (Int n = 1; n <= limit; ++n) {
    builder.advance();
    const Int len = builder.board().length();
    if (len <= kMax && first_seen[static_cast<std::size_t>(len)] == 0) {
      first_seen[static_cast<std::size_t>(len)] = n;
    }
  }
  for (Int k = 1; k <= kMax; ++k) CHECK(first_seen[static_cast<std::size_t>(k)] == t(k));
}

TEST_CASE("fagan_property recognizes the marker boards") {
  CHECK(fagan_property(Board({1})));
  CHECK(fagan_property(Board({1, 2})));
  CHECK(fagan_property(Board({1, 1, 1, 3, 5})));
  CHECK_FALSE(fagan_property(Board({0, 1, 1, 3, 5})));
  CHECK_FALSE(fagan_property(Board({1, 0, 2, 4})));
  CHECK_THROWS_AS(fagan_property(Board()), std::invalid_argument);
}
