#include <doctest.h>

#include <algorithm>
#include <random>

#include "boxball/boxball.hpp"
#include "common/error.hpp"
#include "crystal/trop.hpp"
#include "loopsym/loop_e.hpp"
#include "loopsym/var_array.hpp"
#include "rmatrix/rmatrix.hpp"

using namespace lsym;
using namespace lsym::boxball;

namespace {

BoxBallState at(std::vector<long> p) { return BoxBallState::from_positions(p); }

BoxBallState random_state(std::mt19937_64& rng, int boxes, int max_balls) {
  std::vector<long> pos(boxes);
  for (int i = 0; i < boxes; ++i) pos[i] = i;
  std::shuffle(pos.begin(), pos.end(), rng);
  pos.resize(std::uniform_int_distribution<int>(0, std::min(boxes, max_balls))(rng));
  std::sort(pos.begin(), pos.end());
  return at(pos);
}

// Runs weakly increasing left to right, each gap longer than both neighbours.
bool asymptotic(const BoxBallState& s) {
  std::vector<std::pair<long, long>> runs;  // (start, length)
  for (long i = 0; i < s.extent(); ++i) {
    if (!s.occupied(i)) continue;
    if (i > 0 && s.occupied(i - 1)) ++runs.back().second;
    else runs.push_back({i, 1});
  }
  for (std::size_t k = 1; k < runs.size(); ++k) {
    const auto [p0, l0] = runs[k - 1];
    const auto [p1, l1] = runs[k];
    if (l1 < l0 || p1 - (p0 + l0) <= l1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("soliton collision frames") {
  std::vector<BoxBallState> frames{at({1, 2, 3, 8}), at({4, 5, 6, 9}), at({7, 8, 10, 11}),
                                   at({9, 12, 13, 14}), at({10, 15, 16, 17})};
  for (std::size_t i = 0; i + 1 < frames.size(); ++i) {
    CHECK(evolve_leftmost(frames[i]) == frames[i + 1]);
    CHECK(evolve_carrier(frames[i]) == frames[i + 1]);
  }
  CHECK(solitons(frames.front()) == std::vector<long>{3, 1});
  CHECK(solitons(frames.back()) == std::vector<long>{1, 3});
  CHECK(frames.front().render() == ".ooo....o");
  CHECK(BoxBallState::parse(".ooo....o...") == frames.front());
}

TEST_CASE("trivial states") {
  CHECK(evolve_leftmost(BoxBallState{}) == BoxBallState{});
  CHECK(evolve_carrier(BoxBallState{}) == BoxBallState{});
  CHECK(solitons(BoxBallState{}).empty());
  for (long p : {0L, 3L, 10L}) {
    CHECK(evolve_leftmost(at({p})) == at({p + 1}));
    CHECK(evolve_carrier(at({p})) == at({p + 1}));
  }
  CHECK_THROWS_AS(at({2, 2}), Error);
  CHECK_THROWS_AS(BoxBallState::parse("o.x"), Error);
}

TEST_CASE("carrier window too short") {
  try {
    evolve_carrier(at({1, 2, 3}), 0, 5);
    FAIL("expected CarrierNotEmptied");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CarrierNotEmptied);
  }
  CHECK(evolve_carrier(at({1, 2, 3}), 0, 7) == at({4, 5, 6}));
}

TEST_CASE("finite carrier capacity") {
  // A carrier of capacity 1 moves one ball of a run per step.
  CHECK(evolve_carrier(at({0, 1, 2}), 1) == at({1, 2, 3}));
  CHECK(evolve_carrier(at({0, 1, 2}), 3) == at({3, 4, 5}));
}

TEST_CASE("carrier step") {
  CHECK(carrier_step({1, 0}, 0).site == SiteCoord{1, 0});
  CHECK(carrier_step({1, 0}, 2).site == SiteCoord{0, 1});
  CHECK(carrier_step({1, 0}, 2).load == 1);
  CHECK(carrier_step({0, 1}, 2).site == SiteCoord{1, 0});
  CHECK(carrier_step({0, 1}, 2).load == 3);
}

TEST_CASE("evolutions agree exhaustively on small windows") {
  for (int len = 0; len <= 8; ++len)
    for (long mask = 0; mask < (1L << len); ++mask) {
      std::vector<int> boxes(len);
      for (int i = 0; i < len; ++i) boxes[i] = (mask >> i) & 1;
      BoxBallState s(boxes);
      auto a = evolve_leftmost(s), b = evolve_carrier(s);
      CHECK(a == b);
      CHECK(a.ball_count() == s.ball_count());
    }
}

TEST_CASE("evolutions agree on random states") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    auto s = random_state(rng, 60, 20);
    auto a = evolve_leftmost(s);
    CHECK(a == evolve_carrier(s));
    CHECK(a.ball_count() == s.ball_count());
  }
}

TEST_CASE("solitons separate and persist") {
  std::mt19937_64 rng(7);
  int reached = 0;
  for (int trial = 0; trial < 100; ++trial) {
    auto s = random_state(rng, 24, 9);
    bool settled = false;
    std::vector<long> settled_runs, late;
    for (int t = 0; t < 150; ++t) {
      if (!settled && asymptotic(s)) {
        settled = true;
        settled_runs = solitons(s);
        ++reached;
      }
      s = evolve_leftmost(s);
      if (settled) CHECK(solitons(s) == settled_runs);
      auto sorted = solitons(s);
      std::sort(sorted.begin(), sorted.end());
      if (t == 120) late = sorted;
      if (t > 120) CHECK(sorted == late);
    }
  }
  // Equal-length solitons may stay closer than the separation bound forever.
  CHECK(reached >= 50);

  // Speed 3 overtakes speed 1 and both survive.
  auto s = at({1, 2, 3, 8});
  for (int t = 0; t < 4; ++t) s = evolve_carrier(s);
  auto runs = solitons(s);
  std::sort(runs.begin(), runs.end());
  CHECK(runs == std::vector<long>{1, 3});
}

TEST_CASE("tropical swap for n = 2 is the carrier rule") {
  auto vars = loop::LoopVarArray::symbolic(2, 2);
  auto sites = rmatrix::symbolic_sites(vars);
  auto res = rmatrix::swap<RationalExpr>(sites[0], sites[1]);
  std::vector<crystal::TropExpr> out;
  for (const auto& v : res.x_out) out.push_back(crystal::tropicalize(v));
  for (const auto& v : res.y_out) out.push_back(crystal::tropicalize(v));

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> small(0, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const long a = small(rng), b = small(rng), d = small(rng);
    const long c = b + small(rng);  // the carrier has room for b balls
    // Carrier at position 1, site at position 2.
    auto x = encode_site(SiteCoord{c, d}, 1), y = encode_site(SiteCoord{a, b}, 2);
    crystal::TropPoint p;
    for (int j = 1; j <= 2; ++j) {
      p[VarId::make(1, j, 2)] = x[j - 1];
      p[VarId::make(2, j, 2)] = y[j - 1];
    }
    auto step = carrier_step(SiteCoord{a, b}, d);
    const long drop = std::min(a, d);
    auto new_site = encode_site(step.site, 1);
    auto new_carrier = encode_site(SiteCoord{c - b + drop, step.load}, 2);
    CHECK(out[0].eval(p) == new_site[0]);
    CHECK(out[1].eval(p) == new_site[1]);
    CHECK(out[2].eval(p) == new_carrier[0]);
    CHECK(out[3].eval(p) == new_carrier[1]);
  }
}

TEST_CASE("totals from the full-length e") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = random_state(rng, 16, 8);
    const long w = 16;
    CHECK(tropical_invariant(s, w, w, 1) == s.ball_count());
    CHECK(tropical_invariant(s, w, w, 2) == w - s.ball_count());
  }
}

TEST_CASE("e_1 detects the alternating pattern") {
  for (int len = 1; len <= 8; ++len)
    for (long mask = 0; mask < (1L << len); ++mask) {
      std::vector<int> boxes(len);
      bool even_full = true, odd_full = true;
      for (int i = 0; i < len; ++i) {
        boxes[i] = (mask >> i) & 1;
        // Box indices start at 0.
        if (boxes[i] != (i % 2 == 0 ? 1 : 0)) even_full = false;
        if (boxes[i] != (i % 2 == 1 ? 1 : 0)) odd_full = false;
      }
      BoxBallState s(boxes);
      CHECK(tropical_invariant(s, len, 1, 1) == (even_full ? 1 : 0));
      CHECK(tropical_invariant(s, len, 1, 2) == (odd_full ? 1 : 0));
    }
}

TEST_CASE("carrier-inclusive e's are integrals of motion") {
  auto q = calibrate_color_shift(6);
  REQUIRE(q.has_value());
  CHECK(*q == 0);

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    auto s = random_state(rng, 30, 12);
    const long window = s.extent() + s.ball_count() + 1;
    auto next = evolve_carrier(s, 0, window);
    for (int k = 1; k <= window + 1; ++k)
      for (long r = 1; r <= 2; ++r)
        CHECK(carrier_invariant(s, window, k, r, CarrierSide::Left) ==
              carrier_invariant(next, window, k, r + *q, CarrierSide::Right));
  }
}

TEST_CASE("semiring e agrees with the tropicalized symbolic e") {
  const int w = 6;
  auto vars = loop::LoopVarArray::symbolic(2, w);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = random_state(rng, w, w);
    auto x = encode_sites(s, w);
    crystal::TropPoint p;
    for (int i = 1; i <= w; ++i)
      for (int j = 1; j <= 2; ++j) p[VarId::make(i, j, 2)] = x[i - 1][j - 1];
    for (int k = 1; k <= w; ++k)
      for (long r = 1; r <= 2; ++r)
        CHECK(crystal::tropicalize(loop::loop_e(vars, k, r)).eval(p) ==
              tropical_invariant(s, w, k, r));
  }
}
