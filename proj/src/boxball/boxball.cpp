#include "boxball/boxball.hpp"

#include <algorithm>

#include "common/error.hpp"
#include "crystal/trop.hpp"
#include "loopsym/loop_e.hpp"

namespace lsym::boxball {

BoxBallState::BoxBallState(std::vector<int> boxes) : boxes_(std::move(boxes)) {
  for (int b : boxes_) require(b == 0 || b == 1, "box holds 0 or 1 balls");
  while (!boxes_.empty() && boxes_.back() == 0) boxes_.pop_back();
}

BoxBallState BoxBallState::from_positions(const std::vector<long>& balls) {
  std::vector<int> boxes;
  for (long p : balls) {
    require(p >= 0, "ball position must be nonnegative");
    if (static_cast<long>(boxes.size()) <= p) boxes.resize(p + 1, 0);
    require(boxes[p] == 0, "two balls in box " + std::to_string(p));
    boxes[p] = 1;
  }
  return BoxBallState(std::move(boxes));
}

BoxBallState BoxBallState::parse(const std::string& ascii) {
  std::vector<int> boxes;
  for (char c : ascii) {
    if (c == '.' || c == '0') boxes.push_back(0);
    else if (c == 'o' || c == '1') boxes.push_back(1);
    else fail(ErrorCode::Parse, std::string("unexpected box character '") + c + "'");
  }
  return BoxBallState(std::move(boxes));
}

bool BoxBallState::occupied(long i) const noexcept {
  return i >= 0 && i < extent() && boxes_[i] == 1;
}

std::vector<long> BoxBallState::positions() const {
  std::vector<long> out;
  for (long i = 0; i < extent(); ++i)
    if (boxes_[i]) out.push_back(i);
  return out;
}

long BoxBallState::ball_count() const noexcept {
  return std::count(boxes_.begin(), boxes_.end(), 1);
}

std::string BoxBallState::render(long width) const {
  std::string out;
  for (long i = 0; i < std::max(width, extent()); ++i) out += occupied(i) ? 'o' : '.';
  return out;
}

BoxBallState evolve_leftmost(const BoxBallState& s) {
  const auto balls = s.positions();
  std::vector<int> boxes = s.boxes();
  boxes.resize(s.extent() + balls.size() + 1, 0);
  for (long p : balls) {
    long q = p + 1;
    while (boxes[q]) ++q;
    boxes[p] = 0;
    boxes[q] = 1;
  }
  return BoxBallState(std::move(boxes));
}

CarrierStep carrier_step(SiteCoord site, long load) {
  const long drop = std::min(site.a, load);
  return {SiteCoord{site.a - drop + site.b, drop}, load - drop + site.b};
}

BoxBallState evolve_carrier(const BoxBallState& s, long capacity, long window) {
  const long balls = s.ball_count();
  if (capacity == 0) capacity = balls + 1;
  if (window == 0) window = s.extent() + balls + 1;
  require(capacity > 0 && window > 0, "capacity and window must be positive");
  std::vector<int> out(window, 0);
  long load = 0;
  for (long i = 0; i < window; ++i) {
    const long b = s.occupied(i) ? 1 : 0;
    if (capacity > balls) {
      auto step = carrier_step(SiteCoord{1 - b, b}, load);
      out[i] = static_cast<int>(step.site.b);
      load = step.load;
    } else if (b == 1 && load < capacity) {
      ++load;
    } else if (b == 0 && load > 0) {
      --load;
      out[i] = 1;
    } else {
      out[i] = static_cast<int>(b);
    }
  }
  if (s.extent() > window)
    fail(ErrorCode::CarrierNotEmptied, "window does not cover every ball");
  if (load != 0)
    fail(ErrorCode::CarrierNotEmptied,
         "carrier still holds " + std::to_string(load) + " balls at the end of the window");
  return BoxBallState(std::move(out));
}

std::vector<long> solitons(const BoxBallState& s) {
  std::vector<long> out;
  long run = 0;
  for (long i = 0; i <= s.extent(); ++i) {
    if (s.occupied(i)) {
      ++run;
    } else if (run > 0) {
      out.push_back(run);
      run = 0;
    }
  }
  return out;
}

std::vector<long> encode_site(SiteCoord site, long position) {
  if (canonical_color(position, 2) == 1) return {site.b, site.a};
  return {site.a, site.b};
}

std::vector<std::vector<long>> encode_sites(const BoxBallState& s, long window,
                                            long first_position) {
  require(window >= s.extent(), "window must cover every ball");
  std::vector<std::vector<long>> x;
  for (long i = 0; i < window; ++i) {
    const long b = s.occupied(i) ? 1 : 0;
    x.push_back(encode_site(SiteCoord{1 - b, b}, first_position + i));
  }
  return x;
}

namespace {

long trop_e(const std::vector<std::vector<long>>& x, int k, long r) {
  std::vector<std::vector<crystal::Trop>> t;
  for (const auto& site : x) {
    t.emplace_back();
    for (long v : site) t.back().push_back(crystal::Trop{v, false});
  }
  auto v = loop::loop_e_eval(t, k, r);
  require(!v.inf, "k exceeds the number of sites");
  return v.v;
}

}  // namespace

long tropical_invariant(const BoxBallState& s, long window, int k, long r) {
  return trop_e(encode_sites(s, window), k, r);
}

long carrier_invariant(const BoxBallState& s, long window, int k, long r, CarrierSide side,
                       long capacity) {
  if (capacity == 0) capacity = s.ball_count() + 1;
  const SiteCoord carrier{capacity, 0};
  std::vector<std::vector<long>> x;
  if (side == CarrierSide::Left) {
    x.push_back(encode_site(carrier, 1));
    for (auto& site : encode_sites(s, window, 2)) x.push_back(std::move(site));
  } else {
    x = encode_sites(s, window, 1);
    x.push_back(encode_site(carrier, window + 1));
  }
  return trop_e(x, k, r);
}

std::optional<int> calibrate_color_shift(int max_boxes) {
  bool ok[2] = {true, true};
  for (int len = 0; len <= max_boxes; ++len)
    for (long mask = 0; mask < (1L << len); ++mask) {
      std::vector<int> boxes(len);
      for (int i = 0; i < len; ++i) boxes[i] = (mask >> i) & 1;
      BoxBallState s(boxes);
      const long window = len + s.ball_count() + 1;
      const long capacity = s.ball_count() + 1;
      auto next = evolve_carrier(s, capacity, window);
      for (int k = 1; k <= window + 1; ++k)
        for (long r = 1; r <= 2; ++r) {
          const long before = carrier_invariant(s, window, k, r, CarrierSide::Left, capacity);
          for (int q = 0; q < 2; ++q)
            if (ok[q] && before != carrier_invariant(next, window, k, r + q,
                                                     CarrierSide::Right, capacity))
              ok[q] = false;
        }
    }
  if (ok[0] == ok[1]) return std::nullopt;
  return ok[0] ? 0 : 1;
}

}  // namespace lsym::boxball
