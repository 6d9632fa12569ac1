#pragma once

#include <optional>
#include <string>
#include <vector>

namespace lsym::boxball {

/// Boxes 0, 1, 2, ... holding at most one ball each; everything past the
/// stored vector is empty. Trailing empty boxes are trimmed.
class BoxBallState {
 public:
  BoxBallState() = default;
  explicit BoxBallState(std::vector<int> boxes);
  static BoxBallState from_positions(const std::vector<long>& balls);
  /// '.' empty, 'o' ball.
  static BoxBallState parse(const std::string& ascii);

  const std::vector<int>& boxes() const noexcept { return boxes_; }
  bool occupied(long i) const noexcept;
  std::vector<long> positions() const;
  long ball_count() const noexcept;
  /// One past the rightmost ball.
  long extent() const noexcept { return static_cast<long>(boxes_.size()); }
  /// Rendered over at least width boxes.
  std::string render(long width = 0) const;

  friend bool operator==(const BoxBallState&, const BoxBallState&) = default;

 private:
  std::vector<int> boxes_;
};

/// Moves each ball once, leftmost first, to the first empty box on its right.
BoxBallState evolve_leftmost(const BoxBallState& s);

/// A site with a free slots and b balls.
struct SiteCoord {
  long a = 0;
  long b = 0;
  friend bool operator==(const SiteCoord&, const SiteCoord&) = default;
};

struct CarrierStep {
  SiteCoord site;
  long load = 0;
};

/// {(a,b), (inf,d)} -> {(a - min(a,d) + b, min(a,d)), (inf, d - min(a,d) + b)}.
CarrierStep carrier_step(SiteCoord site, long load);

/// Sweeps a carrier over boxes 0..window-1. capacity 0 stands for a
/// capacity larger than the ball count; window 0 means extent + balls + 1.
/// Throws CarrierNotEmptied if balls are still carried after the window.
BoxBallState evolve_carrier(const BoxBallState& s, long capacity = 0, long window = 0);

/// Lengths of the maximal runs of balls, left to right.
std::vector<long> solitons(const BoxBallState& s);

/// n = 2 coordinates of a site at array position p: x^(j) = b when
/// j = p (mod 2), a otherwise. A carrier with free capacity c and load d is
/// the site (c, d).
std::vector<long> encode_site(SiteCoord site, long position);

/// Boxes 0..window-1 placed at positions first_position, first_position+1, ...
std::vector<std::vector<long>> encode_sites(const BoxBallState& s, long window,
                                            long first_position = 1);

/// Tropicalized e_k^(r) of the encoded window.
long tropical_invariant(const BoxBallState& s, long window, int k, long r);

enum class CarrierSide { Left, Right };

/// Tropicalized e_k^(r) of the window with an empty carrier of capacity
/// balls + 1 attached on one side (Left: carrier first, boxes at 2..window+1;
/// Right: boxes at 1..window, carrier last). One evolution step turns the
/// Left array of s into the Right array of the evolved state by swaps.
long carrier_invariant(const BoxBallState& s, long window, int k, long r, CarrierSide side,
                       long capacity = 0);

/// The color shift q for which carrier_invariant(s, Left, k, r) equals
/// carrier_invariant(evolve(s), Right, k, r + q) on every state with at most
/// max_boxes boxes. Empty if neither shift works.
std::optional<int> calibrate_color_shift(int max_boxes);

}  // namespace lsym::boxball
