#pragma once

#include <string>
#include <utility>
#include <vector>

namespace lsym::loop {

/// Weakly decreasing sequence of nonnegative integers; trailing zeros are
/// dropped on construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  /// i is 1-based; parts beyond the length are zero.
  int part(int i) const noexcept;
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  Partition conjugate() const;
  bool contains(const Partition& other) const noexcept;

  /// (m, m-1, ..., 1, 0).
  static Partition staircase(int m);
  Partition scaled(int factor) const;

  std::string to_string() const;
  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// All partitions of size total with at most max_parts parts (0 = unlimited)
/// and largest part at most max_part (0 = unlimited), in reverse lex order.
std::vector<Partition> partitions_of(int total, int max_parts = 0, int max_part = 0);

using Cell = std::pair<int, int>;  // (row, column), both 1-based

class SkewShape {
 public:
  SkewShape() = default;
  explicit SkewShape(Partition outer, Partition inner = {});

  const Partition& outer() const noexcept { return outer_; }
  const Partition& inner() const noexcept { return inner_; }
  int size() const noexcept { return outer_.size() - inner_.size(); }
  bool contains(int row, int col) const noexcept;
  /// Row-major, left to right.
  std::vector<Cell> cells() const;
  bool is_straight() const noexcept { return inner_.empty(); }
  /// Every skew shape fitting in rows x cols.
  static std::vector<SkewShape> all_within(int rows, int cols);

  std::string to_string() const;
  friend bool operator==(const SkewShape&, const SkewShape&) = default;

 private:
  Partition outer_;
  Partition inner_;
};

/// Content in the loop convention: row minus column.
inline int content(int row, int col) noexcept { return row - col; }

}  // namespace lsym::loop
