#pragma once

#include <functional>
#include <vector>

#include "loopsym/partition.hpp"

namespace lsym::loop {

/// A filling of a skew shape. rows[i] holds the entries of row i+1 from
/// column inner_{i+1}+1 through outer_{i+1}.
class Tableau {
 public:
  Tableau() = default;
  Tableau(SkewShape shape, std::vector<std::vector<int>> rows);
  /// Straight shape read off the row lengths.
  static Tableau from_rows(std::vector<std::vector<int>> rows);

  const SkewShape& shape() const noexcept { return shape_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  /// 1-based cell inside the shape.
  int at(int row, int col) const;
  bool is_semistandard() const;
  int max_entry() const noexcept;
  /// weight[v-1] = number of entries equal to v, for v = 1..max_entry().
  std::vector<int> weight() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

/// Calls visit once for every semistandard tableau of the given shape with
/// entries in 1..max_entry (rows weakly increasing, columns strictly).
void for_each_ssyt(const SkewShape& shape, int max_entry,
                   const std::function<void(const Tableau&)>& visit);

std::vector<Tableau> ssyt_enumerate(const SkewShape& shape, int max_entry);

}  // namespace lsym::loop
