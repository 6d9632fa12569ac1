#include "loopsym/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "common/error.hpp"

namespace lsym::loop {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    require(parts_[i] >= 0, "partition parts must be nonnegative");
    require(i == 0 || parts_[i] <= parts_[i - 1],
            "partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::part(int i) const noexcept {
  return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
}

int Partition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  std::vector<int> c(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[j];
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& other) const noexcept {
  if (other.length() > length()) return false;
  for (int i = 1; i <= other.length(); ++i)
    if (other.part(i) > part(i)) return false;
  return true;
}

Partition Partition::staircase(int m) {
  require(m >= 0, "staircase index must be nonnegative");
  std::vector<int> p;
  for (int i = m; i >= 0; --i) p.push_back(i);
  return Partition(std::move(p));
}

Partition Partition::scaled(int factor) const {
  require(factor >= 0, "scale factor must be nonnegative");
  std::vector<int> p = parts_;
  for (auto& x : p) x *= factor;
  return Partition(std::move(p));
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

std::vector<Partition> partitions_of(int total, int max_parts, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    if (max_parts > 0 && static_cast<int>(cur.size()) >= max_parts) return;
    for (int p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  rec(total, max_part > 0 ? max_part : total);
  return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  require(outer_.contains(inner_), "inner partition must fit inside outer");
}

bool SkewShape::contains(int row, int col) const noexcept {
  return row >= 1 && col > inner_.part(row) && col <= outer_.part(row);
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  for (int i = 1; i <= outer_.length(); ++i)
    for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) out.emplace_back(i, j);
  return out;
}

std::vector<SkewShape> SkewShape::all_within(int rows, int cols) {
  std::vector<Partition> fits;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int cap) {
    fits.emplace_back(cur);
    if (static_cast<int>(cur.size()) == rows) return;
    for (int p = 1; p <= cap; ++p) {
      cur.push_back(p);
      rec(p);
      cur.pop_back();
    }
  };
  rec(cols);
  std::vector<SkewShape> out;
  for (const auto& o : fits)
    for (const auto& i : fits)
      if (o.contains(i)) out.emplace_back(o, i);
  return out;
}

std::string SkewShape::to_string() const {
  if (inner_.empty()) return outer_.to_string();
  return outer_.to_string() + "/" + inner_.to_string();
}

}  // namespace lsym::loop
