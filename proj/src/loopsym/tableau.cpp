#include "loopsym/tableau.hpp"

#include <algorithm>

#include "common/error.hpp"

namespace lsym::loop {

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  const auto& out = shape_.outer();
  const auto& in = shape_.inner();
  while (static_cast<int>(rows_.size()) > out.length() && rows_.back().empty())
    rows_.pop_back();
  require(static_cast<int>(rows_.size()) == out.length(),
          "tableau row count does not match its shape");
  for (int i = 1; i <= out.length(); ++i) {
    require(static_cast<int>(rows_[i - 1].size()) == out.part(i) - in.part(i),
            "tableau row length does not match its shape");
    for (int v : rows_[i - 1]) require(v >= 1, "tableau entries must be positive");
  }
}

Tableau Tableau::from_rows(std::vector<std::vector<int>> rows) {
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  std::vector<int> lens;
  for (const auto& r : rows) lens.push_back(static_cast<int>(r.size()));
  for (std::size_t i = 1; i < lens.size(); ++i)
    require(lens[i] <= lens[i - 1], "row lengths must be weakly decreasing");
  return Tableau(SkewShape(Partition(lens)), std::move(rows));
}

int Tableau::at(int row, int col) const {
  require(shape_.contains(row, col), "cell outside tableau shape");
  return rows_[row - 1][col - shape_.inner().part(row) - 1];
}

bool Tableau::is_semistandard() const {
  for (auto [i, j] : shape_.cells()) {
    int v = at(i, j);
    if (shape_.contains(i, j - 1) && at(i, j - 1) > v) return false;
    if (shape_.contains(i - 1, j) && at(i - 1, j) >= v) return false;
  }
  return true;
}

int Tableau::max_entry() const noexcept {
  int mx = 0;
  for (const auto& r : rows_)
    for (int v : r) mx = std::max(mx, v);
  return mx;
}

std::vector<int> Tableau::weight() const {
  std::vector<int> w(max_entry(), 0);
  for (const auto& r : rows_)
    for (int v : r) ++w[v - 1];
  return w;
}

void for_each_ssyt(const SkewShape& shape, int max_entry,
                   const std::function<void(const Tableau&)>& visit) {
  require(max_entry >= 0, "max entry must be nonnegative");
  const auto cells = shape.cells();
  const auto& outer = shape.outer();
  const auto& inner = shape.inner();
  std::vector<std::vector<int>> rows(outer.length());
  for (int i = 1; i <= outer.length(); ++i)
    rows[i - 1].assign(outer.part(i) - inner.part(i), 0);
  auto value = [&](int i, int j) -> int& { return rows[i - 1][j - inner.part(i) - 1]; };
  // Cells strictly below (i, j) in the same column bound its entry from above.
  std::vector<int> below(cells.size(), 0);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    auto [i, j] = cells[c];
    int k = i + 1;
    while (shape.contains(k, j)) ++k;
    below[c] = k - i - 1;
  }

  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (c == cells.size()) {
      visit(Tableau(shape, rows));
      return;
    }
    auto [i, j] = cells[c];
    int lo = 1;
    if (shape.contains(i, j - 1)) lo = std::max(lo, value(i, j - 1));
    if (shape.contains(i - 1, j)) lo = std::max(lo, value(i - 1, j) + 1);
    int hi = max_entry - below[c];
    for (int v = lo; v <= hi; ++v) {
      value(i, j) = v;
      rec(c + 1);
    }
  };
  rec(0);
}

std::vector<Tableau> ssyt_enumerate(const SkewShape& shape, int max_entry) {
  std::vector<Tableau> out;
  for_each_ssyt(shape, max_entry, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

}  // namespace lsym::loop
