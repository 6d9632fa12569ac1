#include "crystal/crystal.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "common/error.hpp"
#include "rmatrix/rmatrix.hpp"

namespace lsym::crystal {

OneRowTableau OneRowTableau::from_word(const std::vector<int>& letters, int n) {
  require(n >= 1, "n must be positive");
  OneRowTableau b{std::vector<long>(n, 0)};
  for (int a : letters) {
    require(a >= 1 && a <= n, "letter out of range: " + std::to_string(a));
    ++b.counts[a - 1];
  }
  return b;
}

long OneRowTableau::length() const noexcept {
  long s = 0;
  for (long c : counts) s += c;
  return s;
}

std::vector<int> OneRowTableau::word() const {
  std::vector<int> w;
  for (int i = 0; i < n(); ++i) w.insert(w.end(), counts[i], i + 1);
  return w;
}

std::string OneRowTableau::to_string() const {
  std::string out = "[";
  bool first = true;
  for (int a : word()) {
    if (!first) out += ",";
    out += std::to_string(a);
    first = false;
  }
  return out + "]";
}

std::vector<long> bar(const std::vector<long>& x) {
  if (x.empty()) return x;
  std::vector<long> out;
  out.push_back(x.back());
  out.insert(out.end(), x.begin(), x.end() - 1);
  return out;
}

std::vector<long> unbar(const std::vector<long>& xbar) {
  if (xbar.empty()) return xbar;
  std::vector<long> out(xbar.begin() + 1, xbar.end());
  out.push_back(xbar.front());
  return out;
}

namespace {

void check_pair(const OneRowTableau& b1, const OneRowTableau& b2) {
  require(b1.n() >= 1 && b1.n() == b2.n(), "tableaux must use the same alphabet");
  for (long c : b1.counts) require(c >= 0, "negative letter count");
  for (long c : b2.counts) require(c >= 0, "negative letter count");
}

}  // namespace

std::pair<OneRowTableau, OneRowTableau> comb_R_tropical(const OneRowTableau& b1,
                                                        const OneRowTableau& b2) {
  check_pair(b1, b2);
  auto lift = [](const std::vector<long>& v) {
    rmatrix::Site<Trop> s;
    for (long c : v) s.push_back(Trop{c, false});
    return s;
  };
  auto res = rmatrix::swap<Trop>(lift(b1.counts), lift(bar(b2.counts)));
  auto lower = [](const rmatrix::Site<Trop>& s) {
    std::vector<long> v;
    for (const auto& t : s) v.push_back(t.v);
    return v;
  };
  return {OneRowTableau{lower(res.x_out)}, OneRowTableau{unbar(lower(res.y_out))}};
}

Rows rsk_insert(const Word& w) {
  Rows t;
  for (int a : w) {
    int x = a;
    for (std::size_t r = 0;; ++r) {
      if (r == t.size()) {
        t.push_back({x});
        break;
      }
      auto it = std::upper_bound(t[r].begin(), t[r].end(), x);
      if (it == t[r].end()) {
        t[r].push_back(x);
        break;
      }
      std::swap(x, *it);
    }
  }
  return t;
}

Rows rectify(const OneRowTableau& b1, const OneRowTableau& b2) {
  Word w = b1.word();
  Word w2 = b2.word();
  w.insert(w.end(), w2.begin(), w2.end());
  return rsk_insert(w);
}

std::pair<OneRowTableau, OneRowTableau> comb_R_jdt(const OneRowTableau& b1,
                                                   const OneRowTableau& b2) {
  check_pair(b1, b2);
  const int n = b1.n();
  const Rows target = rectify(b1, b2);
  std::vector<long> total(n);
  for (int i = 0; i < n; ++i) total[i] = b1.counts[i] + b2.counts[i];

  std::vector<std::pair<OneRowTableau, OneRowTableau>> hits;
  std::vector<long> c1(n, 0);
  std::function<void(int, long)> rec = [&](int i, long left) {
    if (i == n) {
      if (left != 0) return;
      OneRowTableau y1{c1}, y2{std::vector<long>(n)};
      for (int k = 0; k < n; ++k) y2.counts[k] = total[k] - c1[k];
      if (rectify(y1, y2) == target) hits.emplace_back(y1, y2);
      return;
    }
    for (long c = 0; c <= std::min(left, total[i]); ++c) {
      c1[i] = c;
      rec(i + 1, left - c);
    }
    c1[i] = 0;
  };
  rec(0, b2.length());

  if (hits.size() != 1)
    fail(ErrorCode::SearchFailure, "expected one rectification match, found " +
                                       std::to_string(hits.size()));
  return hits.front();
}

Word reading_word(const Rows& t) {
  Word w;
  for (auto it = t.rbegin(); it != t.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
  return w;
}

namespace {

std::vector<long> letter_counts(const Word& w) {
  int mx = 0;
  for (int a : w) {
    require(a >= 1, "letters must be positive");
    mx = std::max(mx, a);
  }
  std::vector<long> c(mx, 0);
  for (int a : w) ++c[a - 1];
  return c;
}

bool is_partition_weight(const std::vector<long>& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) return false;
    if (i > 0 && c[i] > c[i - 1]) return false;
  }
  return true;
}

}  // namespace

long cocharge(const Word& w, IndexRule rule) {
  if (!is_partition_weight(letter_counts(w)))
    fail(ErrorCode::NonPartitionWeight, "word weight is not a partition");

  // Each pass picks one 1, one 2, ... starting right of the word and moving
  // left, wrapping to the right end when needed.
  Word rest = w;
  long total = 0;
  while (!rest.empty()) {
    const int top = *std::max_element(rest.begin(), rest.end());
    std::vector<bool> used(rest.size(), false);
    long pos = static_cast<long>(rest.size());
    long index = 0;
    for (int letter = 1; letter <= top; ++letter) {
      long found = -1;
      for (long p = pos - 1; p >= 0; --p)
        if (rest[p] == letter) {
          found = p;
          break;
        }
      const bool left = found >= 0;
      if (letter > 1 && left == (rule == IndexRule::LeftRaises)) ++index;
      if (!left) {
        for (long p = static_cast<long>(rest.size()) - 1; p >= 0; --p)
          if (rest[p] == letter) {
            found = p;
            break;
          }
      }
      total += index;
      used[found] = true;
      pos = found;
    }
    Word next;
    for (std::size_t p = 0; p < rest.size(); ++p)
      if (!used[p]) next.push_back(rest[p]);
    rest = std::move(next);
  }
  return total;
}

long weight_n(const Word& w) {
  auto c = letter_counts(w);
  long s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) s += static_cast<long>(i) * c[i];
  return s;
}

namespace {

// a[i-1][j-1] = number of letters i in row j.
std::vector<std::vector<long>> row_letter_counts(const loop::Tableau& t, int m, int n) {
  std::vector<std::vector<long>> a(m, std::vector<long>(n, 0));
  const auto& rows = t.rows();
  require(static_cast<int>(rows.size()) <= n, "tableau has more rows than colors");
  for (std::size_t j = 0; j < rows.size(); ++j)
    for (int v : rows[j]) ++a[v - 1][j];
  return a;
}

int weight_parts(const loop::Tableau& t) {
  require(t.shape().is_straight() && t.is_semistandard(),
          "expected a straight semistandard tableau");
  auto w = t.weight();
  std::vector<long> wl(w.begin(), w.end());
  if (!is_partition_weight(wl))
    fail(ErrorCode::NonPartitionWeight, "tableau weight is not a partition");
  return static_cast<int>(w.size());
}

}  // namespace

std::vector<OneRowTableau> b_of_T(const loop::Tableau& t, int n) {
  const int m = weight_parts(t);
  auto a = row_letter_counts(t, m, n);
  std::vector<OneRowTableau> out;
  for (int i = 0; i < m; ++i) out.push_back(OneRowTableau{a[i]});
  return out;
}

std::vector<std::vector<long>> energy_variables(const loop::Tableau& t, int n,
                                                FactorOrder order) {
  const int m = weight_parts(t);
  if (n == 0) n = m;
  require(n >= 1, "n must be positive");
  auto a = row_letter_counts(t, m, n);
  std::vector<std::vector<long>> x(m, std::vector<long>(n));
  for (int i = 1; i <= m; ++i) {
    const int k = order == FactorOrder::AsGiven ? i : m + 1 - i;
    for (int j = 1; j <= n; ++j) x[i - 1][j - 1] = a[k - 1][canonical_color(j + 1 - i, n) - 1];
  }
  return x;
}

EnergyResult energy(const loop::Tableau& t, int n, FactorOrder order) {
  auto x = energy_variables(t, n, order);
  const int m = static_cast<int>(x.size());
  n = static_cast<int>(x.front().size());

  loop::SkewShape shape(loop::Partition::staircase(n - 1).scaled(m - 1));
  EnergyResult res;
  if (shape.size() == 0) {
    res.minimizers.emplace_back(shape, std::vector<std::vector<int>>{});
    return res;
  }
  res.value = std::numeric_limits<long>::max();
  loop::for_each_ssyt(shape, m, [&](const loop::Tableau& s) {
    long sum = 0;
    for (auto [r, c] : shape.cells())
      sum += x[s.at(r, c) - 1][canonical_color(loop::content(r, c), n) - 1];
    if (sum < res.value) {
      res.value = sum;
      res.minimizers.clear();
    }
    if (sum == res.value) res.minimizers.push_back(s);
  });
  if (res.minimizers.empty())
    fail(ErrorCode::InvalidArgument, "no tableau of shape " + shape.to_string() +
                                         " with entries <= " + std::to_string(m) +
                                         "; take n <= m + 1");
  return res;
}

}  // namespace lsym::crystal
