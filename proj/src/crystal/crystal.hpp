#pragma once

#include <string>
#include <vector>

#include "crystal/trop.hpp"
#include "loopsym/tableau.hpp"

namespace lsym::crystal {

/// Single-row tableau over letters 1..n, stored as letter counts.
struct OneRowTableau {
  std::vector<long> counts;  // counts[i-1] = number of letters i

  static OneRowTableau from_word(const std::vector<int>& letters, int n);
  int n() const noexcept { return static_cast<int>(counts.size()); }
  long length() const noexcept;
  std::vector<int> word() const;
  std::string to_string() const;
  friend bool operator==(const OneRowTableau&, const OneRowTableau&) = default;
};

using Word = std::vector<int>;
using Rows = std::vector<std::vector<int>>;

/// (x^(n), x^(1), ..., x^(n-1)).
std::vector<long> bar(const std::vector<long>& x);
std::vector<long> unbar(const std::vector<long>& xbar);

/// Combinatorial R on b1 (x) b2 via the min-plus swap of (x1, bar x2).
std::pair<OneRowTableau, OneRowTableau> comb_R_tropical(const OneRowTableau& b1,
                                                        const OneRowTableau& b2);

/// Row-insertion tableau of a word.
Rows rsk_insert(const Word& w);
/// Rectification of b1 (x) b2 with b1 the lower-left row.
Rows rectify(const OneRowTableau& b1, const OneRowTableau& b2);

/// Combinatorial R by searching for the unique pair of rows of swapped
/// lengths with the same rectification. Throws SearchFailure otherwise.
std::pair<OneRowTableau, OneRowTableau> comb_R_jdt(const OneRowTableau& b1,
                                                   const OneRowTableau& b2);

/// Row reading word, bottom row first.
Word reading_word(const Rows& t);

/// How the index moves when the next underlined letter i sits to the left
/// of the underlined i-1. LeftKeeps leaves it unchanged and is
/// n(mu) - cc_LS(u); LeftRaises adds one and is the Lascoux-Schutzenberger
/// cocharge itself.
enum class IndexRule { LeftKeeps, LeftRaises };

/// Throws NonPartitionWeight if the weight is not a partition.
long cocharge(const Word& w, IndexRule rule = IndexRule::LeftKeeps);
/// n(mu) = sum (i-1) mu_i for the weight mu of w.
long weight_n(const Word& w);

/// b_i holds a_i^(j) letters j, where a_i^(j) counts the letters i in row j.
/// The weight must be a partition; m is its number of parts.
std::vector<OneRowTableau> b_of_T(const loop::Tableau& t, int n);

struct EnergyResult {
  long value = 0;
  std::vector<loop::Tableau> minimizers;
};

/// Which tensor factor feeds the variable x_i.
enum class FactorOrder { AsGiven, Reversed };

/// x[i-1][j-1] = x_i^(j) for the substitution below.
std::vector<std::vector<long>> energy_variables(const loop::Tableau& t, int n = 0,
                                                FactorOrder order = FactorOrder::AsGiven);

/// min over SSYT S of shape (m-1) * (n-1, ..., 1, 0), entries <= m, of
/// sum_s x_{S(s)}^(c(s)) with x_i^(j) = a_k^(j+1-i), where k = i for
/// AsGiven and k = m+1-i for Reversed. n = 0 means n = m.
EnergyResult energy(const loop::Tableau& t, int n = 0,
                    FactorOrder order = FactorOrder::AsGiven);

}  // namespace lsym::crystal
