#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace frl {

/// Bigraded Betti numbers β^{-i,2j}, indexed here by the pair (i, j).
/// Only nonzero entries are stored.
class BigradedBettiTable {
 public:
  BigradedBettiTable() = default;
  BigradedBettiTable(int m, int n) : m_(m), n_(n) {}

  int m() const { return m_; }
  int n() const { return n_; }

  std::int64_t operator()(int i, int j) const;
  void add(int i, int j, std::int64_t value);
  const std::map<std::pair<int, int>, std::int64_t>& entries() const { return entries_; }

  /// β^{-i} = Σ_j β^{-i,2j}.
  std::int64_t row_total(int i) const;
  /// Largest i with a nonzero entry; -1 for an empty table.
  int max_homological_degree() const;
  /// b^k = Σ_{2j-i=k} β^{-i,2j} for k = 0 .. max total degree.
  std::vector<std::int64_t> total_degree_vector() const;

  friend bool operator==(const BigradedBettiTable&, const BigradedBettiTable&) = default;

 private:
  int m_ = 0;
  int n_ = 0;
  std::map<std::pair<int, int>, std::int64_t> entries_;
};

/// {"m":…, "n":…, "entries":[{"i":…, "j2":…, "beta":…}]} with j2 = 2j.
std::string to_json(const BigradedBettiTable& table);
BigradedBettiTable betti_table_from_json(const std::string& text);

/// Aligned grid: one row per -i, one column per 2j.
std::string to_text(const BigradedBettiTable& table);

/// Human-readable list of differing entries; empty when equal.
std::string describe_difference(const BigradedBettiTable& a, const BigradedBettiTable& b);

}  // namespace frl
