#include "frl/betti_table.hpp"

#include <algorithm>
#include <iomanip>
#include <set>
#include <sstream>

#include "frl/types.hpp"
#include "json.hpp"

namespace frl {

std::int64_t BigradedBettiTable::operator()(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BigradedBettiTable::add(int i, int j, std::int64_t value) {
  if (value == 0) return;
  auto& slot = entries_[{i, j}];
  slot += value;
  if (slot == 0) entries_.erase({i, j});
}

std::int64_t BigradedBettiTable::row_total(int i) const {
  std::int64_t total = 0;
  for (const auto& [key, value] : entries_) {
    if (key.first == i) total += value;
  }
  return total;
}

int BigradedBettiTable::max_homological_degree() const {
  int out = -1;
  for (const auto& [key, value] : entries_) out = std::max(out, key.first);
  return out;
}

std::vector<std::int64_t> BigradedBettiTable::total_degree_vector() const {
  int top = -1;
  for (const auto& [key, value] : entries_) top = std::max(top, 2 * key.second - key.first);
  std::vector<std::int64_t> out(top + 1, 0);
  for (const auto& [key, value] : entries_) out[2 * key.second - key.first] += value;
  return out;
}

std::string to_json(const BigradedBettiTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, value] : table.entries()) {
    entries.push_back({{"i", key.first}, {"j2", 2 * key.second}, {"beta", value}});
  }
  nlohmann::json doc;
  doc["m"] = table.m();
  doc["n"] = table.n();
  doc["entries"] = std::move(entries);
  return doc.dump();
}

BigradedBettiTable betti_table_from_json(const std::string& text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    BigradedBettiTable table(doc.at("m").get<int>(), doc.at("n").get<int>());
    for (const auto& e : doc.at("entries")) {
      const int j2 = e.at("j2").get<int>();
      if (j2 % 2 != 0) throw ParseError("Betti JSON: odd j2");
      table.add(e.at("i").get<int>(), j2 / 2, e.at("beta").get<std::int64_t>());
    }
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("Betti JSON: ") + e.what());
  }
}

std::string to_text(const BigradedBettiTable& table) {
  std::set<int> rows;
  std::set<int> cols;
  for (const auto& [key, value] : table.entries()) {
    rows.insert(key.first);
    cols.insert(key.second);
  }
  std::ostringstream out;
  constexpr int width = 6;
  out << std::setw(width) << "-i\\2j";
  for (int j : cols) out << std::setw(width) << 2 * j;
  out << '\n';
  for (int i : rows) {
    out << std::setw(width) << -i;
    for (int j : cols) {
      const auto value = table(i, j);
      if (value == 0) {
        out << std::setw(width) << ".";
      } else {
        out << std::setw(width) << value;
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string describe_difference(const BigradedBettiTable& a, const BigradedBettiTable& b) {
  std::set<std::pair<int, int>> keys;
  for (const auto& [key, value] : a.entries()) keys.insert(key);
  for (const auto& [key, value] : b.entries()) keys.insert(key);
  std::ostringstream out;
  for (const auto& [i, j] : keys) {
    if (a(i, j) != b(i, j)) {
      out << "beta^{-" << i << "," << 2 * j << "}: " << a(i, j) << " vs " << b(i, j) << "; ";
    }
  }
  if (a.m() != b.m() || a.n() != b.n()) out << "(m, n) differ; ";
  return out.str();
}

}  // namespace frl
