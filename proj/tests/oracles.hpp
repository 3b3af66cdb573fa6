#pragma once

// Test-only reference computations. None of these call into the library's
// product, rewriting or matching code.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace ladder::testing {

// Normal form of a word over {'a', 'A'} ('A' = creator) by naive rewriting:
// any "aA" becomes "Aa" + "". Returns (creators, annihilators) -> count.
inline std::map<std::pair<int, int>, long long> brute_force_normal_order(const std::string& word) {
  std::map<std::pair<int, int>, long long> result;
  std::vector<std::pair<std::string, long long>> stack{{word, 1}};
  while (!stack.empty()) {
    auto [w, c] = stack.back();
    stack.pop_back();
    const auto pos = w.find("aA");
    if (pos == std::string::npos) {
      int creators = 0;
      for (char ch : w) creators += ch == 'A' ? 1 : 0;
      result[{creators, static_cast<int>(w.size()) - creators}] += c;
      continue;
    }
    std::string swapped = w;
    swapped[pos] = 'A';
    swapped[pos + 1] = 'a';
    stack.emplace_back(swapped, c);
    stack.emplace_back(w.substr(0, pos) + w.substr(pos + 2), c);
  }
  return result;
}

// Number of partial injections from a grays into b whites:
// f(a, b) = f(a-1, b) + b * f(a-1, b-1).
inline long long count_partial_matchings(int grays, int whites) {
  if (grays == 0 || whites == 0) return 1;
  return count_partial_matchings(grays - 1, whites) +
         whites * count_partial_matchings(grays - 1, whites - 1);
}

// Number of partial matchings with exactly `joins` joins.
inline long long count_matchings_of_size(int grays, int whites, int joins) {
  if (joins == 0) return 1;
  if (grays == 0 || whites == 0) return 0;
  return count_matchings_of_size(grays - 1, whites, joins) +
         whites * count_matchings_of_size(grays - 1, whites - 1, joins - 1);
}

// Stirling numbers of the second kind via S(n,k) = k S(n-1,k) + S(n-1,k-1).
inline std::vector<std::vector<long long>> stirling2_table(int max_n) {
  std::vector<std::vector<long long>> s(max_n + 1, std::vector<long long>(max_n + 1, 0));
  s[0][0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k) s[n][k] = k * s[n - 1][k] + s[n - 1][k - 1];
  }
  return s;
}

inline std::string word_text(int annihilators, int creators) {
  return std::string(annihilators, 'a') + std::string(creators, 'A');
}

}  // namespace ladder::testing
