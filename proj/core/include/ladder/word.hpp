#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ladder {

enum class Letter : std::uint8_t { annihilator, creator };

/// A word in the free algebra on {a, ad}. The empty word is the identity.
struct Word {
  std::vector<Letter> letters;

  bool empty() const { return letters.empty(); }
  std::size_t size() const { return letters.size(); }

  /// True when no annihilator stands left of a creator.
  bool is_normally_ordered() const;

  /// Reads whitespace- or parenthesis-separated letters: "a", "ad" or "a†".
  /// "(ad a)(ad a)" is accepted; parentheses are ignored. Throws
  /// std::invalid_argument on anything else.
  static Word parse(std::string_view text);

  friend auto operator<=>(const Word&, const Word&) = default;
};

Word concat(const Word& x, const Word& y);
/// x repeated n times.
Word repeat(const Word& x, std::uint32_t n);
/// a^s ad^k
Word annihilators_then_creators(std::uint32_t s, std::uint32_t k);
/// ad^k a^s
Word creators_then_annihilators(std::uint32_t k, std::uint32_t s);

/// Space-separated "a"/"ad" tokens; "" for the empty word.
std::string to_string(const Word& w);

}  // namespace ladder
