#include "ladder/word.hpp"

#include <stdexcept>

namespace ladder {

bool Word::is_normally_ordered() const {
  bool seen_annihilator = false;
  for (Letter l : letters) {
    if (l == Letter::annihilator) {
      seen_annihilator = true;
    } else if (seen_annihilator) {
      return false;
    }
  }
  return true;
}

Word Word::parse(std::string_view text) {
  static constexpr std::string_view kDagger = "\xE2\x80\xA0";  // U+2020
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '(' || ch == ')') {
      ++i;
      continue;
    }
    if (ch != 'a') {
      throw std::invalid_argument("unexpected character in word at position " + std::to_string(i));
    }
    ++i;
    if (i < text.size() && text[i] == 'd') {
      w.letters.push_back(Letter::creator);
      ++i;
    } else if (text.substr(i, kDagger.size()) == kDagger) {
      w.letters.push_back(Letter::creator);
      i += kDagger.size();
    } else {
      w.letters.push_back(Letter::annihilator);
    }
  }
  return w;
}

Word concat(const Word& x, const Word& y) {
  Word out = x;
  out.letters.insert(out.letters.end(), y.letters.begin(), y.letters.end());
  return out;
}

Word repeat(const Word& x, std::uint32_t n) {
  Word out;
  out.letters.reserve(x.size() * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    out.letters.insert(out.letters.end(), x.letters.begin(), x.letters.end());
  }
  return out;
}

Word annihilators_then_creators(std::uint32_t s, std::uint32_t k) {
  Word out;
  out.letters.assign(s, Letter::annihilator);
  out.letters.insert(out.letters.end(), k, Letter::creator);
  return out;
}

Word creators_then_annihilators(std::uint32_t k, std::uint32_t s) {
  Word out;
  out.letters.assign(k, Letter::creator);
  out.letters.insert(out.letters.end(), s, Letter::annihilator);
  return out;
}

std::string to_string(const Word& w) {
  std::string out;
  for (Letter l : w.letters) {
    if (!out.empty()) out += ' ';
    out += l == Letter::creator ? "ad" : "a";
  }
  return out;
}

}  // namespace ladder
