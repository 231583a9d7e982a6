#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace ncreal {

// A letter of the free *-algebra on x1..xg and their adjoints.  Letters pack
// into one byte, 2*(var-1) + (starred ? 1 : 0), so byte order agrees with the
// canonical letter order x1 < x1* < x2 < x2* < ...
struct Letter {
  int var = 1; // 1-based variable index
  bool starred = false;
};

inline unsigned char letter_code(const Letter& l) {
  return static_cast<unsigned char>(2 * (l.var - 1) + (l.starred ? 1 : 0));
}
inline Letter letter_from_code(unsigned char c) {
  return Letter{static_cast<int>(c / 2) + 1, (c & 1) != 0};
}

// A word over that alphabet; the empty word is the algebra unit.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters) {
    codes_.reserve(letters.size());
    for (const Letter& l : letters) codes_.push_back(static_cast<char>(letter_code(l)));
  }
  Word(std::initializer_list<Letter> letters) : Word(std::vector<Letter>(letters)) {}

  static Word one() { return Word(); }
  static Word var(int i, bool starred = false) { return Word({Letter{i, starred}}); }

  std::size_t length() const { return codes_.size(); }
  bool empty() const { return codes_.empty(); }
  Letter at(std::size_t i) const { return letter_from_code(static_cast<unsigned char>(codes_[i])); }

  Word adjoint() const {
    Word w;
    w.codes_.reserve(codes_.size());
    for (auto it = codes_.rbegin(); it != codes_.rend(); ++it)
      w.codes_.push_back(static_cast<char>(static_cast<unsigned char>(*it) ^ 1u));
    return w;
  }

  friend Word operator*(const Word& a, const Word& b) {
    Word w;
    w.codes_ = a.codes_ + b.codes_;
    return w;
  }

  // Prefix of length n and the remaining suffix.
  Word prefix(std::size_t n) const { Word w; w.codes_ = codes_.substr(0, n); return w; }
  Word suffix_from(std::size_t n) const { Word w; w.codes_ = codes_.substr(n); return w; }

  int max_var() const {
    int g = 0;
    for (char c : codes_) g = std::max(g, static_cast<int>(static_cast<unsigned char>(c) / 2) + 1);
    return g;
  }

  bool operator==(const Word& o) const { return codes_ == o.codes_; }
  bool operator!=(const Word& o) const { return codes_ != o.codes_; }

  // Canonical order: graded by length, then lexicographic on letter codes.
  bool operator<(const Word& o) const {
    if (codes_.size() != o.codes_.size()) return codes_.size() < o.codes_.size();
    return codes_ < o.codes_;
  }

  const std::string& raw() const { return codes_; }

 private:
  std::string codes_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const { return std::hash<std::string>()(w.raw()); }
};

} // namespace ncreal
