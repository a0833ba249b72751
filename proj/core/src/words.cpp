#include "hypdom/words.hpp"

#include <cctype>

namespace hypdom {

Word::Word(Letter l, const Isometry& resolved)
    : letters_{l}, iso_(resolved) {}

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    w.letters_.push_back(it->inverted());
  }
  w.iso_ = iso_.inverse();
  return w;
}

Word operator*(const Word& u, const Word& v) {
  Word w;
  // Cancel across the seam: last of u against first of v, repeatedly.
  std::size_t i = u.letters_.size();
  std::size_t j = 0;
  while (i > 0 && j < v.letters_.size() &&
         u.letters_[i - 1].cancels(v.letters_[j])) {
    --i;
    ++j;
  }
  w.letters_.reserve(i + (v.letters_.size() - j));
  w.letters_.insert(w.letters_.end(), u.letters_.begin(),
                    u.letters_.begin() + static_cast<std::ptrdiff_t>(i));
  w.letters_.insert(w.letters_.end(),
                    v.letters_.begin() + static_cast<std::ptrdiff_t>(j),
                    v.letters_.end());
  w.iso_ = u.iso_ * v.iso_;
  return w;
}

std::string Word::str() const {
  if (letters_.empty()) return "id";
  std::string s;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) s += '.';
    s += letters_[k].inverse ? 'G' : 'g';
    s += std::to_string(letters_[k].index);
  }
  return s;
}

Word Word::parse(const std::string& text,
                 const std::vector<Isometry>& generators) {
  Word w;
  if (text == "id") return w;
  if (text.empty()) fail(ErrorKind::InvalidInput, "empty word string");
  std::size_t pos = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (c != 'g' && c != 'G') {
      fail(ErrorKind::InvalidInput, "bad word '" + text + "'");
    }
    bool inv = (c == 'G');
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
    if (start == pos) fail(ErrorKind::InvalidInput, "bad word '" + text + "'");
    int idx = std::stoi(text.substr(start, pos - start));
    if (idx < 0 || idx >= static_cast<int>(generators.size())) {
      fail(ErrorKind::InvalidInput,
           "word '" + text + "' names generator " + std::to_string(idx) +
               " of " + std::to_string(generators.size()));
    }
    Isometry g = inv ? generators[idx].inverse() : generators[idx];
    w = w * Word(Letter(idx, inv), g);
    if (pos < text.size()) {
      if (text[pos] != '.') {
        fail(ErrorKind::InvalidInput, "bad word '" + text + "'");
      }
      ++pos;
      if (pos == text.size()) {
        fail(ErrorKind::InvalidInput, "trailing '.' in word '" + text + "'");
      }
    }
  }
  return w;
}

}  // namespace hypdom
