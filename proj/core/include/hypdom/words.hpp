#pragma once

// Words in the side-pairing generators of the input polygon. A word carries
// both its letter sequence (for reporting and determinism) and its resolved
// isometry (for geometry), kept in sync under composition and inversion.
//
// Serialized form: letters joined by '.', lower case for a generator and
// upper case for its inverse, e.g. "g2.G0.g2"; the empty word prints as "id".

#include <cstdint>
#include <string>
#include <vector>

#include "hypdom/geometry.hpp"

namespace hypdom {

struct Letter {
  std::uint16_t index = 0;
  bool inverse = false;

  Letter() = default;
  Letter(int idx, bool inv = false)
      : index(static_cast<std::uint16_t>(idx)), inverse(inv) {}

  Letter inverted() const { return Letter(index, !inverse); }
  bool cancels(const Letter& o) const {
    return index == o.index && inverse != o.inverse;
  }
  bool operator==(const Letter& o) const {
    return index == o.index && inverse == o.inverse;
  }
};

class Word {
 public:
  Word() = default;  // identity
  // Single-letter word; `resolved` must be the isometry the letter denotes
  // (already inverted when the letter is).
  Word(Letter l, const Isometry& resolved);

  const std::vector<Letter>& letters() const { return letters_; }
  const Isometry& iso() const { return iso_; }
  bool empty() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }

  DiskPoint apply(DiskPoint p) const { return iso_.apply(p); }
  Word inverse() const;

  // Concatenation with free cancellation at the seam; both inputs are assumed
  // reduced, so the result is reduced too. Matrices multiply regardless.
  friend Word operator*(const Word& u, const Word& v);

  bool same_letters(const Word& o) const { return letters_ == o.letters_; }

  std::string str() const;
  // Inverse of str(); needs the generator list to rebuild the matrix.
  static Word parse(const std::string& text,
                    const std::vector<Isometry>& generators);

 private:
  std::vector<Letter> letters_;
  Isometry iso_;
};

}  // namespace hypdom
