#pragma once

#include <array>
#include <string>
#include <vector>

#include "ultrapar/triangle.hpp"

namespace ultrapar {

struct Syllable {
  int gen;  // 1, 2 or 3
  int exp;
  bool operator==(const Syllable&) const = default;
  auto operator<=>(const Syllable&) const = default;
};

// Run-length encoded word; iota_{a1 a2 ...} has a1 as the first syllable.
typedef std::vector<Syllable> Word;
typedef std::array<int, 3> Orders;

Orders orders_of(const TriangleConfig& c);

Word reduce_word(const Word& w, const Orders& orders);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, int k);
int word_length(const Word& w);  // number of syllables

// Products are accumulated in extended precision; long words grow and cancel.
HMatrixd eval_word(const Word& w, const TriangleConfig& c);
HMatrix<long double> eval_word_x(const Word& w, const TriangleConfig& c);

// Reduced words over `gens` with at most max_len syllables, ordered by
// length and then lexicographically on (generator, exponent).
std::vector<Word> enumerate_words(const std::vector<int>& gens, int max_len,
                                  const Orders& orders);

// "21212", "2^2 1", "2^-1"; "Id" or "" is the empty word.
Word parse_word(const std::string& s);
std::string format_word(const Word& w);

}  // namespace ultrapar
