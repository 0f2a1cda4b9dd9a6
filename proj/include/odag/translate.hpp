#pragma once

// Tietze translation from the Artin presentation <a,b | am(a,b) = am(b,a)>
// (am = alternating product of length m) into the torus-knot presentation
// <x,y | x^2 = y^m>: with x = am(a,b) and y = ab one solves
// a = y^{-k} x and b = x^{-1} y^{k+1}, so ab maps to y and the alternating
// products of length m both map to x.

#include <string>
#include <string_view>

#include "odag/words.hpp"

namespace odag {

// Word over {a, b}: same grammar as parse_word, with letters a A b B.
inline Word translate_presentation(std::string_view s, const GroupParams& p) {
  long long k = p.k();
  Word out;
  auto emit = [&](char letter, long long e) {
    // a^e and b^e expand syllable-wise; negative powers reverse the pair.
    for (long long i = 0; i < (e < 0 ? -e : e); ++i) {
      if (letter == 'a') {
        if (e > 0) {
          out.push(Gen::Y, -k);
          out.push(Gen::X, 1);
        } else {
          out.push(Gen::X, -1);
          out.push(Gen::Y, k);
        }
      } else {
        if (e > 0) {
          out.push(Gen::X, -1);
          out.push(Gen::Y, k + 1);
        } else {
          out.push(Gen::Y, -k - 1);
          out.push(Gen::X, 1);
        }
      }
    }
  };
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '1' && out.empty()) {  // identity marker
      ++i;
      continue;
    }
    char letter;
    long long e;
    switch (c) {
      case 'a': letter = 'a'; e = 1; break;
      case 'A': letter = 'a'; e = -1; break;
      case 'b': letter = 'b'; e = 1; break;
      case 'B': letter = 'b'; e = -1; break;
      default:
        throw parse_error(std::string("unexpected character '") + c +
                          "' in {a,b}-word");
    }
    ++i;
    if (i < s.size() && s[i] == '^')
      e = checked_mul(e, detail::parse_exponent(s, i));
    if (e > 4096 || e < -4096)
      throw parse_error("{a,b}-word exponent too large to expand");
    emit(letter, e);
  }
  return out;
}

// The alternating product of length m in the source presentation, as text.
inline std::string alternating_product(char first, char second, long long m) {
  std::string s;
  for (long long i = 0; i < m; ++i) s += (i % 2 == 0) ? first : second;
  return s;
}

}  // namespace odag
