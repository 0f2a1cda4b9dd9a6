#pragma once
// words.hpp -- free words over the torus-knot presentation <x,y | x^2 = y^m>.
//
// A Word is a freely reduced sequence of syllables (runs) x^e / y^e with
// e != 0 and alternating generators; the empty word is allowed. Reduction is
// a construction invariant: every constructor and every mutating operation
// restores it, so functions taking a Word never re-check.
//
// Letter length l(w) is the sum of |e|. Exponent arithmetic is 64-bit with
// explicit overflow checks; an overflowing merge throws instead of wrapping.

#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace odag {

// Thrown for malformed word/automorphism syntax (CLI exit code 2).
struct parse_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown for invalid group parameters or non-automorphisms (CLI exit code 3).
struct param_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when a produced witness fails verification (CLI exit code 4).
// Reaching this means an internal logic bug, never bad user input.
struct witness_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("exponent arithmetic overflow (add)");
  return r;
}

inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("exponent arithmetic overflow (sub)");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("exponent arithmetic overflow (mul)");
  return r;
}

// Nonnegative residue in [0, n).
inline long long floor_mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

struct GroupParams {
  long long m;
  explicit GroupParams(long long m_) : m(m_) {
    if (m < 3 || m % 2 == 0)
      throw param_error("group parameter m must be odd and >= 3");
  }
  // m = 2k + 1
  long long k() const { return (m - 1) / 2; }
};

enum class Gen : unsigned char { X, Y };

inline Gen other(Gen g) { return g == Gen::X ? Gen::Y : Gen::X; }

struct Syllable {
  Gen gen;
  long long exp;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syls) {
    syl_.reserve(syls.size());
    for (const auto& s : syls) push(s.gen, s.exp);
  }

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool empty() const { return syl_.empty(); }
  std::size_t runs() const { return syl_.size(); }

  long long length() const {
    long long n = 0;
    for (const auto& s : syl_) n = checked_add(n, std::llabs(s.exp));
    return n;
  }

  // Append one run, merging with the tail and dropping cancellations.
  void push(Gen g, long long e) {
    if (e == 0) return;
    if (!syl_.empty() && syl_.back().gen == g) {
      long long c = checked_add(syl_.back().exp, e);
      if (c == 0)
        syl_.pop_back();
      else
        syl_.back().exp = c;
    } else {
      syl_.push_back({g, e});
    }
  }
  void push(const Syllable& s) { push(s.gen, s.exp); }
  void push(const Word& w) {
    for (const auto& s : w.syllables()) push(s);
  }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syl_;
};

inline Word free_reduce(std::vector<Syllable> syls) { return Word(std::move(syls)); }

inline Word concat(const Word& u, const Word& v) {
  Word w = u;
  w.push(v);
  return w;
}

inline Word concat(const Word& u, const Word& v, const Word& w) {
  return concat(concat(u, v), w);
}

inline Word invert(const Word& w) {
  std::vector<Syllable> out;
  out.reserve(w.runs());
  const auto& s = w.syllables();
  for (auto it = s.rbegin(); it != s.rend(); ++it)
    out.push_back({it->gen, -it->exp});
  return Word(std::move(out));
}

// x -> x^-1, y -> y^-1 extended to words; the only outer automorphism class.
inline Word apply_phi(const Word& w) {
  std::vector<Syllable> out;
  out.reserve(w.runs());
  for (const auto& s : w.syllables()) out.push_back({s.gen, -s.exp});
  return Word(std::move(out));
}

// rev(w) spells w backwards; as a group element rev(w) = phi(w)^-1.
inline Word rev(const Word& w) {
  std::vector<Syllable> out;
  out.reserve(w.runs());
  const auto& s = w.syllables();
  for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back(*it);
  return Word(std::move(out));
}

// chi(x) = m, chi(y) = 2: the homomorphism G -> Z separating the center;
// chi(Delta) = 2m and chi(phi(w)) = -chi(w).
inline long long chi(const Word& w, const GroupParams& p) {
  long long sx = 0, sy = 0;
  for (const auto& s : w.syllables()) {
    if (s.gen == Gen::X)
      sx = checked_add(sx, s.exp);
    else
      sy = checked_add(sy, s.exp);
  }
  return checked_add(checked_mul(p.m, sx), checked_mul(2, sy));
}

// Split w = u1 * u2 with l(u1) = i; splitting inside a run is allowed.
inline std::pair<Word, Word> split_at(const Word& w, long long i) {
  if (i < 0 || i > w.length()) throw std::out_of_range("split_at: bad index");
  std::vector<Syllable> left, right;
  long long seen = 0;
  for (const auto& s : w.syllables()) {
    long long n = std::llabs(s.exp);
    long long sign = s.exp > 0 ? 1 : -1;
    if (seen >= i) {
      right.push_back(s);
    } else if (seen + n <= i) {
      left.push_back(s);
    } else {
      long long take = i - seen;
      left.push_back({s.gen, sign * take});
      right.push_back({s.gen, sign * (n - take)});
    }
    seen += n;
  }
  return {Word(std::move(left)), Word(std::move(right))};
}

// ---- parsing and formatting -------------------------------------------
//
// Grammar: a word is a sequence of atoms; an atom is one of x X y Y with an
// optional caret exponent (^ then an optional-sign integer). X abbreviates
// x^-1. Whitespace between atoms is skipped. The empty string is the empty
// word. "1" is also accepted for the empty word (CLI convenience).

namespace detail {
inline long long parse_exponent(std::string_view s, std::size_t& i) {
  ++i;  // consume '^'
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    throw parse_error("expected digits after '^'");
  long long v = 0;
  constexpr long long bound = 1'000'000'000'000'000LL;  // 1e15
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + (s[i] - '0');
    if (v > bound) throw parse_error("exponent literal too large");
    ++i;
  }
  return neg ? -v : v;
}
}  // namespace detail

inline Word parse_word(std::string_view s) {
  Word w;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '1' && w.empty()) {  // identity marker
      ++i;
      continue;
    }
    Gen g;
    long long e;
    switch (c) {
      case 'x': g = Gen::X; e = 1; break;
      case 'X': g = Gen::X; e = -1; break;
      case 'y': g = Gen::Y; e = 1; break;
      case 'Y': g = Gen::Y; e = -1; break;
      default:
        throw parse_error(std::string("unexpected character '") + c +
                          "' in word");
    }
    ++i;
    if (i < s.size() && s[i] == '^') e = checked_mul(e, detail::parse_exponent(s, i));
    w.push(g, e);
  }
  return w;
}

inline std::string format_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) out += ' ';
    first = false;
    out += s.gen == Gen::X ? 'x' : 'y';
    if (s.exp != 1) {
      out += '^';
      out += std::to_string(s.exp);
    }
  }
  return out;
}

// Verdict plus (for positive answers, when the operation produces one) a
// witness word whose exact meaning is operation-specific.
struct Decision {
  bool verdict = false;
  std::optional<Word> witness;
};

}  // namespace odag
