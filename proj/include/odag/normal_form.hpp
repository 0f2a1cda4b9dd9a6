#pragma once
// normal_form.hpp -- canonical forms, geodesics and the length-type table.
//
// Delta = x^2 = y^m generates the center. The central quotient is the free
// product C2 * Cm, whose normal forms are alternating words with x-exponent 1
// and y-exponents in [1, m-1]. CentralForm (q, c) writes a group element as
// s(q) * Delta^c with q that quotient normal form; it is a complete invariant,
// so word_equals is CentralForm equality.
//
// geodesic() rewrites (q, c) to a shortest representative word and classify()
// names the row of the length table the result lives in. The pipeline:
//
//   stage 1   (q, c) as aligned exponent rows a_i in {0,1}, b_i in [1, m-1]
//   stage 2   fold b_i >= k+2 into the center: b_i -= m, c += 1
//             (now b_i in [-(k-1), k+1], interior entries nonzero)
//   stage 3   only when c < 0: either flip all positive a_i and all big b_j
//             (landing in the c <= 0 rows), or, when there are more flips
//             available than -c, spend exactly -c of them (a's first, left to
//             right, then b's) and finish at c = 0 with the balanced-pair
//             rewrites  (y^{k+1}, y^{-(k+1)}) -> (y^-k, y^k)  and
//             (x, y^{-(k+1)}) -> (x^-1, y^k) / (x^-1, y^{k+1}) -> (x, y^-k).
//
// Pure powers of one generator bypass the table (XPower / YPower / Central).

#include <algorithm>
#include <array>
#include <cstddef>
#include <string_view>

#include "odag/words.hpp"

namespace odag {

struct CentralForm {
  Word q;
  long long c = 0;
  friend bool operator==(const CentralForm&, const CentralForm&) = default;
};

inline bool operator<(const CentralForm& a, const CentralForm& b) {
  if (a.c != b.c) return a.c < b.c;
  const auto &sa = a.q.syllables(), &sb = b.q.syllables();
  if (sa.size() != sb.size()) return sa.size() < sb.size();
  for (std::size_t i = 0; i < sa.size(); ++i) {
    if (sa[i].gen != sb[i].gen) return sa[i].gen < sb[i].gen;
    if (sa[i].exp != sb[i].exp) return sa[i].exp < sb[i].exp;
  }
  return false;
}

inline CentralForm central_form(const Word& w, const GroupParams& p) {
  // Image of w in C2 * Cm by a one-pass stack reduction.
  std::vector<Syllable> st;
  for (const auto& s : w.syllables()) {
    long long e = floor_mod(s.exp, s.gen == Gen::X ? 2 : p.m);
    if (e == 0) continue;
    if (!st.empty() && st.back().gen == s.gen) {
      long long c = floor_mod(st.back().exp + e, s.gen == Gen::X ? 2 : p.m);
      if (c == 0)
        st.pop_back();
      else
        st.back().exp = c;
    } else {
      st.push_back({s.gen, e});
    }
  }
  CentralForm cf;
  cf.q = Word(std::move(st));
  // chi determines the central exponent: chi(w) = chi(q) + 2m c.
  long long diff = checked_sub(chi(w, p), chi(cf.q, p));
  long long twom = 2 * p.m;
  if (diff % twom != 0)
    throw std::logic_error("central_form: chi mismatch");  // unreachable
  cf.c = diff / twom;
  return cf;
}

inline bool word_equals(const Word& u, const Word& v, const GroupParams& p) {
  return central_form(u, p) == central_form(v, p);
}

// Aligned exponent rows x^{a_1} y^{b_1} ... x^{a_tau} y^{b_tau} Delta^c.
// Only a_1 and b_tau may be zero. tau = 0 encodes a central element.
struct GarsideForm {
  std::vector<long long> a, b;
  long long c = 0;
  std::size_t tau() const { return a.size(); }
  Word to_word() const {
    Word w;
    for (std::size_t i = 0; i < a.size(); ++i) {
      w.push(Gen::X, a[i]);
      w.push(Gen::Y, b[i]);
    }
    w.push(Gen::X, checked_mul(2, c));
    return w;
  }
};

namespace detail {

inline GarsideForm rows_from_quotient(const CentralForm& cf) {
  GarsideForm g;
  g.c = cf.c;
  const auto& syl = cf.q.syllables();
  std::size_t i = 0;
  while (i < syl.size()) {
    if (syl[i].gen == Gen::X) {
      g.a.push_back(syl[i].exp);
      if (i + 1 < syl.size() && syl[i + 1].gen == Gen::Y) {
        g.b.push_back(syl[i + 1].exp);
        i += 2;
      } else {
        g.b.push_back(0);
        ++i;
      }
    } else {
      g.a.push_back(0);
      g.b.push_back(syl[i].exp);
      ++i;
    }
  }
  return g;
}

inline void fold_large_y(GarsideForm& g, const GroupParams& p) {
  long long kk = p.k();
  for (auto& b : g.b)
    if (b >= kk + 2) {
      b -= p.m;
      g.c = checked_add(g.c, 1);
    }
}

}  // namespace detail

// The (modified) two-row normal form: stage 1 + stage 2 of the pipeline.
inline GarsideForm garside_normal_form(const Word& w, const GroupParams& p) {
  GarsideForm g = detail::rows_from_quotient(central_form(w, p));
  detail::fold_large_y(g, p);
  return g;
}

namespace detail {

// Shortest word for the element y^j Delta^c (0 <= j < m): spell it
// y^{j + m(c - cc)} Delta^cc and take the cc in {c-1, c, c+1} minimizing the
// letter count. The minimum is unique (the three costs have distinct parities
// pairwise at the ties that matter), but break toward smaller |cc| anyway.
inline Word pure_y_geodesic(long long j, long long c, const GroupParams& p) {
  long long best_cost = -1, best_b = 0, best_c = 0;
  for (long long cc : {c, c - 1, c + 1}) {
    long long b = checked_add(j, checked_mul(p.m, checked_sub(c, cc)));
    long long cost = checked_add(std::llabs(b), checked_mul(2, std::llabs(cc)));
    if (best_cost < 0 || cost < best_cost) {
      best_cost = cost;
      best_b = b;
      best_c = cc;
    }
  }
  Word w;
  w.push(Gen::Y, best_b);
  w.push(Gen::X, checked_mul(2, best_c));
  return w;
}

}  // namespace detail

inline Word geodesic(const Word& w, const GroupParams& p) {
  CentralForm cf = central_form(w, p);
  const auto& q = cf.q.syllables();
  if (q.empty()) {  // central: x^{2c}
    Word out;
    out.push(Gen::X, checked_mul(2, cf.c));
    return out;
  }
  if (q.size() == 1 && q[0].gen == Gen::X) {  // x * Delta^c = x^{2c+1}
    Word out;
    out.push(Gen::X, checked_add(checked_mul(2, cf.c), 1));
    return out;
  }
  if (q.size() == 1 && q[0].gen == Gen::Y)
    return detail::pure_y_geodesic(q[0].exp, cf.c, p);

  GarsideForm g = detail::rows_from_quotient(cf);
  detail::fold_large_y(g, p);
  long long kk = p.k();
  if (g.c >= 0) return g.to_word();

  // stage 3: spend central inverses on sign flips.
  std::vector<std::size_t> ra, rb;
  for (std::size_t i = 0; i < g.a.size(); ++i)
    if (g.a[i] > 0) ra.push_back(i);
  for (std::size_t j = 0; j < g.b.size(); ++j)
    if (g.b[j] >= kk && g.b[j] <= kk + 1) rb.push_back(j);
  long long need = -g.c;
  long long r = static_cast<long long>(ra.size() + rb.size());

  if (r <= need) {
    // Flip everything; lands in the c <= 0 rows (x-signs <= 0, y big runs
    // negative).
    for (auto i : ra) {
      g.a[i] = -1;
      g.c += 1;
    }
    for (auto j : rb) {
      g.b[j] -= p.m;
      g.c += 1;
    }
    return g.to_word();
  }

  // r > need: spend exactly need flips, a-entries first, left to right.
  for (auto i : ra) {
    if (need == 0) break;
    g.a[i] = -1;
    --need;
  }
  if (need > 0)
    for (auto j : rb) {
      if (need == 0) break;
      g.b[j] -= p.m;
      --need;
    }
  g.c = 0;

  // Balanced-pair rewrites, each strictly shortening, until no pair is left.
  // Earliest occurrences pair up first; index lists built in one sweep keep
  // the stage linear. y^{k+1} with y^{-(k+1)}:
  std::vector<std::size_t> bplus, bminus;
  for (std::size_t j = 0; j < g.b.size(); ++j) {
    if (g.b[j] == kk + 1) bplus.push_back(j);
    if (g.b[j] == -(kk + 1)) bminus.push_back(j);
  }
  std::size_t npair = std::min(bplus.size(), bminus.size());
  for (std::size_t t = 0; t < npair; ++t) {
    g.b[bplus[t]] = -kk;
    g.b[bminus[t]] = kk;
  }
  bplus.erase(bplus.begin(), bplus.begin() + npair);
  bminus.erase(bminus.begin(), bminus.begin() + npair);
  // Only one sign of k+1 runs survives; pair it with opposite-sign x
  // entries: x with y^{-(k+1)} -> x^-1 y^k, x^-1 with y^{k+1} -> x y^-k.
  if (!bminus.empty()) {
    std::vector<std::size_t> aplus;
    for (std::size_t i = 0; i < g.a.size(); ++i)
      if (g.a[i] == 1) aplus.push_back(i);
    std::size_t t = std::min(aplus.size(), bminus.size());
    for (std::size_t s = 0; s < t; ++s) {
      g.a[aplus[s]] = -1;
      g.b[bminus[s]] = kk;
    }
  } else if (!bplus.empty()) {
    std::vector<std::size_t> aminus;
    for (std::size_t i = 0; i < g.a.size(); ++i)
      if (g.a[i] == -1) aminus.push_back(i);
    std::size_t t = std::min(aminus.size(), bplus.size());
    for (std::size_t s = 0; s < t; ++s) {
      g.a[aminus[s]] = 1;
      g.b[bplus[s]] = -kk;
    }
  }
  return g.to_word();
}

inline long long geodesic_length(const Word& w, const GroupParams& p) {
  return geodesic(w, p).length();
}

// ---- classification ----------------------------------------------------

enum class GeodesicType {
  T1,             // v Delta^c, c > 0
  T2,             // v Delta^c, c < 0
  T3Plus,         // Garside-free, x-exponents in {0,1}, no y^-k
  T3Minus,        // Garside-free, x-exponents in {-1,0}, no y^k
  T3PlusCapMinus, // pure y^b, |b| <= k-1
  T30PlusU,       // x-exponents 1, some y^-k, all |b| <= k
  T30MinusU,      // x-exponents -1, some y^k, all |b| <= k
  T30PlusN,       // x-exponents 1, some y^-k and some y^{k+1}
  T30MinusN,      // x-exponents -1, some y^k and some y^{-(k+1)}
  T30Star,        // both x-signs, all |b| <= k
  XPower,         // x^a, a odd
  YPower,         // y^b, |b| in {k, k+1}
  Central,        // x^{2c}, c != 0
  Trivial         // empty word
};

inline std::string_view to_string(GeodesicType t) {
  switch (t) {
    case GeodesicType::T1: return "1";
    case GeodesicType::T2: return "2";
    case GeodesicType::T3Plus: return "3+";
    case GeodesicType::T3Minus: return "3-";
    case GeodesicType::T3PlusCapMinus: return "3+&3-";
    case GeodesicType::T30PlusU: return "30+U";
    case GeodesicType::T30MinusU: return "30-U";
    case GeodesicType::T30PlusN: return "30+N";
    case GeodesicType::T30MinusN: return "30-N";
    case GeodesicType::T30Star: return "30*";
    case GeodesicType::XPower: return "x-power";
    case GeodesicType::YPower: return "y-power";
    case GeodesicType::Central: return "central";
    case GeodesicType::Trivial: return "trivial";
  }
  return "?";
}

namespace detail {

// Split a word as (Garside-free runs, central exponent): every x-run donates
// its Delta content (exponent e = r + 2c with r in {-1,0,1} matching e's
// sign), Delta commutes to the end, the leftovers re-reduce.
inline std::pair<Word, long long> delta_split(const Word& w) {
  Word free_part;
  long long c = 0;
  for (const auto& s : w.syllables()) {
    if (s.gen == Gen::X) {
      long long r = s.exp % 2;  // sign-matching remainder in {-1,0,1}
      c = checked_add(c, (s.exp - r) / 2);
      free_part.push(Gen::X, r);
    } else {
      free_part.push(s);
    }
  }
  return {free_part, c};
}

}  // namespace detail

// Classify a geodesic word into its (unique) row of the length-type table.
// Throws std::invalid_argument when the input is not geodesic.
inline GeodesicType classify(const Word& w, const GroupParams& p) {
  if (w.length() != geodesic_length(w, p))
    throw std::invalid_argument("classify: word is not geodesic");
  long long kk = p.k();

  if (w.empty()) return GeodesicType::Trivial;
  if (w.runs() == 1) {
    const Syllable& s = w.syllables()[0];
    if (s.gen == Gen::X)
      return s.exp % 2 == 0 ? GeodesicType::Central : GeodesicType::XPower;
    return std::llabs(s.exp) <= kk - 1 ? GeodesicType::T3PlusCapMinus
                                       : GeodesicType::YPower;
  }

  auto [f, c] = detail::delta_split(w);
  if (f.runs() <= 1) {
    // Geodesics never spell a central or pure power with mixed runs unless
    // the center is explicit (e.g. x^2 y = y Delta), which lands in rows 1/2.
    if (f.runs() == 1 && f.syllables()[0].gen == Gen::Y && c != 0) {
      if (c > 0) return GeodesicType::T1;
      return GeodesicType::T2;
    }
    throw std::invalid_argument("classify: degenerate mixed geodesic");
  }

  bool pos = false, neg = false, has_yk = false, has_ymk = false,
       has_yk1 = false, has_ymk1 = false;
  long long max_abs_b = 0;
  for (const auto& s : f.syllables()) {
    if (s.gen == Gen::X) {
      (s.exp > 0 ? pos : neg) = true;
    } else {
      max_abs_b = std::max(max_abs_b, std::llabs(s.exp));
      if (s.exp == kk) has_yk = true;
      if (s.exp == -kk) has_ymk = true;
      if (s.exp == kk + 1) has_yk1 = true;
      if (s.exp == -(kk + 1)) has_ymk1 = true;
    }
  }

  if (c > 0) return GeodesicType::T1;
  if (c < 0) return GeodesicType::T2;
  if (pos && neg) return GeodesicType::T30Star;
  if (pos) {
    if (has_ymk && has_yk1) return GeodesicType::T30PlusN;
    if (has_ymk) return GeodesicType::T30PlusU;
    return GeodesicType::T3Plus;
  }
  if (has_yk && has_ymk1) return GeodesicType::T30MinusN;
  if (has_yk) return GeodesicType::T30MinusU;
  return GeodesicType::T3Minus;
}

// ---- geodesic run-shape conditions --------------------------------------
//
// A Garside-free word is geodesic iff, with Pos_g / Neg_g the largest
// positive / largest-magnitude negative g-exponent (0 when absent):
//   Pos_x + Neg_x <= 2,  Pos_y + Neg_y <= 2k+1,
//   Pos_x + Neg_y <= k+1,  Pos_y + Neg_x <= k+1.
// Exposed for tests; geodesic() outputs must satisfy it on their free part.

struct RunExtremes {
  long long pos_x = 0, neg_x = 0, pos_y = 0, neg_y = 0;
};

inline RunExtremes run_extremes(const Word& w) {
  RunExtremes r;
  for (const auto& s : w.syllables()) {
    if (s.gen == Gen::X) {
      if (s.exp > 0) r.pos_x = std::max(r.pos_x, s.exp);
      if (s.exp < 0) r.neg_x = std::max(r.neg_x, -s.exp);
    } else {
      if (s.exp > 0) r.pos_y = std::max(r.pos_y, s.exp);
      if (s.exp < 0) r.neg_y = std::max(r.neg_y, -s.exp);
    }
  }
  return r;
}

inline bool run_shape_geodesic(const Word& free_part, const GroupParams& p) {
  RunExtremes r = run_extremes(free_part);
  long long kk = p.k();
  return r.pos_x + r.neg_x <= 2 && r.pos_y + r.neg_y <= 2 * kk + 1 &&
         r.pos_x + r.neg_y <= kk + 1 && r.pos_y + r.neg_x <= kk + 1;
}

}  // namespace odag
