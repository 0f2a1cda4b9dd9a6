#pragma once
// twisted.hpp -- phi-twisted conjugacy for phi: x -> x^-1, y -> y^-1.
//
// u ~ v (twisted) iff v = phi(w)^-1 u w = rev(w) u w for some word w; every
// operation below that answers "yes" also returns that witness w, and the
// decision procedure re-verifies it before returning.
//
// Shape of the procedure: reduce each input to a minimal form, which is
// either a pure power class (empty word, x, or y) or a twisted cyclic
// geodesic (CycGeo): a geodesic all of whose phi-cyclic permutations remain
// geodesic. CycGeo words are exactly the type-(3)-bar geodesics with every
// x-run +-1 and every y-run in [-k, k] that start and end with different
// generators. Two CycGeo forms are twisted conjugate iff one's y-exponent
// tuple is a block rotation-with-sign-flip of the other's and the count of
// positive x-runs has the parity forced by the rotation distance.
//
// The reduction driver works on (free runs, central exponent) and never
// re-runs the geodesic pipeline: every y^{+-(k+1)} run folds into the center
// as y^{-+k} Delta^{+-1} on sight (a group equality, empty witness), after
// which the five rewrite rules R1-R5 dispatch on the ends alone. All steps
// are O(1) on a run deque, so minimization is linear in the word length.

#include <deque>
#include <set>

#include "odag/normal_form.hpp"

namespace odag {

// ---- phi-cyclic permutations --------------------------------------------

// u = u1 u2 with l(u1) = i: u goes to u2 phi(u1), witness increment phi(u1).
// Boundary splits (i = 0 or i = l) are allowed; i = l sends u to phi(u).
inline std::pair<Word, Word> phi_cyclic_prefix(const Word& u, long long i) {
  auto [u1, u2] = split_at(u, i);
  Word inc = apply_phi(u1);
  return {concat(u2, inc), inc};
}

// u = u1 u2 with l(u2) = i: u goes to phi(u2) u1, witness increment u2^-1.
inline std::pair<Word, Word> phi_cyclic_suffix(const Word& u, long long i) {
  auto [u1, u2] = split_at(u, checked_sub(u.length(), i));
  return {concat(apply_phi(u2), u1), invert(u2)};
}

// ---- twisted cyclic geodesics -------------------------------------------

inline bool is_cycgeo(const Word& w, const GroupParams& p) {
  const auto& s = w.syllables();
  if (s.size() < 2) return false;
  if (s.front().gen == s.back().gen) return false;
  long long kk = p.k();
  for (const auto& r : s) {
    if (r.gen == Gen::X && std::llabs(r.exp) != 1) return false;
    if (r.gen == Gen::Y && std::llabs(r.exp) > kk) return false;
  }
  return true;
}

// Block view of a CycGeo word, normalized to start with an x-run:
// x^{sign_1} y^{yexp_1} ... x^{sign_tau} y^{yexp_tau}.
struct CycGeoWord {
  Word word;
  std::vector<int> sign;
  std::vector<long long> yexp;
  std::size_t tau() const { return sign.size(); }
  long long q() const {  // number of positive x-runs
    long long n = 0;
    for (int s : sign) n += s > 0;
    return n;
  }
};

// The attainable counts of positive x-runs: X(w) = {q' in [0, tau] : q' has
// q's parity}. Two profiles are interchangeable iff tau and the parity agree.
struct ParityProfile {
  std::size_t tau = 0;
  long long q = 0;
  int parity() const { return static_cast<int>(q % 2); }
  bool contains(long long qq) const {
    return 0 <= qq && qq <= static_cast<long long>(tau) &&
           qq % 2 == parity();
  }
  friend bool operator==(const ParityProfile&, const ParityProfile&) = default;
};

inline ParityProfile parity_profile(const CycGeoWord& w) {
  return {w.tau(), w.q()};
}

// Normalize a CycGeo word to the x-leading block form (one phi-cyclic
// permutation when it starts with a y-run). Second item: witness increment.
inline std::pair<CycGeoWord, Word> block_normalize(const Word& w,
                                                   const GroupParams& p) {
  if (!is_cycgeo(w, p))
    throw std::invalid_argument(
        "block_normalize: input is not a twisted cyclic geodesic");
  Word v = w;
  Word inc;
  if (w.syllables().front().gen == Gen::Y) {
    auto moved =
        phi_cyclic_prefix(w, std::llabs(w.syllables().front().exp));
    v = moved.first;
    inc = moved.second;
  }
  CycGeoWord out;
  out.word = v;
  const auto& s = v.syllables();
  for (std::size_t i = 0; i + 1 < s.size(); i += 2) {
    out.sign.push_back(static_cast<int>(s[i].exp));
    out.yexp.push_back(s[i + 1].exp);
  }
  return {out, inc};
}

// ---- rewrite rules -------------------------------------------------------
//
// All five rules act on w = (free part) Delta^c and return the new word plus
// the witness increment. Patterns:
//   R1: c outside {0,1}; drops Delta^{2d}, keeping c mod 2.
//   R2: free part x^{e1} v x^{e2}, c in {0,1} -> v Delta^{c+(e1-e2)/2}.
//   R3: free part y^{b1} v y^{bn}, c in {0,1} -> y^{b1-bn} v Delta^c
//       (y^{+-m} folding into the center).
//   R4: free part x^{e1} v y^{b},  c = +-1  -> x^{-e1} v y^{b}.
//   R5: free part y^{b} v x^{e1},  c = +-1  -> y^{b} v x^{-e1}.

enum class TwistRule { R1, R2, R3, R4, R5 };

struct RuleResult {
  Word out;
  Word increment;
};

namespace detail {

inline Word step_r1(long long& c) {
  long long target = floor_mod(c, 2);
  long long d = (c - target) / 2;
  c = target;
  Word inc;
  inc.push(Gen::X, checked_mul(-2, d));
  return inc;
}

inline Word step_r2(std::deque<Syllable>& f, long long& c) {
  long long e1 = f.front().exp, e2 = f.back().exp;
  f.pop_front();
  f.pop_back();
  c = checked_add(c, (e1 - e2) / 2);
  Word inc;
  inc.push(Gen::X, -e2);
  return inc;
}

// fold_kp1: also rewrite a resulting front run y^{+-(k+1)} as y^{-+k} with a
// central adjustment (driver invariant; the public rule keeps it verbatim).
inline Word step_r3(std::deque<Syllable>& f, long long& c,
                    const GroupParams& p, bool fold_kp1) {
  long long b1 = f.front().exp, bn = f.back().exp;
  f.pop_front();
  f.pop_back();
  long long kk = p.k();
  long long d = checked_sub(b1, bn);
  while (d > kk + 1) {
    d -= p.m;
    c = checked_add(c, 1);
  }
  while (d < -(kk + 1)) {
    d += p.m;
    c = checked_sub(c, 1);
  }
  if (fold_kp1 && d == kk + 1) {
    d = -kk;
    c = checked_add(c, 1);
  } else if (fold_kp1 && d == -(kk + 1)) {
    d = kk;
    c = checked_sub(c, 1);
  }
  if (d != 0) f.push_front({Gen::Y, d});
  Word inc;
  inc.push(Gen::Y, -bn);
  return inc;
}

inline Word step_r45(std::deque<Syllable>& f, long long& c) {
  Syllable& s = f.front().gen == Gen::X ? f.front() : f.back();
  long long e1 = s.exp;
  long long e2 = c;
  s.exp = -e1;
  c = 0;
  Word inc;
  if (e1 == e2) inc.push(Gen::X, checked_mul(-2, e1));
  return inc;
}

inline std::deque<Syllable> to_deque(const Word& w) {
  return {w.syllables().begin(), w.syllables().end()};
}

inline Word render(const std::deque<Syllable>& f, long long c) {
  Word w;
  for (const auto& s : f) w.push(s);
  w.push(Gen::X, checked_mul(2, c));
  return w;
}

// y^{e(k+1)} = y^{-ek} Delta^{e}: equality, no witness.
inline void fold_kp1_runs(std::deque<Syllable>& f, long long& c,
                          const GroupParams& p) {
  long long kk = p.k();
  for (auto& s : f) {
    if (s.gen != Gen::Y) continue;
    if (s.exp == kk + 1) {
      s.exp = -kk;
      c = checked_add(c, 1);
    } else if (s.exp == -(kk + 1)) {
      s.exp = kk;
      c = checked_sub(c, 1);
    }
  }
}

}  // namespace detail

inline RuleResult apply_rule(TwistRule r, const Word& w, const GroupParams& p) {
  auto [fw, c] = detail::delta_split(w);
  std::deque<Syllable> f = detail::to_deque(fw);
  auto need = [&](bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(std::string("apply_rule: ") + msg);
  };
  Word inc;
  switch (r) {
    case TwistRule::R1:
      need(c != 0 && c != 1, "R1 needs a central exponent outside {0,1}");
      inc = detail::step_r1(c);
      break;
    case TwistRule::R2:
      need(f.size() >= 3 && f.front().gen == Gen::X && f.back().gen == Gen::X,
           "R2 needs a free part x^e1 v x^e2");
      need(c == 0 || c == 1, "R2 needs central exponent in {0,1}");
      inc = detail::step_r2(f, c);
      break;
    case TwistRule::R3:
      need(f.size() >= 3 && f.front().gen == Gen::Y && f.back().gen == Gen::Y,
           "R3 needs a free part y^b1 v y^bn");
      need(c == 0 || c == 1, "R3 needs central exponent in {0,1}");
      inc = detail::step_r3(f, c, p, false);
      break;
    case TwistRule::R4:
      need(f.size() >= 2 && f.front().gen == Gen::X && f.back().gen == Gen::Y,
           "R4 needs a free part x^e v y^b");
      need(c == 1 || c == -1, "R4 needs central exponent +-1");
      inc = detail::step_r45(f, c);
      break;
    case TwistRule::R5:
      need(f.size() >= 2 && f.front().gen == Gen::Y && f.back().gen == Gen::X,
           "R5 needs a free part y^b v x^e");
      need(c == 1 || c == -1, "R5 needs central exponent +-1");
      inc = detail::step_r45(f, c);
      break;
  }
  return {detail::render(f, c), inc};
}

// ---- minimization driver -------------------------------------------------

enum class MinimalKind { Pure, Cyc };

struct MinimalForm {
  MinimalKind kind = MinimalKind::Pure;
  Word word;        // pure: class representative (1 or x); cyc: block word
  Word witness;     // u -> word, composed increments
  CycGeoWord blocks;  // kind == Cyc only
};

namespace detail {

// Class representative and witness for a pure power x^T / y^T. Only two
// pure classes exist: x^T with T odd lands on x, everything else lands on
// the identity. In particular every y power collapses: y^{2h} cancels
// against w = y^{-h}, and for odd T the witness w = y^{(m-T)/2} x^{-1}
// closes a full Delta, rev(w) y^T w = x^{-1} y^m x^{-1} = 1; a parity
// split of y powers into two classes would miss this wrap.
inline std::pair<Word, Word> pure_rep_and_witness(long long T, bool is_x,
                                                  const GroupParams& p) {
  Word rep, wit;
  if (is_x) {
    if (floor_mod(T, 2) == 0) {
      wit.push(Gen::X, -T / 2);
    } else {
      rep.push(Gen::X, 1);
      wit.push(Gen::X, -(T - 1) / 2);
    }
    return {rep, wit};
  }
  if (floor_mod(T, 2) == 0) {
    wit.push(Gen::Y, -T / 2);
  } else {
    wit.push(Gen::Y, checked_sub(p.m, T) / 2);
    wit.push(Gen::X, -1);
  }
  return {rep, wit};
}

// Core loop shared by reduce_to_bar3 / to_cycgeo / minimize_phi. Runs rules
// until the requested stopping set; fold_kp1 keeps y-runs within [-k, k].
// stop_bar3: halt at any type-(3)-bar word (c = 0, mixed, opposite ends).
struct DriverOut {
  std::deque<Syllable> f;
  long long c = 0;
  Word witness;
  bool pure = false;
};

inline DriverOut run_driver(const Word& start, const GroupParams& p,
                            bool fold_kp1, bool stop_bar3) {
  DriverOut st;
  auto [fw, c0] = delta_split(start);
  st.f = to_deque(fw);
  st.c = c0;
  if (fold_kp1) fold_kp1_runs(st.f, st.c, p);
  long long guard = 64 + 8 * start.length();
  for (;;) {
    if (--guard < 0)
      throw std::logic_error("twisted reduction did not terminate");
    if (st.f.size() <= 1) {
      st.pure = true;
      return st;
    }
    if (st.c != 0 && st.c != 1) {
      st.witness.push(step_r1(st.c));
      continue;
    }
    bool same_ends = st.f.front().gen == st.f.back().gen;
    if (same_ends) {
      if (st.f.front().gen == Gen::X)
        st.witness.push(step_r2(st.f, st.c));
      else
        st.witness.push(step_r3(st.f, st.c, p, fold_kp1));
      continue;
    }
    if (st.c == 1) {
      st.witness.push(step_r45(st.f, st.c));
      continue;
    }
    return st;  // c == 0, mixed, opposite ends
  }
}

}  // namespace detail

// Rewrite a geodesic word into type (3)-bar (c = 0, starts and ends with
// different generators) or a pure power, by R1-R5 alone.
inline std::pair<Word, Word> reduce_to_bar3(const Word& u,
                                            const GroupParams& p) {
  if (u.length() != geodesic_length(u, p))
    throw std::invalid_argument("reduce_to_bar3: input is not geodesic");
  auto st = detail::run_driver(u, p, false, true);
  return {detail::render(st.f, st.c), st.witness};
}

// From a type-(3)-bar word, reach a twisted cyclic geodesic (x-leading
// block form) by folding y^{+-(k+1)} runs and finishing with R1-R5.
inline std::pair<Word, Word> to_cycgeo(const Word& u, const GroupParams& p) {
  auto [fw, c] = detail::delta_split(u);
  if (c != 0 || fw.runs() < 2 ||
      fw.syllables().front().gen == fw.syllables().back().gen)
    throw std::invalid_argument("to_cycgeo: input is not of type (3)-bar");
  auto st = detail::run_driver(u, p, true, false);
  Word w = detail::render(st.f, st.c);
  Word wit = st.witness;
  if (!st.pure) {
    auto [blocks, inc] = block_normalize(w, p);
    w = blocks.word;
    wit.push(inc);
  }
  return {w, wit};
}

// Full reduction: geodesic, then the driver, then either the pure-power
// class representative or the x-leading CycGeo block form.
inline MinimalForm minimize_phi(const Word& u, const GroupParams& p) {
  Word canon = geodesic(u, p);
  auto st = detail::run_driver(canon, p, true, false);
  MinimalForm out;
  out.witness = st.witness;
  if (st.pure) {
    long long T;
    bool is_x;
    if (st.f.empty()) {
      is_x = true;
      T = checked_mul(2, st.c);
    } else if (st.f.front().gen == Gen::X) {
      is_x = true;
      T = checked_add(st.f.front().exp, checked_mul(2, st.c));
    } else {
      is_x = false;
      T = checked_add(st.f.front().exp, checked_mul(p.m, st.c));
    }
    auto [rep, wit2] = detail::pure_rep_and_witness(T, is_x, p);
    out.kind = MinimalKind::Pure;
    out.word = rep;
    out.witness.push(wit2);
    return out;
  }
  out.kind = MinimalKind::Cyc;
  auto [blocks, inc] = block_normalize(detail::render(st.f, st.c), p);
  out.word = blocks.word;
  out.blocks = std::move(blocks);
  out.witness.push(inc);
  return out;
}

// ---- pure power decision -------------------------------------------------

namespace detail {
// (is_x, T) when w spells a pure power x^T or y^T (Delta absorbed).
inline std::optional<std::pair<bool, long long>> pure_power_of(
    const Word& w, const GroupParams& p) {
  auto [f, c] = delta_split(w);
  if (f.runs() > 1) return std::nullopt;
  if (f.empty()) return std::make_pair(true, checked_mul(2, c));
  const Syllable& s = f.syllables()[0];
  if (s.gen == Gen::X)
    return std::make_pair(true, checked_add(s.exp, checked_mul(2, c)));
  return std::make_pair(false, checked_add(s.exp, checked_mul(p.m, c)));
}
}  // namespace detail

inline void verify_twisted_or_throw(const Word& u, const Word& v,
                                    const Word& w, const GroupParams& p) {
  if (!word_equals(v, concat(rev(w), concat(u, w)), p))
    throw witness_error("twisted conjugacy witness failed verification");
}

struct TwistedWitness {
  Word w;
  bool verify(const Word& u, const Word& v, const GroupParams& p) const {
    return word_equals(v, concat(rev(w), concat(u, w)), p);
  }
};

// Twisted conjugacy for pure powers (x^a, y^b, Delta^c and their mixes):
// reduce both sides to the class representative and compare.
inline Decision simple_case_decide(const Word& u, const Word& v,
                                   const GroupParams& p) {
  auto pu = detail::pure_power_of(u, p);
  auto pv = detail::pure_power_of(v, p);
  if (!pu || !pv)
    throw std::invalid_argument(
        "simple_case_decide: input is not a pure power");
  auto [ru, wu] = detail::pure_rep_and_witness(pu->second, pu->first, p);
  auto [rv, wv] = detail::pure_rep_and_witness(pv->second, pv->first, p);
  if (!(ru == rv)) return {false, std::nullopt};
  Word w = concat(wu, invert(wv));
  verify_twisted_or_throw(u, v, w, p);
  return {true, w};
}

// ---- the CycGeo matcher --------------------------------------------------

namespace detail {

template <class T>
std::vector<std::size_t> kmp_all_matches(const std::vector<T>& pat,
                                         const std::vector<T>& text) {
  std::vector<std::size_t> out;
  if (pat.empty() || text.size() < pat.size()) return out;
  std::vector<std::size_t> fail(pat.size(), 0);
  for (std::size_t i = 1; i < pat.size(); ++i) {
    std::size_t j = fail[i - 1];
    while (j > 0 && !(pat[i] == pat[j])) j = fail[j - 1];
    if (pat[i] == pat[j]) ++j;
    fail[i] = j;
  }
  std::size_t j = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    while (j > 0 && !(text[i] == pat[j])) j = fail[j - 1];
    if (text[i] == pat[j]) ++j;
    if (j == pat.size()) {
      out.push_back(i + 1 - pat.size());
      j = fail[j - 1];
    }
  }
  return out;
}

// Smallest rotation count j in [0, 2 tau) such that j suffix-block moves
// turn u's y-tuple into v's and the x-count parity agrees; the rotated tuple
// after j moves reads the doubled tuple (b, -b) at offset (2 tau - j).
inline std::optional<long long> match_rotation(const CycGeoWord& bu,
                                               const CycGeoWord& bv) {
  if (bu.tau() != bv.tau() || bu.tau() == 0) return std::nullopt;
  long long tau = static_cast<long long>(bu.tau());
  std::vector<long long> doubled = bu.yexp;
  for (long long b : bu.yexp) doubled.push_back(-b);
  std::vector<long long> text = doubled;
  text.insert(text.end(), doubled.begin(), doubled.begin() + (tau - 1));
  std::optional<long long> best;
  for (std::size_t s : kmp_all_matches(bv.yexp, text)) {
    long long j = floor_mod(2 * tau - static_cast<long long>(s), 2 * tau);
    if (floor_mod(bu.q() + j, 2) != floor_mod(bv.q(), 2)) continue;
    if (!best || j < *best) best = j;
  }
  return best;
}

// Witness for j suffix-block moves followed by sign pumping to q_target.
// Each move consumes the tail block (x^s y^b): increment y^{-b} x^{-s}; the
// consumed sign is free to choose within [0 < q / q < tau] because equal
// elements may re-spell their x-signs arbitrarily at fixed q.
inline Word rotation_moves(const CycGeoWord& bu, long long j,
                           long long q_target) {
  long long tau = static_cast<long long>(bu.tau());
  std::deque<long long> b(bu.yexp.begin(), bu.yexp.end());
  long long q = bu.q();
  Word moves;
  auto one_move = [&]() {
    long long s;
    if (q > q_target)
      s = q >= 1 ? 1 : -1;
    else if (q < q_target)
      s = q <= tau - 1 ? -1 : 1;
    else
      s = q >= 1 ? 1 : -1;
    long long be = b.back();
    b.pop_back();
    b.push_front(-be);
    q -= s;
    moves.push(Gen::Y, -be);
    moves.push(Gen::X, -s);
  };
  for (long long t = 0; t < j; ++t) one_move();
  if (q != q_target)
    for (long long t = 0; t < 2 * tau; ++t) one_move();
  if (q != q_target)
    throw std::logic_error("rotation_moves: sign pump did not land");
  return moves;
}

}  // namespace detail

// Do two CycGeo words lie in the same twisted conjugacy class? (Both must
// be CycGeo; length or tau disagreement returns false.)
inline bool minimal_class_match(const Word& u, const Word& v,
                                const GroupParams& p) {
  auto bu = block_normalize(u, p).first;
  auto bv = block_normalize(v, p).first;
  if (bu.word.length() != bv.word.length()) return false;
  return detail::match_rotation(bu, bv).has_value();
}

// ---- the decision procedure ----------------------------------------------

inline Decision tcp_phi(const Word& u, const Word& v, const GroupParams& p) {
  // chi changes by 2 chi(w) along the class, so its parity is an invariant.
  if (floor_mod(checked_sub(chi(u, p), chi(v, p)), 2) != 0)
    return {false, std::nullopt};
  MinimalForm mu = minimize_phi(u, p);
  MinimalForm mv = minimize_phi(v, p);
  if (mu.kind != mv.kind) return {false, std::nullopt};
  if (mu.kind == MinimalKind::Pure) {
    if (!(mu.word == mv.word)) return {false, std::nullopt};
    Word w = concat(mu.witness, invert(mv.witness));
    verify_twisted_or_throw(u, v, w, p);
    return {true, w};
  }
  if (mu.word.length() != mv.word.length()) return {false, std::nullopt};
  auto j = detail::match_rotation(mu.blocks, mv.blocks);
  if (!j) return {false, std::nullopt};
  Word moves = detail::rotation_moves(mu.blocks, *j, mv.blocks.q());
  Word w = concat(mu.witness, concat(moves, invert(mv.witness)));
  verify_twisted_or_throw(u, v, w, p);
  return {true, w};
}

// All group elements of minimal length in the twisted class of u: the pure
// classes are {1}, {x, x^-1}, {y, y^-1}; a CycGeo class is swept by the 2n
// single-letter phi-cyclic permutations of the doubled cycle, each spelling
// every attainable positive-x count of its parity.
inline std::set<CentralForm> enumerate_minimal_class(const Word& u,
                                                     const GroupParams& p) {
  MinimalForm mu = minimize_phi(u, p);
  std::set<CentralForm> out;
  if (mu.kind == MinimalKind::Pure) {
    out.insert(central_form(mu.word, p));
    out.insert(central_form(invert(mu.word), p));
    return out;
  }
  Word w = mu.word;
  long long n = w.length();
  for (long long step = 0; step < 2 * n; ++step) {
    const auto& syl = w.syllables();
    long long tau = 0, qw = 0;
    for (const auto& s : syl) {
      if (s.gen == Gen::X) {
        ++tau;
        qw += s.exp > 0;
      }
    }
    for (long long qq = qw % 2; qq <= tau; qq += 2) {
      Word re;
      long long seen = 0;
      for (const auto& s : syl) {
        if (s.gen == Gen::X)
          re.push(Gen::X, seen++ < qq ? 1 : -1);
        else
          re.push(s);
      }
      out.insert(central_form(re, p));
    }
    w = phi_cyclic_prefix(w, 1).first;
  }
  return out;
}

}  // namespace odag
