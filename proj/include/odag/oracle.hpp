#pragma once
// oracle.hpp -- brute-force cross-checks for the decision procedures.
//
// Everything here is deliberately naive and independent of the geodesic /
// reduction machinery: the only shared ingredient is CentralForm equality,
// which is a one-pass syllable reduction. Tests freeze values produced by
// these searches and require the fast procedures to agree.

#include <functional>
#include <map>
#include <set>

#include "odag/normal_form.hpp"

namespace odag {

// Breadth-first ball in the Cayley graph over {x, x^-1, y, y^-1}: for every
// element within the radius, its graph distance and a shortest word.
struct Ball {
  long long radius = 0;
  std::map<CentralForm, std::pair<long long, Word>> elems;

  // Geodesic length by exhaustion; nullopt when outside the ball.
  std::optional<long long> distance(const CentralForm& e) const {
    auto it = elems.find(e);
    if (it == elems.end()) return std::nullopt;
    return it->second.first;
  }
};

inline const std::array<Syllable, 4>& oracle_letters() {
  static const std::array<Syllable, 4> L = {
      Syllable{Gen::X, 1}, Syllable{Gen::X, -1}, Syllable{Gen::Y, 1},
      Syllable{Gen::Y, -1}};
  return L;
}

inline Ball bfs_ball(const GroupParams& p, long long radius,
                     long long cap = 10) {
  if (radius > cap) throw param_error("bfs_ball: radius exceeds the cap");
  Ball ball;
  ball.radius = radius;
  std::vector<std::pair<CentralForm, Word>> frontier;
  Word e;
  ball.elems.emplace(central_form(e, p), std::make_pair(0LL, e));
  frontier.push_back({central_form(e, p), e});
  for (long long d = 1; d <= radius; ++d) {
    std::vector<std::pair<CentralForm, Word>> next;
    for (const auto& [cf, w] : frontier) {
      for (const auto& L : oracle_letters()) {
        Word w2 = w;
        w2.push(L);
        if (w2.length() != d) continue;  // cancelled: already seen shorter
        CentralForm cf2 = central_form(w2, p);
        if (ball.elems.emplace(cf2, std::make_pair(d, w2)).second)
          next.push_back({cf2, w2});
      }
    }
    frontier = std::move(next);
  }
  return ball;
}

// Enumerate all freely reduced words of length <= max_len (empty word first,
// then by length, letter order x, x^-1, y, y^-1) and feed them to visit until
// it returns false.
inline void for_each_reduced_word(
    long long max_len, const std::function<bool(const Word&)>& visit) {
  std::vector<Word> layer{Word{}};
  if (!visit(layer[0])) return;
  for (long long d = 1; d <= max_len; ++d) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (const auto& L : oracle_letters()) {
        Word w2 = w;
        w2.push(L);
        if (w2.length() != d) continue;
        if (!visit(w2)) return;
        next.push_back(std::move(w2));
      }
    layer = std::move(next);
  }
}

// Shortest w with v = psi(w)^-1 u w and l(w) <= max_len, if any.
inline std::optional<Word> brute_twisted_witness(
    const Word& u, const Word& v, const GroupParams& p, long long max_len,
    const std::function<Word(const Word&)>& psi = apply_phi) {
  CentralForm target = central_form(v, p);
  std::optional<Word> found;
  for_each_reduced_word(max_len, [&](const Word& w) {
    Word cand = concat(invert(psi(w)), u, w);
    if (central_form(cand, p) == target) {
      found = w;
      return false;
    }
    return true;
  });
  return found;
}

// All elements psi-twisted-reachable from u with a witness of length <= cap.
inline std::set<CentralForm> twisted_reach(
    const Word& u, const GroupParams& p, long long cap,
    const std::function<Word(const Word&)>& psi = apply_phi) {
  std::set<CentralForm> out;
  for_each_reduced_word(cap, [&](const Word& w) {
    out.insert(central_form(concat(invert(psi(w)), u, w), p));
    return true;
  });
  return out;
}

// Conjugation orbit of u under conjugators of length <= cap.
inline std::set<CentralForm> conj_reach(const Word& u, const GroupParams& p,
                                        long long cap) {
  std::set<CentralForm> out;
  for_each_reduced_word(cap, [&](const Word& w) {
    out.insert(central_form(concat(invert(w), u, w), p));
    return true;
  });
  return out;
}

// Minimal-length elements of the phi-twisted conjugacy class of u, by witness
// search up to witness_cap and distance lookup in a BFS ball. The ball radius
// l(u) suffices: u itself lies in its class, so the class minimum is at most
// l(u), and reached elements outside the ball are longer than that.
inline std::set<CentralForm> brute_minimal_class(const Word& u,
                                                 const GroupParams& p,
                                                 long long witness_cap) {
  std::set<CentralForm> reach = twisted_reach(u, p, witness_cap);
  Ball ball = bfs_ball(p, u.length());
  long long best = u.length();
  for (const auto& e : reach)
    if (auto d = ball.distance(e)) best = std::min(best, *d);
  std::set<CentralForm> out;
  for (const auto& e : reach)
    if (auto d = ball.distance(e); d && *d == best) out.insert(e);
  return out;
}

}  // namespace odag
