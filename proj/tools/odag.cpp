// odag -- command-line surface for the G(m) = <x,y | x^2 = y^m> decision
// procedures: normal forms, the word problem, conjugacy, twisted conjugacy,
// orbit decidability, presentation translation, a brute-force self-test, and
// the linearity benchmark.
//
// Exit codes: 0 query answered (the verdict itself lives in the payload),
// 2 parse error, 3 invalid parameters, 4 witness re-verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "odag/bench.hpp"
#include "odag/oracle.hpp"
#include "odag/translate.hpp"

using nlohmann::json;
using namespace odag;

namespace {

struct StageClock {
  std::chrono::steady_clock::time_point t = std::chrono::steady_clock::now();
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double us = std::chrono::duration<double, std::micro>(now - t).count();
    t = now;
    return us;
  }
};

json witness_json(const std::optional<Word>& w) {
  if (!w) return nullptr;
  return format_word(*w);
}

// ---- per-query runners ---------------------------------------------------

json run_nf(const std::string& us, const GroupParams& p) {
  StageClock clk;
  Word u = parse_word(us);
  double t_parse = clk.lap();
  Word g = geodesic(u, p);
  CentralForm cf = central_form(u, p);
  GeodesicType ty = classify(g, p);
  double t_compute = clk.lap();
  json j;
  j["input"] = us;
  j["geodesic"] = format_word(g);
  j["length"] = g.length();
  j["type"] = to_string(ty);
  j["central_q"] = format_word(cf.q);
  j["central_c"] = cf.c;
  j["timings_us"] = {{"parse", t_parse}, {"compute", t_compute}, {"verify", 0.0}};
  return j;
}

json run_eq(const std::string& us, const std::string& vs,
            const GroupParams& p) {
  StageClock clk;
  Word u = parse_word(us), v = parse_word(vs);
  double t_parse = clk.lap();
  bool eq = word_equals(u, v, p);
  double t_compute = clk.lap();
  json j;
  j["equal"] = eq;
  j["timings_us"] = {{"parse", t_parse}, {"compute", t_compute}, {"verify", 0.0}};
  return j;
}

json run_cp(const std::string& us, const std::string& vs,
            const GroupParams& p, bool recheck) {
  StageClock clk;
  Word u = parse_word(us), v = parse_word(vs);
  double t_parse = clk.lap();
  Decision d = conjugate(u, v, p);
  double t_compute = clk.lap();
  double t_verify = 0;
  if (recheck && d.verdict) {
    if (!word_equals(v, concat(invert(*d.witness), u, *d.witness), p))
      throw witness_error("cp: witness failed re-verification");
    t_verify = clk.lap();
  }
  json j;
  j["conjugate"] = d.verdict;
  j["witness"] = witness_json(d.witness);
  j["timings_us"] = {{"parse", t_parse}, {"compute", t_compute}, {"verify", t_verify}};
  return j;
}

json run_tcp_phi(const std::string& us, const std::string& vs,
                 const GroupParams& p, bool recheck) {
  StageClock clk;
  Word u = parse_word(us), v = parse_word(vs);
  double t_parse = clk.lap();
  Decision d = tcp_phi(u, v, p);
  MinimalForm mu = minimize_phi(u, p), mv = minimize_phi(v, p);
  double t_compute = clk.lap();
  double t_verify = 0;
  if (recheck && d.verdict) {
    if (!word_equals(v, concat(rev(*d.witness), u, *d.witness), p))
      throw witness_error("tcp-phi: witness failed re-verification");
    t_verify = clk.lap();
  }
  json j;
  j["twisted_conjugate"] = d.verdict;
  j["witness"] = witness_json(d.witness);
  j["u_min"] = format_word(mu.word);
  j["v_min"] = format_word(mv.word);
  j["timings_us"] = {{"parse", t_parse}, {"compute", t_compute}, {"verify", t_verify}};
  return j;
}

AutomorphismSpec parse_auto(const std::string& s) {
  auto sep = s.find(';');
  if (sep == std::string::npos)
    throw parse_error("--auto expects \"IMAGE_X;IMAGE_Y\"");
  AutomorphismSpec spec;
  spec.image_x = parse_word(s.substr(0, sep));
  spec.image_y = parse_word(s.substr(sep + 1));
  return spec;
}

json run_tcp(const std::string& us, const std::string& vs,
             const std::string& autos, const GroupParams& p, bool recheck) {
  StageClock clk;
  Word u = parse_word(us), v = parse_word(vs);
  AutomorphismSpec psi = parse_auto(autos);
  double t_parse = clk.lap();
  InnerDecomposition dec = find_inner_part(psi, p);
  Decision d = tcp(u, v, psi, p);
  json j;
  j["twisted_conjugate"] = d.verdict;
  j["witness"] = witness_json(d.witness);
  j["inner_part"] = format_word(dec.g);
  j["outer"] = dec.outer;
  if (dec.outer) {
    j["u_min"] = format_word(minimize_phi(concat(dec.g, u), p).word);
    j["v_min"] = format_word(minimize_phi(concat(dec.g, v), p).word);
  } else {
    j["u_min"] = nullptr;
    j["v_min"] = nullptr;
  }
  double t_compute = clk.lap();
  double t_verify = 0;
  if (recheck && d.verdict) {
    Word pw = apply_auto(*d.witness, psi, p);
    if (!word_equals(v, concat(invert(pw), u, *d.witness), p))
      throw witness_error("tcp: witness failed re-verification");
    t_verify = clk.lap();
  }
  j["timings_us"] = {{"parse", t_parse}, {"compute", t_compute}, {"verify", t_verify}};
  return j;
}

json run_orbit(const std::string& us, const std::string& vs,
               const std::vector<std::string>& autos, const GroupParams& p) {
  StageClock clk;
  Word u = parse_word(us), v = parse_word(vs);
  std::vector<AutomorphismSpec> gens;
  for (const auto& a : autos) gens.push_back(parse_auto(a));
  double t_parse = clk.lap();
  json decs = json::array();
  for (const auto& g : gens) {
    InnerDecomposition d = find_inner_part(g, p);
    decs.push_back({{"inner_part", format_word(d.g)}, {"outer", d.outer}});
  }
  bool r = orbit_decidable(u, v, gens, p);
  double t_compute = clk.lap();
  json j;
  j["orbit"] = r;
  j["decompositions"] = decs;
  j["timings_us"] = {{"parse", t_parse}, {"compute", t_compute}, {"verify", 0.0}};
  return j;
}

json run_translate(const std::string& ws, const GroupParams& p) {
  StageClock clk;
  Word img = translate_presentation(ws, p);
  double t_parse = clk.lap();
  json j;
  j["input"] = ws;
  j["image"] = format_word(img);
  j["timings_us"] = {{"parse", t_parse}, {"compute", 0.0}, {"verify", 0.0}};
  return j;
}

// ---- selftest --------------------------------------------------------------

json run_selftest(const GroupParams& p, long long ball_r, long long wit_cap,
                  bool& all_ok) {
  json sections = json::array();
  auto section = [&](const std::string& name, bool ok,
                     const std::string& detail) {
    sections.push_back({{"name", name}, {"passed", ok}, {"detail", detail}});
    all_ok = all_ok && ok;
  };

  {  // geodesics against BFS distances
    Ball ball = bfs_ball(p, ball_r);
    bool ok = true;
    std::string detail;
    for (const auto& [cf, dw] : ball.elems) {
      const auto& [dist, w] = dw;
      Word g = geodesic(w, p);
      if (g.length() != dist || central_form(g, p) != cf) {
        ok = false;
        detail = "word " + format_word(w) + ": geodesic length " +
                 std::to_string(g.length()) + " vs BFS distance " +
                 std::to_string(dist);
        break;
      }
      classify(g, p);  // must not throw on a geodesic
    }
    if (ok)
      detail = std::to_string(ball.elems.size()) + " elements at radius " +
               std::to_string(ball_r);
    section("geodesic-vs-bfs", ok, detail);
  }

  {  // minimal twisted classes against brute force
    long long r = std::min<long long>(ball_r, 4);
    bool ok = true;
    std::string detail;
    long long count = 0;
    for_each_reduced_word(r, [&](const Word& u) {
      ++count;
      MinimalForm mf = minimize_phi(u, p);
      if (!word_equals(mf.word, concat(rev(mf.witness), u, mf.witness), p)) {
        ok = false;
        detail = "witness failed for " + format_word(u);
        return false;
      }
      if (enumerate_minimal_class(u, p) != brute_minimal_class(u, p, wit_cap)) {
        ok = false;
        detail = "class mismatch at " + format_word(u);
        return false;
      }
      return true;
    });
    if (ok) detail = std::to_string(count) + " words at radius " + std::to_string(r);
    section("twisted-minimal-classes", ok, detail);
  }

  {  // conjugacy against the conjugator-search oracle
    bool ok = true;
    std::string detail;
    std::vector<Word> words;
    for_each_reduced_word(3, [&](const Word& w) {
      words.push_back(w);
      return true;
    });
    for (std::size_t i = 0; ok && i < words.size(); ++i) {
      std::set<CentralForm> reach = conj_reach(words[i], p, 6);
      for (std::size_t j = 0; ok && j < words.size(); ++j) {
        bool oracle = reach.count(central_form(words[j], p)) == 1;
        if (conjugate(words[i], words[j], p).verdict != oracle) {
          ok = false;
          detail = "pair (" + format_word(words[i]) + ", " +
                   format_word(words[j]) + ")";
        }
      }
    }
    if (ok) detail = std::to_string(words.size()) + " words, all pairs";
    section("conjugacy-vs-oracle", ok, detail);
  }

  {  // presentation translation
    Word lhs = translate_presentation(alternating_product('a', 'b', p.m), p);
    Word rhs = translate_presentation(alternating_product('b', 'a', p.m), p);
    Word y1;
    y1.push(Gen::Y, 1);
    bool ok = word_equals(lhs, rhs, p) &&
              word_equals(translate_presentation("ab", p), y1, p);
    section("translation-relation", ok,
            ok ? "Artin relation holds" : "Artin relation image mismatch");
  }

  json j;
  j["passed"] = all_ok;
  j["sections"] = sections;
  return j;
}

// ---- output ----------------------------------------------------------------

void print_text(const std::string& cmd, const json& j, bool want_witness) {
  auto wit = [&](const char* key = "witness") {
    if (want_witness && j.contains(key) && !j[key].is_null())
      std::cout << "  witness: " << j[key].get<std::string>() << "\n";
  };
  if (cmd == "nf") {
    std::cout << j["geodesic"].get<std::string>() << "\n"
              << "  length " << j["length"] << ", type "
              << j["type"].get<std::string>()
              << ", central form (" << j["central_q"].get<std::string>()
              << ", " << j["central_c"] << ")\n";
  } else if (cmd == "eq") {
    std::cout << (j["equal"].get<bool>() ? "equal" : "distinct") << "\n";
  } else if (cmd == "cp") {
    std::cout << (j["conjugate"].get<bool>() ? "conjugate" : "not conjugate")
              << "\n";
    wit();
  } else if (cmd == "tcp-phi" || cmd == "tcp") {
    std::cout << (j["twisted_conjugate"].get<bool>() ? "twisted conjugate"
                                                     : "not twisted conjugate")
              << "\n";
    if (j.contains("inner_part"))
      std::cout << "  inner part " << j["inner_part"].get<std::string>()
                << ", outer " << (j["outer"].get<bool>() ? "yes" : "no")
                << "\n";
    if (!j["u_min"].is_null())
      std::cout << "  minimal forms: " << j["u_min"].get<std::string>()
                << " / " << j["v_min"].get<std::string>() << "\n";
    wit();
  } else if (cmd == "orbit") {
    std::cout << (j["orbit"].get<bool>() ? "in orbit" : "not in orbit")
              << "\n";
  } else if (cmd == "translate") {
    std::cout << j["image"].get<std::string>() << "\n";
  }
}

void print_selftest_text(const json& j) {
  for (const auto& s : j["sections"])
    std::cout << (s["passed"].get<bool>() ? "PASS " : "FAIL ")
              << s["name"].get<std::string>() << ": "
              << s["detail"].get<std::string>() << "\n";
  std::cout << (j["passed"].get<bool>() ? "selftest passed" : "selftest FAILED")
            << "\n";
}

void print_bench_text(const BenchResult& r) {
  std::cout << "op " << r.op << "\n";
  std::cout << "        n        us   ratio\n";
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    std::string ratio = "-";
    if (i > 0 && r.points[i].n == 2 * r.points[i - 1].n &&
        r.points[i - 1].micros > 0) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.2f",
                    r.points[i].micros / r.points[i - 1].micros);
      ratio = buf;
    }
    std::printf("%9lld %9.0f   %s\n", r.points[i].n, r.points[i].micros,
                ratio.c_str());
  }
  std::printf("mean doubling ratio %.2f\n", r.mean_ratio);
}

// ---- batch -----------------------------------------------------------------

std::vector<std::string> read_batch(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open batch file " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

std::pair<std::string, std::string> split_pair(const std::string& line) {
  auto sep = line.find(';');
  if (sep == std::string::npos)
    throw parse_error("batch line needs \"U;V\": " + line);
  return {line.substr(0, sep), line.substr(sep + 1)};
}

template <class F>
std::vector<json> run_batch(const std::vector<std::string>& lines, bool parallel,
                            F&& one) {
  std::vector<json> results(lines.size());
  if (!parallel || lines.size() < 2) {
    for (std::size_t i = 0; i < lines.size(); ++i) results[i] = one(lines[i]);
    return results;
  }
  unsigned nthreads =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(lines.size()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nthreads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < lines.size();) {
        try {
          results[i] = one(lines[i]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!err) err = std::current_exception();
          next.store(lines.size());
        }
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
  return results;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "decision procedures for the odd dihedral Artin group "
      "G(m) = <x,y | x^2 = y^m>"};
  app.require_subcommand(1);

  long long m = 0;
  bool as_json = false, want_witness = false, parallel = false;
  std::string u_arg, v_arg, auto_arg, batch_file;
  std::vector<std::string> auto_args;

  auto add_m = [&](CLI::App* sub) {
    sub->add_option("--m", m, "group index, odd and >= 3")->required();
    sub->add_flag("--json", as_json, "emit JSON");
  };

  CLI::App* nf = app.add_subcommand("nf", "geodesic normal form of a word");
  add_m(nf);
  nf->add_option("word", u_arg, "word over x,y (e.g. \"x y^-2 x\")");
  nf->add_option("--batch", batch_file, "file with one word per line");
  nf->add_flag("--parallel", parallel, "process batch lines in parallel");

  CLI::App* eq = app.add_subcommand("eq", "word problem: are U and V equal");
  add_m(eq);
  eq->add_option("U", u_arg, "left word");
  eq->add_option("V", v_arg, "right word");
  eq->add_option("--batch", batch_file, "file with U;V per line");
  eq->add_flag("--parallel", parallel, "process batch lines in parallel");

  CLI::App* cp = app.add_subcommand("cp", "conjugacy: is V a conjugate of U");
  add_m(cp);
  cp->add_option("U", u_arg, "left word");
  cp->add_option("V", v_arg, "right word");
  cp->add_flag("--witness", want_witness, "print the verified conjugator");
  cp->add_option("--batch", batch_file, "file with U;V per line");
  cp->add_flag("--parallel", parallel, "process batch lines in parallel");

  CLI::App* tphi = app.add_subcommand(
      "tcp-phi", "twisted conjugacy under the inverting automorphism");
  add_m(tphi);
  tphi->add_option("U", u_arg, "left word");
  tphi->add_option("V", v_arg, "right word");
  tphi->add_flag("--witness", want_witness, "print the verified witness");
  tphi->add_option("--batch", batch_file, "file with U;V per line");
  tphi->add_flag("--parallel", parallel, "process batch lines in parallel");

  CLI::App* tc = app.add_subcommand(
      "tcp", "twisted conjugacy under an arbitrary automorphism");
  add_m(tc);
  tc->add_option("U", u_arg, "left word")->required();
  tc->add_option("V", v_arg, "right word")->required();
  tc->add_option("--auto", auto_arg, "automorphism as \"IMAGE_X;IMAGE_Y\"")
      ->required();
  tc->add_flag("--witness", want_witness, "print the verified witness");

  CLI::App* orb = app.add_subcommand(
      "orbit", "orbit decidability for generated automorphism subgroups");
  add_m(orb);
  orb->add_option("U", u_arg, "left word")->required();
  orb->add_option("V", v_arg, "right word")->required();
  orb->add_option("--auto", auto_args,
                  "generator automorphism \"IMAGE_X;IMAGE_Y\" (repeatable)")
      ->required();

  CLI::App* tr = app.add_subcommand(
      "translate", "translate a word from the Artin presentation over a,b");
  add_m(tr);
  tr->add_option("word", u_arg, "word over a,b (e.g. \"a b^-1\")")->required();

  long long ball_r = 5, wit_cap = 7;
  CLI::App* st = app.add_subcommand(
      "selftest", "run the brute-force oracle agreement suite");
  add_m(st);
  st->add_option("--ball", ball_r, "BFS ball radius (default 5)");
  st->add_option("--witness", wit_cap, "witness search cap (default 7)");

  std::string bench_op;
  unsigned long long seed = 42;
  int samples = 3;
  long long max_n = 1'000'000;
  CLI::App* be = app.add_subcommand("bench", "doubling-ratio benchmark");
  add_m(be);
  be->add_option("op", bench_op, "one of nf, tcp-phi, cp")->required();
  be->add_option("--seed", seed, "generator seed (default 42)");
  be->add_option("--samples", samples, "timing samples per point (default 3)");
  be->add_option("--max-n", max_n, "largest input length (default 1000000)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    GroupParams p{m};
    auto emit = [&](const std::string& cmd, const json& j) {
      if (as_json)
        std::cout << j.dump() << "\n";
      else
        print_text(cmd, j, want_witness);
    };

    if (nf->parsed() || eq->parsed() || cp->parsed() || tphi->parsed()) {
      std::string cmd = nf->parsed()   ? "nf"
                        : eq->parsed() ? "eq"
                        : cp->parsed() ? "cp"
                                       : "tcp-phi";
      auto one = [&](const std::string& line) {
        if (cmd == "nf") return run_nf(line, p);
        auto [a, b] = split_pair(line);
        if (cmd == "eq") return run_eq(a, b, p);
        if (cmd == "cp") return run_cp(a, b, p, want_witness);
        return run_tcp_phi(a, b, p, want_witness);
      };
      if (!batch_file.empty()) {
        for (const auto& j : run_batch(read_batch(batch_file), parallel, one))
          emit(cmd, j);
        return 0;
      }
      if (cmd == "nf") {
        if (u_arg.empty() && nf->count("word") == 0)
          throw parse_error("nf needs a word or --batch");
        emit(cmd, run_nf(u_arg, p));
      } else {
        if (eq->count("V") + cp->count("V") + tphi->count("V") == 0)
          throw parse_error(cmd + " needs U and V or --batch");
        emit(cmd, one(u_arg + ";" + v_arg));
      }
      return 0;
    }
    if (tc->parsed()) {
      emit("tcp", run_tcp(u_arg, v_arg, auto_arg, p, want_witness));
      return 0;
    }
    if (orb->parsed()) {
      emit("orbit", run_orbit(u_arg, v_arg, auto_args, p));
      return 0;
    }
    if (tr->parsed()) {
      emit("translate", run_translate(u_arg, p));
      return 0;
    }
    if (st->parsed()) {
      bool ok = true;
      json j = run_selftest(p, ball_r, wit_cap, ok);
      if (as_json)
        std::cout << j.dump() << "\n";
      else
        print_selftest_text(j);
      return ok ? 0 : 1;
    }
    if (be->parsed()) {
      std::vector<long long> grid;
      for (long long n : default_bench_grid())
        if (n <= max_n) grid.push_back(n);
      BenchResult r = bench(bench_op, grid, p, seed, samples);
      if (as_json) {
        json j;
        j["op"] = r.op;
        j["points"] = json::array();
        for (const auto& pt : r.points)
          j["points"].push_back(
              {{"n", pt.n}, {"micros", pt.micros}, {"verdict", pt.verdict}});
        j["ratios"] = r.ratios;
        j["mean_ratio"] = r.mean_ratio;
        std::cout << j.dump() << "\n";
      } else {
        print_bench_text(r);
      }
      return 0;
    }
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const param_error& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return 3;
  } catch (const witness_error& e) {
    std::cerr << "witness error: " << e.what() << "\n";
    return 4;
  }
  return 0;
}
