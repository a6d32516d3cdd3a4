// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line.  Everything runs through the same Verifier entry points as the CLI.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "alcove/json_io.hpp"
#include "alcove/verify.hpp"

using namespace alcove;

namespace {

struct Context {
  RootSystem rs;
  Orders ord;
  Verifier vf;
  explicit Context(CartanType t) : rs(RootSystem::build(t)), ord(rs), vf(ord) {}
};

Context& ctx(CartanType t) {
  static Context a1(CartanType::A1);
  static Context a2(CartanType::A2);
  static Context b2(CartanType::B2);
  switch (t) {
    case CartanType::A1: return a1;
    case CartanType::B2: return b2;
    default: return a2;
  }
}

Report run_sweep(CartanType t, const std::string& name, VerifyOptions opt) {
  opt.jobs = 4;
  return ctx(t).vf.run(name, opt);
}

bool report_line(int criterion, const std::string& what, const Report& rep) {
  std::printf("[criterion %d] %s: %s (%s, %ld cases, %zu failures)\n", criterion,
              rep.ok() ? "PASS" : "FAIL", what.c_str(), rep.lemma.c_str(), rep.cases,
              rep.failures.size());
  for (const std::string& f : rep.failures) std::printf("    failure: %s\n", f.c_str());
  std::fflush(stdout);
  return rep.ok();
}

void plain_line(int criterion, const std::string& what, bool ok) {
  std::printf("[criterion %d] %s: %s\n", criterion, ok ? "PASS" : "FAIL", what.c_str());
  std::fflush(stdout);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args, const std::string& out_path) {
  std::string cmd = std::string(ALCOVE_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  return std::system(cmd.c_str());
}

}  // namespace

TEST_CASE("criterion 1: Schubert fixed-point set equality") {
  VerifyOptions a1;
  a1.max_length = 12;
  bool ok = report_line(1, "A1 l<=12", run_sweep(CartanType::A1, "thm-sch", a1));
  VerifyOptions a2;
  a2.max_length = 6;
  ok = report_line(1, "A2 l<=6", run_sweep(CartanType::A2, "thm-sch", a2)) && ok;
  VerifyOptions b2;
  b2.max_length = 6;
  ok = report_line(1, "B2 l<=6", run_sweep(CartanType::B2, "thm-sch", b2)) && ok;
  CHECK(ok);
}

TEST_CASE("criterion 2: Schubert tuple regularity constant") {
  {
    SchubertModel model(ctx(CartanType::A1).ord);
    plain_line(2, "A1 recipe constant r = 2", model.sch_regularity_r() == 2);
    CHECK(model.sch_regularity_r() == 2);
  }
  VerifyOptions a1;
  a1.max_length = 12;
  a1.m = 1;
  bool ok = report_line(2, "A1 l<=12 m=1", run_sweep(CartanType::A1, "sch-reg", a1));
  VerifyOptions a2;
  a2.max_length = 8;
  a2.m = 1;
  ok = report_line(2, "A2 l<=8 m=1", run_sweep(CartanType::A2, "sch-reg", a2)) && ok;
  CHECK(ok);
}

TEST_CASE("criterion 3: order engine cross-validation on >= 10^4 pairs") {
  long total = 0;
  bool ok = true;
  VerifyOptions a1;
  a1.bound = 2;
  Report r1 = run_sweep(CartanType::A1, "order-cross", a1);
  total += r1.cases;
  ok = report_line(3, "A1 box 2", r1) && ok;
  VerifyOptions a2;
  a2.bound = 1;
  Report r2 = run_sweep(CartanType::A2, "order-cross", a2);
  total += r2.cases;
  ok = report_line(3, "A2 box 1", r2) && ok;
  VerifyOptions b2;
  b2.bound = 1;
  Report r3 = run_sweep(CartanType::B2, "order-cross", b2);
  total += r3.cases;
  ok = report_line(3, "B2 box 1", r3) && ok;
  plain_line(3, "total pairs " + std::to_string(total) + " >= 10000", total >= 10000);
  CHECK(total >= 10000);
  CHECK(ok);
}

TEST_CASE("criterion 4: order and admissibility lemma suite") {
  struct Item {
    const char* name;
    int max_length;
  };
  const Item items[] = {
      {"border-a", 6}, {"border-b", 6}, {"border-c", 5}, {"border-d", 6},
      {"border-e", 6}, {"border-f", 6}, {"border-g", 6}, {"lborder-a", 6},
      {"lborder-b", 6}, {"lborder-c", 5}, {"lord-a", 6},  {"lord-b", 6},
      {"cord-a", 6},   {"cord-b", 6},   {"cord-c", 6},   {"corder", 6},
      {"porder", 6},   {"lorder1", 6},  {"ladm", 4},     {"lord1-a", 4},
      {"lord1-bc", 4}, {"eqadm", 4},    {"eorder", 4},   {"cint", 6},
      {"k-reg", 6},    {"vertex-extrema", 6}, {"subword", 6},
  };
  bool ok = true;
  for (CartanType t : {CartanType::A1, CartanType::A2}) {
    for (const Item& item : items) {
      VerifyOptions opt;
      opt.max_length = item.max_length;
      opt.samples = 500;
      Report rep = run_sweep(t, item.name, opt);
      ok = report_line(4, to_string(t) + " " + item.name, rep) && ok;
    }
  }
  // Bruhat vs subword agreement is also required on B2.
  VerifyOptions b2;
  b2.max_length = 6;
  ok = report_line(4, "B2 subword", run_sweep(CartanType::B2, "subword", b2)) && ok;
  CHECK(ok);
}

TEST_CASE("criterion 5: effective constants") {
  {
    SchubertModel model(ctx(CartanType::A1).ord);
    plain_line(5, "A1 claim_bound r = 1", model.claim_bound_r() == 1);
    CHECK(model.claim_bound_r() == 1);
    plain_line(5, "A1 lemma_finite r = 2", model.lemma_finite_r() == 2);
    CHECK(model.lemma_finite_r() == 2);
  }
  bool ok = true;
  for (CartanType t : {CartanType::A1, CartanType::A2}) {
    VerifyOptions opt;
    opt.m = 1;
    opt.samples = 60;
    ok = report_line(5, to_string(t) + " bound dichotomy", run_sweep(t, "bound", opt)) && ok;
    ok = report_line(5, to_string(t) + " int (r'=2r, m=1)", run_sweep(t, "int", opt)) && ok;
    ok = report_line(5, to_string(t) + " finite witness", run_sweep(t, "finite", opt)) && ok;
    ok = report_line(5, to_string(t) + " seq stream", run_sweep(t, "seq", opt)) && ok;
    ok = report_line(5, to_string(t) + " order2 recipe", run_sweep(t, "order2", opt)) && ok;
    ok = report_line(5, to_string(t) + " decomp covering", run_sweep(t, "decomp", opt)) && ok;
    ok = report_line(5, to_string(t) + " claim-ineq sandwich", run_sweep(t, "claim-ineq", opt)) && ok;
    ok = report_line(5, to_string(t) + " cadm fixed points", run_sweep(t, "cadm", opt)) && ok;
    ok = report_line(5, to_string(t) + " psi-closure", run_sweep(t, "psi-closure", opt)) && ok;
  }
  CHECK(ok);
}

TEST_CASE("criterion 6: Gordan and Hilbert bases") {
  RootSystem& rs = ctx(CartanType::A1).rs;
  Sublattice lam = make_sublattice(rs, {VecI::Ones(1)});
  HilbertBasisResult hb6 = hilbert_basis(rs, lam, 6);
  bool four = hb6.basis.size() == 4;
  auto has = [&](Int mu, Int d0, Int d1) {
    for (const ReesElem& e : hb6.basis)
      if (e.mu[0] == mu && e.degree[0] == d0 && e.degree[1] == d1) return true;
    return false;
  };
  bool exact = four && has(0, 1, 0) && has(0, 0, 1) && has(1, 1, 0) && has(-1, 0, 1);
  plain_line(6, "A1 Hilbert basis equals the four-element set", exact);
  CHECK(exact);
  plain_line(6, "generation verified to degree 6", hb6.generation_verified);
  CHECK(hb6.generation_verified);
  HilbertBasisResult hb5 = hilbert_basis(rs, lam, 5);
  bool stable = hb5.basis.size() == hb6.basis.size() && hb6.stable && hb5.stable;
  plain_line(6, "basis stable between bounds 5 and 6", stable);
  CHECK(stable);
  VerifyOptions opt;
  opt.bound = 5;
  bool ok = report_line(6, "A1 gordan sweep", run_sweep(CartanType::A1, "gordan", opt));
  VerifyOptions opt2;
  opt2.bound = 4;
  ok = report_line(6, "A2 gordan sweep", run_sweep(CartanType::A2, "gordan", opt2)) && ok;
  CHECK(ok);
}

TEST_CASE("criterion 7: truncation shadow") {
  VerifyOptions opt;
  opt.bound = 5;
  Report rep = run_sweep(CartanType::A2, "trunc", opt);
  bool ok = report_line(7, "A2 sublattice Z acheck_1, regular coords <= 5", rep);
  CHECK(ok);
}

TEST_CASE("criterion 8: CLI determinism across --jobs") {
  const std::string tmp = "/tmp/alcove_det_";
  struct Cmd {
    std::string args1, args8, out1, out8;
  };
  std::vector<Cmd> cmds;
  cmds.push_back({"verify thm-sch --type A1 --max-length 8 --jobs 1",
                  "verify thm-sch --type A1 --max-length 8 --jobs 8", tmp + "a1.json",
                  tmp + "a8.json"});
  cmds.push_back({"verify lemma --name cint --type A2 --samples 40 --jobs 1",
                  "verify lemma --name cint --type A2 --samples 40 --jobs 8", tmp + "b1.json",
                  tmp + "b8.json"});
  cmds.push_back({"verify lemma --name order-cross --type A2 --bound 1 --jobs 1",
                  "verify lemma --name order-cross --type A2 --bound 1 --jobs 8",
                  tmp + "c1.json", tmp + "c8.json"});
  bool ok = true;
  for (const Cmd& c : cmds) {
    int rc1 = run_cli(c.args1, c.out1);
    int rc8 = run_cli(c.args8, c.out8);
    bool same = rc1 == rc8 && read_file(c.out1) == read_file(c.out8) &&
                !read_file(c.out1).empty();
    plain_line(8, "byte-identical: " + c.args1, same);
    ok = same && ok;
  }
  // plot twice (no jobs dimension, still byte identical run to run)
  std::string p1 = tmp + "p1.svg", p2 = tmp + "p2.svg";
  std::string plot_args =
      "plot lower-set --type A2 --order bruhat '{\"translation\":[1,1],\"word\":[]}' "
      "--window 3 -o ";
  int rp1 = run_cli(plot_args + p1, tmp + "plog1");
  int rp2 = run_cli(plot_args + p2, tmp + "plog2");
  bool plot_same = rp1 == 0 && rp2 == 0 && read_file(p1) == read_file(p2) &&
                   !read_file(p1).empty();
  plain_line(8, "byte-identical plot output", plot_same);
  ok = plot_same && ok;
  CHECK(ok);
}

TEST_CASE("golden files: root description and plots") {
  const std::string dir = ALCOVE_GOLDEN_DIR;
  struct Gold {
    std::string args;
    std::string file;
  };
  std::vector<Gold> golds = {
      {"root describe --type A2", "root_a2.json"},
      {"root describe --type B2", "root_b2.json"},
      {"order cmp --type A1 --rel chamber:e '{\"translation\":[0],\"word\":[1]}' "
       "'{\"translation\":[1],\"word\":[1]}'",
       "order_a1.json"},
      {"schubert tuple --type A1 '{\"translation\":[1],\"word\":[]}'", "schubert_a1.json"},
      {"monoid hilbert --type A1 --sublattice '[[1]]' --bound 6", "hilbert_a1.json"},
  };
  bool ok = true;
  for (const Gold& g : golds) {
    std::string out = "/tmp/alcove_golden_out";
    run_cli(g.args, out);
    std::string expect = read_file(dir + "/" + g.file);
    std::string got = read_file(out);
    bool same = !expect.empty() && expect == got;
    if (!same)
      std::printf("golden mismatch for %s (see %s)\n", g.file.c_str(), g.args.c_str());
    ok = same && ok;
  }
  plain_line(0, "golden files match", ok);
  CHECK(ok);
}

TEST_CASE("CLI example invocations and exit codes") {
  // order cmp example from the interface spec: s1 <=_{C+} s0
  std::string out = "/tmp/alcove_cli_check";
  int rc = run_cli(
      "order cmp --type A1 --rel chamber:e '{\"translation\":[0],\"word\":[1]}' "
      "'{\"translation\":[1],\"word\":[1]}'",
      out);
  CHECK(rc == 0);
  CHECK(read_file(out).find("\"leq\": true") != std::string::npos);
  // verify thm-sch exits 0
  CHECK(run_cli("verify thm-sch --type A1 --max-length 8", out) == 0);
  // usage errors exit 2
  int rc2 = run_cli("root describe --type E8", out);
  CHECK(WEXITSTATUS(rc2) == 2);
  int rc_json = run_cli("order cmp --type A1 --rel bruhat 'not json' '{}'", out);
  CHECK(WEXITSTATUS(rc_json) == 2);
  // trunc-check through the CLI: qualifying psi on the A2 sublattice
  CHECK(run_cli("monoid trunc-check --type A2 --sublattice '[[1,0]]' --psi 1 --coords "
                "'{\"coords\":{\"0\":2,\"1\":2,\"2\":2,\"3\":2,\"4\":2,\"5\":2}}'",
                out) == 0);
  CHECK(read_file(out).find("\"holds\": true") != std::string::npos);
  int rc_dom = run_cli("monoid trunc-check --type A2 --sublattice '[[1,0]]' --psi 0 --coords "
                       "'{\"coords\":{\"0\":2,\"1\":2,\"2\":2,\"3\":2,\"4\":2,\"5\":2}}'",
                       out);
  CHECK(WEXITSTATUS(rc_dom) == 2);
  int rc3 = run_cli("plot lower-set --type A1 --order bruhat "
                    "'{\"translation\":[0],\"word\":[]}' -o /tmp/x.svg",
                    out);
  CHECK(WEXITSTATUS(rc3) == 2);  // rank 1 is not plottable
  // element info
  CHECK(run_cli("element info --type A2 --psi 0 '{\"translation\":[1,0],\"word\":[1,2]}'",
                out) == 0);
  // root describe A2 mentions 6 roots
  CHECK(run_cli("root describe --type A2", out) == 0);
  std::string desc = read_file(out);
  CHECK(desc.find("\"weyl_order\": 6") != std::string::npos);
  // the plot of a Bruhat lower set shades exactly |interval| alcoves:
  // t_{(1,1)} has length 4 and a 12-element interval
  CHECK(run_cli("plot lower-set --type A2 --order bruhat "
                "'{\"translation\":[1,1],\"word\":[]}' --window 4 -o /tmp/alcove_t11.svg",
                out) == 0);
  std::string svg = read_file("/tmp/alcove_t11.svg");
  CHECK(svg.find("shaded=12 of ") != std::string::npos);
  {
    RootSystem& rs = ctx(CartanType::A2).rs;
    VecI mu(2);
    mu << 1, 1;
    CHECK(ctx(CartanType::A2).ord.bruhat().lower_interval(aff_translation(rs, mu)).size() ==
          12);
  }
}
