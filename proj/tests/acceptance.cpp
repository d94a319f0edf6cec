// Prints one PASS/FAIL line per acceptance criterion; exits nonzero if any fail.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "family.hpp"
#include "opetokit/bicategory.hpp"
#include "opetokit/equivalences.hpp"
#include "opetokit/fixtures.hpp"
#include "opetokit/io.hpp"
#include "opetokit/universality.hpp"
#include "oracles.hpp"

using namespace opetokit;
using namespace testsupport;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int bit(const OneCellId& x) { return x == "s" ? 1 : 0; }

Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto z2 = fixtures::z2_category();
  if (zeta1(zeta1_inv(z2)) != z2) fail(o, "Z/2 category does not round trip");
  const auto fam = category_family(3, 6);
  std::size_t bad = 0;
  for (const auto& c : fam) bad += zeta1(zeta1_inv(c, 3)) != c;
  const double t = ms_since(t0);
  if (bad) fail(o, std::to_string(bad) + " categories do not round trip");
  if (t > 5000) fail(o, "took " + std::to_string(t) + " ms");
  if (o.pass) o.detail = std::to_string(fam.size()) + " categories";
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t arrows = 0, disagreements = 0;
  for (const auto& c : category_family(3, 6)) {
    const auto x = zeta1_inv(c, 3);
    for (const auto& [f, e] : c.arrows) {
      ++arrows;
      disagreements += is_universal_1cell(x, f) != has_two_sided_inverse(c, f);
    }
  }
  if (disagreements) fail(o, std::to_string(disagreements) + " disagreements");
  else o.detail = std::to_string(arrows) + " arrows, 0 disagreements";
  return o;
}

// Pentagon instances against the cocycle identity for the cochain w.
std::size_t mismatches(const FiniteBicategory& b, Cochain w, std::size_t& failing) {
  std::size_t n = 0;
  failing = 0;
  const auto inst = pentagon_instances(b);
  if (inst.size() != 16) return 16;
  for (const auto& p : inst) {
    n += p.holds() != cocycle_at(w, bit(p.k), bit(p.h), bit(p.g), bit(p.f));
    failing += !p.holds();
  }
  return n;
}

Outcome criterion3() {
  Outcome o;
  const auto t0 = Clock::now();
  if (!validate_bicategory(fixtures::two_group()).ok()) fail(o, "two-group is not valid");
  std::size_t failing = 0;
  if (mismatches(fixtures::two_group(), 0b10000000, failing) || failing) {
    fail(o, "two-group pentagon disagrees with the cocycle oracle");
  }
  const auto broken = fixtures::two_group_broken();
  if (mismatches(broken, 0b10100000, failing)) {
    fail(o, "broken associator disagrees with the cocycle oracle");
  }
  if (failing == 0 || validate_bicategory(broken).count("pentagon") == 0) {
    fail(o, "no witness for the non-cocycle");
  }
  const double t = ms_since(t0);
  if (t > 1000) fail(o, "took " + std::to_string(t) + " ms");
  if (o.pass) o.detail = "16 quadruples agree, " + std::to_string(failing) + " witnesses";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto& b : {fixtures::two_group(), fixtures::idempotent()}) {
    const auto g = zeta2_inv(b, 4);
    if (zeta2(g.x, g.biasing) != b) fail(o, "a bicategory does not round trip");
  }
  const double t = ms_since(t0);
  if (t > 10000) fail(o, "took " + std::to_string(t) + " ms");
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto two = zeta2_inv(fixtures::two_group());
  const auto idem = zeta2_inv(fixtures::idempotent());
  if (!check_coherence(two.x).ok()) fail(o, "two-group structure is incoherent");
  const auto r = check_coherence(idem.x);
  if (!r.ok()) fail(o, "idempotent structure is incoherent");
  UniversalityChecker u(idem.x);
  if (u.cell2("iota[*]/t")) fail(o, "t after iota is universal");
  const auto niche = idem.x.cell("iota[*]/t").source;
  if (u.universal_occupants(niche).empty()) fail(o, "its niche has no universal occupant");
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (const auto& b : {fixtures::two_group(), fixtures::idempotent(),
                        fixtures::idempotent_loop(), fixtures::parallel_pair()}) {
    const auto g = zeta2_inv(b);
    const auto r = validate_bicategory(zeta2(g.x, g.biasing));
    for (const char* law : {"interchange", "naturality of a", "naturality of r",
                            "naturality of l", "pentagon", "triangle"}) {
      if (r.count(law)) fail(o, std::string(law) + " fails");
    }
  }
  struct Case {
    FiniteBicategory src, dst;
    LaxFunctor f;
  };
  const Case cases[] = {
      {fixtures::two_group(), fixtures::two_group(), identity_lax_functor(fixtures::two_group())},
      {fixtures::two_group(), fixtures::two_group(), fixtures::two_group_twist()},
      {fixtures::idempotent_loop(), fixtures::idempotent(), fixtures::idempotent_loop_collapse()},
  };
  for (const auto& c : cases) {
    const auto gs = zeta2_inv(c.src);
    const auto gd = zeta2_inv(c.dst);
    const auto m = zeta2_mor_inv(c.f, gs, gd);
    const auto f = zeta2_mor(m, gs.x, gs.biasing, gd.x, gd.biasing);
    const auto r = validate_lax_functor(f, zeta2(gs.x, gs.biasing), zeta2(gd.x, gd.biasing));
    if (!r.ok()) fail(o, "translated morphism: " + r.violations.front().law);
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto b = fixtures::two_group();
  std::size_t pairs = 0;
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto trees = Bracketing::all(m);
    for (int w = 0; w < (1 << m); ++w) {
      std::vector<OneCellId> p;
      for (std::size_t i = 0; i < m; ++i) p.push_back((w >> i) & 1 ? "s" : "e");
      for (const auto& s : trees) {
        for (const auto& t : trees) {
          ++pairs;
          const auto st = coherence_cell(b, p, s, t);
          const auto ts = coherence_cell(b, p, t, s);
          if (!is_invertible_2cell(b, st) || b.vert(ts, st) != b.id(tree_value(b, p, s))) {
            fail(o, "coherence cell is not invertible");
          }
          for (const auto& u : trees) {
            if (b.vert(coherence_cell(b, p, t, u), st) != coherence_cell(b, p, s, u)) {
              fail(o, "coherence cells do not compose");
            }
          }
        }
      }
    }
  }
  const auto l = Bracketing::leaf();
  auto n = [](Bracketing x, Bracketing y) { return Bracketing::node(x, y); };
  const auto left = n(l, n(l, n(l, l)));
  const auto right = n(n(n(l, l), l), l);
  const auto mid = n(n(l, l), n(l, l));
  const auto top1 = n(l, n(n(l, l), l));
  const auto top2 = n(n(l, n(l, l)), l);
  for (int w = 0; w < 16; ++w) {
    std::vector<OneCellId> p;
    for (int i = 0; i < 4; ++i) p.push_back((w >> i) & 1 ? "s" : "e");
    const auto short_leg = b.vert(coherence_cell(b, p, mid, right), coherence_cell(b, p, left, mid));
    const auto long_leg =
        b.vert(coherence_cell(b, p, top2, right),
               b.vert(coherence_cell(b, p, top1, top2), coherence_cell(b, p, left, top1)));
    if (short_leg != long_leg) fail(o, "pentagon legs differ");
  }
  if (o.pass) o.detail = std::to_string(pairs) + " bracketing pairs";
  return o;
}

std::array<Classification, 3> classifications() {
  const auto two = zeta2_inv(fixtures::two_group());
  const auto loop = zeta2_inv(fixtures::idempotent_loop());
  const auto idem = zeta2_inv(fixtures::idempotent());
  const auto twist = zeta2_mor_inv(fixtures::two_group_twist(), two, two);
  const auto collapse = zeta2_mor_inv(fixtures::idempotent_loop_collapse(), loop, idem);
  return {classify_morphism(identity_morphism(two.x), two.x, two.biasing, two.x, two.biasing),
          classify_morphism(twist, two.x, two.biasing, two.x, two.biasing),
          classify_morphism(collapse, loop.x, loop.biasing, idem.x, idem.biasing)};
}

Outcome criterion8() {
  Outcome o;
  const auto a = classifications();
  const auto b = classifications();
  const Verdict want[] = {Verdict::Strict, Verdict::Weak, Verdict::Lax};
  for (int i = 0; i < 3; ++i) {
    if (a[i].verdict != want[i]) {
      fail(o, "expected " + std::string(to_string(want[i])) + ", got " +
                  std::string(to_string(a[i].verdict)));
    }
    if (a[i].verdict != b[i].verdict || a[i].witness != b[i].witness || a[i].image != b[i].image) {
      fail(o, "verdicts differ between runs");
    }
  }
  if (o.pass) o.detail = "lax witness " + a[2].witness + " -> " + a[2].image;
  return o;
}

struct Captured {
  int code;
  std::string out;
};

Captured capture(const std::string& cmd) {
  Captured c{-1, {}};
  FILE* p = ::popen((cmd + " 2>&1").c_str(), "r");
  if (!p) return c;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) c.out.append(buf.data(), n);
  const int status = ::pclose(p);
  c.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

Outcome criterion9() {
  Outcome o;
  const fs::path dir = OPETOKIT_FIXTURES_DIR;
  const std::map<std::string, std::pair<std::string, std::string>> sides = {
      {"two_group_identity", {"two_group_op2", "two_group_op2"}},
      {"two_group_twist", {"two_group", "two_group"}},
      {"two_group_twist_op", {"two_group_op2", "two_group_op2"}},
      {"idempotent_loop_collapse", {"idempotent_loop", "idempotent"}},
      {"idempotent_loop_collapse_op", {"idempotent_loop_op2", "idempotent_op2"}},
  };
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    std::string cmd = std::string(OPETOKIT_BINARY) + " roundtrip '" + f.string() + "'";
    const auto stem = f.stem().string();
    if (auto it = sides.find(stem); it != sides.end()) {
      cmd += " --source '" + (dir / (it->second.first + ".json")).string() + "'";
      cmd += " --target '" + (dir / (it->second.second + ".json")).string() + "'";
    }
    const auto a = capture(cmd);
    const auto b = capture(cmd);
    if (a.code != 0) fail(o, stem + " exits " + std::to_string(a.code));
    if (a.out != b.out || a.code != b.code) fail(o, stem + " output differs between runs");
  }
  if (files.empty()) fail(o, "no fixtures found");
  if (o.pass) o.detail = std::to_string(files.size()) + " fixtures";
  return o;
}

}  // namespace

int main() {
  const std::function<Outcome()> criteria[] = {criterion1, criterion2, criterion3,
                                               criterion4, criterion5, criterion6,
                                               criterion7, criterion8, criterion9};
  int failed = 0;
  for (int i = 0; i < 9; ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      fail(o, std::string("threw ") + e.what());
    }
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(1);
    line << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL");
    if (!o.detail.empty()) line << "  " << o.detail;
    line << "  (" << ms_since(t0) << " ms)";
    std::cout << line.str() << "\n";
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
