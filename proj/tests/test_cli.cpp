#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "json.hpp"
#include "opetokit/cli.hpp"
#include "opetokit/fixtures.hpp"
#include "opetokit/io.hpp"
#include "opetokit/universality.hpp"

using namespace opetokit;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "opetokit");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(OPETOKIT_FIXTURES_DIR) + "/" + name + ".json";
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("opetokit-cli-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string put(const std::string& name, const std::string& text) {
  const auto p = (scratch() / name).string();
  write_file(p, text);
  return p;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

struct EnvGuard {
  EnvGuard(const char* value) {
    if (value) {
      ::setenv("OPETOKIT_ARITY_BOUND", value, 1);
    } else {
      ::unsetenv("OPETOKIT_ARITY_BOUND");
    }
  }
  ~EnvGuard() { ::unsetenv("OPETOKIT_ARITY_BOUND"); }
};

}  // namespace

TEST_CASE("validate") {
  SUBCASE("clean fixtures") {
    for (const char* f : {"letters", "z2_category", "z2_op1cat", "two_group", "idempotent",
                          "two_group_op2", "idempotent_op2"}) {
      const auto r = run({"validate", fixture(f)});
      CAPTURE(f);
      CHECK(r.code == 0);
      CHECK(contains(r.out, "ok"));
    }
  }
  SUBCASE("morphisms need both sides") {
    CHECK(run({"validate", fixture("two_group_twist")}).code == 2);
    CHECK(run({"validate", fixture("two_group_twist"), "--source", fixture("two_group"),
               "--target", fixture("two_group")})
              .code == 0);
    CHECK(run({"validate", fixture("idempotent_loop_collapse_op"), "--source",
               fixture("idempotent_loop_op2"), "--target", fixture("idempotent_op2")})
              .code == 0);
  }
  SUBCASE("a dangling id is named") {
    auto text = read_file(fixture("z2_category"));
    const auto at = text.find("\"result\": \"s\"");
    REQUIRE(at != std::string::npos);
    text.replace(at, 13, "\"result\": \"q\"");
    const auto r = run({"validate", put("dangling.json", text)});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "dangling id"));
    CHECK(contains(r.out, "q"));
  }
  SUBCASE("the broken associator is reported") {
    const auto r = run({"validate", put("broken.json", serialize(fixtures::two_group_broken()))});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "pentagon"));
    CHECK(contains(r.out, "5 violation(s)"));
  }
  SUBCASE("syntax errors") {
    const auto r = run({"validate", put("bad.json", "{\n  \"kind\": \"set\",\n  \"elements\": [\n")});
    CHECK(r.code == 2);
    CHECK(contains(r.err, "ParseError"));
    CHECK(contains(r.err, "line 4"));
  }
  SUBCASE("unknown kind") {
    CHECK(run({"validate", put("widget.json", R"({"kind":"widget"})")}).code == 2);
    CHECK(run({"validate", fixture("two_group"), "--kind", "category"}).code == 2);
    CHECK(run({"validate", fixture("z2_category"), "--kind", "cat"}).code == 0);
  }
  SUBCASE("json report") {
    const auto r = run({"validate", fixture("two_group"), "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["kind"] == "bicategory");
    CHECK(j["violations"].empty());
  }
}

TEST_CASE("universal") {
  SUBCASE("one cell") {
    const auto r = run({"universal", fixture("idempotent_op2"), "--cell", "iota[*]/t"});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "iota[*]/t: non-universal"));
    CHECK(run({"universal", fixture("idempotent_op2"), "--cell", "iota[*]"}).code == 0);
    CHECK(run({"universal", fixture("idempotent_op2"), "--cell", "I"}).code == 0);
  }
  SUBCASE("every cell") {
    const auto r = run({"universal", fixture("two_group_op2"), "--all"});
    CHECK(r.code == 0);
    CHECK_FALSE(contains(r.out, "non-universal"));
    CHECK(contains(r.out, "c[s,s]: universal"));
    const auto j = nlohmann::json::parse(
        run({"universal", fixture("idempotent_op2"), "--all", "--format", "json"}).out);
    CHECK(j["cells"]["iota[*]/t"] == false);
    CHECK(j["coherence"]["ok"] == true);
  }
  SUBCASE("opetopic 1-category") {
    const auto r = run({"universal", fixture("z2_op1cat")});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "s: universal"));
  }
  SUBCASE("missing id") {
    const auto r = run({"universal", fixture("two_group_op2"), "--cell", "nope"});
    CHECK(r.code == 1);
    CHECK(contains(r.err, "DanglingId"));
  }
  SUBCASE("--cell and --all exclude each other") {
    CHECK(run({"universal", fixture("two_group_op2"), "--all", "--cell", "e"}).code == 2);
  }
}

TEST_CASE("convert") {
  SUBCASE("bicategory to a coherent opetopic structure") {
    const auto r = run({"convert", fixture("two_group"), "--to", "opic"});
    REQUIRE(r.code == 0);
    const auto d = std::get<Op2Document>(parse_document(r.out));
    CHECK(validate_op2(d.x).ok());
    CHECK(check_coherence(d.x).ok());
    CHECK(d.biasing.has_value());
    CHECK(r.out == read_file(fixture("two_group_op2")));
  }
  SUBCASE("and back") {
    const auto r = run({"convert", fixture("two_group_op2"), "--to", "bicat"});
    CHECK(r.code == 0);
    CHECK(r.out == read_file(fixture("two_group")));
  }
  SUBCASE("category") {
    const auto r = run({"convert", fixture("z2_category"), "--kind", "cat"});
    CHECK(r.code == 0);
    CHECK(kind_of(parse_document(r.out)) == Kind::Op1Cat);
    CHECK(r.out == read_file(fixture("z2_op1cat")));
  }
  SUBCASE("morphisms") {
    const auto r = run({"convert", fixture("idempotent_loop_collapse"), "--source",
                        fixture("idempotent_loop"), "--target", fixture("idempotent")});
    CHECK(r.code == 0);
    CHECK(r.out == read_file(fixture("idempotent_loop_collapse_op")));
    const auto back = run({"convert", fixture("idempotent_loop_collapse_op"), "--source",
                           fixture("idempotent_loop_op2"), "--target",
                           fixture("idempotent_op2")});
    CHECK(back.code == 0);
    CHECK(back.out == read_file(fixture("idempotent_loop_collapse")));
  }
  SUBCASE("incoherent input") {
    auto d = std::get<Op2Document>(load_document(fixture("idempotent_op2")));
    d.biasing.reset();
    d.x.cells2.erase("iota[*]");
    std::erase_if(d.x.grafts, [](const auto& kv) {
      return kv.first.outer == "iota[*]" || kv.first.inner == "iota[*]" ||
             kv.second == "iota[*]";
    });
    const auto r = run({"convert", put("incoherent.json", serialize(d))});
    CHECK(r.code == 1);
    CHECK(contains(r.err, "NoUniversalOccupant"));
  }
  SUBCASE("wrong direction and bad flags") {
    CHECK(run({"convert", fixture("two_group"), "--to", "bicat"}).code == 1);
    CHECK(run({"convert", fixture("two_group"), "--to", "sideways"}).code == 2);
    CHECK(run({"convert", fixture("letters")}).code == 1);
  }
  SUBCASE("output file") {
    const auto out = (scratch() / "z2.json").string();
    CHECK(run({"convert", fixture("z2_category"), "--output", out}).code == 0);
    CHECK(read_file(out) == read_file(fixture("z2_op1cat")));
  }
}

TEST_CASE("arity bound") {
  auto bound_of = [](const Run& r) {
    return nlohmann::json::parse(r.out)["arity_bound"].get<int>();
  };
  {
    EnvGuard env(nullptr);
    CHECK(bound_of(run({"convert", fixture("idempotent")})) == 4);
  }
  {
    EnvGuard env("3");
    CHECK(bound_of(run({"convert", fixture("idempotent")})) == 3);
    CHECK(bound_of(run({"convert", fixture("idempotent"), "--arity-bound", "2"})) == 2);
  }
  {
    EnvGuard env("lots");
    CHECK(run({"convert", fixture("idempotent")}).code == 2);
  }
  CHECK(run({"convert", fixture("idempotent"), "--arity-bound", "1"}).code == 1);
}

TEST_CASE("roundtrip") {
  SUBCASE("structures") {
    for (const char* f : {"letters", "z2_category", "z2_op1cat", "two_group", "idempotent",
                          "idempotent_loop", "parallel_pair", "two_group_op2",
                          "idempotent_op2", "idempotent_loop_op2"}) {
      CAPTURE(f);
      const auto r = run({"roundtrip", fixture(f)});
      CHECK(r.code == 0);
      CHECK(contains(r.out, "identical"));
    }
  }
  SUBCASE("morphisms") {
    CHECK(run({"roundtrip", fixture("two_group_twist"), "--source", fixture("two_group"),
               "--target", fixture("two_group")})
              .code == 0);
    CHECK(run({"roundtrip", fixture("two_group_twist_op"), "--source",
               fixture("two_group_op2"), "--target", fixture("two_group_op2")})
              .code == 0);
  }
  SUBCASE("a corrupted biasing") {
    auto d = std::get<Op2Document>(load_document(fixture("two_group_op2")));
    d.biasing->c[{"s", "s"}] = "c[s,s]/neg_e";
    const auto path = put("corrupt.json", serialize(d));
    const auto r = run({"roundtrip", path});
    CHECK(r.code == 1);
    CHECK(contains(r.out, "biasing.c"));
    CHECK(run({"roundtrip", path, "--seedless-tiebreak"}).code == 0);
  }
  SUBCASE("a non-universal biasing") {
    auto d = std::get<Op2Document>(load_document(fixture("idempotent_op2")));
    d.biasing->iota["*"] = "iota[*]/t";
    const auto r = run({"roundtrip", put("nonuniversal.json", serialize(d))});
    CHECK(r.code == 1);
    CHECK(contains(r.err, "InvalidBiasing"));
  }
}

TEST_CASE("classify") {
  const auto two = fixture("two_group_op2");
  SUBCASE("strict") {
    const auto r = run({"classify", fixture("two_group_identity"), "--source", two, "--target", two});
    CHECK(r.code == 0);
    CHECK(r.out == "strict\n");
  }
  SUBCASE("weak") {
    const auto r = run({"classify", fixture("two_group_twist_op"), "--source", two, "--target", two});
    CHECK(r.code == 0);
    CHECK(contains(r.out, "weak"));
    const auto lax_side = run({"classify", fixture("two_group_twist"), "--source",
                               fixture("two_group"), "--target", fixture("two_group")});
    CHECK(contains(lax_side.out, "weak"));
  }
  SUBCASE("lax") {
    const auto r = run({"classify", fixture("idempotent_loop_collapse_op"), "--source",
                        fixture("idempotent_loop_op2"), "--target", fixture("idempotent_op2"),
                        "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["verdict"] == "lax");
    CHECK(j["witness"] == "c[x,x]");
    CHECK(j["image"] == "c[I,I]/t");
  }
  SUBCASE("invalid morphism") {
    auto m = std::get<OpMorphism>(load_document(fixture("two_group_identity")));
    m.f2["neg_s"] = "id_s";
    const auto r = run({"classify", put("bad_morphism.json", serialize(m)), "--source", two,
                        "--target", two});
    CHECK(r.code == 1);
    CHECK(contains(r.err, "InvalidInput"));
  }
  SUBCASE("usage") {
    CHECK(run({"classify", fixture("two_group_identity")}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"explode", "x"}).code == 2);
    CHECK(run({"--help"}).code == 0);
  }
}

TEST_CASE("shipped fixtures are reproducible") {
  const auto dir = scratch() / "regen";
  fs::create_directories(dir);
  const std::string cmd =
      std::string(OPETOKIT_MAKE_FIXTURES) + " " + dir.string();
  REQUIRE(std::system(cmd.c_str()) == 0);
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(OPETOKIT_FIXTURES_DIR)) {
    if (e.path().extension() != ".json") continue;
    ++n;
    CAPTURE(e.path().filename().string());
    CHECK(read_file(e.path().string()) == read_file((dir / e.path().filename()).string()));
    // shipped files are already canonical
    const auto text = read_file(e.path().string());
    CHECK(serialize(parse_document(text)) == text);
  }
  CHECK(n == 15);
}
