#include "opetokit/cli.hpp"

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "opetokit/bicategory.hpp"
#include "opetokit/equivalences.hpp"
#include "opetokit/error.hpp"
#include "opetokit/io.hpp"
#include "opetokit/universality.hpp"

namespace opetokit {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  std::string kind;
  std::string to;
  std::string format = "text";
  std::string cell;
  std::string output;
  std::string source;
  std::string target;
  std::optional<std::size_t> arity_bound;
  bool all = false;
  bool direct_niche_search = false;
  bool seedless_tiebreak = false;
};

std::optional<Kind> kind_flag(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "cat") return Kind::Category;
  if (s == "bicat") return Kind::Bicategory;
  return kind_from_string(s);
}

std::size_t bound(const Options& o) {
  return o.arity_bound ? *o.arity_bound : env_arity_bound();
}

// A file's own bound is kept unless --arity-bound is given.
template <class X>
void apply_bound(X& x, const Options& o) {
  if (o.arity_bound) x.arity_bound = *o.arity_bound;
}

template <class T>
T load_as(const std::string& path, Kind k) {
  return std::get<T>(load_document(path, k));
}

void need_sides(const Options& o) {
  if (o.source.empty() || o.target.empty()) {
    throw UsageError("this kind needs --source and --target");
  }
}

json report_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) {
    v.push_back({{"law", x.law}, {"detail", x.detail}});
  }
  return {{"ok", r.ok()}, {"violations", v}, {"notes", r.notes}};
}

void print_report(std::ostream& out, const ValidationReport& r) {
  for (const auto& v : r.violations) out << v.law << ": " << v.detail << "\n";
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  if (r.ok()) {
    out << "ok\n";
  } else {
    out << r.violations.size() << " violation(s)\n";
  }
}

void emit(std::ostream& out, const Options& o, const std::string& text) {
  if (o.output.empty()) {
    out << text;
  } else {
    write_file(o.output, text);
  }
}

Biasing biasing_for(const Op2Document& d, const Options& o) {
  if (d.biasing && !o.seedless_tiebreak) {
    check_biasing(d.x, *d.biasing);
    return *d.biasing;
  }
  return choose_biasing(d.x);
}

void require_valid(const ValidationReport& r, const std::string& what) {
  if (r.ok()) return;
  const auto& v = r.violations.front();
  throw Error(ErrorCode::InvalidInput,
              what + " is not valid (" + v.law + ": " + v.detail + ")");
}

Op2Document load_op2(const std::string& path, const Options& o) {
  auto d = load_as<Op2Document>(path, Kind::Op2Cat);
  apply_bound(d.x, o);
  require_valid(validate_op2(d.x), path);
  return d;
}

FiniteBicategory load_bicat(const std::string& path) {
  auto b = load_as<FiniteBicategory>(path, Kind::Bicategory);
  require_valid(validate_bicategory(b), path);
  return b;
}

// ---------------------------------------------------------------- validate

ValidationReport validate_any(Document& d, const Options& o) {
  return std::visit(
      [&](auto& v) -> ValidationReport {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiniteSet>) {
          return validate_op0(zeta0_inv(v.elements));
        } else if constexpr (std::is_same_v<T, FiniteOpOneCat>) {
          apply_bound(v, o);
          return validate_op1(v);
        } else if constexpr (std::is_same_v<T, Op2Document>) {
          apply_bound(v.x, o);
          auto r = validate_op2(v.x);
          if (r.ok() && v.biasing) {
            try {
              check_biasing(v.x, *v.biasing);
            } catch (const Error& e) {
              r.add("biasing", e.what());
            }
          }
          return r;
        } else if constexpr (std::is_same_v<T, FiniteCategory>) {
          return validate_category(v);
        } else if constexpr (std::is_same_v<T, FiniteBicategory>) {
          return validate_bicategory(v);
        } else if constexpr (std::is_same_v<T, OpMorphism>) {
          need_sides(o);
          auto src = load_document(o.source);
          if (std::holds_alternative<FiniteOpOneCat>(src)) {
            auto dst = load_as<FiniteOpOneCat>(o.target, Kind::Op1Cat);
            return validate_op_morphism(v, std::get<FiniteOpOneCat>(src), dst);
          }
          if (!std::holds_alternative<Op2Document>(src)) {
            throw Error(ErrorCode::UnknownKind,
                        "a morphism needs op1cat or op2cat sides");
          }
          auto dst = load_as<Op2Document>(o.target, Kind::Op2Cat);
          return validate_op_morphism(v, std::get<Op2Document>(src).x, dst.x);
        } else {
          need_sides(o);
          return validate_lax_functor(
              v, load_as<FiniteBicategory>(o.source, Kind::Bicategory),
              load_as<FiniteBicategory>(o.target, Kind::Bicategory));
        }
      },
      d);
}

int cmd_validate(const Options& o, std::ostream& out) {
  auto d = load_document(o.file, kind_flag(o.kind));
  const auto r = validate_any(d, o);
  if (o.format == "json") {
    auto j = report_json(r);
    j["kind"] = std::string(to_string(kind_of(d)));
    out << j.dump(2) << "\n";
  } else {
    out << to_string(kind_of(d)) << " " << o.file << "\n";
    print_report(out, r);
  }
  return r.ok() ? 0 : 1;
}

// ---------------------------------------------------------------- universal

int cmd_universal(const Options& o, std::ostream& out) {
  auto d = load_document(o.file, kind_flag(o.kind));
  std::map<std::string, bool> verdicts;
  std::optional<CoherenceReport> coherence;

  if (auto* x1 = std::get_if<FiniteOpOneCat>(&d)) {
    apply_bound(*x1, o);
    require_valid(validate_op1(*x1), o.file);
    if (!o.cell.empty()) {
      if (!x1->cells1.contains(o.cell)) throw Error(ErrorCode::DanglingId, o.cell);
      verdicts[o.cell] = is_universal_1cell(*x1, o.cell);
    } else {
      for (const auto& [f, e] : x1->cells1) verdicts[f] = is_universal_1cell(*x1, f);
    }
  } else if (auto* x2 = std::get_if<Op2Document>(&d)) {
    apply_bound(x2->x, o);
    require_valid(validate_op2(x2->x), o.file);
    UniversalityChecker u(x2->x);
    if (!o.cell.empty()) {
      if (x2->x.cells2.contains(o.cell)) {
        verdicts[o.cell] = u.cell2(o.cell);
      } else if (x2->x.cells1.contains(o.cell)) {
        verdicts[o.cell] = u.cell1(o.cell);
      } else {
        throw Error(ErrorCode::DanglingId, o.cell);
      }
    } else {
      for (const auto& [f, e] : x2->x.cells1) verdicts[f] = u.cell1(f);
      for (const auto& [a, c] : x2->x.cells2) verdicts[a] = u.cell2(a);
    }
    coherence = check_coherence(x2->x, {o.direct_niche_search});
  } else {
    throw Error(ErrorCode::UnknownKind, "universality needs op1cat or op2cat");
  }

  const bool ok = o.cell.empty() ? (!coherence || coherence->ok())
                                 : verdicts.at(o.cell);
  if (o.format == "json") {
    json j = {{"cells", verdicts}, {"ok", ok}};
    if (coherence) j["coherence"] = report_json(coherence->report);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& [id, v] : verdicts) {
      out << id << ": " << (v ? "universal" : "non-universal") << "\n";
    }
    if (coherence) {
      out << "coherence: ";
      print_report(out, coherence->report);
    }
  }
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------- convert

bool classical(Kind k) {
  return k == Kind::Category || k == Kind::Bicategory || k == Kind::LaxFunctor;
}

Document convert(const Document& d, const Options& o) {
  const Kind k = kind_of(d);
  if (!o.to.empty()) {
    if (o.to != "bicat" && o.to != "opic") {
      throw UsageError("--to must be bicat or opic");
    }
    if ((o.to == "bicat") == classical(k)) {
      throw Error(ErrorCode::InvalidInput,
                  std::string(to_string(k)) + " is already on the " + o.to + " side");
    }
  }
  switch (k) {
    case Kind::Category: {
      const auto& c = std::get<FiniteCategory>(d);
      require_valid(validate_category(c), o.file);
      return zeta1_inv(c, bound(o));
    }
    case Kind::Op1Cat: {
      auto x = std::get<FiniteOpOneCat>(d);
      apply_bound(x, o);
      return zeta1(x);
    }
    case Kind::Bicategory: {
      const auto& b = std::get<FiniteBicategory>(d);
      auto g = zeta2_inv(b, bound(o));
      return Op2Document{std::move(g.x), std::move(g.biasing)};
    }
    case Kind::Op2Cat: {
      auto doc = std::get<Op2Document>(d);
      apply_bound(doc.x, o);
      require_valid(validate_op2(doc.x), o.file);
      return zeta2(doc.x, biasing_for(doc, o));
    }
    case Kind::LaxFunctor: {
      need_sides(o);
      const auto src = zeta2_inv(load_bicat(o.source), bound(o));
      const auto dst = zeta2_inv(load_bicat(o.target), bound(o));
      return zeta2_mor_inv(std::get<LaxFunctor>(d), src, dst);
    }
    case Kind::OpMorphism: {
      need_sides(o);
      const auto src = load_op2(o.source, o);
      const auto dst = load_op2(o.target, o);
      const auto& f = std::get<OpMorphism>(d);
      require_valid(validate_op_morphism(f, src.x, dst.x), o.file);
      return zeta2_mor(f, src.x, biasing_for(src, o), dst.x, biasing_for(dst, o));
    }
    case Kind::Set:
      break;
  }
  throw Error(ErrorCode::InvalidInput,
              "no conversion for " + std::string(to_string(k)));
}

int cmd_convert(const Options& o, std::ostream& out) {
  const auto d = load_document(o.file, kind_flag(o.kind));
  emit(out, o, serialize(convert(d, o)));
  return 0;
}

// ---------------------------------------------------------------- roundtrip

std::string show(const std::string& s) { return s; }
std::string show(const Endpoints& e) { return e.source + " -> " + e.target; }
std::string show(const PastingPath& p) { return to_string(p); }
std::string show(const TwoCell& c) { return to_string(c.source) + " => " + c.target; }
std::string show(const Pair& p) { return "(" + p.first + ", " + p.second + ")"; }
std::string show(const Triple& t) {
  return "(" + std::get<0>(t) + ", " + std::get<1>(t) + ", " + std::get<2>(t) + ")";
}
std::string show(const GraftKey& k) {
  return "(" + k.outer + ", " + std::to_string(k.slot) + ", " + k.inner + ")";
}

template <class K>
void diff_set(std::vector<std::string>& out, const std::string& table,
              const std::set<K>& want, const std::set<K>& got) {
  for (const auto& k : want) {
    if (!got.contains(k)) out.push_back(table + ": lost " + show(k));
  }
  for (const auto& k : got) {
    if (!want.contains(k)) out.push_back(table + ": gained " + show(k));
  }
}

template <class K, class V>
void diff_map(std::vector<std::string>& out, const std::string& table,
              const std::map<K, V>& want, const std::map<K, V>& got) {
  for (const auto& [k, v] : want) {
    auto it = got.find(k);
    if (it == got.end()) {
      out.push_back(table + ": lost " + show(k));
    } else if (!(it->second == v)) {
      out.push_back(table + ": " + show(k) + " was " + show(v) + ", now " +
                    show(it->second));
    }
  }
  for (const auto& [k, v] : got) {
    if (!want.contains(k)) out.push_back(table + ": gained " + show(k));
  }
}

std::vector<std::string> diff(const FiniteCategory& a, const FiniteCategory& b) {
  std::vector<std::string> d;
  diff_set(d, "objects", a.objects, b.objects);
  diff_map(d, "arrows", a.arrows, b.arrows);
  diff_map(d, "identities", a.identity, b.identity);
  diff_map(d, "composites", a.compose, b.compose);
  return d;
}

std::vector<std::string> diff(const FiniteBicategory& a, const FiniteBicategory& b) {
  std::vector<std::string> d;
  diff_set(d, "objects", a.objects, b.objects);
  diff_map(d, "cells1", a.cells1, b.cells1);
  diff_map(d, "cells2", a.cells2, b.cells2);
  diff_map(d, "units", a.unit, b.unit);
  diff_map(d, "identities", a.id2, b.id2);
  diff_map(d, "vertical", a.vcomp, b.vcomp);
  diff_map(d, "composites", a.hcomp1, b.hcomp1);
  diff_map(d, "horizontal", a.hcomp2, b.hcomp2);
  diff_map(d, "associator", a.assoc, b.assoc);
  diff_map(d, "left_unitor", a.lunit, b.lunit);
  diff_map(d, "right_unitor", a.runit, b.runit);
  return d;
}

std::vector<std::string> diff(const FiniteOpOneCat& a, const FiniteOpOneCat& b) {
  std::vector<std::string> d;
  if (a.arity_bound != b.arity_bound) d.push_back("arity_bound differs");
  diff_set(d, "objects", a.objects, b.objects);
  diff_map(d, "cells1", a.cells1, b.cells1);
  diff_map(d, "composites", a.comp, b.comp);
  return d;
}

std::vector<std::string> diff(const FiniteOpTwoCat& a, const FiniteOpTwoCat& b) {
  std::vector<std::string> d;
  if (a.arity_bound != b.arity_bound) d.push_back("arity_bound differs");
  diff_set(d, "objects", a.objects, b.objects);
  diff_map(d, "cells1", a.cells1, b.cells1);
  diff_map(d, "cells2", a.cells2, b.cells2);
  diff_map(d, "identities", a.ident2, b.ident2);
  diff_map(d, "grafts", a.grafts, b.grafts);
  return d;
}

std::vector<std::string> diff(const Biasing& a, const Biasing& b) {
  std::vector<std::string> d;
  diff_map(d, "biasing.iota", a.iota, b.iota);
  diff_map(d, "biasing.c", a.c, b.c);
  return d;
}

std::vector<std::string> diff(const LaxFunctor& a, const LaxFunctor& b) {
  std::vector<std::string> d;
  diff_map(d, "objects", a.on_objects, b.on_objects);
  diff_map(d, "cells1", a.on_1cells, b.on_1cells);
  diff_map(d, "cells2", a.on_2cells, b.on_2cells);
  diff_map(d, "phi", a.phi, b.phi);
  diff_map(d, "phi_unit", a.phi_unit, b.phi_unit);
  return d;
}

std::vector<std::string> diff(const OpMorphism& a, const OpMorphism& b) {
  std::vector<std::string> d;
  diff_map(d, "objects", a.f0, b.f0);
  diff_map(d, "cells1", a.f1, b.f1);
  diff_map(d, "cells2", a.f2, b.f2);
  return d;
}

void append(std::vector<std::string>& to, std::vector<std::string> more) {
  for (auto& s : more) to.push_back(std::move(s));
}

int cmd_roundtrip(const Options& o, std::ostream& out) {
  const std::string text = read_file(o.file);
  auto d = parse_document(text, kind_flag(o.kind));
  std::vector<std::string> diffs;

  const std::string once = serialize(d);
  if (serialize(parse_document(once)) != once) {
    diffs.push_back("serialization is not stable");
  }

  switch (kind_of(d)) {
    case Kind::Category: {
      const auto& c = std::get<FiniteCategory>(d);
      require_valid(validate_category(c), o.file);
      append(diffs, diff(c, zeta1(zeta1_inv(c, bound(o)))));
      break;
    }
    case Kind::Bicategory: {
      const auto& b = std::get<FiniteBicategory>(d);
      const auto g = zeta2_inv(b, bound(o));
      append(diffs, diff(b, zeta2(g.x, g.biasing)));
      break;
    }
    case Kind::Op1Cat: {
      auto x = std::get<FiniteOpOneCat>(d);
      apply_bound(x, o);
      require_valid(validate_op1(x), o.file);
      append(diffs, diff(x, zeta1_inv(zeta1(x), x.arity_bound)));
      break;
    }
    case Kind::Op2Cat: {
      auto doc = std::get<Op2Document>(d);
      apply_bound(doc.x, o);
      require_valid(validate_op2(doc.x), o.file);
      const auto b = biasing_for(doc, o);
      const auto g = zeta2_inv(zeta2(doc.x, b), doc.x.arity_bound);
      append(diffs, diff(doc.x, g.x));
      append(diffs, diff(b, g.biasing));
      break;
    }
    case Kind::Set: {
      const auto& e = std::get<FiniteSet>(d).elements;
      diff_set(diffs, "elements", e, zeta0(zeta0_inv(e)));
      break;
    }
    case Kind::LaxFunctor: {
      need_sides(o);
      const auto& g = std::get<LaxFunctor>(d);
      const auto src_b = load_bicat(o.source);
      const auto dst_b = load_bicat(o.target);
      require_valid(validate_lax_functor(g, src_b, dst_b), o.file);
      const auto src = zeta2_inv(src_b, bound(o));
      const auto dst = zeta2_inv(dst_b, bound(o));
      const auto back = zeta2_mor(zeta2_mor_inv(g, src, dst), src.x,
                                  src.biasing, dst.x, dst.biasing);
      append(diffs, diff(g, back));
      break;
    }
    case Kind::OpMorphism: {
      need_sides(o);
      const auto& f = std::get<OpMorphism>(d);
      const auto src = load_op2(o.source, o);
      const auto dst = load_op2(o.target, o);
      require_valid(validate_op_morphism(f, src.x, dst.x), o.file);
      const auto bs = biasing_for(src, o);
      const auto bd = biasing_for(dst, o);
      const auto gs = zeta2_inv(zeta2(src.x, bs), src.x.arity_bound);
      const auto gd = zeta2_inv(zeta2(dst.x, bd), dst.x.arity_bound);
      append(diffs, diff(f, zeta2_mor_inv(zeta2_mor(f, src.x, bs, dst.x, bd), gs, gd)));
      break;
    }
  }

  if (o.format == "json") {
    out << json({{"ok", diffs.empty()}, {"diff", diffs}}).dump(2) << "\n";
  } else {
    for (const auto& s : diffs) out << s << "\n";
    out << (diffs.empty() ? "identical\n" : std::to_string(diffs.size()) + " difference(s)\n");
  }
  return diffs.empty() ? 0 : 1;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const Options& o, std::ostream& out) {
  need_sides(o);
  auto d = load_document(o.file, kind_flag(o.kind));
  Classification c;
  if (auto* g = std::get_if<LaxFunctor>(&d)) {
    const auto src_b = load_bicat(o.source);
    const auto dst_b = load_bicat(o.target);
    require_valid(validate_lax_functor(*g, src_b, dst_b), o.file);
    const auto src = zeta2_inv(src_b, bound(o));
    const auto dst = zeta2_inv(dst_b, bound(o));
    c = classify_morphism(zeta2_mor_inv(*g, src, dst), src.x, src.biasing,
                          dst.x, dst.biasing);
  } else if (auto* f = std::get_if<OpMorphism>(&d)) {
    const auto src = load_op2(o.source, o);
    const auto dst = load_op2(o.target, o);
    require_valid(validate_op_morphism(*f, src.x, dst.x), o.file);
    c = classify_morphism(*f, src.x, biasing_for(src, o), dst.x,
                          biasing_for(dst, o));
  } else {
    throw Error(ErrorCode::UnknownKind, "classify needs opmorphism or laxfunctor");
  }

  if (o.format == "json") {
    json j = {{"verdict", std::string(to_string(c.verdict))}};
    if (!c.witness.empty()) {
      j["witness"] = c.witness;
      j["image"] = c.image;
      j["witness_dimension"] = c.witness_is_1cell ? 1 : 2;
    }
    out << j.dump(2) << "\n";
  } else {
    out << to_string(c.verdict) << "\n";
    if (!c.witness.empty()) {
      out << "witness: " << c.witness << " -> " << c.image << "\n";
    }
  }
  return 0;
}

}  // namespace

std::size_t env_arity_bound() {
  const char* s = std::getenv("OPETOKIT_ARITY_BOUND");
  if (!s || !*s) return kDefaultArityBound;
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || s[pos] != '\0') {
    throw UsageError(std::string("OPETOKIT_ARITY_BOUND is not a count: ") + s);
  }
  return v;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Finite opetopic categories, bicategories and the translations between them",
               "opetokit"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "input document")->required();
    sub->add_option("--kind", o.kind, "expected kind of the input");
    sub->add_option("--arity-bound", o.arity_bound, "arity bound M");
    sub->add_option("--format", o.format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto sides = [&](CLI::App* sub) {
    sub->add_option("--source", o.source, "source structure");
    sub->add_option("--target", o.target, "target structure");
  };

  auto* validate = app.add_subcommand("validate", "check every law of a document");
  common(validate);
  sides(validate);

  auto* universal = app.add_subcommand("universal", "universality verdicts");
  common(universal);
  auto* cell = universal->add_option("--cell", o.cell, "one cell id");
  universal->add_flag("--all", o.all, "every cell")->excludes(cell);
  universal->add_flag("--direct-niche-search", o.direct_niche_search,
                      "search every niche of arity 3 and above");

  auto* conv = app.add_subcommand("convert", "translate to the other side");
  common(conv);
  sides(conv);
  conv->add_option("--to", o.to, "bicat or opic");
  conv->add_option("--output", o.output, "output file (default stdout)");
  conv->add_flag("--seedless-tiebreak", o.seedless_tiebreak,
                 "ignore a stored biasing and choose least ids");

  auto* rt = app.add_subcommand("roundtrip", "convert there and back and diff");
  common(rt);
  sides(rt);
  rt->add_flag("--seedless-tiebreak", o.seedless_tiebreak,
               "ignore a stored biasing and choose least ids");

  auto* cls = app.add_subcommand("classify", "lax, weak or strict");
  common(cls);
  sides(cls);
  cls->add_flag("--seedless-tiebreak", o.seedless_tiebreak,
                "ignore stored biasings and choose least ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*universal) return cmd_universal(o, out);
    if (*conv) return cmd_convert(o, out);
    if (*rt) return cmd_roundtrip(o, out);
    return cmd_classify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::ParseError || e.code() == ErrorCode::UnknownKind
               ? 2
               : 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::bad_variant_access&) {
    err << "error: unexpected document kind\n";
    return 2;
  }
}

}  // namespace opetokit
