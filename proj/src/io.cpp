#include "opetokit/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "opetokit/error.hpp"

namespace opetokit {

using nlohmann::json;

namespace {

constexpr std::pair<Kind, std::string_view> kKinds[] = {
    {Kind::Set, "set"},
    {Kind::Op1Cat, "op1cat"},
    {Kind::Op2Cat, "op2cat"},
    {Kind::Category, "category"},
    {Kind::Bicategory, "bicategory"},
    {Kind::OpMorphism, "opmorphism"},
    {Kind::LaxFunctor, "laxfunctor"},
};

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what);
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string str(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

std::string str(const json& j, const char* key, const std::string& where) {
  return str(field(j, key, where), where + "." + key);
}

const json& arr(const json& j, const char* key, const std::string& where) {
  const json& a = field(j, key, where);
  if (!a.is_array()) bad(where + "." + key, "expected an array");
  return a;
}

std::map<std::string, std::string> str_map(const json& j, const char* key,
                                           const std::string& where,
                                           bool required = true) {
  std::map<std::string, std::string> out;
  auto it = j.find(key);
  if (it == j.end()) {
    if (required) bad(where, std::string("missing field \"") + key + "\"");
    return out;
  }
  if (!it->is_object()) bad(where + "." + key, "expected an object");
  for (const auto& [k, v] : it->items()) {
    out[k] = str(v, where + "." + key + "." + k);
  }
  return out;
}

std::set<std::string> str_set(const json& j, const char* key,
                              const std::string& where) {
  std::set<std::string> out;
  const json& a = arr(j, key, where);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto w = where + "." + key + "[" + std::to_string(i) + "]";
    if (!out.insert(str(a[i], w)).second) bad(w, "duplicate id");
  }
  return out;
}

std::size_t arity_bound(const json& j, const std::string& where) {
  auto it = j.find("arity_bound");
  if (it == j.end()) return kDefaultArityBound;
  if (!it->is_number_unsigned()) bad(where + ".arity_bound", "expected a count");
  const auto m = it->get<std::size_t>();
  if (m > 32) bad(where + ".arity_bound", "bound too large");
  return m;
}

template <class Map>
void insert_unique(Map& m, const typename Map::key_type& k,
                   typename Map::mapped_type v, const std::string& where) {
  if (!m.emplace(k, std::move(v)).second) bad(where, "duplicate entry");
}

OneCellTable cells_with_ends(const json& j, const char* key,
                             const std::string& where) {
  OneCellTable out;
  const json& a = arr(j, key, where);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto w = where + "." + key + "[" + std::to_string(i) + "]";
    insert_unique(out, str(a[i], "id", w),
                  Endpoints{str(a[i], "source", w), str(a[i], "target", w)}, w);
  }
  return out;
}

json ends_json(const std::map<std::string, Endpoints>& m) {
  json a = json::array();
  for (const auto& [id, e] : m) {
    a.push_back({{"id", id}, {"source", e.source}, {"target", e.target}});
  }
  return a;
}

PastingPath path_from(const json& j, const std::string& where) {
  PastingPath p;
  p.anchor = str(j, "anchor", where);
  const json& e = arr(j, "edges", where);
  for (std::size_t i = 0; i < e.size(); ++i) {
    p.edges.push_back(str(e[i], where + ".edges[" + std::to_string(i) + "]"));
  }
  return p;
}

json path_json(const PastingPath& p) {
  return {{"anchor", p.anchor}, {"edges", p.edges}};
}

json pair_entries(const std::map<Pair, std::string>& m, const char* value) {
  json a = json::array();
  for (const auto& [k, v] : m) {
    a.push_back({{"second", k.first}, {"first", k.second}, {value, v}});
  }
  return a;
}

std::map<Pair, std::string> pair_map(const json& j, const char* key,
                                     const char* value,
                                     const std::string& where) {
  std::map<Pair, std::string> out;
  const json& a = arr(j, key, where);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto w = where + "." + key + "[" + std::to_string(i) + "]";
    insert_unique(out, Pair{str(a[i], "second", w), str(a[i], "first", w)},
                  str(a[i], value, w), w);
  }
  return out;
}

// ---------------------------------------------------------------- per kind

json biasing_json(const Biasing& b) {
  json c = json::object();
  for (const auto& [k, v] : b.c) c[k.first][k.second] = v;
  return {{"iota", b.iota}, {"c", c}};
}

Biasing biasing_from(const json& j, const std::string& where) {
  Biasing b;
  b.iota = str_map(j, "iota", where);
  const json& c = field(j, "c", where);
  if (!c.is_object()) bad(where + ".c", "expected an object");
  for (const auto& [f, inner] : c.items()) {
    if (!inner.is_object()) bad(where + ".c." + f, "expected an object");
    for (const auto& [g, v] : inner.items()) {
      b.c[{f, g}] = str(v, where + ".c." + f + "." + g);
    }
  }
  return b;
}

FiniteOpOneCat op1_from(const json& j) {
  const std::string w = "op1cat";
  FiniteOpOneCat x;
  x.arity_bound = arity_bound(j, w);
  x.objects = str_set(j, "objects", w);
  x.cells1 = cells_with_ends(j, "cells1", w);
  const json& a = arr(j, "composites", w);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto wi = w + ".composites[" + std::to_string(i) + "]";
    insert_unique(x.comp, path_from(field(a[i], "path", wi), wi + ".path"),
                  str(a[i], "result", wi), wi);
  }
  return x;
}

json op1_json(const FiniteOpOneCat& x) {
  json comps = json::array();
  for (const auto& [p, v] : x.comp) {
    comps.push_back({{"path", path_json(p)}, {"result", v}});
  }
  return {{"arity_bound", x.arity_bound},
          {"objects", x.objects},
          {"cells1", ends_json(x.cells1)},
          {"composites", comps}};
}

Op2Document op2_from(const json& j) {
  const std::string w = "op2cat";
  Op2Document d;
  auto& x = d.x;
  x.arity_bound = arity_bound(j, w);
  x.objects = str_set(j, "objects", w);
  x.cells1 = cells_with_ends(j, "cells1", w);
  const json& c2 = arr(j, "cells2", w);
  for (std::size_t i = 0; i < c2.size(); ++i) {
    const auto wi = w + ".cells2[" + std::to_string(i) + "]";
    insert_unique(x.cells2, str(c2[i], "id", wi),
                  TwoCell{path_from(field(c2[i], "source", wi), wi + ".source"),
                          str(c2[i], "target", wi)},
                  wi);
  }
  x.ident2 = str_map(j, "identities", w);
  const json& g = arr(j, "grafts", w);
  for (std::size_t i = 0; i < g.size(); ++i) {
    const auto wi = w + ".grafts[" + std::to_string(i) + "]";
    const json& slot = field(g[i], "slot", wi);
    if (!slot.is_number_unsigned()) bad(wi + ".slot", "expected an index");
    insert_unique(x.grafts,
                  GraftKey{str(g[i], "outer", wi), slot.get<std::size_t>(),
                           str(g[i], "inner", wi)},
                  str(g[i], "result", wi), wi);
  }
  if (j.contains("biasing")) d.biasing = biasing_from(j["biasing"], w + ".biasing");
  return d;
}

json op2_json(const Op2Document& d) {
  const auto& x = d.x;
  json cells = json::array();
  for (const auto& [id, c] : x.cells2) {
    cells.push_back(
        {{"id", id}, {"source", path_json(c.source)}, {"target", c.target}});
  }
  json grafts = json::array();
  for (const auto& [k, v] : x.grafts) {
    grafts.push_back({{"outer", k.outer},
                      {"slot", k.slot},
                      {"inner", k.inner},
                      {"result", v}});
  }
  json j = {{"arity_bound", x.arity_bound},
            {"objects", x.objects},
            {"cells1", ends_json(x.cells1)},
            {"cells2", cells},
            {"identities", x.ident2},
            {"grafts", grafts}};
  if (d.biasing) j["biasing"] = biasing_json(*d.biasing);
  return j;
}

FiniteCategory category_from(const json& j) {
  const std::string w = "category";
  FiniteCategory c;
  c.objects = str_set(j, "objects", w);
  c.arrows = cells_with_ends(j, "arrows", w);
  c.identity = str_map(j, "identities", w);
  c.compose = pair_map(j, "composites", "result", w);
  return c;
}

json category_json(const FiniteCategory& c) {
  return {{"objects", c.objects},
          {"arrows", ends_json(c.arrows)},
          {"identities", c.identity},
          {"composites", pair_entries(c.compose, "result")}};
}

FiniteBicategory bicategory_from(const json& j) {
  const std::string w = "bicategory";
  FiniteBicategory b;
  b.objects = str_set(j, "objects", w);
  b.cells1 = cells_with_ends(j, "cells1", w);
  b.cells2 = cells_with_ends(j, "cells2", w);
  b.unit = str_map(j, "units", w);
  b.id2 = str_map(j, "identities", w);
  b.vcomp = pair_map(j, "vertical", "result", w);
  b.hcomp1 = pair_map(j, "composites", "result", w);
  b.hcomp2 = pair_map(j, "horizontal", "result", w);
  const json& a = arr(j, "associator", w);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto wi = w + ".associator[" + std::to_string(i) + "]";
    insert_unique(b.assoc,
                  Triple{str(a[i], "h", wi), str(a[i], "g", wi),
                         str(a[i], "f", wi)},
                  str(a[i], "cell", wi), wi);
  }
  b.lunit = str_map(j, "left_unitor", w);
  b.runit = str_map(j, "right_unitor", w);
  return b;
}

json bicategory_json(const FiniteBicategory& b) {
  json assoc = json::array();
  for (const auto& [k, v] : b.assoc) {
    assoc.push_back({{"h", std::get<0>(k)},
                     {"g", std::get<1>(k)},
                     {"f", std::get<2>(k)},
                     {"cell", v}});
  }
  return {{"objects", b.objects},
          {"cells1", ends_json(b.cells1)},
          {"cells2", ends_json(b.cells2)},
          {"units", b.unit},
          {"identities", b.id2},
          {"vertical", pair_entries(b.vcomp, "result")},
          {"composites", pair_entries(b.hcomp1, "result")},
          {"horizontal", pair_entries(b.hcomp2, "result")},
          {"associator", assoc},
          {"left_unitor", b.lunit},
          {"right_unitor", b.runit}};
}

OpMorphism morphism_from(const json& j) {
  const std::string w = "opmorphism";
  OpMorphism f;
  f.f0 = str_map(j, "objects", w);
  f.f1 = str_map(j, "cells1", w);
  f.f2 = str_map(j, "cells2", w, false);
  return f;
}

json morphism_json(const OpMorphism& f) {
  return {{"objects", f.f0}, {"cells1", f.f1}, {"cells2", f.f2}};
}

LaxFunctor lax_from(const json& j) {
  const std::string w = "laxfunctor";
  LaxFunctor f;
  f.on_objects = str_map(j, "objects", w);
  f.on_1cells = str_map(j, "cells1", w);
  f.on_2cells = str_map(j, "cells2", w);
  f.phi = pair_map(j, "phi", "cell", w);
  f.phi_unit = str_map(j, "phi_unit", w);
  return f;
}

json lax_json(const LaxFunctor& f) {
  return {{"objects", f.on_objects},
          {"cells1", f.on_1cells},
          {"cells2", f.on_2cells},
          {"phi", pair_entries(f.phi, "cell")},
          {"phi_unit", f.phi_unit}};
}

std::pair<std::size_t, std::size_t> line_col(std::string_view text,
                                             std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

std::string_view to_string(Kind k) {
  for (const auto& [kind, name] : kKinds) {
    if (kind == k) return name;
  }
  return "?";
}

Kind kind_from_string(std::string_view s) {
  for (const auto& [kind, name] : kKinds) {
    if (name == s) return kind;
  }
  throw Error(ErrorCode::UnknownKind, std::string(s));
}

Kind kind_of(const Document& d) {
  return std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiniteSet>) return Kind::Set;
        if constexpr (std::is_same_v<T, FiniteOpOneCat>) return Kind::Op1Cat;
        if constexpr (std::is_same_v<T, Op2Document>) return Kind::Op2Cat;
        if constexpr (std::is_same_v<T, FiniteCategory>) return Kind::Category;
        if constexpr (std::is_same_v<T, FiniteBicategory>) return Kind::Bicategory;
        if constexpr (std::is_same_v<T, OpMorphism>) return Kind::OpMorphism;
        if constexpr (std::is_same_v<T, LaxFunctor>) return Kind::LaxFunctor;
      },
      d);
}

Document parse_document(std::string_view text, std::optional<Kind> expected) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_col(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    if (auto p = msg.find(": ", msg.find("parse error")); p != std::string::npos) {
      msg = msg.substr(p + 2);
    }
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) +
                                           ", column " + std::to_string(col) +
                                           ": " + msg);
  }
  const Kind kind = kind_from_string(str(j, "kind", "document"));
  if (expected && *expected != kind) {
    throw Error(ErrorCode::UnknownKind,
                "expected " + std::string(to_string(*expected)) + " but the file is " +
                    std::string(to_string(kind)));
  }
  switch (kind) {
    case Kind::Set: return FiniteSet{str_set(j, "elements", "set")};
    case Kind::Op1Cat: return op1_from(j);
    case Kind::Op2Cat: return op2_from(j);
    case Kind::Category: return category_from(j);
    case Kind::Bicategory: return bicategory_from(j);
    case Kind::OpMorphism: return morphism_from(j);
    case Kind::LaxFunctor: return lax_from(j);
  }
  throw Error(ErrorCode::UnknownKind, "unhandled kind");
}

std::string serialize(const Document& d) {
  json j = std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, FiniteSet>) {
          return {{"elements", v.elements}};
        } else if constexpr (std::is_same_v<T, FiniteOpOneCat>) {
          return op1_json(v);
        } else if constexpr (std::is_same_v<T, Op2Document>) {
          return op2_json(v);
        } else if constexpr (std::is_same_v<T, FiniteCategory>) {
          return category_json(v);
        } else if constexpr (std::is_same_v<T, FiniteBicategory>) {
          return bicategory_json(v);
        } else if constexpr (std::is_same_v<T, OpMorphism>) {
          return morphism_json(v);
        } else {
          return lax_json(v);
        }
      },
      d);
  j["kind"] = std::string(to_string(kind_of(d)));
  return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text)) {
    throw Error(ErrorCode::ParseError, "cannot write " + path);
  }
}

Document load_document(const std::string& path, std::optional<Kind> expected) {
  return parse_document(read_file(path), expected);
}

}  // namespace opetokit
