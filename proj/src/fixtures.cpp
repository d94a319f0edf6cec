#include "opetokit/fixtures.hpp"

#include <functional>

namespace opetokit::fixtures {

namespace {

using Mul = std::function<std::string(const std::string&, const std::string&)>;

struct Builder {
  FiniteBicategory b;

  void obj(const ObjId& a, const OneCellId& unit) {
    b.objects.insert(a);
    b.unit[a] = unit;
  }
  void one(const OneCellId& f, const ObjId& s, const ObjId& t) {
    b.cells1[f] = {s, t};
  }
  void two(const TwoCellId& x, const OneCellId& s, const OneCellId& t) {
    b.cells2[x] = {s, t};
  }

  // Fills every table from the given operations.
  void fill(const Mul& comp1, const Mul& vert, const Mul& hcomp,
            const std::function<TwoCellId(const OneCellId&)>& ident) {
    for (const auto& [f, fe] : b.cells1) {
      b.id2[f] = ident(f);
      for (const auto& [g, ge] : b.cells1) {
        if (fe.target == ge.source) b.hcomp1[{g, f}] = comp1(g, f);
      }
    }
    for (const auto& [x, xe] : b.cells2) {
      for (const auto& [y, ye] : b.cells2) {
        if (xe.target == ye.source) b.vcomp[{y, x}] = vert(y, x);
        if (b.cells1.at(xe.source).target == b.cells1.at(ye.source).source) {
          b.hcomp2[{y, x}] = hcomp(y, x);
        }
      }
    }
  }

  void trivial_constraints() {
    for (const auto& [f, fe] : b.cells1) {
      b.lunit[f] = b.id2.at(f);
      b.runit[f] = b.id2.at(f);
      for (const auto& [g, ge] : b.cells1) {
        if (ge.source != fe.target) continue;
        for (const auto& [h, he] : b.cells1) {
          if (he.source != ge.target) continue;
          b.assoc[{h, g, f}] = b.id2.at(b.hcomp1.at({h, b.hcomp1.at({g, f})}));
        }
      }
    }
  }
};

// Z/2 with e = 0, s = 1.
int bit(const std::string& x) { return x == "s" ? 1 : 0; }
std::string elem(int v) { return v % 2 ? "s" : "e"; }

// 2-cell ids are "id_<g>" (+1) and "neg_<g>" (-1).
int sign_bit(const std::string& x) { return x.rfind("neg_", 0) == 0 ? 1 : 0; }
std::string base(const std::string& x) { return x.substr(x.find('_') + 1); }
std::string cell(int sign, const std::string& g) {
  return (sign % 2 ? "neg_" : "id_") + g;
}

FiniteBicategory z2_with(const std::function<int(int, int, int)>& omega) {
  Builder bd;
  bd.obj("*", "e");
  for (const char* g : {"e", "s"}) {
    bd.one(g, "*", "*");
    bd.two(cell(0, g), g, g);
    bd.two(cell(1, g), g, g);
  }
  bd.fill([](auto& g, auto& f) { return elem(bit(g) + bit(f)); },
          [](auto& y, auto& x) {
            return cell(sign_bit(y) + sign_bit(x), base(x));
          },
          [](auto& y, auto& x) {
            return cell(sign_bit(y) + sign_bit(x),
                        elem(bit(base(y)) + bit(base(x))));
          },
          [](auto& f) { return cell(0, f); });
  for (const char* f : {"e", "s"}) {
    bd.b.lunit[f] = cell(0, f);
    bd.b.runit[f] = cell(0, f);
    for (const char* g : {"e", "s"}) {
      for (const char* h : {"e", "s"}) {
        const auto hgf = elem(bit(h) + bit(g) + bit(f));
        bd.b.assoc[{h, g, f}] = cell(omega(bit(h), bit(g), bit(f)), hgf);
      }
    }
  }
  return bd.b;
}

}  // namespace

FiniteCategory z2_category() {
  FiniteCategory c;
  c.objects = {"*"};
  c.arrows = {{"e", {"*", "*"}}, {"s", {"*", "*"}}};
  c.identity = {{"*", "e"}};
  for (const char* g : {"e", "s"}) {
    for (const char* f : {"e", "s"}) c.compose[{g, f}] = elem(bit(g) + bit(f));
  }
  return c;
}

FiniteBicategory two_group() {
  return z2_with([](int h, int g, int f) { return h * g * f; });
}

FiniteBicategory two_group_broken() {
  return z2_with([](int h, int, int f) { return h * f; });
}

FiniteBicategory idempotent() {
  Builder bd;
  bd.obj("*", "I");
  bd.one("I", "*", "*");
  bd.two("1_I", "I", "I");
  bd.two("t", "I", "I");
  auto mul = [](const std::string& y, const std::string& x) -> std::string {
    return y == "t" || x == "t" ? "t" : "1_I";
  };
  bd.fill([](auto&, auto&) { return "I"; }, mul, mul,
          [](auto&) { return "1_I"; });
  bd.trivial_constraints();
  return bd.b;
}

FiniteBicategory terminal() {
  Builder bd;
  bd.obj("*", "I");
  bd.one("I", "*", "*");
  bd.two("1_I", "I", "I");
  bd.fill([](auto&, auto&) { return "I"; }, [](auto&, auto&) { return "1_I"; },
          [](auto&, auto&) { return "1_I"; }, [](auto&) { return "1_I"; });
  bd.trivial_constraints();
  return bd.b;
}

FiniteBicategory idempotent_loop() {
  Builder bd;
  bd.obj("*", "I");
  bd.one("I", "*", "*");
  bd.one("x", "*", "*");
  bd.two("1_I", "I", "I");
  bd.two("1_x", "x", "x");
  auto comp1 = [](const std::string& g, const std::string& f) -> std::string {
    return g == "x" || f == "x" ? "x" : "I";
  };
  bd.fill(comp1, [](auto&, auto& x) { return x; },
          [&](auto& y, auto& x) {
            return "1_" + comp1(y.substr(2), x.substr(2));
          },
          [](auto& f) { return "1_" + f; });
  bd.trivial_constraints();
  return bd.b;
}

FiniteBicategory parallel_pair() {
  Builder bd;
  bd.obj("A", "IA");
  bd.obj("B", "IB");
  bd.one("IA", "A", "A");
  bd.one("IB", "B", "B");
  bd.one("f", "A", "B");
  bd.one("g", "A", "B");
  for (const char* i : {"IA", "IB", "f", "g"}) {
    bd.two(std::string("1_") + i, i, i);
  }
  bd.two("n", "f", "f");
  bd.two("p", "f", "g");
  bd.two("q", "f", "g");

  auto is_id = [](const std::string& x) { return x.rfind("1_", 0) == 0; };
  auto comp1 = [](const std::string& g, const std::string& f) -> std::string {
    if (g == "IA" || g == "IB") return f;
    return g;
  };
  auto vert = [&](const std::string& y, const std::string& x) -> std::string {
    if (is_id(y)) return x;
    if (is_id(x)) return y;
    if (x == "n" && y == "n") return "1_f";
    if (x == "n") return y == "p" ? "q" : "p";
    return "?";
  };
  // one side is always an identity on a unit 1-cell
  auto hcomp = [&](const std::string& y, const std::string& x) -> std::string {
    if (y == "1_IB" || y == "1_IA") return x;
    return y;
  };
  bd.fill(comp1, vert, hcomp, [](auto& f) { return "1_" + f; });
  bd.trivial_constraints();
  return bd.b;
}

LaxFunctor idempotent_loop_collapse() {
  LaxFunctor F;
  F.on_objects = {{"*", "*"}};
  F.on_1cells = {{"I", "I"}, {"x", "I"}};
  F.on_2cells = {{"1_I", "1_I"}, {"1_x", "1_I"}};
  for (const char* g : {"I", "x"}) {
    for (const char* f : {"I", "x"}) F.phi[{g, f}] = "1_I";
  }
  F.phi[{"x", "x"}] = "t";
  F.phi_unit = {{"*", "1_I"}};
  return F;
}

LaxFunctor two_group_twist() {
  LaxFunctor F = identity_lax_functor(two_group());
  F.phi[{"s", "s"}] = "neg_e";
  return F;
}

}  // namespace opetokit::fixtures
