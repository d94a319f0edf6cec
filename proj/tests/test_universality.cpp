#include "doctest.h"

#include "cached.hpp"
#include "opetokit/error.hpp"
#include "opetokit/universality.hpp"
#include "oracles.hpp"

using namespace opetokit;
using namespace testsupport;

namespace {

// Removes a 2-cell and every graft entry that mentions it.
FiniteOpTwoCat without(FiniteOpTwoCat x, const TwoCellId& id) {
  x.cells2.erase(id);
  std::erase_if(x.grafts, [&](const auto& kv) {
    return kv.first.outer == id || kv.first.inner == id || kv.second == id;
  });
  return x;
}

}  // namespace

TEST_CASE("factorizations_through") {
  const auto& idem = op2_idempotent().x;
  CHECK(factorizations_through(idem, "iota[*]", "iota[*]/t") ==
        std::vector<TwoCellId>{"t"});
  CHECK(factorizations_through(idem, "iota[*]", "iota[*]") ==
        std::vector<TwoCellId>{"1_I"});
  // t∘ι absorbs: both 1-ary cells send it to itself
  CHECK(factorizations_through(idem, "iota[*]/t", "iota[*]/t").size() == 2);
  CHECK(factorizations_through(idem, "iota[*]/t", "iota[*]").empty());

  const auto& two = op2_two_group().x;
  for (const auto& [a, c] : two.cells2) {
    const auto f = factorizations_through(two, a, a);
    CHECK(std::find(f.begin(), f.end(), two.ident2.at(c.target)) != f.end());
  }
  CHECK_THROWS_AS(factorizations_through(two, "c[s,s]", "iota[*]"), Error);
  try {
    factorizations_through(two, "c[s,s]", "iota[*]");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NicheMismatch);
  }
}

TEST_CASE("is_universal_2cell") {
  SUBCASE("agrees with invertibility of the presenting 2-cell") {
    struct Case {
      const GeneratedOpTwoCat* g;
      FiniteBicategory b;
    };
    const Case cases[] = {{&op2_two_group(), fixtures::two_group()},
                          {&op2_idempotent(), fixtures::idempotent()},
                          {&op2_loop(), fixtures::idempotent_loop()}};
    for (const auto& [g, b] : cases) {
      UniversalityChecker u(g->x);
      for (const auto& [id, pres] : g->presentation) {
        CAPTURE(id);
        CHECK(is_universal_2cell(g->x, id) == vertically_invertible(b, pres.alpha));
        CHECK(u.cell2(id) == is_universal_2cell(g->x, id));
      }
    }
  }
  SUBCASE("every two-group cell is universal") {
    const auto& x = op2_two_group().x;
    for (const auto& [id, c] : x.cells2) CHECK(is_universal_2cell(x, id));
  }
  SUBCASE("the absorbing nullary cell is not") {
    const auto& x = op2_idempotent().x;
    CHECK_FALSE(is_universal_2cell(x, "iota[*]/t"));
    CHECK(is_universal_2cell(x, "iota[*]"));
    CHECK_FALSE(is_universal_2cell(x, "t"));
  }
  SUBCASE("identities are universal") {
    for (const auto* g : {&op2_two_group(), &op2_idempotent(), &op2_loop()}) {
      for (const auto& [f, id] : g->x.ident2) CHECK(is_universal_2cell(g->x, id));
    }
  }
}

TEST_CASE("is_universal_factorization_1") {
  SUBCASE("chosen binary cells of the two-group") {
    const auto& g = op2_two_group();
    for (const auto& [p, c] : g.biasing.c) CHECK(is_universal_factorization_1(g.x, c));
    CHECK(is_universal_factorization_1(g.x, "c[s,s]"));
  }
  SUBCASE("total on binary cells") {
    const auto& x = op2_idempotent().x;
    std::size_t n = 0;
    for (const auto& [id, c] : x.cells2) {
      if (c.arity() != 2) continue;
      ++n;
      CHECK_NOTHROW((void)is_universal_factorization_1(x, id));
    }
    CHECK(n == 2);
    CHECK(is_universal_factorization_1(x, "c[I,I]"));
    CHECK_FALSE(is_universal_factorization_1(x, "c[I,I]/t"));
  }
  SUBCASE("arity error") {
    const auto& x = op2_two_group().x;
    try {
      (void)is_universal_factorization_1(x, "u[s,s,s]");
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ArityError);
    }
  }
}

TEST_CASE("is_universal_1cell") {
  SUBCASE("fixtures against the internal equivalence oracle") {
    const std::pair<const GeneratedOpTwoCat*, FiniteBicategory> cases[] = {
        {&op2_two_group(), fixtures::two_group()},
        {&op2_idempotent(), fixtures::idempotent()},
        {&op2_loop(), fixtures::idempotent_loop()}};
    for (const auto& [g, b] : cases) {
      for (const auto& [f, e] : g->x.cells1) {
        CAPTURE(f);
        CHECK(is_universal_1cell(g->x, f) == internal_equivalence(b, f));
      }
    }
    const auto pp = zeta2_inv(fixtures::parallel_pair());
    const auto ppb = fixtures::parallel_pair();
    for (const auto& [f, e] : pp.x.cells1) {
      CHECK(is_universal_1cell(pp.x, f) == internal_equivalence(ppb, f));
    }
  }
  SUBCASE("named verdicts") {
    CHECK(is_universal_1cell(op2_two_group().x, "e"));
    CHECK(is_universal_1cell(op2_two_group().x, "s"));
    CHECK(is_universal_1cell(op2_idempotent().x, "I"));
    CHECK_FALSE(is_universal_1cell(op2_loop().x, "x"));
  }
  SUBCASE("opetopic 1-category") {
    const auto x = zeta1_inv(fixtures::z2_category());
    CHECK(is_universal_1cell(x, "s"));
    CHECK(is_universal_1cell(x, "e"));
  }
}

TEST_CASE("check_coherence") {
  SUBCASE("generated fixtures are coherent") {
    for (const auto* g : {&op2_two_group(), &op2_idempotent(), &op2_loop()}) {
      const auto r = check_coherence(g->x);
      CHECK(r.ok());
      CHECK(r.report.notes.size() == 2);
      for (const auto& [p, has] : r.niche_has_universal) CHECK(has);
    }
  }
  SUBCASE("direct niche search gives the same verdict") {
    const auto r = check_coherence(op2_idempotent().x, {true});
    CHECK(r.ok());
    CHECK(r.report.notes.size() == 1);
  }
  SUBCASE("idempotent: universals are the identity family") {
    const auto r = check_coherence(op2_idempotent().x);
    CHECK_FALSE(r.universal_2cells.contains("iota[*]/t"));
    CHECK(r.universal_2cells.contains("iota[*]"));
    CHECK(r.universal_1cells == std::set<OneCellId>{"I"});
  }
  SUBCASE("deleting the universal unit occupant") {
    const auto x = without(op2_idempotent().x, "iota[*]");
    REQUIRE(validate_op2(x).ok());
    const auto r = check_coherence(x);
    CHECK(r.report.count("niche without universal occupant") > 0);
    CHECK_FALSE(r.niche_has_universal.at(PastingPath::nullary("*")));
  }
  SUBCASE("universal occupants per niche") {
    const auto& x = op2_idempotent().x;
    UniversalityChecker u(x);
    CHECK(u.universal_occupants(PastingPath::nullary("*")) ==
          std::vector<TwoCellId>{"iota[*]"});
    CHECK(occupants_of_niche(x, PastingPath::nullary("*")).size() == 2);
  }
}
