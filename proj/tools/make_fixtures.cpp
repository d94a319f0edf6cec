// Writes the shipped fixture documents into the given directory.
#include <iostream>

#include "opetokit/equivalences.hpp"
#include "opetokit/fixtures.hpp"
#include "opetokit/io.hpp"

using namespace opetokit;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_fixtures <dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  auto put = [&](const std::string& name, const Document& d) {
    write_file(dir + "/" + name + ".json", serialize(d));
  };
  namespace fx = fixtures;

  put("letters", FiniteSet{{"a", "b", "c"}});
  put("z2_category", fx::z2_category());
  put("z2_op1cat", zeta1_inv(fx::z2_category()));

  const auto twogrp = fx::two_group();
  const auto idem = fx::idempotent();
  const auto loop = fx::idempotent_loop();
  put("two_group", twogrp);
  put("idempotent", idem);
  put("idempotent_loop", loop);
  put("parallel_pair", fx::parallel_pair());

  const auto g_twogrp = zeta2_inv(twogrp);
  const auto g_idem = zeta2_inv(idem);
  const auto g_loop = zeta2_inv(loop);
  put("two_group_op2", Op2Document{g_twogrp.x, g_twogrp.biasing});
  put("idempotent_op2", Op2Document{g_idem.x, g_idem.biasing});
  put("idempotent_loop_op2", Op2Document{g_loop.x, g_loop.biasing});

  put("two_group_identity", identity_morphism(g_twogrp.x));
  put("two_group_twist", fx::two_group_twist());
  put("two_group_twist_op",
      zeta2_mor_inv(fx::two_group_twist(), g_twogrp, g_twogrp));
  put("idempotent_loop_collapse", fx::idempotent_loop_collapse());
  put("idempotent_loop_collapse_op",
      zeta2_mor_inv(fx::idempotent_loop_collapse(), g_loop, g_idem));
  return 0;
}
