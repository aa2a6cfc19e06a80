#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "pointlike/errors.hpp"
#include "pointlike/schutz.hpp"

using namespace pointlike;
using test::corpus;
using test::load;

TEST_SUITE_BEGIN("schutz");

TEST_CASE("right stabilizers") {
  const FiniteSemigroup rz2 = load("rz2.sgp");
  const GreenData g = green(rz2);
  // L-class of element 0 is {0}; only I and 0 keep it in place
  CHECK(right_stabilizer(rz2, g, g.l_class[0])
        == std::vector<element>{0, 2});

  const FiniteSemigroup z3 = load("z3.sgp");
  const GreenData gz = green(z3);
  CHECK(right_stabilizer(z3, gz, gz.l_class[0]).size() == 4);

  const FiniteSemigroup null2 = load("null2.sgp");
  const GreenData gn = green(null2);
  CHECK(right_stabilizer(null2, gn, gn.l_class[1])
        == std::vector<element>{2});
}

TEST_CASE("Schutzenberger group of a group H-class is the group itself") {
  const FiniteSemigroup z3 = load("z3.sgp");
  const GreenData g = green(z3);
  const SchutzView view = schutzenberger_right(z3, g, g.h_class[0]);
  CHECK(view.group.size() == 3);
}

TEST_CASE("singleton H-classes have trivial Schutzenberger groups") {
  const FiniteSemigroup rz2 = load("rz2.sgp");
  const GreenData g = green(rz2);
  CHECK(schutzenberger_right(rz2, g, g.h_class[0]).group.size() == 1);
}

TEST_CASE("Z2 x RZ2 has Schutzenberger groups of order two") {
  const FiniteSemigroup p = direct_product(load("z2.sgp"), load("rz2.sgp"));
  const GreenData g = green(p);
  for (class_id h = 0; h < g.h_classes.size(); ++h) {
    CHECK(schutzenberger_right(p, g, h).group.size() == 2);
  }
}

TEST_CASE("size and trivial point stabilizers across the corpus") {
  for (const std::string& name : corpus()) {
    const FiniteSemigroup s = load(name);
    const GreenData g = green(s);
    for (class_id h = 0; h < g.h_classes.size(); ++h) {
      CAPTURE(name);
      const SchutzView view = schutzenberger_right(s, g, h);
      CHECK(view.group.size() == view.h_class.size());
      // transitivity: some permutation moves position 0 to any position
      for (group_index target = 0; target < view.h_class.size(); ++target) {
        bool hit = false;
        for (const auto& perm : view.perms) {
          hit |= perm[0] == target;
        }
        CHECK(hit);
      }
    }
  }
}

TEST_CASE("stabilizer elements inducing the identity agree across one "
          "L-class") {
  for (const std::string& name : corpus()) {
    const FiniteSemigroup s = load(name);
    const GreenData g = green(s);
    for (class_id lc = 0; lc < g.l_classes.size(); ++lc) {
      std::set<class_id> h_ids;
      for (element x : g.l_classes[lc]) {
        h_ids.insert(g.h_class[x]);
      }
      if (h_ids.size() < 2) {
        continue;
      }
      std::vector<std::set<element>> identity_inducers;
      for (class_id h : h_ids) {
        const SchutzView view = schutzenberger_right(s, g, h);
        const std::vector<element>& hc = view.h_class;
        std::set<element> inducers;
        for (element t = 0; t <= s.size(); ++t) {
          bool is_identity = true;
          bool stabilizes = true;
          for (element x : hc) {
            const element xt = mul_si(s, x, t);
            if (!std::binary_search(hc.begin(), hc.end(), xt)) {
              stabilizes = false;
              break;
            }
            is_identity &= xt == x;
          }
          if (stabilizes && is_identity) {
            inducers.insert(t);
          }
        }
        identity_inducers.push_back(std::move(inducers));
      }
      CAPTURE(name);
      for (const auto& inducer_set : identity_inducers) {
        CHECK(inducer_set == identity_inducers.front());
      }
    }
  }
}

TEST_CASE("maximal subgroups") {
  const FiniteSemigroup z4 = load("z4.sgp");
  CHECK(maximal_subgroup(z4, green(z4), 0).size() == 4);

  const FiniteSemigroup rz2 = load("rz2.sgp");
  CHECK(maximal_subgroup(rz2, green(rz2), 0).size() == 1);

  const FiniteSemigroup p = direct_product(load("z2.sgp"), load("rz2.sgp"));
  const FiniteGroup mg = maximal_subgroup(p, green(p), 0);
  CHECK(mg.size() == 2);
  CHECK(mg.elements == std::vector<element>{0, 2});

  const FiniteSemigroup z2 = load("z2.sgp");
  CHECK_THROWS_AS(maximal_subgroup(z2, green(z2), 1), NotIdempotentError);
}

TEST_CASE("lift_group_onto finds a subgroup over a projection") {
  const FiniteSemigroup p = direct_product(load("z2.sgp"), load("rz2.sgp"));
  const FiniteGroup z2 = test::as_group(load("z2.sgp"));
  // projection to the first coordinate; element x*2+y maps to x
  std::vector<group_index> phi(4);
  for (element x = 0; x < 4; ++x) {
    phi[x] = x / 2;
  }
  const FiniteGroup lifted = lift_group_onto(p, phi, z2);
  CHECK(lifted.size() == 2);
  CHECK(lifted.elements == std::vector<element>{0, 2});
}

TEST_CASE("lifting a group onto itself returns the whole group") {
  const FiniteSemigroup z3 = load("z3.sgp");
  std::vector<group_index> phi{0, 1, 2};
  const FiniteGroup lifted = lift_group_onto(z3, phi, test::as_group(z3));
  CHECK(lifted.size() == 3);
}

TEST_CASE("lifting onto the trivial group lands on an idempotent") {
  const FiniteSemigroup p = load("null2.sgp").with_adjoined_identity();
  FiniteGroup trivial;
  trivial.elements = {0};
  trivial.table = {0};
  trivial.identity = 0;
  trivial.inverse = {0};
  const FiniteGroup lifted =
      lift_group_onto(p, std::vector<group_index>(3, 0), trivial);
  CHECK(lifted.size() == 1);
  CHECK(lifted.elements == std::vector<element>{0});
}

TEST_CASE("lift_group_onto rejects non-surjective maps") {
  const FiniteSemigroup z2 = load("z2.sgp");
  CHECK_THROWS_AS(
      lift_group_onto(z2, std::vector<group_index>(2, 0),
                      test::as_group(z2)),
      NotSurjectiveError);
}

TEST_CASE("H-element tests") {
  const FiniteSemigroup z2 = load("z2.sgp");
  const GreenData gz = green(z2);
  CHECK(is_H_element(z2, gz, 1, KernelFunctor::abelian()));
  CHECK_FALSE(is_H_element(z2, gz, 1, KernelFunctor::trivial()));

  const FiniteSemigroup s3 = load("s3.sgp");
  const GreenData gs = green(s3);
  CHECK_FALSE(is_H_element(s3, gs, 0, KernelFunctor::abelian()));
  CHECK(is_H_element(s3, gs, 0, KernelFunctor::solvable()));
}

TEST_CASE("H-element flags are constant along L-classes") {
  for (const std::string& name : corpus()) {
    const FiniteSemigroup s = load(name);
    const GreenData g = green(s);
    for (const KernelFunctor& k :
         {KernelFunctor::trivial(), KernelFunctor::abelian()}) {
      for (const auto& l_class : g.l_classes) {
        const bool first = is_H_element(s, g, l_class.front(), k);
        for (element x : l_class) {
          CAPTURE(name);
          CHECK(is_H_element(s, g, x, k) == first);
        }
      }
    }
  }
}

TEST_SUITE_END();
