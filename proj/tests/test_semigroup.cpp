#include <doctest.h>

#include <random>
#include <sstream>

#include "helpers.hpp"
#include "pointlike/errors.hpp"
#include "pointlike/semigroup.hpp"

using namespace pointlike;
using test::load;

TEST_SUITE_BEGIN("semigroup");

TEST_CASE("from_table accepts right-zero and Z2") {
  const FiniteSemigroup rz2 = FiniteSemigroup::from_table(2, {0, 1, 0, 1});
  CHECK(rz2.mul(0, 1) == 1);
  CHECK(rz2.mul(1, 0) == 0);
  const FiniteSemigroup z2 = FiniteSemigroup::from_table(2, {0, 1, 1, 0});
  CHECK(z2.mul(1, 1) == 0);
}

TEST_CASE("from_table rejects non-associative tables") {
  CHECK_THROWS_AS(FiniteSemigroup::from_table(2, {1, 1, 0, 0}),
                  NonAssociativeError);
  try {
    FiniteSemigroup::from_table(2, {1, 1, 0, 0});
  } catch (const NonAssociativeError& e) {
    // the error names a concrete failing triple
    CHECK(e.i < 2);
    CHECK(e.j < 2);
    CHECK(e.k < 2);
  }
}

TEST_CASE("from_table rejects out-of-range entries") {
  CHECK_THROWS_AS(FiniteSemigroup::from_table(2, {0, 1, 1, 2}),
                  IndexOutOfRangeError);
}

TEST_CASE("from_transformations closes a 3-cycle to Z3") {
  const FiniteSemigroup s =
      FiniteSemigroup::from_transformations(3, {{1, 2, 0}});
  CHECK(s.size() == 3);
  // cyclic: g, g^2, g^3 = identity-on-orbit
  CHECK(s.generators() == std::vector<element>{0});
  CHECK(s.mul(0, 0) != 0);
}

TEST_CASE("from_transformations on two constants gives right zeroes") {
  const FiniteSemigroup s =
      FiniteSemigroup::from_transformations(2, {{0, 0}, {1, 1}});
  CHECK(s.size() == 2);
  for (element x = 0; x < 2; ++x) {
    for (element y = 0; y < 2; ++y) {
      CHECK(s.mul(x, y) == y);
    }
  }
}

TEST_CASE("from_transformations iterates a non-permutation to closure") {
  // tau: 0->1, 1->2, 2->1; tau^3 = tau, so only two distinct composites
  const FiniteSemigroup s =
      FiniteSemigroup::from_transformations(3, {{1, 2, 1}});
  CHECK(s.size() == 2);
  CHECK(s.mul(s.mul(0, 0), 0) == 0);     // tau^3 = tau
  CHECK(s.is_idempotent(s.mul(0, 0)));   // tau^2 is idempotent
}

TEST_CASE("from_transformations requires a generator") {
  CHECK_THROWS_AS(FiniteSemigroup::from_transformations(2, {}),
                  EmptyGeneratorSetError);
}

TEST_CASE("omega powers") {
  const FiniteSemigroup z3 = load("z3.sgp");
  CHECK(z3.omega(1) == 0);
  const FiniteSemigroup rz2 = load("rz2.sgp");
  CHECK(rz2.omega(0) == 0);
  const FiniteSemigroup z4 = load("z4.sgp");
  CHECK(z4.omega(1) == 0);
  CHECK(z4.is_idempotent(z4.omega(3)));
}

TEST_CASE("omega is an idempotent power of its argument") {
  for (const std::string& name : test::corpus()) {
    const FiniteSemigroup s = load(name);
    for (element x = 0; x < s.size(); ++x) {
      const element w = s.omega(x);
      CHECK(s.is_idempotent(w));
      element power = x;
      bool hit = power == w;
      for (std::size_t i = 0; i < s.size() && !hit; ++i) {
        power = s.mul(power, x);
        hit = power == w;
      }
      CAPTURE(name);
      CHECK(hit);
    }
  }
}

TEST_CASE("adjoined identity is fresh and acts as identity") {
  const FiniteSemigroup z2 = load("z2.sgp");
  const FiniteSemigroup si = z2.with_adjoined_identity();
  CHECK(si.size() == 3);
  CHECK(si.has_adjoined_identity());
  CHECK(si.identity_index() == 2);
  for (element x = 0; x < 3; ++x) {
    CHECK(si.mul(x, 2) == x);
    CHECK(si.mul(2, x) == x);
  }
  CHECK(mul_si(z2, 2, 1) == 1);
  CHECK(mul_si(z2, 1, 2) == 1);
  CHECK(mul_si(z2, 1, 1) == 0);
}

TEST_CASE("sgp file parsing") {
  const FiniteSemigroup s3 = load("s3.sgp");
  CHECK(s3.size() == 6);
  CHECK(s3.generators() == std::vector<element>{1, 2});

  std::istringstream bad_gens("n 2\n0 1\n1 0\ngenerators 0\n");
  CHECK_THROWS_AS(read_sgp(bad_gens), InputError);

  std::istringstream bad_header("m 2\n0 1\n1 0\n");
  CHECK_THROWS_AS(read_sgp(bad_header), InputError);

  std::istringstream wide_row("n 2\n0 1 1\n1 0\n");
  CHECK_THROWS_AS(read_sgp(wide_row), InputError);
}

TEST_CASE("tgen file parsing") {
  const FiniteSemigroup t2 = load_semigroup_file(test::data_dir() / "t2.tgen");
  CHECK(t2.size() == 4);
  CHECK(t2.generators().size() == 3);

  std::istringstream bad_header("deg 2\n0 1\n");
  CHECK_THROWS_AS(read_tgen(bad_header), InputError);
  std::istringstream short_row("degree 2\n0\n");
  CHECK_THROWS_AS(read_tgen(short_row), InputError);
}

TEST_CASE("random transformation closures produce associative tables") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t degree = 2 + rng() % 3;
    std::vector<std::vector<element>> gens(1 + rng() % 2);
    for (auto& g : gens) {
      g.resize(degree);
      for (auto& v : g) {
        v = static_cast<element>(rng() % degree);
      }
    }
    const FiniteSemigroup s =
        FiniteSemigroup::from_transformations(degree, gens);
    // re-validating through the strict constructor exercises the
    // associativity check on the closed table
    std::vector<element> table(s.size() * s.size());
    for (element i = 0; i < s.size(); ++i) {
      for (element j = 0; j < s.size(); ++j) {
        table[i * s.size() + j] = s.mul(i, j);
      }
    }
    CHECK_NOTHROW(FiniteSemigroup::from_table(s.size(), table));
  }
}

TEST_CASE("adjoining an identity puts it in its own top J-class") {
  const FiniteSemigroup si = load("z2.sgp").with_adjoined_identity();
  const GreenData g = green(si);
  CHECK(g.j_class[2] != g.j_class[0]);
  CHECK(g.leq_j(0, 2));
  CHECK_FALSE(g.leq_j(2, 0));
}

TEST_CASE("direct product multiplies coordinatewise") {
  const FiniteSemigroup p = direct_product(load("z2.sgp"), load("rz2.sgp"));
  CHECK(p.size() == 4);
  // (g,a)*(g,b) = (e,b): indices x*2+y
  CHECK(p.mul(2, 3) == 1);
}

TEST_CASE("induced subsemigroup restricts the table") {
  const FiniteSemigroup z6 = load("z6.sgp");
  const FiniteSemigroup z3 = induced_subsemigroup(z6, {0, 2, 4});
  CHECK(z3.size() == 3);
  CHECK(z3.mul(1, 2) == 0);  // 2 + 4 = 0 mod 6
  CHECK_THROWS_AS(induced_subsemigroup(z6, {0, 1}), VerificationError);
}

TEST_SUITE_END();
