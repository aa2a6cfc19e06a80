#include <doctest.h>

#include <algorithm>
#include <fstream>

#include "helpers.hpp"
#include "pointlike/errors.hpp"
#include "pointlike/kernels.hpp"

using namespace pointlike;
using test::as_group;
using test::functor_grid;
using test::group_corpus;
using test::load;

namespace {

std::vector<element> kernel_as_parent_elements(const FiniteGroup& g,
                                               const KernelFunctor& k) {
  std::vector<element> out;
  for (group_index m : kernel_members(g, k)) {
    out.push_back(g.elements[m]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("kernels");

TEST_CASE("kernels of S3") {
  const FiniteGroup s3 = as_group(load("s3.sgp"));
  CHECK(kernel_as_parent_elements(s3, KernelFunctor::abelian())
        == std::vector<element>{0, 4, 5});
  CHECK(kernel_as_parent_elements(s3, KernelFunctor::trivial()).size() == 6);
  CHECK(kernel_as_parent_elements(s3, KernelFunctor::p_group(2))
        == std::vector<element>{0, 4, 5});
  CHECK(kernel_as_parent_elements(s3, KernelFunctor::solvable())
        == std::vector<element>{0});
  CHECK(kernel_as_parent_elements(s3, KernelFunctor::nilpotent())
        == std::vector<element>{0, 4, 5});
}

TEST_CASE("kernels of cyclic groups") {
  const FiniteGroup z4 = as_group(load("z4.sgp"));
  CHECK(kernel_as_parent_elements(z4, KernelFunctor::p_group(2))
        == std::vector<element>{0});
  const FiniteGroup z6 = as_group(load("z6.sgp"));
  CHECK(kernel_as_parent_elements(z6, KernelFunctor::p_group(2))
        == std::vector<element>{0, 2, 4});
  CHECK(kernel_as_parent_elements(z6, KernelFunctor::pi_group({2, 3}))
        == std::vector<element>{0});
  CHECK(kernel_as_parent_elements(z6, KernelFunctor::abelian())
        == std::vector<element>{0});
}

TEST_CASE("kernel equals the brute-force oracle everywhere") {
  for (const std::string& name : group_corpus()) {
    const FiniteGroup g = as_group(load(name));
    for (const KernelFunctor& k : functor_grid()) {
      CAPTURE(name);
      CAPTURE(k.name());
      CHECK(kernel_members(g, k) == kernel_minimality_oracle(g, k));
    }
  }
}

TEST_CASE("oracle refuses oversized groups") {
  const FiniteGroup z6 = as_group(load("z6.sgp"));
  CHECK_THROWS_AS(kernel_minimality_oracle(z6, KernelFunctor::trivial(), 4),
                  CapExceededError);
}

TEST_CASE("kernel images along quotient maps") {
  // For the canonical surjection G -> G/N, the image of K_H(G) equals
  // K_H(G/N).
  for (const std::string& name : group_corpus()) {
    const FiniteGroup g = as_group(load(name));
    for (const auto& n : all_subgroups(g)) {
      if (!is_normal_subgroup(g, n)) {
        continue;
      }
      const FiniteGroup q = quotient_group(g, n);
      auto coset_rep = [&](group_index x) {
        group_index least = x;
        for (group_index m : n) {
          least = std::min(least, g.mul(x, m));
        }
        return least;
      };
      for (const KernelFunctor& k : functor_grid()) {
        std::vector<group_index> image;
        for (group_index m : kernel_members(g, k)) {
          image.push_back(q.local_of(coset_rep(m)));
        }
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        CAPTURE(name);
        CAPTURE(k.name());
        CHECK(image == kernel_members(q, k));
      }
    }
  }
}

TEST_CASE("kernels shrink along growing variety chains") {
  const std::vector<std::vector<KernelFunctor>> chains = {
      {KernelFunctor::trivial(), KernelFunctor::abelian(),
       KernelFunctor::nilpotent(), KernelFunctor::solvable(),
       KernelFunctor::all()},
      {KernelFunctor::trivial(), KernelFunctor::p_group(2),
       KernelFunctor::solvable()}};
  for (const std::string& name : group_corpus()) {
    const FiniteGroup g = as_group(load(name));
    for (const auto& chain : chains) {
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const auto small = kernel_members(g, chain[i + 1]);
        const auto big = kernel_members(g, chain[i]);
        CAPTURE(name);
        CHECK(std::includes(big.begin(), big.end(), small.begin(),
                            small.end()));
      }
    }
  }
}

TEST_CASE("verbal functors reproduce the named ones") {
  const KernelFunctor vx = KernelFunctor::verbal({GroupWord::x()});
  const KernelFunctor vcomm = KernelFunctor::verbal({GroupWord::commutator()});
  for (const std::string& name : group_corpus()) {
    const FiniteGroup g = as_group(load(name));
    CHECK(kernel_members(g, vx)
          == kernel_members(g, KernelFunctor::trivial()));
    CHECK(kernel_members(g, vcomm)
          == kernel_members(g, KernelFunctor::abelian()));
  }
}

TEST_CASE("kernel output is normal") {
  for (const std::string& name : group_corpus()) {
    const FiniteGroup g = as_group(load(name));
    for (const KernelFunctor& k : functor_grid()) {
      CHECK(is_normal_subgroup(g, kernel_members(g, k)));
    }
  }
}

TEST_CASE("is_in_variety") {
  CHECK(is_in_variety(as_group(load("z2.sgp")), KernelFunctor::abelian()));
  CHECK_FALSE(is_in_variety(as_group(load("s3.sgp")),
                            KernelFunctor::abelian()));
  CHECK(is_in_variety(as_group(load("s3.sgp")), KernelFunctor::solvable()));
}

TEST_CASE("group word evaluation") {
  const FiniteGroup s3 = as_group(load("s3.sgp"));
  // [x, y] at two transpositions is a 3-cycle
  const group_index c = evaluate_group_word(s3, GroupWord::commutator(),
                                            {s3.local_of(1), s3.local_of(2)});
  CHECK((s3.elements[c] == 4 || s3.elements[c] == 5));

  const FiniteGroup z3 = as_group(load("z3.sgp"));
  // x^(omega-1) is the inverse
  const GroupWord inverse_word{{{0, -1}}};
  CHECK(z3.elements[evaluate_group_word(z3, inverse_word, {z3.local_of(1)})]
        == 2);

  const GroupWord identity_word = GroupWord::x();
  CHECK(evaluate_group_word(z3, identity_word, {z3.local_of(2)})
        == z3.local_of(2));

  CHECK_THROWS_AS(evaluate_group_word(s3, GroupWord::commutator(), {0}),
                  ArityMismatchError);
}

TEST_CASE("word parsing and word files") {
  const GroupWord w = GroupWord::parse("x1 x2 x1' x2'");
  CHECK(w.factors == GroupWord::commutator().factors);
  CHECK(w.arity() == 2);
  CHECK(w.str() == "x1 x2 x1' x2'");
  CHECK_THROWS_AS(GroupWord::parse("y1"), InputError);
  CHECK_THROWS_AS(GroupWord::parse("x0"), InputError);
  CHECK_THROWS_AS(GroupWord::parse(""), InputError);

  std::ifstream in(test::data_dir() / "comm.words");
  const auto words = read_word_file(in);
  REQUIRE(words.size() == 1);
  CHECK(words[0].factors == GroupWord::commutator().factors);
}

TEST_CASE("quotients and subgroup machinery") {
  const FiniteGroup s3 = as_group(load("s3.sgp"));
  CHECK(all_subgroups(s3).size() == 6);  // 1, three Z2s, A3, S3
  const auto a3 = kernel_members(s3, KernelFunctor::abelian());
  const FiniteGroup q = quotient_group(s3, a3);
  CHECK(q.size() == 2);
  CHECK(satisfies_variety_directly(q, KernelFunctor::abelian()));
}

TEST_SUITE_END();
