#ifndef POINTLIKE_TEST_HELPERS_HPP
#define POINTLIKE_TEST_HELPERS_HPP

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <string>
#include <vector>

#include "pointlike/green.hpp"
#include "pointlike/group.hpp"
#include "pointlike/kernels.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike::test {

inline std::filesystem::path data_dir() { return POINTLIKE_DATA_DIR; }

inline FiniteSemigroup load(const std::string& name) {
  return load_semigroup_file(data_dir() / name);
}

/// Every bundled semigroup fixture.
inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> names = {
      "z2.sgp",  "z3.sgp",  "z4.sgp",    "v4.sgp", "z6.sgp", "s3.sgp",
      "rz2.sgp", "lz2.sgp", "null2.sgp", "b2.sgp", "t2.sgp"};
  return names;
}

/// The fixtures that are groups.
inline const std::vector<std::string>& group_corpus() {
  static const std::vector<std::string> names = {
      "z2.sgp", "z3.sgp", "z4.sgp", "v4.sgp", "z6.sgp", "s3.sgp"};
  return names;
}

/// Views a semigroup that happens to be a group as a FiniteGroup.
inline FiniteGroup as_group(const FiniteSemigroup& s) {
  const GreenData g = green(s);
  return maximal_subgroup(s, g, g.idempotents.at(0));
}

/// The ten functors exercised by the acceptance grid.
inline std::vector<KernelFunctor> functor_grid() {
  return {KernelFunctor::trivial(),
          KernelFunctor::all(),
          KernelFunctor::abelian(),
          KernelFunctor::p_group(2),
          KernelFunctor::p_group(3),
          KernelFunctor::pi_group({2, 3}),
          KernelFunctor::nilpotent(),
          KernelFunctor::solvable(),
          KernelFunctor::verbal({GroupWord::x()}),
          KernelFunctor::verbal({GroupWord::commutator()})};
}

inline std::uint64_t mask_of(std::initializer_list<element> elts) {
  std::uint64_t m = 0;
  for (element e : elts) {
    m |= std::uint64_t{1} << e;
  }
  return m;
}

}  // namespace pointlike::test

#endif  // POINTLIKE_TEST_HELPERS_HPP
