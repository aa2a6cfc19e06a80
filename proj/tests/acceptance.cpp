// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries a wall-clock budget that is enforced.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "pointlike/errors.hpp"
#include "pointlike/flow.hpp"
#include "pointlike/green.hpp"
#include "pointlike/kernels.hpp"
#include "pointlike/regex.hpp"
#include "pointlike/saturation.hpp"
#include "pointlike/schutz.hpp"
#include "pointlike/separation.hpp"

using namespace pointlike;
using test::as_group;
using test::corpus;
using test::functor_grid;
using test::group_corpus;
using test::load;
using test::mask_of;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, double budget_seconds,
               const std::function<std::string()>& body) {
  const auto start = std::chrono::steady_clock::now();
  std::string problem;
  try {
    problem = body();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  std::ostringstream line;
  if (problem.empty() && elapsed > budget_seconds) {
    problem = "exceeded " + std::to_string(budget_seconds) + "s budget";
  }
  if (problem.empty()) {
    line << "PASS criterion " << number << ": " << label;
  } else {
    line << "FAIL criterion " << number << ": " << label << " -- " << problem;
    ++failures;
  }
  line.precision(2);
  line << " (" << std::fixed << elapsed << "s)";
  std::cout << line.str() << std::endl;
}

std::string check_named_instance(const std::string& name,
                                 const KernelFunctor& k,
                                 const std::vector<std::uint64_t>& expected) {
  const SaturationFamily fam =
      saturate(load(name), k, Strategy::kernel_rule);
  if (fam.maximal != expected) {
    return name + "/" + k.name() + " produced an unexpected antichain";
  }
  return "";
}

}  // namespace

int main() {
  criterion(1, "kernel equals the minimality oracle exactly", 5.0, [] {
    std::size_t cases = 0;
    for (const std::string& name : group_corpus()) {
      const FiniteGroup g = as_group(load(name));
      for (const KernelFunctor& k : functor_grid()) {
        if (kernel_members(g, k) != kernel_minimality_oracle(g, k)) {
          return name + "/" + k.name();
        }
        ++cases;
      }
    }
    return cases == 60 ? std::string{}
                       : std::string("wrong case count");
  });

  criterion(2, "singleton-only saturation iff all subgroups in H", 30.0, [] {
    for (const std::string& name : corpus()) {
      const FiniteSemigroup t = load(name);
      const GreenData g = green(t);
      for (const KernelFunctor& k : functor_grid()) {
        bool all_trivial = true;
        for (element e : g.idempotents) {
          all_trivial &= is_in_variety(maximal_subgroup(t, g, e), k);
        }
        const SaturationFamily fam = saturate(t, k, Strategy::kernel_rule);
        const bool singletons = fam.masks.size() == t.size();
        if (singletons != all_trivial) {
          return name + "/" + k.name();
        }
      }
    }
    return std::string{};
  });

  criterion(3, "kernel and pseudoidentity strategies agree", 60.0, [] {
    for (const std::string& name : corpus()) {
      const FiniteSemigroup t = load(name);
      try {
        SaturationOptions opts;
        opts.words = {GroupWord::x()};
        saturate(t, KernelFunctor::trivial(), Strategy::both, opts);
        opts.words = {GroupWord::commutator()};
        saturate(t, KernelFunctor::abelian(), Strategy::both, opts);
      } catch (const StrategiesDisagreeError& e) {
        return name + ": " + e.what();
      }
    }
    return std::string{};
  });

  criterion(4, "named saturation instances", 10.0, [] {
    std::string problem = check_named_instance(
        "z2.sgp", KernelFunctor::trivial(), {mask_of({0, 1})});
    if (problem.empty()) {
      problem = check_named_instance("s3.sgp", KernelFunctor::abelian(),
                                     {mask_of({1, 2, 3}), mask_of({0, 4, 5})});
    }
    if (problem.empty()) {
      problem = check_named_instance("s3.sgp", KernelFunctor::trivial(),
                                     {mask_of({0, 1, 2, 3, 4, 5})});
    }
    if (problem.empty()) {
      for (const KernelFunctor& k : functor_grid()) {
        const std::string p = check_named_instance(
            "rz2.sgp", k, {mask_of({0}), mask_of({1})});
        if (!p.empty()) {
          return p;
        }
      }
    }
    return problem;
  });

  criterion(5, "flow verifier: all six checks on the corpus grid", 300.0, [] {
    for (const std::string& name : corpus()) {
      const FiniteSemigroup t = load(name);
      if (t.size() > 6) {
        continue;
      }
      for (const KernelFunctor& k :
           {KernelFunctor::trivial(), KernelFunctor::abelian(),
            KernelFunctor::p_group(2), KernelFunctor::all()}) {
        const SaturationFamily fam = saturate(t, k, Strategy::kernel_rule);
        const VerifyReport report = verify_all(k, fam);
        for (const CheckResult& c : report.checks) {
          if (!c.passed) {
            return name + "/" + k.name() + ": " + c.name + " failed ("
                   + c.detail + ")";
          }
        }
        if (report.checks.size() != 6) {
          return name + "/" + k.name() + ": wrong check count";
        }
      }
    }
    return std::string{};
  });

  criterion(6, "separation verdicts", 10.0, [] {
    const Dfa even = regex_to_dfa("(aa)+", "a");
    const Dfa odd = regex_to_dfa("a(aa)*", "a");
    const SeparationVerdict v1 =
        decide_separation(even, odd, KernelFunctor::trivial());
    if (v1.separable) {
      return std::string("(aa)+ vs a(aa)* separable under trivial");
    }
    if (!even.accepts(v1.witness_word_x) || !odd.accepts(v1.witness_word_y)) {
      return std::string("witness words do not straddle the languages");
    }
    if (!decide_separation(even, odd, KernelFunctor::abelian()).separable) {
      return std::string("(aa)+ vs a(aa)* not separable under ab");
    }
    const Dfa ab = regex_to_dfa("(ab)+", "ab");
    const Dfa ba = regex_to_dfa("(ba)+", "ab");
    if (!decide_separation(ab, ba, KernelFunctor::trivial()).separable) {
      return std::string("(ab)+ vs (ba)+ not separable under trivial");
    }
    for (const auto& [l1, l2, alphabet] :
         {std::tuple{"(aa)+", "a(aa)*", "a"}, {"(ab)+", "(ba)+", "ab"},
          {"a", "bb*", "ab"}}) {
      if (!decide_separation(regex_to_dfa(l1, alphabet),
                             regex_to_dfa(l2, alphabet), KernelFunctor::all())
               .separable) {
        return std::string("disjoint pair not separable under all");
      }
    }
    return std::string{};
  });

  criterion(7, "maximal pointlikes shrink along growing varieties", 60.0, [] {
    const std::vector<std::vector<KernelFunctor>> chains = {
        {KernelFunctor::trivial(), KernelFunctor::abelian(),
         KernelFunctor::nilpotent(), KernelFunctor::solvable(),
         KernelFunctor::all()},
        {KernelFunctor::trivial(), KernelFunctor::p_group(2),
         KernelFunctor::solvable()}};
    for (const std::string& name : corpus()) {
      const FiniteSemigroup t = load(name);
      for (const auto& chain : chains) {
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
          const SaturationFamily small =
              saturate(t, chain[i], Strategy::kernel_rule);
          const SaturationFamily large =
              saturate(t, chain[i + 1], Strategy::kernel_rule);
          for (std::uint64_t m : large.maximal) {
            if (!small.is_pointlike(SubsetElt{m, small.universe})) {
              return name + ": " + chain[i + 1].name() + " not inside "
                     + chain[i].name();
            }
          }
        }
      }
    }
    return std::string{};
  });

  criterion(8, "structural property suites", 60.0, [] {
    std::mt19937 rng(1234);
    for (const std::string& name : corpus()) {
      const FiniteSemigroup s = load(name);
      const GreenData g = green(s);
      const element n = static_cast<element>(s.size());

      // Green preorders against their definitions, and stability.
      for (element x = 0; x < n; ++x) {
        for (element y = 0; y < n; ++y) {
          bool r = x == y, l = x == y;
          for (element t = 0; t < n; ++t) {
            r |= s.mul(y, t) == x;
            l |= s.mul(t, y) == x;
          }
          if (g.leq_r(x, y) != r || g.leq_l(x, y) != l) {
            return name + ": Green preorder mismatch";
          }
          if (g.equiv_j(x, y)) {
            if ((g.leq_r(y, x) && !g.equiv_r(x, y))
                || (g.leq_l(y, x) && !g.equiv_l(x, y))) {
              return name + ": stability violated";
            }
          }
        }
      }

      // Schutzenberger size and trivial point stabilizers.
      for (class_id h = 0; h < g.h_classes.size(); ++h) {
        const SchutzView view = schutzenberger_right(s, g, h);
        if (view.group.size() != view.h_class.size()) {
          return name + ": Schutzenberger size mismatch";
        }
        for (group_index p = 0; p < view.perms.size(); ++p) {
          for (group_index q = 0; q < view.h_class.size(); ++q) {
            if (view.perms[p][q] == q && p != view.group.identity) {
              return name + ": nontrivial point stabilizer";
            }
          }
        }
      }

      // Power-semigroup closure, rho confluence, B idempotence and
      // coordinatewise containment on the trivial-variety saturation.
      if (s.size() <= 6) {
        const KernelFunctor k = KernelFunctor::trivial();
        const SaturationFamily fam = saturate(s, k, Strategy::kernel_rule);
        for (std::uint64_t x : fam.masks) {
          for (std::uint64_t y : fam.masks) {
            if (!fam.is_member(power_product(s, SubsetElt{x, fam.universe},
                                             SubsetElt{y, fam.universe})
                                   .mask)) {
              return name + ": family not product-closed";
            }
          }
        }
        const SatSemigroup sat = materialize_downclosure(fam, k);
        const BlowupOp b = build_blowup(sat, k);
        for (int trial = 0; trial < 200; ++trial) {
          LChain q;
          element cur = static_cast<element>(rng() % sat.size());
          q.push_back(cur);
          for (int len = 0; len < 3; ++len) {
            std::vector<element> lower;
            for (element y = 0; y < sat.size(); ++y) {
              if (sat.green_data.leq_l(y, cur)) {
                lower.push_back(y);
              }
            }
            cur = lower[rng() % lower.size()];
            q.push_back(cur);
          }
          const LChain reduced = rho(sat, q);
          if (!is_strict_l_chain(sat, reduced)
              || rho(sat, reduced) != reduced
              || reduced.back() != q.back()) {
            return name + ": rho misbehaves";
          }
          const LChain image = big_b(sat, b, q);
          if (big_b(sat, b, image) != image) {
            return name + ": B not idempotent";
          }
          for (std::size_t i = 0; i < q.size(); ++i) {
            if ((sat.masks[q[i]] & ~sat.masks[image[i]]) != 0) {
              return name + ": B loses a coordinate";
            }
          }
        }
      }
    }
    return std::string{};
  });

  if (failures > 0) {
    std::cout << failures << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all acceptance criteria passed" << std::endl;
  return 0;
}
