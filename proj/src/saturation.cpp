#include "pointlike/saturation.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <set>

#include "pointlike/errors.hpp"

namespace pointlike {

SubsetElt SubsetElt::singleton(element t, std::uint32_t universe) {
  if (t >= universe) {
    throw IndexOutOfRangeError("element outside the universe");
  }
  return {std::uint64_t{1} << t, universe};
}

SubsetElt SubsetElt::from_elements(const std::vector<element>& elts,
                                   std::uint32_t universe) {
  SubsetElt s{0, universe};
  for (element t : elts) {
    if (t >= universe) {
      throw IndexOutOfRangeError("element outside the universe");
    }
    s.mask |= std::uint64_t{1} << t;
  }
  if (s.mask == 0) {
    throw InputError("the empty set is not an element of 2^T");
  }
  return s;
}

std::size_t SubsetElt::count() const {
  return static_cast<std::size_t>(std::popcount(mask));
}

std::vector<element> SubsetElt::elements() const {
  std::vector<element> out;
  for (std::uint32_t t = 0; t < universe; ++t) {
    if (contains(t)) {
      out.push_back(t);
    }
  }
  return out;
}

SubsetElt power_product(const FiniteSemigroup& t, const SubsetElt& x,
                        const SubsetElt& y) {
  if (x.universe != y.universe || x.universe != t.size()) {
    throw UniverseMismatchError("subsets live over different universes");
  }
  SubsetElt out{0, x.universe};
  for (std::uint32_t a = 0; a < x.universe; ++a) {
    if (!x.contains(a)) {
      continue;
    }
    for (std::uint32_t b = 0; b < y.universe; ++b) {
      if (y.contains(b)) {
        out.mask |= std::uint64_t{1} << t.mul(a, b);
      }
    }
  }
  return out;
}

std::string strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kernel_rule:
      return "kernel";
    case Strategy::pseudoidentity:
      return "pseudo";
    case Strategy::both:
      return "both";
  }
  return "?";
}

namespace {

std::uint64_t mask_product(const FiniteSemigroup& t, std::uint64_t x,
                           std::uint64_t y) {
  std::uint64_t out = 0;
  const std::uint32_t n = static_cast<std::uint32_t>(t.size());
  for (std::uint32_t a = 0; a < n; ++a) {
    if (!((x >> a) & 1)) {
      continue;
    }
    for (std::uint32_t b = 0; b < n; ++b) {
      if ((y >> b) & 1) {
        out |= std::uint64_t{1} << t.mul(a, b);
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> maximal_antichain(
    const std::vector<std::uint64_t>& members) {
  std::vector<std::uint64_t> maximal;
  for (std::uint64_t m : members) {
    bool dominated = false;
    for (std::uint64_t other : members) {
      if (other != m && (m & ~other) == 0) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      maximal.push_back(m);
    }
  }
  return maximal;
}

// Induced semigroup on a sorted, product-closed list of masks.
FiniteSemigroup family_table(const FiniteSemigroup& t,
                             const std::vector<std::uint64_t>& members) {
  const std::size_t k = members.size();
  std::vector<element> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::uint64_t p = mask_product(t, members[i], members[j]);
      auto it = std::lower_bound(members.begin(), members.end(), p);
      if (it == members.end() || *it != p) {
        throw VerificationError("family is not product-closed");
      }
      table[i * k + j] = static_cast<element>(it - members.begin());
    }
  }
  return FiniteSemigroup::unchecked(k, std::move(table));
}

// Product-closes the member set in place; returns how many were added.
std::size_t product_close(const FiniteSemigroup& t,
                          std::set<std::uint64_t>& members) {
  std::size_t added = 0;
  std::vector<std::uint64_t> worklist(members.begin(), members.end());
  for (std::size_t next = 0; next < worklist.size(); ++next) {
    const std::uint64_t x = worklist[next];
    // Pair x against a snapshot; later additions pair with x when they
    // themselves are dequeued.
    const std::vector<std::uint64_t> snapshot(members.begin(), members.end());
    for (std::uint64_t y : snapshot) {
      for (std::uint64_t p : {mask_product(t, x, y), mask_product(t, y, x)}) {
        if (members.insert(p).second) {
          worklist.push_back(p);
          ++added;
        }
      }
    }
  }
  return added;
}

// The cyclic subgroup generated by one element, as local indices.
std::vector<group_index> cyclic_subgroup(const FiniteGroup& g, group_index x) {
  std::vector<group_index> out{x};
  group_index y = x;
  while (g.mul(y, x) != x) {
    y = g.mul(y, x);
    out.push_back(y);
  }
  return out;
}

}  // namespace

std::vector<std::uint64_t> kernel_rule_step(
    const FiniteSemigroup& t, const std::vector<std::uint64_t>& members,
    const KernelFunctor& k) {
  const FiniteSemigroup fam = family_table(t, members);
  const GreenData g = green(fam);
  std::vector<std::uint64_t> added;
  for (element e = 0; e < fam.size(); ++e) {
    if (!fam.is_idempotent(e)) {
      continue;
    }
    const FiniteGroup grp = maximal_subgroup(fam, g, e);
    std::uint64_t unioned = 0;
    for (group_index m : kernel_members(grp, k)) {
      unioned |= members[grp.elements[m]];
    }
    if (!std::binary_search(members.begin(), members.end(), unioned)
        && std::find(added.begin(), added.end(), unioned) == added.end()) {
      added.push_back(unioned);
    }
  }
  return added;
}

std::vector<std::uint64_t> pseudoidentity_rule_step(
    const FiniteSemigroup& t, const std::vector<std::uint64_t>& members,
    const std::vector<GroupWord>& words, std::size_t max_tuple_evals) {
  const std::vector<std::uint64_t> maximal = maximal_antichain(members);
  std::size_t evals = 0;
  for (const GroupWord& w : words) {
    std::size_t tuples = 1;
    for (std::size_t i = 0; i < w.arity(); ++i) {
      tuples *= maximal.size();
    }
    evals += tuples;
  }
  if (evals > max_tuple_evals) {
    throw CapExceededError("pseudoidentity rule would evaluate "
                           + std::to_string(evals) + " tuples, cap is "
                           + std::to_string(max_tuple_evals));
  }

  const FiniteSemigroup fam = family_table(t, members);
  const GreenData g = green(fam);
  auto index_of = [&members](std::uint64_t m) {
    auto it = std::lower_bound(members.begin(), members.end(), m);
    if (it == members.end() || *it != m) {
      throw VerificationError("expected mask to be a member");
    }
    return static_cast<element>(it - members.begin());
  };

  std::vector<std::uint64_t> added;
  for (const GroupWord& w : words) {
    const std::size_t arity = w.arity();
    std::vector<std::size_t> pick(arity, 0);
    while (true) {
      // The subsemigroup generated by the tuple, then a canonical
      // idempotent of its minimal ideal: the omega power of the product
      // of all its elements.
      std::set<std::uint64_t> gen;
      for (std::size_t i = 0; i < arity; ++i) {
        gen.insert(maximal[pick[i]]);
      }
      product_close(t, gen);
      std::uint64_t prod = 0;
      bool first = true;
      for (std::uint64_t z : gen) {
        prod = first ? z : mask_product(t, prod, z);
        first = false;
      }
      std::uint64_t e = prod;
      while (mask_product(t, e, e) != e) {
        e = mask_product(t, e, prod);
      }

      const FiniteGroup grp = maximal_subgroup(fam, g, index_of(e));
      std::vector<group_index> args;
      for (std::size_t i = 0; i < arity; ++i) {
        const std::uint64_t conj =
            mask_product(t, mask_product(t, e, maximal[pick[i]]), e);
        args.push_back(grp.local_of(index_of(conj)));
      }
      const group_index value = evaluate_group_word(grp, w, args);
      std::uint64_t unioned = 0;
      for (group_index m : cyclic_subgroup(grp, value)) {
        unioned |= members[grp.elements[m]];
      }
      if (!std::binary_search(members.begin(), members.end(), unioned)
          && std::find(added.begin(), added.end(), unioned) == added.end()) {
        added.push_back(unioned);
      }

      std::size_t pos = 0;
      while (pos < arity && ++pick[pos] == maximal.size()) {
        pick[pos] = 0;
        ++pos;
      }
      if (pos == arity) {
        break;
      }
    }
  }
  return added;
}

namespace {

struct FixpointResult {
  std::vector<std::uint64_t> members;
  std::vector<TraceEntry> trace;
  SaturationReport report;
};

FixpointResult run_fixpoint(const FiniteSemigroup& t, const KernelFunctor& k,
                            Strategy strategy,
                            const SaturationOptions& opts) {
  std::set<std::uint64_t> members;
  for (element x = 0; x < t.size(); ++x) {
    members.insert(std::uint64_t{1} << x);
  }
  FixpointResult res;
  res.report.strategy = strategy;
  while (true) {
    ++res.report.rounds;
    res.report.product_additions += product_close(t, members);
    if (members.size() > opts.max_members) {
      throw CapExceededError("saturation family cap "
                             + std::to_string(opts.max_members)
                             + " exceeded");
    }
    const std::vector<std::uint64_t> snapshot(members.begin(), members.end());
    std::vector<std::uint64_t> added;
    if (strategy == Strategy::kernel_rule) {
      added = kernel_rule_step(t, snapshot, k);
      res.report.kernel_rule_additions += added.size();
      if (opts.record_trace) {
        for (std::uint64_t m : added) {
          res.trace.push_back({"kernel", m, {}});
        }
      }
    } else {
      added = pseudoidentity_rule_step(t, snapshot, opts.words,
                                       opts.max_tuple_evals);
      res.report.pseudo_rule_additions += added.size();
      if (opts.record_trace) {
        for (std::uint64_t m : added) {
          res.trace.push_back({"pseudo", m, {}});
        }
      }
    }
    if (added.empty()) {
      break;
    }
    members.insert(added.begin(), added.end());
  }
  res.members.assign(members.begin(), members.end());
  res.report.member_count = res.members.size();
  return res;
}

}  // namespace

SaturationFamily saturate(const FiniteSemigroup& t, const KernelFunctor& k,
                          Strategy strategy, const SaturationOptions& opts) {
  if (t.size() > opts.max_universe) {
    throw CapExceededError("saturation cap |T| <= "
                           + std::to_string(opts.max_universe)
                           + " exceeded by semigroup of size "
                           + std::to_string(t.size()));
  }
  if (t.size() > 63) {
    throw CapExceededError("bit-mask representation supports |T| <= 63");
  }
  if (strategy != Strategy::kernel_rule && opts.words.empty()) {
    throw InputError("pseudoidentity strategy requires a word list");
  }

  const auto start = std::chrono::steady_clock::now();
  FixpointResult primary;
  if (strategy == Strategy::both) {
    primary = run_fixpoint(t, k, Strategy::kernel_rule, opts);
    FixpointResult secondary =
        run_fixpoint(t, k, Strategy::pseudoidentity, opts);
    const auto max1 = maximal_antichain(primary.members);
    const auto max2 = maximal_antichain(secondary.members);
    if (max1 != max2) {
      std::vector<std::uint64_t> diff;
      std::set_symmetric_difference(max1.begin(), max1.end(), max2.begin(),
                                    max2.end(), std::back_inserter(diff));
      throw StrategiesDisagreeError(diff.empty() ? 0 : diff.front());
    }
    primary.report.pseudo_rule_additions =
        secondary.report.pseudo_rule_additions;
    primary.report.strategy = Strategy::both;
  } else {
    primary = run_fixpoint(t, k, strategy, opts);
  }

  SaturationFamily fam;
  fam.base = t;
  fam.functor = k;
  fam.universe = static_cast<std::uint32_t>(t.size());
  fam.masks = std::move(primary.members);
  fam.table = family_table(t, fam.masks);
  fam.green_data = green(fam.table);
  fam.maximal = maximal_antichain(fam.masks);
  fam.trace = std::move(primary.trace);
  fam.report = primary.report;
  fam.report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return fam;
}

std::optional<std::size_t> SaturationFamily::index_of(
    std::uint64_t mask) const {
  auto it = std::lower_bound(masks.begin(), masks.end(), mask);
  if (it == masks.end() || *it != mask) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - masks.begin());
}

bool SaturationFamily::is_member(std::uint64_t mask) const {
  return index_of(mask).has_value();
}

bool SaturationFamily::is_pointlike(const SubsetElt& x) const {
  if (x.universe != universe) {
    throw UniverseMismatchError("subset is over a different universe");
  }
  for (std::uint64_t m : maximal) {
    if ((x.mask & ~m) == 0) {
      return true;
    }
  }
  return false;
}

std::vector<std::pair<element, element>> SaturationFamily::pointlike_pairs()
    const {
  std::vector<std::pair<element, element>> pairs;
  for (element a = 0; a < universe; ++a) {
    for (element b = a + 1; b < universe; ++b) {
      const std::uint64_t pair_mask =
          (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
      for (std::uint64_t m : maximal) {
        if ((pair_mask & ~m) == 0) {
          pairs.emplace_back(a, b);
          break;
        }
      }
    }
  }
  return pairs;
}

std::optional<std::vector<GroupWord>> default_pseudoidentity_words(
    const KernelFunctor& k) {
  switch (k.tag) {
    case KernelFunctor::Tag::trivial:
      return std::vector<GroupWord>{GroupWord::x()};
    case KernelFunctor::Tag::abelian:
      return std::vector<GroupWord>{GroupWord::commutator()};
    case KernelFunctor::Tag::verbal:
      return k.words;
    default:
      return std::nullopt;
  }
}

}  // namespace pointlike
