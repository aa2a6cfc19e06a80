#include "pointlike/kernels.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "pointlike/errors.hpp"

namespace pointlike {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) {
    return false;
  }
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) {
      return false;
    }
  }
  return true;
}

std::size_t order_of(const FiniteGroup& g, group_index x) {
  std::size_t n = 1;
  group_index y = x;
  while (y != g.identity) {
    y = g.mul(y, x);
    ++n;
  }
  return n;
}

std::vector<unsigned> prime_factors(std::size_t n) {
  std::vector<unsigned> out;
  for (unsigned p = 2; static_cast<std::size_t>(p) * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) {
        n /= p;
      }
    }
  }
  if (n > 1) {
    out.push_back(static_cast<unsigned>(n));
  }
  return out;
}

std::vector<group_index> commutator_values(const FiniteGroup& g,
                                           const std::vector<group_index>& a,
                                           const std::vector<group_index>& b) {
  std::set<group_index> vals;
  for (group_index x : a) {
    for (group_index y : b) {
      vals.insert(g.mul(g.mul(g.mul(x, y), g.inv(x)), g.inv(y)));
    }
  }
  return {vals.begin(), vals.end()};
}

std::vector<group_index> whole_group(const FiniteGroup& g) {
  std::vector<group_index> all(g.size());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

// Limit of K_{i+1} = [left_i, right], starting from the whole group, where
// for the derived series left and right both shrink and for the lower
// central series the right stays the whole group.
std::vector<group_index> series_residual(const FiniteGroup& g,
                                         bool lower_central) {
  std::vector<group_index> current = whole_group(g);
  while (true) {
    const std::vector<group_index>& right =
        lower_central ? whole_group(g) : current;
    std::vector<group_index> next =
        subgroup_closure(g, commutator_values(g, right, current));
    if (next == current) {
      return current;
    }
    current = std::move(next);
  }
}

std::vector<group_index> raw_kernel_members(const FiniteGroup& g,
                                            const KernelFunctor& k) {
  switch (k.tag) {
    case KernelFunctor::Tag::trivial:
      return whole_group(g);
    case KernelFunctor::Tag::all:
      return {g.identity};
    case KernelFunctor::Tag::abelian:
      return subgroup_closure(
          g, commutator_values(g, whole_group(g), whole_group(g)));
    case KernelFunctor::Tag::p_group:
    case KernelFunctor::Tag::pi_group: {
      // Generated by the elements whose order is coprime to every prime
      // of pi; that set is closed under conjugation, so the subgroup it
      // generates is normal.
      std::vector<group_index> gens;
      for (group_index x = 0; x < g.size(); ++x) {
        const std::size_t ord = order_of(g, x);
        bool coprime = true;
        for (unsigned p : k.primes) {
          if (ord % p == 0) {
            coprime = false;
            break;
          }
        }
        if (coprime) {
          gens.push_back(x);
        }
      }
      return subgroup_closure(g, gens);
    }
    case KernelFunctor::Tag::nilpotent:
      return series_residual(g, true);
    case KernelFunctor::Tag::solvable:
      return series_residual(g, false);
    case KernelFunctor::Tag::verbal: {
      std::set<group_index> vals;
      for (const GroupWord& w : k.words) {
        const std::size_t arity = w.arity();
        std::vector<group_index> args(arity, 0);
        // Odometer over all argument tuples.
        while (true) {
          vals.insert(evaluate_group_word(g, w, args));
          std::size_t pos = 0;
          while (pos < arity && ++args[pos] == g.size()) {
            args[pos] = 0;
            ++pos;
          }
          if (pos == arity) {
            break;
          }
        }
      }
      std::vector<group_index> value_gens(vals.begin(), vals.end());
      std::vector<group_index> generated = subgroup_closure(g, value_gens);
      // Word values are conjugation-closed, so the generated subgroup is
      // already normal; taking the normal closure must be a no-op.
      std::vector<group_index> gens = generated;
      for (group_index x = 0; x < g.size(); ++x) {
        for (group_index m : generated) {
          gens.push_back(g.mul(g.mul(x, m), g.inv(x)));
        }
      }
      std::vector<group_index> closed = subgroup_closure(g, gens);
      if (closed != generated) {
        throw VerificationError(
            "verbal subgroup was not normal before closure");
      }
      return generated;
    }
  }
  throw VerificationError("unknown kernel functor tag");
}

}  // namespace

KernelFunctor KernelFunctor::p_group(unsigned p) {
  if (!is_prime(p)) {
    throw InputError(std::to_string(p) + " is not prime");
  }
  return {Tag::p_group, {p}, {}};
}

KernelFunctor KernelFunctor::pi_group(std::vector<unsigned> primes) {
  for (unsigned p : primes) {
    if (!is_prime(p)) {
      throw InputError(std::to_string(p) + " is not prime");
    }
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return {Tag::pi_group, std::move(primes), {}};
}

KernelFunctor KernelFunctor::verbal(std::vector<GroupWord> words) {
  if (words.empty()) {
    throw InputError("a verbal functor needs at least one word");
  }
  return {Tag::verbal, {}, std::move(words)};
}

std::string KernelFunctor::name() const {
  switch (tag) {
    case Tag::trivial:
      return "trivial";
    case Tag::all:
      return "all";
    case Tag::abelian:
      return "ab";
    case Tag::p_group:
      return "p:" + std::to_string(primes[0]);
    case Tag::pi_group: {
      std::string out = "pi:";
      for (std::size_t i = 0; i < primes.size(); ++i) {
        if (i > 0) {
          out += ',';
        }
        out += std::to_string(primes[i]);
      }
      return out;
    }
    case Tag::nilpotent:
      return "nil";
    case Tag::solvable:
      return "sol";
    case Tag::verbal: {
      std::string out = "verbal:";
      for (std::size_t i = 0; i < words.size(); ++i) {
        if (i > 0) {
          out += ';';
        }
        out += words[i].str();
      }
      return out;
    }
  }
  return "?";
}

bool satisfies_variety_directly(const FiniteGroup& g, const KernelFunctor& k) {
  switch (k.tag) {
    case KernelFunctor::Tag::trivial:
      return g.size() == 1;
    case KernelFunctor::Tag::all:
      return true;
    case KernelFunctor::Tag::abelian:
      for (group_index a = 0; a < g.size(); ++a) {
        for (group_index b = a + 1; b < g.size(); ++b) {
          if (g.mul(a, b) != g.mul(b, a)) {
            return false;
          }
        }
      }
      return true;
    case KernelFunctor::Tag::p_group:
    case KernelFunctor::Tag::pi_group: {
      for (unsigned p : prime_factors(g.size())) {
        if (std::find(k.primes.begin(), k.primes.end(), p)
            == k.primes.end()) {
          return false;
        }
      }
      return true;
    }
    case KernelFunctor::Tag::nilpotent:
      return series_residual(g, true).size() == 1;
    case KernelFunctor::Tag::solvable:
      return series_residual(g, false).size() == 1;
    case KernelFunctor::Tag::verbal: {
      for (const GroupWord& w : k.words) {
        const std::size_t arity = w.arity();
        std::vector<group_index> args(arity, 0);
        while (true) {
          if (evaluate_group_word(g, w, args) != g.identity) {
            return false;
          }
          std::size_t pos = 0;
          while (pos < arity && ++args[pos] == g.size()) {
            args[pos] = 0;
            ++pos;
          }
          if (pos == arity) {
            break;
          }
        }
      }
      return true;
    }
  }
  throw VerificationError("unknown kernel functor tag");
}

std::vector<group_index> kernel_members(const FiniteGroup& g,
                                        const KernelFunctor& k) {
  std::vector<group_index> members = raw_kernel_members(g, k);
  if (!is_normal_subgroup(g, members)) {
    throw VerificationError("computed kernel is not normal");
  }
  if (!satisfies_variety_directly(quotient_group(g, members), k)) {
    throw VerificationError("quotient by the computed kernel is not in H");
  }
  return members;
}

FiniteGroup kernel(const FiniteGroup& g, const KernelFunctor& k) {
  const std::vector<group_index> members = kernel_members(g, k);
  const std::size_t n = members.size();
  auto local_of = [&members](group_index x) {
    auto it = std::lower_bound(members.begin(), members.end(), x);
    return static_cast<group_index>(it - members.begin());
  };
  FiniteGroup sub;
  sub.elements.assign(members.begin(), members.end());
  sub.table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      sub.table[i * n + j] = local_of(g.mul(members[i], members[j]));
    }
  }
  sub.identity = local_of(g.identity);
  sub.inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    sub.inverse[i] = local_of(g.inv(members[i]));
  }
  return sub;
}

std::vector<group_index> kernel_minimality_oracle(const FiniteGroup& g,
                                                  const KernelFunctor& k,
                                                  std::size_t cap) {
  if (g.size() > cap) {
    throw CapExceededError("oracle cap " + std::to_string(cap)
                           + " exceeded by group of size "
                           + std::to_string(g.size()));
  }
  std::vector<std::vector<group_index>> candidates;
  for (const auto& h : all_subgroups(g)) {
    if (is_normal_subgroup(g, h)
        && satisfies_variety_directly(quotient_group(g, h), k)) {
      candidates.push_back(h);
    }
  }
  if (candidates.empty()) {
    throw VerificationError("no normal subgroup with quotient in H; "
                            "the whole group should always qualify");
  }
  auto smallest = std::min_element(
      candidates.begin(), candidates.end(),
      [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (const auto& other : candidates) {
    if (!std::includes(other.begin(), other.end(), smallest->begin(),
                       smallest->end())) {
      throw VerificationError(
          "normal subgroups with quotient in H have no minimum");
    }
  }
  return *smallest;
}

bool is_in_variety(const FiniteGroup& g, const KernelFunctor& k) {
  return kernel_members(g, k).size() == 1;
}

}  // namespace pointlike
