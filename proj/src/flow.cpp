#include "pointlike/flow.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "pointlike/errors.hpp"
#include "pointlike/schutz.hpp"

namespace pointlike {

element SatSemigroup::index_of(std::uint64_t mask) const {
  auto it = std::lower_bound(masks.begin(), masks.end(), mask);
  if (it == masks.end() || *it != mask) {
    throw VerificationError("mask " + std::to_string(mask)
                            + " is not a member of the saturation");
  }
  return static_cast<element>(it - masks.begin());
}

SatSemigroup materialize_downclosure(const SaturationFamily& c,
                                     const KernelFunctor& k,
                                     std::size_t max_universe) {
  if (c.universe > max_universe) {
    throw CapExceededError("verifier cap |T| <= "
                           + std::to_string(max_universe)
                           + " exceeded by universe of size "
                           + std::to_string(c.universe));
  }
  SatSemigroup s;
  s.base = c.base;
  s.universe = c.universe;
  const std::uint64_t full = (std::uint64_t{1} << c.universe) - 1;
  for (std::uint64_t m = 1; m <= full; ++m) {
    for (std::uint64_t member : c.maximal) {
      if ((m & ~member) == 0) {
        s.masks.push_back(m);
        break;
      }
    }
  }

  const std::size_t n = s.masks.size();
  std::vector<element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SubsetElt p = power_product(
          c.base, SubsetElt{s.masks[i], s.universe},
          SubsetElt{s.masks[j], s.universe});
      table[i * n + j] = s.index_of(p.mask);
    }
  }
  s.sgp = FiniteSemigroup::unchecked(n, std::move(table));
  s.green_data = green(s.sgp);

  // H-element flags, constant per H-class and checked constant per L-class.
  std::vector<int> h_flag_of_class(s.green_data.h_classes.size(), -1);
  s.h_element.assign(n, false);
  for (element x = 0; x < n; ++x) {
    const class_id h = s.green_data.h_class[x];
    if (h_flag_of_class[h] < 0) {
      h_flag_of_class[h] =
          is_H_element(s.sgp, s.green_data, x, k) ? 1 : 0;
    }
    s.h_element[x] = h_flag_of_class[h] == 1;
  }
  for (const auto& l_class : s.green_data.l_classes) {
    for (element x : l_class) {
      if (s.h_element[x] != s.h_element[l_class.front()]) {
        throw VerificationError(
            "H-element flag is not constant along an L-class");
      }
    }
  }

  s.singleton_index.resize(c.universe);
  for (element t = 0; t < c.universe; ++t) {
    s.singleton_index[t] = s.index_of(std::uint64_t{1} << t);
  }
  return s;
}

namespace {

struct PreBlowup {
  std::vector<element> map;
  std::vector<element> multiplier;  // per L-class id; |S| denotes I
};

// Multiplier-aware composition f then g: the composite multiplier of an
// L-class is m_L * m'_{L'}, where L' is the L-class of the image of L
// (well-defined since L-equivalent members have L-equivalent images).
PreBlowup compose(const SatSemigroup& s, const PreBlowup& f,
                  const PreBlowup& g) {
  PreBlowup h;
  h.map.resize(s.size());
  for (element x = 0; x < s.size(); ++x) {
    h.map[x] = g.map[f.map[x]];
  }
  h.multiplier.resize(f.multiplier.size());
  for (class_id lc = 0; lc < f.multiplier.size(); ++lc) {
    const element rep = s.green_data.l_classes[lc].front();
    const class_id image_class = s.green_data.l_class[f.map[rep]];
    h.multiplier[lc] =
        mul_si(s.sgp, f.multiplier[lc], g.multiplier[image_class]);
  }
  return h;
}

bool map_idempotent(const std::vector<element>& map) {
  for (element x = 0; x < map.size(); ++x) {
    if (map[map[x]] != map[x]) {
      return false;
    }
  }
  return true;
}

}  // namespace

BlowupOp build_blowup(const SatSemigroup& s, const KernelFunctor& k,
                      std::size_t idempotent_choice) {
  const element ident = static_cast<element>(s.size());
  PreBlowup b0;
  b0.multiplier.assign(s.green_data.l_classes.size(), ident);

  for (class_id lc = 0; lc < s.green_data.l_classes.size(); ++lc) {
    const std::vector<element>& l_members = s.green_data.l_classes[lc];
    if (s.h_element[l_members.front()]) {
      continue;  // multiplier stays I
    }
    // Lift a subgroup of the right stabilizer onto the Schutzenberger
    // group of an H-class inside L, then take the union of its H-kernel.
    const class_id hc = s.green_data.h_class[l_members.front()];
    const SchutzView gamma = schutzenberger_right(s.sgp, s.green_data, hc);
    const std::vector<element> stab =
        right_stabilizer(s.sgp, s.green_data, lc);

    const std::size_t ns = stab.size();
    std::vector<element> stab_table(ns * ns);
    for (std::size_t i = 0; i < ns; ++i) {
      for (std::size_t j = 0; j < ns; ++j) {
        const element p = mul_si(s.sgp, stab[i], stab[j]);
        auto it = std::lower_bound(stab.begin(), stab.end(), p);
        if (it == stab.end() || *it != p) {
          throw VerificationError("right stabilizer is not a submonoid");
        }
        stab_table[i * ns + j] = static_cast<element>(it - stab.begin());
      }
    }
    const FiniteSemigroup stab_sgp =
        FiniteSemigroup::unchecked(ns, std::move(stab_table));

    // The action homomorphism onto the Schutzenberger group.
    const std::vector<element>& h = gamma.h_class;
    std::vector<group_index> phi(ns);
    for (std::size_t i = 0; i < ns; ++i) {
      std::vector<group_index> perm(h.size());
      for (std::size_t q = 0; q < h.size(); ++q) {
        const element image = mul_si(s.sgp, h[q], stab[i]);
        auto it = std::lower_bound(h.begin(), h.end(), image);
        if (it == h.end() || *it != image) {
          throw VerificationError(
              "an L-class stabilizer does not stabilize its H-classes");
        }
        perm[q] = static_cast<group_index>(it - h.begin());
      }
      auto pit = std::find(gamma.perms.begin(), gamma.perms.end(), perm);
      if (pit == gamma.perms.end()) {
        throw VerificationError("stabilizer permutation missing from the "
                                "Schutzenberger group");
      }
      phi[i] = static_cast<group_index>(pit - gamma.perms.begin());
    }

    const FiniteGroup lifted =
        lift_group_onto(stab_sgp, phi, gamma.group, idempotent_choice);
    if (lifted.size() == 1) {
      throw VerificationError("lifted subgroup of a non-H L-class "
                              "is trivial");
    }
    std::uint64_t union_mask = 0;
    for (group_index m : kernel_members(lifted, k)) {
      const element si_index = stab[lifted.elements[m]];
      if (si_index == ident) {
        throw VerificationError("kernel of a lifted subgroup contains I");
      }
      union_mask |= s.masks[si_index];
    }
    b0.multiplier[lc] = s.index_of(union_mask);
  }

  b0.map.resize(s.size());
  for (element x = 0; x < s.size(); ++x) {
    b0.map[x] = mul_si(s.sgp, x, b0.multiplier[s.green_data.l_class[x]]);
  }

  // Idempotent power under composition.
  PreBlowup b = b0;
  std::size_t guard = 0;
  while (!map_idempotent(b.map)) {
    b = compose(s, b, b0);
    if (++guard > s.size() + 1) {
      throw VerificationError("pre-blowup composition fails to stabilize");
    }
  }

  BlowupOp out{std::move(b.map), std::move(b.multiplier)};
  check_blowup_axioms(s, out);
  return out;
}

void check_blowup_axioms(const SatSemigroup& s, const BlowupOp& b) {
  for (element x = 0; x < s.size(); ++x) {
    const element image = b.map[x];
    const element by_mult =
        mul_si(s.sgp, x, b.multiplier[s.green_data.l_class[x]]);
    if (image != by_mult) {
      throw AxiomViolationError("(i)", "sb != s*m_L at member "
                                            + std::to_string(x));
    }
    if (s.h_element[x]) {
      if (image != x) {
        throw AxiomViolationError("(ii)", "H-element " + std::to_string(x)
                                              + " moved");
      }
    } else {
      if (!s.green_data.lt_h(image, x)) {
        throw AxiomViolationError(
            "(ii)", "non-H-element " + std::to_string(x)
                        + " not sent strictly H-down");
      }
    }
    if ((s.masks[x] & ~s.masks[image]) != 0) {
      throw AxiomViolationError("(iii)", "member " + std::to_string(x)
                                             + " not contained in its image");
    }
    if (b.map[image] != image) {
      throw AxiomViolationError("(iv)", "b not idempotent at member "
                                            + std::to_string(x));
    }
  }
}

bool is_l_chain(const SatSemigroup& s, const LChain& q) {
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    if (!s.green_data.leq_l(q[i + 1], q[i])) {
      return false;
    }
  }
  return true;
}

bool is_strict_l_chain(const SatSemigroup& s, const LChain& q) {
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    if (!s.green_data.lt_l(q[i + 1], q[i])) {
      return false;
    }
  }
  return true;
}

LChain rho(const SatSemigroup& s, const LChain& q) {
  if (!is_l_chain(s, q)) {
    throw NotAChainError("rho applied to a word that is not an L-chain");
  }
  LChain out;
  std::size_t i = 0;
  while (i < q.size()) {
    std::size_t j = i;
    while (j + 1 < q.size()
           && s.green_data.equiv_l(q[j + 1], q[i])) {
      ++j;
    }
    out.push_back(q[j]);  // last letter of the run survives
    i = j + 1;
  }
  return out;
}

LChain delta(const SatSemigroup& s, const LChain& q, element m) {
  LChain out(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    out[i] = mul_si(s.sgp, q[i], m);
  }
  return out;
}

LChain big_b(const SatSemigroup& s, const BlowupOp& b, const LChain& q) {
  if (q.empty()) {
    return {};
  }
  const element first = q.front();
  LChain rest(q.begin() + 1, q.end());
  const element m = b.multiplier[s.green_data.l_class[first]];
  LChain mapped = big_b(s, b, delta(s, rest, m));
  LChain out;
  out.reserve(q.size());
  out.push_back(b.map[first]);
  out.insert(out.end(), mapped.begin(), mapped.end());
  return out;
}

LChain tau_bar(const SatSemigroup& s, const BlowupOp& b, const LChain& q,
               element t_member) {
  LChain moved = delta(s, q, t_member);
  LChain extended;
  extended.reserve(moved.size() + 1);
  extended.push_back(t_member);
  extended.insert(extended.end(), moved.begin(), moved.end());
  return big_b(s, b, extended);
}

LChain tau_step(const SatSemigroup& s, const BlowupOp& b, const LChain& q,
                element t) {
  return rho(s, tau_bar(s, b, q, s.singleton_index[t]));
}

std::optional<std::uint64_t> FlowAutomaton::flow_mask(
    const SatSemigroup& s, std::uint32_t state) const {
  if (states[state].empty()) {
    return std::nullopt;
  }
  return s.masks[states[state].back()];
}

FlowAutomaton build_automaton_and_flow(const SatSemigroup& s,
                                       const BlowupOp& b,
                                       std::size_t max_states) {
  FlowAutomaton a;
  std::map<LChain, std::uint32_t> index;
  a.states.push_back({});
  index.emplace(LChain{}, 0);
  for (std::size_t next = 0; next < a.states.size(); ++next) {
    const LChain q = a.states[next];
    std::vector<std::uint32_t> row(s.universe);
    for (element t = 0; t < s.universe; ++t) {
      LChain image = tau_step(s, b, q, t);
      auto [it, inserted] =
          index.emplace(image, static_cast<std::uint32_t>(a.states.size()));
      if (inserted) {
        if (a.states.size() >= max_states) {
          throw StateExplosionError("reachable state cap "
                                    + std::to_string(max_states)
                                    + " exceeded");
        }
        a.states.push_back(std::move(image));
      }
      row[t] = it->second;
    }
    a.delta.push_back(std::move(row));
  }
  return a;
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

const CheckResult& VerifyReport::check(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) {
      return c;
    }
  }
  throw Error("no check named " + name);
}

namespace {

// Deterministic pool of L-chains over S: everything short, sampled walks
// for the longer lengths when full enumeration would be too large.
std::vector<LChain> chain_pool(const SatSemigroup& s,
                               const VerifyOptions& opts) {
  const std::size_t n = s.size();
  std::vector<std::vector<element>> below(n);
  for (element x = 0; x < n; ++x) {
    for (element y = 0; y < n; ++y) {
      if (s.green_data.leq_l(y, x)) {
        below[x].push_back(y);
      }
    }
  }
  std::vector<LChain> pool;
  pool.push_back({});
  for (element x = 0; x < n; ++x) {
    pool.push_back({x});
  }
  std::size_t pairs = 0;
  for (element x = 0; x < n; ++x) {
    pairs += below[x].size();
  }
  if (pairs <= opts.chain_enum_cap) {
    for (element x = 0; x < n; ++x) {
      for (element y : below[x]) {
        pool.push_back({x, y});
      }
    }
  }
  std::mt19937 rng(0x5eed);
  for (std::size_t len = pairs <= opts.chain_enum_cap ? 3 : 2; len <= 4;
       ++len) {
    for (std::size_t i = 0; i < opts.chain_samples_per_length; ++i) {
      LChain q;
      element cur = static_cast<element>(rng() % n);
      q.push_back(cur);
      bool ok = true;
      for (std::size_t j = 1; j < len; ++j) {
        if (below[cur].empty()) {
          ok = false;
          break;
        }
        cur = below[cur][rng() % below[cur].size()];
        q.push_back(cur);
      }
      if (ok) {
        pool.push_back(std::move(q));
      }
    }
  }
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  return pool;
}

std::string chain_str(const LChain& q) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i > 0) {
      out << ',';
    }
    out << q[i];
  }
  out << ')';
  return out.str();
}

// Capped closure of the transition maps under composition.
FiniteSemigroup transition_semigroup(const FlowAutomaton& a,
                                     std::size_t universe, std::size_t cap) {
  const std::size_t deg = a.states.size();
  std::vector<std::vector<element>> gens(universe,
                                         std::vector<element>(deg));
  for (std::size_t q = 0; q < deg; ++q) {
    for (std::size_t t = 0; t < universe; ++t) {
      gens[t][q] = a.delta[q][t];
    }
  }
  std::map<std::vector<element>, element> index;
  std::vector<std::vector<element>> elems;
  for (const auto& g : gens) {
    if (index.emplace(g, static_cast<element>(elems.size())).second) {
      elems.push_back(g);
    }
  }
  for (std::size_t next = 0; next < elems.size(); ++next) {
    for (const auto& g : gens) {
      std::vector<element> comp(deg);
      for (std::size_t q = 0; q < deg; ++q) {
        comp[q] = g[elems[next][q]];
      }
      if (index.emplace(comp, static_cast<element>(elems.size())).second) {
        if (elems.size() >= cap) {
          throw StateExplosionError("transition semigroup cap "
                                    + std::to_string(cap) + " exceeded");
        }
        elems.push_back(std::move(comp));
      }
    }
  }
  const std::size_t n = elems.size();
  std::vector<element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<element> comp(deg);
      for (std::size_t q = 0; q < deg; ++q) {
        comp[q] = elems[j][elems[i][q]];
      }
      table[i * n + j] = index.at(comp);
    }
  }
  return FiniteSemigroup::unchecked(n, std::move(table));
}

}  // namespace

VerifyReport verify_all(const KernelFunctor& k, const SaturationFamily& c,
                        const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;

  const SatSemigroup s = materialize_downclosure(c, k, opts.max_universe);
  report.sat_members = s.size();

  BlowupOp b;
  try {
    b = build_blowup(s, k);
  } catch (const AxiomViolationError& e) {
    // Never expected; reported instead of propagated so the caller sees
    // the witness in the same shape as every other failure.
    report.checks.push_back({"BLOWUP", false, s.size(), e.what()});
    for (const char* name :
         {"FLOW", "HBAR", "COMPLETE", "RHO-RESPECT", "ZEIGER"}) {
      report.checks.push_back(
          {name, false, 0, "not run: blowup construction failed"});
    }
    report.wall_seconds = std::chrono::duration<double>(
                              std::chrono::steady_clock::now() - start)
                              .count();
    return report;
  }
  report.checks.push_back({"BLOWUP", true, s.size(), ""});

  const FlowAutomaton a = build_automaton_and_flow(s, b, opts.max_states);
  report.automaton_states = a.states.size();

  // FLOW: (q Phi) t is contained in (q tau_t) Phi for every state and
  // letter.
  {
    CheckResult r{"FLOW", true, 0, ""};
    for (std::uint32_t q = 0; q < a.states.size() && r.passed; ++q) {
      for (element t = 0; t < s.universe; ++t) {
        ++r.cases;
        const auto source = a.flow_mask(s, q);
        const std::uint64_t moved =
            source ? power_product(c.base, SubsetElt{*source, s.universe},
                                   SubsetElt{std::uint64_t{1} << t,
                                             s.universe})
                         .mask
                   : (std::uint64_t{1} << t);
        const auto target = a.flow_mask(s, a.delta[q][t]);
        if (!target || (moved & ~*target) != 0) {
          r.passed = false;
          r.detail = "state " + chain_str(a.states[q]) + " letter "
                     + std::to_string(t);
          break;
        }
      }
    }
    report.checks.push_back(std::move(r));
  }

  // HBAR: every maximal subgroup of the reachable transition semigroup
  // lies in H.
  {
    CheckResult r{"HBAR", true, 0, ""};
    const FiniteSemigroup ts =
        transition_semigroup(a, s.universe, opts.max_transition_elements);
    report.transition_semigroup_size = ts.size();
    const GreenData tg = green(ts);
    for (element e : ts.idempotents()) {
      ++r.cases;
      const FiniteGroup grp = maximal_subgroup(ts, tg, e);
      if (!is_in_variety(grp, k)) {
        r.passed = false;
        r.detail = "maximal subgroup of size " + std::to_string(grp.size())
                   + " at idempotent " + std::to_string(e)
                   + " falls outside H";
        break;
      }
    }
    report.checks.push_back(std::move(r));
  }

  // COMPLETE: every maximal member of C is dominated by some flow value,
  // and every flow value is a member of S.
  {
    CheckResult r{"COMPLETE", true, 0, ""};
    for (std::uint64_t m : c.maximal) {
      ++r.cases;
      bool covered = false;
      for (std::uint32_t q = 1; q < a.states.size(); ++q) {
        const auto flow = a.flow_mask(s, q);
        if (flow && (m & ~*flow) == 0) {
          covered = true;
          break;
        }
      }
      if (!covered) {
        r.passed = false;
        r.detail = "maximal member mask " + std::to_string(m)
                   + " not dominated by any flow value";
        break;
      }
    }
    report.checks.push_back(std::move(r));
  }

  const std::vector<LChain> pool = chain_pool(s, opts);

  // RHO-RESPECT: Delta_s, B and tau-bar composed with rho commute with a
  // leading rho.
  {
    CheckResult r{"RHO-RESPECT", true, 0, ""};
    // Up to eight multipliers spread over S^I, always including I.
    std::vector<element> multipliers;
    const std::size_t stride = std::max<std::size_t>(1, s.size() / 7);
    for (std::size_t m = 0; m < s.size(); m += stride) {
      multipliers.push_back(static_cast<element>(m));
    }
    multipliers.push_back(static_cast<element>(s.size()));
    for (const LChain& q : pool) {
      if (!r.passed) {
        break;
      }
      const LChain reduced = rho(s, q);
      auto check_op = [&](auto&& op, const std::string& label) {
        ++r.cases;
        if (rho(s, op(reduced)) != rho(s, op(q))) {
          r.passed = false;
          r.detail = label + " fails to respect rho at " + chain_str(q);
        }
      };
      for (element m : multipliers) {
        check_op([&](const LChain& x) { return delta(s, x, m); },
                 "Delta_" + std::to_string(m));
        if (!r.passed) {
          break;
        }
      }
      if (!r.passed) {
        break;
      }
      check_op([&](const LChain& x) { return big_b(s, b, x); }, "B");
      for (element t = 0; t < s.universe && r.passed; ++t) {
        check_op(
            [&](const LChain& x) {
              return tau_bar(s, b, x, s.singleton_index[t]);
            },
            "tau-bar_" + std::to_string(t));
      }
    }
    report.checks.push_back(std::move(r));
  }

  // ZEIGER: through B (and the tau-bar synchronous parts), if the
  // next-to-last coordinate is unchanged and the last stays R-equivalent,
  // the last coordinate is unchanged.
  {
    CheckResult r{"ZEIGER", true, 0, ""};
    auto check_zeiger = [&](const LChain& q, const LChain& image,
                            const std::string& label) {
      if (q.size() < 2 || image.size() != q.size()) {
        return;
      }
      const std::size_t last = q.size() - 1;
      if (q[last - 1] == image[last - 1]
          && s.green_data.equiv_r(q[last], image[last])) {
        ++r.cases;
        if (q[last] != image[last]) {
          r.passed = false;
          r.detail = label + " breaks the Zeiger property at "
                     + chain_str(q);
        }
      }
    };
    for (const LChain& q : pool) {
      if (!r.passed) {
        break;
      }
      check_zeiger(q, big_b(s, b, q), "B");
      for (element t = 0; t < s.universe; ++t) {
        // Synchronous part of tau-bar_t: Delta_t Delta_{m_{L_t}} B.
        const element tm = s.singleton_index[t];
        LChain moved = delta(s, q, tm);
        moved = delta(s, moved,
                      b.multiplier[s.green_data.l_class[tm]]);
        check_zeiger(q, big_b(s, b, moved), "T_" + std::to_string(t));
        if (!r.passed) {
          break;
        }
      }
    }
    report.checks.push_back(std::move(r));
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace pointlike
