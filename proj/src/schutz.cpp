#include "pointlike/schutz.hpp"

#include <algorithm>
#include <map>

#include "pointlike/errors.hpp"

namespace pointlike {

std::vector<element> right_stabilizer(const FiniteSemigroup& s,
                                      const GreenData& g, class_id l_class) {
  if (l_class >= g.l_classes.size()) {
    throw IndexOutOfRangeError("no such L-class");
  }
  // Class member lists are ascending by construction.
  const std::vector<element>& members = g.l_classes[l_class];
  const element ident = static_cast<element>(s.size());
  std::vector<element> stab;
  for (element t = 0; t <= ident; ++t) {
    bool keeps = true;
    for (element x : members) {
      if (!std::binary_search(members.begin(), members.end(),
                              mul_si(s, x, t))) {
        keeps = false;
        break;
      }
    }
    if (keeps) {
      stab.push_back(t);
    }
  }
  return stab;
}

SchutzView schutzenberger_right(const FiniteSemigroup& s, const GreenData& g,
                                class_id h_class) {
  if (h_class >= g.h_classes.size()) {
    throw IndexOutOfRangeError("no such H-class");
  }
  SchutzView view;
  view.h_class = g.h_classes[h_class];
  std::sort(view.h_class.begin(), view.h_class.end());
  const std::vector<element>& h = view.h_class;
  const element ident = static_cast<element>(s.size());

  auto position_of = [&h](element x) {
    auto it = std::lower_bound(h.begin(), h.end(), x);
    return it != h.end() && *it == x
               ? static_cast<long>(it - h.begin())
               : -1;
  };

  // Stabilizer elements of the H-class induce permutations by right
  // multiplication; distinct permutations form the group.
  std::map<std::vector<group_index>, element> perm_label;
  for (element t = 0; t <= ident; ++t) {
    std::vector<group_index> perm(h.size());
    bool stabilizes = true;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const long pos = position_of(mul_si(s, h[i], t));
      if (pos < 0) {
        stabilizes = false;
        break;
      }
      perm[i] = static_cast<group_index>(pos);
    }
    if (stabilizes) {
      perm_label.emplace(perm, t);
    }
  }

  for (auto& [perm, label] : perm_label) {
    view.perms.push_back(perm);
    view.labels.push_back(label);
  }

  const std::size_t k = view.perms.size();
  auto index_of_perm = [&view](const std::vector<group_index>& p) {
    auto it = std::find(view.perms.begin(), view.perms.end(), p);
    if (it == view.perms.end()) {
      throw VerificationError("stabilizer permutations are not closed "
                              "under composition");
    }
    return static_cast<group_index>(it - view.perms.begin());
  };
  std::vector<group_index> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<group_index> comp(h.size());
      for (std::size_t q = 0; q < h.size(); ++q) {
        comp[q] = view.perms[j][view.perms[i][q]];
      }
      table[i * k + j] = index_of_perm(comp);
    }
  }
  view.group = group_from_table(k, std::move(table));

  if (view.group.size() != h.size()) {
    throw VerificationError("Schutzenberger group size differs from its "
                            "H-class size");
  }
  // Trivial point stabilizers: any permutation with a fixed point is the
  // identity.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t q = 0; q < h.size(); ++q) {
      if (view.perms[i][q] == q && i != view.group.identity) {
        throw VerificationError("non-identity permutation fixes a point");
      }
    }
  }
  return view;
}

FiniteGroup lift_group_onto(const FiniteSemigroup& p,
                            const std::vector<group_index>& phi,
                            const FiniteGroup& target,
                            std::size_t idempotent_choice) {
  if (phi.size() != p.size()) {
    throw InputError("phi must be defined on every element of p");
  }
  std::vector<bool> hit(target.size(), false);
  for (group_index v : phi) {
    if (v >= target.size()) {
      throw IndexOutOfRangeError("phi image out of range");
    }
    hit[v] = true;
  }
  if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
    throw NotSurjectiveError("phi does not map onto the target group");
  }
  for (element a = 0; a < p.size(); ++a) {
    for (element b = 0; b < p.size(); ++b) {
      if (phi[p.mul(a, b)] != target.mul(phi[a], phi[b])) {
        throw InputError("phi is not a homomorphism");
      }
    }
  }

  // Classical construction: the maximal subgroup at an idempotent of the
  // minimal ideal maps onto any group quotient.
  const GreenData g = green(p);
  std::vector<element> ideal = minimal_ideal(p, g);
  std::sort(ideal.begin(), ideal.end());
  std::vector<element> ideal_idempotents;
  for (element x : ideal) {
    if (p.is_idempotent(x)) {
      ideal_idempotents.push_back(x);
    }
  }
  if (ideal_idempotents.empty()) {
    throw VerificationError("minimal ideal without an idempotent");
  }
  const element e = ideal_idempotents[std::min(
      idempotent_choice, ideal_idempotents.size() - 1)];
  FiniteGroup h = maximal_subgroup(p, g, e);

  std::vector<bool> image(target.size(), false);
  for (element x : h.elements) {
    image[phi[x]] = true;
  }
  if (std::find(image.begin(), image.end(), false) != image.end()) {
    throw VerificationError("lifted subgroup fails to map onto the target");
  }
  return h;
}

bool is_H_element(const FiniteSemigroup& s, const GreenData& g, element x,
                  const KernelFunctor& k) {
  const SchutzView view = schutzenberger_right(s, g, g.h_class[x]);
  return is_in_variety(view.group, k);
}

}  // namespace pointlike
