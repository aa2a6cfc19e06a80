#ifndef POINTLIKE_GREEN_HPP
#define POINTLIKE_GREEN_HPP

#include <cstdint>
#include <vector>

#include "pointlike/semigroup.hpp"

namespace pointlike {

using class_id = std::uint32_t;

/// The four Green class partitions of a finite semigroup together with the
/// partial orders on class identifiers. x <=_L y iff x is in S^I y, and
/// dually for R; J is the two-sided version and H the meet of L and R.
/// Class ids are assigned in order of first appearance by element index.
struct GreenData {
  std::vector<class_id> l_class, r_class, j_class, h_class;
  std::vector<std::vector<element>> l_classes, r_classes, j_classes, h_classes;
  // order[a][b] is true iff class a lies below or equals class b.
  std::vector<std::vector<bool>> l_order, r_order, j_order;
  std::vector<element> idempotents;
  /// H-classes containing an idempotent; these are the maximal subgroups.
  std::vector<class_id> group_h_classes;

  bool leq_l(element x, element y) const {
    return l_order[l_class[x]][l_class[y]];
  }
  bool leq_r(element x, element y) const {
    return r_order[r_class[x]][r_class[y]];
  }
  bool leq_j(element x, element y) const {
    return j_order[j_class[x]][j_class[y]];
  }
  bool leq_h(element x, element y) const { return leq_l(x, y) && leq_r(x, y); }

  bool equiv_l(element x, element y) const { return l_class[x] == l_class[y]; }
  bool equiv_r(element x, element y) const { return r_class[x] == r_class[y]; }
  bool equiv_j(element x, element y) const { return j_class[x] == j_class[y]; }
  bool equiv_h(element x, element y) const { return h_class[x] == h_class[y]; }

  bool lt_l(element x, element y) const {
    return leq_l(x, y) && !equiv_l(x, y);
  }
  bool lt_h(element x, element y) const {
    return leq_h(x, y) && !equiv_h(x, y);
  }
};

/// Computes all Green data. The preorders are taken over the full element
/// set; when the semigroup carries generators, the same relations are also
/// derived from the generator Cayley graphs and the two computations are
/// required to agree.
GreenData green(const FiniteSemigroup& s);

/// The J-minimum J-class, as a sorted element list.
std::vector<element> minimal_ideal(const FiniteSemigroup& s,
                                   const GreenData& g);

}  // namespace pointlike

#endif  // POINTLIKE_GREEN_HPP
