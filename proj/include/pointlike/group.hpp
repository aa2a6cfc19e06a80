#ifndef POINTLIKE_GROUP_HPP
#define POINTLIKE_GROUP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pointlike/green.hpp"
#include "pointlike/semigroup.hpp"

namespace pointlike {

/// Index local to one group, 0..size-1.
using group_index = std::uint32_t;

/// A finite group. `elements` names the members inside whatever parent
/// structure the group was extracted from (a host semigroup, or a larger
/// group); the table, identity and inverses use local indices.
struct FiniteGroup {
  std::vector<element> elements;
  std::vector<group_index> table;
  group_index identity = 0;
  std::vector<group_index> inverse;

  std::size_t size() const { return elements.size(); }
  group_index mul(group_index a, group_index b) const {
    return table[a * elements.size() + b];
  }
  group_index inv(group_index a) const { return inverse[a]; }

  /// Local index of a parent element; throws if absent.
  group_index local_of(element parent_elt) const;
  bool contains(element parent_elt) const;
};

/// Builds a group from a standalone table (elements named 0..n-1) and
/// validates the group axioms.
FiniteGroup group_from_table(std::size_t n, std::vector<group_index> table);

/// The maximal subgroup of s at the idempotent e: the H-class of e with
/// its inherited multiplication, identity e, and inverse table. Throws
/// NotIdempotentError if e is not idempotent.
FiniteGroup maximal_subgroup(const FiniteSemigroup& s, const GreenData& g,
                             element e);

/// Closure of a generating set (given as local indices of g) under the
/// group multiplication. Returns sorted local indices; always contains the
/// identity.
std::vector<group_index> subgroup_closure(const FiniteGroup& g,
                                          const std::vector<group_index>& gens);

/// Whether a subgroup (sorted local indices) is closed under conjugation.
bool is_normal_subgroup(const FiniteGroup& g,
                        const std::vector<group_index>& members);

/// The quotient of g by a normal subgroup. Each coset is represented by
/// its least local index; `elements` of the result are those
/// representatives as indices into g.
FiniteGroup quotient_group(const FiniteGroup& g,
                           const std::vector<group_index>& normal_members);

/// Every subgroup of g, as sorted local index sets, found by growing the
/// subgroup lattice from the trivial subgroup. Exponential in general;
/// intended for small groups only.
std::vector<std::vector<group_index>> all_subgroups(const FiniteGroup& g);

/// A word in free-group letters: factors (letter, exponent) with exponent
/// +1 or -1. Powers x^(omega-1) of group elements are their inverses, so
/// -1 doubles as the omega-minus-one exponent.
struct GroupWord {
  std::vector<std::pair<std::uint32_t, int>> factors;

  std::size_t arity() const;
  std::string str() const;

  /// The one-letter word x.
  static GroupWord x();
  /// The commutator [x, y] = x y x' y'.
  static GroupWord commutator();
  /// Parses the textual form: letters x1..xk, inverse marked by a trailing
  /// apostrophe, e.g. "x1 x2 x1' x2'".
  static GroupWord parse(const std::string& line);
};

/// Reads a verbal word file: one word per line, '#' comments allowed.
std::vector<GroupWord> read_word_file(std::istream& in);

/// Evaluates w at a tuple of local indices of g, resolving inverses via
/// the inverse table. Throws ArityMismatchError if the tuple is too short.
group_index evaluate_group_word(const FiniteGroup& g, const GroupWord& w,
                                const std::vector<group_index>& args);

}  // namespace pointlike

#endif  // POINTLIKE_GROUP_HPP
