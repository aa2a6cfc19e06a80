#include "pointlike/group.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include "pointlike/errors.hpp"

namespace pointlike {

group_index FiniteGroup::local_of(element parent_elt) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), parent_elt);
  if (it == elements.end() || *it != parent_elt) {
    throw VerificationError("element " + std::to_string(parent_elt)
                            + " is not a member of this group");
  }
  return static_cast<group_index>(it - elements.begin());
}

bool FiniteGroup::contains(element parent_elt) const {
  return std::binary_search(elements.begin(), elements.end(), parent_elt);
}

namespace {

// Fills identity and inverse from a closed table, checking the axioms.
void finish_group(FiniteGroup& g) {
  const std::size_t n = g.size();
  // Each row and column must be a permutation (cancellativity); a finite
  // cancellative semigroup is a group.
  for (group_index a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (group_index b = 0; b < n; ++b) {
      row[g.mul(a, b)] = true;
      col[g.mul(b, a)] = true;
    }
    if (std::find(row.begin(), row.end(), false) != row.end()
        || std::find(col.begin(), col.end(), false) != col.end()) {
      throw VerificationError("table is not cancellative; not a group");
    }
  }
  bool found = false;
  for (group_index e = 0; e < n; ++e) {
    bool ok = true;
    for (group_index a = 0; a < n; ++a) {
      if (g.mul(e, a) != a || g.mul(a, e) != a) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g.identity = e;
      found = true;
      break;
    }
  }
  if (!found) {
    throw VerificationError("group table has no identity");
  }
  g.inverse.assign(n, 0);
  for (group_index a = 0; a < n; ++a) {
    bool got = false;
    for (group_index b = 0; b < n; ++b) {
      if (g.mul(a, b) == g.identity && g.mul(b, a) == g.identity) {
        g.inverse[a] = b;
        got = true;
        break;
      }
    }
    if (!got) {
      throw VerificationError("group table has a non-invertible element");
    }
  }
}

}  // namespace

FiniteGroup group_from_table(std::size_t n, std::vector<group_index> table) {
  if (n == 0 || table.size() != n * n) {
    throw InputError("bad group table dimensions");
  }
  for (group_index v : table) {
    if (v >= n) {
      throw IndexOutOfRangeError("group table entry out of range");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (table[table[i * n + j] * n + k] != table[i * n + table[j * n + k]]) {
          throw NonAssociativeError(i, j, k);
        }
      }
    }
  }
  FiniteGroup g;
  g.elements.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.elements[i] = static_cast<element>(i);
  }
  g.table = std::move(table);
  finish_group(g);
  return g;
}

FiniteGroup maximal_subgroup(const FiniteSemigroup& s, const GreenData& g,
                             element e) {
  if (!s.is_idempotent(e)) {
    throw NotIdempotentError("element " + std::to_string(e)
                             + " is not idempotent");
  }
  std::vector<element> members = g.h_classes[g.h_class[e]];
  std::sort(members.begin(), members.end());
  const std::size_t n = members.size();
  auto local_of = [&members](element x) {
    auto it = std::lower_bound(members.begin(), members.end(), x);
    if (it == members.end() || *it != x) {
      throw VerificationError("group H-class is not closed under product");
    }
    return static_cast<group_index>(it - members.begin());
  };
  FiniteGroup grp;
  grp.elements = members;
  grp.table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      grp.table[i * n + j] = local_of(s.mul(members[i], members[j]));
    }
  }
  finish_group(grp);
  if (grp.elements[grp.identity] != e) {
    throw VerificationError("identity of a maximal subgroup is not its "
                            "defining idempotent");
  }
  return grp;
}

std::vector<group_index> subgroup_closure(
    const FiniteGroup& g, const std::vector<group_index>& gens) {
  // In a finite group the subsemigroup generated by a set is already a
  // subgroup, so product closure suffices.
  std::set<group_index> seen(gens.begin(), gens.end());
  seen.insert(g.identity);
  std::vector<group_index> queue(seen.begin(), seen.end());
  for (std::size_t next = 0; next < queue.size(); ++next) {
    for (group_index b : std::vector<group_index>(seen.begin(), seen.end())) {
      const group_index p = g.mul(queue[next], b);
      if (seen.insert(p).second) {
        queue.push_back(p);
      }
      const group_index q = g.mul(b, queue[next]);
      if (seen.insert(q).second) {
        queue.push_back(q);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_normal_subgroup(const FiniteGroup& g,
                        const std::vector<group_index>& members) {
  for (group_index x = 0; x < g.size(); ++x) {
    for (group_index m : members) {
      const group_index conj = g.mul(g.mul(x, m), g.inv(x));
      if (!std::binary_search(members.begin(), members.end(), conj)) {
        return false;
      }
    }
  }
  return true;
}

FiniteGroup quotient_group(const FiniteGroup& g,
                           const std::vector<group_index>& normal_members) {
  const std::size_t n = g.size();
  // Coset of x, canonicalized as the least member of xN.
  std::vector<group_index> rep(n);
  for (group_index x = 0; x < n; ++x) {
    group_index least = x;
    for (group_index m : normal_members) {
      least = std::min(least, g.mul(x, m));
    }
    rep[x] = least;
  }
  std::vector<group_index> reps;
  for (group_index x = 0; x < n; ++x) {
    if (rep[x] == x) {
      reps.push_back(x);
    }
  }
  const std::size_t k = reps.size();
  auto local_of = [&reps](group_index r) {
    auto it = std::lower_bound(reps.begin(), reps.end(), r);
    return static_cast<group_index>(it - reps.begin());
  };
  FiniteGroup q;
  q.elements.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    q.elements[i] = static_cast<element>(reps[i]);
  }
  q.table.resize(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      q.table[i * k + j] = local_of(rep[g.mul(reps[i], reps[j])]);
    }
  }
  finish_group(q);
  return q;
}

std::vector<std::vector<group_index>> all_subgroups(const FiniteGroup& g) {
  std::set<std::vector<group_index>> found;
  found.insert(subgroup_closure(g, {}));
  std::vector<std::vector<group_index>> queue(found.begin(), found.end());
  for (std::size_t next = 0; next < queue.size(); ++next) {
    const std::vector<group_index> h = queue[next];
    for (group_index x = 0; x < g.size(); ++x) {
      if (std::binary_search(h.begin(), h.end(), x)) {
        continue;
      }
      std::vector<group_index> gens = h;
      gens.push_back(x);
      std::vector<group_index> bigger = subgroup_closure(g, gens);
      if (found.insert(bigger).second) {
        queue.push_back(std::move(bigger));
      }
    }
  }
  return {found.begin(), found.end()};
}

std::size_t GroupWord::arity() const {
  std::size_t a = 0;
  for (const auto& [letter, sign] : factors) {
    (void) sign;
    a = std::max<std::size_t>(a, letter + 1);
  }
  return a;
}

std::string GroupWord::str() const {
  std::string out;
  for (const auto& [letter, sign] : factors) {
    if (!out.empty()) {
      out += ' ';
    }
    out += 'x' + std::to_string(letter + 1);
    if (sign < 0) {
      out += '\'';
    }
  }
  return out;
}

GroupWord GroupWord::x() { return GroupWord{{{0, 1}}}; }

GroupWord GroupWord::commutator() {
  return GroupWord{{{0, 1}, {1, 1}, {0, -1}, {1, -1}}};
}

GroupWord GroupWord::parse(const std::string& line) {
  GroupWord w;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    if (tok.size() >= 2 && tok.back() == '\'') {
      sign = -1;
      tok.pop_back();
    }
    if (tok.size() < 2 || tok[0] != 'x') {
      throw InputError("bad word letter \"" + tok + "\"");
    }
    std::size_t idx = 0;
    try {
      idx = std::stoul(tok.substr(1));
    } catch (const std::exception&) {
      throw InputError("bad word letter \"" + tok + "\"");
    }
    if (idx == 0) {
      throw InputError("word letters are numbered from x1");
    }
    w.factors.emplace_back(static_cast<std::uint32_t>(idx - 1), sign);
  }
  if (w.factors.empty()) {
    throw InputError("empty group word");
  }
  return w;
}

std::vector<GroupWord> read_word_file(std::istream& in) {
  std::vector<GroupWord> words;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    words.push_back(GroupWord::parse(line));
  }
  if (words.empty()) {
    throw InputError("word file contains no words");
  }
  return words;
}

group_index evaluate_group_word(const FiniteGroup& g, const GroupWord& w,
                                const std::vector<group_index>& args) {
  if (args.size() < w.arity()) {
    throw ArityMismatchError("word needs " + std::to_string(w.arity())
                             + " arguments, got "
                             + std::to_string(args.size()));
  }
  group_index acc = g.identity;
  for (const auto& [letter, sign] : w.factors) {
    const group_index v =
        sign > 0 ? args[letter] : g.inv(args[letter]);
    acc = g.mul(acc, v);
  }
  return acc;
}

}  // namespace pointlike
