#include "pointlike/green.hpp"

#include <algorithm>

#include "pointlike/errors.hpp"

namespace pointlike {

namespace {

// Square bit matrix; bit (x, y) set means x lies in the ideal of y.
class BitMatrix {
 public:
  explicit BitMatrix(std::size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n * words_, 0) {}

  void set(std::size_t x, std::size_t y) {
    bits_[y * words_ + x / 64] |= std::uint64_t{1} << (x % 64);
  }
  bool get(std::size_t x, std::size_t y) const {
    return (bits_[y * words_ + x / 64] >> (x % 64)) & 1;
  }
  // Column OR: ideal(y) |= ideal(z).
  void or_into(std::size_t y, std::size_t z) {
    for (std::size_t w = 0; w < words_; ++w) {
      bits_[y * words_ + w] |= bits_[z * words_ + w];
    }
  }
  bool columns_equal(const BitMatrix& other) const {
    return bits_ == other.bits_;
  }

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

// ideal_r(y) = {y} union yS, computed over all of S.
BitMatrix right_ideals_full(const FiniteSemigroup& s) {
  const std::size_t n = s.size();
  BitMatrix m(n);
  for (element y = 0; y < n; ++y) {
    m.set(y, y);
    for (element t = 0; t < n; ++t) {
      m.set(s.mul(y, t), y);
    }
  }
  return m;
}

BitMatrix left_ideals_full(const FiniteSemigroup& s) {
  const std::size_t n = s.size();
  BitMatrix m(n);
  for (element y = 0; y < n; ++y) {
    m.set(y, y);
    for (element t = 0; t < n; ++t) {
      m.set(s.mul(t, y), y);
    }
  }
  return m;
}

// ideal_j(y) = {y} union Sy union yS union SyS.
BitMatrix two_sided_ideals_full(const FiniteSemigroup& s) {
  const std::size_t n = s.size();
  BitMatrix m(n);
  for (element y = 0; y < n; ++y) {
    m.set(y, y);
    for (element t = 0; t < n; ++t) {
      m.set(s.mul(y, t), y);
      m.set(s.mul(t, y), y);
      const element ty = s.mul(t, y);
      for (element u = 0; u < n; ++u) {
        m.set(s.mul(ty, u), y);
      }
    }
  }
  return m;
}

// Reachability closure from each y under the listed successor maps;
// used for the generator-based cross-check.
BitMatrix ideals_by_reachability(
    const FiniteSemigroup& s,
    const std::vector<element>& gens, bool right, bool left) {
  const std::size_t n = s.size();
  BitMatrix m(n);
  std::vector<element> stack;
  std::vector<bool> seen(n);
  for (element y = 0; y < n; ++y) {
    std::fill(seen.begin(), seen.end(), false);
    stack.assign(1, y);
    seen[y] = true;
    while (!stack.empty()) {
      const element u = stack.back();
      stack.pop_back();
      m.set(u, y);
      for (element g : gens) {
        if (right) {
          const element v = s.mul(u, g);
          if (!seen[v]) {
            seen[v] = true;
            stack.push_back(v);
          }
        }
        if (left) {
          const element v = s.mul(g, u);
          if (!seen[v]) {
            seen[v] = true;
            stack.push_back(v);
          }
        }
      }
    }
  }
  return m;
}

struct Partition {
  std::vector<class_id> class_of;
  std::vector<std::vector<element>> classes;
  std::vector<std::vector<bool>> order;
};

// Classes from a preorder given as a bit matrix of ideals.
Partition classify(const FiniteSemigroup& s, const BitMatrix& ideal) {
  const std::size_t n = s.size();
  Partition p;
  p.class_of.assign(n, 0);
  std::vector<element> reps;
  for (element x = 0; x < n; ++x) {
    bool placed = false;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      const element r = reps[c];
      if (ideal.get(x, r) && ideal.get(r, x)) {
        p.class_of[x] = static_cast<class_id>(c);
        p.classes[c].push_back(x);
        placed = true;
        break;
      }
    }
    if (!placed) {
      p.class_of[x] = static_cast<class_id>(reps.size());
      reps.push_back(x);
      p.classes.push_back({x});
    }
  }
  const std::size_t k = reps.size();
  p.order.assign(k, std::vector<bool>(k, false));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      p.order[a][b] = ideal.get(reps[a], reps[b]);
    }
  }
  return p;
}

}  // namespace

GreenData green(const FiniteSemigroup& s) {
  const std::size_t n = s.size();
  BitMatrix r_ideal = right_ideals_full(s);
  BitMatrix l_ideal = left_ideals_full(s);
  BitMatrix j_ideal = two_sided_ideals_full(s);

  if (!s.generators().empty()) {
    BitMatrix r2 = ideals_by_reachability(s, s.generators(), true, false);
    BitMatrix l2 = ideals_by_reachability(s, s.generators(), false, true);
    BitMatrix j2 = ideals_by_reachability(s, s.generators(), true, true);
    if (!r_ideal.columns_equal(r2) || !l_ideal.columns_equal(l2)
        || !j_ideal.columns_equal(j2)) {
      throw VerificationError(
          "generator-based Green computation disagrees with the full one");
    }
  }

  GreenData g;
  Partition lp = classify(s, l_ideal);
  Partition rp = classify(s, r_ideal);
  Partition jp = classify(s, j_ideal);
  g.l_class = std::move(lp.class_of);
  g.l_classes = std::move(lp.classes);
  g.l_order = std::move(lp.order);
  g.r_class = std::move(rp.class_of);
  g.r_classes = std::move(rp.classes);
  g.r_order = std::move(rp.order);
  g.j_class = std::move(jp.class_of);
  g.j_classes = std::move(jp.classes);
  g.j_order = std::move(jp.order);

  // H-classes are intersections of an L-class and an R-class; ids in order
  // of first appearance.
  g.h_class.assign(n, 0);
  std::vector<std::pair<class_id, class_id>> h_keys;
  for (element x = 0; x < n; ++x) {
    const std::pair<class_id, class_id> key{g.l_class[x], g.r_class[x]};
    auto it = std::find(h_keys.begin(), h_keys.end(), key);
    if (it == h_keys.end()) {
      g.h_class[x] = static_cast<class_id>(h_keys.size());
      h_keys.push_back(key);
      g.h_classes.push_back({x});
    } else {
      const auto c = static_cast<class_id>(it - h_keys.begin());
      g.h_class[x] = c;
      g.h_classes[c].push_back(x);
    }
  }

  for (element x = 0; x < n; ++x) {
    if (s.is_idempotent(x)) {
      g.idempotents.push_back(x);
      const class_id h = g.h_class[x];
      if (std::find(g.group_h_classes.begin(), g.group_h_classes.end(), h)
          == g.group_h_classes.end()) {
        g.group_h_classes.push_back(h);
      }
    }
  }
  return g;
}

std::vector<element> minimal_ideal(const FiniteSemigroup& s,
                                   const GreenData& g) {
  const std::size_t k = g.j_classes.size();
  for (std::size_t c = 0; c < k; ++c) {
    bool below_all = true;
    for (std::size_t d = 0; d < k; ++d) {
      if (!g.j_order[c][d]) {
        below_all = false;
        break;
      }
    }
    if (below_all) {
      return g.j_classes[c];
    }
  }
  throw VerificationError("finite semigroup without a minimal ideal: "
                          + std::to_string(s.size()));
}

}  // namespace pointlike
