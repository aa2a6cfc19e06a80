#ifndef POINTLIKE_SEMIGROUP_HPP
#define POINTLIKE_SEMIGROUP_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

namespace pointlike {

/// Elements of a finite semigroup are dense indices 0..n-1.
using element = std::uint32_t;

/// A finite semigroup given by its full multiplication table, with an
/// optional generating set. Immutable after construction and safe to
/// share across threads.
///
/// The adjoined identity I of S^I is the fresh index n = size(); it is
/// never stored in the table but materialized on demand, either by
/// with_adjoined_identity() or virtually via mul_si().
class FiniteSemigroup {
 public:
  /// Empty placeholder; every factory replaces it.
  FiniteSemigroup() = default;

  /// Builds from an n x n table (row-major, table[i*n + j] = i * j) and
  /// validates associativity and index ranges.
  static FiniteSemigroup from_table(std::size_t n, std::vector<element> table);

  /// Closes a set of total maps on {0..degree-1} under composition
  /// (functions applied on the right: x(fg) = (xf)g) and returns the
  /// resulting transformation semigroup. Element 0 is the first generator.
  static FiniteSemigroup from_transformations(
      std::size_t degree, const std::vector<std::vector<element>>& gens);

  /// Trusted constructor for tables produced internally; skips the
  /// associativity check.
  static FiniteSemigroup unchecked(std::size_t n, std::vector<element> table,
                                   std::vector<element> generators = {});

  std::size_t size() const { return size_; }

  element mul(element a, element b) const { return table_[a * size_ + b]; }

  /// Product of a nonempty word of elements, left to right.
  element product(const std::vector<element>& word) const;

  const std::vector<element>& generators() const { return generators_; }

  bool has_adjoined_identity() const { return has_identity_; }

  /// Index of the adjoined identity; only meaningful when
  /// has_adjoined_identity() is true.
  element identity_index() const { return identity_; }

  /// The monoid S^I with a fresh identity at index size().
  FiniteSemigroup with_adjoined_identity() const;

  /// The unique idempotent in the cyclic subsemigroup generated by x.
  element omega(element x) const;

  bool is_idempotent(element x) const { return mul(x, x) == x; }

  std::vector<element> idempotents() const;

  /// The transformations this semigroup was closed from, if it was built
  /// by from_transformations; empty otherwise.
  const std::vector<std::vector<element>>& transformations() const {
    return transformations_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<element> table_;
  std::vector<element> generators_;
  std::vector<std::vector<element>> transformations_;
  bool has_identity_ = false;
  element identity_ = 0;
};

/// Multiplication in S^I without materializing it: index s.size() is I.
inline element mul_si(const FiniteSemigroup& s, element a, element b) {
  const element ident = static_cast<element>(s.size());
  if (a == ident) {
    return b;
  }
  if (b == ident) {
    return a;
  }
  return s.mul(a, b);
}

/// Restriction of the host's table to a product-closed subset. The members
/// must be sorted; member i of the result is host element members[i].
FiniteSemigroup induced_subsemigroup(const FiniteSemigroup& host,
                                     const std::vector<element>& members);

FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b);

/// Reads the .sgp text format: optional '#' comment lines, a line
/// "n <count>", n rows of n indices, and an optional "generators ..." line.
FiniteSemigroup read_sgp(std::istream& in);

/// Reads the .tgen text format: a line "degree <d>" followed by one
/// generator per line as d space-separated images.
FiniteSemigroup read_tgen(std::istream& in);

/// Loads either format, dispatching on the file extension.
FiniteSemigroup load_semigroup_file(const std::filesystem::path& path);

}  // namespace pointlike

#endif  // POINTLIKE_SEMIGROUP_HPP
