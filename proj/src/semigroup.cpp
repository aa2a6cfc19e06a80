#include "pointlike/semigroup.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "pointlike/errors.hpp"

namespace pointlike {

FiniteSemigroup FiniteSemigroup::from_table(std::size_t n,
                                            std::vector<element> table) {
  if (n == 0) {
    throw InputError("a semigroup must have at least one element");
  }
  if (table.size() != n * n) {
    throw InputError("expected " + std::to_string(n * n)
                     + " table entries, got " + std::to_string(table.size()));
  }
  for (element v : table) {
    if (v >= n) {
      throw IndexOutOfRangeError("table entry " + std::to_string(v)
                                 + " out of range [0, " + std::to_string(n)
                                 + ")");
    }
  }
  FiniteSemigroup s;
  s.size_ = n;
  s.table_ = std::move(table);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const element ij = s.mul(static_cast<element>(i), static_cast<element>(j));
      for (std::size_t k = 0; k < n; ++k) {
        if (s.mul(ij, static_cast<element>(k))
            != s.mul(static_cast<element>(i),
                     s.mul(static_cast<element>(j), static_cast<element>(k)))) {
          throw NonAssociativeError(i, j, k);
        }
      }
    }
  }
  return s;
}

FiniteSemigroup FiniteSemigroup::from_transformations(
    std::size_t degree, const std::vector<std::vector<element>>& gens) {
  if (gens.empty()) {
    throw EmptyGeneratorSetError("at least one generator is required");
  }
  for (const auto& g : gens) {
    if (g.size() != degree) {
      throw InputError("generator has " + std::to_string(g.size())
                       + " images, expected " + std::to_string(degree));
    }
    for (element v : g) {
      if (v >= degree) {
        throw IndexOutOfRangeError("image " + std::to_string(v)
                                   + " out of range [0, "
                                   + std::to_string(degree) + ")");
      }
    }
  }

  auto compose = [degree](const std::vector<element>& f,
                          const std::vector<element>& g) {
    std::vector<element> h(degree);
    for (std::size_t q = 0; q < degree; ++q) {
      h[q] = g[f[q]];
    }
    return h;
  };

  std::vector<std::vector<element>> elems;
  std::map<std::vector<element>, element> index_of;
  std::vector<element> gen_indices;
  for (const auto& g : gens) {
    auto it = index_of.find(g);
    if (it == index_of.end()) {
      const element id = static_cast<element>(elems.size());
      index_of.emplace(g, id);
      elems.push_back(g);
      gen_indices.push_back(id);
    }
  }
  // Breadth-first product closure over the distinct generators.
  for (std::size_t next = 0; next < elems.size(); ++next) {
    for (element gi : gen_indices) {
      auto p = compose(elems[next], elems[gi]);
      if (index_of.find(p) == index_of.end()) {
        index_of.emplace(p, static_cast<element>(elems.size()));
        elems.push_back(std::move(p));
      }
    }
  }

  const std::size_t n = elems.size();
  std::vector<element> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * n + j] = index_of.at(compose(elems[i], elems[j]));
    }
  }
  FiniteSemigroup s;
  s.size_ = n;
  s.table_ = std::move(table);
  s.generators_ = std::move(gen_indices);
  s.transformations_ = std::move(elems);
  return s;
}

FiniteSemigroup FiniteSemigroup::unchecked(std::size_t n,
                                           std::vector<element> table,
                                           std::vector<element> generators) {
  FiniteSemigroup s;
  s.size_ = n;
  s.table_ = std::move(table);
  s.generators_ = std::move(generators);
  return s;
}

element FiniteSemigroup::product(const std::vector<element>& word) const {
  if (word.empty()) {
    throw InputError("cannot take the product of an empty word");
  }
  element acc = word.front();
  for (std::size_t i = 1; i < word.size(); ++i) {
    acc = mul(acc, word[i]);
  }
  return acc;
}

FiniteSemigroup FiniteSemigroup::with_adjoined_identity() const {
  const std::size_t n = size_;
  const std::size_t m = n + 1;
  std::vector<element> table(m * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i * m + j] = mul(static_cast<element>(i), static_cast<element>(j));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    table[i * m + n] = static_cast<element>(i);
    table[n * m + i] = static_cast<element>(i);
  }
  FiniteSemigroup s;
  s.size_ = m;
  s.table_ = std::move(table);
  s.has_identity_ = true;
  s.identity_ = static_cast<element>(n);
  if (!generators_.empty()) {
    s.generators_ = generators_;
    s.generators_.push_back(static_cast<element>(n));
  }
  return s;
}

element FiniteSemigroup::omega(element x) const {
  element y = x;
  for (std::size_t steps = 0; steps <= size_; ++steps) {
    if (is_idempotent(y)) {
      return y;
    }
    y = mul(y, x);
  }
  throw VerificationError("no idempotent power found; table is corrupt");
}

std::vector<element> FiniteSemigroup::idempotents() const {
  std::vector<element> out;
  for (element x = 0; x < size_; ++x) {
    if (is_idempotent(x)) {
      out.push_back(x);
    }
  }
  return out;
}

FiniteSemigroup induced_subsemigroup(const FiniteSemigroup& host,
                                     const std::vector<element>& members) {
  const std::size_t k = members.size();
  auto local_of = [&members](element host_elt) -> element {
    auto it = std::lower_bound(members.begin(), members.end(), host_elt);
    if (it == members.end() || *it != host_elt) {
      throw VerificationError("member set is not product-closed");
    }
    return static_cast<element>(it - members.begin());
  };
  std::vector<element> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      table[i * k + j] = local_of(host.mul(members[i], members[j]));
    }
  }
  return FiniteSemigroup::unchecked(k, std::move(table));
}

FiniteSemigroup direct_product(const FiniteSemigroup& a,
                               const FiniteSemigroup& b) {
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t n = na * nb;
  // Element (x, y) has index x * nb + y.
  std::vector<element> table(n * n);
  for (std::size_t x1 = 0; x1 < na; ++x1) {
    for (std::size_t y1 = 0; y1 < nb; ++y1) {
      for (std::size_t x2 = 0; x2 < na; ++x2) {
        for (std::size_t y2 = 0; y2 < nb; ++y2) {
          const std::size_t i = x1 * nb + y1;
          const std::size_t j = x2 * nb + y2;
          table[i * n + j] = static_cast<element>(
              a.mul(static_cast<element>(x1), static_cast<element>(x2)) * nb
              + b.mul(static_cast<element>(y1), static_cast<element>(y2)));
        }
      }
    }
  }
  return FiniteSemigroup::unchecked(n, std::move(table));
}

namespace {

// Skips blank lines and '#' comments, returns the next meaningful line.
bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') {
      continue;
    }
    return true;
  }
  return false;
}

}  // namespace

FiniteSemigroup read_sgp(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) {
    throw InputError("empty .sgp input");
  }
  std::istringstream head(line);
  std::string keyword;
  std::size_t n = 0;
  if (!(head >> keyword >> n) || keyword != "n" || n == 0) {
    throw InputError("expected header line \"n <count>\"");
  }
  std::vector<element> table;
  table.reserve(n * n);
  for (std::size_t row = 0; row < n; ++row) {
    if (!next_content_line(in, line)) {
      throw InputError("missing table row " + std::to_string(row));
    }
    std::istringstream rs(line);
    for (std::size_t col = 0; col < n; ++col) {
      long long v = -1;
      if (!(rs >> v) || v < 0) {
        throw InputError("bad entry in table row " + std::to_string(row));
      }
      table.push_back(static_cast<element>(v));
    }
    long long extra;
    if (rs >> extra) {
      throw InputError("too many entries in table row " + std::to_string(row));
    }
  }
  std::vector<element> gens;
  if (next_content_line(in, line)) {
    std::istringstream gs(line);
    std::string kw;
    gs >> kw;
    if (kw != "generators") {
      throw InputError("unexpected trailing line: " + line);
    }
    long long v;
    while (gs >> v) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw IndexOutOfRangeError("generator index out of range");
      }
      gens.push_back(static_cast<element>(v));
    }
  }
  std::vector<element> table_copy = table;
  FiniteSemigroup s = FiniteSemigroup::from_table(n, std::move(table));
  if (gens.empty()) {
    return s;
  }
  // Every element must be a product of generators.
  std::vector<bool> reached(n, false);
  std::vector<element> queue;
  for (element g : gens) {
    if (!reached[g]) {
      reached[g] = true;
      queue.push_back(g);
    }
  }
  for (std::size_t next = 0; next < queue.size(); ++next) {
    for (element g : gens) {
      const element p = s.mul(queue[next], g);
      if (!reached[p]) {
        reached[p] = true;
        queue.push_back(p);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end()) {
    throw InputError("declared generators do not generate the semigroup");
  }
  return FiniteSemigroup::unchecked(n, std::move(table_copy), std::move(gens));
}

FiniteSemigroup read_tgen(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) {
    throw InputError("empty .tgen input");
  }
  std::istringstream head(line);
  std::string keyword;
  std::size_t degree = 0;
  if (!(head >> keyword >> degree) || keyword != "degree" || degree == 0) {
    throw InputError("expected header line \"degree <d>\"");
  }
  std::vector<std::vector<element>> gens;
  while (next_content_line(in, line)) {
    std::istringstream rs(line);
    std::vector<element> g;
    long long v;
    while (rs >> v) {
      if (v < 0) {
        throw IndexOutOfRangeError("negative image");
      }
      g.push_back(static_cast<element>(v));
    }
    gens.push_back(std::move(g));
  }
  return FiniteSemigroup::from_transformations(degree, gens);
}

FiniteSemigroup load_semigroup_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path.string());
  }
  if (path.extension() == ".tgen") {
    return read_tgen(in);
  }
  return read_sgp(in);
}

}  // namespace pointlike
