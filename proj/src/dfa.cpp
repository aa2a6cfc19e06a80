#include "pointlike/dfa.hpp"

#include <algorithm>
#include <fstream>
#include <map>

#include <json.hpp>

#include "pointlike/errors.hpp"

namespace pointlike {

bool Dfa::is_final(std::uint32_t q) const {
  return std::find(finals.begin(), finals.end(), q) != finals.end();
}

std::size_t Dfa::letter_index(char c) const {
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    if (alphabet[i] == c) {
      return i;
    }
  }
  return static_cast<std::size_t>(-1);
}

bool Dfa::accepts(const std::string& word) const {
  std::uint32_t q = initial;
  for (char c : word) {
    const std::size_t a = letter_index(c);
    if (a == static_cast<std::size_t>(-1)) {
      throw InputError("word letter '" + std::string(1, c)
                       + "' is not in the alphabet");
    }
    q = step(q, a);
  }
  return is_final(q);
}

void Dfa::validate() const {
  if (states == 0) {
    throw InputError("a DFA needs at least one state");
  }
  if (alphabet.empty()) {
    throw InputError("a DFA needs a nonempty alphabet");
  }
  if (initial >= states) {
    throw InputError("initial state out of range");
  }
  if (delta.size() != static_cast<std::size_t>(states) * alphabet.size()) {
    throw InputError("transition table is not total");
  }
  for (std::uint32_t q : delta) {
    if (q >= states) {
      throw IndexOutOfRangeError("transition target out of range");
    }
  }
  for (std::uint32_t q : finals) {
    if (q >= states) {
      throw IndexOutOfRangeError("final state out of range");
    }
  }
}

Dfa minimize(const Dfa& d) {
  d.validate();
  const std::size_t k = d.alphabet.size();

  // Reachable part first.
  std::vector<std::uint32_t> order;
  std::vector<std::int64_t> reached(d.states, -1);
  order.push_back(d.initial);
  reached[d.initial] = 0;
  for (std::size_t next = 0; next < order.size(); ++next) {
    for (std::size_t a = 0; a < k; ++a) {
      const std::uint32_t to = d.step(order[next], a);
      if (reached[to] < 0) {
        reached[to] = static_cast<std::int64_t>(order.size());
        order.push_back(to);
      }
    }
  }

  // Moore refinement on the reachable states.
  const std::size_t n = order.size();
  std::vector<std::uint32_t> block(n);
  for (std::size_t i = 0; i < n; ++i) {
    block[i] = d.is_final(order[i]) ? 1 : 0;
  }
  while (true) {
    std::map<std::vector<std::uint32_t>, std::uint32_t> sig_index;
    std::vector<std::uint32_t> next_block(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint32_t> sig{block[i]};
      for (std::size_t a = 0; a < k; ++a) {
        sig.push_back(block[reached[d.step(order[i], a)]]);
      }
      auto [it, inserted] =
          sig_index.emplace(std::move(sig),
                            static_cast<std::uint32_t>(sig_index.size()));
      next_block[i] = it->second;
    }
    if (next_block == block) {
      break;
    }
    block = std::move(next_block);
  }

  // Renumber blocks by first appearance so every id is populated even
  // when one side of the final/non-final split is empty.
  {
    std::vector<std::int64_t> remap(n, -1);
    std::uint32_t fresh = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (remap[block[i]] < 0) {
        remap[block[i]] = fresh++;
      }
      block[i] = static_cast<std::uint32_t>(remap[block[i]]);
    }
  }
  const std::uint32_t blocks =
      *std::max_element(block.begin(), block.end()) + 1;
  Dfa out;
  out.alphabet = d.alphabet;
  out.states = blocks;
  out.initial = block[0];
  out.delta.assign(static_cast<std::size_t>(blocks) * k, 0);
  std::vector<bool> written(blocks, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (written[block[i]]) {
      continue;
    }
    written[block[i]] = true;
    for (std::size_t a = 0; a < k; ++a) {
      out.delta[block[i] * k + a] = block[reached[d.step(order[i], a)]];
    }
    if (d.is_final(order[i])) {
      out.finals.push_back(block[i]);
    }
  }
  std::sort(out.finals.begin(), out.finals.end());
  out.validate();
  return out;
}

Dfa read_dfa(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad DFA JSON: ") + e.what());
  }
  Dfa d;
  try {
    for (const auto& letter : j.at("alphabet")) {
      const std::string s = letter.get<std::string>();
      if (s.size() != 1) {
        throw InputError("alphabet letters must be single characters");
      }
      d.alphabet.push_back(s[0]);
    }
    d.states = j.at("states").get<std::uint32_t>();
    d.initial = j.at("initial").get<std::uint32_t>();
    for (const auto& f : j.at("finals")) {
      d.finals.push_back(f.get<std::uint32_t>());
    }
    for (const auto& row : j.at("delta")) {
      if (row.size() != d.alphabet.size()) {
        throw InputError("delta row has the wrong width");
      }
      for (const auto& v : row) {
        d.delta.push_back(v.get<std::uint32_t>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad DFA JSON: ") + e.what());
  }
  d.validate();
  return d;
}

Dfa load_dfa_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path.string());
  }
  return read_dfa(in);
}

TransitionSemigroup transition_semigroup_of_dfa(const Dfa& d) {
  d.validate();
  const std::size_t k = d.alphabet.size();
  const std::size_t n = d.states;

  std::map<std::vector<element>, element> index;
  std::vector<std::vector<element>> elems;
  TransitionSemigroup out;
  out.letter_map.resize(k);
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<element> tr(n);
    for (std::size_t q = 0; q < n; ++q) {
      tr[q] = d.step(static_cast<std::uint32_t>(q), a);
    }
    auto [it, inserted] =
        index.emplace(std::move(tr), static_cast<element>(elems.size()));
    if (inserted) {
      elems.push_back(it->first);
      out.words.push_back({a});
    }
    out.letter_map[a] = it->second;
  }
  std::vector<element> gen_ids;
  for (std::size_t a = 0; a < k; ++a) {
    if (std::find(gen_ids.begin(), gen_ids.end(), out.letter_map[a])
        == gen_ids.end()) {
      gen_ids.push_back(out.letter_map[a]);
    }
  }
  for (std::size_t next = 0; next < elems.size(); ++next) {
    for (std::size_t a = 0; a < k; ++a) {
      const std::vector<element>& g = elems[out.letter_map[a]];
      std::vector<element> comp(n);
      for (std::size_t q = 0; q < n; ++q) {
        comp[q] = g[elems[next][q]];
      }
      auto [it, inserted] =
          index.emplace(std::move(comp), static_cast<element>(elems.size()));
      if (inserted) {
        elems.push_back(it->first);
        std::vector<std::size_t> w = out.words[next];
        w.push_back(a);
        out.words.push_back(std::move(w));
      }
    }
  }

  const std::size_t m = elems.size();
  std::vector<element> table(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<element> comp(n);
      for (std::size_t q = 0; q < n; ++q) {
        comp[q] = elems[j][elems[i][q]];
      }
      table[i * m + j] = index.at(comp);
    }
  }
  out.semigroup =
      FiniteSemigroup::unchecked(m, std::move(table), std::move(gen_ids));
  out.transformations = std::move(elems);
  return out;
}

}  // namespace pointlike
