#ifndef POINTLIKE_DFA_HPP
#define POINTLIKE_DFA_HPP

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "pointlike/semigroup.hpp"

namespace pointlike {

/// A complete deterministic finite automaton with final states.
struct Dfa {
  std::vector<char> alphabet;
  std::uint32_t states = 0;
  std::uint32_t initial = 0;
  std::vector<std::uint32_t> finals;
  /// delta[state * alphabet.size() + letter].
  std::vector<std::uint32_t> delta;

  std::uint32_t step(std::uint32_t q, std::size_t letter) const {
    return delta[q * alphabet.size() + letter];
  }
  bool is_final(std::uint32_t q) const;
  /// Letter index, or npos when the character is not in the alphabet.
  std::size_t letter_index(char c) const;
  bool accepts(const std::string& word) const;

  void validate() const;
};

/// Moore partition refinement; returns the minimal complete DFA of the
/// reachable part.
Dfa minimize(const Dfa& d);

/// Reads the .dfa JSON format: {"alphabet": ["a", ...], "states": N,
/// "initial": i, "finals": [...], "delta": [[...], ...]}.
Dfa read_dfa(std::istream& in);
Dfa load_dfa_file(const std::filesystem::path& path);

/// The transition semigroup: all distinct compositions of the letter
/// transformations. letter_map[i] is the semigroup element of letter i.
struct TransitionSemigroup {
  FiniteSemigroup semigroup;
  std::vector<element> letter_map;
  /// A shortest word (letter indices) evaluating to each element.
  std::vector<std::vector<std::size_t>> words;
  /// The transformation on DFA states realized by each element.
  std::vector<std::vector<element>> transformations;
};

TransitionSemigroup transition_semigroup_of_dfa(const Dfa& d);

}  // namespace pointlike

#endif  // POINTLIKE_DFA_HPP
