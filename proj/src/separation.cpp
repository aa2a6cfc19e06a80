#include "pointlike/separation.hpp"

#include <algorithm>
#include <map>

#include "pointlike/errors.hpp"

namespace pointlike {

RecognitionData recognition_data(const Dfa& d1, const Dfa& d2) {
  d1.validate();
  d2.validate();
  if (d1.alphabet != d2.alphabet) {
    throw AlphabetMismatchError("the two DFAs use different alphabets");
  }
  // Semigroup-level separation works over A+; the empty word is out.
  if (d1.is_final(d1.initial) || d2.is_final(d2.initial)) {
    throw EmptyWordAcceptedError(
        "an input language contains the empty word; languages must be "
        "subsets of A+");
  }
  const std::size_t k = d1.alphabet.size();

  // Reachable product states, with a shortest word to each for witnesses.
  using Pair = std::pair<std::uint32_t, std::uint32_t>;
  std::map<Pair, std::uint32_t> index;
  std::vector<Pair> states;
  std::vector<std::string> word_to;
  states.emplace_back(d1.initial, d2.initial);
  index.emplace(states[0], 0);
  word_to.push_back("");
  for (std::size_t next = 0; next < states.size(); ++next) {
    for (std::size_t a = 0; a < k; ++a) {
      const Pair to{d1.step(states[next].first, a),
                    d2.step(states[next].second, a)};
      if (index.emplace(to, static_cast<std::uint32_t>(states.size()))
              .second) {
        states.push_back(to);
        word_to.push_back(word_to[next] + d1.alphabet[a]);
      }
    }
  }
  for (std::size_t q = 0; q < states.size(); ++q) {
    if (d1.is_final(states[q].first) && d2.is_final(states[q].second)) {
      throw NotDisjointError(word_to[q]);
    }
  }

  Dfa product;
  product.alphabet = d1.alphabet;
  product.states = static_cast<std::uint32_t>(states.size());
  product.initial = 0;
  product.delta.resize(states.size() * k);
  for (std::size_t q = 0; q < states.size(); ++q) {
    for (std::size_t a = 0; a < k; ++a) {
      product.delta[q * k + a] = index.at(Pair{
          d1.step(states[q].first, a), d2.step(states[q].second, a)});
    }
  }

  RecognitionData data;
  data.ts = transition_semigroup_of_dfa(product);
  for (element x = 0; x < data.ts.semigroup.size(); ++x) {
    const std::uint32_t dest = data.ts.transformations[x][product.initial];
    if (d1.is_final(states[dest].first)) {
      data.image1.push_back(x);
    }
    if (d2.is_final(states[dest].second)) {
      data.image2.push_back(x);
    }
  }
  // Disjoint languages cannot share a realizing transformation.
  std::vector<element> overlap;
  std::set_intersection(data.image1.begin(), data.image1.end(),
                        data.image2.begin(), data.image2.end(),
                        std::back_inserter(overlap));
  if (!overlap.empty()) {
    throw VerificationError("language images overlap despite disjointness");
  }
  return data;
}

SeparationVerdict decide_separation(const Dfa& d1, const Dfa& d2,
                                    const KernelFunctor& k,
                                    const SaturationOptions& opts) {
  const RecognitionData data = recognition_data(d1, d2);
  const SaturationFamily fam =
      saturate(data.ts.semigroup, k, Strategy::kernel_rule, opts);

  auto spell = [&](element x) {
    std::string w;
    for (std::size_t a : data.ts.words[x]) {
      w += d1.alphabet[a];
    }
    return w;
  };

  SeparationVerdict verdict;
  verdict.semigroup_size = data.ts.semigroup.size();
  for (const auto& [x, y] : fam.pointlike_pairs()) {
    const bool x1 = std::binary_search(data.image1.begin(),
                                       data.image1.end(), x);
    const bool x2 = std::binary_search(data.image2.begin(),
                                       data.image2.end(), x);
    const bool y1 = std::binary_search(data.image1.begin(),
                                       data.image1.end(), y);
    const bool y2 = std::binary_search(data.image2.begin(),
                                       data.image2.end(), y);
    if ((x1 && y2) || (y1 && x2)) {
      verdict.separable = false;
      verdict.witness_x = x1 && y2 ? x : y;
      verdict.witness_y = x1 && y2 ? y : x;
      verdict.witness_word_x = spell(verdict.witness_x);
      verdict.witness_word_y = spell(verdict.witness_y);
      return verdict;
    }
  }
  verdict.separable = true;
  return verdict;
}

}  // namespace pointlike
