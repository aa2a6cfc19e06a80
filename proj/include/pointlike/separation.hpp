#ifndef POINTLIKE_SEPARATION_HPP
#define POINTLIKE_SEPARATION_HPP

#include <string>

#include "pointlike/dfa.hpp"
#include "pointlike/kernels.hpp"
#include "pointlike/saturation.hpp"

namespace pointlike {

/// A semigroup recognizing both input languages at once: the transition
/// semigroup of the trimmed product DFA, with the element sets realizing
/// the words of each language.
struct RecognitionData {
  TransitionSemigroup ts;
  std::vector<element> image1, image2;
};

/// Builds the product of the two DFAs (same alphabet required), trims to
/// the reachable part, and checks disjointness; a word accepted by both
/// raises NotDisjointError with that witness.
RecognitionData recognition_data(const Dfa& d1, const Dfa& d2);

struct SeparationVerdict {
  bool separable = false;
  /// Witness pointlike pair when not separable: x realizes a word of L1
  /// and y a word of L2.
  element witness_x = 0, witness_y = 0;
  std::string witness_word_x, witness_word_y;
  std::size_t semigroup_size = 0;
};

/// Decides whether the disjoint regular languages of d1 and d2 can be
/// separated by a language recognizable in the variety: not separable iff
/// some pointlike pair of the recognizing semigroup straddles the two
/// language images.
SeparationVerdict decide_separation(const Dfa& d1, const Dfa& d2,
                                    const KernelFunctor& k,
                                    const SaturationOptions& opts = {});

}  // namespace pointlike

#endif  // POINTLIKE_SEPARATION_HPP
