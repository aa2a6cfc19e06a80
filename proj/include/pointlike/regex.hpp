#ifndef POINTLIKE_REGEX_HPP
#define POINTLIKE_REGEX_HPP

#include <string>

#include "pointlike/dfa.hpp"

namespace pointlike {

/// Compiles a regular expression to the minimal complete DFA over the
/// given alphabet via iterated derivatives. Grammar: literals,
/// juxtaposition, union '|', star '*', plus '+', parentheses. The denoted
/// language must avoid the empty word (it must be a subset of A+);
/// otherwise EmptyWordAcceptedError is thrown.
Dfa regex_to_dfa(const std::string& expr, const std::string& alphabet);

}  // namespace pointlike

#endif  // POINTLIKE_REGEX_HPP
