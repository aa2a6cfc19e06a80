#ifndef POINTLIKE_VARIETY_HPP
#define POINTLIKE_VARIETY_HPP

#include <string>

#include "pointlike/kernels.hpp"

namespace pointlike {

/// Parses the CLI variety syntax: "trivial" | "all" | "ab" | "p:<prime>"
/// | "pi:<p1,p2,...>" | "nil" | "sol" | "verbal:<file>".
KernelFunctor parse_variety(const std::string& spec);

}  // namespace pointlike

#endif  // POINTLIKE_VARIETY_HPP
