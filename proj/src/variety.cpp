#include "pointlike/variety.hpp"

#include <fstream>
#include <sstream>

#include "pointlike/errors.hpp"

namespace pointlike {

KernelFunctor parse_variety(const std::string& spec) {
  if (spec == "trivial") {
    return KernelFunctor::trivial();
  }
  if (spec == "all") {
    return KernelFunctor::all();
  }
  if (spec == "ab") {
    return KernelFunctor::abelian();
  }
  if (spec == "nil") {
    return KernelFunctor::nilpotent();
  }
  if (spec == "sol") {
    return KernelFunctor::solvable();
  }
  if (spec.rfind("p:", 0) == 0) {
    try {
      return KernelFunctor::p_group(
          static_cast<unsigned>(std::stoul(spec.substr(2))));
    } catch (const InputError&) {
      throw;
    } catch (const std::exception&) {
      throw InputError("bad prime in variety \"" + spec + "\"");
    }
  }
  if (spec.rfind("pi:", 0) == 0) {
    std::vector<unsigned> primes;
    std::istringstream in(spec.substr(3));
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        primes.push_back(static_cast<unsigned>(std::stoul(tok)));
      } catch (const std::exception&) {
        throw InputError("bad prime list in variety \"" + spec + "\"");
      }
    }
    if (primes.empty()) {
      throw InputError("empty prime list in variety \"" + spec + "\"");
    }
    return KernelFunctor::pi_group(std::move(primes));
  }
  if (spec.rfind("verbal:", 0) == 0) {
    const std::string path = spec.substr(7);
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open word file " + path);
    }
    return KernelFunctor::verbal(read_word_file(in));
  }
  throw InputError("unknown variety \"" + spec + "\"");
}

}  // namespace pointlike
