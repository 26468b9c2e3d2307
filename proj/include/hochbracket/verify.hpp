// Built-in invariant suites run by the verify command.

#ifndef HOCHBRACKET_VERIFY_HPP_
#define HOCHBRACKET_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "hochbracket/cochain.hpp"

namespace hb {

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::string first_failure;
};

struct VerifyOptions {
  int poly_degree = 1;
  uint64_t seed = 1;
  int jobs = 1;
  int samples = 12;  // random cases per suite
};

std::vector<SuiteResult> run_verify(const Group& G, const VerifyOptions& opts);

}  // namespace hb

#endif  // HOCHBRACKET_VERIFY_HPP_
