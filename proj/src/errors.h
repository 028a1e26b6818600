#pragma once
// Error taxonomy shared across the library.  Everything user-triggerable maps
// onto one of these; the C API translates them into status codes.

#include <stdexcept>
#include <string>

namespace discmf {

// A linear-algebra target is not in the span of the proposed basis.
struct NoSolution : std::runtime_error {
  explicit NoSolution(const std::string& what) : std::runtime_error(what) {}
};

// The solve succeeded but the answer is not unique (the proposed basis is
// linearly dependent over the coefficient ring).
struct AmbiguousSolution : std::runtime_error {
  explicit AmbiguousSolution(const std::string& what) : std::runtime_error(what) {}
};

// (m, p) is outside the family handled here.
struct InadmissiblePair : std::invalid_argument {
  explicit InadmissiblePair(const std::string& what) : std::invalid_argument(what) {}
};

// A candidate pair of matrices fails phi*psi = psi*phi = delta * I.
struct MFIdentityFailure : std::runtime_error {
  explicit MFIdentityFailure(const std::string& what) : std::runtime_error(what) {}
};

// A block matches no entry of the canonical list (or matches more than one).
struct Unclassified : std::runtime_error {
  explicit Unclassified(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace discmf
