#pragma once

#include <stdexcept>
#include <string>

namespace srpoly {

// Base class for all srpoly errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Coefficient vector is not palindromic within the requested tolerance.
class NotSelfReciprocal : public Error { public: using Error::Error; };

// Leading coefficient vanishes where it must not.
class ZeroLeading : public Error { public: using Error::Error; };

// Operation requires an even-degree polynomial.
class OddDegree : public Error { public: using Error::Error; };

// Operation requires an odd-degree polynomial.
class EvenDegree : public Error { public: using Error::Error; };

// A division remainder exceeded its tolerance.
class ResidualTooLarge : public Error { public: using Error::Error; };

// Argument outside the admissible range.
class OutOfRange : public Error { public: using Error::Error; };

// Family parameters violate a nondegeneracy condition.
class Degenerate : public Error { public: using Error::Error; };

// Coefficient vector fits none of the family patterns.
class NoMatch : public Error { public: using Error::Error; };

// Iterative solver failed to converge.
class NoConvergence : public Error { public: using Error::Error; };

// Zero passed where a nonzero value is required.
class ZeroInput : public Error { public: using Error::Error; };

} // namespace srpoly
