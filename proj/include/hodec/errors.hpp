#pragma once

#include <stdexcept>

namespace hodec {

// Base class for every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error { public: using Error::Error; };
class InvalidRange : public Error { public: using Error::Error; };
class MissingProfile : public Error { public: using Error::Error; };
class IncompleteRuleBase : public Error { public: using Error::Error; };
class DuplicateAntecedent : public Error { public: using Error::Error; };
class ResolutionTooCoarse : public Error { public: using Error::Error; };
class ZeroMass : public Error { public: using Error::Error; };
class NonPositiveInput : public Error { public: using Error::Error; };
class ZeroDenominator : public Error { public: using Error::Error; };
class NonPositiveSignal : public Error { public: using Error::Error; };
class InvalidSpec : public Error { public: using Error::Error; };
class IoError : public Error { public: using Error::Error; };

}  // namespace hodec
