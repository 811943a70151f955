#pragma once

#include <stdexcept>
#include <string>

namespace barycut {

/// Base class for all barycut errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// geometry
class NotFullDimensional : public Error { public: using Error::Error; };
class TooFewPoints : public Error { public: using Error::Error; };
class EmptySection : public Error { public: using Error::Error; };
class DegenerateProjection : public Error { public: using Error::Error; };
class EmptyList : public Error { public: using Error::Error; };

// sphere
class PoleTooClose : public Error { public: using Error::Error; };

// depth
class NotInterior : public Error { public: using Error::Error; };

// synthetic
class OffSphere : public Error { public: using Error::Error; };
class OriginUndefined : public Error { public: using Error::Error; };
class DimensionTooSmall : public Error { public: using Error::Error; };

// critical
class PreconditionViolated : public Error { public: using Error::Error; };
class NotLocalMaxima : public Error { public: using Error::Error; };

// bodies / io
class InvalidParams : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };

} // namespace barycut
