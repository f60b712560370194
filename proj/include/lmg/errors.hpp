#pragma once

#include <stdexcept>
#include <string>

namespace lmg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSector : public Error { public: using Error::Error; };
class InvalidLabel : public Error { public: using Error::Error; };
class InvalidCoupling : public Error { public: using Error::Error; };
class InvalidTemperature : public Error { public: using Error::Error; };
class InvalidSqueezing : public Error { public: using Error::Error; };
class DimensionError : public Error { public: using Error::Error; };
class EigensolverFailure : public Error { public: using Error::Error; };
class ParameterMismatch : public Error { public: using Error::Error; };
class ClassicallyForbidden : public Error { public: using Error::Error; };
class InsufficientData : public Error { public: using Error::Error; };
class NoEngineOperation : public Error { public: using Error::Error; };
class EmptySeries : public Error { public: using Error::Error; };
class NonFiniteValue : public Error { public: using Error::Error; };

class IoError : public Error {
 public:
  IoError(std::string path, const std::string& what)
      : Error(what + ": " + path), path_(std::move(path)) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace lmg
