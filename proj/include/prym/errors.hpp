#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prym {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class ValidityError : public Error {
 public:
  using Error::Error;
};

class SpaceMismatchError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Applying a map outside its domain. `generator` names the offending source generator.
class PartialityError : public Error {
 public:
  PartialityError(const std::string& map, const std::string& generator, const std::string& detail = {})
      : Error("map " + map + " has no rule for " + generator + (detail.empty() ? "" : " (" + detail + ")")),
        generator_(generator) {}
  const std::string& generator() const { return generator_; }

 private:
  std::string generator_;
};

class NotADivisorError : public Error {
 public:
  using Error::Error;
};

class CatalogError : public Error {
 public:
  using Error::Error;
};

class UnknownCoefficientError : public Error {
 public:
  using Error::Error;
};

class UnsupportedSpaceError : public Error {
 public:
  using Error::Error;
};

}  // namespace prym
