#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artin {

/// Base of every domain error; `module()` names the component that raised it.
class Error : public std::runtime_error {
public:
  Error(std::string module, const std::string &what)
      : std::runtime_error(what), module_(std::move(module)) {}
  const std::string &module() const noexcept { return module_; }

private:
  std::string module_;
};

class DiagramError : public Error {
public:
  explicit DiagramError(const std::string &what) : Error("diagram", what) {}
};

class WordError : public Error {
public:
  WordError(std::string module, const std::string &what) : Error(std::move(module), what) {}
};

class NotFiniteTypeError : public Error {
public:
  NotFiniteTypeError(std::string module, const std::string &what)
      : Error(std::move(module), what) {}
};

/// A deterministic search limit was hit. Results are never silently truncated.
class CapExceededError : public Error {
public:
  CapExceededError(std::string module, const std::string &what, std::size_t cap)
      : Error(std::move(module), what + " (cap " + std::to_string(cap) + ")"), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

private:
  std::size_t cap_;
};

class ShellingInputError : public Error {
public:
  explicit ShellingInputError(const std::string &what) : Error("shelling", what) {}
};

} // namespace artin
