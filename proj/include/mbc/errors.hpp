#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mbc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input or an operation that is undefined for the given state.
class DomainError : public Error {
 public:
  using Error::Error;
};

class EmptyMatrixError : public DomainError {
 public:
  EmptyMatrixError() : DomainError("countdown matrix size must be at least 1") {}
};

class NoClosedFormError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested entry is the +infinity sentinel (P1 can never win from there).
class UnwinnableError : public DomainError {
 public:
  using DomainError::DomainError;
};

class GameDecidedError : public DomainError {
 public:
  using DomainError::DomainError;
};

class OverbidError : public DomainError {
 public:
  OverbidError(int player, const std::string& what)
      : DomainError(what), player_(player) {}
  int player() const { return player_; }

 private:
  int player_;
};

class InconsistentStateError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A search ran out of its node or state budget.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::uint64_t work)
      : Error(what), work_(work) {}
  std::uint64_t work() const { return work_; }

 private:
  std::uint64_t work_;
};

}  // namespace mbc
