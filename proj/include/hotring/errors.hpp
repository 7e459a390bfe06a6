#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hotring {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed ring/hom data that is not an axiom violation (bad shapes, bad unit...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NotAssociative : public Error {
 public:
  NotAssociative(int i, int j, int l, std::string left, std::string right)
      : Error("not associative on generators (" + std::to_string(i) + "," + std::to_string(j) + "," +
              std::to_string(l) + "): (gi*gj)*gl = " + left + " but gi*(gj*gl) = " + right),
        i(i), j(j), l(l), left(std::move(left)), right(std::move(right)) {}
  int i, j, l;
  std::string left, right;
};

class IllDefined : public Error {
 public:
  IllDefined(int i, int j, const std::string& why)
      : Error("product of generators " + std::to_string(i) + "," + std::to_string(j) +
              " is incompatible with the additive orders: " + why),
        i(i), j(j) {}
  int i, j;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t cap)
      : Error(what + ": " + std::to_string(required) + " candidates required, cap is " + std::to_string(cap)),
        required(required), cap(cap) {}
  std::uint64_t required, cap;
};

class UnknownVariable : public Error {
 public:
  using Error::Error;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class MembershipViolation : public Error {
 public:
  using Error::Error;
};

class DepthExceeded : public Error {
 public:
  using Error::Error;
};

class NotSurjective : public Error {
 public:
  using Error::Error;
};

class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace hotring
