#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace plausival {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different atom spaces.
class SpaceMismatch : public Error {
 public:
  SpaceMismatch() : Error("atom spaces do not match") {}
  using Error::Error;
};

// Conditioning on the contradiction 0, which lies outside E_0.
class ZeroCondition : public Error {
 public:
  ZeroCondition() : Error("cannot condition on the zero proposition") {}
};

class InfiniteOdds : public Error {
 public:
  InfiniteOdds() : Error("odds are infinite: PL(notA|B) = 0") {}
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class EmptyBlock : public Error {
 public:
  EmptyBlock() : Error("layout block is empty") {}
};

// f(t) was required to depend only on P(t) but two elements of one fiber
// disagree.
class DependenceViolation : public Error {
 public:
  DependenceViolation(std::string first, std::string second)
      : Error("dependence violated between '" + first + "' and '" + second +
              "'"),
        first_(std::move(first)),
        second_(std::move(second)) {}

  const std::string& first() const noexcept { return first_; }
  const std::string& second() const noexcept { return second_; }

 private:
  std::string first_;
  std::string second_;
};

}  // namespace plausival
