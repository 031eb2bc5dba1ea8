#pragma once

#include "arith/lattice.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>

namespace arith {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Input rejected before any solving starts.
class PreconditionError : public Error {
 public:
  enum class Kind {
    NotDominated,
    NotSquareFree,
    NonPositiveLeading,
    DominantNotFullProduct,
    ThresholdPrecondition,
    NegativeEntry,
    NonzeroDiagonal,
    ZeroRowOrColumn,
    NotSquare,
  };

  PreconditionError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(PreconditionError::Kind kind);

/// A configured cap was hit. Carries whatever minimal points had been
/// established when the search stopped; they are sound but maybe incomplete.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(const std::string& what, MinimalSet partial = {})
      : Error(what), partial_(std::move(partial)) {}
  const MinimalSet& partial() const { return partial_; }

 private:
  MinimalSet partial_;
};

class KernelError : public Error {
 public:
  enum class Kind { FullRank, RankDeficient, NonPositiveKernel };

  KernelError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

}  // namespace arith
