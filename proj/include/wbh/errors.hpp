#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wbh {

// Every error the library raises derives from Error, so callers that only
// care about "something went wrong" can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public Error {
 public:
  NotInvertible(std::size_t rows, std::size_t cols, std::size_t rank)
      : Error("not invertible: " + std::to_string(rows) + "x" + std::to_string(cols) +
              " matrix of rank " + std::to_string(rank)),
        rows_(rows), cols_(cols), rank_(rank) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rank_; }

 private:
  std::size_t rows_, cols_, rank_;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : Error("syntax error at " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A construction refused to run because the input failed a required check.
class PrerequisiteAxiomFailed : public Error {
 public:
  explicit PrerequisiteAxiomFailed(std::string axiom_id)
      : Error("prerequisite axiom failed: " + axiom_id), axiom_id_(std::move(axiom_id)) {}
  const std::string& axiom_id() const { return axiom_id_; }

 private:
  std::string axiom_id_;
};

class FactorizationFailed : public Error {
 public:
  using Error::Error;
};

class GaloisNotInvertible : public Error {
 public:
  GaloisNotInvertible(std::size_t rows, std::size_t cols, std::size_t rank)
      : Error("Galois map not invertible: " + std::to_string(rows) + "x" + std::to_string(cols) +
              " of rank " + std::to_string(rank)),
        rank_(rank) {}
  std::size_t rank() const { return rank_; }

 private:
  std::size_t rank_;
};

class EquivalenceViolation : public Error {
 public:
  using Error::Error;
};

class RoundTripFailed : public Error {
 public:
  RoundTripFailed(const std::string& what, std::size_t rank_defect)
      : Error(what + " (rank defect " + std::to_string(rank_defect) + ")"), rank_defect_(rank_defect) {}
  std::size_t rank_defect() const { return rank_defect_; }

 private:
  std::size_t rank_defect_;
};

// Something the theory guarantees did not hold. Means a bug or a bad instance.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  SchemaError(const std::string& locator, const std::string& what)
      : Error(locator + ": " + what), locator_(locator) {}
  const std::string& locator() const { return locator_; }

 private:
  std::string locator_;
};

class IndexOutOfRange : public SchemaError {
 public:
  using SchemaError::SchemaError;
};

class InvalidSpec : public Error {
 public:
  using Error::Error;
};

class NotAssociative : public Error {
 public:
  using Error::Error;
};

class NoUnit : public Error {
 public:
  using Error::Error;
};

}  // namespace wbh
