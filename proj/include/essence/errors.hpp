#pragma once

#include <stdexcept>
#include <string>

namespace essence {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Markup-level failure in an .owx input.
class ParseError : public Error {
 public:
  ParseError(std::string message, int line, int col)
      : Error(std::move(message) + " (line " + std::to_string(line) + ", col " +
              std::to_string(col) + ")"),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// Structural problem in a project/state-table/events file.
class SchemaError : public Error {
 public:
  SchemaError(std::string path, std::string message)
      : Error(path + ": " + message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class DanglingReferenceError : public SchemaError {
 public:
  DanglingReferenceError(std::string path, std::string iri)
      : SchemaError(std::move(path), "dangling reference " + iri),
        iri_(std::move(iri)) {}
  const std::string& iri() const { return iri_; }

 private:
  std::string iri_;
};

class UndeclaredEntityError : public Error {
 public:
  explicit UndeclaredEntityError(std::string iri)
      : Error("undeclared entity " + iri), iri_(std::move(iri)) {}
  const std::string& iri() const { return iri_; }

 private:
  std::string iri_;
};

class CycleError : public Error {
 public:
  CycleError(std::string sub, std::string super)
      : Error("SubClassOf(" + sub + ", " + super +
              ") would close a subclass cycle"),
        sub_(std::move(sub)),
        super_(std::move(super)) {}
  const std::string& sub() const { return sub_; }
  const std::string& super() const { return super_; }

 private:
  std::string sub_;
  std::string super_;
};

class DuplicateStateError : public Error {
 public:
  DuplicateStateError(std::string alpha, std::string state)
      : Error("duplicate state '" + state + "' for alpha " + alpha) {}
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace essence
