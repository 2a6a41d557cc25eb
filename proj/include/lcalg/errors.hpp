#pragma once

#include <stdexcept>
#include <string>

namespace lcalg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A bracket or symbol outside the materialized truncation was required.
class TruncationExceeded : public Error {
public:
    using Error::Error;
};

class InvalidStructure : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

class MissingAction : public Error {
public:
    using Error::Error;
};

class NotASolution : public Error {
public:
    using Error::Error;
};

class NotVirasoroAtZero : public Error {
public:
    using Error::Error;
};

class HypothesisViolated : public Error {
public:
    using Error::Error;
};

class MalformedBracket : public Error {
public:
    using Error::Error;
};

/// Spec-file level errors. Line and column are 1-based; 0 means unknown.
class SpecError : public Error {
public:
    SpecError(const std::string& what, int line = 0, int column = 0)
        : Error(format(what, line, column)), line_(line), column_(column)
    {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& what, int line, int column)
    {
        if (line == 0 && column == 0) return what;
        if (line == 0) return "column " + std::to_string(column) + ": " + what;
        return std::to_string(line) + ":" + std::to_string(column) + ": " + what;
    }

    int line_;
    int column_;
};

class ParseError : public SpecError {
public:
    using SpecError::SpecError;
};

class UnknownGenerator : public SpecError {
public:
    using SpecError::SpecError;
};

class DuplicateDefinition : public SpecError {
public:
    using SpecError::SpecError;
};

}  // namespace lcalg
