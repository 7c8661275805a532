#pragma once

#include <stdexcept>
#include <string>

namespace techrank {

// Every failure raised by the library derives from Error. The category
// decides how the command-line front end maps it onto an exit code.
class Error : public std::runtime_error {
public:
    enum class Category { Config, Data, Numeric };

    Error(Category category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    Category category() const noexcept { return category_; }

private:
    Category category_;
};

/// Graph construction rejected its input (empty pair list, isolated node).
class ConstructionError : public Error {
public:
    explicit ConstructionError(const std::string& what) : Error(Category::Data, what) {}
};

/// Degree powers overflowed or underflowed for the requested (alpha, beta).
class ParameterRangeError : public Error {
public:
    explicit ParameterRangeError(const std::string& what) : Error(Category::Numeric, what) {}
};

/// Spearman correlation is undefined (length mismatch, constant input).
class CorrelationError : public Error {
public:
    explicit CorrelationError(const std::string& what) : Error(Category::Numeric, what) {}
};

/// No grid point produced a usable correlation.
class CalibrationError : public Error {
public:
    explicit CalibrationError(const std::string& what) : Error(Category::Numeric, what) {}
};

/// A factor could not be normalized because its maximum is zero.
class DegenerateFactorError : public Error {
public:
    explicit DegenerateFactorError(const std::string& what) : Error(Category::Data, what) {}
};

/// Two structures that must share an entity registry do not.
class AlignmentError : public Error {
public:
    explicit AlignmentError(const std::string& what) : Error(Category::Data, what) {}
};

/// Input file could not be read or its header is malformed.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(Category::Data, what) {}
};

/// The ingestion pipeline ended with nothing to rank.
class PipelineError : public Error {
public:
    explicit PipelineError(const std::string& what) : Error(Category::Data, what) {}
};

/// Invalid run configuration, profile or parameters.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(Category::Config, what) {}
};

}  // namespace techrank
