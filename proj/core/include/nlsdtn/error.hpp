#pragma once

#include <stdexcept>
#include <string>

namespace nlsdtn {

/// Base class for every error raised by the library. The category decides the
/// CLI exit code (see tools/nlsdtn.cpp).
class Error : public std::runtime_error {
public:
    enum class Category { Domain, Numerical, Config, Io };

    Error(Category category, const std::string& what)
        : std::runtime_error(what), category_(category) {}

    Category category() const noexcept { return category_; }

private:
    Category category_;
};

/// Violated precondition on user-supplied data (mean-zero, branch constraints, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(Category::Domain, what) {}
};

/// A computation could not reach its accuracy contract.
class NumericalError : public Error {
public:
    explicit NumericalError(const std::string& what) : Error(Category::Numerical, what) {}
};

class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& what) : Error(Category::Config, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(Category::Io, what) {}
};

}  // namespace nlsdtn
