#pragma once

#include <stdexcept>
#include <string>

namespace cyclotype {

/// Input outside the mathematical domain of an operation (inadmissible partition, bad labels, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Bundled data file missing, malformed, or internally inconsistent.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// A randomized check could not reach a unanimous verdict.
struct GenericityError : std::runtime_error {
    explicit GenericityError(const std::string& what) : std::runtime_error(what) {}
};

#define CYCLOTYPE_REQUIRE(cond, msg)                      \
    do {                                                  \
        if (!(cond)) throw ::cyclotype::DomainError(msg); \
    } while (0)

}  // namespace cyclotype
