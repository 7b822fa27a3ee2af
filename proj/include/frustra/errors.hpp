#pragma once

#include <stdexcept>
#include <string>

namespace frustra {

/// Malformed input data (edge lists, CSV matrices, manifests).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A caller broke an operation's contract (dimension mismatch, bad range).
class ContractError : public std::invalid_argument {
public:
    explicit ContractError(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace frustra
