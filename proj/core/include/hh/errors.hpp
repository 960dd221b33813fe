#pragma once

#include <stdexcept>
#include <string>

namespace hh {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// symexpr
struct NegativePowerOfSum : Error {
    explicit NegativePowerOfSum(const std::string& w) : Error(w) {}
};
struct NonMonomialNegativePower : Error {
    explicit NonMonomialNegativePower(const std::string& w) : Error(w) {}
};
struct DomainError : Error {
    explicit DomainError(const std::string& w) : Error(w) {}
};
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& w) : Error(w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(w) {}
};

// poisson
struct UnknownSymbol : Error {
    explicit UnknownSymbol(const std::string& w) : Error(w) {}
};
struct WrongMode : Error {
    explicit WrongMode(const std::string& w) : Error(w) {}
};
struct NotLiftable : Error {
    explicit NotLiftable(const std::string& w) : Error(w) {}
};

// catalog / realize
struct BadDegrees : Error {
    explicit BadDegrees(const std::string& w) : Error(w) {}
};
struct NoIntegral : Error {
    explicit NoIntegral(const std::string& w) : Error(w) {}
};

// dynamics / cli
struct UnboundParameter : Error {
    explicit UnboundParameter(const std::string& w) : Error(w) {}
};
struct ConfigError : Error {
    explicit ConfigError(const std::string& w) : Error(w) {}
};

} // namespace hh
