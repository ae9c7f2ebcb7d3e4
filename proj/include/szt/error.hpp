#ifndef SZT_ERROR_HPP
#define SZT_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace szt
{

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A caller violated an operation's precondition (distinct from a failed inequality).
struct PreconditionError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct BudgetError : Error {
    BudgetError(const std::string &what, std::uint64_t required, std::uint64_t budget)
        : Error(what + ": requires " + std::to_string(required) + ", budget " + std::to_string(budget)),
          required(required), budget(budget)
    {
    }
    std::uint64_t required;
    std::uint64_t budget;
};

} // namespace szt

#endif
