#pragma once

#include <stdexcept>
#include <string>

namespace dblcat {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Enumeration hit its candidate cap.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

// Parameters or data that violate an operation's preconditions.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// Malformed JSON or shape strings.
class ParseError : public Error {
public:
    using Error::Error;
};

inline constexpr unsigned long long kDefaultBudget = 10'000'000ULL;

}  // namespace dblcat
