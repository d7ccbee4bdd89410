#pragma once

#include <stdexcept>
#include <string>

namespace qmz {

// Raised for inputs outside an operation's mathematical domain.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qmz
