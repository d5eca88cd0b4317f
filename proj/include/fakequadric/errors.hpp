#pragma once

#include <stdexcept>
#include <string>

namespace fakequadric {

// Raised when two independent routes to the same quantity disagree
// (closed form vs generic formula, interpolated restriction vs direct
// evaluation). Always carries both conflicting values in the message.
class internal_consistency_error : public std::logic_error {
public:
    explicit internal_consistency_error(const std::string& what)
        : std::logic_error(what) {}
};

} // namespace fakequadric
