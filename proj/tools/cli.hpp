#pragma once

#include "qmz/word.hpp"

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmz::cli {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// "[s1,...,sd;a1,...,ad]" with an optional "@N" suffix, whitespace-insensitive.
// Without a suffix the level is `level`, or 1 if that is empty too. A suffix
// that disagrees with `level` is an error.
MdfIndex parse_index(const std::string& text, std::optional<unsigned> level = std::nullopt);
std::string render_index(const MdfIndex& idx);

// args excludes the program name. Returns 0 on success, 1 on domain error, 2 on usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qmz::cli
