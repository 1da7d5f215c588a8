#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "af/framework.hpp"

namespace af {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

  private:
    int line_;
};

/// Fact syntax: `arg(NAME).` and `att(NAME,NAME).` with NAME = [A-Za-z0-9_]+,
/// one fact per line. Blank lines and lines starting with `#` are ignored;
/// whitespace around tokens is ignored. Ids follow declaration order.
Framework parse_apx(std::string_view text);

/// Canonical form: all arg facts in id order, then att facts in (source,
/// target) order. Reparses to an identical framework.
std::string serialize_apx(const Framework& f);

}  // namespace af
