#pragma once

#include "scoh/superfun.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace scoh {

class DOp;

/// Reports the byte offset and the offending token text.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t pos, std::string token, const std::string& what)
      : std::runtime_error(what + " at position " + std::to_string(pos) + " near '" + token + "'"),
        pos_(pos),
        token_(std::move(token)) {}
  std::size_t pos() const { return pos_; }
  const std::string& token() const { return token_; }

private:
  std::size_t pos_;
  std::string token_;
};

SuperFun parse_superfun(std::string_view s);

/// Accepts both the etabar normal form and the (dx, dx*dtheta) form, mixed freely.
DOp parse_dop(std::string_view s, const Rat& src, const Rat& dst);

}  // namespace scoh
