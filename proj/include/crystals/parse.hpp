#pragma once

#include <stdexcept>
#include <string>

#include "crystals/ratfun.hpp"

namespace crystals::alg {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parses the small expression grammar used for text serialization:
// terms like `q * t1^a * c2^b` combined with `+ - * / ( )`. Exponents may
// be negative; variable names are interned into ctx on first use.
RF parse_rf(const std::string& text, const CtxPtr& ctx);

}  // namespace crystals::alg
