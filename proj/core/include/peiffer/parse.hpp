#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "peiffer/presentation.hpp"
#include "peiffer/words.hpp"

namespace peiffer {

struct ParseError : Error {
  ParseError(std::string msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

/// Parses the word grammar shared by all file formats and CLI arguments:
///   atoms are generator names; `u^-1` / `u^<int>` integer powers;
///   `u^v` conjugation v^-1 u v (right-associative, binds tighter than
///   juxtaposition); `[u,v,...]` left-normed commutators; whitespace
///   juxtaposition; parentheses for grouping. `e` denotes the empty word
///   unless the alphabet declares a generator of that name.
Word parse_word(std::string_view text, const Alphabet& alphabet);

}  // namespace peiffer
