#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include "peiffer/presentation.hpp"
#include "peiffer/sequences.hpp"

namespace peiffer {

/// Presentation text format (UTF-8), `#` starts a comment:
///   gens: x1 x2
///   class: x1
///   class: x2^-1 x1^-1 ; x1
/// One `class:` line per relator class; relators within a class are
/// separated by `;`.
ColoredPresentation parse_presentation(std::istream& in);
ColoredPresentation parse_presentation_file(const std::string& path);

/// Sequence text format: a `seq {` line, one `(<class>:<index> <+|-> @ <word>)`
/// per line (1-based indices, `@ e` for the empty conjugator), then `}`.
IdentitySequence parse_sequence(std::istream& in,
                                std::shared_ptr<const ColoredPresentation> pres);
IdentitySequence parse_sequence_file(const std::string& path,
                                     std::shared_ptr<const ColoredPresentation> pres);

std::string format_sequence(const IdentitySequence& seq);

}  // namespace peiffer
