#pragma once

#include <vector>

#include "nlistress/corpus.hpp"
#include "nlistress/resources.hpp"

namespace nlistress {

// Heuristic entity filter: true iff some alphabetic token is capitalized
// (initial uppercase, rest lowercase, length >= 2), is not a stop word, and is
// either not sentence-initial or appears in the name gazetteer. `matched`,
// when non-null, receives the index of the first qualifying token.
bool contains_named_entity(const std::vector<Token>& tokens, const Resources& resources,
                           std::size_t* matched = nullptr);

} // namespace nlistress
