#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace reposim {

// Splits an identifier at snake/camel boundaries: non-alphanumeric characters
// separate segments, a lowercase letter or digit followed by an uppercase
// letter starts a new segment, and an uppercase run followed by a lowercase
// letter breaks before its last uppercase ("HTTPServer" -> http, server).
// Digits stay attached to the segment they follow. Output is lowercased;
// empty segments are dropped. Bytes >= 0x80 are treated as caseless letters.
std::vector<std::string> split_subtokens(std::string_view token);

// Folds segments shorter than three characters into the nearest segment of
// length >= 3, preferring the preceding one; runs of short segments fold
// left to right as a block. When no segment reaches length 3 the whole input
// collapses into a single sub-token. Concatenation order is preserved.
std::vector<std::string> merge_short(const std::vector<std::string>& subtokens);

// split -> merge -> length-gated stemming for one identifier.
std::vector<std::string> process_identifier(std::string_view token);

}  // namespace reposim
