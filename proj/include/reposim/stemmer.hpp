#pragma once

#include <string>
#include <string_view>

namespace reposim {

// English Snowball (Porter2) stemmer. Expects a lowercase word; words of two
// letters or fewer come back unchanged.
std::string snowball_english(std::string_view word);

// Length-gated stemming for the sub-token pipeline: only sub-tokens longer
// than six characters are stemmed. Sub-tokens containing non-ASCII bytes pass
// through untouched.
std::string stem_subtoken(std::string_view subtoken);

}  // namespace reposim
