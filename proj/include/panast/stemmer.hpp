#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace panast {

/// Identifier written into output metadata so results can be traced to the
/// exact stemming algorithm.
inline constexpr std::string_view kStemmerId = "porter-1980-fixpoint";

/// One pass of Porter's English suffix-stripping stemmer (the original 1980
/// algorithm, steps 1a through 5b). Input must be lowercase ASCII
/// alphanumerics; other input is returned unchanged.
std::string porter_stem_once(std::string_view word);

/// Porter passes repeated until the word stops changing, so that
/// porter_stem(porter_stem(w)) == porter_stem(w). This is the stemmer used
/// for both the lexicon and tweets.
std::string porter_stem(std::string_view word);

/// Any deterministic word -> word mapping used to build a stemmed lexicon.
using StemFn = std::function<std::string(std::string_view)>;

}  // namespace panast
