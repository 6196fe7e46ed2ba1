#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "panast/lexicon.hpp"
#include "panast/normalize.hpp"

namespace panast {

struct Match {
    std::size_t position = 0;  // index into phrase_tokens
    std::size_t length = 0;    // tokens matched
    Sentiment sentiment{};
    const LexiconTerm* term = nullptr;  // owned by the StemmedLexicon
    std::size_t entry = 0;              // StemmedLexicon entry index
};

/// Every lexicon occurrence in the tweet, ordered by position, then longer
/// match first, then sentiment ordinal. Multi-word terms are matched as
/// contiguous runs of phrase_tokens; single-word terms against word_tokens.
std::vector<Match> match_positions(const NormalizedTweet& tweet, const StemmedLexicon& lexicon);

/// Sentiment of the earliest match; nullopt when the tweet has none.
std::optional<Sentiment> classify(const NormalizedTweet& tweet, const StemmedLexicon& lexicon);

}  // namespace panast
