#include "panast/classify.hpp"

#include <algorithm>

namespace panast {
namespace {

bool key_matches_at(const std::vector<std::string>& key, const std::vector<std::string>& tokens,
                    std::size_t pos) {
    if (pos + key.size() > tokens.size()) return false;
    return std::equal(key.begin(), key.end(), tokens.begin() + static_cast<std::ptrdiff_t>(pos));
}

bool match_before(const Match& a, const Match& b) {
    if (a.position != b.position) return a.position < b.position;
    if (a.length != b.length) return a.length > b.length;
    if (a.sentiment != b.sentiment) return ordinal(a.sentiment) < ordinal(b.sentiment);
    return a.entry < b.entry;
}

// Calls f(entry) for every entry matching at phrase index `pos`.
// `is_word` says whether phrase_tokens[pos] survived stop-word removal.
template <typename F>
void matches_at(const NormalizedTweet& tweet, const StemmedLexicon& lexicon, std::size_t pos,
                bool is_word, F&& f) {
    for (std::size_t idx : lexicon.starting_with(tweet.phrase_tokens[pos])) {
        const auto& entry = lexicon.entries()[idx];
        if (entry.key.size() == 1) {
            if (is_word) f(entry);
        } else if (key_matches_at(entry.key, tweet.phrase_tokens, pos)) {
            f(entry);
        }
    }
}

}  // namespace

std::vector<Match> match_positions(const NormalizedTweet& tweet, const StemmedLexicon& lexicon) {
    std::vector<Match> out;
    std::size_t next_word = 0;
    for (std::size_t pos = 0; pos < tweet.phrase_tokens.size(); ++pos) {
        const bool is_word =
            next_word < tweet.word_positions.size() && tweet.word_positions[next_word] == pos;
        if (is_word) ++next_word;
        matches_at(tweet, lexicon, pos, is_word, [&](const StemmedLexicon::Entry& entry) {
            out.push_back(Match{pos, entry.key.size(), entry.sentiment, &entry.term, entry.index});
        });
    }
    std::sort(out.begin(), out.end(), match_before);
    return out;
}

std::optional<Sentiment> classify(const NormalizedTweet& tweet, const StemmedLexicon& lexicon) {
    std::size_t next_word = 0;
    for (std::size_t pos = 0; pos < tweet.phrase_tokens.size(); ++pos) {
        const bool is_word =
            next_word < tweet.word_positions.size() && tweet.word_positions[next_word] == pos;
        if (is_word) ++next_word;
        const StemmedLexicon::Entry* best = nullptr;
        matches_at(tweet, lexicon, pos, is_word, [&](const StemmedLexicon::Entry& entry) {
            if (!best || entry.key.size() > best->key.size() ||
                (entry.key.size() == best->key.size() &&
                 ordinal(entry.sentiment) < ordinal(best->sentiment)))
                best = &entry;
        });
        if (best) return best->sentiment;
    }
    return std::nullopt;
}

}  // namespace panast
