#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "panast/lexicon.hpp"
#include "panast/timeutil.hpp"

namespace panast {

inline constexpr std::size_t kMaxTextBytes = 4096;

struct TweetRecord {
    std::string id;
    Timestamp created_at{};
    std::string text;
    std::optional<std::string> lang;
    std::optional<std::string> region;
};

struct NormalizedTweet {
    std::string id;
    Timestamp created_at{};
    std::optional<std::string> region;
    // Case-folded, URL/punctuation stripped, stemmed; stop words retained.
    std::vector<std::string> phrase_tokens;
    // phrase_tokens without stop words.
    std::vector<std::string> word_tokens;
    // word_positions[i] is the index in phrase_tokens of word_tokens[i].
    std::vector<std::size_t> word_positions;
};

using StringSet = std::unordered_set<std::string, StringHash, std::equal_to<>>;

class StopWords {
public:
    StopWords() : id_(next_id()) {}
    explicit StopWords(StringSet words) : words_(std::move(words)), id_(next_id()) {}

    bool contains(std::string_view word) const { return words_.find(word) != words_.end(); }
    std::size_t size() const noexcept { return words_.size(); }
    const StringSet& words() const noexcept { return words_; }

    /// Distinct for every constructed list; copies share the id of their
    /// source since their contents are equal.
    std::uint64_t id() const noexcept { return id_; }

private:
    static std::uint64_t next_id() noexcept;

    StringSet words_;
    std::uint64_t id_;
};

/// One lowercase word per line; '#' comment lines and blanks ignored.
StopWords parse_stopwords(std::istream& in);
StopWords load_stopwords_file(const std::string& path);
const StopWords& default_stopwords();

/// The first-person mood markers. "i'm" is the contraction form checked
/// before apostrophes are removed.
inline constexpr std::string_view kMoodMarkers[] = {"i'm", "i", "am", "feeling", "me", "myself"};

/// Stop words that would break matching: mood markers, and any lexicon token
/// (raw or stemmed) of a scored term. Empty for a usable list.
std::vector<std::string> stopword_conflicts(const StopWords& stopwords, const Lexicon& lexicon);

/// True iff some mood marker occurs as a whole token in the case-folded text.
bool is_mood_statement(std::string_view text);

/// Case-folds, drops URL tokens, deletes apostrophes, and splits on every
/// other non-alphanumeric character. Invalid UTF-8 is replaced first; all
/// non-ASCII characters act as separators.
std::vector<std::string> tokenize(std::string_view text);

inline std::string stem(std::string_view token) { return porter_stem(token); }

struct TokenViews {
    std::vector<std::string> phrase_tokens;
    std::vector<std::string> word_tokens;
    std::vector<std::size_t> word_positions;
};

/// tokenize + stem + stop-word removal, without the mood filter. A token is
/// dropped from the word view when either its surface form or its stem is a
/// stop word.
TokenViews token_views(std::string_view text, const StopWords& stopwords);

/// Full cleaning pipeline. nullopt means the record was rejected by the mood
/// filter.
std::optional<NormalizedTweet> normalize(const TweetRecord& record, const StopWords& stopwords);

}  // namespace panast
