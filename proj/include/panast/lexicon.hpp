#pragma once

#include <cstddef>
#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "panast/sentiment.hpp"
#include "panast/stemmer.hpp"

namespace panast {

inline constexpr std::size_t kMaxTermTokens = 4;

struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
};

struct LexiconTerm {
    std::string surface;              // lowercase, tokens joined by single spaces
    std::vector<std::string> tokens;  // 1..kMaxTermTokens words
    Sentiment sentiment{};

    bool operator==(const LexiconTerm&) const = default;
};

/// Builds a term from its surface text; whitespace runs collapse to one space.
LexiconTerm make_term(std::string_view surface, Sentiment sentiment);

/// Expected number of terms per scored scale.
const PerSentiment<std::size_t>& expected_scale_sizes() noexcept;

struct Lexicon {
    PerSentiment<std::vector<LexiconTerm>> scales;
    // General-dimension lists; kept for reference, never used for scoring.
    std::vector<std::string> positive_affect;
    std::vector<std::string> negative_affect;

    const std::vector<LexiconTerm>& operator[](Sentiment s) const { return scales[ordinal(s)]; }
    std::size_t term_count() const;
};

/// Parses the `<scale-name>\t<term>` data format. Lines starting with '#'
/// and blank lines are ignored. Throws Error(Config) on unknown scale names
/// or malformed lines. Does not validate scale sizes; see validate().
Lexicon parse_lexicon(std::istream& in);

/// Loads and validates a lexicon file. Throws Error(Config) on violations.
Lexicon load_lexicon_file(const std::string& path);

/// The bundled lexicon. Throws Error(Config) if the bundled data is invalid.
const Lexicon& load_default();

struct Violation {
    enum class Kind { CountMismatch, DuplicateTerm, MalformedTerm };
    Kind kind;
    std::string message;
};

/// Reports every invariant violation; empty iff the lexicon is valid.
std::vector<Violation> validate(const Lexicon& lexicon);

/// Stemmed lookup structure used for matching.
class StemmedLexicon {
public:
    struct Entry {
        std::vector<std::string> key;  // stemmed tokens
        Sentiment sentiment{};
        LexiconTerm term;
        std::size_t index = 0;  // position in entries()
    };

    const std::vector<Entry>& entries() const noexcept { return entries_; }
    std::size_t max_phrase_len() const noexcept { return max_phrase_len_; }

    const Entry* find(const std::vector<std::string>& key) const;

    /// Entries whose key starts with `first`, longest key first.
    const std::vector<std::size_t>& starting_with(std::string_view first) const;

    const std::string& stemmer_id() const noexcept { return stemmer_id_; }

private:
    friend StemmedLexicon stem_lexicon(const Lexicon&, const StemFn&, std::string_view);

    std::vector<Entry> entries_;
    std::map<std::vector<std::string>, std::size_t> by_key_;
    std::unordered_map<std::string, std::vector<std::size_t>, StringHash, std::equal_to<>> by_first_;
    std::size_t max_phrase_len_ = 0;
    std::string stemmer_id_;
};

/// Stems every token of every scored term. Throws Error(Config) naming both
/// terms if two scored terms reduce to the same key.
StemmedLexicon stem_lexicon(const Lexicon& lexicon, const StemFn& stemmer,
                            std::string_view stemmer_id = kStemmerId);

/// stem_lexicon with porter_stem.
StemmedLexicon stem_lexicon(const Lexicon& lexicon);

}  // namespace panast
