#include "panast/normalize.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include <fmt/format.h>

#include "bundled_data.hpp"
#include "panast/error.hpp"

namespace panast {
namespace {

bool is_ascii_alnum(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool is_ascii_space(unsigned char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

// Length of the UTF-8 sequence starting at text[i], or 0 if invalid.
std::size_t utf8_length(std::string_view text, std::size_t i) {
    const auto b0 = static_cast<unsigned char>(text[i]);
    std::size_t len = 0;
    std::uint32_t min = 0;
    if ((b0 & 0xE0) == 0xC0) { len = 2; min = 0x80; }
    else if ((b0 & 0xF0) == 0xE0) { len = 3; min = 0x800; }
    else if ((b0 & 0xF8) == 0xF0) { len = 4; min = 0x10000; }
    else return 0;
    if (i + len > text.size()) return 0;
    std::uint32_t cp = b0 & (0x7F >> len);
    for (std::size_t k = 1; k < len; ++k) {
        const auto b = static_cast<unsigned char>(text[i + k]);
        if ((b & 0xC0) != 0x80) return 0;
        cp = (cp << 6) | (b & 0x3F);
    }
    if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return 0;
    return len;
}

bool looks_like_url(std::string_view chunk) {
    // chunk is lowercase ASCII-folded; leading punctuation such as "(" is skipped.
    std::size_t start = 0;
    while (start < chunk.size() && !is_ascii_alnum(static_cast<unsigned char>(chunk[start]))) ++start;
    const std::string_view s = chunk.substr(start);
    if (s.starts_with("www.")) return true;
    const auto sep = s.find("://");
    if (sep == std::string_view::npos || sep == 0) return false;
    if (!(s[0] >= 'a' && s[0] <= 'z')) return false;
    return std::all_of(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(sep), [](char ch) {
        return (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '+' || ch == '.' ||
               ch == '-';
    });
}

// Splits text into whitespace-delimited chunks (case-folded, with non-ASCII
// separators rendered as ' '), drops URL chunks, then splits each chunk into
// tokens. With keep_apostrophes, apostrophes stay inside tokens (and are
// trimmed from token edges); otherwise they are deleted. Scanning stops once
// emit returns false.
template <typename Emit>
void scan(std::string_view text, bool keep_apostrophes, Emit&& emit) {
    thread_local std::string chunk;
    thread_local std::string token;
    chunk.clear();
    token.clear();
    bool more = true;
    auto flush_token = [&] {
        if (keep_apostrophes) {
            const auto first = token.find_first_not_of('\'');
            if (first == std::string::npos) {
                token.clear();
                return;
            }
            const auto last = token.find_last_not_of('\'');
            if (first != 0 || last + 1 != token.size())
                token = token.substr(first, last - first + 1);
        }
        if (!token.empty() && more) more = emit(std::string_view(token));
        token.clear();
    };
    auto flush_chunk = [&] {
        if (chunk.empty()) return;
        if (!looks_like_url(chunk)) {
            for (const char ch : chunk) {
                if (ch == '\'') {
                    if (keep_apostrophes) token.push_back(ch);
                } else if (is_ascii_alnum(static_cast<unsigned char>(ch))) {
                    token.push_back(ch);
                } else {
                    flush_token();
                }
            }
            flush_token();
        }
        chunk.clear();
    };
    // The chunk keeps original punctuation so URLs can be recognized; it is
    // re-split afterwards.
    std::size_t i = 0;
    while (i < text.size() && more) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 0x80) {
            if (is_ascii_space(c)) {
                flush_chunk();
            } else if (is_ascii_alnum(c)) {
                chunk.push_back(static_cast<char>(c >= 'A' && c <= 'Z' ? c + 32 : c));
            } else {
                chunk.push_back(static_cast<char>(c));
            }
            ++i;
            continue;
        }
        const std::size_t len = utf8_length(text, i);
        if (len == 3 && c == 0xE2 && static_cast<unsigned char>(text[i + 1]) == 0x80 &&
            (static_cast<unsigned char>(text[i + 2]) == 0x98 ||
             static_cast<unsigned char>(text[i + 2]) == 0x99)) {
            chunk.push_back('\'');
        } else {
            chunk.push_back(' ');
        }
        i += len == 0 ? 1 : len;
    }
    flush_chunk();
}

constexpr std::size_t kStemCacheLimit = 1 << 16;

struct StemmedToken {
    std::string stem;
    bool stop = false;
};

// Per-thread memo of porter_stem plus the stop-word decision for one
// stop-word list; cleared wholesale when it grows too large or the
// stop-word list changes.
const StemmedToken& stem_token(std::string_view token, const StopWords& stopwords) {
    thread_local std::unordered_map<std::string, StemmedToken, StringHash, std::equal_to<>> cache;
    thread_local std::uint64_t owner = 0;
    if (owner != stopwords.id()) {
        cache.clear();
        owner = stopwords.id();
    }
    if (const auto it = cache.find(token); it != cache.end()) return it->second;
    if (cache.size() >= kStemCacheLimit) cache.clear();
    StemmedToken entry;
    entry.stem = porter_stem(token);
    entry.stop = stopwords.contains(token) || stopwords.contains(entry.stem);
    return cache.emplace(std::string(token), std::move(entry)).first->second;
}

}  // namespace

std::uint64_t StopWords::next_id() noexcept {
    static std::atomic<std::uint64_t> counter{0};
    return ++counter;
}

StopWords parse_stopwords(std::istream& in) {
    StringSet words;
    std::string line;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto last = line.find_last_not_of(" \t\r");
        std::string word = line.substr(first, last - first + 1);
        std::transform(word.begin(), word.end(), word.begin(), [](unsigned char c) {
            return static_cast<char>(c >= 'A' && c <= 'Z' ? c + 32 : c);
        });
        words.insert(std::move(word));
    }
    return StopWords(std::move(words));
}

StopWords load_stopwords_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, fmt::format("cannot open stop-word file '{}'", path));
    return parse_stopwords(in);
}

const StopWords& default_stopwords() {
    static const StopWords words = [] {
        std::istringstream in{std::string(bundled::stopwords_txt())};
        return parse_stopwords(in);
    }();
    return words;
}

std::vector<std::string> stopword_conflicts(const StopWords& stopwords, const Lexicon& lexicon) {
    std::set<std::string> protected_words;
    for (std::string_view marker : kMoodMarkers) {
        protected_words.emplace(marker);
        protected_words.insert(porter_stem(marker));
    }
    for (const auto& scale : lexicon.scales) {
        for (const auto& term : scale) {
            for (const auto& token : term.tokens) {
                protected_words.insert(token);
                protected_words.insert(porter_stem(token));
            }
        }
    }
    std::vector<std::string> out;
    for (const auto& w : protected_words)
        if (stopwords.contains(w)) out.push_back(w);
    return out;
}

bool is_mood_statement(std::string_view text) {
    bool found = false;
    scan(text, true, [&](std::string_view token) {
        found = std::find(std::begin(kMoodMarkers), std::end(kMoodMarkers), token) != std::end(kMoodMarkers);
        return !found;
    });
    return found;
}

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    scan(text, false, [&](std::string_view token) {
        out.emplace_back(token);
        return true;
    });
    return out;
}

TokenViews token_views(std::string_view text, const StopWords& stopwords) {
    TokenViews views;
    scan(text, false, [&](std::string_view token) {
        const StemmedToken& stemmed = stem_token(token, stopwords);
        if (!stemmed.stop) {
            views.word_positions.push_back(views.phrase_tokens.size());
            views.word_tokens.push_back(stemmed.stem);
        }
        views.phrase_tokens.push_back(stemmed.stem);
        return true;
    });
    return views;
}

std::optional<NormalizedTweet> normalize(const TweetRecord& record, const StopWords& stopwords) {
    if (record.text.empty() || !is_mood_statement(record.text)) return std::nullopt;
    TokenViews views = token_views(record.text, stopwords);
    NormalizedTweet tweet;
    tweet.id = record.id;
    tweet.created_at = record.created_at;
    tweet.region = record.region;
    tweet.phrase_tokens = std::move(views.phrase_tokens);
    tweet.word_tokens = std::move(views.word_tokens);
    tweet.word_positions = std::move(views.word_positions);
    return tweet;
}

}  // namespace panast
