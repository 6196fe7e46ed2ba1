#include "panast/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "bundled_data.hpp"
#include "panast/error.hpp"

namespace panast {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_words(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream in{std::string(s)};
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

std::string join(const std::vector<std::string>& tokens, std::string_view sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i) out += sep;
        out += tokens[i];
    }
    return out;
}

bool is_lower_word(std::string_view w) {
    return !w.empty() && std::all_of(w.begin(), w.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
    });
}

}  // namespace

LexiconTerm make_term(std::string_view surface, Sentiment sentiment) {
    LexiconTerm term;
    term.tokens = split_words(surface);
    term.surface = join(term.tokens);
    term.sentiment = sentiment;
    return term;
}

const PerSentiment<std::size_t>& expected_scale_sizes() noexcept {
    // Fear, Sadness, Guilt, Hostility, Shyness, Fatigue, Surprise, Joviality,
    // Self-assurance, Attentiveness, Serenity.
    static constexpr PerSentiment<std::size_t> sizes{6, 5, 6, 6, 4, 4, 3, 8, 6, 4, 3};
    return sizes;
}

std::size_t Lexicon::term_count() const {
    std::size_t n = 0;
    for (const auto& scale : scales) n += scale.size();
    return n;
}

Lexicon parse_lexicon(std::istream& in) {
    Lexicon lexicon;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string_view::npos)
            throw Error(ErrorKind::Config, fmt::format("lexicon line {}: expected <scale>\\t<term>", line_no));
        const std::string_view scale = trim(line.substr(0, tab));
        const std::string_view surface = trim(line.substr(tab + 1));
        if (surface.empty())
            throw Error(ErrorKind::Config, fmt::format("lexicon line {}: empty term", line_no));

        if (scale == "positive-affect") {
            lexicon.positive_affect.push_back(make_term(surface, {}).surface);
        } else if (scale == "negative-affect") {
            lexicon.negative_affect.push_back(make_term(surface, {}).surface);
        } else if (auto s = parse_sentiment(scale); s && name(*s) == scale) {
            lexicon.scales[ordinal(*s)].push_back(make_term(surface, *s));
        } else {
            throw Error(ErrorKind::Config,
                        fmt::format("lexicon line {}: unknown scale '{}'", line_no, scale));
        }
    }
    return lexicon;
}

std::vector<Violation> validate(const Lexicon& lexicon) {
    std::vector<Violation> out;
    const auto& expected = expected_scale_sizes();
    std::map<std::string, Sentiment> seen;
    for (Sentiment s : kAllSentiments) {
        const auto& terms = lexicon[s];
        if (terms.size() != expected[ordinal(s)]) {
            out.push_back({Violation::Kind::CountMismatch,
                           fmt::format("{}: expected {} terms, found {}", name(s),
                                       expected[ordinal(s)], terms.size())});
        }
        for (const auto& term : terms) {
            const bool tokens_ok =
                !term.tokens.empty() && term.tokens.size() <= kMaxTermTokens &&
                std::all_of(term.tokens.begin(), term.tokens.end(), is_lower_word);
            if (!tokens_ok || term.surface != join(term.tokens) || term.sentiment != s) {
                out.push_back({Violation::Kind::MalformedTerm,
                               fmt::format("{}: malformed term '{}'", name(s), term.surface)});
            }
            auto [it, inserted] = seen.emplace(term.surface, s);
            if (!inserted) {
                out.push_back({Violation::Kind::DuplicateTerm,
                               fmt::format("'{}' appears in both {} and {}", term.surface,
                                           name(it->second), name(s))});
            }
        }
    }
    return out;
}

namespace {

void throw_if_invalid(const Lexicon& lexicon, std::string_view origin) {
    const auto violations = validate(lexicon);
    if (violations.empty()) return;
    std::string msg = fmt::format("invalid lexicon ({}):", origin);
    for (const auto& v : violations) msg += "\n  " + v.message;
    throw Error(ErrorKind::Config, msg);
}

}  // namespace

Lexicon load_lexicon_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, fmt::format("cannot open lexicon file '{}'", path));
    Lexicon lexicon = parse_lexicon(in);
    throw_if_invalid(lexicon, path);
    return lexicon;
}

const Lexicon& load_default() {
    static const Lexicon lexicon = [] {
        std::istringstream in{std::string(bundled::lexicon_tsv())};
        Lexicon lex = parse_lexicon(in);
        throw_if_invalid(lex, "bundled");
        return lex;
    }();
    return lexicon;
}

const StemmedLexicon::Entry* StemmedLexicon::find(const std::vector<std::string>& key) const {
    const auto it = by_key_.find(key);
    return it == by_key_.end() ? nullptr : &entries_[it->second];
}

const std::vector<std::size_t>& StemmedLexicon::starting_with(std::string_view first) const {
    static const std::vector<std::size_t> none;
    const auto it = by_first_.find(first);
    return it == by_first_.end() ? none : it->second;
}

StemmedLexicon stem_lexicon(const Lexicon& lexicon, const StemFn& stemmer, std::string_view stemmer_id) {
    StemmedLexicon out;
    out.stemmer_id_ = std::string(stemmer_id);
    for (Sentiment s : kAllSentiments) {
        for (const auto& term : lexicon[s]) {
            StemmedLexicon::Entry entry;
            entry.sentiment = s;
            entry.term = term;
            entry.index = out.entries_.size();
            for (const auto& token : term.tokens) entry.key.push_back(stemmer(token));
            const auto [it, inserted] = out.by_key_.emplace(entry.key, entry.index);
            if (!inserted) {
                const auto& other = out.entries_[it->second];
                throw Error(ErrorKind::Config,
                            fmt::format("stemmed key '{}' shared by '{}' ({}) and '{}' ({})",
                                        join(entry.key), other.term.surface, name(other.sentiment),
                                        term.surface, name(s)));
            }
            out.max_phrase_len_ = std::max(out.max_phrase_len_, entry.key.size());
            out.entries_.push_back(std::move(entry));
        }
    }
    for (const auto& entry : out.entries_) out.by_first_[entry.key.front()].push_back(entry.index);
    for (auto& [first, list] : out.by_first_) {
        std::stable_sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
            const auto& ea = out.entries_[a];
            const auto& eb = out.entries_[b];
            if (ea.key.size() != eb.key.size()) return ea.key.size() > eb.key.size();
            return ordinal(ea.sentiment) < ordinal(eb.sentiment);
        });
    }
    return out;
}

StemmedLexicon stem_lexicon(const Lexicon& lexicon) {
    return stem_lexicon(lexicon, [](std::string_view w) { return porter_stem(w); });
}

}  // namespace panast
