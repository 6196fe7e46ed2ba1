#include <sstream>

#include "doctest.h"
#include "panast/error.hpp"
#include "panast/normalize.hpp"
#include "synthetic.hpp"

using namespace panast;

using Tokens = std::vector<std::string>;

namespace {

TweetRecord record(std::string text) {
    return testing::make_record("1", std::move(text), Date{std::chrono::year{2009} / 5 / 1});
}

}  // namespace

TEST_CASE("mood statement filter") {
    CHECK(is_mood_statement("I am so scared about swine flu"));
    CHECK_FALSE(is_mood_statement("Breaking news: earthquake hits the coast"));
    CHECK(is_mood_statement("Nobody understands me"));
    CHECK(is_mood_statement("I'm tired"));
    CHECK(is_mood_statement("I\xE2\x80\x99m tired"));  // typographic apostrophe
    CHECK(is_mood_statement("FEELING great"));
    CHECK(is_mood_statement("talking to myself again"));
    CHECK(is_mood_statement("so am I."));
    CHECK(is_mood_statement("'I'm' quoted"));

    // Whole tokens only.
    CHECK_FALSE(is_mood_statement("Iceland meets Amsterdam"));
    CHECK_FALSE(is_mood_statement("media memes"));
    CHECK_FALSE(is_mood_statement("feelings run high"));
    CHECK_FALSE(is_mood_statement("Im tired"));
    CHECK_FALSE(is_mood_statement(""));
    // Markers inside URLs do not count.
    CHECK_FALSE(is_mood_statement("see http://example.com/i/am/me"));
}

TEST_CASE("tokenize") {
    CHECK(tokenize("I am so scared about swine flu") == Tokens{"i", "am", "so", "scared", "about", "swine", "flu"});
    CHECK(tokenize("check http://t.co/xyz NOW!!") == Tokens{"check", "now"});
    CHECK(tokenize("") == Tokens{});
    CHECK(tokenize("Port-au-Prince is devastated") == Tokens{"port", "au", "prince", "is", "devastated"});
    CHECK(tokenize("I'm fine, don't worry") == Tokens{"im", "fine", "dont", "worry"});
    CHECK(tokenize("@user loves #swineflu") == Tokens{"user", "loves", "swineflu"});
    CHECK(tokenize("visit www.example.com (https://x.y/z) ok") == Tokens{"visit", "ok"});
    CHECK(tokenize("A330 crash: 216 dead") == Tokens{"a330", "crash", "216", "dead"});
    CHECK(tokenize("  \t\n ") == Tokens{});
}

TEST_CASE("tokenize handles non-ASCII and invalid UTF-8") {
    CHECK(tokenize("caf\xC3\xA9 time") == Tokens{"caf", "time"});
    CHECK(tokenize("bad\xFF\xFEinput") == Tokens{"bad", "input"});
    CHECK(tokenize("trunc\xE2\x80") == Tokens{"trunc"});
    CHECK(tokenize("\xF0\x9F\x98\x80happy") == Tokens{"happy"});
    for (const auto& t : tokenize("\xC3\x28 mixed \xED\xA0\x80 bytes \x80"))
        for (char c : t) CHECK(((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')));
}

TEST_CASE("bundled stop words keep markers and phrase words") {
    const StopWords& sw = default_stopwords();
    CHECK(sw.size() > 100);
    for (const char* kept : {"i", "am", "me", "myself", "feeling", "at", "with", "self"}) CHECK_FALSE(sw.contains(kept));
    for (const char* dropped : {"so", "about", "the", "is"}) CHECK(sw.contains(dropped));
    CHECK(stopword_conflicts(sw, load_default()).empty());

    std::istringstream bad("the\nat\nsad\n");
    const auto conflicts = stopword_conflicts(parse_stopwords(bad), load_default());
    CHECK(conflicts == std::vector<std::string>{"at", "sad"});
}

TEST_CASE("normalize reproduces the worked example") {
    const auto tweet = normalize(record("I am so scared about swine flu"), default_stopwords());
    REQUIRE(tweet.has_value());
    CHECK(tweet->word_tokens == Tokens{"i", "am", "scare", "swine", "flu"});
    CHECK(tweet->phrase_tokens == Tokens{"i", "am", "so", "scare", "about", "swine", "flu"});
    CHECK(tweet->word_positions == std::vector<std::size_t>{0, 1, 3, 5, 6});
    CHECK(tweet->id == "1");
}

TEST_CASE("normalize rejects non-mood and empty records") {
    CHECK_FALSE(normalize(record("Stock prices fell sharply"), default_stopwords()).has_value());
    CHECK_FALSE(normalize(record(""), default_stopwords()).has_value());
}

TEST_CASE("normalized token invariants hold on random tweets") {
    testing::RandomCorpus gen(7);
    const StopWords& sw = default_stopwords();
    for (int i = 0; i < 500; ++i) {
        const std::string text = gen.text();
        const TokenViews v = token_views(text, sw);
        REQUIRE(v.word_tokens.size() == v.word_positions.size());
        // word view is a subsequence of the phrase view at the recorded positions
        for (std::size_t k = 0; k < v.word_tokens.size(); ++k) {
            REQUIRE(v.word_positions[k] < v.phrase_tokens.size());
            CHECK(v.phrase_tokens[v.word_positions[k]] == v.word_tokens[k]);
            if (k > 0) CHECK(v.word_positions[k] > v.word_positions[k - 1]);
        }
        for (const auto& t : v.phrase_tokens) {
            CHECK_FALSE(t.empty());
            for (char c : t) CHECK(((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')));
        }
        // Token-level idempotence: re-normalizing the joined word view.
        std::string joined;
        for (const auto& t : v.word_tokens) joined += (joined.empty() ? "" : " ") + t;
        CHECK_MESSAGE(token_views(joined, sw).word_tokens == v.word_tokens, text);

        // Purity.
        const auto r = record(text);
        const auto a = normalize(r, sw);
        const auto b = normalize(r, sw);
        REQUIRE(a.has_value() == b.has_value());
        if (a) CHECK(a->word_tokens == b->word_tokens);
    }
}

TEST_CASE("text over the byte limit is still tokenizable but rejected at parse time") {
    std::string big(kMaxTextBytes + 1, 'a');
    const std::string line = R"({"id":"1","created_at":"2009-01-01T00:00:00Z","text":")" + big + "\"}";
    CHECK_FALSE(parse_record(line).has_value());
}

TEST_CASE("stop-word decisions follow the list passed in") {
    const StopWords none;
    std::istringstream in("phone\n");
    const StopWords phone = parse_stopwords(in);
    for (int round = 0; round < 2; ++round) {
        CHECK(token_views("I bought a phone", none).word_tokens == std::vector<std::string>{"i", "bought", "a", "phone"});
        CHECK(token_views("I bought a phone", phone).word_tokens == std::vector<std::string>{"i", "bought", "a"});
    }
}
