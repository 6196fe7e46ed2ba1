#include "doctest.h"
#include "panast/classify.hpp"
#include "synthetic.hpp"

using namespace panast;

namespace {

const StemmedLexicon& lexicon() {
    static const StemmedLexicon lex = stem_lexicon(load_default());
    return lex;
}

NormalizedTweet from_text(const std::string& text) {
    auto t = normalize(testing::make_record("x", text, Date{std::chrono::year{2009} / 1 / 1}), default_stopwords());
    REQUIRE(t.has_value());
    return *t;
}

// A tweet given directly as already-normalized tokens with no stop words.
NormalizedTweet from_tokens(std::vector<std::string> tokens) {
    NormalizedTweet t;
    t.phrase_tokens = tokens;
    t.word_tokens = tokens;
    for (std::size_t i = 0; i < tokens.size(); ++i) t.word_positions.push_back(i);
    return t;
}

}  // namespace

TEST_CASE("match_positions on the worked example tokens") {
    const auto matches = match_positions(from_tokens({"i", "am", "scare", "swine", "flu"}), lexicon());
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].position == 2);
    CHECK(matches[0].length == 1);
    CHECK(matches[0].sentiment == Sentiment::Fear);
    CHECK(matches[0].term->surface == "scared");
}

TEST_CASE("phrase terms survive normalization") {
    const auto matches = match_positions(from_text("I feel at ease today"), lexicon());
    REQUIRE(matches.size() == 1);
    CHECK(matches[0].sentiment == Sentiment::Serenity);
    CHECK(matches[0].term->surface == "at ease");
    CHECK(matches[0].length == 2);
    CHECK(match_positions(from_tokens({"nothing", "here"}), lexicon()).empty());
}

TEST_CASE("classify picks the first occurring sentiment") {
    CHECK(classify(from_text("I am sad but happy now"), lexicon()) == Sentiment::Sadness);
    CHECK(classify(from_text("I am happy but sad now"), lexicon()) == Sentiment::Joviality);
    CHECK(classify(from_text("I am so scared about swine flu"), lexicon()) == Sentiment::Fear);
    CHECK_FALSE(classify(from_text("I bought a new phone"), lexicon()).has_value());

    const auto matches = match_positions(from_text("I am sad but happy now"), lexicon());
    REQUIRE(matches.size() == 2);
    CHECK(matches[0].position < matches[1].position);
    CHECK(matches[0].sentiment == Sentiment::Sadness);
}

TEST_CASE("same-position ties prefer the longer term") {
    const auto tweet = from_text("I was angry at self all day");
    const auto matches = match_positions(tweet, lexicon());
    REQUIRE(matches.size() == 2);
    CHECK(matches[0].term->surface == "angry at self");
    CHECK(matches[1].term->surface == "angry");
    CHECK(matches[0].position == matches[1].position);
    CHECK(classify(tweet, lexicon()) == Sentiment::Guilt);

    CHECK(classify(from_text("I was disgusted with self"), lexicon()) == Sentiment::Guilt);
    CHECK(classify(from_text("I was disgusted with them"), lexicon()) == Sentiment::Hostility);
}

TEST_CASE("same-position, same-length ties fall back to sentiment ordinal") {
    // Synthetic lexicon where one stem maps to two sentiments is rejected at
    // construction, so exercise the ordering rule through match sorting on a
    // custom lexicon with distinct keys sharing a start.
    Lexicon lex = load_default();
    lex.scales[ordinal(Sentiment::Serenity)][0] = make_term("calm down", Sentiment::Serenity);
    lex.scales[ordinal(Sentiment::Surprise)][0] = make_term("calm wow", Sentiment::Surprise);
    const StemmedLexicon custom = stem_lexicon(lex);
    const auto tweet = from_tokens({"calm", "down"});
    CHECK(classify(tweet, custom) == Sentiment::Serenity);
    CHECK(classify(from_tokens({"calm", "wow"}), custom) == Sentiment::Surprise);
}

TEST_CASE("single-word terms only match in the stop-word-free view") {
    NormalizedTweet t = from_tokens({"i", "sad"});
    t.word_tokens = {"i"};
    t.word_positions = {0};
    CHECK(match_positions(t, lexicon()).empty());
    CHECK_FALSE(classify(t, lexicon()).has_value());
}

TEST_CASE("classify agrees with a naive scan-all-terms oracle") {
    testing::RandomCorpus gen(1234);
    int classified = 0;
    for (int i = 0; i < 3000; ++i) {
        const auto tweet = normalize(testing::make_record("r", gen.text(), Date{}), default_stopwords());
        if (!tweet) continue;
        const auto expected = testing::naive_classify(*tweet, lexicon());
        const auto got = classify(*tweet, lexicon());
        CHECK(got == expected);
        const auto matches = match_positions(*tweet, lexicon());
        CHECK(matches.empty() == !got.has_value());
        if (!matches.empty()) CHECK(matches.front().sentiment == *got);
        for (const auto& m : matches) {
            CHECK(m.length >= 1);
            CHECK(m.position + m.length <= tweet->phrase_tokens.size());
        }
        if (got) ++classified;
    }
    CHECK(classified > 500);
}
