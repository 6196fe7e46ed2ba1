#include <cstdio>
#include <filesystem>
#include <fstream>

#include <zlib.h>

#include "doctest.h"
#include "panast/corpus.hpp"
#include "panast/error.hpp"
#include "synthetic.hpp"

using namespace panast;
namespace fs = std::filesystem;

namespace {

const StemmedLexicon& lexicon() {
    static const StemmedLexicon lex = stem_lexicon(load_default());
    return lex;
}

Pipeline pipeline() { return Pipeline{lexicon(), default_stopwords()}; }

const Date kDay{std::chrono::year{2009} / 6 / 1};

std::string line(const std::string& id, const std::string& text) {
    return format_record(testing::make_record(id, text, kDay));
}

fs::path temp_path(const std::string& name) {
    return fs::temp_directory_path() / ("panast_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST_CASE("parse_record accepts the record format") {
    const auto r = parse_record(
        R"({"id":"42","created_at":"2009-06-01T12:30:00Z","text":"I am sad","lang":"en","region":"US"})");
    REQUIRE(r.has_value());
    CHECK(r->id == "42");
    CHECK(r->text == "I am sad");
    CHECK(r->lang == "en");
    CHECK(r->region == "US");
    CHECK(format_timestamp(r->created_at) == "2009-06-01T12:30:00Z");

    const auto numeric = parse_record(R"({"id":7,"created_at":"2009-06-01 12:30:00","text":"x"})");
    REQUIRE(numeric.has_value());
    CHECK(numeric->id == "7");
    CHECK_FALSE(numeric->region.has_value());

    CHECK_FALSE(parse_record("{not json").has_value());
    CHECK_FALSE(parse_record(R"({"id":"","created_at":"2009-06-01T00:00:00Z","text":"x"})").has_value());
    CHECK_FALSE(parse_record(R"({"id":"1","created_at":"yesterday","text":"x"})").has_value());
    CHECK_FALSE(parse_record(R"({"id":"1","created_at":"2009-06-01T00:00:00Z"})").has_value());
    CHECK_FALSE(parse_record(R"({"id":"1","created_at":"2009-06-01T00:00:00Z","text":5})").has_value());
    CHECK_FALSE(parse_record(R"([1,2,3])").has_value());
    const std::string huge(kMaxTextBytes + 1, 'a');
    CHECK_FALSE(parse_record(line("1", huge)).has_value());
    CHECK(parse_record(line("1", std::string(kMaxTextBytes, 'a'))).has_value());
}

TEST_CASE("format_record round-trips") {
    auto r = testing::make_record("a\"b", "I'm \"quoted\"\n\tand é", kDay, 5, std::string("BR"));
    r.lang = "pt";
    const auto back = parse_record(format_record(r));
    REQUIRE(back.has_value());
    CHECK(back->id == r.id);
    CHECK(back->text == r.text);
    CHECK(back->created_at == r.created_at);
    CHECK(back->region == r.region);
    CHECK(back->lang == r.lang);
}

TEST_CASE("RecordReader tallies seen, parsed and malformed records") {
    SUBCASE("three valid") {
        auto src = LineSource::from_string(testing::join_lines({line("1", "a"), line("2", "b"), line("3", "c")}));
        RecordReader reader(src);
        int n = 0;
        while (reader.next()) ++n;
        CHECK(n == 3);
        CHECK(reader.seen() == 3);
        CHECK(reader.malformed() == 0);
    }
    SUBCASE("two valid and one malformed") {
        auto src = LineSource::from_string(line("1", "a") + "\n{broken\n" + line("2", "b"));
        RecordReader reader(src);
        int n = 0;
        while (reader.next()) ++n;
        CHECK(n == 2);
        CHECK(reader.seen() == 3);
        CHECK(reader.parsed() == 2);
        CHECK(reader.malformed() == 1);
    }
    SUBCASE("empty input and blank lines") {
        auto src = LineSource::from_string("\n  \r\n\n");
        RecordReader reader(src);
        CHECK_FALSE(reader.next().has_value());
        CHECK(reader.seen() == 0);
    }
}

TEST_CASE("LineSource handles CRLF, missing final newline and multiple files") {
    auto src = LineSource::from_string("a\r\nb\nc");
    std::string l;
    std::vector<std::string> got;
    while (src.next(l)) got.push_back(l);
    CHECK(got == std::vector<std::string>{"a", "b", "c"});

    const auto p1 = temp_path("a.ndjson"), p2 = temp_path("b.ndjson");
    { std::ofstream(p1) << line("1", "I am sad"); }  // no trailing newline
    { std::ofstream(p2) << line("2", "I am happy") << "\n"; }
    auto multi = LineSource::open({p1.string(), p2.string()});
    got.clear();
    while (multi.next(l)) got.push_back(l);
    CHECK(got.size() == 2);
    fs::remove(p1);
    fs::remove(p2);

    try {
        LineSource::open("/nonexistent/panast/input.ndjson");
        FAIL("expected Io error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Io);
    }
}

TEST_CASE("LineSource reads gzip input and long lines") {
    testing::RandomCorpus gen(5);
    auto lines = gen.lines(3000);
    lines.push_back(line("long", std::string(4000, 'x') + " I am sad"));
    const std::string data = testing::join_lines(lines);
    const auto path = temp_path("c.ndjson.gz");
    gzFile gz = gzopen(path.c_str(), "wb");
    REQUIRE(gz != nullptr);
    REQUIRE(gzwrite(gz, data.data(), static_cast<unsigned>(data.size())) == static_cast<int>(data.size()));
    gzclose(gz);

    auto plain = LineSource::from_string(data);
    auto zipped = LineSource::open(path.string());
    const auto a = count_sentiments(plain, pipeline(), 1);
    const auto b = count_sentiments(zipped, pipeline(), 2);
    CHECK(a.counts == b.counts);
    CHECK(a.counts == testing::naive_counts(lines, lexicon(), default_stopwords()));
    fs::remove(path);
}

TEST_CASE("count_sentiments on a tiny corpus") {
    const std::vector<std::string> lines{
        line("1", "I am so scared about swine flu"),
        line("2", "Stock prices fell sharply"),
        line("3", "I feel at ease today"),
        line("4", "I bought a new phone"),
        "{oops",
    };
    auto src = LineSource::from_string(testing::join_lines(lines));
    const auto r = count_sentiments(src, pipeline(), 3);
    CHECK(r.counts.total_seen == 5);
    CHECK(r.counts.total_normalized == 3);
    CHECK(r.counts.classified() == 2);
    CHECK(r.counts.per_sentiment[ordinal(Sentiment::Fear)] == 1);
    CHECK(r.counts.per_sentiment[ordinal(Sentiment::Serenity)] == 1);
    CHECK(r.report.total_seen == 5);
    CHECK(r.report.total_parsed == 4);
    CHECK(r.report.malformed() == 1);
    CHECK(r.report.total_mood_filtered == 3);
    CHECK(r.report.total_classified == 2);
    CHECK(r.report.mood_filter_rate() == doctest::Approx(0.75));
    CHECK(r.report.workers == 3);
}

TEST_CASE("parallel counts equal the sequential reference for every worker count") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        testing::RandomCorpus gen(seed);
        const auto lines = gen.lines(4000);
        const auto expected = testing::naive_counts(lines, lexicon(), default_stopwords());
        const std::string data = testing::join_lines(lines);
        for (std::size_t workers = 1; workers <= 16; ++workers) {
            auto src = LineSource::from_string(data);
            const auto r = count_sentiments(src, pipeline(), workers);
            CHECK_MESSAGE(r.counts == expected, "seed " << seed << " workers " << workers);
            CHECK(r.report.total_seen == expected.total_seen);
            CHECK(r.report.total_mood_filtered == expected.total_normalized);
            CHECK(r.report.per_sentiment == expected.per_sentiment);
        }
    }
}

TEST_CASE("term frequencies count each term once per tweet") {
    const std::vector<std::string> lines{
        line("1", "I am sleepy and tired"),
        line("2", "I am tired tired tired"),
        line("3", "I was angry at self"),
        line("4", "Everyone is tired"),  // not a mood statement
    };
    auto src = LineSource::from_string(testing::join_lines(lines));
    const auto table = term_frequencies(src, pipeline(), 2);
    CHECK(table.tweets == 3);
    auto count_of = [&](const std::string& surface) -> std::uint64_t {
        for (const auto& e : lexicon().entries())
            if (e.term.surface == surface) return table.counts[e.index];
        FAIL("unknown term " << surface);
        return 0;
    };
    CHECK(count_of("sleepy") == 1);
    CHECK(count_of("tired") == 2);
    CHECK(count_of("angry at self") == 1);
    CHECK(count_of("angry") == 1);
    CHECK(count_of("sad") == 0);

    testing::RandomCorpus gen(11);
    const std::string data = testing::join_lines(gen.lines(3000));
    auto s1 = LineSource::from_string(data);
    auto s4 = LineSource::from_string(data);
    CHECK(term_frequencies(s1, pipeline(), 1) == term_frequencies(s4, pipeline(), 4));
}
