#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "panast/cli.hpp"
#include "panast/error.hpp"
#include "panast/report.hpp"
#include "panast/score.hpp"
#include "synthetic.hpp"

using namespace panast;
namespace fs = std::filesystem;
using std::chrono::year;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

class TempDir {
public:
    TempDir() : path_(fs::temp_directory_path() / ("panast_cli_" + std::to_string(::getpid()) + "_" +
                                                   std::to_string(counter_++))) {
        fs::create_directories(path_);
    }
    ~TempDir() { fs::remove_all(path_); }
    std::string file(const std::string& name, const std::string& contents) const {
        const auto p = path_ / name;
        std::ofstream(p, std::ios::binary) << contents;
        return p.string();
    }
    std::string path(const std::string& name) const { return (path_ / name).string(); }

private:
    static inline int counter_ = 0;
    fs::path path_;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

const Date kJun1{year{2009} / 6 / 1};
const Date kJun2{year{2009} / 6 / 2};

std::string two_day_corpus() {
    PerSentiment<std::uint64_t> fear{}, joy{};
    fear[ordinal(Sentiment::Fear)] = 30;
    joy[ordinal(Sentiment::Joviality)] = 30;
    auto lines = testing::planted_event_lines(fear, 60, "storm", kJun1, 1);
    const auto day2 = testing::planted_event_lines(joy, 60, "storm", kJun2, 2);
    lines.insert(lines.end(), day2.begin(), day2.end());
    return testing::join_lines(lines);
}

const std::vector<std::string> kStormEvent{"--keywords", "storm", "--window", "2009-06-01..2009-06-02"};

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

TEST_CASE("usage errors and help") {
    CHECK(cli({}).code == static_cast<int>(ErrorKind::Usage));
    CHECK(cli({"frobnicate"}).code == static_cast<int>(ErrorKind::Usage));
    CHECK(cli({"score", "--workers", "0", "-i", "x"}).code == static_cast<int>(ErrorKind::Usage));
    const auto help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("baseline") != std::string::npos);
    CHECK(help.out.find("termfreq") != std::string::npos);
}

TEST_CASE("classify") {
    auto r = cli({"classify", "I am so scared about swine flu"});
    CHECK(r.code == 0);
    CHECK(r.out == "fear\n");
    CHECK(cli({"classify", "Stock prices fell sharply"}).out == "rejected\n");
    CHECK(cli({"classify", "I bought a new phone"}).out == "unclassified\n");

    r = cli({"classify", "-f", "json", "I am so scared about swine flu"});
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["sentiment"] == "fear");
    CHECK(doc["word_tokens"] == nlohmann::json({"i", "am", "scare", "swine", "flu"}));

    TempDir dir;
    const auto path = dir.file("texts.txt", "I am sad\nnothing here\nI am happy\n");
    r = cli({"classify", "-i", path});
    CHECK(r.out == "sadness\nrejected\njoviality\n");
}

TEST_CASE("baseline") {
    TempDir dir;
    testing::RandomCorpus gen(4);
    const auto corpus = dir.file("c.ndjson", testing::join_lines(gen.lines(1000)));
    const auto out_path = dir.path("baseline.tsv");
    auto r = cli({"baseline", "-i", corpus, "-o", out_path, "--corpus-id", "synthetic", "-w", "3"});
    REQUIRE(r.code == 0);
    CHECK(r.err.find("records: seen 1000") != std::string::npos);
    const std::string text = read_file(out_path);
    CHECK(text.rfind("# provenance: computed:synthetic\n", 0) == 0);
    std::istringstream in(text);
    const auto table = parse_baseline(in, "x");
    for (double a : table.alpha) CHECK(a > 0.0);

    // The written file is accepted as a baseline source.
    const auto ev = dir.file("ev.ndjson", two_day_corpus());
    r = cli(concat({"score", "-i", ev, "--baseline", out_path, "-f", "json"}, kStormEvent));
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["provenance"] == "file:" + out_path);
    CHECK(doc["scores"][0]["alpha"].get<double>() == round7(table.alpha[0]));

    CHECK(cli({"baseline", "-i", dir.file("empty.ndjson", "")}).code == static_cast<int>(ErrorKind::EmptyCorpus));
    CHECK(cli({"baseline", "-i", dir.path("missing.ndjson")}).code == static_cast<int>(ErrorKind::Io));
    const auto tiny = dir.file("tiny.ndjson", format_record(testing::make_record("1", "I am sad", kJun1)) + "\n");
    r = cli({"baseline", "-i", tiny});
    CHECK(r.code == static_cast<int>(ErrorKind::DegenerateBaseline));
    CHECK(r.err.find("error (DegenerateBaseline)") != std::string::npos);
}

TEST_CASE("score formats") {
    TempDir dir;
    const auto ev = dir.file("ev.ndjson", two_day_corpus());
    const auto base = concat({"score", "-i", ev}, kStormEvent);

    auto r = cli(base);
    REQUIRE(r.code == 0);
    CHECK(r.out.find("tweets:     120") != std::string::npos);
    CHECK(r.out.find("Fear ") != std::string::npos);
    CHECK(r.err.find("DegenerateEvent") == std::string::npos);

    r = cli(concat(base, {"-f", "csv"}));
    CHECK(count_lines(r.out) == 12);
    CHECK(r.out.rfind("sentiment,alpha,beta,p,n\nfear,0.0063791,0.2500000,", 0) == 0);

    r = cli(concat(base, {"-f", "json"}));
    const auto doc = nlohmann::json::parse(r.out);
    const ScoreVector v = score_vector_from_json(doc);
    CHECK(v.event_size == 120);
    CHECK(v[Sentiment::Fear].beta == 0.25);
    CHECK(v[Sentiment::Fear].p == round7(panas_score(0.0063791, 0.25)));
    CHECK(score_json(v, RunInfo{"custom", std::string(kStemmerId)}) == doc);

    r = cli(concat(base, {"-f", "json", "--sign-convention", "printed-eq3"}));
    const auto flipped = score_vector_from_json(nlohmann::json::parse(r.out));
    CHECK(flipped.convention == SignConvention::PrintedEq3);
    CHECK(flipped[Sentiment::Fear].p == -v[Sentiment::Fear].p);

    r = cli(concat(base, {"-f", "svg", "--title", "Storm"}));
    CHECK(r.out.rfind("<svg", 0) == 0);

    const auto svg_path = dir.path("k.svg");
    CHECK(cli(concat(base, {"-f", "svg", "-o", svg_path})).code == 0);
    CHECK(read_file(svg_path).rfind("<svg", 0) == 0);

    // Bundled event by name, window excludes the synthetic corpus dates.
    r = cli({"score", "-i", ev, "-e", "haiti"});
    CHECK(r.code == static_cast<int>(ErrorKind::EmptyEvent));
    CHECK(cli({"score", "-i", ev, "-e", "no-such-event"}).code == static_cast<int>(ErrorKind::Config));
    CHECK(cli({"score", "-i", ev}).code != 0);

    r = cli(concat(base, {"--min-event-size", "500"}));
    CHECK(r.code == 0);
    CHECK(r.err.find("DegenerateEvent") != std::string::npos);

    const auto bad_baseline = dir.file("bad.tsv", "fear\t0.5\n");
    CHECK(cli(concat(base, {"--baseline", bad_baseline})).code == static_cast<int>(ErrorKind::InvalidBaseline));
}

TEST_CASE("output is identical across worker counts") {
    TempDir dir;
    testing::RandomCorpus gen(8);
    auto lines = gen.lines(3000, kJun1, 2);
    for (std::size_t i = 0; i < lines.size(); i += 2) {
        auto r = parse_record(lines[i]);
        if (!r) continue;
        r->text += " storm";
        lines[i] = format_record(*r);
    }
    const auto ev = dir.file("ev.ndjson", testing::join_lines(lines));
    for (const std::string& fmt : {"json", "csv"}) {
        const auto one = cli(concat({"timeseries", "-i", ev, "-f", fmt, "-w", "1"}, kStormEvent));
        REQUIRE(one.code == 0);
        for (const char* w : {"2", "5", "8"})
            CHECK(cli(concat({"timeseries", "-i", ev, "-f", fmt, "-w", w}, kStormEvent)).out == one.out);
    }
    const auto t1 = cli({"termfreq", "-i", ev, "-w", "1", "-f", "csv"});
    CHECK(cli({"termfreq", "-i", ev, "-w", "4", "-f", "csv"}).out == t1.out);
}

TEST_CASE("timeseries") {
    TempDir dir;
    const auto ev = dir.file("ev.ndjson", two_day_corpus());
    auto r = cli(concat({"timeseries", "-i", ev}, kStormEvent));
    REQUIRE(r.code == 0);
    CHECK(count_lines(r.out) == 1 + 22);
    CHECK(r.out.rfind("date,sentiment,alpha,beta,p,n\n2009-06-01,fear,", 0) == 0);
    CHECK(r.out.find("nan") == std::string::npos);

    r = cli(concat({"timeseries", "-i", ev, "--by-region"}, kStormEvent));
    CHECK(r.out.rfind("region,date,sentiment,alpha,beta,p,n\nunknown,2009-06-01,", 0) == 0);

    r = cli(concat({"timeseries", "-i", ev, "-f", "json"}, kStormEvent));
    const auto doc = nlohmann::json::parse(r.out);
    const auto series = timeseries_from_json(doc);
    REQUIRE(series.size() == 1);
    CHECK(series[0].points.size() == 2);
    CHECK(series[0].points[0].vector[Sentiment::Fear].p > 0);
    CHECK(series[0].points[1].vector[Sentiment::Joviality].p > 0);

    // JSON feeds the sparkline renderer.
    const auto json_path = dir.file("ts.json", r.out);
    r = cli({"chart", "sparkline", "--from-json", json_path, "--markers", "2009-06-02,2010-01-01"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("<svg", 0) == 0);
    CHECK(r.err.find("2010-01-01") != std::string::npos);

    r = cli(concat({"timeseries", "-i", ev, "-f", "svg", "--sentiments", "fear,joviality"}, kStormEvent));
    CHECK(r.code == 0);
    CHECK(r.out.find("data-sentiment=\"joviality\"") != std::string::npos);
    CHECK(cli(concat({"timeseries", "-i", ev, "-f", "svg", "--sentiments", "anger"}, kStormEvent)).code != 0);
}

TEST_CASE("chart kiviat from score json") {
    TempDir dir;
    const auto ev = dir.file("ev.ndjson", two_day_corpus());
    const auto json_path = dir.file("score.json", cli(concat({"score", "-i", ev, "-f", "json"}, kStormEvent)).out);
    const auto from_json = cli({"chart", "kiviat", "--from-json", json_path});
    REQUIRE(from_json.code == 0);
    const auto direct = cli(concat({"chart", "kiviat", "-i", ev}, kStormEvent));
    CHECK(direct.out == from_json.out);
    const auto broken = dir.file("broken.json", "{\"scores\": 3}");
    CHECK(cli({"chart", "kiviat", "--from-json", broken}).code == static_cast<int>(ErrorKind::Config));
}

TEST_CASE("termfreq") {
    TempDir dir;
    const auto one = dir.file("one.ndjson", format_record(testing::make_record("1", "I am happy", kJun1)) + "\n");
    auto r = cli({"termfreq", "-i", one});
    REQUIRE(r.code == 0);
    CHECK(r.out == "Joviality\n  happy: 1\n");
    CHECK(r.err.find("mood-filtered tweets scanned: 1") != std::string::npos);
    r = cli({"termfreq", "-i", one, "-f", "csv"});
    CHECK(r.out == "sentiment,term,count\njoviality,happy,1\n");
    r = cli({"termfreq", "-i", one, "-f", "csv", "--all"});
    CHECK(count_lines(r.out) == 1 + 55);
    CHECK(r.out.find("fear,afraid,0\n") != std::string::npos);
}

TEST_CASE("custom lexicon and stop words") {
    TempDir dir;
    const auto sw_bad = dir.file("sw.txt", "the\nat\n");
    CHECK(cli({"classify", "--stopwords", sw_bad, "I am sad"}).code == static_cast<int>(ErrorKind::Config));
    const auto sw_ok = dir.file("sw2.txt", "the\nbought\n");
    CHECK(cli({"classify", "--stopwords", sw_ok, "-f", "json", "I bought it"}).out.find("\"word_tokens\":[\"i\",\"it\"]") !=
          std::string::npos);
    const auto lex_bad = dir.file("lex.tsv", "fear\tafraid\n");
    CHECK(cli({"classify", "--lexicon", lex_bad, "I am sad"}).code == static_cast<int>(ErrorKind::Config));
}
