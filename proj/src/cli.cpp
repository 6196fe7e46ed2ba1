#include "panast/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "panast/charts.hpp"
#include "panast/error.hpp"
#include "panast/report.hpp"

namespace panast {
namespace {

using nlohmann::json;

struct Options {
    std::vector<std::string> inputs{"-"};
    std::string lexicon;
    std::string stopwords;
    std::string baseline = "bundled";
    std::size_t workers = 0;
    std::string format;
    std::string event;
    std::string events_file;
    std::string keywords;
    std::string window;
    std::vector<std::string> regions;
    std::string sign_convention = "prose";
    std::uint64_t min_event_size = kDefaultMinEventSize;
    // per-command
    std::string output = "-";
    std::string corpus_id;
    bool all_terms = false;
    bool by_region = false;
    std::vector<std::string> sentiments{"fear", "attentiveness", "surprise", "hostility"};
    std::vector<std::string> markers;
    std::string from_json;
    std::string title;
    std::vector<std::string> text;
};

// Loaded once per invocation from Options.
struct Resources {
    Lexicon lexicon;
    StopWords stopwords;
    StemmedLexicon stemmed;
};

Resources load_resources(const Options& o) {
    Resources r;
    r.lexicon = o.lexicon.empty() ? load_default() : load_lexicon_file(o.lexicon);
    r.stopwords = o.stopwords.empty() ? default_stopwords() : load_stopwords_file(o.stopwords);
    if (const auto conflicts = stopword_conflicts(r.stopwords, r.lexicon); !conflicts.empty()) {
        std::string list;
        for (const auto& w : conflicts) list += (list.empty() ? "" : ", ") + w;
        throw Error(ErrorKind::Config, "stop-word list contains protected words: " + list);
    }
    r.stemmed = stem_lexicon(r.lexicon);
    return r;
}

std::size_t worker_count(const Options& o) {
    if (o.workers > 0) return o.workers;
    return std::max(1u, std::thread::hardware_concurrency());
}

SignConvention convention(const Options& o) {
    if (o.sign_convention == "prose") return SignConvention::Prose;
    if (o.sign_convention == "printed-eq3") return SignConvention::PrintedEq3;
    throw Error(ErrorKind::Usage, "--sign-convention must be 'prose' or 'printed-eq3'");
}

BaselineTable baseline(const Options& o) {
    if (o.baseline == "bundled") return bundled_baseline();
    return load_baseline_file(o.baseline);
}

EventSpec event_spec(const Options& o) {
    EventSpec spec;
    if (!o.keywords.empty()) {
        if (!o.event.empty()) throw Error(ErrorKind::Usage, "use either --event or --keywords, not both");
        if (o.window.empty()) throw Error(ErrorKind::Usage, "--keywords requires --window");
        std::istringstream in("[event custom]\nkeywords = " + o.keywords + "\nwindow = " + o.window + "\n");
        spec = parse_events(in).front();
    } else {
        if (o.event.empty()) throw Error(ErrorKind::Usage, "an event is required (--event or --keywords)");
        const auto& events = o.events_file.empty() ? bundled_events() : load_events_file(o.events_file);
        spec = find_event(events, o.event);
    }
    if (!o.regions.empty()) spec.region_filter = std::set<std::string>(o.regions.begin(), o.regions.end());
    check_event(spec);
    return spec;
}

EventOptions event_options(const Options& o) {
    EventOptions eo;
    eo.workers = worker_count(o);
    eo.convention = convention(o);
    eo.min_event_size = o.min_event_size;
    return eo;
}

std::vector<Sentiment> sentiments(const Options& o) {
    std::vector<Sentiment> out;
    for (const auto& s : o.sentiments) {
        if (s == "all") {
            out.assign(kAllSentiments.begin(), kAllSentiments.end());
            return out;
        }
        const auto parsed = parse_sentiment(s);
        if (!parsed) throw Error(ErrorKind::Usage, "unknown sentiment '" + s + "'");
        out.push_back(*parsed);
    }
    return out;
}

std::vector<Date> markers(const Options& o) {
    std::vector<Date> out;
    for (const auto& m : o.markers) {
        const auto d = parse_date(m);
        if (!d) throw Error(ErrorKind::Usage, "marker dates must be YYYY-MM-DD, got '" + m + "'");
        out.push_back(*d);
    }
    return out;
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded()) throw Error(ErrorKind::Config, "'" + path + "' is not valid JSON");
    return doc;
}

void write_output(const Options& o, const std::string& data, std::ostream& out) {
    if (o.output == "-") {
        out << data;
        return;
    }
    std::ofstream f(o.output, std::ios::binary);
    if (!f || !(f << data)) throw Error(ErrorKind::Io, "cannot write '" + o.output + "'");
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    std::string list;
    for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
    throw Error(ErrorKind::Usage, "unsupported --format '" + format + "' (expected one of: " + list + ")");
}

void print_warnings(const std::vector<std::string>& warnings, std::ostream& err) {
    for (const auto& w : warnings) err << "warning: " << w << '\n';
}

// Commands ----------------------------------------------------------------

void cmd_baseline(const Options& o, std::ostream& out, std::ostream& err) {
    const Resources r = load_resources(o);
    LineSource source = LineSource::open(o.inputs);
    const CountResult result = count_sentiments(source, Pipeline{r.stemmed, r.stopwords}, worker_count(o));
    err << ingest_summary(result.report);
    std::string id = o.corpus_id;
    if (id.empty())
        for (const auto& in : o.inputs) id += (id.empty() ? "" : "+") + in;
    const BaselineTable table = compute_baseline(result.counts, "computed:" + id);
    write_output(o, "# provenance: " + table.provenance + "\n" + format_baseline(table), out);
}

void cmd_classify(const Options& o, std::ostream& out, std::ostream&) {
    const std::string format = o.format.empty() ? "table" : o.format;
    require_format(format, {"table", "json"});
    const Resources r = load_resources(o);

    auto emit = [&](const std::string& text) {
        const json doc = classification_json(text, r.stopwords, r.stemmed);
        if (format == "json") {
            out << doc.dump() << '\n';
        } else if (!doc["mood_statement"].get<bool>()) {
            out << "rejected\n";
        } else {
            out << (doc["sentiment"].is_null() ? "unclassified" : doc["sentiment"].get<std::string>()) << '\n';
        }
    };
    if (!o.text.empty()) {
        std::string joined;
        for (const auto& t : o.text) joined += (joined.empty() ? "" : " ") + t;
        emit(joined);
        return;
    }
    LineSource source = LineSource::open(o.inputs);
    std::string line;
    while (source.next(line)) emit(line);
}

void cmd_score(const Options& o, std::ostream& out, std::ostream& err) {
    const std::string format = o.format.empty() ? "table" : o.format;
    require_format(format, {"table", "csv", "json", "svg"});
    const Resources r = load_resources(o);
    const EventSpec spec = event_spec(o);
    LineSource source = LineSource::open(o.inputs);
    const EventScore score =
        extract_and_score(source, spec, baseline(o), Pipeline{r.stemmed, r.stopwords}, event_options(o));
    err << ingest_summary(score.report);
    print_warnings(score.warnings, err);
    const RunInfo info{spec.name, r.stemmed.stemmer_id()};
    std::string data;
    if (format == "table") data = score_table(score.vector, info);
    else if (format == "csv") data = score_csv(score.vector);
    else if (format == "json") data = score_json(score.vector, info).dump(2) + "\n";
    else data = render_kiviat(score.vector, o.title.empty() ? spec.name : o.title);
    write_output(o, data, out);
}

void cmd_timeseries(const Options& o, std::ostream& out, std::ostream& err) {
    const std::string format = o.format.empty() ? "csv" : o.format;
    require_format(format, {"csv", "json", "svg"});
    const Resources r = load_resources(o);
    const EventSpec spec = event_spec(o);
    LineSource source = LineSource::open(o.inputs);
    const TimeSeriesResult result = timeseries(source, spec, baseline(o), Pipeline{r.stemmed, r.stopwords},
                                               event_options(o), o.by_region);
    err << ingest_summary(result.report);
    const RunInfo info{spec.name, r.stemmed.stemmer_id()};
    std::string data;
    if (format == "csv") {
        data = timeseries_csv(result, o.by_region);
    } else if (format == "json") {
        data = timeseries_json(result, info, o.by_region).dump(2) + "\n";
    } else {
        for (const auto& series : result.series) {
            std::string title = spec.name + (series.region.empty() ? "" : " (" + series.region + ")");
            auto chart = render_sparklines(series, sentiments(o), markers(o), title);
            print_warnings(chart.warnings, err);
            data += chart.svg;
        }
    }
    write_output(o, data, out);
}

void cmd_termfreq(const Options& o, std::ostream& out, std::ostream& err) {
    const std::string format = o.format.empty() ? "table" : o.format;
    require_format(format, {"table", "csv", "json"});
    const Resources r = load_resources(o);
    LineSource source = LineSource::open(o.inputs);
    const TermFrequencyTable table = term_frequencies(source, Pipeline{r.stemmed, r.stopwords}, worker_count(o));
    err << "mood-filtered tweets scanned: " << table.tweets << '\n';
    const auto rows = term_rows(table, r.stemmed, o.all_terms);
    std::string data;
    if (format == "table") data = termfreq_table(rows);
    else if (format == "csv") data = termfreq_csv(rows);
    else data = termfreq_json(rows, table, RunInfo{{}, r.stemmed.stemmer_id()}).dump(2) + "\n";
    write_output(o, data, out);
}

void cmd_chart_kiviat(const Options& o, std::ostream& out, std::ostream& err) {
    ScoreVector vector;
    std::string title = o.title;
    if (!o.from_json.empty()) {
        const json doc = read_json_file(o.from_json);
        vector = score_vector_from_json(doc);
        if (title.empty()) title = doc.value("event", std::string());
    } else {
        const Resources r = load_resources(o);
        const EventSpec spec = event_spec(o);
        LineSource source = LineSource::open(o.inputs);
        const EventScore score =
            extract_and_score(source, spec, baseline(o), Pipeline{r.stemmed, r.stopwords}, event_options(o));
        err << ingest_summary(score.report);
        print_warnings(score.warnings, err);
        vector = score.vector;
        if (title.empty()) title = spec.name;
    }
    write_output(o, render_kiviat(vector, title), out);
}

void cmd_chart_sparkline(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<TimeSeries> series;
    std::string title = o.title;
    if (!o.from_json.empty()) {
        const json doc = read_json_file(o.from_json);
        series = timeseries_from_json(doc);
        if (title.empty()) title = doc.value("event", std::string());
    } else {
        const Resources r = load_resources(o);
        const EventSpec spec = event_spec(o);
        LineSource source = LineSource::open(o.inputs);
        auto result = timeseries(source, spec, baseline(o), Pipeline{r.stemmed, r.stopwords}, event_options(o),
                                 o.by_region);
        err << ingest_summary(result.report);
        series = std::move(result.series);
        if (title.empty()) title = spec.name;
    }
    if (series.empty()) throw Error(ErrorKind::EmptyEvent, "no time series to chart");
    std::string data;
    for (const auto& s : series) {
        auto chart = render_sparklines(s, sentiments(o), markers(o),
                                       title + (s.region.empty() ? "" : " (" + s.region + ")"));
        print_warnings(chart.warnings, err);
        data += chart.svg;
    }
    write_output(o, data, out);
}

// Option wiring ----------------------------------------------------------

void add_resources(CLI::App* cmd, Options& o) {
    cmd->add_option("--lexicon", o.lexicon, "Lexicon file (<scale>\\t<term>); default: bundled");
    cmd->add_option("--stopwords", o.stopwords, "Stop-word file, one word per line; default: bundled");
}

void add_corpus(CLI::App* cmd, Options& o) {
    cmd->add_option("-i,--input", o.inputs, "Input corpus files (NDJSON, .gz accepted; '-' for stdin)");
    cmd->add_option("-w,--workers", o.workers, "Worker threads (default: hardware concurrency)")
        ->check(CLI::PositiveNumber);
    add_resources(cmd, o);
}

void add_event(CLI::App* cmd, Options& o) {
    cmd->add_option("-e,--event", o.event, "Event name from the events file");
    cmd->add_option("--events", o.events_file, "Event definition file; default: bundled table");
    cmd->add_option("--keywords", o.keywords, "Ad-hoc event: comma-separated keyword phrases");
    cmd->add_option("--window", o.window, "Ad-hoc event window: YYYY-MM-DD..YYYY-MM-DD");
    cmd->add_option("--region", o.regions, "Only records whose region is one of these codes")->delimiter(',');
    cmd->add_option("--baseline", o.baseline, "'bundled' or a baseline file");
    cmd->add_option("--sign-convention", o.sign_convention, "prose (default) or printed-eq3")
        ->check(CLI::IsMember({"prose", "printed-eq3"}));
    cmd->add_option("--min-event-size", o.min_event_size,
                    "Warn when fewer mood-filtered tweets match (default 100)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Mood measurement over short text updates with the PANAS-t affect scales", "panast"};
    app.require_subcommand(1);

    auto* baseline_cmd = app.add_subcommand("baseline", "Compute per-sentiment baselines over a corpus");
    add_corpus(baseline_cmd, o);
    baseline_cmd->add_option("-o,--output", o.output, "Baseline file to write ('-' for stdout)");
    baseline_cmd->add_option("--corpus-id", o.corpus_id, "Label recorded as the baseline provenance");

    auto* classify_cmd = app.add_subcommand("classify", "Classify tweet text given as arguments or stdin lines");
    classify_cmd->add_option("text", o.text, "Tweet text");
    classify_cmd->add_option("-i,--input", o.inputs, "Raw text lines to classify when no text is given");
    classify_cmd->add_option("-f,--format", o.format, "table or json");
    add_resources(classify_cmd, o);

    auto* score_cmd = app.add_subcommand("score", "Score an event against the baseline");
    add_corpus(score_cmd, o);
    add_event(score_cmd, o);
    score_cmd->add_option("-f,--format", o.format, "table, csv, json or svg");
    score_cmd->add_option("-o,--output", o.output, "Output file ('-' for stdout)");
    score_cmd->add_option("--title", o.title, "Chart title for svg output");

    auto* ts_cmd = app.add_subcommand("timeseries", "Per-day scores for an event");
    add_corpus(ts_cmd, o);
    add_event(ts_cmd, o);
    ts_cmd->add_option("-f,--format", o.format, "csv, json or svg");
    ts_cmd->add_option("-o,--output", o.output, "Output file ('-' for stdout)");
    ts_cmd->add_flag("--by-region", o.by_region, "One series per region code");
    ts_cmd->add_option("--sentiments", o.sentiments, "Sentiments for svg output, or 'all'")->delimiter(',');
    ts_cmd->add_option("--markers", o.markers, "Dates to mark in svg output")->delimiter(',');

    auto* tf_cmd = app.add_subcommand("termfreq", "Per-term tweet frequencies");
    add_corpus(tf_cmd, o);
    tf_cmd->add_option("-f,--format", o.format, "table, csv or json");
    tf_cmd->add_option("-o,--output", o.output, "Output file ('-' for stdout)");
    tf_cmd->add_flag("--all", o.all_terms, "Include terms that never occur");

    auto* chart_cmd = app.add_subcommand("chart", "Render SVG charts");
    chart_cmd->require_subcommand(1);
    auto* kiviat_cmd = chart_cmd->add_subcommand("kiviat", "Radar chart of one score vector");
    add_corpus(kiviat_cmd, o);
    add_event(kiviat_cmd, o);
    kiviat_cmd->add_option("--from-json", o.from_json, "Score vector written by 'score --format json'");
    kiviat_cmd->add_option("-o,--output", o.output, "Output file ('-' for stdout)");
    kiviat_cmd->add_option("--title", o.title, "Chart title");
    auto* spark_cmd = chart_cmd->add_subcommand("sparkline", "Sparklines of a time series");
    add_corpus(spark_cmd, o);
    add_event(spark_cmd, o);
    spark_cmd->add_option("--from-json", o.from_json, "Series written by 'timeseries --format json'");
    spark_cmd->add_option("-o,--output", o.output, "Output file ('-' for stdout)");
    spark_cmd->add_option("--title", o.title, "Chart title");
    spark_cmd->add_flag("--by-region", o.by_region, "One chart per region code");
    spark_cmd->add_option("--sentiments", o.sentiments, "Sentiments to draw, or 'all'")->delimiter(',');
    spark_cmd->add_option("--markers", o.markers, "Dates to mark")->delimiter(',');

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(ErrorKind::Usage);
    }

    try {
        if (*baseline_cmd) cmd_baseline(o, out, err);
        else if (*classify_cmd) cmd_classify(o, out, err);
        else if (*score_cmd) cmd_score(o, out, err);
        else if (*ts_cmd) cmd_timeseries(o, out, err);
        else if (*tf_cmd) cmd_termfreq(o, out, err);
        else if (*kiviat_cmd) cmd_chart_kiviat(o, out, err);
        else if (*spark_cmd) cmd_chart_sparkline(o, out, err);
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    out.flush();
    return 0;
}

}  // namespace panast
