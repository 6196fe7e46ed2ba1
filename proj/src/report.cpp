#include "panast/report.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "panast/error.hpp"

namespace panast {

using nlohmann::json;

double round7(double v) noexcept {
    const double r = std::round(v * 1e7) / 1e7;
    return r == 0.0 ? 0.0 : r;
}

namespace {

std::string f7(double v) { return fmt::format("{:.7f}", round7(v)); }

json scores_array(const ScoreVector& v) {
    json arr = json::array();
    for (Sentiment s : kAllSentiments) {
        const auto& c = v[s];
        arr.push_back({{"sentiment", name(s)}, {"alpha", round7(c.alpha)}, {"beta", round7(c.beta)}, {"p", round7(c.p)}});
    }
    return arr;
}

[[noreturn]] void schema_error(const std::string& what) {
    throw Error(ErrorKind::Config, "JSON schema violation: " + what);
}

double get_number(const json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_number()) schema_error(fmt::format("'{}' must be a number", key));
    return it->get<double>();
}

std::uint64_t get_count(const json& obj, const char* key) {
    const auto it = obj.find(key);
    if (it == obj.end() || !it->is_number_unsigned())
        schema_error(fmt::format("'{}' must be a non-negative integer", key));
    return it->get<std::uint64_t>();
}

PerSentiment<ScoreComponent> scores_from_json(const json& arr) {
    if (!arr.is_array() || arr.size() != kSentimentCount) schema_error("'scores' must hold 11 entries");
    PerSentiment<ScoreComponent> out{};
    PerSentiment<bool> seen{};
    for (const auto& item : arr) {
        if (!item.is_object() || !item.contains("sentiment") || !item["sentiment"].is_string())
            schema_error("score entry without 'sentiment'");
        const auto s = parse_sentiment(item["sentiment"].get<std::string>());
        if (!s) schema_error("unknown sentiment " + item["sentiment"].dump());
        if (seen[ordinal(*s)]) schema_error("repeated sentiment " + item["sentiment"].dump());
        seen[ordinal(*s)] = true;
        out[ordinal(*s)] = ScoreComponent{get_number(item, "alpha"), get_number(item, "beta"), get_number(item, "p")};
    }
    return out;
}

SignConvention convention_from_json(const json& doc) {
    const auto it = doc.find("sign_convention");
    if (it == doc.end()) return SignConvention::Prose;
    if (*it == "prose") return SignConvention::Prose;
    if (*it == "printed-eq3") return SignConvention::PrintedEq3;
    schema_error("unknown sign_convention " + it->dump());
}

}  // namespace

std::string score_table(const ScoreVector& v, const RunInfo& info) {
    std::string out;
    if (!info.event.empty()) out += fmt::format("event:      {}\n", info.event);
    out += fmt::format("tweets:     {}\n", v.event_size);
    out += fmt::format("baseline:   {}\n", v.provenance);
    out += fmt::format("convention: {}\n\n", name(v.convention));
    out += fmt::format("{:<16}{:>12}{:>12}{:>12}\n", "sentiment", "alpha", "beta", "p");
    for (Sentiment s : kAllSentiments) {
        const auto& c = v[s];
        out += fmt::format("{:<16}{:>12}{:>12}{:>12}\n", display_name(s), f7(c.alpha), f7(c.beta), f7(c.p));
    }
    return out;
}

std::string score_csv(const ScoreVector& v) {
    std::string out = "sentiment,alpha,beta,p,n\n";
    for (Sentiment s : kAllSentiments) {
        const auto& c = v[s];
        out += fmt::format("{},{},{},{},{}\n", name(s), f7(c.alpha), f7(c.beta), f7(c.p), v.event_size);
    }
    return out;
}

json score_json(const ScoreVector& v, const RunInfo& info) {
    json doc = {
        {"event", info.event},
        {"event_size", v.event_size},
        {"provenance", v.provenance},
        {"sign_convention", name(v.convention)},
        {"stemmer", info.stemmer},
        {"scores", scores_array(v)},
    };
    return doc;
}

ScoreVector score_vector_from_json(const json& doc) {
    if (!doc.is_object()) schema_error("score document must be an object");
    ScoreVector v;
    v.event_size = get_count(doc, "event_size");
    if (const auto it = doc.find("provenance"); it != doc.end() && it->is_string()) v.provenance = *it;
    v.convention = convention_from_json(doc);
    if (!doc.contains("scores")) schema_error("missing 'scores'");
    v.scores = scores_from_json(doc["scores"]);
    return v;
}

std::string timeseries_csv(const TimeSeriesResult& result, bool with_region) {
    std::string out = with_region ? "region,date,sentiment,alpha,beta,p,n\n" : "date,sentiment,alpha,beta,p,n\n";
    for (const auto& series : result.series) {
        for (const auto& point : series.points) {
            const std::string date = format_date(point.date);
            for (Sentiment s : kAllSentiments) {
                const auto& c = point.vector[s];
                if (with_region) out += series.region + ",";
                out += fmt::format("{},{},{},{},{},{}\n", date, name(s), f7(c.alpha), f7(c.beta), f7(c.p),
                                   point.vector.event_size);
            }
        }
    }
    return out;
}

json timeseries_json(const TimeSeriesResult& result, const RunInfo& info, bool with_region) {
    json series_arr = json::array();
    std::string provenance;
    SignConvention convention = SignConvention::Prose;
    for (const auto& series : result.series) {
        json points = json::array();
        for (const auto& point : series.points) {
            provenance = point.vector.provenance;
            convention = point.vector.convention;
            points.push_back({{"date", format_date(point.date)},
                              {"n", point.vector.event_size},
                              {"scores", scores_array(point.vector)}});
        }
        json entry = {{"points", points}};
        if (with_region) entry["region"] = series.region;
        series_arr.push_back(entry);
    }
    return {
        {"event", info.event},
        {"bucket", "utc-day"},
        {"provenance", provenance},
        {"sign_convention", name(convention)},
        {"stemmer", info.stemmer},
        {"series", series_arr},
    };
}

std::vector<TimeSeries> timeseries_from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("series") || !doc["series"].is_array())
        schema_error("time series document needs a 'series' array");
    const SignConvention convention = convention_from_json(doc);
    const std::string provenance = doc.value("provenance", std::string());
    std::vector<TimeSeries> out;
    for (const auto& entry : doc["series"]) {
        TimeSeries series;
        series.region = entry.value("region", std::string());
        if (!entry.contains("points") || !entry["points"].is_array()) schema_error("series entry needs 'points'");
        for (const auto& p : entry["points"]) {
            TimePoint point;
            if (!p.contains("date") || !p["date"].is_string()) schema_error("point needs 'date'");
            const auto date = parse_date(p["date"].get<std::string>());
            if (!date) schema_error("bad date " + p["date"].dump());
            if (!series.points.empty() && *date <= series.points.back().date)
                schema_error("dates must be strictly increasing");
            point.date = *date;
            point.vector.event_size = get_count(p, "n");
            point.vector.scores = scores_from_json(p.value("scores", json()));
            point.vector.provenance = provenance;
            point.vector.convention = convention;
            series.points.push_back(std::move(point));
        }
        out.push_back(std::move(series));
    }
    return out;
}

std::vector<TermRow> term_rows(const TermFrequencyTable& table, const StemmedLexicon& lexicon,
                               bool include_zero) {
    std::vector<TermRow> rows;
    for (Sentiment s : kAllSentiments) {
        std::vector<TermRow> group;
        for (const auto& entry : lexicon.entries()) {
            if (entry.sentiment != s) continue;
            const auto count = table.counts.at(entry.index);
            if (count == 0 && !include_zero) continue;
            group.push_back({s, entry.term.surface, count});
        }
        std::stable_sort(group.begin(), group.end(),
                         [](const TermRow& a, const TermRow& b) { return a.count > b.count; });
        rows.insert(rows.end(), group.begin(), group.end());
    }
    return rows;
}

std::string termfreq_table(const std::vector<TermRow>& rows) {
    std::string out;
    std::optional<Sentiment> current;
    for (const auto& row : rows) {
        if (current != row.sentiment) {
            if (current) out += '\n';
            out += fmt::format("{}\n", display_name(row.sentiment));
            current = row.sentiment;
        }
        out += fmt::format("  {}: {}\n", row.term, fmt::group_digits(row.count));
    }
    return out;
}

std::string termfreq_csv(const std::vector<TermRow>& rows) {
    std::string out = "sentiment,term,count\n";
    for (const auto& row : rows) out += fmt::format("{},{},{}\n", name(row.sentiment), row.term, row.count);
    return out;
}

json termfreq_json(const std::vector<TermRow>& rows, const TermFrequencyTable& table, const RunInfo& info) {
    json terms = json::array();
    for (const auto& row : rows)
        terms.push_back({{"sentiment", name(row.sentiment)}, {"term", row.term}, {"count", row.count}});
    return {{"tweets", table.tweets}, {"stemmer", info.stemmer}, {"terms", terms}};
}

json classification_json(std::string_view text, const StopWords& stopwords, const StemmedLexicon& lexicon) {
    const bool mood = is_mood_statement(text);
    const TokenViews views = token_views(text, stopwords);
    json doc = {
        {"text", std::string(text)},
        {"mood_statement", mood},
        {"phrase_tokens", views.phrase_tokens},
        {"word_tokens", views.word_tokens},
    };
    NormalizedTweet tweet;
    tweet.phrase_tokens = views.phrase_tokens;
    tweet.word_tokens = views.word_tokens;
    tweet.word_positions = views.word_positions;
    json matches = json::array();
    for (const auto& m : match_positions(tweet, lexicon)) {
        matches.push_back({{"position", m.position},
                           {"length", m.length},
                           {"sentiment", name(m.sentiment)},
                           {"term", m.term->surface}});
    }
    doc["matches"] = matches;
    const auto sentiment = mood ? classify(tweet, lexicon) : std::nullopt;
    doc["sentiment"] = sentiment ? json(name(*sentiment)) : json(nullptr);
    return doc;
}

std::string ingest_summary(const IngestReport& r) {
    return fmt::format(
        "records: seen {} parsed {} malformed {} mood-filtered {} ({:.1f}%) classified {}\n"
        "elapsed: {:.3f} s, {:.0f} records/s, {} worker(s)\n",
        r.total_seen, r.total_parsed, r.malformed(), r.total_mood_filtered, 100.0 * r.mood_filter_rate(),
        r.total_classified, r.elapsed_seconds, r.records_per_second, r.workers);
}

json ingest_json(const IngestReport& r) {
    json per = json::object();
    for (Sentiment s : kAllSentiments) per[std::string(name(s))] = r.per_sentiment[ordinal(s)];
    return {
        {"total_seen", r.total_seen},
        {"total_parsed", r.total_parsed},
        {"malformed", r.malformed()},
        {"total_mood_filtered", r.total_mood_filtered},
        {"total_classified", r.total_classified},
        {"per_sentiment", per},
        {"elapsed_seconds", r.elapsed_seconds},
        {"records_per_second", r.records_per_second},
        {"workers", r.workers},
    };
}

}  // namespace panast
