#include "panast/events.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "bundled_data.hpp"
#include "panast/error.hpp"
#include "panast/worker_pool.hpp"

namespace panast {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_list(std::string_view s) {
    std::vector<std::string> out;
    while (!s.empty()) {
        const auto comma = s.find(',');
        const auto item = trim(s.substr(0, comma));
        if (!item.empty()) out.emplace_back(item);
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    return out;
}

bool contains_phrase(const std::vector<std::string>& tokens, const std::vector<std::string>& phrase) {
    if (phrase.empty() || phrase.size() > tokens.size()) return false;
    return std::search(tokens.begin(), tokens.end(), phrase.begin(), phrase.end()) != tokens.end();
}

}  // namespace

void check_event(const EventSpec& event) {
    if (event.name.empty()) throw Error(ErrorKind::Config, "event without a name");
    if (event.keywords.empty())
        throw Error(ErrorKind::Config, fmt::format("event '{}' has no keywords", event.name));
    for (const auto& k : event.keywords) {
        if (trim(k).empty())
            throw Error(ErrorKind::Config, fmt::format("event '{}' has an empty keyword", event.name));
        if (std::any_of(k.begin(), k.end(), [](char c) { return c >= 'A' && c <= 'Z'; }))
            throw Error(ErrorKind::Config,
                        fmt::format("event '{}': keyword '{}' is not lowercase", event.name, k));
        if (tokenize(k).empty())
            throw Error(ErrorKind::Config,
                        fmt::format("event '{}': keyword '{}' has no word characters", event.name, k));
    }
    if (event.start > event.end)
        throw Error(ErrorKind::Config, fmt::format("event '{}': window start after end", event.name));
    if (event.region_filter && event.region_filter->empty())
        throw Error(ErrorKind::Config, fmt::format("event '{}': empty region filter", event.name));
}

std::vector<EventSpec> parse_events(std::istream& in) {
    std::vector<EventSpec> events;
    std::vector<bool> has_window;
    std::string raw;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& msg) {
        throw Error(ErrorKind::Config, fmt::format("events line {}: {}", line_no, msg));
    };
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;
        if (line.front() == '[') {
            if (line.back() != ']' || !line.starts_with("[event ")) fail("expected '[event <name>]'");
            const auto name = trim(line.substr(7, line.size() - 8));
            if (name.empty()) fail("event name missing");
            EventSpec e;
            e.name = std::string(name);
            events.push_back(std::move(e));
            has_window.push_back(false);
            continue;
        }
        if (events.empty()) fail("directive outside of an [event] block");
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) fail("expected 'key = value'");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));
        EventSpec& e = events.back();
        if (key == "keywords") {
            for (auto& k : split_list(value)) e.keywords.push_back(std::move(k));
        } else if (key == "window") {
            const auto dots = value.find("..");
            if (dots == std::string_view::npos) fail("window must be '<start> .. <end>'");
            const auto start = parse_date(trim(value.substr(0, dots)));
            const auto end = parse_date(trim(value.substr(dots + 2)));
            if (!start || !end) fail("window dates must be YYYY-MM-DD");
            e.start = *start;
            e.end = *end;
            has_window.back() = true;
        } else if (key == "region") {
            const auto codes = split_list(value);
            e.region_filter = std::set<std::string>(codes.begin(), codes.end());
        } else if (key == "description") {
            e.description = std::string(value);
        } else {
            fail(fmt::format("unknown key '{}'", key));
        }
    }
    for (std::size_t i = 0; i < events.size(); ++i) {
        if (!has_window[i])
            throw Error(ErrorKind::Config, fmt::format("event '{}' has no window", events[i].name));
        check_event(events[i]);
        for (std::size_t j = 0; j < i; ++j)
            if (events[j].name == events[i].name)
                throw Error(ErrorKind::Config, fmt::format("duplicate event '{}'", events[i].name));
    }
    return events;
}

std::vector<EventSpec> load_events_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::Io, fmt::format("cannot open events file '{}'", path));
    return parse_events(in);
}

const std::vector<EventSpec>& bundled_events() {
    static const std::vector<EventSpec> events = [] {
        std::istringstream in{std::string(bundled::events_table4())};
        return parse_events(in);
    }();
    return events;
}

const EventSpec& find_event(const std::vector<EventSpec>& events, const std::string& name) {
    auto lower = [](std::string s) {
        std::transform(s.begin(), s.end(), s.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        return s;
    };
    const std::string wanted = lower(name);
    for (const auto& e : events)
        if (lower(e.name) == wanted) return e;
    throw Error(ErrorKind::Config, fmt::format("unknown event '{}'", name));
}

EventMatcher::EventMatcher(EventSpec event) : event_(std::move(event)) {
    check_event(event_);
    for (const auto& k : event_.keywords) phrases_.push_back(tokenize(k));
}

bool EventMatcher::operator()(const TweetRecord& record) const {
    const Date day = utc_day(record.created_at);
    if (day < event_.start || day > event_.end) return false;
    if (event_.region_filter) {
        if (!record.region || !event_.region_filter->contains(*record.region)) return false;
    }
    const auto tokens = tokenize(record.text);
    return std::any_of(phrases_.begin(), phrases_.end(),
                       [&](const auto& phrase) { return contains_phrase(tokens, phrase); });
}

bool matches_event(const TweetRecord& record, const EventSpec& event) {
    return EventMatcher(event)(record);
}

namespace {

struct EventAcc {
    SentimentCounts counts;
    IngestReport report;
    std::uint64_t matched = 0;
};

void merge_event_acc(EventAcc& into, const EventAcc& from) {
    into.counts = merge_counts(into.counts, from.counts);
    merge_into(into.report, from.report);
    into.matched += from.matched;
}

// Ingest-level tallies for a line; returns the record if it belongs to the event.
std::optional<TweetRecord> admit(const std::string& line, const EventMatcher& matcher, IngestReport& report,
                                 std::uint64_t& matched) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) return std::nullopt;
    ++report.total_seen;
    auto record = parse_record(line);
    if (!record) return std::nullopt;
    ++report.total_parsed;
    if (!matcher(*record)) return std::nullopt;
    ++matched;
    return record;
}

void record_outcome(IngestReport& report, const RecordOutcome& outcome) {
    if (!outcome.mood) return;
    ++report.total_mood_filtered;
    if (!outcome.sentiment) return;
    ++report.total_classified;
    ++report.per_sentiment[ordinal(*outcome.sentiment)];
}

void finish(IngestReport& report, std::chrono::steady_clock::time_point start, std::size_t workers) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report.elapsed_seconds = elapsed.count();
    report.records_per_second =
        report.elapsed_seconds > 0.0 ? static_cast<double>(report.total_seen) / report.elapsed_seconds : 0.0;
    report.workers = workers;
}

[[noreturn]] void throw_empty(const EventSpec& event, std::uint64_t matched) {
    if (matched == 0)
        throw Error(ErrorKind::EmptyEvent, fmt::format("no tweets match event '{}'", event.name));
    throw Error(ErrorKind::EmptyEvent,
                fmt::format("{} tweets match event '{}' but none passed the mood filter", matched,
                            event.name));
}

}  // namespace

EventScore extract_and_score(LineSource& source, const EventSpec& event, const BaselineTable& baseline,
                             const Pipeline& pipeline, const EventOptions& options) {
    check_baseline(baseline);
    const EventMatcher matcher(event);
    const auto start = std::chrono::steady_clock::now();
    EventAcc acc = reduce_lines(
        source, options.workers, EventAcc{},
        [&](EventAcc& a, const std::string& line) {
            const auto record = admit(line, matcher, a.report, a.matched);
            if (!record) return;
            const RecordOutcome outcome = classify_record(*record, pipeline);
            tally(a.counts, outcome);
            record_outcome(a.report, outcome);
        },
        merge_event_acc);
    finish(acc.report, start, options.workers);
    if (acc.counts.total_normalized == 0) throw_empty(event, acc.matched);

    EventScore out;
    out.vector = score_vector(baseline, acc.counts, options.convention);
    out.counts = acc.counts;
    out.report = acc.report;
    out.matched = acc.matched;
    if (acc.counts.total_normalized < options.min_event_size) {
        out.warnings.push_back(fmt::format(
            "DegenerateEvent: only {} mood-filtered tweets matched '{}' (minimum {})",
            acc.counts.total_normalized, event.name, options.min_event_size));
    }
    return out;
}

TimeSeriesResult timeseries(LineSource& source, const EventSpec& event, const BaselineTable& baseline,
                            const Pipeline& pipeline, const EventOptions& options, bool split_by_region) {
    check_baseline(baseline);
    const EventMatcher matcher(event);
    const auto start = std::chrono::steady_clock::now();

    using Key = std::pair<std::string, Date>;
    struct Acc {
        std::map<Key, SentimentCounts> buckets;
        IngestReport report;
        std::uint64_t matched = 0;
    };
    Acc acc = reduce_lines(
        source, options.workers, Acc{},
        [&](Acc& a, const std::string& line) {
            const auto record = admit(line, matcher, a.report, a.matched);
            if (!record) return;
            const RecordOutcome outcome = classify_record(*record, pipeline);
            record_outcome(a.report, outcome);
            std::string region = split_by_region ? record->region.value_or("unknown") : std::string();
            tally(a.buckets[Key{std::move(region), utc_day(record->created_at)}], outcome);
        },
        [](Acc& into, const Acc& from) {
            for (const auto& [key, counts] : from.buckets)
                into.buckets[key] = merge_counts(into.buckets[key], counts);
            merge_into(into.report, from.report);
            into.matched += from.matched;
        });
    finish(acc.report, start, options.workers);

    TimeSeriesResult out;
    out.report = acc.report;
    for (const auto& [key, counts] : acc.buckets) {
        if (counts.total_normalized == 0) continue;
        if (out.series.empty() || out.series.back().region != key.first) {
            out.series.push_back(TimeSeries{key.first, {}});
        }
        out.series.back().points.push_back(
            TimePoint{key.second, counts, score_vector(baseline, counts, options.convention)});
    }
    if (out.series.empty()) throw_empty(event, acc.matched);
    return out;
}

}  // namespace panast
