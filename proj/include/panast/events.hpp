#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "panast/corpus.hpp"
#include "panast/score.hpp"
#include "panast/timeutil.hpp"

namespace panast {

struct EventSpec {
    std::string name;
    std::string description;
    std::vector<std::string> keywords;  // lowercase phrases
    Date start{};
    Date end{};  // inclusive
    std::optional<std::set<std::string>> region_filter;
};

/// Throws Error(Config) if the spec breaks an invariant.
void check_event(const EventSpec& event);

/// Parses the event file grammar (see data/events/table4.events).
std::vector<EventSpec> parse_events(std::istream& in);
std::vector<EventSpec> load_events_file(const std::string& path);
const std::vector<EventSpec>& bundled_events();

/// Case-insensitive lookup by name. Throws Error(Config) if absent.
const EventSpec& find_event(const std::vector<EventSpec>& events, const std::string& name);

/// Event membership is decided on the raw record: the date window, an
/// unstemmed contiguous keyword phrase, and the region filter.
class EventMatcher {
public:
    explicit EventMatcher(EventSpec event);
    bool operator()(const TweetRecord& record) const;
    const EventSpec& event() const noexcept { return event_; }

private:
    EventSpec event_;
    std::vector<std::vector<std::string>> phrases_;
};

bool matches_event(const TweetRecord& record, const EventSpec& event);

struct EventScore {
    ScoreVector vector;
    SentimentCounts counts;
    IngestReport report;
    std::uint64_t matched = 0;  // records matching the event before the mood filter
    std::vector<std::string> warnings;
};

inline constexpr std::uint64_t kDefaultMinEventSize = 100;

struct EventOptions {
    std::size_t workers = 1;
    SignConvention convention = SignConvention::Prose;
    std::uint64_t min_event_size = kDefaultMinEventSize;
};

/// Filter by the event, count sentiments, score against the baseline.
/// Throws Error(EmptyEvent) when no mood-filtered tweet matches.
EventScore extract_and_score(LineSource& source, const EventSpec& event,
                             const BaselineTable& baseline, const Pipeline& pipeline,
                             const EventOptions& options = {});

struct TimePoint {
    Date date{};
    SentimentCounts counts;
    ScoreVector vector;
};

struct TimeSeries {
    std::string region;  // empty unless split by region
    std::vector<TimePoint> points;  // strictly increasing dates
};

struct TimeSeriesResult {
    std::vector<TimeSeries> series;  // one, or one per region when split
    IngestReport report;
};

/// One point per UTC day that has at least one matching mood-filtered tweet.
/// With `split_by_region`, one series per region code ("unknown" for records
/// without one). Throws Error(EmptyEvent) when nothing matches.
TimeSeriesResult timeseries(LineSource& source, const EventSpec& event,
                            const BaselineTable& baseline, const Pipeline& pipeline,
                            const EventOptions& options = {}, bool split_by_region = false);

}  // namespace panast
