#include "panast/corpus.hpp"

#include <chrono>
#include <unordered_set>

#include <rapidjson/memorystream.h>
#include <rapidjson/reader.h>

#include "json.hpp"

#include "panast/worker_pool.hpp"

namespace panast {

using nlohmann::json;

namespace {

// Streaming handler that keeps only the top-level fields of a record and
// ignores everything else. A later duplicate key overrides an earlier one.
class RecordHandler : public rapidjson::BaseReaderHandler<rapidjson::UTF8<>, RecordHandler> {
public:
    enum class Field { None, Id, CreatedAt, Text, Lang, Region };

    bool Default() {
        if (depth_ == 1 && field_ != Field::None) {
            if (field_ == Field::Id) id_ok_ = false;
            else invalidate(field_);
        }
        field_ = Field::None;
        return true;
    }
    bool Int(int v) { return integer(std::to_string(v)); }
    bool Uint(unsigned v) { return integer(std::to_string(v)); }
    bool Int64(std::int64_t v) { return integer(std::to_string(v)); }
    bool Uint64(std::uint64_t v) { return integer(std::to_string(v)); }

    bool String(const char* str, rapidjson::SizeType length, bool) {
        if (depth_ == 1) {
            const std::string_view value(str, length);
            switch (field_) {
                case Field::Id: set(id_, id_ok_, value); break;
                case Field::CreatedAt: set(created_at_, created_ok_, value); break;
                case Field::Text: set(text_, text_ok_, value); break;
                case Field::Lang: set(lang_, lang_ok_, value); break;
                case Field::Region: set(region_, region_ok_, value); break;
                case Field::None: break;
            }
        }
        field_ = Field::None;
        return true;
    }
    bool Key(const char* str, rapidjson::SizeType length, bool) {
        field_ = Field::None;
        if (depth_ != 1) return true;
        const std::string_view key(str, length);
        if (key == "id") field_ = Field::Id;
        else if (key == "created_at") field_ = Field::CreatedAt;
        else if (key == "text") field_ = Field::Text;
        else if (key == "lang") field_ = Field::Lang;
        else if (key == "region") field_ = Field::Region;
        return true;
    }
    bool StartObject() { return start(true); }
    bool EndObject(rapidjson::SizeType) { return end(); }
    bool StartArray() { return start(false); }
    bool EndArray(rapidjson::SizeType) { return end(); }

    std::optional<TweetRecord> record() const {
        if (!top_is_object_ || !id_ok_ || !created_ok_ || !text_ok_ || id_.empty()) return std::nullopt;
        if (text_.size() > kMaxTextBytes) return std::nullopt;
        const auto ts = parse_timestamp(created_at_);
        if (!ts) return std::nullopt;
        TweetRecord r;
        r.id = id_;
        r.created_at = *ts;
        r.text = text_;
        if (lang_ok_) r.lang = lang_;
        if (region_ok_) r.region = region_;
        return r;
    }

private:
    bool integer(std::string value) {
        if (depth_ == 1 && field_ == Field::Id) {
            id_ = std::move(value);
            id_ok_ = true;
            field_ = Field::None;
            return true;
        }
        return Default();
    }
    static void set(std::string& slot, bool& ok, std::string_view value) {
        slot.assign(value);
        ok = true;
    }
    void invalidate(Field f) {
        switch (f) {
            case Field::CreatedAt: created_ok_ = false; break;
            case Field::Text: text_ok_ = false; break;
            case Field::Lang: lang_ok_ = false; break;
            case Field::Region: region_ok_ = false; break;
            default: break;
        }
    }
    bool start(bool object) {
        if (depth_ == 0) top_is_object_ = object;
        else if (depth_ == 1 && field_ != Field::None) Default();
        field_ = Field::None;
        ++depth_;
        return true;
    }
    bool end() {
        --depth_;
        return true;
    }

    int depth_ = 0;
    Field field_ = Field::None;
    bool top_is_object_ = false;
    bool id_ok_ = false, created_ok_ = false, text_ok_ = false, lang_ok_ = false, region_ok_ = false;
    std::string id_, created_at_, text_, lang_, region_;
};

}  // namespace

std::optional<TweetRecord> parse_record(std::string_view line) {
    RecordHandler handler;
    rapidjson::MemoryStream stream(line.data(), line.size());
    rapidjson::Reader reader;
    unsigned char high = 0;
    for (const char c : line) high |= static_cast<unsigned char>(c);
    const bool ok = (high & 0x80) ? !reader.Parse<rapidjson::kParseValidateEncodingFlag>(stream, handler).IsError()
                                  : !reader.Parse<rapidjson::kParseNoFlags>(stream, handler).IsError();
    if (!ok) return std::nullopt;
    return handler.record();
}

std::string format_record(const TweetRecord& record) {
    json doc = {
        {"id", record.id},
        {"created_at", format_timestamp(record.created_at)},
        {"text", record.text},
    };
    if (record.lang) doc["lang"] = *record.lang;
    if (record.region) doc["region"] = *record.region;
    return doc.dump(-1, ' ', false, json::error_handler_t::replace);
}

std::optional<TweetRecord> RecordReader::next() {
    while (source_.next(line_)) {
        if (line_.find_first_not_of(" \t\r") == std::string::npos) continue;
        ++seen_;
        if (auto record = parse_record(line_)) {
            ++parsed_;
            return record;
        }
    }
    return std::nullopt;
}

double IngestReport::mood_filter_rate() const noexcept {
    return total_parsed == 0 ? 0.0
                             : static_cast<double>(total_mood_filtered) / static_cast<double>(total_parsed);
}

RecordOutcome classify_record(const TweetRecord& record, const Pipeline& pipeline) {
    RecordOutcome outcome;
    outcome.parsed = true;
    const auto tweet = normalize(record, pipeline.stopwords);
    if (!tweet) return outcome;
    outcome.mood = true;
    outcome.sentiment = classify(*tweet, pipeline.lexicon);
    return outcome;
}

void tally(SentimentCounts& counts, const RecordOutcome& outcome) {
    ++counts.total_seen;
    if (!outcome.mood) return;
    ++counts.total_normalized;
    if (outcome.sentiment) ++counts.per_sentiment[ordinal(*outcome.sentiment)];
}

void tally(IngestReport& report, const RecordOutcome& outcome) {
    ++report.total_seen;
    if (!outcome.parsed) return;
    ++report.total_parsed;
    if (!outcome.mood) return;
    ++report.total_mood_filtered;
    if (!outcome.sentiment) return;
    ++report.total_classified;
    ++report.per_sentiment[ordinal(*outcome.sentiment)];
}

void merge_into(IngestReport& into, const IngestReport& from) {
    into.total_seen += from.total_seen;
    into.total_parsed += from.total_parsed;
    into.total_mood_filtered += from.total_mood_filtered;
    into.total_classified += from.total_classified;
    for (std::size_t i = 0; i < kSentimentCount; ++i) into.per_sentiment[i] += from.per_sentiment[i];
}

namespace {

bool is_blank(std::string_view line) {
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

void finish_timing(IngestReport& report, std::chrono::steady_clock::time_point start,
                   std::size_t workers) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report.elapsed_seconds = elapsed.count();
    report.records_per_second =
        report.elapsed_seconds > 0.0 ? static_cast<double>(report.total_seen) / report.elapsed_seconds : 0.0;
    report.workers = workers;
}

}  // namespace

CountResult count_sentiments(LineSource& source, const Pipeline& pipeline, std::size_t workers) {
    const auto start = std::chrono::steady_clock::now();
    struct Acc {
        SentimentCounts counts;
        IngestReport report;
    };
    Acc total = reduce_lines(
        source, workers, Acc{},
        [&](Acc& acc, const std::string& line) {
            if (is_blank(line)) return;
            RecordOutcome outcome;
            if (auto record = parse_record(line)) outcome = classify_record(*record, pipeline);
            tally(acc.report, outcome);
            tally(acc.counts, outcome);
        },
        [](Acc& into, const Acc& from) {
            into.counts = merge_counts(into.counts, from.counts);
            merge_into(into.report, from.report);
        });
    finish_timing(total.report, start, workers);
    return CountResult{total.counts, total.report};
}

TermFrequencyTable term_frequencies(LineSource& source, const Pipeline& pipeline, std::size_t workers) {
    const std::size_t n_entries = pipeline.lexicon.entries().size();
    TermFrequencyTable zero;
    zero.counts.assign(n_entries, 0);
    return reduce_lines(
        source, workers, zero,
        [&](TermFrequencyTable& acc, const std::string& line) {
            if (is_blank(line)) return;
            const auto record = parse_record(line);
            if (!record) return;
            const auto tweet = normalize(*record, pipeline.stopwords);
            if (!tweet) return;
            ++acc.tweets;
            std::vector<bool> hit(n_entries, false);
            for (const auto& m : match_positions(*tweet, pipeline.lexicon)) {
                if (!hit[m.entry]) {
                    hit[m.entry] = true;
                    ++acc.counts[m.entry];
                }
            }
        },
        [](TermFrequencyTable& into, const TermFrequencyTable& from) {
            into.tweets += from.tweets;
            for (std::size_t i = 0; i < into.counts.size(); ++i) into.counts[i] += from.counts[i];
        });
}

}  // namespace panast
