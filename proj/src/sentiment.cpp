#include "panast/sentiment.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace panast {
namespace {

constexpr std::array<std::string_view, kSentimentCount> kNames{
    "fear",     "sadness",   "guilt",          "hostility",     "shyness",  "fatigue",
    "surprise", "joviality", "self-assurance", "attentiveness", "serenity",
};

constexpr std::array<std::string_view, kSentimentCount> kDisplayNames{
    "Fear",     "Sadness",   "Guilt",          "Hostility",     "Shyness",  "Fatigue",
    "Surprise", "Joviality", "Self-assurance", "Attentiveness", "Serenity",
};

}  // namespace

std::string_view name(Sentiment s) noexcept { return kNames[ordinal(s)]; }

std::string_view display_name(Sentiment s) noexcept { return kDisplayNames[ordinal(s)]; }

std::optional<Sentiment> parse_sentiment(std::string_view text) noexcept {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "selfassurance" || lower == "self_assurance") lower = "self-assurance";
    for (std::size_t i = 0; i < kSentimentCount; ++i)
        if (kNames[i] == lower) return kAllSentiments[i];
    return std::nullopt;
}

}  // namespace panast
