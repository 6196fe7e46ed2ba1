#include "panast/error.hpp"

namespace panast {

const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::Io: return "IoError";
        case ErrorKind::Config: return "ConfigError";
        case ErrorKind::EmptyCorpus: return "EmptyCorpus";
        case ErrorKind::DegenerateBaseline: return "DegenerateBaseline";
        case ErrorKind::EmptyEvent: return "EmptyEvent";
        case ErrorKind::InvalidBaseline: return "InvalidBaseline";
        case ErrorKind::Overflow: return "OverflowError";
        case ErrorKind::Usage: return "UsageError";
    }
    return "Error";
}

}  // namespace panast
