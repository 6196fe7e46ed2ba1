#include "panast/line_source.hpp"

#include <cstdio>
#include <cstring>

#include <fmt/format.h>
#include <zlib.h>

#include "panast/error.hpp"

namespace panast {

struct LineSource::Input {
    virtual ~Input() = default;
    // Bytes read into buf; 0 at end. Throws Error(Io) on failure.
    virtual std::size_t read(char* buf, std::size_t cap) = 0;
};

namespace {

constexpr std::size_t kBufferBytes = 1 << 20;

class FileInput final : public LineSource::Input {
public:
    FileInput(std::FILE* f, std::string name, bool owned) : f_(f), name_(std::move(name)), owned_(owned) {}
    ~FileInput() override {
        if (owned_ && f_) std::fclose(f_);
    }
    std::size_t read(char* buf, std::size_t cap) override {
        const std::size_t n = std::fread(buf, 1, cap, f_);
        if (n == 0 && std::ferror(f_)) throw Error(ErrorKind::Io, fmt::format("read error on '{}'", name_));
        return n;
    }

private:
    std::FILE* f_;
    std::string name_;
    bool owned_;
};

class GzipInput final : public LineSource::Input {
public:
    GzipInput(gzFile f, std::string name) : f_(f), name_(std::move(name)) {
        gzbuffer(f_, 256 * 1024);
    }
    ~GzipInput() override { gzclose(f_); }
    std::size_t read(char* buf, std::size_t cap) override {
        const int n = gzread(f_, buf, static_cast<unsigned>(cap));
        if (n < 0) {
            int errnum = 0;
            const char* msg = gzerror(f_, &errnum);
            throw Error(ErrorKind::Io, fmt::format("gzip read error on '{}': {}", name_, msg));
        }
        return static_cast<std::size_t>(n);
    }

private:
    gzFile f_;
    std::string name_;
};

class StringInput final : public LineSource::Input {
public:
    explicit StringInput(std::string data) : data_(std::move(data)) {}
    std::size_t read(char* buf, std::size_t cap) override {
        const std::size_t n = std::min(cap, data_.size() - pos_);
        std::memcpy(buf, data_.data() + pos_, n);
        pos_ += n;
        return n;
    }

private:
    std::string data_;
    std::size_t pos_ = 0;
};

bool has_gz_suffix(const std::string& path) {
    return path.size() > 3 && path.compare(path.size() - 3, 3, ".gz") == 0;
}

}  // namespace

LineSource::LineSource(std::vector<std::unique_ptr<Input>> inputs)
    : inputs_(std::move(inputs)), buffer_(kBufferBytes) {}

LineSource::LineSource(LineSource&&) noexcept = default;
LineSource& LineSource::operator=(LineSource&&) noexcept = default;
LineSource::~LineSource() = default;

LineSource LineSource::open(const std::vector<std::string>& paths) {
    std::vector<std::unique_ptr<Input>> inputs;
    for (const auto& path : paths) {
        if (path == "-") {
            inputs.push_back(std::make_unique<FileInput>(stdin, "<stdin>", false));
        } else if (has_gz_suffix(path)) {
            gzFile f = gzopen(path.c_str(), "rb");
            if (!f) throw Error(ErrorKind::Io, fmt::format("cannot open '{}'", path));
            inputs.push_back(std::make_unique<GzipInput>(f, path));
        } else {
            std::FILE* f = std::fopen(path.c_str(), "rb");
            if (!f) throw Error(ErrorKind::Io, fmt::format("cannot open '{}'", path));
            inputs.push_back(std::make_unique<FileInput>(f, path, true));
        }
    }
    return LineSource(std::move(inputs));
}

LineSource LineSource::from_string(std::string data) {
    std::vector<std::unique_ptr<Input>> inputs;
    inputs.push_back(std::make_unique<StringInput>(std::move(data)));
    return LineSource(std::move(inputs));
}

bool LineSource::fill() {
    // Compact unread bytes to the front, grow if a single line fills the buffer.
    if (begin_ > 0) {
        std::memmove(buffer_.data(), buffer_.data() + begin_, end_ - begin_);
        end_ -= begin_;
        begin_ = 0;
    }
    if (end_ == buffer_.size()) buffer_.resize(buffer_.size() * 2);
    while (current_ < inputs_.size()) {
        const std::size_t n = inputs_[current_]->read(buffer_.data() + end_, buffer_.size() - end_);
        if (n > 0) {
            end_ += n;
            return true;
        }
        ++current_;
        // A file without a trailing newline must not run into the next one.
        if (end_ > 0 && buffer_[end_ - 1] != '\n' && current_ < inputs_.size()) {
            buffer_[end_++] = '\n';
            return true;
        }
    }
    return false;
}

bool LineSource::next(std::string& line) {
    std::size_t scanned = begin_;
    for (;;) {
        const char* start = buffer_.data() + scanned;
        const void* nl = std::memchr(start, '\n', end_ - scanned);
        if (nl) {
            const auto pos = static_cast<std::size_t>(static_cast<const char*>(nl) - buffer_.data());
            std::size_t len = pos - begin_;
            if (len > 0 && buffer_[begin_ + len - 1] == '\r') --len;
            line.assign(buffer_.data() + begin_, len);
            begin_ = pos + 1;
            return true;
        }
        const std::size_t pending = end_ - begin_;
        if (!fill()) {
            if (end_ == begin_) return false;
            std::size_t len = end_ - begin_;
            if (buffer_[begin_ + len - 1] == '\r') --len;
            line.assign(buffer_.data() + begin_, len);
            begin_ = end_;
            return true;
        }
        scanned = begin_ + pending;
    }
}

}  // namespace panast
