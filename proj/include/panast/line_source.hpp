#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace panast {

/// Buffered newline-delimited reader over plain files, gzip files (selected
/// by a ".gz" suffix), standard input ("-"), or an in-memory string. Several
/// paths are read back to back in the given order.
class LineSource {
public:
    using ChunkReader = std::function<std::size_t(char* buf, std::size_t cap)>;

    /// Throws Error(Io) if any path cannot be opened.
    static LineSource open(const std::vector<std::string>& paths);
    static LineSource open(const std::string& path) { return open(std::vector<std::string>{path}); }
    static LineSource from_string(std::string data);

    LineSource(LineSource&&) noexcept;
    LineSource& operator=(LineSource&&) noexcept;
    ~LineSource();

    /// Next line without its terminator ("\r\n" or "\n"). False at end.
    /// Throws Error(Io) on a read failure.
    bool next(std::string& line);

    struct Input;

private:
    explicit LineSource(std::vector<std::unique_ptr<Input>> inputs);
    bool fill();

    std::vector<std::unique_ptr<Input>> inputs_;
    std::size_t current_ = 0;
    std::vector<char> buffer_;
    std::size_t begin_ = 0;
    std::size_t end_ = 0;
};

}  // namespace panast
