#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace apexhom {

// Base for everything this library throws on purpose.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Bad vertex ids, bad exponents, zero denominators, probabilities outside
// [0,1], hypotheses that do not hold structurally.
class invalid_argument_error : public error {
public:
    explicit invalid_argument_error(const std::string& what) : error(what) {}
};

// Malformed textual input. Carries the byte offset of the first bad byte.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t byte_offset)
        : error(what + " (byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return byte_offset_; }

private:
    std::size_t byte_offset_;
};

// An instance was refused because it would exceed a configured work guard.
class resource_limit_error : public error {
public:
    explicit resource_limit_error(const std::string& what) : error(what) {}
};

// Unreadable or unwritable files.
class io_error : public error {
public:
    explicit io_error(const std::string& what) : error(what) {}
};

} // namespace apexhom
