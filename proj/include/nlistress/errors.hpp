#pragma once

#include <stdexcept>
#include <string>

namespace nlistress {

// Malformed input data (corpus lines, prediction files, WordNet records).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Missing or unreadable bundled/external resources (WordNet dir, word lists).
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Strict-mode scoring aborted because a prediction is missing.
class StrictMissingError : public std::runtime_error {
public:
    StrictMissingError(const std::string& what, std::string pair_id)
        : std::runtime_error(what), pair_id_(std::move(pair_id)) {}
    const std::string& pair_id() const { return pair_id_; }

private:
    std::string pair_id_;
};

} // namespace nlistress
