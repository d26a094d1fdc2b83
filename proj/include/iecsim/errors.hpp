#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace iecsim {

// Parse/encode failure in one of the codecs. Carries the offending field
// name (when known) and the byte offset into the input (when known).
class CodecError : public std::runtime_error {
public:
    static constexpr std::size_t kNoOffset = static_cast<std::size_t>(-1);

    explicit CodecError(std::string what, std::string field = {},
                        std::size_t offset = kNoOffset)
        : std::runtime_error(std::move(what)),
          field_(std::move(field)),
          offset_(offset) {}

    const std::string& field() const noexcept { return field_; }
    std::size_t offset() const noexcept { return offset_; }

private:
    std::string field_;
    std::size_t offset_;
};

// Frame or field exceeds a configured size limit.
class SizeError : public CodecError {
public:
    using CodecError::CodecError;
};

// Simulation build rejected; lists every fault found, not just the first.
class BuildError : public std::runtime_error {
public:
    explicit BuildError(std::vector<std::string> faults)
        : std::runtime_error(join(faults)), faults_(std::move(faults)) {}

    const std::vector<std::string>& faults() const noexcept { return faults_; }

private:
    static std::string join(const std::vector<std::string>& faults) {
        std::string out = "simulation build failed:";
        for (const auto& f : faults) {
            out += "\n  - ";
            out += f;
        }
        return out;
    }

    std::vector<std::string> faults_;
};

// File I/O or file-format failure; record index is set for per-record
// pcap errors.
class IoError : public std::runtime_error {
public:
    static constexpr std::size_t kNoRecord = static_cast<std::size_t>(-1);

    explicit IoError(std::string what, std::size_t record = kNoRecord)
        : std::runtime_error(std::move(what)), record_(record) {}

    std::size_t record() const noexcept { return record_; }

private:
    std::size_t record_;
};

// Misuse of a state machine or mismatched configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace iecsim
