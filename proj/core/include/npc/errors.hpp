#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace npc {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input document could not be parsed; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// An erasure pattern that cannot be solved; carries the failed positions.
class UnrecoverableErasure : public Error {
public:
    explicit UnrecoverableErasure(std::vector<std::size_t> positions)
        : Error(describe(positions)), positions_(std::move(positions)) {}

    const std::vector<std::size_t>& positions() const { return positions_; }

private:
    static std::string describe(const std::vector<std::size_t>& pos) {
        std::string s = "unrecoverable erasure pattern {";
        for (std::size_t i = 0; i < pos.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(pos[i]);
        }
        s += "}";
        return s;
    }

    std::vector<std::size_t> positions_;
};

}  // namespace npc
