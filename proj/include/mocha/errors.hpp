#pragma once

#include <stdexcept>
#include <string>

namespace mocha {

// Violated precondition or call-site contract (length mismatch, empty pool, ...).
class contract_error : public std::logic_error {
public:
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

// Malformed SKILL.md or script input; carries a 1-based line number when known.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, int line)
        : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")" : what),
          line_(line) {}
    explicit parse_error(const std::string& what) : parse_error(what, 0) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

// Invalid run configuration; carries the offending key.
class config_error : public std::runtime_error {
public:
    config_error(const std::string& key, const std::string& what)
        : std::runtime_error(key + ": " + what), key_(key) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

// Exact hypervolume requested for a dimension the sweep does not support.
class unsupported_dimension : public std::runtime_error {
public:
    explicit unsupported_dimension(std::size_t m)
        : std::runtime_error("exact hypervolume supports M <= 3, got M = " + std::to_string(m)) {}
};

// Candidate generation failed (network, unparseable response, exhausted script).
class mutation_failure : public std::runtime_error {
public:
    explicit mutation_failure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mocha
