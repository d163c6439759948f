#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mocha/errors.hpp"
#include "mocha/metrics.hpp"

namespace mocha {

// Character counts are code points, not bytes: the constrained fields are
// text and the platform limits are stated in characters.
inline long codepoint_count(std::string_view text) {
    long n = 0;
    for (unsigned char c : text)
        if ((c & 0xC0) != 0x80) ++n;
    return n;
}

inline std::string format_thousands(long value) {
    std::string digits = std::to_string(value);
    std::string out;
    const std::size_t first = digits.size() % 3 == 0 ? 3 : digits.size() % 3;
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i != 0 && (i - first) % 3 == 0 && i >= first) out += ',';
        out += digits[i];
    }
    return out;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r\n";
    const auto begin = s.find_first_not_of(ws);
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(ws);
    return s.substr(begin, end - begin + 1);
}

}  // namespace detail

// Structured SKILL.md: flat `key: value` frontmatter between `---` lines,
// then a Markdown body of uniquely named `# section` blocks. Unknown
// frontmatter keys are preserved, in order, in `metadata`.
struct SkillDoc {
    std::string name;
    std::string description;
    std::string compatibility;
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> allowed_tools;
    std::vector<std::pair<std::string, std::string>> body;  // (section name, content)

    bool operator==(const SkillDoc&) const = default;

    long description_length() const { return codepoint_count(description); }

    // Total instruction content across sections; header lines are not part
    // of the constrained payload (an empty body measures 0 and scores 1).
    long body_length() const {
        long total = 0;
        for (const auto& [_, content] : body) total += codepoint_count(content);
        return total;
    }
};

inline SkillDoc parse_skill(std::string_view text) {
    std::vector<std::string_view> lines;
    {
        std::size_t start = 0;
        while (start <= text.size()) {
            const auto nl = text.find('\n', start);
            if (nl == std::string_view::npos) {
                lines.push_back(text.substr(start));
                break;
            }
            lines.push_back(text.substr(start, nl - start));
            start = nl + 1;
        }
    }
    auto is_delim = [](std::string_view l) { return detail::trim(l) == "---"; };

    std::size_t i = 0;
    while (i < lines.size() && detail::trim(lines[i]).empty()) ++i;
    if (i >= lines.size() || !is_delim(lines[i]))
        throw parse_error("expected opening '---' frontmatter delimiter",
                          static_cast<int>(i + 1));
    ++i;

    SkillDoc doc;
    std::vector<std::string> seen_keys;
    bool closed = false;
    for (; i < lines.size(); ++i) {
        if (is_delim(lines[i])) {
            closed = true;
            ++i;
            break;
        }
        const std::string_view line = detail::trim(lines[i]);
        if (line.empty()) continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw parse_error("frontmatter line is not 'key: value'", static_cast<int>(i + 1));
        const std::string key{detail::trim(line.substr(0, colon))};
        const std::string value{detail::trim(line.substr(colon + 1))};
        if (key.empty())
            throw parse_error("empty frontmatter key", static_cast<int>(i + 1));
        if (std::find(seen_keys.begin(), seen_keys.end(), key) != seen_keys.end())
            throw parse_error("duplicate frontmatter key '" + key + "'",
                              static_cast<int>(i + 1));
        seen_keys.push_back(key);
        if (key == "name") {
            doc.name = value;
        } else if (key == "description") {
            doc.description = value;
        } else if (key == "compatibility") {
            doc.compatibility = value;
        } else if (key == "allowed-tools") {
            std::string_view inner{value};
            if (inner.size() >= 2 && inner.front() == '[' && inner.back() == ']')
                inner = inner.substr(1, inner.size() - 2);
            std::size_t start = 0;
            while (start <= inner.size() && !inner.empty()) {
                auto comma = inner.find(',', start);
                const auto piece =
                    detail::trim(inner.substr(start, comma == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : comma - start));
                if (!piece.empty()) doc.allowed_tools.emplace_back(piece);
                if (comma == std::string_view::npos) break;
                start = comma + 1;
            }
        } else {
            doc.metadata.emplace_back(key, value);
        }
    }
    if (!closed)
        throw parse_error("missing closing '---' frontmatter delimiter",
                          static_cast<int>(lines.size()));
    if (doc.name.empty())
        throw parse_error("frontmatter must define a non-empty 'name'", 1);

    // Body: '# name' headers, content runs to the next header.
    std::string current_name;
    std::string current_content;
    bool in_section = false;
    auto flush = [&]() {
        if (!in_section) return;
        for (const auto& [existing, _] : doc.body)
            if (existing == current_name)
                throw parse_error("duplicate section name '" + current_name + "'");
        doc.body.emplace_back(current_name, std::string{detail::trim(current_content)});
        current_content.clear();
    };
    for (; i < lines.size(); ++i) {
        const std::string_view raw = lines[i];
        if (raw.rfind("# ", 0) == 0 || detail::trim(raw) == "#") {
            flush();
            in_section = true;
            current_name = std::string{detail::trim(raw.substr(1))};
            if (current_name.empty())
                throw parse_error("section header has no name", static_cast<int>(i + 1));
        } else if (!in_section) {
            if (!detail::trim(raw).empty())
                throw parse_error("body text before any '# section' header",
                                  static_cast<int>(i + 1));
        } else {
            current_content += raw;
            current_content += '\n';
        }
    }
    flush();
    return doc;
}

// Canonical form: known fields first, then preserved metadata, one blank
// line between sections. parse(serialize(d)) == d and re-serializing the
// parse of serializer output is byte-identical.
inline std::string serialize_skill(const SkillDoc& doc) {
    std::string out = "---\n";
    out += "name: " + doc.name + "\n";
    out += "description: " + doc.description + "\n";
    out += "compatibility: " + doc.compatibility + "\n";
    for (const auto& [key, value] : doc.metadata) out += key + ": " + value + "\n";
    out += "allowed-tools: [";
    for (std::size_t t = 0; t < doc.allowed_tools.size(); ++t) {
        if (t) out += ", ";
        out += doc.allowed_tools[t];
    }
    out += "]\n---\n";
    for (const auto& [name, content] : doc.body) {
        out += "# " + name + "\n";
        out += content;
        out += "\n\n";
    }
    if (!doc.body.empty()) out.pop_back();  // single trailing newline
    return out;
}

struct ComplianceEntry {
    std::string field;
    bool pass = true;  // FAIL iff length > limit; exactly at the limit passes
    long length = 0;
    long limit = 0;

    std::string render() const {
        return field + ": " + (pass ? "PASS" : "FAIL") + " (" + format_thousands(length) +
               "/" + format_thousands(limit) + " chars)";
    }
};

struct ComplianceReport {
    std::vector<ComplianceEntry> entries;

    std::string render() const {
        std::string out;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i) out += '\n';
            out += entries[i].render();
        }
        return out;
    }
};

// (description compliance, body compliance) per the linear scoring rule.
inline std::pair<double, double> measure(const SkillDoc& doc, const ComplianceLimits& limits) {
    limits.validate();
    return {compliance_score(doc.description_length(), limits.description_limit),
            compliance_score(doc.body_length(), limits.body_limit)};
}

inline ComplianceReport compliance_report(const SkillDoc& doc, const ComplianceLimits& limits) {
    limits.validate();
    ComplianceReport report;
    const long desc_len = doc.description_length();
    const long body_len = doc.body_length();
    report.entries.push_back({"description", desc_len <= limits.description_limit, desc_len,
                              limits.description_limit});
    report.entries.push_back({"body", body_len <= limits.body_limit, body_len,
                              limits.body_limit});
    return report;
}

// The shared mutation prompt. Every selection strategy routes through this
// one template; the constraint block tracks the configured limits.
inline std::string render_mutation_prompt(const SkillDoc& doc, const ComplianceReport& report,
                                          const std::string& feedback_text,
                                          const std::vector<std::string>& components_to_update,
                                          const ComplianceLimits& limits = {}) {
    std::string components;
    for (std::size_t i = 0; i < components_to_update.size(); ++i) {
        if (i) components += ", ";
        components += components_to_update[i];
    }
    std::string out;
    out += "You are optimizing a SKILL.md specification for a language model skill.\n";
    out += "\n";
    out += "## SKILL.md Format Constraints\n";
    out += "(all fields are optimization targets)\n";
    out += "- description: <=" + format_thousands(limits.description_limit) + " characters\n";
    out += "- body: <=" + format_thousands(limits.body_limit) + " characters\n";
    out += "- All YAML frontmatter fields must remain valid YAML\n";
    out += "\n";
    out += "## Current SKILL.md\n";
    out += "```\n";
    out += serialize_skill(doc);
    if (out.back() != '\n') out += '\n';
    out += "```\n";
    out += "\n";
    out += "## Compliance Status\n";
    out += report.render() + "\n";
    out += "\n";
    out += "## Task Examples with Feedback\n";
    out += feedback_text + "\n";
    out += "\n";
    out += "## Sections to Improve: " + components + "\n";
    out += "\n";
    out += "Rewrite the SKILL.md: TOP priority is to improve task accuracy by adding as many "
           "steps or instructions as necessary while still respecting all field constraints. "
           "You may modify ANY field (description, body sections). Maintain valid YAML "
           "frontmatter and `# section_name` headers in the body.\n";
    out += "\n";
    out += "Return the complete SKILL.md within ``` blocks.\n";
    return out;
}

}  // namespace mocha
