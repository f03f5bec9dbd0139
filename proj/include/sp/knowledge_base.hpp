#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sp/pattern.hpp"

namespace sp {

struct ParseError : std::runtime_error {
    int line = 0;
    int column = 0;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error("line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ": " + msg),
          line(line_),
          column(col_) {}
};

// The set of Old patterns plus the alphabet of distinct symbol names.
// Immutable after construction; safe to share across threads.
class KnowledgeBase {
  public:
    KnowledgeBase() = default;
    explicit KnowledgeBase(std::vector<Pattern> patterns);

    const std::vector<Pattern>& patterns() const { return patterns_; }
    // Sorted list of distinct names occurring in the stored patterns.
    const std::vector<std::string>& alphabet() const { return alphabet_; }
    const Pattern* find(const std::string& id) const;
    bool empty() const { return patterns_.empty(); }
    std::size_t size() const { return patterns_.size(); }

  private:
    std::vector<Pattern> patterns_; // file order, the stable tiebreak order
    std::vector<std::string> alphabet_;
    std::unordered_map<std::string, std::size_t> by_id_;
};

struct KbFile {
    KnowledgeBase kb;
    std::optional<Pattern> new_pattern;
};

// Parses the line-oriented knowledge-base format:
//   - a line whose first non-blank character is '#' is a comment
//     ('#' may start a symbol name, e.g. `#Nr`, so comments are
//     line-leading only)
//   - `<id> <frequency> : <sym> <sym> ...` stores an Old pattern;
//     a `!` prefix marks an identification-class symbol
//   - `NEW : <sym> <sym> ...` supplies the New pattern (contents only,
//     at most one per file)
// Throws ParseError with line/column on any malformed input.
KbFile parse_kb_text(const std::string& text);

// Convenience: parse and keep only the stored patterns.
KnowledgeBase load_kb(const std::string& text);

KbFile load_kb_file(const std::string& path);

// Inverse of parse_kb_text for the stored patterns; reloading the result
// yields an identical KnowledgeBase.
std::string serialize_kb(const KnowledgeBase& kb);

} // namespace sp
