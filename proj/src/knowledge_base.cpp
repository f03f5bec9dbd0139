#include "sp/knowledge_base.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace sp {

KnowledgeBase::KnowledgeBase(std::vector<Pattern> patterns)
    : patterns_(std::move(patterns)) {
    std::set<std::string> names;
    for (std::size_t i = 0; i < patterns_.size(); ++i) {
        const Pattern& p = patterns_[i];
        if (p.symbols.empty())
            throw std::invalid_argument("pattern '" + p.id + "' is empty");
        if (p.frequency == 0)
            throw std::invalid_argument("pattern '" + p.id + "' has zero frequency");
        if (!by_id_.emplace(p.id, i).second)
            throw std::invalid_argument("duplicate pattern id '" + p.id + "'");
        for (const auto& s : p.symbols) names.insert(s.name);
    }
    alphabet_.assign(names.begin(), names.end());
}

const Pattern* KnowledgeBase::find(const std::string& id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &patterns_[it->second];
}

namespace {

struct Token {
    std::string text;
    int column; // 1-based byte offset
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size()) break;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

Symbol parse_symbol(const Token& tok, int line_no, bool allow_id) {
    std::string text = tok.text;
    SymbolClass cls = SymbolClass::Contents;
    if (!text.empty() && text.front() == '!') {
        if (!allow_id)
            throw ParseError("New pattern may not contain identification symbols",
                             line_no, tok.column);
        cls = SymbolClass::Identification;
        text.erase(text.begin());
    }
    if (!valid_symbol_name(text))
        throw ParseError("invalid symbol name '" + tok.text + "'", line_no, tok.column);
    return {text, cls};
}

} // namespace

KbFile parse_kb_text(const std::string& text) {
    std::vector<Pattern> patterns;
    std::optional<Pattern> new_pattern;
    std::set<std::string> seen_ids;

    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens.front().text.front() == '#') continue;

        bool is_new = tokens.front().text == "NEW";
        std::size_t colon;
        Pattern p;
        if (is_new) {
            p.id = "NEW";
            p.role = Role::New;
            colon = 1;
            if (tokens.size() < 2 || tokens[1].text != ":")
                throw ParseError("expected ':' after NEW", line_no,
                                 tokens.size() < 2 ? tokens[0].column : tokens[1].column);
            if (new_pattern)
                throw ParseError("more than one NEW pattern", line_no, tokens[0].column);
        } else {
            if (tokens.size() < 3 || tokens[2].text != ":")
                throw ParseError("expected '<id> <frequency> : <symbols>'", line_no,
                                 tokens[0].column);
            p.id = tokens[0].text;
            p.role = Role::Old;
            errno = 0;
            char* end = nullptr;
            long long freq = std::strtoll(tokens[1].text.c_str(), &end, 10);
            if (end == tokens[1].text.c_str() || *end != '\0')
                throw ParseError("frequency must be an integer", line_no, tokens[1].column);
            if (freq <= 0)
                throw ParseError("frequency must be positive", line_no, tokens[1].column);
            p.frequency = static_cast<std::uint64_t>(freq);
            if (!seen_ids.insert(p.id).second)
                throw ParseError("duplicate pattern id '" + p.id + "'", line_no,
                                 tokens[0].column);
            colon = 2;
        }

        for (std::size_t i = colon + 1; i < tokens.size(); ++i)
            p.symbols.push_back(parse_symbol(tokens[i], line_no, !is_new));
        if (p.symbols.empty())
            throw ParseError("empty pattern", line_no, tokens[colon].column);

        if (is_new)
            new_pattern = std::move(p);
        else
            patterns.push_back(std::move(p));
    }

    return {KnowledgeBase(std::move(patterns)), std::move(new_pattern)};
}

KnowledgeBase load_kb(const std::string& text) { return parse_kb_text(text).kb; }

KbFile load_kb_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_kb_text(buf.str());
}

std::string serialize_kb(const KnowledgeBase& kb) {
    std::ostringstream out;
    for (const Pattern& p : kb.patterns()) {
        out << p.id << ' ' << p.frequency << " :";
        for (const Symbol& s : p.symbols) {
            out << ' ';
            if (s.cls == SymbolClass::Identification) out << '!';
            out << s.name;
        }
        out << '\n';
    }
    return out.str();
}

} // namespace sp
