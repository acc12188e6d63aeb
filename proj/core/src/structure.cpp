#include "pefo/structure.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace pefo {

Signature::Signature(std::vector<RelationSymbol> relations)
    : relations_(std::move(relations)) {
    std::set<std::string> names;
    for (const RelationSymbol& r : relations_) {
        if (r.arity < 1)
            throw ValidationError("relation " + r.name + " has arity "
                                  + std::to_string(r.arity) + "; arities must be positive");
        if (!names.insert(r.name).second)
            throw ValidationError("duplicate relation name: " + r.name);
    }
}

std::optional<int> Signature::index_of(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
        if (relations_[static_cast<std::size_t>(i)].name == name) return i;
    return std::nullopt;
}

Structure::Structure(Signature signature, int domain_size,
                     std::vector<std::vector<Tuple>> interpretation)
    : signature_(std::move(signature)),
      domain_size_(domain_size),
      tuples_(std::move(interpretation)) {
    if (domain_size_ < 1)
        throw ValidationError("domain size must be positive, got "
                              + std::to_string(domain_size_));
    if (tuples_.size() != static_cast<std::size_t>(signature_.size()))
        throw ValidationError("interpretation covers " + std::to_string(tuples_.size())
                              + " relations, signature declares "
                              + std::to_string(signature_.size()));
    for (int rel = 0; rel < signature_.size(); ++rel) {
        const RelationSymbol& sym = signature_.symbol(rel);
        auto& ts = tuples_[static_cast<std::size_t>(rel)];
        for (const Tuple& t : ts) {
            if (static_cast<int>(t.size()) != sym.arity)
                throw ValidationError("tuple of length " + std::to_string(t.size())
                                      + " in relation " + sym.name + " of arity "
                                      + std::to_string(sym.arity));
            for (int v : t)
                if (v < 0 || v >= domain_size_)
                    throw ValidationError("element " + std::to_string(v)
                                          + " out of domain in relation " + sym.name);
        }
        std::sort(ts.begin(), ts.end());
        ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    }
}

bool Structure::holds(int relation, std::span<const int> args) const {
    const auto& ts = tuples_[static_cast<std::size_t>(relation)];
    auto it = std::lower_bound(ts.begin(), ts.end(), args,
                               [](const Tuple& t, std::span<const int> a) {
                                   return std::lexicographical_compare(t.begin(), t.end(),
                                                                       a.begin(), a.end());
                               });
    return it != ts.end() && std::equal(it->begin(), it->end(), args.begin(), args.end());
}

std::string Structure::serialize() const {
    std::vector<int> order(static_cast<std::size_t>(signature_.size()));
    for (int i = 0; i < signature_.size(); ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return signature_.symbol(a).name < signature_.symbol(b).name;
    });
    std::ostringstream out;
    out << "domain " << domain_size_ << "\n";
    for (int rel : order) {
        const RelationSymbol& sym = signature_.symbol(rel);
        out << "rel " << sym.name << " " << sym.arity << "\n";
        for (const Tuple& t : tuples(rel)) {
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (i > 0) out << ' ';
                out << t[i];
            }
            out << "\n";
        }
        out << "end\n";
    }
    return out.str();
}

bool Structure::operator==(const Structure& other) const {
    if (domain_size_ != other.domain_size_) return false;
    if (signature_.size() != other.signature_.size()) return false;
    // Compare by name so signatures that list relations in a different
    // order still count as the same structure.
    for (int rel = 0; rel < signature_.size(); ++rel) {
        const RelationSymbol& sym = signature_.symbol(rel);
        auto o = other.signature_.index_of(sym.name);
        if (!o || other.signature_.symbol(*o).arity != sym.arity) return false;
        if (tuples(rel) != other.tuples(*o)) return false;
    }
    return true;
}

namespace {

struct Token {
    std::string text;
    int line = 0;
    int column = 0;
};

// Splits into lines of whitespace-separated tokens; '#' starts a comment.
std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    int line_no = 1;
    std::size_t i = 0;
    while (i <= text.size()) {
        std::size_t eol = text.find('\n', i);
        if (eol == std::string_view::npos) eol = text.size();
        std::vector<Token> toks;
        std::size_t j = i;
        while (j < eol) {
            if (std::isspace(static_cast<unsigned char>(text[j]))) {
                ++j;
                continue;
            }
            if (text[j] == '#') break;
            std::size_t start = j;
            while (j < eol && !std::isspace(static_cast<unsigned char>(text[j]))
                   && text[j] != '#')
                ++j;
            toks.push_back({std::string(text.substr(start, j - start)), line_no,
                            static_cast<int>(start - i) + 1});
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
        if (eol == text.size()) break;
        i = eol + 1;
        ++line_no;
    }
    return lines;
}

int parse_int(const Token& tok, const std::string& what) {
    std::size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok.text, &pos);
    } catch (const std::exception&) {
        throw ParseError("expected " + what + ", got '" + tok.text + "'", tok.line, tok.column);
    }
    if (pos != tok.text.size())
        throw ParseError("expected " + what + ", got '" + tok.text + "'", tok.line, tok.column);
    return value;
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

} // namespace

Structure parse_structure(std::string_view text) {
    auto lines = tokenize_lines(text);
    if (lines.empty()) throw ParseError("empty structure document", 1, 1);

    std::size_t li = 0;
    const auto& header = lines[li];
    if (header[0].text != "domain")
        throw ParseError("expected 'domain <n>' header", header[0].line, header[0].column);
    if (header.size() != 2)
        throw ParseError("'domain' takes exactly one argument", header[0].line, header[0].column);
    int n = parse_int(header[1], "domain size");
    if (n < 1)
        throw ParseError("domain size must be positive", header[1].line, header[1].column);
    ++li;

    std::vector<RelationSymbol> symbols;
    std::vector<std::vector<Tuple>> interpretation;
    std::set<std::string> names;

    while (li < lines.size()) {
        const auto& rel_line = lines[li];
        if (rel_line[0].text != "rel")
            throw ParseError("expected 'rel <name> <arity>' or end of input",
                             rel_line[0].line, rel_line[0].column);
        if (rel_line.size() != 3)
            throw ParseError("'rel' takes a name and an arity", rel_line[0].line,
                             rel_line[0].column);
        if (!is_identifier(rel_line[1].text))
            throw ParseError("'" + rel_line[1].text + "' is not a valid relation name",
                             rel_line[1].line, rel_line[1].column);
        if (!names.insert(rel_line[1].text).second)
            throw ParseError("duplicate relation name: " + rel_line[1].text,
                             rel_line[1].line, rel_line[1].column);
        int arity = parse_int(rel_line[2], "arity");
        if (arity < 1)
            throw ParseError("arity must be positive", rel_line[2].line, rel_line[2].column);
        ++li;

        std::vector<Tuple> tuples;
        bool closed = false;
        while (li < lines.size()) {
            const auto& row = lines[li];
            if (row[0].text == "end") {
                if (row.size() != 1)
                    throw ParseError("'end' takes no arguments", row[0].line, row[0].column);
                ++li;
                closed = true;
                break;
            }
            if (static_cast<int>(row.size()) != arity)
                throw ParseError("tuple has " + std::to_string(row.size())
                                 + " components, relation " + rel_line[1].text
                                 + " has arity " + std::to_string(arity),
                                 row[0].line, row[0].column);
            Tuple t;
            for (const Token& tok : row) {
                int v = parse_int(tok, "domain element");
                if (v < 0 || v >= n)
                    throw ParseError("element " + std::to_string(v) + " out of domain 0.."
                                     + std::to_string(n - 1), tok.line, tok.column);
                t.push_back(v);
            }
            tuples.push_back(std::move(t));
            ++li;
        }
        if (!closed) {
            const auto& last = lines.back();
            throw ParseError("relation block '" + rel_line[1].text + "' not closed by 'end'",
                             last[0].line, last[0].column);
        }
        symbols.push_back({rel_line[1].text, arity});
        interpretation.push_back(std::move(tuples));
    }

    return Structure(Signature(std::move(symbols)), n, std::move(interpretation));
}

} // namespace pefo
