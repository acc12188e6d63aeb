#include "pefo/formula_parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace pefo {

namespace {

enum class TokKind { identifier, integer, lparen, rparen, comma, pipe, amp, eq, at, eof };

struct Tok {
    TokKind kind;
    std::string text;
    int line;
    int column;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Tok next() {
        skip_space();
        const int line = line_, column = column_;
        if (pos_ >= text_.size()) return {TokKind::eof, "", line, column};
        const char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string word;
            while (pos_ < text_.size() && is_ident_char(text_[pos_])) word += take();
            return {TokKind::identifier, std::move(word), line, column};
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += take();
            return {TokKind::integer, std::move(digits), line, column};
        }
        take();
        switch (c) {
        case '(': return {TokKind::lparen, "(", line, column};
        case ')': return {TokKind::rparen, ")", line, column};
        case ',': return {TokKind::comma, ",", line, column};
        case '|': return {TokKind::pipe, "|", line, column};
        case '&': return {TokKind::amp, "&", line, column};
        case '=': return {TokKind::eq, "=", line, column};
        case '@': return {TokKind::at, "@", line, column};
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", line, column);
        }
    }

private:
    static bool is_ident_char(char c) {
        // '#' keeps machine-generated names like v#1 round-trippable.
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '#';
    }

    char take() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            take();
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

class Parser {
public:
    Parser(std::string_view text, const ParseOptions& options)
        : lexer_(text), options_(options) {
        advance();
    }

    FormulaPtr run() {
        FormulaPtr f = formula();
        expect(TokKind::eof, "end of input");
        check_free_variables(f);
        return f;
    }

private:
    void advance() { current_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, current_.line, current_.column);
    }

    void expect(TokKind kind, const std::string& what) {
        if (current_.kind != kind)
            fail("expected " + what + ", got '"
                 + (current_.kind == TokKind::eof ? "end of input" : current_.text) + "'");
    }

    bool at_keyword(const char* word) const {
        return current_.kind == TokKind::identifier && current_.text == word;
    }

    FormulaPtr formula() {
        if (at_keyword("exists") || at_keyword("forall")) {
            const Quantifier q = at_keyword("exists") ? Quantifier::exists : Quantifier::forall;
            const SourcePos pos{current_.line, current_.column};
            advance();
            expect(TokKind::identifier, "a variable");
            if (current_.text == "exists" || current_.text == "forall" || current_.text == "true")
                fail("'" + current_.text + "' is a keyword, not a variable");
            std::string var = current_.text;
            advance();
            return Formula::quantified(q, std::move(var), formula(), pos);
        }
        return disjunction();
    }

    FormulaPtr disjunction() {
        std::vector<FormulaPtr> parts{conjunction()};
        while (current_.kind == TokKind::pipe) {
            advance();
            parts.push_back(conjunction());
        }
        return Formula::disjunction(std::move(parts));
    }

    FormulaPtr conjunction() {
        std::vector<FormulaPtr> parts{primary()};
        while (current_.kind == TokKind::amp) {
            advance();
            parts.push_back(primary());
        }
        return Formula::conjunction(std::move(parts));
    }

    FormulaPtr primary() {
        if (current_.kind == TokKind::lparen) {
            advance();
            FormulaPtr f = formula();
            expect(TokKind::rparen, "')'");
            advance();
            return f;
        }
        if (at_keyword("true")) {
            advance();
            return Formula::truth();
        }
        if (at_keyword("exists") || at_keyword("forall"))
            fail("quantifiers need parentheses here, e.g. (exists v ...)");
        if (current_.kind == TokKind::identifier) {
            // Lookahead decides between a relation atom and an equality.
            const Tok head = current_;
            advance();
            if (current_.kind == TokKind::lparen) return finish_atom(head);
            return finish_equality(Term::variable(head.text), head);
        }
        if (current_.kind == TokKind::at) {
            const Tok head = current_;
            return finish_equality(constant_term(), head);
        }
        fail("expected an atom, '(' or a quantifier");
    }

    Term constant_term() {
        // current_ is '@'
        advance();
        expect(TokKind::integer, "a domain element after '@'");
        const int value = std::stoi(current_.text);
        advance();
        return Term::constant(value);
    }

    Term term() {
        if (current_.kind == TokKind::identifier) {
            Term t = Term::variable(current_.text);
            advance();
            return t;
        }
        if (current_.kind == TokKind::at) return constant_term();
        fail("expected a term (variable or @constant)");
    }

    FormulaPtr finish_atom(const Tok& name) {
        // current_ is '('
        advance();
        std::vector<Term> args{term()};
        while (current_.kind == TokKind::comma) {
            advance();
            args.push_back(term());
        }
        expect(TokKind::rparen, "')'");
        advance();
        if (options_.signature) {
            auto rel = options_.signature->index_of(name.text);
            if (!rel)
                throw ParseError("unknown relation symbol '" + name.text + "'", name.line,
                                 name.column);
            const int arity = options_.signature->symbol(*rel).arity;
            if (arity != static_cast<int>(args.size()))
                throw ParseError("relation " + name.text + " has arity "
                                 + std::to_string(arity) + ", got "
                                 + std::to_string(args.size()) + " arguments",
                                 name.line, name.column);
        }
        return Formula::atom(name.text, std::move(args), {name.line, name.column});
    }

    FormulaPtr finish_equality(Term lhs, const Tok& head) {
        expect(TokKind::eq, "'=' (a bare term is only valid in an equality)");
        advance();
        Term rhs = term();
        return Formula::equality(std::move(lhs), std::move(rhs), {head.line, head.column});
    }

    void check_free_variables(const FormulaPtr& f) const {
        if (!options_.declared_free) return;
        const auto declared = *options_.declared_free;
        for (const std::string& v : free_variables(f))
            if (std::find(declared.begin(), declared.end(), v) == declared.end())
                throw ParseError("variable '" + v + "' is free but not declared", 1, 1);
    }

    Lexer lexer_;
    ParseOptions options_;
    Tok current_{TokKind::eof, "", 1, 1};
};

} // namespace

FormulaPtr parse_formula(std::string_view text, const ParseOptions& options) {
    return Parser(text, options).run();
}

} // namespace pefo
