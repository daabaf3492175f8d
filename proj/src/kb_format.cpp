#include "falc/kb_format.hpp"

#include <cctype>
#include <sstream>

namespace falc {

namespace {

enum class Tok {
    Ident, Number, LParen, RParen, Comma, Colon, Dot, Slash,
    Eq, EqEq, Geq, Leq, Newline, End
};

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Ident: return "name";
        case Tok::Number: return "number";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Colon: return "':'";
        case Tok::Dot: return "'.'";
        case Tok::Slash: return "'/'";
        case Tok::Eq: return "'='";
        case Tok::EqEq: return "'=='";
        case Tok::Geq: return "'>='";
        case Tok::Leq: return "'<='";
        case Tok::Newline: return "end of line";
        case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto push = [&](Tok k, std::string t, int l, int c) {
        out.push_back({k, std::move(t), {l, c, static_cast<int>(out.empty() ? 0 : 0)}});
        out.back().span.length = static_cast<int>(out.back().text.size());
    };
    while (i < text.size()) {
        char ch = text[i];
        if (ch == '\n') {
            push(Tok::Newline, "\n", line, col);
            ++line;
            col = 1;
            ++i;
            continue;
        }
        if (ch == '\r' || ch == ' ' || ch == '\t') {
            ++i;
            ++col;
            continue;
        }
        if (ch == '#') {
            while (i < text.size() && text[i] != '\n') ++i, ++col;
            continue;
        }
        int tl = line, tc = col;
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) ||
                    text[j] == '_' || text[j] == '\''))
                ++j;
            push(Tok::Ident, std::string(text.substr(i, j - i)), tl, tc);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
                ++j;
            if (j < text.size() && text[j] == '.' && j + 1 < text.size() &&
                std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
                ++j;
                while (j < text.size() &&
                       std::isdigit(static_cast<unsigned char>(text[j])))
                    ++j;
            }
            push(Tok::Number, std::string(text.substr(i, j - i)), tl, tc);
            col += static_cast<int>(j - i);
            i = j;
            continue;
        }
        auto two = [&](char a, char b) {
            return ch == a && i + 1 < text.size() && text[i + 1] == b;
        };
        if (two('=', '=')) { push(Tok::EqEq, "==", tl, tc); i += 2; col += 2; continue; }
        if (two('>', '=')) { push(Tok::Geq, ">=", tl, tc); i += 2; col += 2; continue; }
        if (two('<', '=')) { push(Tok::Leq, "<=", tl, tc); i += 2; col += 2; continue; }
        switch (ch) {
            case '(': push(Tok::LParen, "(", tl, tc); break;
            case ')': push(Tok::RParen, ")", tl, tc); break;
            case ',': push(Tok::Comma, ",", tl, tc); break;
            case ':': push(Tok::Colon, ":", tl, tc); break;
            case '.': push(Tok::Dot, ".", tl, tc); break;
            case '/': push(Tok::Slash, "/", tl, tc); break;
            case '=': push(Tok::Eq, "=", tl, tc); break;
            default:
                throw ParseError(std::string("unexpected character '") + ch + "'",
                                 {tl, tc, 1});
        }
        ++i;
        ++col;
    }
    push(Tok::End, "", line, col);
    return out;
}

bool is_keyword(const std::string& s) {
    return s == "and" || s == "or" || s == "not" || s == "forall" ||
           s == "exists" || s == "sub" || s == "Top" || s == "Bot" ||
           s == "abox" || s == "tbox";
}

class Parser {
public:
    Parser(std::string_view text, const ParseOptions& opts)
        : toks_(lex(text)), opts_(opts) {}

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t j = pos_ + ahead;
        return j < toks_.size() ? toks_[j] : toks_.back();
    }
    const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }
    bool at(Tok k, std::size_t ahead = 0) const { return peek(ahead).kind == k; }
    bool at_ident(const char* word, std::size_t ahead = 0) const {
        return at(Tok::Ident, ahead) && peek(ahead).text == word;
    }
    std::size_t mark() const { return pos_; }
    void rewind(std::size_t m) { pos_ = m; }

    [[noreturn]] void fail(const std::string& msg,
                           std::vector<std::string> expected = {}) const {
        throw ParseError(msg, peek().span, std::move(expected));
    }

    const Token& expect(Tok k, const char* what) {
        if (!at(k)) fail(std::string("expected ") + what, {tok_name(k)});
        return advance();
    }

    void skip_newlines() {
        while (at(Tok::Newline)) advance();
    }
    void end_line() {
        if (at(Tok::End)) return;
        if (!at(Tok::Newline))
            fail("expected end of line", {tok_name(Tok::Newline)});
        skip_newlines();
    }

    std::string name(const char* what) {
        if (!at(Tok::Ident)) fail(std::string("expected ") + what, {"name"});
        const Token& t = advance();
        if (is_keyword(t.text))
            throw ParseError("keyword '" + t.text + "' cannot be used as a " +
                                 what,
                             t.span);
        if (!opts_.allow_generated_names &&
            t.text.find('\'') != std::string::npos)
            throw ParseError("name '" + t.text +
                                 "' is reserved for generated atoms",
                             t.span);
        return t.text;
    }

    Degree degree() {
        SourceSpan start = peek().span;
        if (!at(Tok::Number)) fail("expected degree", {"number"});
        std::string text = advance().text;
        if (at(Tok::Slash)) {
            advance();
            if (!at(Tok::Number)) fail("expected denominator", {"number"});
            text += "/" + advance().text;
        }
        std::string err;
        auto d = Degree::parse(text, &err);
        if (!d) throw ParseError(err, start);
        return *d;
    }

    // concept := and_expr ["or" concept]
    ConceptRef concept_expr() {
        ConceptRef left = and_expr();
        if (at_ident("or")) {
            advance();
            return disj(std::move(left), concept_expr());
        }
        return left;
    }

    ConceptRef and_expr() {
        ConceptRef left = unary();
        if (at_ident("and")) {
            advance();
            return conj(std::move(left), and_expr());
        }
        return left;
    }

    ConceptRef unary() {
        if (at_ident("not")) {
            advance();
            return neg(unary());
        }
        if (at_ident("forall") || at_ident("exists")) {
            bool is_forall = peek().text == "forall";
            advance();
            std::string role = name("role name");
            expect(Tok::Dot, "'.' after the role name");
            ConceptRef body = unary();
            return is_forall ? forall(std::move(role), std::move(body))
                             : exists(std::move(role), std::move(body));
        }
        return primary();
    }

    ConceptRef primary() {
        if (at_ident("Top")) { advance(); return top(); }
        if (at_ident("Bot")) { advance(); return bottom(); }
        if (at(Tok::LParen)) {
            advance();
            ConceptRef c = concept_expr();
            expect(Tok::RParen, "')'");
            return c;
        }
        if (at(Tok::Ident) && !is_keyword(peek().text))
            return atomic(name("concept name"));
        fail("expected a concept", {"Top", "Bot", "name", "'('", "not",
                                    "forall", "exists"});
    }

    std::vector<RawAxiom> kb_file() {
        std::vector<RawAxiom> raw;
        skip_newlines();
        bool saw_section = false;
        while (!at(Tok::End)) {
            if (at_ident("abox") && at(Tok::Colon, 1)) {
                advance(); advance();
                end_line();
                section_lines(raw, /*abox=*/true);
                saw_section = true;
            } else if (at_ident("tbox") && at(Tok::Colon, 1)) {
                advance(); advance();
                end_line();
                section_lines(raw, /*abox=*/false);
                saw_section = true;
            } else if (!saw_section) {
                fail("expected 'abox:' or 'tbox:' section header",
                     {"abox", "tbox"});
            } else {
                fail("expected a section header or end of input",
                     {"abox", "tbox"});
            }
        }
        return raw;
    }

    void section_lines(std::vector<RawAxiom>& raw, bool abox) {
        while (!at(Tok::End)) {
            if ((at_ident("abox") && at(Tok::Colon, 1)) ||
                (at_ident("tbox") && at(Tok::Colon, 1)))
                return;
            if (abox)
                raw.push_back(abox_axiom());
            else
                raw.push_back(tbox_axiom());
            end_line();
        }
    }

    RawAxiom abox_axiom() {
        if (!at(Tok::LParen))
            fail("expected an assertion", {"'('"});
        if (at(Tok::LParen, 1)) return role_assertion();
        advance();  // (
        std::string indiv = name("individual name");
        expect(Tok::Colon, "':'");
        ConceptRef c = concept_expr();
        expect(Tok::RParen, "')'");
        if (at(Tok::Geq)) {
            advance();
            return RawAxiom::concept_geq(indiv, std::move(c), degree());
        }
        if (at(Tok::Leq)) {
            advance();
            return RawAxiom::concept_leq(indiv, std::move(c), degree());
        }
        if (at(Tok::Eq)) {
            advance();
            return RawAxiom::concept_eq(indiv, std::move(c), degree());
        }
        // bare assertion means degree 1
        return RawAxiom::concept_geq(indiv, std::move(c), Degree::one());
    }

    RawAxiom role_assertion() {
        advance();  // (
        advance();  // (
        std::string a = name("individual name");
        expect(Tok::Comma, "','");
        std::string b = name("individual name");
        expect(Tok::RParen, "')'");
        expect(Tok::Colon, "':'");
        std::string role = name("role name");
        expect(Tok::RParen, "')'");
        if (at(Tok::Leq))
            throw ParseError(
                "role upper bounds are not in the language (only "
                "((a , b) : R) >= d role assertions exist)",
                peek().span);
        expect(Tok::Geq, "'>='");
        return RawAxiom::role_geq(a, b, role, degree());
    }

    RawAxiom tbox_axiom() {
        // "(C sub D) >= d" first, falling back to a concept-led line.
        if (at(Tok::LParen)) {
            std::size_t m = mark();
            try {
                advance();  // (
                ConceptRef l = concept_expr();
                if (at_ident("sub")) {
                    advance();
                    ConceptRef r = concept_expr();
                    if (at(Tok::RParen)) {
                        advance();
                        Degree d = Degree::one();
                        if (at(Tok::Geq)) {
                            advance();
                            d = degree();
                        }
                        return RawAxiom::gci(std::move(l), std::move(r), d);
                    }
                }
            } catch (const ParseError&) {
            }
            rewind(m);
        }
        ConceptRef l = concept_expr();
        if (at_ident("sub")) {
            advance();
            ConceptRef r = concept_expr();
            Degree d = Degree::one();
            if (at(Tok::Geq)) {
                advance();
                d = degree();
            }
            return RawAxiom::gci(std::move(l), std::move(r), d);
        }
        if (at(Tok::EqEq)) {
            advance();
            return RawAxiom::equivalence(std::move(l), concept_expr());
        }
        fail("expected 'sub' or '==' in a TBox axiom", {"sub", "=="});
    }

    ConceptRef standalone_concept() {
        skip_newlines();
        ConceptRef c = concept_expr();
        skip_newlines();
        if (!at(Tok::End)) fail("trailing input after the concept");
        return c;
    }

    // ---- interpretation files ----

    FiniteInterpretation interpretation_file() {
        skip_newlines();
        if (!(at_ident("domain") && at(Tok::Colon, 1)))
            fail("expected 'domain:' as the first section", {"domain"});
        advance(); advance();
        std::vector<std::string> elements;
        while (at(Tok::Ident)) elements.push_back(map_safe_name("domain element"));
        if (elements.empty())
            fail("domain must be nonempty", {"name"});
        end_line();
        FiniteInterpretation interp(elements);

        while (!at(Tok::End)) {
            if (at_ident("domain") && at(Tok::Colon, 1))
                fail("duplicate 'domain:' section");
            if (at_ident("individuals") && at(Tok::Colon, 1)) {
                advance(); advance();
                individual_entries(interp);
                continue;
            }
            if (at_ident("concept")) {
                advance();
                std::string cname = name("concept name");
                if (interp.has_concept(cname))
                    fail("duplicate concept section: " + cname);
                expect(Tok::Colon, "':'");
                concept_entries(interp, cname);
                continue;
            }
            if (at_ident("role")) {
                advance();
                std::string rname = name("role name");
                if (interp.has_role(rname))
                    fail("duplicate role section: " + rname);
                expect(Tok::Colon, "':'");
                role_entries(interp, rname);
                continue;
            }
            fail("expected 'individuals:', 'concept <name>:' or 'role <name>:'",
                 {"individuals", "concept", "role"});
        }
        return interp;
    }

    bool at_section_start() const {
        if (at_ident("individuals") && at(Tok::Colon, 1)) return true;
        if (at_ident("domain") && at(Tok::Colon, 1)) return true;
        if (at_ident("concept") && at(Tok::Ident, 1)) return true;
        if (at_ident("role") && at(Tok::Ident, 1)) return true;
        return false;
    }

    std::string map_safe_name(const char* what) {
        SourceSpan where = peek().span;
        std::string n = name(what);
        if (n == "default" || n == "domain" || n == "individuals" ||
            n == "concept" || n == "role")
            throw ParseError("'" + n + "' is reserved in interpretation files",
                             where);
        return n;
    }

    std::size_t element_ref(const FiniteInterpretation& interp) {
        SourceSpan where = peek().span;
        std::string n = map_safe_name("domain element");
        auto idx = interp.element_index(n);
        if (!idx) throw ParseError("unknown domain element: " + n, where);
        return *idx;
    }

    void individual_entries(FiniteInterpretation& interp) {
        while (true) {
            skip_newlines();
            if (at(Tok::End) || at_section_start()) return;
            std::string indiv = map_safe_name("individual name");
            expect(Tok::Eq, "'='");
            interp.set_individual(indiv, element_ref(interp));
        }
    }

    void concept_entries(FiniteInterpretation& interp, const std::string& cname) {
        interp.set_concept_default(cname, Degree::zero());
        while (true) {
            skip_newlines();
            if (at(Tok::End) || at_section_start()) return;
            if (at_ident("default")) {
                advance();
                expect(Tok::Eq, "'='");
                interp.set_concept_default(cname, degree());
                continue;
            }
            std::size_t e = element_ref(interp);
            expect(Tok::Eq, "'='");
            interp.set_concept_value(cname, e, degree());
        }
    }

    void role_entries(FiniteInterpretation& interp, const std::string& rname) {
        interp.set_role_default(rname, Degree::zero());
        while (true) {
            skip_newlines();
            if (at(Tok::End) || at_section_start()) return;
            if (at_ident("default")) {
                advance();
                expect(Tok::Eq, "'='");
                interp.set_role_default(rname, degree());
                continue;
            }
            expect(Tok::LParen, "'('");
            std::size_t from = element_ref(interp);
            expect(Tok::Comma, "','");
            std::size_t to = element_ref(interp);
            expect(Tok::RParen, "')'");
            expect(Tok::Eq, "'='");
            interp.set_role_value(rname, from, to, degree());
        }
    }

private:
    std::vector<Token> toks_;
    ParseOptions opts_;
    std::size_t pos_ = 0;
};

}  // namespace

KnowledgeBase parse_kb(std::string_view text, const ParseOptions& opts) {
    Parser p(text, opts);
    return expand_shorthands(p.kb_file());
}

ConceptRef parse_concept_text(std::string_view text, const ParseOptions& opts) {
    Parser p(text, opts);
    return p.standalone_concept();
}

FiniteInterpretation parse_interpretation(std::string_view text,
                                          const ParseOptions& opts) {
    Parser p(text, opts);
    return p.interpretation_file();
}

// ---- serialization ----

std::string serialize_kb(const KnowledgeBase& kb) {
    std::ostringstream out;
    if (!kb.abox.empty()) {
        out << "abox:\n";
        for (const Axiom& ax : kb.abox) out << axiom_text(ax) << "\n";
    }
    if (!kb.tbox.empty()) {
        out << "tbox:\n";
        for (std::size_t i = 0; i < kb.tbox.size(); ++i) {
            const Axiom& ax = kb.tbox[i];
            if (ax.equiv && ax.equiv->primary && i + 1 < kb.tbox.size() &&
                kb.tbox[i + 1].equiv &&
                kb.tbox[i + 1].equiv->group == ax.equiv->group &&
                !kb.tbox[i + 1].equiv->primary) {
                out << to_text(ax.lhs) << " == " << to_text(ax.rhs) << "\n";
                ++i;
                continue;
            }
            out << axiom_text(ax) << "\n";
        }
    }
    return out.str();
}

std::string serialize_interpretation(const FiniteInterpretation& interp) {
    std::ostringstream out;
    out << "domain:";
    for (const std::string& e : interp.domain()) out << " " << e;
    out << "\n";
    if (!interp.individuals().empty()) {
        out << "individuals:";
        for (const auto& [name, idx] : interp.individuals())
            out << " " << name << "=" << interp.domain()[idx];
        out << "\n";
    }
    for (const auto& [name, m] : interp.concept_maps()) {
        out << "concept " << name << ": default=" << m.def.str();
        for (const auto& [e, d] : m.at)
            out << " " << interp.domain()[e] << "=" << d.str();
        out << "\n";
    }
    for (const auto& [name, m] : interp.role_maps()) {
        out << "role " << name << ": default=" << m.def.str();
        for (const auto& [pair, d] : m.at)
            out << " (" << interp.domain()[pair.first] << ","
                << interp.domain()[pair.second] << ")=" << d.str();
        out << "\n";
    }
    return out.str();
}

}  // namespace falc
