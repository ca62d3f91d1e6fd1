/*
 * Copyright 2026 the modelweave authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "modelweave/parser.hpp"

#include <cassert>
#include <charconv>
#include <filesystem>
#include <string>

namespace modelweave {

namespace {

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class Tok {
    Ident,
    Int,
    Decimal,
    String,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Colon,
    Semi,
    Comma,
    Dot,
    DotDot,
    Star,
    Arrow, // <->
    Equals,
    Eof,
};

struct Token {
    Tok type = Tok::Eof;
    std::string text;   // identifier text, digit run, or decoded string content
    int line = 1;
    int col = 1;
    int end_line = 1;
    int end_col = 1;
};

struct ParseAbort {};

class Lexer {
public:
    Lexer(std::string_view text, std::string_view file, std::vector<ParseDiagnostic>& diags)
        : file_(file), diags_(diags) {
        normalize(text);
    }

    // CRLF -> LF; validates UTF-8 as it goes.
    void normalize(std::string_view text) {
        src_.reserve(text.size());
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
                continue;
            }
            src_ += text[i];
        }
    }

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            Token t = next();
            bool eof = t.type == Tok::Eof;
            out.push_back(std::move(t));
            if (eof) {
                break;
            }
        }
        return out;
    }

private:
    [[noreturn]] void fail(int line, int col, std::string message) {
        diags_.push_back({Severity::Error, {std::string(file_), line, col, line, col},
                          std::move(message)});
        throw ParseAbort{};
    }

    bool eof() const { return pos_ >= src_.size(); }
    char peek(std::size_t off = 0) const {
        return pos_ + off < src_.size() ? src_[pos_ + off] : '\0';
    }

    char take() {
        char c = src_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    // Consumes one UTF-8 continuation run, validating it. `first` was taken.
    void take_utf8_tail(unsigned char first, int line, int col) {
        int expect = 0;
        if ((first & 0xe0) == 0xc0 && first >= 0xc2) {
            expect = 1;
        } else if ((first & 0xf0) == 0xe0) {
            expect = 2;
        } else if ((first & 0xf8) == 0xf0 && first <= 0xf4) {
            expect = 3;
        } else {
            fail(line, col, "invalid UTF-8 byte sequence");
        }
        for (int i = 0; i < expect; ++i) {
            unsigned char c = static_cast<unsigned char>(peek());
            if ((c & 0xc0) != 0x80) {
                fail(line, col, "invalid UTF-8 byte sequence");
            }
            take();
        }
    }

    void skip_trivia() {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                take();
            } else if (c == '/' && peek(1) == '/') {
                while (!eof() && peek() != '\n') {
                    int line = line_, col = col_;
                    unsigned char u = static_cast<unsigned char>(take());
                    if (u >= 0x80) {
                        take_utf8_tail(u, line, col);
                    }
                }
            } else {
                break;
            }
        }
    }

    Token make(Tok type, int line, int col, std::string text = {}) {
        Token t;
        t.type = type;
        t.text = std::move(text);
        t.line = line;
        t.col = col;
        t.end_line = line_;
        t.end_col = col_;
        return t;
    }

    Token next() {
        skip_trivia();
        int line = line_, col = col_;
        if (eof()) {
            return make(Tok::Eof, line, col);
        }
        char c = peek();
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            std::string text;
            while (!eof()) {
                char d = peek();
                if ((d >= 'a' && d <= 'z') || (d >= 'A' && d <= 'Z') ||
                    (d >= '0' && d <= '9') || d == '_') {
                    text += take();
                } else {
                    break;
                }
            }
            return make(Tok::Ident, line, col, std::move(text));
        }
        if (c >= '0' && c <= '9') {
            std::string text;
            while (!eof() && peek() >= '0' && peek() <= '9') {
                text += take();
            }
            if (peek() == '.' && peek(1) != '.' && peek(1) >= '0' && peek(1) <= '9') {
                text += take();
                while (!eof() && peek() >= '0' && peek() <= '9') {
                    text += take();
                }
                return make(Tok::Decimal, line, col, std::move(text));
            }
            return make(Tok::Int, line, col, std::move(text));
        }
        if (c == '"') {
            take();
            std::string text;
            while (true) {
                if (eof() || peek() == '\n') {
                    fail(line, col, "unterminated string literal");
                }
                char d = take();
                if (d == '"') {
                    break;
                }
                if (d == '\\') {
                    if (eof()) {
                        fail(line, col, "unterminated string literal");
                    }
                    char e = take();
                    switch (e) {
                    case '"': text += '"'; break;
                    case '\\': text += '\\'; break;
                    case 'n': text += '\n'; break;
                    case 't': text += '\t'; break;
                    case 'r': text += '\r'; break;
                    default:
                        fail(line_, col_ - 1, std::string("invalid escape '\\") + e + "'");
                    }
                    continue;
                }
                unsigned char u = static_cast<unsigned char>(d);
                if (u < 0x20) {
                    fail(line_, col_ - 1, "control character in string literal");
                }
                text += d;
                if (u >= 0x80) {
                    int cl = line_, cc = col_ - 1;
                    std::size_t before = pos_;
                    take_utf8_tail(u, cl, cc);
                    text += src_.substr(before, pos_ - before);
                }
            }
            return make(Tok::String, line, col, std::move(text));
        }
        switch (c) {
        case '{': take(); return make(Tok::LBrace, line, col);
        case '}': take(); return make(Tok::RBrace, line, col);
        case '(': take(); return make(Tok::LParen, line, col);
        case ')': take(); return make(Tok::RParen, line, col);
        case ';': take(); return make(Tok::Semi, line, col);
        case ',': take(); return make(Tok::Comma, line, col);
        case '=': take(); return make(Tok::Equals, line, col);
        case '*': take(); return make(Tok::Star, line, col);
        case ':': take(); return make(Tok::Colon, line, col);
        case '.':
            take();
            if (peek() == '.') {
                take();
                return make(Tok::DotDot, line, col);
            }
            return make(Tok::Dot, line, col);
        case '<':
            if (peek(1) == '-' && peek(2) == '>') {
                take();
                take();
                take();
                return make(Tok::Arrow, line, col);
            }
            fail(line, col, "unexpected character '<'");
        default: {
            unsigned char u = static_cast<unsigned char>(c);
            if (u >= 0x80) {
                take();
                take_utf8_tail(u, line, col);
                fail(line, col, "unexpected non-ASCII character outside string literal");
            }
            fail(line, col, std::string("unexpected character '") + c + "'");
        }
        }
    }

    std::string src_;
    std::string_view file_;
    std::vector<ParseDiagnostic>& diags_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// ---------------------------------------------------------------------------
// Shared parser machinery
// ---------------------------------------------------------------------------

std::string stem_identifier(std::string_view source_name) {
    std::string stem = std::filesystem::path(std::string(source_name)).stem().string();
    std::string out;
    for (char c : stem) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '_';
        out += ok ? c : '_';
    }
    if (out.empty()) {
        out = "model";
    }
    if (out.front() >= '0' && out.front() <= '9') {
        out.insert(out.begin(), '_');
    }
    return out;
}

class Parser {
public:
    Parser(std::string_view text, std::string_view file, std::vector<ParseDiagnostic>& diags)
        : file_(file), diags_(diags) {
        Lexer lex(text, file, diags);
        tokens_ = lex.run();
    }

    bool at_eof() const { return cur().type == Tok::Eof; }

protected:
    const Token& cur() const { return tokens_[pos_]; }
    const Token& ahead(std::size_t n = 1) const {
        return tokens_[std::min(pos_ + n, tokens_.size() - 1)];
    }

    Token advance() { return tokens_[pos_++]; }

    SourceSpan span_of(const Token& t) const {
        return {std::string(file_), t.line, t.col, t.end_line, t.end_col};
    }

    [[noreturn]] void fail_at(const Token& t, std::string message) {
        diags_.push_back({Severity::Error, span_of(t), std::move(message)});
        throw ParseAbort{};
    }

    void warn_at(const Token& t, std::string message) {
        diags_.push_back({Severity::Warning, span_of(t), std::move(message)});
    }

    bool is_kw(std::string_view kw) const {
        return cur().type == Tok::Ident && cur().text == kw;
    }

    void expect_kw(std::string_view kw) {
        if (!is_kw(kw)) {
            fail_at(cur(), "expected '" + std::string(kw) + "'");
        }
        advance();
    }

    Token expect(Tok type, const char* what) {
        if (cur().type != type) {
            fail_at(cur(), std::string("expected ") + what);
        }
        return advance();
    }

    std::string expect_ident(const char* what = "identifier") {
        return expect(Tok::Ident, what).text;
    }

    unsigned expect_bound() {
        Token t = expect(Tok::Int, "integer");
        unsigned value = 0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{} || p != t.text.data() + t.text.size()) {
            fail_at(t, "multiplicity bound out of range");
        }
        return value;
    }

    // Optional "lo..hi|*" directly after a type or class reference.
    std::optional<Multiplicity> try_multiplicity() {
        if (cur().type != Tok::Int) {
            return std::nullopt;
        }
        Multiplicity m;
        m.lower = expect_bound();
        expect(Tok::DotDot, "'..'");
        if (cur().type == Tok::Star) {
            advance();
            m.upper = std::nullopt;
        } else {
            m.upper = expect_bound();
        }
        return m;
    }

    QualifiedName parse_qname() {
        QualifiedName qn;
        qn.segments.push_back(expect_ident());
        while (cur().type == Tok::Dot) {
            advance();
            qn.segments.push_back(expect_ident());
        }
        return qn;
    }

    double parse_number(const char* what) {
        if (cur().type != Tok::Int && cur().type != Tok::Decimal) {
            fail_at(cur(), std::string("expected ") + what);
        }
        Token t = advance();
        double value = 0.0;
        auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
        if (ec != std::errc{} || p != t.text.data() + t.text.size()) {
            fail_at(t, std::string("malformed ") + what);
        }
        return value;
    }

    std::string_view file_;
    std::vector<ParseDiagnostic>& diags_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Core models
// ---------------------------------------------------------------------------

class CoreParser : public Parser {
public:
    using Parser::Parser;

    CoreModel parse_model(std::string_view source_name) {
        CoreModel m;
        if (at_eof()) {
            m.name = stem_identifier(source_name);
            return m;
        }
        expect_kw("model");
        m.name = expect_ident("model name");
        expect(Tok::LBrace, "'{'");
        while (!at_eof() && cur().type != Tok::RBrace) {
            if (is_kw("class")) {
                m.classes.push_back(parse_class());
            } else if (is_kw("association")) {
                m.associations.push_back(parse_association());
            } else {
                fail_at(cur(), "expected 'class' or 'association'");
            }
        }
        expect(Tok::RBrace, "'}'");
        if (!at_eof()) {
            fail_at(cur(), "trailing content after model");
        }
        return m;
    }

    ClassDecl parse_class() {
        expect_kw("class");
        ClassDecl c;
        c.name = expect_ident("class name");
        if (is_kw("associationClassOf")) {
            advance();
            c.association_class_of = expect_ident("association name");
        }
        expect(Tok::LBrace, "'{'");
        while (!at_eof() && cur().type != Tok::RBrace) {
            if (is_kw("attr")) {
                c.attributes.push_back(parse_attribute());
            } else if (is_kw("op")) {
                c.methods.push_back(parse_method());
            } else {
                fail_at(cur(), "expected 'attr' or 'op'");
            }
        }
        expect(Tok::RBrace, "'}'");
        return c;
    }

    AttributeDecl parse_attribute() {
        expect_kw("attr");
        AttributeDecl a;
        a.name = expect_ident("attribute name");
        expect(Tok::Colon, "':'");
        a.type_name = expect_ident("type name");
        if (auto m = try_multiplicity()) {
            a.multiplicity = *m;
        }
        expect(Tok::Semi, "';'");
        return a;
    }

    MethodDecl parse_method() {
        expect_kw("op");
        MethodDecl m;
        m.name = expect_ident("method name");
        expect(Tok::LParen, "'('");
        if (cur().type != Tok::RParen) {
            while (true) {
                Parameter p;
                p.name = expect_ident("parameter name");
                expect(Tok::Colon, "':'");
                p.type_name = expect_ident("parameter type");
                m.parameters.push_back(std::move(p));
                if (cur().type != Tok::Comma) {
                    break;
                }
                advance();
            }
        }
        expect(Tok::RParen, "')'");
        if (cur().type == Tok::Colon) {
            advance();
            m.return_type = expect_ident("return type");
        }
        expect(Tok::Semi, "';'");
        return m;
    }

    AssociationDecl parse_association() {
        Token head = cur();
        expect_kw("association");
        AssociationDecl a;
        a.name = expect_ident("association name");
        expect(Tok::LBrace, "'{'");
        std::vector<AssociationEnd> ends;
        while (is_kw("end")) {
            ends.push_back(parse_end());
        }
        expect(Tok::RBrace, "'}'");
        if (ends.size() != 2) {
            fail_at(head, "association '" + a.name + "' must declare exactly two ends");
        }
        a.end_a = std::move(ends[0]);
        a.end_b = std::move(ends[1]);
        return a;
    }

    AssociationEnd parse_end() {
        expect_kw("end");
        AssociationEnd e;
        e.role = expect_ident("end role");
        expect(Tok::Colon, "':'");
        e.class_name = expect_ident("class name");
        if (is_kw("navigable")) {
            advance();
            e.navigable = true;
        }
        if (auto m = try_multiplicity()) {
            e.multiplicity = *m;
        }
        expect(Tok::Semi, "';'");
        return e;
    }
};

// ---------------------------------------------------------------------------
// Aspect models
// ---------------------------------------------------------------------------

class AspectParser : public CoreParser {
public:
    using CoreParser::CoreParser;

    AspectModel parse_model(std::string_view source_name) {
        AspectModel m;
        if (at_eof()) {
            m.name = stem_identifier(source_name);
            return m;
        }
        expect_kw("aspectmodel");
        m.name = expect_ident("model name");
        expect(Tok::LBrace, "'{'");
        while (is_kw("aspect")) {
            m.aspects.push_back(parse_aspect_req());
        }
        expect(Tok::RBrace, "'}'");
        if (!at_eof()) {
            fail_at(cur(), "trailing content after aspect model");
        }
        return m;
    }

    AspectRequirement parse_aspect_req() {
        Token head = cur();
        expect_kw("aspect");
        AspectRequirement asp;
        asp.name = expect_ident("aspect name");
        if (is_kw("priority")) {
            advance();
            asp.priority = parse_number("priority value");
        }
        expect(Tok::LBrace, "'{'");
        while (!at_eof() && cur().type != Tok::RBrace) {
            if (is_kw("pointcut")) {
                asp.pointcuts.push_back(parse_pointcut());
            } else if (is_kw("advice")) {
                asp.advices.push_back(parse_advice());
            } else {
                fail_at(cur(), "expected 'pointcut' or 'advice'");
            }
        }
        expect(Tok::RBrace, "'}'");
        if (asp.advices.empty()) {
            warn_at(head, "aspect '" + asp.name + "' has no advices and is inert");
        }
        return asp;
    }

    Pointcut parse_pointcut() {
        expect_kw("pointcut");
        Pointcut p;
        p.name = expect_ident("pointcut name");
        expect(Tok::Colon, "':'");
        if (is_kw("call")) {
            advance();
            p.kind = PointcutKind::Call;
        } else if (is_kw("structural")) {
            advance();
            p.kind = PointcutKind::Structural;
        } else {
            fail_at(cur(), "unknown pointcut kind '" + cur().text +
                               "'; expected 'call' or 'structural'");
        }
        expect_kw("on");
        p.pattern = parse_pattern();
        expect(Tok::Semi, "';'");
        return p;
    }

    NamePattern parse_pattern() {
        NamePattern pat;
        pat.segments.push_back(parse_pattern_segment());
        while (cur().type == Tok::Dot) {
            advance();
            pat.segments.push_back(parse_pattern_segment());
        }
        return pat;
    }

    std::string parse_pattern_segment() {
        if (cur().type == Tok::Star) {
            advance();
            return "*";
        }
        return expect_ident("pattern segment");
    }

    Advice parse_advice() {
        expect_kw("advice");
        Advice adv;
        adv.name = expect_ident("advice name");
        expect(Tok::Colon, "':'");
        if (is_kw("before")) {
            advance();
            adv.position = AdvicePosition::Before;
        } else if (is_kw("after")) {
            advance();
            adv.position = AdvicePosition::After;
        } else {
            fail_at(cur(), "unknown advice position '" + cur().text +
                               "'; expected 'before' or 'after'");
        }
        if (is_kw("addElt")) {
            advance();
            adv.kind = AdviceKind::AddElt;
        } else if (is_kw("update")) {
            advance();
            adv.kind = AdviceKind::Update;
        } else if (is_kw("deleteElt")) {
            advance();
            adv.kind = AdviceKind::DeleteElt;
        } else {
            fail_at(cur(), "unknown advice kind '" + cur().text +
                               "'; expected 'addElt', 'update' or 'deleteElt'");
        }
        expect_kw("bind");
        adv.bound_pointcut = expect_ident("pointcut name");
        expect(Tok::LBrace, "'{'");
        parse_payload(adv);
        if (is_kw("body")) {
            advance();
            adv.body = expect(Tok::String, "string").text;
            expect(Tok::Semi, "';'");
        }
        expect(Tok::RBrace, "'}'");
        return adv;
    }

    void parse_payload(Advice& adv) {
        switch (adv.kind) {
        case AdviceKind::AddElt: {
            AddPayload add;
            if (is_kw("attr")) {
                add.element = parse_attribute();
            } else if (is_kw("op")) {
                add.element = parse_method();
            } else if (is_kw("class")) {
                add.element = parse_class();
            } else if (is_kw("association")) {
                add.element = parse_association();
            } else {
                fail_at(cur(), "addElt advice needs an element declaration "
                               "('attr', 'op', 'class' or 'association')");
            }
            adv.payload = std::move(add);
            return;
        }
        case AdviceKind::Update: {
            UpdatePayload upd;
            while (true) {
                if (is_kw("rename")) {
                    Token t = advance();
                    if (upd.new_name) {
                        fail_at(t, "duplicate 'rename' in update advice");
                    }
                    upd.new_name = expect_ident("new name");
                    expect(Tok::Semi, "';'");
                } else if (is_kw("retype")) {
                    Token t = advance();
                    if (upd.new_type) {
                        fail_at(t, "duplicate 'retype' in update advice");
                    }
                    upd.new_type = expect_ident("new type");
                    expect(Tok::Semi, "';'");
                } else {
                    break;
                }
            }
            adv.payload = std::move(upd);
            return;
        }
        case AdviceKind::DeleteElt:
            adv.payload = DeletePayload{};
            return;
        }
    }
};

// ---------------------------------------------------------------------------
// Weaving models
// ---------------------------------------------------------------------------

class WeavingParser : public Parser {
public:
    using Parser::Parser;

    WeavingModel parse_model() {
        if (at_eof()) {
            fail_at(cur(), "empty weaving file; a weaving must name its kind and models");
        }
        WeavingModel w;
        expect_kw("weaving");
        w.name = expect_ident("weaving name");
        expect(Tok::Colon, "':'");
        if (is_kw("coreaspect")) {
            advance();
            w.kind = WeavingKind::CoreAspect;
        } else if (is_kw("coreadditional")) {
            advance();
            w.kind = WeavingKind::CoreAdditional;
        } else {
            fail_at(cur(), "unknown weaving kind '" + cur().text +
                               "'; expected 'coreaspect' or 'coreadditional'");
        }
        expect(Tok::LBrace, "'{'");
        bool have_left = false, have_right = false;
        while (!at_eof() && cur().type != Tok::RBrace) {
            if (is_kw("left")) {
                Token t = cur();
                if (have_left) {
                    fail_at(t, "duplicate 'left' model reference");
                }
                w.left_ref = parse_ref("left");
                have_left = true;
            } else if (is_kw("right")) {
                Token t = cur();
                if (have_right) {
                    fail_at(t, "duplicate 'right' model reference");
                }
                w.right_ref = parse_ref("right");
                have_right = true;
            } else if (is_kw("link")) {
                w.links.push_back(parse_link());
            } else {
                fail_at(cur(), "expected 'left', 'right' or 'link'");
            }
        }
        Token close = expect(Tok::RBrace, "'}'");
        if (!have_left || !have_right) {
            fail_at(close, std::string("missing '") + (have_left ? "right" : "left") +
                               "' model reference");
        }
        if (!at_eof()) {
            fail_at(cur(), "trailing content after weaving");
        }
        for (WeaveLink& link : w.links) {
            link.left_end.model = w.left_ref.logical_name;
            link.right_end.model = w.right_ref.logical_name;
        }
        return w;
    }

    ModelRef parse_ref(std::string_view side) {
        expect_kw(side);
        ModelRef ref;
        ref.logical_name = expect_ident("model name");
        expect_kw("at");
        ref.source_path = expect(Tok::String, "string").text;
        if (is_kw("digest")) {
            advance();
            ref.content_digest = expect(Tok::String, "string").text;
        }
        expect(Tok::Semi, "';'");
        return ref;
    }

    WeaveLink parse_link() {
        expect_kw("link");
        WeaveLink link;
        link.name = expect_ident("link name");
        expect(Tok::Colon, "':'");
        if (is_kw("attributeToClass")) {
            link.kind = LinkKind::AttributeToClass;
        } else if (is_kw("methodToClass")) {
            link.kind = LinkKind::MethodToClass;
        } else if (is_kw("classToModel")) {
            link.kind = LinkKind::ClassToModel;
        } else if (is_kw("associationToModel")) {
            link.kind = LinkKind::AssociationToModel;
        } else if (is_kw("aspectToTarget")) {
            link.kind = LinkKind::AspectToTarget;
        } else {
            fail_at(cur(), "unknown link kind '" + cur().text + "'");
        }
        advance();
        link.left_end.target = parse_qname();
        expect(Tok::Arrow, "'<->' and a right-hand reference (links are binary)");
        link.right_end.target = parse_qname();
        expect(Tok::Semi, "';'");
        return link;
    }
};

// ---------------------------------------------------------------------------
// Requirement graphs
// ---------------------------------------------------------------------------

class RequirementsParser : public Parser {
public:
    using Parser::Parser;

    DecompositionGraph parse_graph(std::string_view source_name) {
        DecompositionGraph g;
        if (at_eof()) {
            g.name = stem_identifier(source_name);
            return g;
        }
        expect_kw("requirements");
        g.name = expect_ident("graph name");
        expect(Tok::LBrace, "'{'");
        while (!at_eof() && cur().type != Tok::RBrace) {
            if (is_kw("cr")) {
                parse_cr(g);
            } else if (is_kw("er")) {
                parse_er(g);
            } else if (is_kw("ar")) {
                parse_ar(g);
            } else {
                fail_at(cur(), "expected 'cr', 'er' or 'ar'");
            }
        }
        expect(Tok::RBrace, "'}'");
        if (!at_eof()) {
            fail_at(cur(), "trailing content after requirements graph");
        }
        return g;
    }

    void parse_cr(DecompositionGraph& g) {
        expect_kw("cr");
        RequirementNode node;
        node.kind = RequirementKind::Cooperative;
        node.id = expect_ident("requirement id");
        node.text = expect(Tok::String, "string").text;
        expect(Tok::Equals, "'='");
        Connector conn;
        conn.parent = node.id;
        if (is_kw("and")) {
            conn.op = ConnectorOp::And;
        } else if (is_kw("or")) {
            conn.op = ConnectorOp::Or;
        } else {
            fail_at(cur(), "unknown connector op '" + cur().text +
                               "'; expected 'and' or 'or'");
        }
        advance();
        expect(Tok::LParen, "'('");
        conn.children.push_back(expect_ident("child id"));
        while (cur().type == Tok::Comma) {
            advance();
            conn.children.push_back(expect_ident("child id"));
        }
        expect(Tok::RParen, "')'");
        parse_links(node);
        expect(Tok::Semi, "';'");
        g.nodes.push_back(std::move(node));
        g.connectors.push_back(std::move(conn));
    }

    void parse_er(DecompositionGraph& g) {
        expect_kw("er");
        RequirementNode node;
        node.kind = RequirementKind::Existing;
        node.id = expect_ident("requirement id");
        node.text = expect(Tok::String, "string").text;
        if (is_kw("from")) {
            advance();
            node.source_system = expect_ident("system name");
        }
        parse_links(node);
        expect(Tok::Semi, "';'");
        g.nodes.push_back(std::move(node));
    }

    void parse_ar(DecompositionGraph& g) {
        expect_kw("ar");
        RequirementNode node;
        node.kind = RequirementKind::Additional;
        node.id = expect_ident("requirement id");
        node.text = expect(Tok::String, "string").text;
        parse_links(node);
        expect(Tok::Semi, "';'");
        g.nodes.push_back(std::move(node));
    }

    // Optional traceability clause: `links AspectName, Other`.
    void parse_links(RequirementNode& node) {
        if (!is_kw("links")) {
            return;
        }
        advance();
        node.linked_aspects.push_back(expect_ident("aspect name"));
        while (cur().type == Tok::Comma) {
            advance();
            node.linked_aspects.push_back(expect_ident("aspect name"));
        }
    }
};

template <typename T, typename Fn>
ParseResult<T> run_parser(Fn&& fn) {
    ParseResult<T> result;
    try {
        result.value = fn(result.diagnostics);
    } catch (const ParseAbort&) {
        result.value.reset();
        assert(!result.diagnostics.empty());
    }
    return result;
}

} // namespace

ParseResult<CoreModel> parse_core(std::string_view text, std::string_view source_name) {
    return run_parser<CoreModel>([&](std::vector<ParseDiagnostic>& diags) {
        CoreParser p(text, source_name, diags);
        return p.parse_model(source_name);
    });
}

ParseResult<AspectModel> parse_aspect(std::string_view text, std::string_view source_name) {
    return run_parser<AspectModel>([&](std::vector<ParseDiagnostic>& diags) {
        AspectParser p(text, source_name, diags);
        return p.parse_model(source_name);
    });
}

ParseResult<WeavingModel> parse_weaving(std::string_view text, std::string_view source_name) {
    return run_parser<WeavingModel>([&](std::vector<ParseDiagnostic>& diags) {
        WeavingParser p(text, source_name, diags);
        return p.parse_model();
    });
}

ParseResult<DecompositionGraph> parse_requirements(std::string_view text,
                                                   std::string_view source_name) {
    return run_parser<DecompositionGraph>([&](std::vector<ParseDiagnostic>& diags) {
        RequirementsParser p(text, source_name, diags);
        return p.parse_graph(source_name);
    });
}

} // namespace modelweave
