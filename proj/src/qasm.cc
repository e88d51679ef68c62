#include <cctype>
#include <charconv>
#include <sstream>

#include "qsat/circuit.h"

namespace qsat {

ParseError::ParseError(const std::string &message, size_t line, size_t column)
    : std::invalid_argument(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line(line),
      column(column) {
}

namespace {

enum class TokKind { ident, number, string, punct, end };

struct Token {
    TokKind kind;
    std::string text;
    size_t line;
    size_t column;
};

class Lexer {
   public:
    explicit Lexer(std::string_view text) : text_(text) {
    }

    Token next() {
        skip_space_and_comments();
        Token tok{TokKind::end, "", line_, column_};
        if (pos_ >= text_.size()) {
            return tok;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            tok.kind = TokKind::ident;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                tok.text += advance();
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            tok.kind = TokKind::number;
            while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
                tok.text += advance();
            }
        } else if (c == '"') {
            tok.kind = TokKind::string;
            advance();
            while (pos_ < text_.size() && text_[pos_] != '"' && text_[pos_] != '\n') {
                tok.text += advance();
            }
            if (pos_ >= text_.size() || text_[pos_] != '"') {
                throw ParseError("unterminated string", tok.line, tok.column);
            }
            advance();
        } else if (c == ';' || c == '[' || c == ']' || c == ',') {
            tok.kind = TokKind::punct;
            tok.text = std::string(1, advance());
        } else {
            throw ParseError(std::string("syntax error: unexpected character '") + c + "'", line_, column_);
        }
        return tok;
    }

   private:
    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            line_++;
            column_ = 1;
        } else {
            column_++;
        }
        return c;
    }

    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance();
                }
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    size_t pos_ = 0;
    size_t line_ = 1;
    size_t column_ = 1;
};

class Parser {
   public:
    explicit Parser(std::string_view text) : lex_(text) {
        tok_ = lex_.next();
    }

    Circuit parse() {
        Circuit c;
        bool have_register = false;
        while (tok_.kind != TokKind::end) {
            if (tok_.kind != TokKind::ident) {
                fail("syntax error: expected a statement");
            }
            Token head = take();
            if (head.text == "OPENQASM") {
                Token version = expect(TokKind::number, "version number");
                if (version.text != "2.0" && version.text != "2") {
                    throw ParseError("unsupported OPENQASM version " + version.text, version.line, version.column);
                }
                expect_punct(";");
            } else if (head.text == "include") {
                Token file = expect(TokKind::string, "include file name");
                if (file.text != "qelib1.inc") {
                    throw ParseError("unsupported include \"" + file.text + "\"", file.line, file.column);
                }
                expect_punct(";");
            } else if (head.text == "qreg") {
                if (have_register) {
                    throw ParseError("only one qreg is supported", head.line, head.column);
                }
                Token name = expect(TokKind::ident, "register name");
                expect_punct("[");
                Token size = expect(TokKind::number, "register size");
                uint32_t n = to_index(size);
                if (n == 0) {
                    throw ParseError("register size must be positive", size.line, size.column);
                }
                expect_punct("]");
                expect_punct(";");
                register_name_ = name.text;
                c.num_qubits = n;
                have_register = true;
            } else if (head.text == "creg" || head.text == "measure" || head.text == "gate" || head.text == "barrier") {
                throw ParseError("unsupported statement '" + head.text + "'", head.line, head.column);
            } else {
                if (!have_register) {
                    throw ParseError("gate before qreg declaration", head.line, head.column);
                }
                c.gates.push_back(parse_gate(head, c.num_qubits));
            }
        }
        if (!have_register) {
            throw ParseError("missing qreg declaration", tok_.line, tok_.column);
        }
        return c;
    }

   private:
    Gate parse_gate(const Token &head, uint32_t num_qubits) {
        GateKind kind;
        if (head.text == "h") {
            kind = GateKind::H;
        } else if (head.text == "s") {
            kind = GateKind::S;
        } else if (head.text == "x") {
            kind = GateKind::X;
        } else if (head.text == "y") {
            kind = GateKind::Y;
        } else if (head.text == "z") {
            kind = GateKind::Z;
        } else if (head.text == "cx" || head.text == "CX") {
            kind = GateKind::CNOT;
        } else {
            throw ParseError("unsupported gate '" + head.text + "'", head.line, head.column);
        }
        uint32_t first = parse_operand(num_qubits);
        if (kind != GateKind::CNOT) {
            expect_punct(";");
            return Gate::single(kind, first);
        }
        expect_punct(",");
        Token at = tok_;
        uint32_t second = parse_operand(num_qubits);
        if (first == second) {
            throw ParseError("cx control equals target", at.line, at.column);
        }
        expect_punct(";");
        return Gate::cnot(first, second);
    }

    uint32_t parse_operand(uint32_t num_qubits) {
        Token name = expect(TokKind::ident, "qubit operand");
        if (name.text != register_name_) {
            throw ParseError("unknown register '" + name.text + "'", name.line, name.column);
        }
        expect_punct("[");
        Token index = expect(TokKind::number, "qubit index");
        uint32_t q = to_index(index);
        if (q >= num_qubits) {
            throw ParseError(
                "operand out of range: " + name.text + "[" + index.text + "] with register size " +
                    std::to_string(num_qubits),
                index.line,
                index.column);
        }
        expect_punct("]");
        return q;
    }

    static uint32_t to_index(const Token &tok) {
        uint32_t value = 0;
        auto [ptr, ec] = std::from_chars(tok.text.data(), tok.text.data() + tok.text.size(), value);
        if (ec != std::errc() || ptr != tok.text.data() + tok.text.size()) {
            throw ParseError("expected a non-negative integer, got '" + tok.text + "'", tok.line, tok.column);
        }
        return value;
    }

    Token take() {
        Token t = tok_;
        tok_ = lex_.next();
        return t;
    }

    Token expect(TokKind kind, const char *what) {
        if (tok_.kind != kind) {
            fail(std::string("syntax error: expected ") + what);
        }
        return take();
    }

    void expect_punct(const char *p) {
        if (tok_.kind != TokKind::punct || tok_.text != p) {
            fail(std::string("syntax error: expected '") + p + "'");
        }
        take();
    }

    [[noreturn]] void fail(const std::string &message) {
        std::string found = tok_.kind == TokKind::end ? "end of input" : "'" + tok_.text + "'";
        throw ParseError(message + ", found " + found, tok_.line, tok_.column);
    }

    Lexer lex_;
    Token tok_;
    std::string register_name_;
};

}  // namespace

Circuit parse_circuit(std::string_view text) {
    return Parser(text).parse();
}

std::string emit_circuit(const Circuit &circuit) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << circuit.num_qubits << "];\n";
    for (const Gate &g : circuit.gates) {
        out << g.str() << ";\n";
    }
    return out.str();
}

}  // namespace qsat
