#include "pvk/parse.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace pvk {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column, const std::string& source)
    : std::runtime_error((source.empty() ? "" : source + ":") + std::to_string(line) + ":" + std::to_string(column) +
                         ": " + message),
      message_(message), line_(line), column_(column) {}

namespace {

bool is_name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_name_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

class Parser {
public:
    Parser(std::string_view text, AlphabetPtr alphabet, std::size_t line = 1, std::size_t column = 1)
        : text_(text), alphabet_(std::move(alphabet)), line_(line), column_(column) {}

    Word whole_word() {
        Word w = sequence();
        skip_space();
        if (!at_end())
            fail(std::string("unexpected '") + peek() + "'");
        return w;
    }

    ConsequenceCertificate certificate(const Presentation& p) {
        ConsequenceCertificate cert;
        skip_space();
        expect('[');
        skip_space();
        if (peek() == ']') {
            ++pos_;
        } else {
            while (true) {
                skip_space();
                expect('(');
                CertificateFactor f;
                f.conjugator = sequence();
                skip_space();
                expect(',');
                skip_space();
                expect('r');
                const std::size_t at = pos_;
                const long r = integer();
                if (r < 1 || static_cast<std::size_t>(r) > p.relators().size())
                    fail_at(at, "relator index out of range");
                f.relator = static_cast<std::size_t>(r - 1);
                skip_space();
                expect(',');
                skip_space();
                const std::size_t sat = pos_;
                const long s = integer();
                if (s != 1 && s != -1)
                    fail_at(sat, "sign must be +1 or -1");
                f.sign = static_cast<int>(s);
                skip_space();
                expect(')');
                cert.push_back(std::move(f));
                skip_space();
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                expect(']');
                break;
            }
        }
        skip_space();
        if (!at_end())
            fail(std::string("unexpected '") + peek() + "'");
        return cert;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
        std::size_t line = line_, col = column_;
        for (std::size_t i = 0; i < at && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }
    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

    void expect(char c) {
        if (peek() != c)
            fail(std::string("expected '") + c + "'" + (at_end() ? " at end of input" : ""));
        ++pos_;
    }

    long integer() {
        const std::size_t start = pos_;
        if (peek() == '+' || peek() == '-')
            ++pos_;
        const std::size_t digits = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (pos_ == digits)
            fail_at(start, "expected an integer");
        long v = 0;
        const char* b = text_.data() + digits;
        auto [ptr, ec] = std::from_chars(b, text_.data() + pos_, v);
        if (ec != std::errc())
            fail_at(start, "integer out of range");
        return text_[start] == '-' ? -v : v;
    }

    Word sequence() {
        Word w(alphabet_);
        while (true) {
            skip_space();
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            if (at_end() || peek() == ',' || peek() == ')' || peek() == ']')
                return w;
            w *= factor();
        }
    }

    Word factor() {
        Word base = primary();
        skip_space();
        if (peek() != '^')
            return base;
        ++pos_;
        skip_space();
        const std::size_t at = pos_;
        const long k = integer();
        if (k == 0)
            fail_at(at, "zero exponent");
        return base.pow(k);
    }

    Word primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Word w = sequence();
            expect(')');
            return w;
        }
        if (c == '[') {
            ++pos_;
            Word u = sequence();
            expect(',');
            Word v = sequence();
            expect(']');
            return commutator(u, v);
        }
        if (c == '1' && (pos_ + 1 >= text_.size() || !is_name_char(text_[pos_ + 1]))) {
            ++pos_;
            return Word(alphabet_);
        }
        if (is_name_start(c)) {
            const std::size_t start = pos_;
            while (is_name_char(peek()))
                ++pos_;
            const std::string name(text_.substr(start, pos_ - start));
            if (!alphabet_->contains(name))
                fail_at(start, "unknown generator '" + name + "'");
            return Word::generator(alphabet_, name);
        }
        if (at_end())
            fail("unexpected end of input");
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    AlphabetPtr alphabet_;
    std::size_t line_, column_;
    std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

struct Line {
    std::size_t number;
    std::string_view text; // comment stripped
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 1;
    while (true) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        out.push_back({number++, line});
        if (nl == std::string_view::npos)
            break;
        text.remove_prefix(nl + 1);
    }
    return out;
}

std::size_t column_of(std::string_view line, std::string_view part) {
    return static_cast<std::size_t>(part.data() - line.data()) + 1;
}

} // namespace

Word parse_word(std::string_view text, const AlphabetPtr& alphabet) {
    if (!alphabet)
        throw std::invalid_argument("parse_word needs an alphabet");
    return Parser(text, alphabet).whole_word();
}

AlphabetPtr alphabet_of(std::string_view text) {
    std::vector<std::string> names;
    std::set<std::string> seen;
    for (std::size_t i = 0; i < text.size();) {
        if (is_name_start(text[i]) && (i == 0 || !is_name_char(text[i - 1]))) {
            std::size_t j = i;
            while (j < text.size() && is_name_char(text[j]))
                ++j;
            std::string name(text.substr(i, j - i));
            if (seen.insert(name).second)
                names.push_back(std::move(name));
            i = j;
        } else {
            ++i;
        }
    }
    return Alphabet::make(std::move(names));
}

Presentation parse_presentation(std::string_view text) {
    AlphabetPtr alphabet;
    std::vector<Word> relators;
    std::size_t last = 1;
    for (const Line& line : split_lines(text)) {
        last = line.number;
        const std::string_view body = trim(line.text);
        if (body.empty())
            continue;
        if (body.starts_with("gens:")) {
            if (alphabet)
                throw ParseError("second gens: line", line.number, column_of(line.text, body));
            std::vector<std::string> names;
            std::set<std::string> seen;
            std::string_view rest = body.substr(5);
            while (true) {
                while (!rest.empty() && (std::isspace(static_cast<unsigned char>(rest.front())) || rest.front() == ','))
                    rest.remove_prefix(1);
                if (rest.empty())
                    break;
                std::size_t n = 0;
                while (n < rest.size() && !std::isspace(static_cast<unsigned char>(rest[n])) && rest[n] != ',')
                    ++n;
                const std::string name(rest.substr(0, n));
                const std::size_t col = column_of(line.text, rest);
                if (!Alphabet::valid_name(name))
                    throw ParseError("invalid generator name '" + name + "'", line.number, col);
                if (!seen.insert(name).second)
                    throw ParseError("duplicate generator name '" + name + "'", line.number, col);
                names.push_back(name);
                rest.remove_prefix(n);
            }
            alphabet = Alphabet::make(std::move(names));
        } else if (body.starts_with("rel:")) {
            if (!alphabet)
                throw ParseError("rel: before gens:", line.number, column_of(line.text, body));
            const std::string_view w = body.substr(4);
            Word r = Parser(w, alphabet, line.number, column_of(line.text, w)).whole_word();
            if (r.is_identity())
                throw ParseError("empty relator", line.number, column_of(line.text, body));
            relators.push_back(std::move(r));
        } else {
            throw ParseError("expected 'gens:' or 'rel:'", line.number, column_of(line.text, body));
        }
    }
    if (!alphabet)
        throw ParseError("missing gens: line", last, 1);
    return Presentation(alphabet, std::move(relators));
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Presentation read_presentation_file(const std::string& path) {
    const std::string text = read_text_file(path);
    try {
        return parse_presentation(text);
    } catch (const ParseError& e) {
        throw ParseError(e.message(), e.line(), e.column(), path);
    }
}

GenMap parse_genmap(std::string_view text, const AlphabetPtr& source, const AlphabetPtr& target) {
    std::vector<std::optional<Word>> images(source->size());
    std::size_t last = 1;
    for (const Line& line : split_lines(text)) {
        last = line.number;
        const std::string_view body = trim(line.text);
        if (body.empty())
            continue;
        std::size_t sep = body.find("->");
        std::size_t width = 2;
        if (sep == std::string_view::npos) {
            sep = body.find('=');
            width = 1;
        }
        if (sep == std::string_view::npos)
            throw ParseError("expected 'name = word'", line.number, column_of(line.text, body));
        const std::string name(trim(body.substr(0, sep)));
        if (!source->contains(name))
            throw ParseError("unknown source generator '" + name + "'", line.number, column_of(line.text, body));
        const std::size_t g = source->index(name);
        if (images[g])
            throw ParseError("second image for '" + name + "'", line.number, column_of(line.text, body));
        const std::string_view w = body.substr(sep + width);
        images[g] = Parser(w, target, line.number, column_of(line.text, w)).whole_word();
    }
    std::vector<Word> out;
    for (std::size_t g = 0; g < images.size(); ++g) {
        if (!images[g])
            throw ParseError("no image for generator '" + source->name(g) + "'", last, 1);
        out.push_back(*images[g]);
    }
    return GenMap(source, target, std::move(out));
}

ConsequenceCertificate parse_certificate(std::string_view text, const Presentation& p) {
    return Parser(text, p.alphabet()).certificate(p);
}

} // namespace pvk
