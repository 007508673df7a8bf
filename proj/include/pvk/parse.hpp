// Text formats: words, presentation files, generator maps and certificates.
//
// Word grammar
//   word    := factor { ('*' | whitespace) factor }
//   factor  := primary [ '^' integer ]          integer nonzero
//   primary := name | '1' | '(' word ')' | '[' word ',' word ']'
// with [u,v] = u^-1 v^-1 u v.
//
// Presentation files
//   # comment
//   gens: a b t
//   rel: t a t^-1 a^-2
//
// Generator maps: one "name = word" (or "name -> word") per line.

#ifndef PVK_PARSE_HPP
#define PVK_PARSE_HPP

#include "pvk/fpres.hpp"
#include "pvk/word.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace pvk {

class ParseError : public std::runtime_error {
public:
    /// what() is "source:line:column: message", or "line:column: message".
    ParseError(const std::string& message, std::size_t line, std::size_t column, const std::string& source = "");
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::string message_;
    std::size_t line_, column_;
};

Word parse_word(std::string_view text, const AlphabetPtr& alphabet);
/// Generator names in order of first appearance.
AlphabetPtr alphabet_of(std::string_view text);

Presentation parse_presentation(std::string_view text);
Presentation read_presentation_file(const std::string& path);

GenMap parse_genmap(std::string_view text, const AlphabetPtr& source, const AlphabetPtr& target);

/// "[(u, r1, +1), (1, r2, -1)]", relator indices 1-based.
ConsequenceCertificate parse_certificate(std::string_view text, const Presentation& p);

std::string read_text_file(const std::string& path);

} // namespace pvk

#endif
