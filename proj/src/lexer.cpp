#include "lexer.hpp"

#include <cctype>

namespace smult::detail {

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.line = line;
    tok.column = col;
    std::size_t j = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) ||
                                 text[j] == '_' || text[j] == '\'')) {
        ++j;
      }
      tok.kind = TokKind::ident;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tok.kind = TokKind::integer;
    } else if (c == '"') {
      ++j;
      while (j < text.size() && text[j] != '"' && text[j] != '\n') ++j;
      if (j >= text.size() || text[j] != '"') {
        throw Error(ErrorKind::ParseError, std::to_string(line) + ":" + std::to_string(col) +
                                               ": unterminated string");
      }
      tok.kind = TokKind::string;
      tok.text = std::string(text.substr(i + 1, j - i - 1));
      advance(j + 1 - i);
      out.push_back(std::move(tok));
      continue;
    } else {
      j = i + 1;
      tok.kind = TokKind::punct;
    }
    tok.text = std::string(text.substr(i, j - i));
    advance(j - i);
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = TokKind::end;
  end.line = line;
  end.column = col;
  out.push_back(end);
  return out;
}

const Token& TokenStream::peek(std::size_t ahead) const {
  std::size_t k = pos_ + ahead;
  return k < tokens_.size() ? tokens_[k] : tokens_.back();
}

Token TokenStream::next() {
  Token t = peek();
  if (pos_ < tokens_.size() - 1) ++pos_;
  return t;
}

bool TokenStream::is_punct(char c, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == TokKind::punct && t.text.size() == 1 && t.text[0] == c;
}

bool TokenStream::is_ident(std::string_view word, std::size_t ahead) const {
  const Token& t = peek(ahead);
  return t.kind == TokKind::ident && t.text == word;
}

bool TokenStream::accept_punct(char c) {
  if (!is_punct(c)) return false;
  next();
  return true;
}

bool TokenStream::accept_ident(std::string_view word) {
  if (!is_ident(word)) return false;
  next();
  return true;
}

void TokenStream::expect_punct(char c) {
  if (!accept_punct(c)) fail(std::string("expected '") + c + "'");
}

std::string TokenStream::expect_ident() {
  if (peek().kind != TokKind::ident) fail("expected identifier");
  return next().text;
}

void TokenStream::fail(const std::string& message) const { fail_at(peek(), message); }

void TokenStream::fail_at(const Token& token, const std::string& message) {
  std::string found = token.kind == TokKind::end ? "end of input" : "'" + token.text + "'";
  throw Error(ErrorKind::ParseError, std::to_string(token.line) + ":" +
                                         std::to_string(token.column) + ": " + message +
                                         " (found " + found + ")");
}

}  // namespace smult::detail
