#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "smult/error.hpp"

namespace smult::detail {

enum class TokKind { ident, integer, string, punct, end };

struct Token {
  TokKind kind = TokKind::end;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Splits text into identifiers, unsigned integers, double-quoted strings
/// and single-character punctuation. `#` starts a comment to end of line.
std::vector<Token> tokenize(std::string_view text);

class TokenStream {
 public:
  explicit TokenStream(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  const Token& peek(std::size_t ahead = 0) const;
  Token next();
  bool at_end() const { return peek().kind == TokKind::end; }
  bool is_punct(char c, std::size_t ahead = 0) const;
  bool is_ident(std::string_view word, std::size_t ahead = 0) const;
  bool accept_punct(char c);
  bool accept_ident(std::string_view word);
  void expect_punct(char c);
  std::string expect_ident();
  [[noreturn]] void fail(const std::string& message) const;
  [[noreturn]] static void fail_at(const Token& token, const std::string& message);

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace smult::detail
