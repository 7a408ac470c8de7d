// Copyright 2026 The e1dirac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "e1dirac/expr_parse.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "e1dirac/error.hpp"

namespace e1dirac {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Chart& chart, bool allow_time)
      : text_(text), chart_(chart), allow_time_(allow_time) {}

  ScalarExpr run() {
    ScalarExpr e = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ExprParseError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  ScalarExpr parse_sum() {
    // Leading unary minus is accepted as a convenience.
    bool negate = eat('-');
    ScalarExpr acc = parse_term();
    if (negate) acc = -acc;
    for (;;) {
      if (eat('+')) {
        acc = acc + parse_term();
      } else if (eat('-')) {
        acc = acc - parse_term();
      } else {
        return acc;
      }
    }
  }

  ScalarExpr parse_term() {
    ScalarExpr acc = parse_factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * parse_factor();
      } else if (eat('/')) {
        acc = acc / parse_factor();
      } else {
        return acc;
      }
    }
  }

  ScalarExpr parse_factor() {
    ScalarExpr base = parse_base();
    if (!eat('^')) return base;
    skip_ws();
    bool neg = eat('-');
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer exponent after '^'");
    int k = 0;
    std::from_chars(text_.data() + start, text_.data() + pos_, k);
    return base.pow(neg ? -k : k);
  }

  ScalarExpr parse_base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected expression");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_name();
    if (eat('(')) {
      ScalarExpr e = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  ScalarExpr parse_number() {
    std::size_t start = pos_;
    bool has_dot = false;
    bool has_exp = false;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '.' && !has_dot && !has_exp) {
        has_dot = true;
        ++pos_;
      } else if ((c == 'e' || c == 'E') && !has_exp && pos_ > start &&
                 std::isdigit(static_cast<unsigned char>(text_[pos_ - 1]))) {
        // Exponent marker only if followed by a (signed) digit.
        std::size_t next = pos_ + 1;
        if (next < text_.size() && (text_[next] == '+' || text_[next] == '-')) ++next;
        if (next < text_.size() && std::isdigit(static_cast<unsigned char>(text_[next]))) {
          has_exp = true;
          pos_ = next + 1;
        } else {
          break;
        }
      } else {
        break;
      }
    }
    std::string lit(text_.substr(start, pos_ - start));
    if (lit == ".") fail("expected number");
    if (!has_dot && !has_exp) {
      long long v = 0;
      auto [p, ec] = std::from_chars(lit.data(), lit.data() + lit.size(), v);
      if (ec != std::errc() || p != lit.data() + lit.size()) fail("integer literal out of range");
      return ScalarExpr::rational(v);
    }
    return ScalarExpr::number(std::stod(lit));
  }

  ScalarExpr parse_name() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    std::string_view name = text_.substr(start, pos_ - start);
    if (name == "exp" || name == "log" || name == "sin" || name == "cos") {
      if (!eat('(')) fail(std::string(name) + " requires a parenthesized argument");
      ScalarExpr arg = parse_sum();
      if (!eat(')')) fail("expected ')'");
      if (name == "exp") return exp(arg);
      if (name == "log") return log(arg);
      if (name == "sin") return sin(arg);
      return cos(arg);
    }
    if (name == "t" && !allow_time_ && !chart_.is_time_extended()) {
      pos_ = start;
      fail("time variable \"t\" is not allowed here");
    }
    int id = chart_.index_of(name);
    if (id < 0) {
      pos_ = start;
      fail("unknown coordinate \"" + std::string(name) + "\" on chart " + chart_.str());
    }
    return ScalarExpr::variable(id);
  }

  std::string_view text_;
  const Chart& chart_;
  bool allow_time_;
  std::size_t pos_ = 0;
};

}  // namespace

ScalarExpr parse_expr(std::string_view text, const Chart& chart, bool allow_time) {
  return Parser(text, chart, allow_time).run();
}

}  // namespace e1dirac
