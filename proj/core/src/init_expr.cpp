#include "npeskin/init_expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

namespace npeskin {

namespace {

// recursive-descent parser evaluating directly against one value of s
class Parser {
 public:
  Parser(const std::string& text, double s) : text_(text), s_(s) {}

  double run() {
    const double v = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return v;
  }

 private:
  double expression() {
    double v = term();
    for (;;) {
      skip_ws();
      if (consume('+'))
        v += term();
      else if (consume('-'))
        v -= term();
      else
        return v;
    }
  }

  double term() {
    double v = power();
    for (;;) {
      skip_ws();
      if (consume('*'))
        v *= power();
      else if (consume('/'))
        v /= power();
      else
        return v;
    }
  }

  // unary minus binds looser than '^', so -2^2 = -(2^2)
  double power() {
    skip_ws();
    if (consume('-')) return -power();
    if (consume('+')) return power();
    return exponent();
  }

  double exponent() {
    const double base = primary();
    skip_ws();
    if (consume('^')) return std::pow(base, power());  // right associative
    return base;
  }

  double primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      const double v = expression();
      expect(')');
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected character");
  }

  double number() {
    const char* begin = text_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("malformed number");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  double identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string name = text_.substr(start, pos_ - start);
    if (name == "s") return s_;
    if (name == "pi") return std::numbers::pi;
    skip_ws();
    expect('(');
    const double arg = expression();
    expect(')');
    if (name == "sin") return std::sin(arg);
    if (name == "cos") return std::cos(arg);
    if (name == "exp") return std::exp(arg);
    pos_ = start;
    fail("unknown function '" + name + "'");
  }

  void expect(char c) {
    skip_ws();
    if (!consume(c)) fail(std::string("expected '") + c + "'");
  }
  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("initial-data expression: " + what + " at position " +
                                std::to_string(pos_));
  }

  const std::string& text_;
  double s_;
  std::size_t pos_ = 0;
};

GridFunction from_mode_list(const std::string& text, std::size_t n) {
  struct Mode {
    double k, amp, phase;
  };
  std::vector<Mode> modes;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(pos, end - pos);
    const std::size_t c1 = item.find(':');
    const std::size_t c2 = item.find(':', c1 == std::string::npos ? std::string::npos : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw std::invalid_argument("mode list entry must be n:amplitude:phase, got '" + item + "'");
    char* stop = nullptr;
    const double k = std::strtod(item.c_str(), &stop);
    const double amp = std::strtod(item.c_str() + c1 + 1, &stop);
    const double phase = std::strtod(item.c_str() + c2 + 1, &stop);
    if (k != std::floor(k)) throw std::invalid_argument("mode index must be an integer in '" + item + "'");
    modes.push_back({k, amp, phase});
    pos = end + 1;
  }
  return GridFunction::sample(n, [&](double s) {
    double v = 0.0;
    for (const auto& m : modes) v += m.amp * std::cos(m.k * s + m.phase);
    return v;
  });
}

}  // namespace

double eval_expression(const std::string& text, double s) { return Parser(text, s).run(); }

GridFunction parse_initial_data(const std::string& text, std::size_t n) {
  if (text.find(':') != std::string::npos) return from_mode_list(text, n);
  return GridFunction::sample(n, [&](double s) { return eval_expression(text, s); });
}

}  // namespace npeskin
