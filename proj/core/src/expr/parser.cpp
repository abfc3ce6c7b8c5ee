#include "ncspace/expr/parser.hpp"

#include <cctype>

namespace ncspace::expr {

namespace {

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += ", ";
    out += "'" + s + "'";
  }
  return out;
}

const std::vector<std::string>& factor_starts() {
  static const std::vector<std::string> starts = {"integer", "a[", "th[", "P[", "J[", "X[", "XT[",
                                                  "M2", "Minv2", "comm(", "nf(", "("};
  return starts;
}

constexpr int kMaxNesting = 200;
// M2^k expands to 4^k words before normal ordering.
constexpr int kMaxPower = 8;

class Parser {
public:
  Parser(std::string_view text, int dimension) : text_(text), dimension_(dimension) {}

  NodePtr run() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ < text_.size()) fail({"+", "-", "*", "end of input"});
    return e;
  }

private:
  std::string_view text_;
  int dimension_;
  std::size_t pos_ = 0;
  int depth_ = 0;

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const std::string found = pos_ < text_.size() ? std::string(1, text_[pos_]) : std::string("end of input");
    throw ParseError(pos_ + 1, std::move(expected), found);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail({std::string(1, c)});
  }

  std::string digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail({"integer"});
    return std::string(text_.substr(start, pos_ - start));
  }

  int index() {
    skip_ws();
    const std::size_t start = pos_;
    const std::string d = digits();
    const int value = d.size() > 6 ? dimension_ + 1 : std::stoi(d);
    if (value >= dimension_) throw IndexRangeError(start + 1, value, dimension_);
    return value;
  }

  int power() {
    if (!accept('^')) return 1;
    skip_ws();
    const std::size_t start = pos_;
    const std::string d = digits();
    if (d.size() > 2 || std::stoi(d) > kMaxPower) {
      pos_ = start;
      fail({"exponent at most " + std::to_string(kMaxPower)});
    }
    return std::stoi(d);
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  NodePtr expr() {
    if (++depth_ > kMaxNesting) fail({"shallower nesting"});
    skip_ws();
    const std::size_t start = pos_;
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = make_node(Binary{Binary::Op::Add, lhs, term()}, start);
      } else if (accept('-')) {
        lhs = make_node(Binary{Binary::Op::Sub, lhs, term()}, start);
      } else {
        break;
      }
    }
    --depth_;
    return lhs;
  }

  NodePtr term() {
    skip_ws();
    const std::size_t start = pos_;
    NodePtr lhs = factor();
    while (accept('*')) lhs = make_node(Binary{Binary::Op::Mul, lhs, factor()}, start);
    return lhs;
  }

  NodePtr scalar() {
    const std::size_t start = pos_;
    algebra::Rational value{mpz_class(digits(), 10)};
    if (accept('/')) {
      skip_ws();
      const std::size_t den_start = pos_;
      mpz_class den(digits(), 10);
      if (den == 0) {
        pos_ = den_start;
        fail({"nonzero denominator"});
      }
      value = algebra::Rational(value.get_num(), den);
      value.canonicalize();
    }
    skip_ws();
    bool imaginary = false;
    if (pos_ < text_.size() && text_[pos_] == 'i' &&
        (pos_ + 1 == text_.size() || !std::isalnum(static_cast<unsigned char>(text_[pos_ + 1])))) {
      imaginary = true;
      ++pos_;
    }
    algebra::GaussianRational g = imaginary ? algebra::GaussianRational(0, value) : algebra::GaussianRational(value);
    return make_node(Scalar{std::move(g)}, start);
  }

  NodePtr factor() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) fail(factor_starts());
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return scalar();
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      expect(')');
      return inner;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail(factor_starts());

    const std::string id = identifier();
    if (id == "M2" || id == "Minv2") {
      const auto kind = id == "M2" ? Derived::Kind::MassSquared : Derived::Kind::InverseMassSquared;
      return make_node(Derived{kind, 0, power()}, start);
    }
    if (id == "comm") {
      expect('(');
      NodePtr a = expr();
      expect(',');
      NodePtr b = expr();
      expect(')');
      return make_node(Binary{Binary::Op::Comm, a, b}, start);
    }
    if (id == "nf") {
      expect('(');
      NodePtr a = expr();
      expect(')');
      return make_node(NormalForm{a}, start);
    }
    if (id == "a" || id == "P" || id == "X" || id == "XT") {
      expect('[');
      const int i = index();
      expect(']');
      if (id == "a") return make_node(ParamRef{ParamRef::Kind::Translation, i, 0}, start);
      if (id == "P") return make_node(GeneratorRef{GeneratorRef::Kind::Momentum, i, 0}, start);
      const auto kind = id == "X" ? Derived::Kind::Coordinate : Derived::Kind::DeformedCoordinate;
      return make_node(Derived{kind, i, 1}, start);
    }
    if (id == "th" || id == "J") {
      expect('[');
      const int i = index();
      expect(',');
      const int j = index();
      expect(']');
      if (id == "th") return make_node(ParamRef{ParamRef::Kind::Theta, i, j}, start);
      return make_node(GeneratorRef{GeneratorRef::Kind::Lorentz, i, j}, start);
    }
    pos_ = start;
    fail(factor_starts());
  }
};

}  // namespace

ParseError::ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
    : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": found '" + found +
                         "', expected one of " + join(expected)),
      offset_(offset), expected_(std::move(expected)) {}

IndexRangeError::IndexRangeError(std::size_t offset, int index, int dimension)
    : std::out_of_range("index " + std::to_string(index) + " at offset " + std::to_string(offset) +
                        " is outside 0.." + std::to_string(dimension - 1)),
      offset_(offset) {}

NodePtr parse(std::string_view text, int dimension) { return Parser(text, dimension).run(); }

}  // namespace ncspace::expr
