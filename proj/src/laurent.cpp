#include "laurent.hpp"

#include <cctype>
#include <sstream>

namespace affschur {

Rational make_rational(long num, long den) {
  if (den == 0) throw ArithmeticError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto valid_int = [](const std::string& part) {
    std::size_t start = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (start >= part.size()) return false;
    for (std::size_t k = start; k < part.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(part[k]))) return false;
    return true;
  };
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational '" + s + "'");
  mpz_class p(num), q(den);
  if (q == 0) throw ArithmeticError("zero denominator in '" + s + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Laurent::Laurent(long value) {
  if (value != 0) terms_.emplace(0, Rational(value));
}

Laurent::Laurent(const Rational& value) {
  if (value != 0) terms_.emplace(0, value);
}

Laurent Laurent::monomial(const Rational& coeff, std::int64_t exponent) {
  Laurent out;
  if (coeff != 0) out.terms_.emplace(exponent, coeff);
  return out;
}

bool Laurent::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational Laurent::coeff(std::int64_t exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::int64_t Laurent::min_exponent() const {
  if (terms_.empty()) throw ArithmeticError("min_exponent of zero");
  return terms_.begin()->first;
}

std::int64_t Laurent::max_exponent() const {
  if (terms_.empty()) throw ArithmeticError("max_exponent of zero");
  return terms_.rbegin()->first;
}

void Laurent::add_term(std::int64_t exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Laurent& Laurent::operator+=(const Laurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Laurent operator*(const Laurent& x, const Laurent& y) {
  Laurent out;
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) out.add_term(ex + ey, cx * cy);
  return out;
}

Laurent& Laurent::operator*=(const Laurent& other) { return *this = *this * other; }

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const Laurent& x, const Laurent& y) { return x.terms_ == y.terms_; }

Laurent Laurent::pow(std::int64_t k) const {
  if (k < 0) {
    if (!is_monomial()) throw ArithmeticError("negative power of a non-monomial");
    const auto& [e, c] = *terms_.begin();
    Rational inv = 1 / c;
    Rational value = 1;
    for (std::int64_t m = 0; m < -k; ++m) value *= inv;
    return monomial(value, e * k);
  }
  Laurent result(1L), base = *this;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Rational Laurent::eval(const Rational& a0) const {
  if (a0 == 0) throw ArithmeticError("cannot specialize the parameter at 0");
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational p = 1;
    Rational base = e >= 0 ? a0 : Rational(1 / a0);
    for (std::int64_t m = 0; m < (e >= 0 ? e : -e); ++m) p *= base;
    total += c * p;
  }
  return total;
}

Laurent Laurent::substitute(const Laurent& value) const {
  Laurent out;
  for (const auto& [e, c] : terms_) out += Laurent(c) * value.pow(e);
  return out;
}

std::string Laurent::to_string() const { return to_string('a'); }

std::string Laurent::to_string(char variable) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    bool negative = c < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << variable;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

namespace {

class LaurentReader {
 public:
  explicit LaurentReader(std::string_view text) : text_(text) {}

  Laurent read() {
    Laurent total;
    skip();
    if (pos_ == text_.size()) fail("empty Laurent polynomial");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    while (true) {
      Laurent term = read_term();
      total += negative ? -term : term;
      skip();
      if (pos_ == text_.size()) break;
      char op = text_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      negative = op == '-';
      ++pos_;
    }
    return total;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at offset " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "'");
  }

  Laurent read_term() {
    skip();
    Rational coeff = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (peek() == '/') {
        ++pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      }
      coeff = parse_rational(text_.substr(start, pos_ - start));
      have_coeff = true;
      skip();
      if (peek() != '*') return Laurent(coeff);
      ++pos_;
      skip();
    }
    if (peek() != 'a' && peek() != 't') {
      if (have_coeff) fail("expected variable after '*'");
      fail("expected a coefficient or variable");
    }
    ++pos_;
    std::int64_t exponent = 1;
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      bool neg = false;
      if (peek() == '-') {
        neg = true;
        ++pos_;
      }
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
      std::int64_t value = 0;
      while (std::isdigit(static_cast<unsigned char>(peek()))) value = value * 10 + (text_[pos_++] - '0');
      exponent = neg ? -value : value;
    }
    return Laurent::monomial(coeff, exponent);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Laurent Laurent::parse(std::string_view text) { return LaurentReader(text).read(); }

}  // namespace affschur
