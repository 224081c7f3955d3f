#include "ew/affine.hpp"

#include <cctype>
#include <stdexcept>

namespace ew {
namespace {

std::string coefficient_prefix(const Rational& slope, bool latex) {
  Rational a = abs(slope);
  if (a == Rational(1)) return "";
  if (a.is_integer() || !latex) return a.str();
  return "\\tfrac{" + std::to_string(a.num()) + "}{" + std::to_string(a.den()) + "}";
}

std::string rational_text(const Rational& r, bool latex) {
  if (!latex || r.is_integer()) return r.str();
  std::string body = "\\tfrac{" + std::to_string(abs(r).num()) + "}{" + std::to_string(r.den()) + "}";
  return r.sign() < 0 ? "-" + body : body;
}

std::string render(const AffineArg& a, bool latex) {
  if (a.slope.is_zero()) return rational_text(a.intercept, latex);
  std::string s_part = coefficient_prefix(a.slope, latex) + "s";
  if (a.slope.sign() > 0) {
    if (a.intercept.is_zero()) return s_part;
    if (a.intercept.sign() > 0) return s_part + "+" + rational_text(a.intercept, latex);
    return s_part + "-" + rational_text(abs(a.intercept), latex);
  }
  if (a.intercept.is_zero()) return "-" + s_part;
  return rational_text(a.intercept, latex) + "-" + s_part;
}

}  // namespace

std::string AffineArg::str() const { return render(*this, false); }
std::string AffineArg::latex() const { return render(*this, true); }

AffineArg AffineArg::parse(std::string_view text) {
  // Sum of signed monomials, each either a rational constant or [rational]['*']s.
  AffineArg out{Rational(0), Rational(0)};
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && text[i] == ' ') ++i;
  };
  skip();
  if (i == text.size()) throw std::invalid_argument("empty affine expression");
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw std::invalid_argument("expected '+' or '-' in '" + std::string(text) + "'");
    }
    first = false;
    std::size_t start = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    Rational coef(1);
    bool has_number = i > start;
    if (has_number) coef = Rational::parse(text.substr(start, i - start));
    skip();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip();
    }
    if (i < text.size() && text[i] == 's') {
      ++i;
      out.slope += Rational(sign) * coef;
    } else if (has_number) {
      out.intercept += Rational(sign) * coef;
    } else {
      throw std::invalid_argument("malformed affine expression '" + std::string(text) + "'");
    }
  }
  return out;
}

}  // namespace ew
