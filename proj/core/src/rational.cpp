#include "spinline/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace spinline {

std::string rational_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string scalar_string(const GaussianRational& v) {
  std::string out = rational_string(v.re);
  out += sgn(v.im) < 0 ? '-' : '+';
  Rational a = abs(v.im);
  out += rational_string(a);
  out += 'i';
  return out;
}

namespace {

// num ['/' den]; cursor advances past the consumed text
Rational parse_fraction(const std::string& text, std::size_t& pos, const char* what) {
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
    bad_arg(std::string("scalar parse: expected ") + what + " in \"" + text + "\"");
  std::string num = text.substr(start, pos - start);
  std::string den = "1";
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    std::size_t dstart = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == dstart)
      bad_arg(std::string("scalar parse: expected denominator after '/' in \"") + text + "\"");
    den = text.substr(dstart, pos - dstart);
  }
  Rational q(num + "/" + den);
  q.canonicalize();
  return q;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t pos = 0;
  Rational q = parse_fraction(text, pos, "rational");
  if (pos != text.size()) bad_arg("rational parse: trailing characters in \"" + text + "\"");
  return q;
}

GaussianRational parse_scalar(const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
  if (text.empty()) bad_arg("scalar parse: empty string");

  // pure imaginary shorthand: "i", "-i", "3i", "2/5i"
  std::size_t pos = 0;
  if (text == "i") return GaussianRational::i();
  if (text == "-i" || text == "+i") return {Rational(0), Rational(text[0] == '-' ? -1 : 1)};

  Rational first = parse_fraction(text, pos, "real part");
  if (pos == text.size()) return {first, Rational(0)};
  if (text[pos] == 'i') {
    if (pos + 1 != text.size()) bad_arg("scalar parse: trailing characters in \"" + raw + "\"");
    return {Rational(0), first};
  }
  if (text[pos] != '+' && text[pos] != '-')
    bad_arg("scalar parse: expected '+' or '-' before imaginary part in \"" + raw + "\"");
  bool neg = text[pos] == '-';
  ++pos;
  if (pos >= text.size()) bad_arg("scalar parse: truncated imaginary part in \"" + raw + "\"");
  Rational second;
  if (text[pos] == 'i') {
    second = 1;  // "a+i" / "a-i"
  } else {
    second = parse_fraction(text, pos, "imaginary part");
  }
  if (pos >= text.size() || text[pos] != 'i')
    bad_arg("scalar parse: expected trailing 'i' in \"" + raw + "\"");
  if (pos + 1 != text.size()) bad_arg("scalar parse: trailing characters in \"" + raw + "\"");
  if (neg) second = -second;
  return {first, second};
}

Rational random_rational(SplitMix64& rng, long max_num, long max_den) {
  return rat(rng.range(-max_num, max_num), rng.range(1, max_den));
}

GaussianRational random_gaussian(SplitMix64& rng, long max_num, long max_den) {
  return {random_rational(rng, max_num, max_den), random_rational(rng, max_num, max_den)};
}

Vec random_spinor(SplitMix64& rng, int dim) {
  Vec v(dim);
  for (auto& e : v) e = random_gaussian(rng);
  return v;
}

}  // namespace spinline
