#include "g2chev/signs.hpp"

#include <bit>
#include <stdexcept>

namespace g2chev {

int SignAssignment::value_of(SignMonomial m) const {
  int out = 1;
  for (int k = 0; k < 4; ++k)
    if (m.bits & (1u << k)) out *= v[k];
  return out;
}

std::string SignAssignment::to_string() const {
  std::string s;
  for (int k = 0; k < 4; ++k) s += v[k] > 0 ? '+' : '-';
  return s;
}

SignAssignment SignAssignment::parse(const std::string& text) {
  std::string compact;
  for (char ch : text) {
    if (ch == ' ' || ch == ',') continue;
    compact += ch;
  }
  if (compact.size() != 4) throw std::invalid_argument("SignAssignment: expected four of +/-, got '" + text + "'");
  SignAssignment sigma;
  for (int k = 0; k < 4; ++k) {
    if (compact[k] == '+') sigma.v[k] = 1;
    else if (compact[k] == '-') sigma.v[k] = -1;
    else throw std::invalid_argument("SignAssignment: expected four of +/-, got '" + text + "'");
  }
  return sigma;
}

const std::vector<SignAssignment>& all_assignments() {
  static const std::vector<SignAssignment> all = [] {
    std::vector<SignAssignment> out;
    for (int i = 0; i < 16; ++i) {
      SignAssignment sigma;
      for (int k = 0; k < 4; ++k) sigma.v[k] = (i >> (3 - k)) & 1 ? -1 : 1;
      out.push_back(sigma);
    }
    return out;
  }();
  return all;
}

SignCoefficient operator+(const SignCoefficient& x, const SignCoefficient& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.m != y.m)
    throw std::logic_error("SignCoefficient: sum of unlike monomials " +
                           render(x, CoeffStyle::ascii) + " + " + render(y, CoeffStyle::ascii));
  return {x.c + y.c, x.m};
}

namespace {

std::string generator_name(int k, CoeffStyle style) {
  switch (style) {
    case CoeffStyle::ascii: return "e" + std::to_string(k);
    case CoeffStyle::unicode: return "ε" + std::to_string(k);
    case CoeffStyle::latex: return "\\epsilon_" + std::to_string(k);
  }
  return {};
}

std::string render_plain(std::uint8_t bits, CoeffStyle style) {
  std::string out;
  for (int k = 0; k < 4; ++k)
    if (bits & (1u << k)) out += generator_name(k + 1, style);
  return out;
}

}  // namespace

std::string render(SignMonomial m, CoeffStyle style) {
  if (m.bits & kMonoE4.bits) {
    std::uint8_t rest = m.bits ^ kMonoE5.bits;  // factor out e5 = e1e3e4
    if (std::popcount(rest) + 1 <= std::popcount(m.bits))
      return render_plain(rest, style) + generator_name(5, style);
  }
  return render_plain(m.bits, style);
}

std::string render(const SignCoefficient& x, CoeffStyle style) {
  if (x.is_zero()) return "0";
  std::string mono = render(x.m, style);
  std::string out;
  if (x.c.sign() < 0) out += "-";
  Rational mag = x.c.abs();
  if (mono.empty() || !(mag == Rational(1))) out += mag.to_string();
  return out + mono;
}

SignCoefficient parse_coeff(const std::string& text) {
  const auto fail = [&] { throw std::invalid_argument("parse_coeff: '" + text + "'"); };
  size_t pos = 0;
  int sign = 1;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    if (text[pos] == '-') sign = -1;
    ++pos;
  }
  auto read_int = [&](long long& out) {
    size_t start = pos;
    long long val = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      val = val * 10 + (text[pos] - '0');
      ++pos;
    }
    if (pos == start) return false;
    out = val;
    return true;
  };
  long long num = 1, den = 1;
  bool have_num = read_int(num);
  if (pos < text.size() && text[pos] == '/') {
    if (!have_num) fail();
    ++pos;
    if (!read_int(den)) fail();
  }
  SignMonomial mono;
  bool have_mono = false;
  while (pos < text.size()) {
    if (text[pos] == 'e') {
      ++pos;
    } else if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos]) == 0xce &&
               static_cast<unsigned char>(text[pos + 1]) == 0xb5) {
      pos += 2;  // UTF-8 epsilon
    } else {
      fail();
    }
    if (pos >= text.size() || text[pos] < '1' || text[pos] > '5') fail();
    int k = text[pos] - '1';
    ++pos;
    mono = mono * (k == 4 ? kMonoE5 : SignMonomial{static_cast<std::uint8_t>(1u << k)});
    have_mono = true;
  }
  if (!have_num && !have_mono) fail();
  return {Rational(sign * num, den), mono};
}

}  // namespace g2chev
