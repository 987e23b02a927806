#include "ff/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "ff/error.hpp"

namespace ff {

namespace {

void require_same(const Polynomial& f, const Polynomial& g) {
  if (f.modulus() != g.modulus()) {
    throw ModulusMismatch("polynomials over Z_" + std::to_string(f.modulus().value()) +
                          " and Z_" + std::to_string(g.modulus().value()));
  }
}

}  // namespace

Polynomial::Polynomial(PrimeModulus p, std::vector<std::uint32_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_.value();
  trim();
}

void Polynomial::trim() noexcept {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::monomial(PrimeModulus p, std::uint32_t c, std::size_t exponent) {
  std::vector<std::uint32_t> v(exponent + 1, 0);
  v[exponent] = c;
  return Polynomial(p, std::move(v));
}

Polynomial Polynomial::linear_root(PrimeModulus p, std::uint32_t a) {
  return Polynomial(p, {detail::sub_mod(0, a % p.value(), p.value()), 1});
}

Polynomial Polynomial::x_pow_minus_x(PrimeModulus p, std::uint64_t e) {
  std::vector<std::uint32_t> v(e + 1, 0);
  v[e] = 1;
  v[1] = detail::sub_mod(v[1], 1, p.value());
  return Polynomial(p, std::move(v));
}

std::uint64_t Polynomial::rank() const noexcept {
  std::uint64_t r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * p_.value() + *it;
  return r;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) {
  require_same(f, g);
  const auto p = f.modulus().value();
  const auto a = f.coeffs(), b = g.coeffs();
  std::vector<std::uint32_t> out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = detail::add_mod(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  }
  return Polynomial(f.modulus(), std::move(out));
}

Polynomial poly_neg(const Polynomial& f) {
  const auto p = f.modulus().value();
  std::vector<std::uint32_t> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : out) c = detail::sub_mod(0, c, p);
  return Polynomial(f.modulus(), std::move(out));
}

Polynomial poly_sub(const Polynomial& f, const Polynomial& g) {
  require_same(f, g);
  return poly_add(f, poly_neg(g));
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) {
  require_same(f, g);
  if (f.is_zero() || g.is_zero()) return Polynomial(f.modulus());
  const auto p = f.modulus().value();
  const auto a = f.coeffs(), b = g.coeffs();
  std::vector<std::uint32_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = detail::add_mod(out[i + j], detail::mul_mod(a[i], b[j], p), p);
    }
  }
  return Polynomial(f.modulus(), std::move(out));
}

Polynomial poly_scale(const Polynomial& f, Residue c) {
  if (c.modulus() != f.modulus()) throw ModulusMismatch("scalar and polynomial moduli differ");
  const auto p = f.modulus().value();
  std::vector<std::uint32_t> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& x : out) x = detail::mul_mod(x, c.value(), p);
  return Polynomial(f.modulus(), std::move(out));
}

std::pair<Polynomial, Polynomial> poly_divrem(const Polynomial& f, const Polynomial& g) {
  require_same(f, g);
  if (g.is_zero()) throw DivisionByZero("polynomial division by 0");
  const auto pm = f.modulus();
  const auto p = pm.value();
  if (f.degree() < g.degree()) return {Polynomial(pm), f};

  std::vector<std::uint32_t> rem(f.coeffs().begin(), f.coeffs().end());
  const auto d = g.coeffs();
  const std::size_t dg = d.size() - 1;
  const std::uint32_t lead_inv = detail::inv_mod(d.back(), p);
  std::vector<std::uint32_t> quot(rem.size() - dg, 0);
  for (std::size_t k = rem.size(); k-- > dg;) {
    const std::uint32_t c = detail::mul_mod(rem[k], lead_inv, p);
    quot[k - dg] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dg; ++j) {
      rem[k - dg + j] = detail::sub_mod(rem[k - dg + j], detail::mul_mod(c, d[j], p), p);
    }
  }
  rem.resize(dg);
  return {Polynomial(pm, std::move(quot)), Polynomial(pm, std::move(rem))};
}

Polynomial poly_rem(const Polynomial& f, const Polynomial& g) { return poly_divrem(f, g).second; }

Polynomial poly_monic(const Polynomial& f) {
  if (f.is_zero()) return f;
  return poly_scale(f, residue_inv(f.leading()));
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) {
  require_same(f, g);
  if (f.is_zero() && g.is_zero()) throw DivisionByZero("gcd(0, 0) is undefined");
  Polynomial a = f, b = g;
  while (!b.is_zero()) {
    Polynomial r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a);
}

Polynomial poly_derivative(const Polynomial& f) {
  const auto p = f.modulus().value();
  const auto c = f.coeffs();
  if (c.size() <= 1) return Polynomial(f.modulus());
  std::vector<std::uint32_t> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    out[i - 1] = detail::mul_mod(c[i], static_cast<std::uint32_t>(i % p), p);
  }
  return Polynomial(f.modulus(), std::move(out));
}

Residue poly_eval(const Polynomial& f, Residue a) {
  if (a.modulus() != f.modulus()) throw ModulusMismatch("evaluation point over a different Z_p");
  const auto p = f.modulus().value();
  std::uint32_t acc = 0;
  const auto c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = detail::add_mod(detail::mul_mod(acc, a.value(), p), *it, p);
  }
  return Residue(acc, f.modulus());
}

Polynomial poly_powmod(const Polynomial& base, std::uint64_t e, const Polynomial& m) {
  require_same(base, m);
  if (m.is_zero()) throw DivisionByZero("powmod with modulus 0");
  Polynomial result = poly_rem(Polynomial::constant(m.modulus(), 1), m);
  Polynomial b = poly_rem(base, m);
  while (e > 0) {
    if (e & 1) result = poly_rem(result * b, m);
    e >>= 1;
    if (e > 0) b = poly_rem(b * b, m);
  }
  return result;
}

Polynomial poly_product(std::span<const Polynomial> factors, PrimeModulus p) {
  Polynomial acc = Polynomial::constant(p, 1);
  for (const auto& f : factors) acc = acc * f;
  return acc;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

class Parser {
 public:
  Parser(std::string_view text, PrimeModulus p) : text_(text), p_(p) {}

  Polynomial parse() {
    std::vector<std::uint32_t> acc;
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty polynomial");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      add_term(acc, negative);
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') throw ParseError(pos_, std::string("unexpected '") + c + "'");
      negative = c == '-';
      ++pos_;
    }
    return Polynomial(p_, std::move(acc));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::uint64_t number(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > (std::numeric_limits<std::uint64_t>::max() - 9) / 10) {
        throw ParseError(start, std::string(what) + " too large");
      }
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      ++pos_;
    }
    if (pos_ == start) throw ParseError(start, std::string("expected ") + what);
    return v;
  }

  void add_term(std::vector<std::uint32_t>& acc, bool negative) {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number("coefficient") % p_.value();
      have_coeff = true;
    }
    skip_ws();
    std::uint64_t exponent = 0;
    if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
      const char v = peek();
      if (var_ == 0) var_ = v;
      if (v != var_) {
        throw ParseError(pos_, std::string("mixed variables '") + var_ + "' and '" + v + "'");
      }
      ++pos_;
      exponent = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        exponent = number("exponent");
      }
    } else if (!have_coeff) {
      throw ParseError(start, "expected a term");
    }
    if (exponent > kMaxExponent) throw ParseError(start, "exponent too large");
    if (acc.size() <= exponent) acc.resize(exponent + 1, 0);
    const auto p = p_.value();
    const auto c = static_cast<std::uint32_t>(coeff);
    acc[exponent] = negative ? detail::sub_mod(acc[exponent], c, p) : detail::add_mod(acc[exponent], c, p);
  }

  static constexpr std::uint64_t kMaxExponent = 1u << 22;

  std::string_view text_;
  PrimeModulus p_;
  std::size_t pos_ = 0;
  char var_ = 0;
};

}  // namespace

Polynomial poly_parse(std::string_view text, PrimeModulus p) { return Parser(text, p).parse(); }

std::string poly_format(const Polynomial& f, char var) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    out += var;
    if (i > 1) {
      out += '^';
      out += std::to_string(i);
    }
  }
  return out;
}

}  // namespace ff
