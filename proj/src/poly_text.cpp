#include "nodal/poly_text.hpp"

#include <cctype>
#include <optional>

#include "nodal/errors.hpp"

namespace nodal {

namespace {

class Parser {
 public:
  Parser(const GradedRing& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial run() {
    const PrimeField& F = ring_.field();
    std::optional<Polynomial> result;
    std::optional<std::size_t> first_degree;
    bool first = true;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail(std::string("expected '+' or '-', found '") + peek() + "'");
      }
      const std::size_t term_start = pos_;
      auto [coeff, mono] = term();
      if (negative) coeff = F.neg(coeff);
      if (!result) {
        result.emplace(ring_, mono.degree());
        first_degree = static_cast<std::size_t>(mono.degree());
      } else if (static_cast<std::size_t>(mono.degree()) != *first_degree) {
        fail("mixed degrees " + std::to_string(*first_degree) + " and " +
                 std::to_string(mono.degree()),
             term_start);
      }
      result->add_term(mono, coeff);
      first = false;
      skip_ws();
    }
    return std::move(*result);
  }

 private:
  std::pair<Scalar, Monomial> term() {
    const PrimeField& F = ring_.field();
    Scalar coeff = 1;
    std::vector<int> exps(ring_.nvars(), 0);
    bool need_var = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = F.reduce(number_mod(F.modulus()));
      skip_ws();
      if (peek() != '*') return {coeff, Monomial(std::move(exps))};
      ++pos_;
      skip_ws();
      need_var = true;
    }
    while (true) {
      if (peek() != 'x') {
        if (need_var || at_end()) fail("expected a variable 'x<i>'");
        fail(std::string("unexpected character '") + peek() + "'");
      }
      const std::size_t var_pos = pos_;
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        fail("expected a variable index after 'x'");
      const std::uint64_t idx = number_exact();
      if (idx >= static_cast<std::uint64_t>(ring_.nvars()))
        fail("variable x" + std::to_string(idx) + " not in a ring with " +
                 std::to_string(ring_.nvars()) + " variables",
             var_pos);
      std::uint64_t e = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
        e = number_exact();
        skip_ws();
      }
      exps[idx] += static_cast<int>(e);
      if (peek() != '*') break;
      ++pos_;
      skip_ws();
      need_var = true;
    }
    return {coeff, Monomial(std::move(exps))};
  }

  std::uint64_t number_mod(std::uint64_t p) {
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek())))
      v = (v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0')) % p;
    return v;
  }

  std::uint64_t number_exact() {
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
      if (v > 10000) fail("number too large", start);
    }
    return v;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) {
    throw ParseError(what, 0, at + 1);
  }

  const GradedRing& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const GradedRing& ring, std::string_view text) {
  return Parser(ring, text).run();
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (int i = 0; i < m.nvars(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 'x' + std::to_string(i);
      if (m[i] > 1) mono += '^' + std::to_string(m[i]);
    }
    if (mono.empty()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += std::to_string(c) + '*' + mono;
    }
  }
  return out;
}

}  // namespace nodal
