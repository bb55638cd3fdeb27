#pragma once

#include <cctype>
#include <climits>
#include <sstream>
#include <string>
#include <string_view>

#include "qfg/errors.hpp"
#include "qfg/weights.hpp"

// Polynomial text grammar:
//
//   poly := rank ';' term (ws term)*
//   rank := 'A' int
//   term := ('w[' int ',' int ']' | 'kr[' int ',' int ',' int ']') ('^' int)?
//
// Whitespace is accepted between any two tokens.

namespace qfg {

namespace detail {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  DrinfeldPolynomial parse() {
    skip_ws();
    expect('A');
    const auto rank_at = pos_;
    const long n = integer();
    if (n < 1 || n > INT_MAX) throw ParseError("rank must be positive", rank_at);
    DynkinA d(static_cast<int>(n));
    skip_ws();
    expect(';');
    DrinfeldPolynomial p(d);
    skip_ws();
    if (at_end()) throw ParseError("expected at least one term", pos_);
    while (!at_end()) {
      term(p);
      skip_ws();
    }
    return p;
  }

 private:
  void term(DrinfeldPolynomial& p) {
    const auto start = pos_;
    const DynkinA& d = p.diagram();
    if (consume("w[")) {
      const int i = node(d);
      comma();
      const int a = checked_int(integer_signed());
      close();
      const int m = multiplicity();
      p.multiply({i, a}, m);
    } else if (consume("kr[")) {
      const int i = node(d);
      comma();
      const int a = checked_int(integer_signed());
      comma();
      const auto r_at = pos_;
      const long r = integer_signed();
      if (r < 1 || r > 100000) throw ParseError("KR length must be positive", r_at);
      close();
      const int m = multiplicity();
      const auto expanded = kr_expand(d, KRFactor{i, a, static_cast<int>(r)});
      for (int k = 0; k < m; ++k) p *= expanded;
    } else {
      throw ParseError("expected 'w[' or 'kr['", start);
    }
  }

  int node(const DynkinA& d) {
    skip_ws();
    const auto at = pos_;
    const long i = integer_signed();
    if (i < 1 || i > d.rank()) throw ParseError("node out of range", at);
    return static_cast<int>(i);
  }

  int multiplicity() {
    skip_ws();
    if (!consume("^")) return 1;
    skip_ws();
    const auto at = pos_;
    const long m = integer_signed();
    if (m < 1 || m > 100000) throw ParseError("multiplicity must be positive", at);
    return static_cast<int>(m);
  }

  int checked_int(long v) const {
    if (v < INT_MIN / 4 || v > INT_MAX / 4) throw ParseError("integer out of range", pos_);
    return static_cast<int>(v);
  }

  void comma() {
    skip_ws();
    expect(',');
    skip_ws();
  }

  void close() {
    skip_ws();
    expect(']');
  }

  long integer_signed() {
    skip_ws();
    bool negative = false;
    if (!at_end() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const long v = integer();
    return negative ? -v : v;
  }

  long integer() {
    const auto start = pos_;
    long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (LONG_MAX - 9) / 10) throw ParseError("integer too large", start);
      v = v * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) throw ParseError("expected integer", start);
    return v;
  }

  void expect(char c) {
    if (at_end() || text_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline DrinfeldPolynomial parse_polynomial(std::string_view text) { return detail::PolyParser(text).parse(); }

/// Canonical text: factors by (node, center), multiplicity as '^m'. The
/// identity polynomial has no terms and prints as "A<n>;".
inline std::string to_text(const DrinfeldPolynomial& p) {
  std::ostringstream os;
  os << 'A' << p.diagram().rank() << ';';
  for (const auto& [w, m] : p.counts()) {
    os << " w[" << w.node << ',' << w.center << ']';
    if (m > 1) os << '^' << m;
  }
  return os.str();
}

}  // namespace qfg
