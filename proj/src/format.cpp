#include "polyspace/format.hpp"

#include <cctype>
#include <sstream>

#include "polyspace/errors.hpp"

namespace polyspace {

namespace {

std::string trimmed(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, sep)) out.push_back(token);
  if (!s.empty() && s.back() == sep) out.push_back("");
  return out;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

std::string format_rat(const Rat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

Rat parse_rat(const std::string& text) {
  std::string s = trimmed(text);
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s = s.substr(1);
  }
  std::string num = s, den = "1";
  if (std::size_t slash = s.find('/'); slash != std::string::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw Error(errc::parse_error, "expected a or a/b, got '" + text + "'");
  Int d(den);
  if (d == 0) throw Error(errc::parse_error, "zero denominator in '" + text + "'");
  Rat r(Int(num), d);
  return negative ? -r : r;
}

std::vector<Rat> parse_weights(const std::string& text) {
  std::vector<Rat> out;
  std::vector<std::string> tokens = split(text, ',');
  for (std::size_t t = 0; t < tokens.size(); ++t) {
    std::string s = trimmed(tokens[t]);
    std::string num = s, den = "1";
    if (std::size_t slash = s.find('/'); slash != std::string::npos) {
      num = s.substr(0, slash);
      den = s.substr(slash + 1);
    }
    // strict grammar: positive decimal integers only
    if (!all_digits(num) || !all_digits(den))
      throw Error(errc::parse_error,
                  "weight entry " + std::to_string(t + 1) +
                      " is not a positive rational: '" + tokens[t] + "'")
          .with_index(static_cast<long>(t + 1));
    Int d(den);
    if (d == 0)
      throw Error(errc::parse_error, "weight entry " + std::to_string(t + 1) +
                                         " has zero denominator")
          .with_index(static_cast<long>(t + 1));
    out.emplace_back(Int(num), d);
  }
  return out;
}

std::string format_weights(const WeightVector& m) {
  std::string s;
  for (int i = 0; i < m.n(); ++i) {
    if (i) s += ",";
    s += format_rat(m.entry(i));
  }
  return s;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  for (const std::string& token : split(text, ','))
    out.push_back(parse_rat(token));
  return out;
}

Subset parse_index_set(const std::string& text, int n) {
  Subset I(0);
  if (trimmed(text).empty()) return I;
  for (const std::string& token : split(text, ',')) {
    std::string s = trimmed(token);
    if (!all_digits(s))
      throw Error(errc::parse_error, "bad index '" + token + "'");
    long v = std::stol(s);
    if (v < 1 || v > n)
      throw Error(errc::parse_error,
                  "index " + s + " out of range 1.." + std::to_string(n));
    if (I.contains(static_cast<int>(v - 1)))
      throw Error(errc::parse_error, "repeated index " + s);
    I = I.with(static_cast<int>(v - 1));
  }
  return I;
}

std::string format_subset(Subset I) {
  std::string s = "{";
  bool first = true;
  for (int i : bit_indices(I)) {
    if (!first) s += " ";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

namespace {

// shared by polynomial and ring-element rendering: sign-aware joining
void append_term(std::string& out, bool negative, const std::string& body) {
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  out += body;
}

std::string q_power(int d) {
  if (d == 0) return "1";
  if (d == 1) return "q";
  return "q^" + std::to_string(d);
}

}  // namespace

std::string format_polynomial(const IntPolynomial& P) {
  std::string out;
  for (int d = 0; d <= P.degree(); ++d) {
    const Int& c = P.coeff(d);
    if (c == 0) continue;
    Int a = abs(c);
    std::string body;
    if (d == 0)
      body = a.str();
    else if (a == 1)
      body = q_power(d);
    else
      body = a.str() + "*" + q_power(d);
    append_term(out, c < 0, body);
  }
  return out.empty() ? "0" : out;
}

std::string format_monomial(const Monomial& M) {
  std::string out;
  for (int i : bit_indices(M.lSet)) {
    if (!out.empty()) out += "*";
    out += "l" + std::to_string(i + 1);
  }
  if (M.pPow > 0) {
    if (!out.empty()) out += "*";
    out += M.pPow == 1 ? "p" : "p^" + std::to_string(M.pPow);
  }
  return out.empty() ? "1" : out;
}

std::string format_ring_element(const RingElement& e) {
  std::string out;
  for (const auto& [mono, coeff] : e.terms()) {
    Rat a = abs(coeff);
    std::string body;
    if (mono == Monomial{})
      body = format_rat(a);
    else if (a == 1)
      body = format_monomial(mono);
    else
      body = format_rat(a) + "*" + format_monomial(mono);
    append_term(out, coeff < 0, body);
  }
  return out.empty() ? "0" : out;
}

std::string format_partition(const Partition& P) {
  std::string out = "{";
  for (int a = 0; a < P.size(); ++a) {
    if (a) out += "|";
    bool first = true;
    for (int i : bit_indices(P.part(a))) {
      if (!first) out += " ";
      out += std::to_string(i + 1);
      first = false;
    }
  }
  return out + "}";
}

std::string format_quadrangle(const Quadrangle& Q) {
  std::string out = Q.kind == QuadrangleKind::Star ? "STAR center="
                                                   : "TRIANGLE distinguished=";
  out += format_subset(Q.parts.part(Q.special));
  out += " parts=" + format_partition(Q.parts);
  return out;
}

Monomial parse_monomial(const std::string& text, int n) {
  std::string s = trimmed(text);
  if (s.empty()) throw Error(errc::parse_error, "empty monomial");
  Monomial M;
  std::size_t col = 1;
  for (const std::string& raw : split(s, '*')) {
    std::string token = trimmed(raw);
    if (token.empty())
      throw Error(errc::parse_error, "empty factor in monomial")
          .with_index(static_cast<long>(col));
    if (token == "1") {
      // unit factor, allowed standalone
    } else if (token[0] == 'l') {
      std::string idx = token.substr(1);
      if (!all_digits(idx))
        throw Error(errc::parse_error, "bad generator '" + token + "'")
            .with_index(static_cast<long>(col));
      long v = std::stol(idx);
      if (v < 1 || v > n)
        throw Error(errc::parse_error,
                    "index " + idx + " out of range 1.." + std::to_string(n))
            .with_index(static_cast<long>(col));
      if (M.lSet.contains(static_cast<int>(v - 1)))
        throw Error(errc::parse_error,
                    "repeated l" + idx + "; write p for a square")
            .with_index(static_cast<long>(col));
      M.lSet = M.lSet.with(static_cast<int>(v - 1));
    } else if (token[0] == 'p') {
      int e = 1;
      if (token.size() > 1) {
        if (token[1] != '^' || !all_digits(token.substr(2)))
          throw Error(errc::parse_error, "bad factor '" + token + "'")
              .with_index(static_cast<long>(col));
        e = static_cast<int>(std::stol(token.substr(2)));
      }
      M.pPow += e;
    } else {
      throw Error(errc::parse_error, "bad factor '" + token + "'")
          .with_index(static_cast<long>(col));
    }
    col += raw.size() + 1;
  }
  return M;
}

RingElement parse_ring_element(const std::string& text, int n) {
  RingElement e;
  std::string s = trimmed(text);
  if (s.empty()) throw Error(errc::parse_error, "empty element");
  // split into signed terms at top level
  std::size_t pos = 0;
  bool negative = false;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    pos = 1;
  }
  while (pos < s.size()) {
    std::size_t next = s.find_first_of("+-", pos);
    std::string term = trimmed(s.substr(pos, next == std::string::npos
                                                 ? std::string::npos
                                                 : next - pos));
    if (term.empty()) throw Error(errc::parse_error, "empty term in element");
    // optional leading rational coefficient factor
    Rat coeff = 1;
    std::string mono_text = term;
    if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      std::size_t star = term.find('*');
      if (star == std::string::npos) {
        coeff = parse_rat(term);
        mono_text = "1";
      } else {
        coeff = parse_rat(term.substr(0, star));
        mono_text = term.substr(star + 1);
      }
    }
    if (negative) coeff = -coeff;
    e.add_term(parse_monomial(mono_text, n), coeff);
    if (next == std::string::npos) break;
    negative = s[next] == '-';
    pos = next + 1;
  }
  return e;
}

}  // namespace polyspace
