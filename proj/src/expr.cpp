#include "sextic/expr.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <variant>

namespace sextic {

namespace {

// Possibly inhomogeneous polynomial; the intermediate value of a parse.
using Poly = std::map<Monomial, Fp>;
using Value = std::variant<Poly, ProjectiveMap>;

class Parser {
 public:
  Parser(std::string_view text, const PrimeField& f) : s_(text), f_(f) {}

  Value parse_all() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::Parse, msg + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  void skip() {
    while (pos_ < s_.size()) {
      if (std::isspace(static_cast<unsigned char>(s_[pos_]))) {
        ++pos_;
      } else if (s_[pos_] == '#') {
        while (pos_ < s_.size() && s_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    std::size_t end = pos_ + w.size();
    if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
    pos_ = end;
    return true;
  }

  std::optional<std::uint64_t> integer() {
    skip();
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (1ull << 40)) fail("integer literal too large");
      ++pos_;
    }
    if (pos_ == start) return std::nullopt;
    return v;
  }

  std::int64_t signed_integer() {
    bool neg = accept('-');
    if (!neg && accept('(')) {
      std::int64_t v = signed_integer();
      expect(')');
      return v;
    }
    auto v = integer();
    if (!v) fail("expected integer exponent");
    return neg ? -static_cast<std::int64_t>(*v) : static_cast<std::int64_t>(*v);
  }

  Poly constant(Fp c) const {
    Poly p;
    if (!c.is_zero()) p.emplace(Monomial{0, 0, 0}, c);
    return p;
  }

  const Poly& as_poly(const Value& v) {
    if (auto* p = std::get_if<Poly>(&v)) return *p;
    fail("a projective map cannot appear here");
  }

  std::optional<Fp> as_scalar(const Poly& p) const {
    if (p.empty()) return f_.zero();
    if (p.size() == 1 && p.begin()->first == Monomial{0, 0, 0}) return p.begin()->second;
    return std::nullopt;
  }

  static void add_into(Poly& acc, const Poly& b, bool negate) {
    for (const auto& [m, c] : b) {
      Fp& slot = acc.try_emplace(m, Fp(0, c.modulus())).first->second;
      slot += negate ? -c : c;
      if (slot.is_zero()) acc.erase(m);
    }
  }

  static Poly mul(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ma, ca] : a)
      for (const auto& [mb, cb] : b) {
        Monomial m{ma.i + mb.i, ma.j + mb.j, ma.k + mb.k};
        Fp& slot = out.try_emplace(m, Fp(0, ca.modulus())).first->second;
        slot += ca * cb;
      }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  }

  Value expr() {
    Value acc = term();
    while (true) {
      bool plus = accept('+');
      if (!plus && !accept('-')) return acc;
      Poly lhs = as_poly(acc);
      Value rhs = term();
      add_into(lhs, as_poly(rhs), !plus);
      acc = std::move(lhs);
    }
  }

  Value term() {
    Value acc = unary();
    while (true) {
      if (accept('*')) {
        Value rhs = unary();
        if (std::holds_alternative<ProjectiveMap>(acc) && std::holds_alternative<ProjectiveMap>(rhs)) {
          acc = std::get<ProjectiveMap>(acc) * std::get<ProjectiveMap>(rhs);
        } else {
          acc = mul(as_poly(acc), as_poly(rhs));
        }
      } else if (accept('/')) {
        Poly lhs = as_poly(acc);
        Value rhs = unary();
        auto d = as_scalar(as_poly(rhs));
        if (!d) fail("division by a non-constant");
        if (d->is_zero()) fail("division by zero");
        acc = mul(lhs, constant(d->inv()));
      } else {
        return acc;
      }
    }
  }

  Value unary() {
    if (accept('-')) {
      Poly p = as_poly(unary());
      for (auto& [m, c] : p) c = -c;
      return p;
    }
    return power();
  }

  Value power() {
    Value base = atom();
    if (!accept('^')) return base;
    std::int64_t e = signed_integer();
    if (auto* m = std::get_if<ProjectiveMap>(&base)) return sextic::power(*m, e);
    const Poly& p = as_poly(base);
    if (auto s = as_scalar(p)) {
      if (s->is_zero() && e < 0) fail("negative power of zero");
      return constant(s->pow(e));
    }
    if (e < 0) fail("negative power of a non-constant");
    if (e > 64) fail("exponent too large");
    Poly acc = constant(f_.one());
    for (std::int64_t k = 0; k < e; ++k) acc = mul(acc, p);
    return acc;
  }

  Value atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    if (accept('(')) {
      Value v = expr();
      expect(')');
      return v;
    }
    if (accept('[')) {
      std::array<Poly, 3> rows;
      for (int r = 0; r < 3; ++r) {
        if (r > 0) expect(':');
        rows[r] = as_poly(expr());
      }
      expect(']');
      Matrix3 m;
      m.fill(f_.zero());
      for (int r = 0; r < 3; ++r)
        for (const auto& [mono, c] : rows[r]) {
          if (mono.degree() != 1) fail("bracket entries must be linear forms");
          int col = mono.i ? 0 : mono.j ? 1 : 2;
          m[static_cast<std::size_t>(3 * r + col)] = c;
        }
      return from_matrix(m);
    }
    if (accept_word("diag")) {
      expect('(');
      std::array<Fp, 3> d;
      for (int r = 0; r < 3; ++r) {
        if (r > 0) expect(',');
        auto s = as_scalar(as_poly(expr()));
        if (!s) fail("diag entries must be scalars");
        d[r] = *s;
      }
      expect(')');
      Matrix3 m;
      m.fill(f_.zero());
      m[0] = d[0];
      m[4] = d[1];
      m[8] = d[2];
      return from_matrix(m);
    }
    if (accept_word("zeta")) {
      expect('(');
      auto n = integer();
      if (!n) fail("expected root order");
      expect(')');
      if (*n == 0 || (f_.p() - 1) % *n != 0) fail("no root of unity of order " + std::to_string(*n));
      return constant(f_.root_of_unity(static_cast<std::uint32_t>(*n)));
    }
    if (accept_word("sqrt3")) return constant(f_.sqrt3());
    if (accept_word("X")) return Poly{{Monomial{1, 0, 0}, f_.one()}};
    if (accept_word("Y")) return Poly{{Monomial{0, 1, 0}, f_.one()}};
    if (accept_word("Z")) return Poly{{Monomial{0, 0, 1}, f_.one()}};
    if (auto v = integer()) return constant(f_(static_cast<std::int64_t>(*v % f_.p())));
    fail("unexpected '" + std::string(1, s_[pos_]) + "'");
  }

  ProjectiveMap from_matrix(const Matrix3& m) {
    try {
      return ProjectiveMap::from_matrix(m);
    } catch (const Error&) {
      fail("singular matrix");
    }
  }

  std::string_view s_;
  const PrimeField& f_;
  std::size_t pos_ = 0;
};

Poly parse_poly(std::string_view text, const PrimeField& f) {
  Parser parser(text, f);
  Value v = parser.parse_all();
  if (auto* p = std::get_if<Poly>(&v)) return *p;
  throw Error(Errc::Parse, "expected a polynomial, got a projective map");
}

TernaryForm to_form(const Poly& p, const PrimeField& f, std::optional<int> degree) {
  int d = degree.value_or(p.empty() ? 0 : p.begin()->first.degree());
  std::vector<TernaryForm::Term> terms;
  for (const auto& [m, c] : p) {
    if (m.degree() != d) throw Error(Errc::Parse, "polynomial is not homogeneous of degree " + std::to_string(d));
    terms.emplace_back(m, c);
  }
  return TernaryForm(d, f, std::move(terms));
}

}  // namespace

Fp parse_scalar(std::string_view text, const PrimeField& f) {
  Poly p = parse_poly(text, f);
  if (p.empty()) return f.zero();
  if (p.size() == 1 && p.begin()->first == Monomial{0, 0, 0}) return p.begin()->second;
  throw Error(Errc::Parse, "expected a scalar in \"" + std::string(text) + "\"");
}

TernaryForm parse_form(std::string_view text, const PrimeField& f) {
  return to_form(parse_poly(text, f), f, std::nullopt);
}

TernaryForm parse_form(std::string_view text, const PrimeField& f, int degree) {
  return to_form(parse_poly(text, f), f, degree);
}

ProjectiveMap parse_map(std::string_view text, const PrimeField& f) {
  Parser parser(text, f);
  Value v = parser.parse_all();
  if (auto* m = std::get_if<ProjectiveMap>(&v)) return *m;
  throw Error(Errc::Parse, "expected diag(...) or [..:..:..] in \"" + std::string(text) + "\"");
}

std::vector<std::pair<std::string, std::string>> parse_assignments(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    auto eq = line.find('=');
    if (eq == std::string_view::npos || eq < first)
      throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": expected 'name = value'");
    std::string name(line.substr(first, eq - first));
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.pop_back();
    if (name.empty()) throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": empty name");
    for (char c : name)
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'' && c != '-')
        throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": bad name '" + name + "'");
    if (!seen.insert(name).second) throw Error(Errc::Parse, "duplicate binding '" + name + "'");
    std::string value(line.substr(eq + 1));
    auto b = value.find_first_not_of(" \t\r");
    auto e = value.find_last_not_of(" \t\r");
    if (b == std::string::npos) throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": empty value");
    out.emplace_back(std::move(name), value.substr(b, e - b + 1));
  }
  return out;
}

std::vector<std::pair<std::string, Fp>> parse_bindings(std::string_view text, const PrimeField& f) {
  std::vector<std::pair<std::string, Fp>> out;
  for (auto& [name, value] : parse_assignments(text)) out.emplace_back(name, parse_scalar(value, f));
  return out;
}

}  // namespace sextic
