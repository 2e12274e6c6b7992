#include "fp/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace fp {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rat make_rat(std::string_view num, std::string_view den) {
  Int n(std::string(num), 10);
  Int d(std::string(den), 10);
  if (d == 0) throw Error("zero denominator in rational");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

Rat parse_rat(std::string_view tok) {
  std::string_view t = tok;
  bool neg = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = t[0] == '-';
    t.remove_prefix(1);
  }
  auto slash = t.find('/');
  Rat r;
  if (slash == std::string_view::npos) {
    if (!all_digits(t)) throw Error("bad rational token '" + std::string(tok) + "'");
    r = make_rat(t, "1");
  } else {
    auto num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw Error("bad rational token '" + std::string(tok) + "'");
    r = make_rat(num, den);
  }
  return neg ? Rat(-r) : r;
}

ExtRat parse_ext_rat(std::string_view tok) {
  if (tok == "inf") return ExtRat::infinity();
  Rat r = parse_rat(tok);
  if (r < 0) throw DomainError("negative entry '" + std::string(tok) + "'");
  return ExtRat(r);
}

Rat parse_tolerance(std::string_view tok) {
  std::string s(tok);
  Rat r;
  auto epos = s.find_first_of("eE");
  auto dot = s.find('.');
  if (epos == std::string::npos && dot == std::string::npos) {
    r = parse_rat(s);
  } else {
    std::string mant = epos == std::string::npos ? s : s.substr(0, epos);
    long expo = epos == std::string::npos ? 0 : std::strtol(s.c_str() + epos + 1, nullptr, 10);
    dot = mant.find('.');
    if (dot != std::string::npos) {
      expo -= long(mant.size() - dot - 1);
      mant.erase(dot, 1);
    }
    if (mant.empty()) throw Error("bad tolerance '" + s + "'");
    Int num(mant, 10);
    Int p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(expo < 0 ? -expo : expo));
    r = expo < 0 ? Rat(num, p10) : Rat(num * p10);
    r.canonicalize();
  }
  if (r <= 0) throw DomainError("tolerance must be positive");
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(); }

std::string to_string(const ExtRat& e) { return e.inf ? "inf" : e.v.get_str(); }

}  // namespace fp
