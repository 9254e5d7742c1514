#include "borel/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <vector>

namespace borel {

namespace {

nlohmann::json int_to_json(const Int& v) {
  if (v.fits_slong_p()) {
    return static_cast<std::int64_t>(v.get_si());
  }
  return v.get_str();
}

std::string rat_to_string(const Rat& v) { return v.get_str(); }

std::string strip_spaces(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

// --- polynomial scanner -------------------------------------------------

struct Scanner {
  const std::string& s;
  std::size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  bool eat(char c) {
    if (!done() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw PolynomialError("cannot parse polynomial: " + what +
                          " at position " + std::to_string(pos) + " of \"" +
                          s + "\"");
  }

  Int integer() {
    std::size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return Int(s.substr(start, pos - start));
  }
};

constexpr unsigned long kMaxExponent = 512;

unsigned long scan_exponent(Scanner& sc) {
  Int e = sc.integer();
  if (e > static_cast<long>(kMaxExponent)) sc.fail("exponent too large");
  return e.get_ui();
}

}  // namespace

QPoly parse_polynomial(const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.empty()) {
    throw PolynomialError("cannot parse polynomial: empty input");
  }
  Scanner sc{s};
  std::vector<Rat> coeffs;
  bool first = true;
  while (!sc.done()) {
    int sign = 1;
    if (sc.eat('-')) {
      sign = -1;
    } else if (sc.eat('+')) {
      if (first) sc.fail("unexpected leading '+'");
    } else if (!first) {
      sc.fail("expected '+' or '-' between terms");
    }
    first = false;

    Rat coeff(1);
    bool saw_coeff = false;
    if (!sc.done() && std::isdigit(static_cast<unsigned char>(sc.peek()))) {
      Int num = sc.integer();
      Int den(1);
      if (sc.eat('/')) {
        den = sc.integer();
        if (den == 0) sc.fail("zero denominator");
      }
      coeff = Rat(num) / Rat(den);
      saw_coeff = true;
      sc.eat('*');
    }

    unsigned long power = 0;
    if (!sc.done() && sc.peek() == 'z') {
      ++sc.pos;
      power = sc.eat('^') ? scan_exponent(sc) : 1;
    } else if (!saw_coeff) {
      sc.fail("expected a coefficient or z");
    }

    if (coeffs.size() < power + 1) coeffs.resize(power + 1, Rat(0));
    coeffs[power] += sign * coeff;
  }
  QPoly p{std::move(coeffs)};
  p.trim();
  return p;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t at = s.find(sep, start);
    if (at == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, at - start));
    start = at + 1;
  }
}

Rat parse_rational(const std::string& raw, const char* what) {
  std::string s = strip_spaces(raw);
  bool ok = !s.empty();
  std::size_t slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  auto is_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    return std::all_of(t.begin() + i, t.end(), [](char c) {
      return std::isdigit(static_cast<unsigned char>(c));
    });
  };
  if (!ok || !is_int(num) || !is_int(den)) {
    throw PolynomialError(std::string("cannot parse ") + what + ": \"" + raw +
                          "\" is not a rational number");
  }
  Rat d{Int(den)};
  if (d == 0) {
    throw PolynomialError(std::string("cannot parse ") + what +
                          ": zero denominator in \"" + raw + "\"");
  }
  return Rat(Int(num)) / d;
}

}  // namespace

QPoly parse_coeff_list(const std::string& text) {
  std::vector<Rat> coeffs;
  for (const std::string& part : split(text, ',')) {
    coeffs.push_back(parse_rational(part, "coefficient list"));
  }
  QPoly p{std::move(coeffs)};
  p.trim();
  return p;
}

HilbertPolynomial parse_gotzmann_list(const std::string& text) {
  std::vector<Int> b;
  for (const std::string& part : split(text, ',')) {
    Rat v = parse_rational(part, "b-vector");
    if (v.get_den() != 1) {
      throw PolynomialError("b-vector entries must be integers, got \"" +
                            part + "\"");
    }
    b.push_back(v.get_num());
  }
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] <= 0) {
      throw PolynomialError("b-vector entries must be positive, got " +
                            b[i].get_str());
    }
    if (i > 0 && b[i - 1] < b[i]) {
      throw PolynomialError("b-vector must be non-increasing, got " +
                            b[i - 1].get_str() + " before " + b[i].get_str());
    }
  }
  return HilbertPolynomial{std::move(b)};
}

SeriesNumerator parse_numerator_list(const std::string& text) {
  SeriesNumerator g;
  for (const std::string& part : split(text, ',')) {
    Rat v = parse_rational(part, "series numerator");
    if (v.get_den() != 1) {
      throw PolynomialError("numerator entries must be integers, got \"" +
                            part + "\"");
    }
    g.c.push_back(v.get_num());
  }
  g.trim();
  return g;
}

// --- text rendering -----------------------------------------------------

std::string to_text(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (int i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "x" + std::to_string(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

std::string to_text(const StronglyStableIdeal& I) {
  if (I.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < I.gens.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_text(I.gens[i]);
  }
  return out + ")";
}

std::string to_text(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    Rat c = p.coeff(k);
    if (c == 0) continue;
    if (c > 0 && !out.empty()) out += "+";
    std::string mag;
    if (c == -1 && k > 0) {
      mag = "-";
    } else if (c != 1 || k == 0) {
      mag = rat_to_string(c);
      if (k > 0) mag += "*";
    }
    out += mag;
    if (k >= 2) {
      out += "z^" + std::to_string(k);
    } else if (k == 1) {
      out += "z";
    }
  }
  return out;
}

// --- ideal serialization ------------------------------------------------

nlohmann::json ideal_to_json(const StronglyStableIdeal& I) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Monomial& m : I.gens) {
    gens.push_back(m.exponents());
  }
  return nlohmann::json{{"vars", I.ring.num_vars}, {"gens", gens}};
}

StronglyStableIdeal ideal_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("gens") ||
      !j["vars"].is_number_integer() || !j["gens"].is_array()) {
    throw InvalidIdealError(
        "expected {\"vars\": n+1, \"gens\": [[e0,...,en], ...]}");
  }
  int nv = j["vars"].get<int>();
  if (nv < 2) {
    throw InvalidIdealError(
        "\"vars\" must be at least 2 (the ring keeps a saturating variable)");
  }
  std::vector<Monomial> gens;
  for (const nlohmann::json& row : j["gens"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != nv) {
      throw InvalidIdealError(
          "each generator must be an exponent array of length \"vars\"");
    }
    std::vector<int> e;
    e.reserve(nv);
    for (const nlohmann::json& v : row) {
      if (!v.is_number_integer() || v.get<long>() < 0) {
        throw InvalidIdealError("exponents must be non-negative integers");
      }
      e.push_back(v.get<int>());
    }
    gens.emplace_back(std::move(e));
  }
  return make_ideal(AmbientRing{nv}, std::move(gens));
}

StronglyStableIdeal ideal_from_text(const std::string& text, int num_vars) {
  std::string s = strip_spaces(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw InvalidIdealError("ideal text form must look like (x0^2, x0*x1)");
  }
  std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) {
    throw InvalidIdealError("empty ideal text; write (0) for the zero ideal");
  }

  // each part is a monomial: '*'-separated x<i>[^<e>] factors, or 0 / 1
  std::vector<std::vector<std::pair<int, int>>> parsed;
  bool zero = false;
  int max_index = -1;
  for (const std::string& part : split(body, ',')) {
    if (part == "0") {
      if (split(body, ',').size() != 1) {
        throw InvalidIdealError("0 cannot appear alongside generators");
      }
      zero = true;
      break;
    }
    std::vector<std::pair<int, int>> factors;
    if (part != "1") {
      for (const std::string& f : split(part, '*')) {
        std::size_t i = 0;
        if (i >= f.size() || f[i] != 'x') {
          throw InvalidIdealError("bad monomial factor \"" + f + "\"");
        }
        ++i;
        std::size_t digits = 0;
        while (i + digits < f.size() &&
               std::isdigit(static_cast<unsigned char>(f[i + digits]))) {
          ++digits;
        }
        if (digits == 0) {
          throw InvalidIdealError("bad variable in \"" + f + "\"");
        }
        int idx = std::stoi(f.substr(i, digits));
        i += digits;
        int exp = 1;
        if (i < f.size()) {
          if (f[i] != '^' || i + 1 >= f.size()) {
            throw InvalidIdealError("bad exponent in \"" + f + "\"");
          }
          exp = std::stoi(f.substr(i + 1));
          if (exp <= 0) {
            throw InvalidIdealError("exponents must be positive in \"" + f +
                                    "\"");
          }
        }
        factors.emplace_back(idx, exp);
        max_index = std::max(max_index, idx);
      }
    }
    parsed.push_back(std::move(factors));
  }

  int nv = num_vars >= 1 ? num_vars : max_index + 2;
  if (num_vars >= 1 && nv < 2) {
    throw InvalidIdealError(
        "num_vars must be at least 2 (the ring keeps a saturating variable)");
  }
  if (nv < 2) nv = 2;
  if (max_index >= nv) {
    throw InvalidIdealError("variable x" + std::to_string(max_index) +
                            " does not fit in " + std::to_string(nv) +
                            " variables");
  }
  if (zero) return StronglyStableIdeal{AmbientRing{nv}, {}};

  std::vector<Monomial> gens;
  for (const std::vector<std::pair<int, int>>& factors : parsed) {
    std::vector<int> e(nv, 0);
    for (const std::pair<int, int>& f : factors) e[f.first] += f.second;
    gens.emplace_back(std::move(e));
  }
  return make_ideal(AmbientRing{nv}, std::move(gens));
}

StronglyStableIdeal parse_ideal(const std::string& text, int num_vars) {
  std::size_t at = text.find_first_not_of(" \t\r\n");
  if (at == std::string::npos) {
    throw InvalidIdealError("empty ideal input");
  }
  if (text[at] == '{') {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded()) {
      throw InvalidIdealError("ideal input is not valid JSON");
    }
    return ideal_from_json(j);
  }
  return ideal_from_text(text, num_vars);
}

nlohmann::json analysis_record(const StronglyStableIdeal& I) {
  HilbertPolynomial hp = hilbert_polynomial_of(I);
  SeriesNumerator g = series_numerator_of(I);

  nlohmann::json betti = nlohmann::json::array();
  for (const Int& v : betti_numbers(I)) betti.push_back(int_to_json(v));

  nlohmann::json numerator = nlohmann::json::array();
  for (const Int& v : g.c) numerator.push_back(int_to_json(v));

  nlohmann::json gotzmann = nlohmann::json::array();
  for (const Int& v : hp.b) gotzmann.push_back(int_to_json(v));
  QPoly hq = to_qpoly(hp);
  nlohmann::json coeffs = nlohmann::json::array();
  for (int k = 0; k <= (hq.is_zero() ? -1 : hq.degree()); ++k) {
    coeffs.push_back(rat_to_string(hq.coeff(k)));
  }

  return nlohmann::json{
      {"ideal", ideal_to_json(I)},
      {"text", to_text(I)},
      {"betti", betti},
      {"regularity", regularity(I)},
      {"series_numerator", numerator},
      {"hp", {{"gotzmann", gotzmann}, {"coeffs", coeffs}, {"text", to_text(hq)}}},
      {"almost_lex", is_almost_lex(I)}};
}

}  // namespace borel
