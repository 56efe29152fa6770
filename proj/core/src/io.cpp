#include "thetaforge/io.hpp"

#include <cctype>
#include <sstream>

#include <json.hpp>

namespace thetaforge {

namespace {

std::string coeff_str(const Coefficient& v) { return v.str(); }

void render_factors(std::ostringstream& out, const Monomial& m, bool latex) {
  bool first = true;
  auto emit = [&](char var, int idx, int exp) {
    if (!first && !latex) out << "*";
    first = false;
    if (latex) {
      out << var << "_{" << idx << "}";
      if (exp > 1) out << "^{" << exp << "}";
    } else {
      out << var << "[" << idx << "]";
      if (exp > 1) out << "^" << exp;
    }
  };
  for (const auto& [p, e] : m.c_exponents()) emit('c', p, e);
  for (const auto& [i, e] : m.t_exponents()) emit('t', i, e);
}

std::string render(const Polynomial& f, bool latex) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, v] : f.terms()) {
    const bool negative = v < 0;
    Coefficient mag = negative ? Coefficient(-v) : v;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (m.is_unit()) {
      out << coeff_str(mag);
      continue;
    }
    if (mag != 1) {
      out << coeff_str(mag);
      if (!latex) out << "*";
    }
    render_factors(out, m, latex);
  }
  return out.str();
}

class TextParser {
 public:
  explicit TextParser(const std::string& s) : s_(s) {}

  Polynomial parse() {
    Polynomial result;
    skip_ws();
    bool negative = consume_sign();
    result += parse_term(negative);
    skip_ws();
    while (pos_ < s_.size()) {
      char op = s_[pos_];
      if (op != '+' && op != '-') fail("expected '+' or '-'");
      ++pos_;
      skip_ws();
      result += parse_term(op == '-');
      skip_ws();
    }
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool consume_sign() {
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      bool neg = s_[pos_] == '-';
      ++pos_;
      skip_ws();
      return neg;
    }
    return false;
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected integer");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  Coefficient parse_coefficient() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected coefficient");
    return Coefficient(s_.substr(start, pos_ - start));
  }

  // factor := ('c'|'t') '[' int ']' ['^' int]
  std::pair<Monomial, bool> parse_factor() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected factor");
    char var = s_[pos_];
    if (var != 'c' && var != 't') fail("expected 'c' or 't'");
    ++pos_;
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != '[') fail("expected '['");
    ++pos_;
    int idx = parse_int();
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != ']') fail("expected ']'");
    ++pos_;
    int exp = 1;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '^') {
      ++pos_;
      exp = parse_int();
      if (exp < 0) fail("exponent must be nonnegative");
    }
    if (var == 'c') {
      if (idx < 0) fail("c-index must be nonnegative");
      if (idx == 0 || exp == 0) return {Monomial{}, true};
      return {Monomial::c(idx, exp), true};
    }
    if (idx <= 0) fail("t-index must be positive");
    if (exp == 0) return {Monomial{}, true};
    return {Monomial::t(idx, exp), true};
  }

  Polynomial parse_term(bool negative) {
    skip_ws();
    Coefficient coeff = 1;
    bool saw_coeff = false;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coeff = parse_coefficient();
      saw_coeff = true;
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        skip_ws();
      } else if (pos_ >= s_.size() || s_[pos_] == '+' || s_[pos_] == '-') {
        return Polynomial::constant(negative ? -coeff : coeff);
      }
    }
    Monomial m;
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && (s_[pos_] == 'c' || s_[pos_] == 't')) {
        auto [factor, ok] = parse_factor();
        m = m * factor;
        any = true;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '*') {
          ++pos_;
          continue;
        }
      }
      break;
    }
    if (!any && !saw_coeff) fail("expected term");
    if (!any) return Polynomial::constant(negative ? -coeff : coeff);
    return Polynomial::term(m, negative ? -coeff : coeff);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}

OutputFormat parse_output_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "latex") return OutputFormat::latex;
  throw std::invalid_argument("unknown format: " + name);
}

std::string to_text(const Polynomial& f) { return render(f, false); }
std::string to_latex(const Polynomial& f) { return render(f, true); }

std::string to_json(const Polynomial& f) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [m, v] : f.terms()) {
    nlohmann::ordered_json term;
    nlohmann::ordered_json cs = nlohmann::ordered_json::array();
    for (const auto& [p, e] : m.c_exponents()) cs.push_back({p, e});
    nlohmann::ordered_json ts = nlohmann::ordered_json::array();
    for (const auto& [i, e] : m.t_exponents()) ts.push_back({i, e});
    term["c"] = cs;
    term["t"] = ts;
    term["coeff"] = coeff_str(v);
    terms.push_back(term);
  }
  nlohmann::ordered_json root;
  root["terms"] = terms;
  return root.dump();
}

std::string format(const Polynomial& f, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::text: return to_text(f);
    case OutputFormat::json: return to_json(f);
    case OutputFormat::latex: return to_latex(f);
  }
  return {};
}

Polynomial parse_text(const std::string& input) { return TextParser(input).parse(); }

Polynomial parse_json(const std::string& input) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(input);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!root.is_object() || !root.contains("terms") || !root["terms"].is_array())
    throw ParseError("expected object with \"terms\" array", 0);
  Polynomial f;
  for (const auto& term : root["terms"]) {
    Monomial::Exponents cs, ts;
    for (const auto& pe : term.value("c", nlohmann::json::array()))
      cs.emplace_back(pe.at(0).get<int>(), pe.at(1).get<int>());
    for (const auto& ie : term.value("t", nlohmann::json::array()))
      ts.emplace_back(ie.at(0).get<int>(), ie.at(1).get<int>());
    Coefficient v(term.at("coeff").get<std::string>());
    f.add_term(Monomial::from_parts(std::move(cs), std::move(ts)), v);
  }
  return f;
}

}  // namespace thetaforge
