#include "disto/growth.hpp"

#include <sstream>

namespace disto {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

GrowthModel parse_growth_literal(const std::string& text) {
  GrowthModel m;
  for (const std::string& factor : split(text, '*')) {
    if (factor.empty()) throw usage_error("empty factor in growth literal '" + text + "'");
    auto caret = factor.find('^');
    std::string base = factor.substr(0, caret);
    Rat exp = caret == std::string::npos ? Rat(1) : parse_rational(factor.substr(caret + 1));
    if (base == "n") {
      m.pow_n += exp;
    } else if (base == "log") {
      m.pow_log += exp;
    } else {
      if (caret != std::string::npos)
        throw usage_error("only n and log take exponents: '" + factor + "'");
      Rat c = parse_rational(base);
      if (c <= 0) throw usage_error("growth coefficient must be positive");
      m.coeff *= c;
    }
  }
  if (m.pow_n < 0) throw usage_error("negative power of n is not a growth model");
  return m;
}

std::string render_growth(const GrowthModel& m) {
  if (!m.symbolic) return "prefix-only(" + std::to_string(m.prefix.size()) + " values)";
  std::ostringstream os;
  bool leading = true;
  if (m.coeff != 1) {
    os << rat_str(m.coeff);
    leading = false;
  }
  auto emit = [&](const std::string& base, const Rat& e) {
    if (e == 0) return;
    if (!leading) os << "*";
    os << base;
    if (e != 1) os << "^" << rat_str(e);
    leading = false;
  };
  emit("n", m.pow_n);
  emit("log", m.pow_log);
  if (leading) os << rat_str(m.coeff);
  return os.str();
}

}  // namespace disto
