#pragma once

#include "disto/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace disto {

// A bound of the form  constant + sum_i coeff_i * symbol_i  with exact
// rational coefficients. Symbols stand for constants that are either
// unspecified (fragmentation constants "C", "C'") or irrational ("log(18)").
struct SymbolicBound {
  Rat constant{0};
  std::map<std::string, Rat> terms;  // symbol -> coefficient, coefficient != 0

  SymbolicBound& add_term(const std::string& sym, const Rat& coeff) {
    if (coeff == 0) return *this;
    Rat& c = terms[sym];
    c += coeff;
    if (c == 0) terms.erase(sym);
    return *this;
  }

  SymbolicBound operator+(const SymbolicBound& o) const {
    SymbolicBound r = *this;
    r.constant += o.constant;
    for (auto& [s, c] : o.terms) r.add_term(s, c);
    return r;
  }

  SymbolicBound scaled(const Rat& f) const {
    SymbolicBound r;
    if (f == 0) return r;
    r.constant = constant * f;
    for (auto& [s, c] : terms) r.terms.emplace(s, c * f);
    return r;
  }

  bool is_constant() const { return terms.empty(); }

  std::string render() const {
    std::string out;
    auto coeff_str = [](const Rat& c, const std::string& sym) {
      if (c == 1) return sym;
      if (c == -1) return "-" + sym;
      return rat_str(c) + "*" + sym;
    };
    for (auto& [s, c] : terms) {
      if (!out.empty()) out += c >= 0 ? " + " : " - ";
      out += out.empty() ? coeff_str(c, s) : coeff_str(abs(c), s);
    }
    if (constant != 0 || out.empty()) {
      if (out.empty())
        out = rat_str(constant);
      else
        out += (constant >= 0 ? " + " : " - ") + rat_str(abs(constant));
    }
    return out;
  }

  // Certified interval when every symbol has a known enclosure; otherwise
  // nullopt (bounds with free constants stay symbolic).
  std::optional<std::pair<Rat, Rat>> evaluate(
      const std::map<std::string, std::pair<Rat, Rat>>& enclosures) const {
    Rat lo = constant, hi = constant;
    for (auto& [s, c] : terms) {
      auto it = enclosures.find(s);
      if (it == enclosures.end()) return std::nullopt;
      const auto& [slo, shi] = it->second;
      if (c >= 0) {
        lo += c * slo;
        hi += c * shi;
      } else {
        lo += c * shi;
        hi += c * slo;
      }
    }
    return std::make_pair(lo, hi);
  }
};

}  // namespace disto
