#include "subtour/lp_format.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "subtour/errors.hpp"

namespace subtour {

namespace {

constexpr int kMaxDecimalDigits = 18;

bool decimal_ok(const Rat& r, std::string* out) {
  return rat_to_decimal(r, kMaxDecimalDigits, *out);
}

// "p/q" exact rendering for comments.
std::string frac(const Rat& r) { return rat_to_string(r); }

std::string sense_text(Sense s) {
  switch (s) {
    case Sense::LE:
      return "<=";
    case Sense::GE:
      return ">=";
    case Sense::EQ:
      return "=";
  }
  return "?";
}

// Renders "c x<k+1>" sequences; `render` maps each rational to text and must
// already be exact for every value passed here.
std::string terms_text(const std::vector<std::pair<int, Rat>>& terms,
                       const std::function<std::string(const Rat&)>& render) {
  std::string s;
  bool first = true;
  for (const auto& [id, coef] : terms) {
    const bool neg = coef < 0;
    const Rat mag = neg ? Rat(-coef) : coef;
    if (first) {
      if (neg) s += "- ";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    if (mag != 1) s += render(mag) + " ";
    s += "x" + std::to_string(id + 1);
  }
  if (first) s = "0 x1";  // empty expression placeholder
  return s;
}

BigInt lcm_denominators(const std::vector<std::pair<int, Rat>>& terms, const Rat& rhs) {
  BigInt l = 1;
  auto fold = [&](const Rat& r) {
    const BigInt d = rat_den(r);
    l = l / boost::multiprecision::gcd(l, d) * d;
  };
  for (const auto& [id, coef] : terms) fold(coef);
  fold(rhs);
  return l;
}

}  // namespace

std::string emit_lp(const ConstraintSystem& sys, const std::optional<QPoint>& objective) {
  if (objective && static_cast<int>(objective->size()) != sys.dim)
    throw DomainError("objective dimension does not match the system");

  std::string doc;
  doc += "Minimize\n";
  {
    std::vector<std::pair<int, Rat>> terms;
    if (objective)
      for (int j = 0; j < sys.dim; ++j)
        if ((*objective)[static_cast<size_t>(j)] != 0)
          terms.emplace_back(j, (*objective)[static_cast<size_t>(j)]);
    bool exact = true;
    std::string tmp;
    for (const auto& [id, c] : terms)
      if (!decimal_ok(c, &tmp)) exact = false;
    if (exact) {
      doc += " obj: " +
             terms_text(terms,
                        [](const Rat& r) {
                          std::string s;
                          rat_to_decimal(r, kMaxDecimalDigits, s);
                          return s;
                        }) +
             "\n";
    } else {
      const BigInt l = lcm_denominators(terms, Rat(0));
      std::vector<std::pair<int, Rat>> scaled;
      for (const auto& [id, c] : terms) scaled.emplace_back(id, Rat(c * l));
      doc += "\\ obj scaled by " + l.str() + ";" + " original coefficients:";
      for (const auto& [id, c] : terms)
        doc += " " + frac(c) + " x" + std::to_string(id + 1);
      doc += "\n obj: " +
             terms_text(scaled,
                        [](const Rat& r) {
                          std::string s;
                          rat_to_decimal(r, kMaxDecimalDigits, s);
                          return s;
                        }) +
             "\n";
    }
  }

  doc += "Subject To\n";
  // Every row of the system is emitted as a named constraint so the document
  // mirrors the system row-for-row; the Bounds section below restates the box
  // rows as variable bounds (and declares unboxed variables free, overriding
  // the format's implicit default lower bound of zero).
  std::vector<bool> has_lb(static_cast<size_t>(sys.dim), false),
      has_ub(static_cast<size_t>(sys.dim), false);
  for (const LinearConstraint& c : sys.rows) {
    if (c.tag == ConTag::NonNeg && c.tag_edge >= 0)
      has_lb[static_cast<size_t>(c.tag_edge)] = true;
    if (c.tag == ConTag::UpperOne && c.tag_edge >= 0)
      has_ub[static_cast<size_t>(c.tag_edge)] = true;
    std::vector<std::pair<int, Rat>> terms(c.coeffs.begin(), c.coeffs.end());
    bool exact = true;
    std::string tmp;
    for (const auto& [id, v] : terms)
      if (!decimal_ok(v, &tmp)) exact = false;
    if (!decimal_ok(c.rhs, &tmp)) exact = false;
    auto dec = [](const Rat& r) {
      std::string s;
      rat_to_decimal(r, kMaxDecimalDigits, s);
      return s;
    };
    if (exact) {
      doc += " " + c.name + ": " + terms_text(terms, dec) + " " + sense_text(c.sense) + " " +
             dec(c.rhs) + "\n";
    } else {
      const BigInt l = lcm_denominators(terms, c.rhs);
      doc += "\\ " + c.name + " scaled by " + l.str() + "; original:";
      for (const auto& [id, v] : terms) doc += " " + frac(v) + " x" + std::to_string(id + 1);
      doc += " " + sense_text(c.sense) + " " + frac(c.rhs) + "\n";
      std::vector<std::pair<int, Rat>> scaled;
      for (const auto& [id, v] : terms) scaled.emplace_back(id, Rat(v * l));
      doc += " " + c.name + ": " + terms_text(scaled, dec) + " " + sense_text(c.sense) + " " +
             dec(Rat(c.rhs * l)) + "\n";
    }
  }

  doc += "Bounds\n";
  for (int j = 0; j < sys.dim; ++j) {
    const bool lb = has_lb[static_cast<size_t>(j)];
    const bool ub = has_ub[static_cast<size_t>(j)];
    const std::string xj = "x" + std::to_string(j + 1);
    if (lb && ub)
      doc += " 0 <= " + xj + " <= 1\n";
    else if (lb)
      doc += " " + xj + " >= 0\n";
    else if (ub)
      doc += " -inf <= " + xj + " <= 1\n";
    else
      doc += " " + xj + " free\n";
  }
  doc += "End\n";
  return doc;
}

}  // namespace subtour
