#include "p1p1/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace p1p1 {

BiPoly BiPoly::constant(const Scalar& c) {
  BiPoly p(c.field());
  if (!c.is_zero()) p.terms_.push_back({Monomial::one(), c});
  return p;
}

BiPoly BiPoly::term(const Monomial& m, const Scalar& c, MonomialOrder order) {
  BiPoly p(c.field(), order);
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

BiPoly BiPoly::from_terms(Field f, std::vector<Term> terms, MonomialOrder order) {
  BiPoly p(f, order);
  p.terms_ = std::move(terms);
  p.sort_and_combine();
  return p;
}

void BiPoly::sort_and_combine() {
  std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
    return mono_cmp(a.first, b.first, order_) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second = out.back().second + t.second;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.second.is_zero(); });
  terms_ = std::move(out);
}

const Monomial& BiPoly::leading_monomial() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.front().first;
}

const Scalar& BiPoly::leading_coeff() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no leading term");
  return terms_.front().second;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  if (field_ != o.field_) throw std::invalid_argument("mixed fields");
  const BiPoly& rhs = (o.order_ == order_) ? o : o.resorted(order_);
  BiPoly r(field_, order_);
  r.terms_.reserve(terms_.size() + rhs.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    int c = mono_cmp(terms_[i].first, rhs.terms_[j].first, order_);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(rhs.terms_[j++]);
    } else {
      Scalar s = terms_[i].second + rhs.terms_[j].second;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].first, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < rhs.terms_.size(); ++j) r.terms_.push_back(rhs.terms_[j]);
  return r;
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator-() const {
  BiPoly r(field_, order_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.first, -t.second});
  return r;
}

BiPoly BiPoly::scaled(const Scalar& c) const {
  if (c.is_zero()) return BiPoly(field_, order_);
  BiPoly r(field_, order_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.first, t.second * c});
  return r;
}

BiPoly BiPoly::times_term(const Monomial& m, const Scalar& c) const {
  if (c.is_zero()) return BiPoly(field_, order_);
  BiPoly r(field_, order_);
  r.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves the term order
  for (const auto& t : terms_) r.terms_.push_back({t.first * m, t.second * c});
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  if (field_ != o.field_) throw std::invalid_argument("mixed fields");
  BiPoly r(field_, order_);
  for (const auto& t : o.terms_) r = r + times_term(t.first, t.second);
  return r;
}

BiPoly BiPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coeff().inverse());
}

bool BiPoly::operator==(const BiPoly& o) const {
  if (field_ != o.field_) return false;
  const BiPoly& rhs = (o.order_ == order_) ? o : o.resorted(order_);
  return terms_ == rhs.terms_;
}

std::optional<BiDegree> BiPoly::bidegree() const {
  if (is_zero()) throw std::domain_error("zero polynomial has no degree");
  BiDegree d = terms_.front().first.bidegree();
  for (const auto& t : terms_)
    if (t.first.bidegree() != d) return std::nullopt;
  return d;
}

bool BiPoly::has_t() const {
  for (const auto& t : terms_)
    if (t.first.tdeg() > 0) return true;
  return false;
}

int BiPoly::max_tdeg() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.first.tdeg());
  return d;
}

BiPoly BiPoly::resorted(MonomialOrder order) const {
  if (order == order_) return *this;
  BiPoly r(field_, order);
  r.terms_ = terms_;
  std::sort(r.terms_.begin(), r.terms_.end(), [order](const Term& a, const Term& b) {
    return mono_cmp(a.first, b.first, order) > 0;
  });
  return r;
}

BiPoly BiPoly::xy_swapped() const {
  BiPoly r(field_, order_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.first.xy_swapped(), t.second});
  r.sort_and_combine();
  return r;
}

BiDegree forced_bidegree(const BiPoly& f) {
  auto d = f.bidegree();
  if (!d) throw std::domain_error("not bihomogeneous: " + f.str());
  return *d;
}

std::string BiPoly::str() const {
  if (is_zero()) return "0";
  const BiPoly p = resorted(MonomialOrder::DegRevLex);
  std::string s;
  for (const auto& [m,c] : p.terms()) {
    std::string cs = c.str();
    bool neg = cs.front() == '-';
    if (neg) cs.erase(0, 1);
    if (s.empty()) {
      if (neg) s += "-";
    } else {
      s += neg ? "-" : "+";
    }
    if (m.is_one()) {
      s += cs;
    } else if (cs == "1") {
      s += m.str();
    } else {
      s += cs + "*" + m.str();
    }
  }
  return s;
}

namespace {

/// Recursive-descent parser for the plain-text grammar: terms joined by
/// +/-, "*" optional between factors, "^" for powers, scalar
/// coefficients in the field's own format.
class PolyParser {
 public:
  PolyParser(const std::string& text, Field f) : text_(text), field_(f) {}

  BiPoly run() {
    std::vector<BiPoly::Term> terms;
    skip_ws();
    bool neg = eat_sign();
    while (true) {
      auto [m, c] = parse_term();
      terms.push_back({m, neg ? -c : c});
      skip_ws();
      if (pos_ >= text_.size()) break;
      char ch = text_[pos_];
      if (ch == '+') {
        ++pos_;
        neg = false;
      } else if (ch == '-') {
        ++pos_;
        neg = true;
      } else {
        fail("expected '+' or '-'");
      }
      skip_ws();
    }
    return BiPoly::from_terms(field_, std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(pos_) + ": " + what + " in \"" + text_ + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace((unsigned char)text_[pos_])) ++pos_;
  }

  bool eat_sign() {
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      bool neg = text_[pos_] == '-';
      ++pos_;
      skip_ws();
      return neg;
    }
    return false;
  }

  std::pair<Monomial, Scalar> parse_term() {
    Monomial m = Monomial::one();
    Scalar c = Scalar::one(field_);
    bool any = false;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      char ch = text_[pos_];
      if (std::isdigit((unsigned char)ch)) {
        c = c * parse_number();
        any = true;
      } else if (ch == 'x' || ch == 'y' || ch == 't') {
        int v = parse_variable();
        int p = 1;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
          ++pos_;
          skip_ws();
          p = parse_exponent();
        }
        m.e[v] += p;
        any = true;
      } else if (ch == '*') {
        ++pos_;
        continue;
      } else {
        break;
      }
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '*') ++pos_;
    }
    if (!any) fail("expected a term");
    return {m, c};
  }

  Scalar parse_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) ++pos_;
    std::string digits = text_.substr(start, pos_ - start);
    // a/b only counts as a fraction if followed by digits
    if (pos_ < text_.size() && text_[pos_] == '/' && pos_ + 1 < text_.size() &&
        std::isdigit((unsigned char)text_[pos_ + 1])) {
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) ++pos_;
      return Scalar::parse(digits + "/" + text_.substr(dstart, pos_ - dstart), field_);
    }
    return Scalar::parse(digits, field_);
  }

  int parse_variable() {
    char ch = text_[pos_];
    if (ch == 't') {
      ++pos_;
      return Monomial::kT;
    }
    if (pos_ + 1 >= text_.size()) fail("truncated variable name");
    char idx = text_[pos_ + 1];
    if (idx != '0' && idx != '1') fail("unknown variable");
    pos_ += 2;
    return (ch == 'x' ? 0 : 2) + (idx - '0');
  }

  int parse_exponent() {
    if (pos_ >= text_.size() || !std::isdigit((unsigned char)text_[pos_]))
      fail("expected exponent");
    int p = 0;
    while (pos_ < text_.size() && std::isdigit((unsigned char)text_[pos_])) {
      p = p * 10 + (text_[pos_] - '0');
      if (p > 100000) fail("exponent too large");
      ++pos_;
    }
    return p;
  }

  const std::string& text_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly BiPoly::parse(const std::string& text, Field f) {
  return PolyParser(text, f).run();
}

}  // namespace p1p1
