#include "welded/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "welded/error.hpp"

namespace welded {

namespace {

void require_same_vars(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.nvars() != b.nvars()) {
    throw DimensionError("variable count mismatch: " + std::to_string(a.nvars()) + " vs " +
                         std::to_string(b.nvars()));
  }
}

// Sorts by exponent and merges equal exponents, dropping zeros.
std::vector<Term> canonical(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& x, const Term& y) { return x.exponents < y.exponents; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exponents == t.exponents) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] + b[i];
  return e;
}

}  // namespace

// ---------------------------------------------------------------------------
// UnitMonomial

UnitMonomial UnitMonomial::inverse() const {
  UnitMonomial u{sign, exponents};
  for (auto& e : u.exponents) e = -e;
  return u;
}

LaurentPoly UnitMonomial::to_poly() const {
  return LaurentPoly::monomial(static_cast<int>(exponents.size()), exponents, Integer(sign));
}

bool UnitMonomial::is_one() const {
  return sign == 1 && std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 0; });
}

std::string UnitMonomial::to_string() const { return to_poly().to_string(); }

UnitMonomial operator*(const UnitMonomial& a, const UnitMonomial& b) {
  if (a.exponents.size() != b.exponents.size()) throw DimensionError("unit variable count mismatch");
  return {a.sign * b.sign, add_exponents(a.exponents, b.exponents)};
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly LaurentPoly::constant(int nvars, const Integer& c) {
  return monomial(nvars, Exponents(static_cast<std::size_t>(nvars), 0), c);
}

LaurentPoly LaurentPoly::variable(int nvars, int index, int power) {
  if (index < 1 || index > nvars) {
    throw DimensionError("variable t" + std::to_string(index) + " outside 1.." + std::to_string(nvars));
  }
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index - 1)] = power;
  return monomial(nvars, std::move(e), Integer(1));
}

LaurentPoly LaurentPoly::monomial(int nvars, Exponents exponents, const Integer& c) {
  if (static_cast<int>(exponents.size()) != nvars) throw DimensionError("exponent vector length mismatch");
  LaurentPoly p(nvars);
  if (c != 0) p.terms_.push_back({std::move(exponents), c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(int nvars, std::vector<Term> terms) {
  for (const auto& t : terms) {
    if (static_cast<int>(t.exponents.size()) != nvars) throw DimensionError("exponent vector length mismatch");
  }
  LaurentPoly p(nvars);
  p.terms_ = canonical(std::move(terms));
  return p;
}

bool LaurentPoly::is_unit() const noexcept {
  return terms_.size() == 1 && (terms_[0].coeff == 1 || terms_[0].coeff == -1);
}

std::optional<Integer> LaurentPoly::constant_value() const {
  if (terms_.empty()) return Integer(0);
  if (terms_.size() == 1 &&
      std::all_of(terms_[0].exponents.begin(), terms_[0].exponents.end(), [](int e) { return e == 0; })) {
    return terms_[0].coeff;
  }
  return std::nullopt;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_vars(*this, other);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto i = terms_.begin();
  auto j = other.terms_.begin();
  while (i != terms_.end() || j != other.terms_.end()) {
    if (j == other.terms_.end() || (i != terms_.end() && i->exponents < j->exponents)) {
      merged.push_back(std::move(*i++));
    } else if (i == terms_.end() || j->exponents < i->exponents) {
      merged.push_back(*j++);
    } else {
      Integer c = i->coeff + j->coeff;
      if (c != 0) merged.push_back({std::move(i->exponents), std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) { return *this += -other; }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_vars(a, b);
  if (a.is_zero() || b.is_zero()) return LaurentPoly(a.nvars());
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back({add_exponents(x.exponents, y.exponents), x.coeff * y.coeff});
  }
  LaurentPoly r(a.nvars());
  r.terms_ = canonical(std::move(prod));
  return r;
}

LaurentPoly LaurentPoly::times(const UnitMonomial& u) const {
  if (static_cast<int>(u.exponents.size()) != nvars_) throw DimensionError("unit variable count mismatch");
  LaurentPoly r = *this;
  for (auto& t : r.terms_) {
    for (std::size_t i = 0; i < t.exponents.size(); ++i) t.exponents[i] += u.exponents[i];
    if (u.sign < 0) t.coeff = -t.coeff;
  }
  return r;
}

std::string variable_name(int nvars, int index) {
  return nvars == 1 ? std::string("t") : "t" + std::to_string(index);
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Term& t = *it;
    std::string mono;
    for (int v = 0; v < nvars_; ++v) {
      const int e = t.exponents[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += variable_name(nvars_, v + 1);
      if (e != 1) mono += "^" + std::to_string(e);
    }
    Integer mag = abs(t.coeff);
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mono.empty()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << mono;
    }
  }
  return os.str();
}

LaurentPoly arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::neg: return -a;
  }
  throw DomainError("unknown ring operation");
}

// ---------------------------------------------------------------------------
// Division and normalization

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_vars(a, b);
  if (b.is_zero()) throw DivisibilityError("division by zero");
  const int nv = a.nvars();
  LaurentPoly q(nv);
  if (a.is_zero()) return q;
  if (b.size() == 1) {
    const Term& bt = b.terms().front();
    std::vector<Term> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), bt.coeff.get_mpz_t())) {
        throw DivisibilityError("coefficient " + t.coeff.get_str() + " not divisible by " + bt.coeff.get_str());
      }
      Exponents e(t.exponents.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = t.exponents[i] - bt.exponents[i];
      out.push_back({std::move(e), t.coeff / bt.coeff});
    }
    return LaurentPoly::from_terms(nv, std::move(out));
  }

  // Per-variable exponent box any quotient must live in.
  auto bounds = [nv](const LaurentPoly& p) {
    Exponents lo(static_cast<std::size_t>(nv), std::numeric_limits<int>::max());
    Exponents hi(static_cast<std::size_t>(nv), std::numeric_limits<int>::min());
    for (const auto& t : p.terms()) {
      for (int v = 0; v < nv; ++v) {
        lo[v] = std::min(lo[v], t.exponents[v]);
        hi[v] = std::max(hi[v], t.exponents[v]);
      }
    }
    return std::make_pair(lo, hi);
  };
  const auto [alo, ahi] = bounds(a);
  const auto [blo, bhi] = bounds(b);

  const Term& lead_b = b.terms().back();
  LaurentPoly r = a;
  std::vector<Term> quotient;
  while (!r.is_zero()) {
    const Term& lead_r = r.terms().back();
    if (!mpz_divisible_p(lead_r.coeff.get_mpz_t(), lead_b.coeff.get_mpz_t())) {
      throw DivisibilityError("leading coefficient not divisible");
    }
    Exponents e(static_cast<std::size_t>(nv));
    for (int v = 0; v < nv; ++v) {
      e[v] = lead_r.exponents[v] - lead_b.exponents[v];
      if (e[v] < alo[v] - blo[v] || e[v] > ahi[v] - bhi[v]) {
        throw DivisibilityError("quotient escapes the exponent box; not divisible");
      }
    }
    Term qt{std::move(e), lead_r.coeff / lead_b.coeff};
    r -= LaurentPoly::from_terms(nv, {qt}) * b;
    quotient.push_back(std::move(qt));
  }
  return LaurentPoly::from_terms(nv, std::move(quotient));
}

std::pair<LaurentPoly, UnitMonomial> normalize_unit(const LaurentPoly& a) {
  const int nv = a.nvars();
  UnitMonomial u = UnitMonomial::one(nv);
  if (a.is_zero()) return {a, u};
  Exponents lo(static_cast<std::size_t>(nv), std::numeric_limits<int>::max());
  for (const auto& t : a.terms()) {
    for (int v = 0; v < nv; ++v) lo[v] = std::min(lo[v], t.exponents[v]);
  }
  u.exponents = lo;
  LaurentPoly shifted = a.times(UnitMonomial{1, lo}.inverse());
  if (shifted.terms().front().coeff < 0) {
    u.sign = -1;
    shifted = -shifted;
  }
  return {shifted, u};
}

LaurentPoly specialize(const LaurentPoly& a, const std::map<int, long>& values) {
  const int nv = a.nvars();
  for (const auto& [var, value] : values) {
    if (var < 1 || var > nv) throw DimensionError("variable index " + std::to_string(var) + " out of range");
    if (value == 0) throw DomainError("0 is not a unit and cannot be substituted");
  }
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a.terms()) {
    Term r{t.exponents, t.coeff};
    for (const auto& [var, value] : values) {
      int& e = r.exponents[static_cast<std::size_t>(var - 1)];
      if (e == 0) continue;
      Integer base(value);
      if (e < 0 && value != 1 && value != -1) {
        throw DomainError("negative power of " + std::to_string(value) + " is not an integer");
      }
      Integer pow;
      mpz_pow_ui(pow.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
      r.coeff *= pow;
      e = 0;
    }
    out.push_back(std::move(r));
  }
  return LaurentPoly::from_terms(nv, std::move(out));
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class PolyLexer {
 public:
  explicit PolyLexer(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  char get() {
    skip_ws();
    return s_[pos_++];
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " in polynomial '" + std::string(s_) + "'", 1, static_cast<int>(pos_) + 1);
  }
  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }
  std::size_t pos() const { return pos_; }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

struct RawFactor {
  int var = 0;  // 0 for a number
  int power = 1;
  Integer number{1};
};

}  // namespace

int max_variable_index(std::string_view text) {
  int best = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 't') continue;
    std::size_t j = i + 1;
    int idx = 0;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) idx = idx * 10 + (text[j++] - '0');
    best = std::max(best, j == i + 1 ? 1 : idx);
  }
  return best;
}

LaurentPoly parse_poly(std::string_view text, int nvars) {
  PolyLexer lx(text);
  std::vector<std::pair<int, std::vector<RawFactor>>> raw;  // sign, factors
  int max_var = 0;
  if (lx.done()) lx.fail("empty polynomial");
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      lx.get();
      sign = c == '-' ? -1 : 1;
    } else if (!first) {
      lx.fail("expected '+' or '-'");
    }
    first = false;
    std::vector<RawFactor> factors;
    while (true) {
      char p = lx.peek();
      RawFactor f;
      if (std::isdigit(static_cast<unsigned char>(p))) {
        f.number = Integer(lx.digits());
      } else if (p == 't') {
        lx.get();
        char d = lx.peek();
        f.var = std::isdigit(static_cast<unsigned char>(d)) ? std::stoi(lx.digits()) : 1;
        if (f.var < 1) lx.fail("variable index must be positive");
        max_var = std::max(max_var, f.var);
        if (lx.peek() == '^') {
          lx.get();
          int esign = 1;
          bool paren = false;
          if (lx.peek() == '(') {
            lx.get();
            paren = true;
          }
          if (lx.peek() == '-') {
            lx.get();
            esign = -1;
          } else if (lx.peek() == '+') {
            lx.get();
          }
          f.power = esign * std::stoi(lx.digits());
          if (paren) {
            if (lx.peek() != ')') lx.fail("expected ')'");
            lx.get();
          }
        }
      } else {
        lx.fail("expected a number or a variable");
      }
      factors.push_back(f);
      if (lx.peek() == '*') {
        lx.get();
        continue;
      }
      break;
    }
    raw.emplace_back(sign, std::move(factors));
  }
  if (nvars < 0) nvars = std::max(1, max_var);
  if (max_var > nvars) {
    throw DimensionError("polynomial mentions t" + std::to_string(max_var) + " but only " + std::to_string(nvars) +
                         " variables are declared");
  }
  std::vector<Term> terms;
  for (auto& [sign, factors] : raw) {
    Term t{Exponents(static_cast<std::size_t>(nvars), 0), Integer(sign)};
    for (const auto& f : factors) {
      if (f.var == 0) {
        t.coeff *= f.number;
      } else {
        t.exponents[static_cast<std::size_t>(f.var - 1)] += f.power;
      }
    }
    terms.push_back(std::move(t));
  }
  return LaurentPoly::from_terms(nvars, std::move(terms));
}

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(int rows, int cols, int nvars)
    : rows_(rows),
      cols_(cols),
      nvars_(nvars),
      entries_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), LaurentPoly(nvars)),
      row_labels_(static_cast<std::size_t>(rows)),
      col_labels_(static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw DimensionError("negative matrix dimension");
}

std::size_t PolyMatrix::index(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw DimensionError("matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
  }
  return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
}

int PolyMatrix::col_index(const std::string& label) const {
  auto it = std::find(col_labels_.begin(), col_labels_.end(), label);
  if (it == col_labels_.end()) throw DimensionError("no column labelled '" + label + "'");
  return static_cast<int>(it - col_labels_.begin());
}

PolyMatrix PolyMatrix::select_columns(const std::vector<int>& cols) const {
  PolyMatrix s(rows_, static_cast<int>(cols.size()), nvars_);
  s.row_labels_ = row_labels_;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    s.col_labels_[j] = col_labels_[static_cast<std::size_t>(cols[j])];
    for (int i = 0; i < rows_; ++i) s.at(i, static_cast<int>(j)) = at(i, cols[j]);
  }
  return s;
}

namespace {

void require_square(const PolyMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("determinant of a non-square " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         " matrix");
  }
}

LaurentPoly cofactor_rec(const PolyMatrix& m, std::vector<int>& rows_left, std::vector<int>& cols_left) {
  const int nv = m.nvars();
  if (rows_left.empty()) return LaurentPoly::constant(nv, 1);
  const int r = rows_left.back();
  rows_left.pop_back();
  LaurentPoly det(nv);
  // Expand along row r; sign follows the position of the column among those left.
  for (std::size_t k = 0; k < cols_left.size(); ++k) {
    const int c = cols_left[k];
    const LaurentPoly& entry = m.at(r, c);
    if (entry.is_zero()) continue;
    cols_left.erase(cols_left.begin() + static_cast<std::ptrdiff_t>(k));
    LaurentPoly minor = cofactor_rec(m, rows_left, cols_left);
    cols_left.insert(cols_left.begin() + static_cast<std::ptrdiff_t>(k), c);
    // r is the last remaining row, so its position is rows_left.size().
    const bool odd = ((rows_left.size() + k) % 2) == 1;
    LaurentPoly term = entry * minor;
    if (odd) det -= term;
    else det += term;
  }
  rows_left.push_back(r);
  return det;
}

}  // namespace

LaurentPoly cofactor_determinant(const PolyMatrix& m) {
  require_square(m);
  std::vector<int> rows(static_cast<std::size_t>(m.rows()));
  std::vector<int> cols(static_cast<std::size_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) rows[i] = i;
  for (int j = 0; j < m.cols(); ++j) cols[j] = j;
  return cofactor_rec(m, rows, cols);
}

LaurentPoly bareiss_determinant(const PolyMatrix& m) {
  require_square(m);
  const int n = m.rows();
  const int nv = m.nvars();
  if (n == 0) return LaurentPoly::constant(nv, 1);
  std::vector<std::vector<LaurentPoly>> a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    a[i].reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) a[i].push_back(m.at(i, j));
  }
  int sign = 1;
  LaurentPoly prev = LaurentPoly::constant(nv, 1);
  for (int k = 0; k < n - 1; ++k) {
    // Sparsest nonzero pivot keeps intermediate entries small.
    int piv = -1;
    for (int i = k; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      if (piv < 0 || a[i][k].size() < a[piv][k].size()) piv = i;
    }
    if (piv < 0) return LaurentPoly(nv);
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        LaurentPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = exact_div(num, prev);
      }
      a[i][k] = LaurentPoly(nv);
    }
    prev = a[k][k];
  }
  LaurentPoly det = a[n - 1][n - 1];
  return sign < 0 ? -det : det;
}

LaurentPoly determinant(const PolyMatrix& m) {
  require_square(m);
  return m.rows() <= 4 ? cofactor_determinant(m) : bareiss_determinant(m);
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  if (a.nvars() != b.nvars()) throw DimensionError("matrix product variable count mismatch");
  PolyMatrix c(a.rows(), b.cols(), a.nvars());
  c.row_labels() = a.row_labels();
  c.col_labels() = b.col_labels();
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      LaurentPoly s(a.nvars());
      for (int k = 0; k < a.cols(); ++k) {
        if (a.at(i, k).is_zero() || b.at(k, j).is_zero()) continue;
        s += a.at(i, k) * b.at(k, j);
      }
      c.at(i, j) = std::move(s);
    }
  }
  return c;
}

}  // namespace welded
