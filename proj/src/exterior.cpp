#include "welded/exterior.hpp"

#include <algorithm>
#include <cctype>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "welded/error.hpp"

namespace welded {

long inversions(const std::vector<int>& seq) {
  long inv = 0;
  for (std::size_t a = 0; a < seq.size(); ++a) {
    for (std::size_t b = a + 1; b < seq.size(); ++b) {
      if (seq[a] > seq[b]) ++inv;
    }
  }
  return inv;
}

int subset_signature(const Subset& i, const Subset& j) {
  for (int x : i) {
    if (std::find(j.begin(), j.end(), x) != j.end()) {
      throw DisjointnessError("subsets share index " + std::to_string(x));
    }
  }
  std::vector<int> seq = i;
  seq.insert(seq.end(), j.begin(), j.end());
  return inversions(seq) % 2 == 0 ? 1 : -1;
}

std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  Subset s(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) s[i] = i + 1;
  while (true) {
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i + 1) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

Subset complement(const Subset& s, int n) {
  Subset c;
  c.reserve(static_cast<std::size_t>(n) - s.size());
  for (int x = 1; x <= n; ++x) {
    if (!std::binary_search(s.begin(), s.end(), x)) c.push_back(x);
  }
  return c;
}

BasisSpec BasisSpec::standard(int rank, const std::string& prefix) {
  BasisSpec b;
  for (int i = 1; i <= rank; ++i) b.labels.push_back(prefix + std::to_string(i));
  return b;
}

// ---------------------------------------------------------------------------
// InvariantTensor

InvariantTensor::InvariantTensor(BasisSpec basis, int grade, int nvars)
    : basis_(std::move(basis)), grade_(grade), nvars_(nvars) {
  if (grade < 0) throw GradeError("negative grade");
}

InvariantTensor InvariantTensor::generator(int rank, int index, int nvars) {
  InvariantTensor t(rank, 1, nvars);
  t.add({index}, LaurentPoly::constant(nvars, 1));
  return t;
}

InvariantTensor InvariantTensor::scalar(int rank, const LaurentPoly& c) {
  InvariantTensor t(rank, 0, c.nvars());
  t.add({}, c);
  return t;
}

LaurentPoly InvariantTensor::coeff(const Subset& s) const {
  auto it = coeffs_.find(s);
  return it == coeffs_.end() ? LaurentPoly(nvars_) : it->second;
}

void InvariantTensor::add(const Subset& s, const LaurentPoly& c) {
  if (static_cast<int>(s.size()) != grade_) {
    throw GradeError("subset of size " + std::to_string(s.size()) + " in a grade-" + std::to_string(grade_) +
                     " tensor");
  }
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] < 1 || s[k] > rank() || (k > 0 && s[k - 1] >= s[k])) {
      throw GradeError("subset is not strictly increasing within 1.." + std::to_string(rank()));
    }
  }
  if (c.nvars() != nvars_) throw DimensionError("coefficient variable count mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(s, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void InvariantTensor::require_compatible(const InvariantTensor& other) const {
  if (basis_ != other.basis_) throw GradeError("tensors over different bases");
  if (grade_ != other.grade_) throw GradeError("tensors of different grades");
  if (nvars_ != other.nvars_) throw DimensionError("tensors over different variable counts");
}

InvariantTensor& InvariantTensor::operator+=(const InvariantTensor& other) {
  require_compatible(other);
  for (const auto& [s, c] : other.coeffs_) add(s, c);
  return *this;
}

InvariantTensor& InvariantTensor::operator-=(const InvariantTensor& other) {
  require_compatible(other);
  for (const auto& [s, c] : other.coeffs_) add(s, -c);
  return *this;
}

InvariantTensor InvariantTensor::operator-() const {
  InvariantTensor r = *this;
  for (auto& [s, c] : r.coeffs_) c = -c;
  return r;
}

InvariantTensor InvariantTensor::scaled(const LaurentPoly& c) const {
  InvariantTensor r(basis_, grade_, nvars_);
  for (const auto& [s, v] : coeffs_) r.add(s, v * c);
  return r;
}

InvariantTensor InvariantTensor::times(const UnitMonomial& u) const {
  InvariantTensor r = *this;
  for (auto& [s, c] : r.coeffs_) c = c.times(u);
  return r;
}

std::string InvariantTensor::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : coeffs_) {
    if (!out.empty()) out += ", ";
    out += "(";
    if (s.empty()) {
      out += "1";
    } else {
      for (std::size_t k = 0; k < s.size(); ++k) {
        if (k) out += "^";
        out += basis_.labels[static_cast<std::size_t>(s[k] - 1)];
      }
    }
    out += ", " + c.to_string() + ")";
  }
  return out;
}

InvariantTensor wedge(const InvariantTensor& a, const InvariantTensor& b) {
  if (a.basis() != b.basis()) throw GradeError("wedge of tensors over different bases");
  if (a.nvars() != b.nvars()) throw DimensionError("wedge of tensors over different variable counts");
  InvariantTensor r(a.basis(), a.grade() + b.grade(), a.nvars());
  if (r.grade() > r.rank()) return r;
  for (const auto& [i, ca] : a.coeffs()) {
    for (const auto& [j, cb] : b.coeffs()) {
      bool overlap = false;
      for (int x : i) {
        if (std::binary_search(j.begin(), j.end(), x)) {
          overlap = true;
          break;
        }
      }
      if (overlap) continue;
      Subset merged;
      std::merge(i.begin(), i.end(), j.begin(), j.end(), std::back_inserter(merged));
      LaurentPoly c = ca * cb;
      r.add(merged, subset_signature(i, j) > 0 ? c : -c);
    }
  }
  return r;
}

LaurentPoly volume_pairing(const InvariantTensor& a, const InvariantTensor& z) {
  if (a.grade() + z.grade() != a.rank()) {
    throw GradeError("volume pairing needs grades summing to " + std::to_string(a.rank()) + ", got " +
                     std::to_string(a.grade()) + " + " + std::to_string(z.grade()));
  }
  InvariantTensor w = wedge(a, z);
  Subset full(static_cast<std::size_t>(a.rank()));
  for (int k = 0; k < a.rank(); ++k) full[k] = k + 1;
  return w.coeff(full);
}

InvariantTensor from_volume_pairing(int rank, int grade, int nvars,
                                    const std::function<LaurentPoly(const Subset&)>& pairing) {
  InvariantTensor r(rank, grade, nvars);
  for (const Subset& j : k_subsets(rank, grade)) {
    const Subset jbar = complement(j, rank);
    LaurentPoly c = pairing(jbar);
    r.add(j, subset_signature(j, jbar) > 0 ? c : -c);
  }
  return r;
}

std::pair<InvariantTensor, UnitMonomial> canonical_form(const InvariantTensor& a) {
  if (a.is_zero()) return {a, UnitMonomial::one(a.nvars())};
  auto [lead, u] = normalize_unit(a.coeffs().begin()->second);
  return {a.times(u.inverse()), u};
}

UnitWitness equal_up_to_unit(const InvariantTensor& a, const InvariantTensor& b) {
  UnitWitness res{false, UnitMonomial::one(a.nvars())};
  if (a.basis() != b.basis() || a.grade() != b.grade() || a.nvars() != b.nvars()) return res;
  if (a.is_zero() || b.is_zero()) {
    res.equal = a.is_zero() && b.is_zero();
    return res;
  }
  if (a.coeffs().begin()->first != b.coeffs().begin()->first) return res;
  auto [pa, ua] = normalize_unit(a.coeffs().begin()->second);
  auto [pb, ub] = normalize_unit(b.coeffs().begin()->second);
  if (pa != pb) return res;
  UnitMonomial u = ua * ub.inverse();
  if (b.times(u) == a) {
    res.equal = true;
    res.witness = u;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Text form

InvariantTensor parse_tensor(std::string_view text, int rank, int nvars) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (nvars < 0) nvars = std::max(1, max_variable_index(text));

  struct RawTerm {
    Subset subset;
    std::string poly;
  };
  std::vector<RawTerm> raw;
  int max_index = 0;
  if (text != "0") {
    std::size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',')) ++pos;
      if (pos >= text.size()) break;
      if (text[pos] != '(') throw ParseError("expected '('", 1, static_cast<int>(pos) + 1);
      const std::size_t close = text.find(')', pos);
      if (close == std::string_view::npos) throw ParseError("unterminated term", 1, static_cast<int>(pos) + 1);
      std::string_view body = text.substr(pos + 1, close - pos - 1);
      const std::size_t comma = body.find(',');
      if (comma == std::string_view::npos) throw ParseError("expected ',' inside term", 1, static_cast<int>(pos) + 1);
      std::string_view sub = trim(body.substr(0, comma));
      RawTerm t;
      t.poly = std::string(trim(body.substr(comma + 1)));
      if (sub != "1") {
        std::size_t k = 0;
        while (k < sub.size()) {
          std::size_t caret = sub.find('^', k);
          std::string_view item = trim(sub.substr(k, caret == std::string_view::npos ? caret : caret - k));
          std::size_t d = 0;
          while (d < item.size() && !std::isdigit(static_cast<unsigned char>(item[d]))) ++d;
          if (d == item.size()) throw ParseError("basis element without index", 1, static_cast<int>(pos) + 1);
          const int idx = std::stoi(std::string(item.substr(d)));
          t.subset.push_back(idx);
          max_index = std::max(max_index, idx);
          if (caret == std::string_view::npos) break;
          k = caret + 1;
        }
      }
      raw.push_back(std::move(t));
      pos = close + 1;
    }
  }
  if (rank < 0) rank = max_index;
  const int grade = raw.empty() ? 0 : static_cast<int>(raw.front().subset.size());
  InvariantTensor r(rank, grade, nvars);
  for (auto& t : raw) {
    std::vector<int> order = t.subset;
    std::sort(t.subset.begin(), t.subset.end());
    if (std::adjacent_find(t.subset.begin(), t.subset.end()) != t.subset.end())
      throw ParseError("repeated basis index in a term", 1, 1);
    LaurentPoly c = parse_poly(t.poly, nvars);
    r.add(t.subset, inversions(order) % 2 == 0 ? c : -c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Contraction

void check_wiring(const Wiring& w) {
  if (w.outer_points < 0 || w.outer_points % 2 != 0) throw WiringError("outer disk needs an even number of points");
  std::vector<std::vector<int>> used(w.inner_points.size() + 1);
  used[0].assign(static_cast<std::size_t>(w.outer_points), 0);
  for (std::size_t d = 0; d < w.inner_points.size(); ++d) {
    if (w.inner_points[d] < 0 || w.inner_points[d] % 2 != 0) {
      throw WiringError("inner disk " + std::to_string(d + 1) + " needs an even number of points");
    }
    used[d + 1].assign(static_cast<std::size_t>(w.inner_points[d]), 0);
  }
  // in/out balance per disk: curves leave an inner disk at n_i points and
  // enter the outer boundary at n points.
  std::vector<int> leaving(used.size(), 0);
  auto touch = [&](const Port& p, bool is_from) {
    if (p.disk < 0 || p.disk >= static_cast<int>(used.size())) {
      throw WiringError("curve references missing disk " + std::to_string(p.disk));
    }
    auto& u = used[static_cast<std::size_t>(p.disk)];
    if (p.point < 1 || p.point > static_cast<int>(u.size())) {
      throw WiringError("curve references missing point " + std::to_string(p.point) + " on disk " +
                        std::to_string(p.disk));
    }
    if (u[static_cast<std::size_t>(p.point - 1)]++) {
      throw WiringError("point " + std::to_string(p.point) + " on disk " + std::to_string(p.disk) +
                        " is matched twice");
    }
    const bool leaves = p.disk == 0 ? !is_from : is_from;
    if (leaves) ++leaving[static_cast<std::size_t>(p.disk)];
  };
  for (const auto& wire : w.wires) {
    if (wire.from.has_value() != wire.to.has_value()) throw WiringError("curve with a single endpoint");
    if (wire.from) {
      touch(*wire.from, true);
      touch(*wire.to, false);
    }
  }
  for (std::size_t d = 0; d < used.size(); ++d) {
    for (std::size_t k = 0; k < used[d].size(); ++k) {
      if (!used[d][k]) {
        throw WiringError("unmatched point " + std::to_string(k + 1) + " on disk " + std::to_string(d));
      }
    }
    if (2 * leaving[d] != static_cast<int>(used[d].size())) {
      throw WiringError("disk " + std::to_string(d) + " has unbalanced in/out signs");
    }
  }
}

namespace {

struct ContractionPlan {
  int nvars = 0;
  int outer_rank = 0;
  int outer_grade = 0;
  std::vector<int> offset;  // global column offset of each inner disk; outer last
  std::vector<std::vector<std::pair<Subset, const LaurentPoly*>>> terms;  // per inner disk
  std::vector<int> from_pos, to_pos;  // global column of each wire end
  std::vector<std::size_t> radix;     // mixed-radix strides over term choices
  std::size_t combos = 1;
};

// Contribution of term combinations [lo, hi) into `acc`.
void contract_range(const ContractionPlan& plan, std::size_t lo, std::size_t hi,
                    std::map<Subset, LaurentPoly>& acc) {
  const std::size_t p = plan.terms.size();
  const int total_cols = plan.offset.back() + plan.outer_rank;
  const int outer_base = plan.offset.back();
  const std::size_t nwires = plan.from_pos.size();

  std::vector<char> chosen(static_cast<std::size_t>(total_cols));
  std::vector<int> qseq;
  std::vector<std::size_t> oo_wires;
  for (std::size_t combo = lo; combo < hi; ++combo) {
    std::fill(chosen.begin(), chosen.end(), 0);
    qseq.clear();
    LaurentPoly coeff = LaurentPoly::constant(plan.nvars, 1);
    std::size_t rest = combo;
    for (std::size_t d = 0; d < p; ++d) {
      const auto& [q, c] = plan.terms[d][rest / plan.radix[d]];
      rest %= plan.radix[d];
      coeff *= *c;
      // Q_d consumed by the input; its complement stays free for the curves.
      const int size = static_cast<int>(plan.offset[d + 1] - plan.offset[d]);
      for (int x : q) qseq.push_back(plan.offset[d] + x - 1);
      for (int x = 1; x <= size; ++x) {
        if (!std::binary_search(q.begin(), q.end(), x)) chosen[static_cast<std::size_t>(plan.offset[d] + x - 1)] = 1;
      }
    }

    // Each curve must own exactly one selected end. Ends on the outer disk are
    // selected exactly when the other end is not; outer-outer curves branch.
    bool dead = false;
    oo_wires.clear();
    for (std::size_t w = 0; w < nwires && !dead; ++w) {
      const int f = plan.from_pos[w];
      const int t = plan.to_pos[w];
      const bool f_outer = f >= outer_base;
      const bool t_outer = t >= outer_base;
      if (!f_outer && !t_outer) {
        if (chosen[f] == chosen[t]) dead = true;
      } else if (f_outer && t_outer) {
        oo_wires.push_back(w);
      } else {
        const int inner = f_outer ? t : f;
        const int outer = f_outer ? f : t;
        chosen[static_cast<std::size_t>(outer)] = chosen[static_cast<std::size_t>(inner)] ? 0 : 1;
      }
    }
    if (dead) continue;

    const std::size_t branches = std::size_t{1} << oo_wires.size();
    for (std::size_t mask = 0; mask < branches; ++mask) {
      for (std::size_t b = 0; b < oo_wires.size(); ++b) {
        const std::size_t w = oo_wires[b];
        const bool pick_to = (mask >> b) & 1;
        chosen[static_cast<std::size_t>(plan.from_pos[w])] = pick_to ? 0 : 1;
        chosen[static_cast<std::size_t>(plan.to_pos[w])] = pick_to ? 1 : 0;
      }
      // Selected columns in increasing order; position of each column in it.
      std::vector<int> selected;
      std::vector<int> where(static_cast<std::size_t>(total_cols), -1);
      for (int c = 0; c < total_cols; ++c) {
        if (chosen[static_cast<std::size_t>(c)]) {
          where[static_cast<std::size_t>(c)] = static_cast<int>(selected.size());
          selected.push_back(c);
        }
      }
      // Laplace sign of the input blocks against the curve block.
      std::vector<int> seq = qseq;
      seq.insert(seq.end(), selected.begin(), selected.end());
      long parity = inversions(seq);
      // Matching minor: entry -1 at a curve's start, +1 at its end.
      std::vector<int> perm(nwires);
      for (std::size_t w = 0; w < nwires; ++w) {
        const int f = plan.from_pos[w];
        if (chosen[static_cast<std::size_t>(f)]) {
          perm[w] = where[static_cast<std::size_t>(f)];
          ++parity;
        } else {
          perm[w] = where[static_cast<std::size_t>(plan.to_pos[w])];
        }
      }
      parity += inversions(perm);
      Subset k;
      for (int c : selected) {
        if (c >= outer_base) k.push_back(c - outer_base + 1);
      }
      LaurentPoly term = parity % 2 == 0 ? coeff : -coeff;
      auto [it, inserted] = acc.try_emplace(std::move(k), term);
      if (!inserted) {
        it->second += term;
        if (it->second.is_zero()) acc.erase(it);
      }
    }
  }
}

}  // namespace

InvariantTensor contract_matched(const std::vector<InvariantTensor>& inputs, const Wiring& wiring, Execution exec,
                                 int nvars_hint) {
  check_wiring(wiring);
  if (inputs.size() != wiring.inner_points.size()) {
    throw WiringError("expected " + std::to_string(wiring.inner_points.size()) + " input tensors, got " +
                      std::to_string(inputs.size()));
  }
  int nvars = -1;
  for (std::size_t d = 0; d < inputs.size(); ++d) {
    const int size = wiring.inner_points[d];
    if (inputs[d].rank() != size || inputs[d].grade() * 2 != size) {
      throw WiringError("input " + std::to_string(d + 1) + " has rank " + std::to_string(inputs[d].rank()) +
                        " and grade " + std::to_string(inputs[d].grade()) + ", disk expects rank " +
                        std::to_string(size));
    }
    if (nvars >= 0 && inputs[d].nvars() != nvars) throw DimensionError("inputs over different variable counts");
    nvars = inputs[d].nvars();
  }
  if (nvars < 0) nvars = nvars_hint;

  ContractionPlan plan;
  plan.nvars = nvars;
  plan.outer_rank = wiring.outer_points;
  plan.outer_grade = wiring.outer_points / 2;
  plan.offset.push_back(0);
  for (int size : wiring.inner_points) plan.offset.push_back(plan.offset.back() + size);
  InvariantTensor result(wiring.outer_points, plan.outer_grade, nvars);

  for (const auto& wire : wiring.wires) {
    if (!wire.from) return result;  // a closed loop kills the contraction
    auto global = [&](const Port& p) {
      return p.disk == 0 ? plan.offset.back() + p.point - 1 : plan.offset[p.disk - 1] + p.point - 1;
    };
    plan.from_pos.push_back(global(*wire.from));
    plan.to_pos.push_back(global(*wire.to));
  }
  for (const auto& in : inputs) {
    std::vector<std::pair<Subset, const LaurentPoly*>> terms;
    for (const auto& [s, c] : in.coeffs()) terms.emplace_back(s, &c);
    if (terms.empty()) return result;
    plan.combos *= terms.size();
    plan.terms.push_back(std::move(terms));
  }
  plan.radix.assign(plan.terms.size(), 1);
  for (std::size_t d = plan.terms.size(); d-- > 1;) plan.radix[d - 1] = plan.radix[d] * plan.terms[d].size();

  std::map<Subset, LaurentPoly> acc;
  if (exec == Execution::serial) {
    contract_range(plan, 0, plan.combos, acc);
  } else {
    const long combos = static_cast<long>(plan.combos);
#pragma omp parallel
    {
      std::map<Subset, LaurentPoly> local;
#pragma omp for schedule(dynamic, 16)
      for (long c = 0; c < combos; ++c) {
        contract_range(plan, static_cast<std::size_t>(c), static_cast<std::size_t>(c) + 1, local);
      }
#pragma omp critical(welded_contract_merge)
      for (auto& [k, v] : local) {
        auto [it, inserted] = acc.try_emplace(k, v);
        if (!inserted) {
          it->second += v;
          if (it->second.is_zero()) acc.erase(it);
        }
      }
    }
  }
  for (const auto& [k, v] : acc) result.add(k, v);
  return result;
}

}  // namespace welded
