#pragma once

// Exterior algebra over a free R-module with an ordered basis x1..x_rank.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "welded/ring.hpp"

namespace welded {

/// Strictly increasing list of 1-based basis indices.
using Subset = std::vector<int>;

/// (-1)^(inversions of the concatenation I‖J). Throws DisjointnessError on overlap.
int subset_signature(const Subset& i, const Subset& j);

/// Number of inversions of a sequence of distinct integers.
long inversions(const std::vector<int>& seq);

/// All k-subsets of {1..n} in lexicographic order.
std::vector<Subset> k_subsets(int n, int k);

/// Indices of {1..n} not in `s`, increasing.
Subset complement(const Subset& s, int n);

struct BasisSpec {
  std::vector<std::string> labels;

  static BasisSpec standard(int rank, const std::string& prefix = "x");
  int rank() const noexcept { return static_cast<int>(labels.size()); }

  friend bool operator==(const BasisSpec&, const BasisSpec&) = default;
};

/// Homogeneous element of Λ^grade over `basis`, stored sparsely as
/// subset -> coefficient with no zero coefficients.
class InvariantTensor {
 public:
  InvariantTensor() = default;
  InvariantTensor(BasisSpec basis, int grade, int nvars);
  InvariantTensor(int rank, int grade, int nvars) : InvariantTensor(BasisSpec::standard(rank), grade, nvars) {}

  /// The basis vector x_index as a grade-1 tensor.
  static InvariantTensor generator(int rank, int index, int nvars);
  /// The grade-0 tensor c.
  static InvariantTensor scalar(int rank, const LaurentPoly& c);

  const BasisSpec& basis() const noexcept { return basis_; }
  int rank() const noexcept { return basis_.rank(); }
  int grade() const noexcept { return grade_; }
  int nvars() const noexcept { return nvars_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::map<Subset, LaurentPoly>& coeffs() const noexcept { return coeffs_; }

  LaurentPoly coeff(const Subset& s) const;
  /// Adds c*x_s; `s` must be strictly increasing.
  void add(const Subset& s, const LaurentPoly& c);

  InvariantTensor& operator+=(const InvariantTensor& other);
  InvariantTensor& operator-=(const InvariantTensor& other);
  friend InvariantTensor operator+(InvariantTensor a, const InvariantTensor& b) { return a += b; }
  friend InvariantTensor operator-(InvariantTensor a, const InvariantTensor& b) { return a -= b; }
  InvariantTensor operator-() const;
  InvariantTensor scaled(const LaurentPoly& c) const;
  InvariantTensor times(const UnitMonomial& u) const;

  friend bool operator==(const InvariantTensor& a, const InvariantTensor& b) {
    return a.basis_ == b.basis_ && a.grade_ == b.grade_ && a.nvars_ == b.nvars_ && a.coeffs_ == b.coeffs_;
  }

  /// `(x1^x2, 1), (x1^x4, t - 1)`; the zero tensor prints as `0`.
  std::string to_string() const;

 private:
  void require_compatible(const InvariantTensor& other) const;

  BasisSpec basis_;
  int grade_ = 0;
  int nvars_ = 0;
  std::map<Subset, LaurentPoly> coeffs_;
};

/// Exterior product. A grade sum above the rank yields the zero tensor.
InvariantTensor wedge(const InvariantTensor& a, const InvariantTensor& b);

/// Coefficient of x1^...^x_rank in a^z. Grades must sum to the rank.
LaurentPoly volume_pairing(const InvariantTensor& a, const InvariantTensor& z);

/// Rebuilds the tensor a of the given grade from the linear form
/// z -> volume_pairing(a, z), evaluated on basis wedges x_J (|J| = rank - grade).
InvariantTensor from_volume_pairing(int rank, int grade, int nvars,
                                    const std::function<LaurentPoly(const Subset&)>& pairing);

struct UnitWitness {
  bool equal = false;
  UnitMonomial witness;  // a == witness * b when equal
};

/// Decides whether a == u*b for a unit u = ±t^k, returning u.
UnitWitness equal_up_to_unit(const InvariantTensor& a, const InvariantTensor& b);

/// Canonical representative of a's unit class: the first nonzero coefficient
/// (subset-lex order) is normalized by `normalize_unit`. Returns (ā, u) with a = u*ā.
std::pair<InvariantTensor, UnitMonomial> canonical_form(const InvariantTensor& a);

/// Parses the text form. rank/nvars < 0 are inferred from the text.
InvariantTensor parse_tensor(std::string_view text, int rank = -1, int nvars = -1);

// ---------------------------------------------------------------------------
// Contraction along a matching of marked points

/// A marked point: disk 0 is the outer boundary, disks 1..p the inner ones;
/// points are 1-based.
struct Port {
  int disk = 0;
  int point = 0;

  friend bool operator==(const Port&, const Port&) = default;
  friend auto operator<=>(const Port&, const Port&) = default;
};

/// An oriented curve. A curve with neither end is a closed loop.
struct Wire {
  std::optional<Port> from;
  std::optional<Port> to;
};

struct Wiring {
  int outer_points = 0;
  std::vector<int> inner_points;  // 2n_i per inner disk
  std::vector<Wire> wires;
};

enum class Execution { serial, parallel };

/// Contracts inner tensors (grade n_i over rank 2n_i) along the wiring into a
/// grade-n tensor over the outer rank 2n. The coefficient of x_K sums, over
/// n_i-subsets Q_i of each inner disk, the product of input coefficients times
/// the signed matching minor that picks exactly one end of every curve among
/// the unused inner points and K. `nvars` sets the variable count when there
/// are no inputs.
InvariantTensor contract_matched(const std::vector<InvariantTensor>& inputs, const Wiring& wiring,
                                 Execution exec = Execution::parallel, int nvars = 1);

/// Throws WiringError describing the first inconsistency, if any.
void check_wiring(const Wiring& wiring);

}  // namespace welded
