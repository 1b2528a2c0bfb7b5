#include "welded/minors.hpp"

#include <algorithm>

#include "welded/error.hpp"

namespace welded {

namespace {

std::vector<int> minor_columns(const Subset& s, int boundary, int cols) {
  std::vector<int> c;
  for (int x : s) c.push_back(x - 1);
  for (int k = boundary; k < cols; ++k) c.push_back(k);
  return c;
}

std::map<Subset, LaurentPoly> per_minor(const PolyMatrix& m, int boundary, int n, bool parallel) {
  const auto subsets = k_subsets(boundary, n);
  std::vector<LaurentPoly> dets(subsets.size());
  const long count = static_cast<long>(subsets.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long k = 0; k < count; ++k) {
    dets[static_cast<std::size_t>(k)] =
        determinant(m.select_columns(minor_columns(subsets[static_cast<std::size_t>(k)], boundary, m.cols())));
  }
  std::map<Subset, LaurentPoly> out;
  for (std::size_t k = 0; k < subsets.size(); ++k) {
    if (!dets[k].is_zero()) out.emplace(subsets[k], std::move(dets[k]));
  }
  return out;
}

// Fraction-free elimination of the internal columns followed by Sylvester's
// identity: after q Bareiss steps the trailing block S satisfies
// det(S[:, I]) = d^(n-1) * det(PM[:, internal ∪ I]) with d the last pivot.
std::map<Subset, LaurentPoly> shared_elimination(const PolyMatrix& m, int boundary, int n) {
  const int rows = m.rows();
  const int q = m.cols() - boundary;
  const int nv = m.nvars();
  std::map<Subset, LaurentPoly> out;

  std::vector<std::vector<LaurentPoly>> w(static_cast<std::size_t>(rows));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < m.cols(); ++c) w[r].push_back(m.at(r, c));
  }
  // Column order for elimination: internal first, then boundary.
  std::vector<int> order;
  for (int c = boundary; c < m.cols(); ++c) order.push_back(c);
  for (int c = 0; c < boundary; ++c) order.push_back(c);

  int sign = 1;
  LaurentPoly prev = LaurentPoly::constant(nv, 1);
  for (int k = 0; k < q; ++k) {
    const int pc = order[static_cast<std::size_t>(k)];
    int pivot = -1;
    for (int r = k; r < rows; ++r) {
      if (w[r][pc].is_zero()) continue;
      if (pivot < 0 || w[r][pc].size() < w[pivot][pc].size()) pivot = r;
    }
    if (pivot < 0) return out;  // internal columns are dependent: every minor vanishes
    if (pivot != k) {
      std::swap(w[pivot], w[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < rows; ++i) {
      for (std::size_t jj = static_cast<std::size_t>(k) + 1; jj < order.size(); ++jj) {
        const int j = order[jj];
        w[i][j] = exact_div(w[k][pc] * w[i][j] - w[i][pc] * w[k][j], prev);
      }
      w[i][pc] = LaurentPoly(nv);
    }
    prev = w[k][pc];
  }

  if (n == 0) {
    LaurentPoly v = sign > 0 ? prev : -prev;
    if (!v.is_zero()) out.emplace(Subset{}, std::move(v));
    return out;
  }
  LaurentPoly scale = LaurentPoly::constant(nv, 1);
  for (int k = 1; k < n; ++k) scale *= prev;
  if ((static_cast<long>(q) * n) % 2 != 0) sign = -sign;

  for (const Subset& s : k_subsets(boundary, n)) {
    PolyMatrix sub(n, n, nv);
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) sub.at(r, c) = w[q + r][s[c] - 1];
    }
    LaurentPoly det = determinant(sub);
    if (det.is_zero()) continue;
    det = exact_div(det, scale);
    out.emplace(s, sign > 0 ? det : -det);
  }
  return out;
}

}  // namespace

std::map<Subset, LaurentPoly> boundary_minors(const PolyMatrix& m, int boundary, MinorMethod method) {
  const int q = m.cols() - boundary;
  const int n = m.rows() - q;
  if (boundary < 0 || q < 0 || n < 0 || n > boundary) {
    throw DimensionError("matrix " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " with " +
                         std::to_string(boundary) + " boundary columns has no maximal boundary minors");
  }
  switch (method) {
    case MinorMethod::serial: return per_minor(m, boundary, n, false);
    case MinorMethod::parallel: return per_minor(m, boundary, n, true);
    case MinorMethod::shared: return shared_elimination(m, boundary, n);
  }
  return {};
}

}  // namespace welded
