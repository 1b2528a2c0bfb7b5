#include "welded/selftest.hpp"

#include <functional>
#include <sstream>

#include "welded/alexander.hpp"
#include "welded/circuit.hpp"
#include "welded/corpus.hpp"
#include "welded/error.hpp"
#include "welded/generators.hpp"
#include "welded/minors.hpp"

namespace welded {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Runs `trial` `trials` times with per-trial seeds; a trial returns an empty
/// string on success and a description otherwise.
SuiteStats run_suite(std::uint64_t seed, int trials, const std::function<std::string(Rng&)>& trial) {
  SuiteStats s;
  for (int k = 0; k < trials; ++k) {
    Rng rng(seed * 1000003u + static_cast<std::uint64_t>(k));
    std::string failure;
    try {
      failure = trial(rng);
    } catch (const Error& e) {
      failure = std::string("error: ") + e.what();
    }
    ++s.trials;
    if (failure.empty()) {
      ++s.passed;
    } else if (s.first_failure.empty()) {
      s.first_failure = "trial " + std::to_string(k) + ": " + failure;
    }
  }
  return s;
}

/// Random tensors with a few small coefficients.
InvariantTensor small_tensor(Rng& rng, int rank, int grade) {
  PolyShape shape;
  shape.max_terms = 2;
  shape.max_exponent = 1;
  shape.max_coeff = 3;
  return random_tensor(rng, rank, grade, shape, 0.4);
}

}  // namespace

SuiteStats reidemeister_suite(std::uint64_t seed, int trials, int max_crossings) {
  return run_suite(seed, trials, [&](Rng& rng) -> std::string {
    DiagramShape shape;
    shape.max_crossings = max_crossings;
    for (;;) {
      const WeldedDiagram d = random_diagram(rng, shape);
      const auto site = random_move(rng, d);
      if (!site) continue;
      const WeldedDiagram moved = apply_move(d, *site);
      const auto a = alpha(d, shape.mu);
      const auto b = alpha(moved, shape.mu);
      if (equal_up_to_unit(a, b).equal) return {};
      return site->to_string() + " changed " + a.to_string() + " into " + b.to_string() + "\n" + serialize_diagram(d);
    }
  });
}

SuiteStats operad_suite(std::uint64_t seed, int trials) {
  return run_suite(seed, trials, [](Rng& rng) -> std::string {
    const int n = uniform(rng, 1, 3);
    std::vector<int> arities;
    for (int k = uniform(rng, 1, 2); k > 0; --k) arities.push_back(2 * uniform(rng, 1, 3));
    const CircuitDiagram p1 = random_circuit(rng, random_entering(rng, n), arities);
    const int i = uniform(rng, 1, static_cast<int>(arities.size()));
    std::vector<int> inner;
    for (int k = uniform(rng, 0, 2); k > 0; --k) inner.push_back(2 * uniform(rng, 1, 3));
    const CircuitDiagram p2 = random_circuit(rng, entering_points(p1, i), inner);

    std::vector<InvariantTensor> outer_inputs, inner_inputs;
    for (int a : arities) outer_inputs.push_back(small_tensor(rng, a, a / 2));
    for (int a : inner) inner_inputs.push_back(small_tensor(rng, a, a / 2));

    const CircuitDiagram composed = compose_circuits(p1, i, p2);
    std::vector<InvariantTensor> flat(outer_inputs.begin(), outer_inputs.begin() + (i - 1));
    flat.insert(flat.end(), inner_inputs.begin(), inner_inputs.end());
    flat.insert(flat.end(), outer_inputs.begin() + i, outer_inputs.end());
    const auto lhs = gamma(composed, flat);

    std::vector<InvariantTensor> nested = outer_inputs;
    nested[static_cast<std::size_t>(i - 1)] = gamma(p2, inner_inputs);
    const auto rhs = gamma(p1, nested);
    if (equal_up_to_unit(lhs, rhs).equal) return {};
    return "composed " + lhs.to_string() + " vs nested " + rhs.to_string() + "\n" + serialize_circuit(p1) +
           serialize_circuit(p2);
  });
}

SuiteStats naturality_suite(std::uint64_t seed, int trials) {
  return run_suite(seed, trials, [](Rng& rng) -> std::string {
    DiagramShape shape;
    shape.mu = 1;
    shape.max_strands = 2;
    shape.max_crossings = 4;
    shape.max_circles = 0;
    std::vector<WeldedDiagram> tangles;
    std::vector<std::vector<bool>> entering;
    for (int k = uniform(rng, 1, 2); k > 0; --k) {
      tangles.push_back(random_diagram(rng, shape));
      std::vector<bool> e;
      for (int b = 1; b <= tangles.back().boundary; ++b) e.push_back(boundary_is_in(tangles.back(), b));
      entering.push_back(std::move(e));
    }
    const CircuitDiagram p = random_circuit(rng, random_entering(rng, uniform(rng, 1, 3)), entering, 0.0);
    std::vector<InvariantTensor> inputs;
    for (const auto& t : tangles) inputs.push_back(alpha(t, 1));
    const auto lhs = alpha(glue_tangles(p, tangles), 1);
    const auto rhs = gamma(p, inputs);
    if (equal_up_to_unit(lhs, rhs).equal) return {};
    return "glued " + lhs.to_string() + " vs contracted " + rhs.to_string() + "\n" + serialize_circuit(p);
  });
}

SuiteStats hom_roundtrip_suite(std::uint64_t seed, int trials) {
  return run_suite(seed, trials, [](Rng& rng) -> std::string {
    const int rank = 2 * uniform(rng, 1, 3);
    const int n0 = uniform(rng, 0, rank);
    const auto a = small_tensor(rng, rank, rank / 2);
    const auto back = merge_hom(split_hom(a, {n0, rank - n0}));
    if (back == a) return {};
    return "split " + std::to_string(n0) + " of " + a.to_string() + " came back as " + back.to_string();
  });
}

SuiteStats minors_suite(std::uint64_t seed, int trials) {
  return run_suite(seed, trials, [](Rng& rng) -> std::string {
    const int n = uniform(rng, 1, 3);
    const int q = uniform(rng, 0, 3);
    PolyShape shape;
    shape.nvars = uniform(rng, 1, 2);
    shape.max_terms = 3;
    const PolyMatrix m = random_matrix(rng, n + q, 2 * n + q, shape);
    const auto serial = boundary_minors(m, 2 * n, MinorMethod::serial);
    if (boundary_minors(m, 2 * n, MinorMethod::parallel) != serial) return "parallel minors differ";
    if (boundary_minors(m, 2 * n, MinorMethod::shared) != serial) return "shared-elimination minors differ";
    return {};
  });
}

int SelftestReport::passed() const {
  int k = 0;
  for (const auto& c : checks) k += c.passed ? 1 : 0;
  return k;
}

int SelftestReport::failed() const { return static_cast<int>(checks.size()) - passed(); }

std::string SelftestReport::to_string() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << "selftest: " << passed() << " passed, " << failed() << " failed\n";
  return os.str();
}

SelftestReport run_selftest(std::uint64_t seed, double scale) {
  SelftestReport report;
  auto check = [&](const std::string& name, const std::function<bool()>& body) {
    CheckResult r{name, false, ""};
    try {
      r.passed = body();
    } catch (const Error& e) {
      r.detail = e.what();
    }
    report.checks.push_back(std::move(r));
  };
  auto suite = [&](const std::string& name, const SuiteStats& s) {
    std::string detail = std::to_string(s.passed) + "/" + std::to_string(s.trials);
    if (!s.first_failure.empty()) detail += "; " + s.first_failure.substr(0, s.first_failure.find('\n'));
    report.checks.push_back({name, s.ok(), detail});
  };
  auto trials = [&](int base) { return std::max(1, static_cast<int>(base * scale)); };

  using namespace corpus;
  check("sigma invariant", [] { return equal_up_to_unit(alpha(sigma()), sigma_alpha()).equal; });
  check("tau invariant", [] { return equal_up_to_unit(alpha(tau()), tau_alpha()).equal; });
  check("beta invariant", [] {
    return equal_up_to_unit(alpha(beta()), tensor_from_words(2, 1, {{"1", {2}}, {"-1", {1}}})).equal;
  });
  check("gamma over P", [] { return equal_up_to_unit(gamma(circuit_p(), {alpha(sigma())}), alpha(tau())).equal; });
  check("gamma over Q", [] {
    return equal_up_to_unit(gamma(circuit_q(), {alpha(sigma()), alpha(beta())}), alpha(tau())).equal;
  });
  check("glue sigma into P", [] {
    return equal_up_to_unit(alpha(glue_tangles(circuit_p(), {sigma()})), alpha(tau())).equal;
  });
  check("glue sigma and beta into Q", [] {
    return equal_up_to_unit(alpha(glue_tangles(circuit_q(), {sigma(), beta()})), alpha(tau())).equal;
  });
  check("Q with a cap is P", [] { return same_circuit(compose_circuits(circuit_q(), 2, cap()), circuit_p()); });
  check("two-colored crossing Alexander function", [] {
    const PolyMatrix m = build_matrix(crossing22());
    InvariantTensor got(6, 1, 2), want(6, 1, 2);
    const std::vector<std::pair<Subset, std::string>> values = {
        {{1, 2}, "t2"}, {{1, 3}, "0"}, {{1, 4}, "1"}, {{2, 3}, "-t2"}, {{2, 4}, "1 - t1"}, {{3, 4}, "1"}};
    for (std::size_t k = 0; k < values.size(); ++k) {
      const Subset slot{static_cast<int>(k) + 1};
      got.add(slot, alexander_function(m, values[k].first));
      want.add(slot, parse_poly(values[k].second, 2));
    }
    return equal_up_to_unit(got, want).equal;
  });
  check("trefoil polynomial", [] { return alexander_poly_11(trefoil()) == parse_poly("t^2 - t + 1", 1); });
  check("figure-eight polynomial", [] { return alexander_poly_11(figure_eight()) == parse_poly("t^2 - 3*t + 1", 1); });
  check("split circle vanishes", [] { return alpha(split_circle()).is_zero(); });
  check("n=1 diagrams are multiples of x1 - x2", [] {
    for (const auto& [name, d] : diagrams()) {
      if (d.n() != 1) continue;
      const auto a = alpha(d);
      if (a.coeff({1}) != -a.coeff({2})) return false;
    }
    return true;
  });
  check("duality form agrees with minors", [] {
    for (const auto& [name, d] : diagrams()) {
      const auto a = alpha(d);
      const auto b = alpha_by_duality(d);
      if (a.is_zero() ? !b.is_zero() : !equal_up_to_unit(a, b).equal) return false;
    }
    return true;
  });
  check("braid sigma1^2 sigma2^-1 sigma1", [] {
    const auto r = burau_check(3, {1, 1, -2, 1});
    return r.multiplicative && r.permutation_ok;
  });

  suite("Reidemeister invariance", reidemeister_suite(seed, trials(200)));
  suite("operad functoriality", operad_suite(seed, trials(50)));
  suite("gluing naturality", naturality_suite(seed, trials(50)));
  suite("hom roundtrip", hom_roundtrip_suite(seed, trials(100)));
  suite("minor methods agree", minors_suite(seed, trials(100)));
  return report;
}

}  // namespace welded
