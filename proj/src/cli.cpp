#include "welded/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "welded/alexander.hpp"
#include "welded/circuit.hpp"
#include "welded/error.hpp"
#include "welded/selftest.hpp"

namespace welded {

namespace {

using nlohmann::json;

/// Bad input that is not one of the library's own errors (I/O, usage).
class InputError : public Error {
 public:
  using Error::Error;
};

// The file most recently read; named in parse and validation diagnostics.
std::string current_file;

std::string read_input(const std::string& path) {
  current_file = path == "-" ? "<stdin>" : path;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string trimmed_head(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos || line[b] == '#') continue;
    return line.substr(b);
  }
  return {};
}

std::string subset_text(const Subset& s) {
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "^x" : "x") + std::to_string(s[k]);
  return out.empty() ? "1" : out;
}

json tensor_json(const InvariantTensor& a) {
  json terms = json::array();
  for (const auto& [s, c] : a.coeffs()) terms.push_back({{"subset", subset_text(s)}, {"coeff", c.to_string()}});
  return {{"rank", a.rank()}, {"grade", a.grade()}, {"nvars", a.nvars()}, {"tensor", a.to_string()}, {"terms", terms}};
}

json matrix_json(const PolyMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
    rows.push_back(row);
  }
  return {{"rows", m.row_labels()}, {"cols", m.col_labels()}, {"entries", rows}};
}

std::string matrix_text(const PolyMatrix& m) {
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(m.rows()) + 1);
  cells[0].push_back("");
  for (const auto& l : m.col_labels()) cells[0].push_back(l);
  for (int r = 0; r < m.rows(); ++r) {
    auto& row = cells[static_cast<std::size_t>(r) + 1];
    row.push_back(r < static_cast<int>(m.row_labels().size()) ? m.row_labels()[static_cast<std::size_t>(r)] : "");
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).to_string());
  }
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], row[c].size());
    }
  }
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      line += row[c] + std::string(width[c] - row[c].size(), ' ');
    }
    line.erase(line.find_last_not_of(' ') + 1);
    os << line << "\n";
  }
  return os.str();
}

InvariantTensor presented(const InvariantTensor& a, bool raw) { return raw ? a : canonical_form(a).first; }

void emit_tensor(const RunConfig& cfg, std::ostream& out, const InvariantTensor& a, json extra = json::object()) {
  const auto shown = presented(a, cfg.raw);
  if (cfg.format == OutputFormat::json) {
    json j = tensor_json(shown);
    j.update(extra);
    out << j.dump(2) << "\n";
  } else {
    out << shown.to_string() << "\n";
  }
}

/// A tensor read from text or JSON output, or α of a diagram file.
InvariantTensor tensor_from_file(const RunConfig& cfg, const std::string& path) {
  const std::string text = read_input(path);
  const std::string head = trimmed_head(text);
  if (!head.empty() && head[0] == '{') {
    const json j = json::parse(text);
    if (j.contains("tensor")) {
      return parse_tensor(j.at("tensor").get<std::string>(), j.value("rank", -1), j.value("nvars", -1));
    }
    return alpha(diagram_from_json(j), cfg.mu);
  }
  if (head.rfind("tangle", 0) == 0) return alpha(parse_diagram(text), cfg.mu);
  return parse_tensor(text, -1, cfg.mu);
}

std::vector<std::string> expect_inputs(const RunConfig& cfg, std::size_t min, std::size_t max) {
  if (cfg.inputs.size() < min || cfg.inputs.size() > max) {
    throw InputError("expected " + (min == max ? std::to_string(min) : std::to_string(min) + " or more") +
                     " input file(s), got " + std::to_string(cfg.inputs.size()));
  }
  return cfg.inputs;
}

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
  const auto d = load_diagram(read_input(expect_inputs(cfg, 1, 1)[0]));
  emit_tensor(cfg, out, alpha(d, cfg.mu), {{"tangle", d.name}});
  return 0;
}

int cmd_alexpoly(const RunConfig& cfg, std::ostream& out) {
  const auto d = load_diagram(read_input(expect_inputs(cfg, 1, 1)[0]));
  const auto p = alexander_poly_11(d, cfg.mu);
  if (cfg.format == OutputFormat::json) {
    out << json{{"tangle", d.name}, {"polynomial", p.to_string()}}.dump(2) << "\n";
  } else {
    out << p.to_string() << "\n";
  }
  return 0;
}

int cmd_burau(const RunConfig& cfg, std::ostream& out) {
  const auto d = load_diagram(read_input(expect_inputs(cfg, 1, 1)[0]));
  const auto a = presented(alpha(d, cfg.mu), cfg.raw);
  const auto [n0, n1] = cfg.split ? *cfg.split : std::pair<int, int>{d.n(), d.n()};
  const auto family = split_hom(a, {n0, n1});
  auto label = [](PolyMatrix m, const GradedMap& g) {
    m.row_labels().clear();
    m.col_labels().clear();
    for (const auto& s : g.codomain) m.row_labels().push_back(subset_text(s));
    for (const auto& s : g.domain) m.col_labels().push_back(subset_text(s));
    return m;
  };
  if (cfg.format == OutputFormat::json) {
    json maps = json::array();
    for (const auto& g : family.maps) {
      json m = matrix_json(label(g.rho, g));
      m["k"] = g.k;
      m["sign"] = g.sign;
      maps.push_back(m);
    }
    out << json{{"tangle", d.name}, {"split", {n0, n1}}, {"maps", maps}}.dump(2) << "\n";
    return 0;
  }
  for (const auto& g : family.maps) {
    out << "rho_" << g.k << " (sign " << (g.sign > 0 ? "+1" : "-1") << ")\n" << matrix_text(label(g.rho, g));
  }
  return 0;
}

int cmd_compose(const RunConfig& cfg, std::ostream& out) {
  const auto files = expect_inputs(cfg, 1, SIZE_MAX);
  const auto p = load_circuit(read_input(files[0]));
  std::vector<WeldedDiagram> tangles;
  for (std::size_t k = 1; k < files.size(); ++k) tangles.push_back(load_diagram(read_input(files[k])));
  if (tangles.size() != p.disks.size()) {
    throw CompositionError("circuit " + p.name + " has " + std::to_string(p.disks.size()) + " inner disk(s), got " +
                           std::to_string(tangles.size()) + " tangle(s)");
  }
  if (cfg.glue) {
    const auto glued = glue_tangles(p, tangles);
    out << (cfg.format == OutputFormat::json ? diagram_to_json(glued).dump(2) + "\n" : serialize_diagram(glued));
    return 0;
  }
  int mu = cfg.mu;
  if (mu < 0) {
    mu = 1;
    for (const auto& t : tangles) mu = std::max(mu, color_count(t));
    for (const auto& c : p.curves) mu = std::max(mu, c.color);
  }
  std::vector<InvariantTensor> inputs;
  for (const auto& t : tangles) inputs.push_back(alpha(t, mu));
  emit_tensor(cfg, out, gamma(p, inputs, Execution::parallel, mu), {{"circuit", p.name}});
  return 0;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  const auto files = expect_inputs(cfg, 2, 2);
  const auto a = tensor_from_file(cfg, files[0]);
  const auto b = tensor_from_file(cfg, files[1]);
  const auto w = equal_up_to_unit(a, b);
  if (cfg.format == OutputFormat::json) {
    json j{{"equal", w.equal}};
    if (w.equal) j["unit"] = w.witness.to_string();
    out << j.dump(2) << "\n";
  } else if (w.equal) {
    out << "equal up to unit: first = (" << w.witness.to_string() << ") * second\n";
  } else {
    out << "not equal up to unit\n";
  }
  return w.equal ? 0 : 1;
}

int cmd_selftest(const RunConfig& cfg, std::ostream& out) {
  expect_inputs(cfg, 0, 0);
  const auto report = run_selftest(cfg.seed, cfg.scale);
  if (cfg.format == OutputFormat::json) {
    json checks = json::array();
    for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    out << json{{"seed", cfg.seed}, {"passed", report.passed()}, {"failed", report.failed()}, {"checks", checks}}.dump(2)
        << "\n";
  } else {
    out << report.to_string();
  }
  return report.failed() == 0 ? 0 : 1;
}

}  // namespace

std::pair<int, int> parse_split(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("no comma");
    std::size_t used0 = 0, used1 = 0;
    const int n0 = std::stoi(text.substr(0, comma), &used0);
    const int n1 = std::stoi(text.substr(comma + 1), &used1);
    if (used0 != comma || used1 != text.size() - comma - 1 || n0 < 0 || n1 < 0) throw std::invalid_argument("range");
    return {n0, n1};
  } catch (const std::logic_error&) {
    throw SpecError("split must look like n0,n1 with non-negative integers, got '" + text + "'");
  }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::compute: return cmd_compute(cfg, out);
      case Command::alexpoly: return cmd_alexpoly(cfg, out);
      case Command::burau: return cmd_burau(cfg, out);
      case Command::compose: return cmd_compose(cfg, out);
      case Command::compare: return cmd_compare(cfg, out);
      case Command::selftest: return cmd_selftest(cfg, out);
    }
  } catch (const ConsistencyError& e) {
    err << "internal error (please report as a bug): " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << current_file << ": " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    err << "error: " << current_file << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    err << "error: " << current_file << ": bad JSON: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace welded
