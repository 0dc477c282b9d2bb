#include "qsym/blg.hpp"

#include <bit>
#include <set>

#include "qsym/errors.hpp"

namespace qsym {
namespace {

int bit_width_of(int label) { return static_cast<int>(std::bit_width(static_cast<unsigned>(label))); }

void check_labels(const SparseEncoding& enc, const LabelMap& labels) {
  for (const auto& value : enc.M) (void)labels(value);
}

// Colour names for variable vertices, created in sorted class-key order so
// colour ids do not depend on variable order.
std::map<std::string, int> variable_colours(ColoredGraph& g, const SparseEncoding& enc, const std::string& prefix) {
  std::set<std::string> keys(enc.variable_class_keys.begin(), enc.variable_class_keys.end());
  std::map<std::string, int> ids;
  for (const auto& key : keys) ids[key] = g.colour_id(prefix + key);
  return ids;
}

std::vector<std::vector<int>> add_equation_layers(ColoredGraph& g, const SparseEncoding& enc, int layers) {
  std::vector<int> obj(static_cast<std::size_t>(layers)), con(static_cast<std::size_t>(layers));
  for (int t = 0; t < layers; ++t) {
    obj[static_cast<std::size_t>(t)] = g.colour_id("objective@" + std::to_string(t));
    con[static_cast<std::size_t>(t)] = g.colour_id("constraint@" + std::to_string(t));
  }
  std::vector<std::vector<int>> eq(static_cast<std::size_t>(enc.num_equations), std::vector<int>(static_cast<std::size_t>(layers)));
  for (int t = 0; t < layers; ++t) {
    for (int k = 0; k < enc.num_equations; ++k) {
      const bool objective = k == 0;
      const int v = g.add_vertex(objective ? obj[static_cast<std::size_t>(t)] : con[static_cast<std::size_t>(t)],
                                 {objective ? OriginKind::Objective : OriginKind::Constraint, k, t});
      g.set_label(v, enc.equation_labels[static_cast<std::size_t>(k)] + "^" + std::to_string(t));
      eq[static_cast<std::size_t>(k)][static_cast<std::size_t>(t)] = v;
      if (t > 0) g.add_edge(eq[static_cast<std::size_t>(k)][static_cast<std::size_t>(t - 1)], v);
    }
  }
  return eq;
}

// Constant plus variables on one layer; returns vertex ids indexed 0..n.
std::vector<int> add_column_layer(ColoredGraph& g, const SparseEncoding& enc, int layer, const std::string& prefix,
                                  const std::map<std::string, int>& var_colours, int constant_colour) {
  std::vector<int> col;
  const int c = g.add_vertex(constant_colour, {OriginKind::Constant, 0, layer});
  g.set_label(c, "I^" + std::to_string(layer));
  col.push_back(c);
  for (int i = 0; i < enc.num_variables; ++i) {
    const int v = g.add_vertex(var_colours.at(enc.variable_class_keys[static_cast<std::size_t>(i)]),
                               {OriginKind::Variable, i, layer});
    g.set_label(v, enc.variable_names[static_cast<std::size_t>(i)] + (prefix.empty() ? "" : "^" + std::to_string(layer)));
    col.push_back(v);
  }
  return col;
}

}  // namespace

int LabelMap::operator()(const Rational& value) const {
  auto it = label.find(value);
  if (it == label.end()) throw PreconditionError("coefficient " + format_rational(value) + " has no label");
  return it->second;
}

LabelMap label_coefficients(const SparseEncoding& enc) {
  std::set<Rational> positive, negative;
  for (const auto& z : enc.M) {
    if (z > 0) positive.insert(z);
    if (z < 0) negative.insert(z);
  }
  LabelMap map;
  for (const auto& z : positive) map.values.push_back(z);
  for (auto it = negative.rbegin(); it != negative.rend(); ++it) map.values.push_back(*it);
  for (std::size_t p = 0; p < map.values.size(); ++p) map.label[map.values[p]] = static_cast<int>(p) + 1;
  map.layers = std::max(1, bit_width_of(map.size()));
  return map;
}

LabelMap make_label_map(const std::map<Rational, int>& labels) {
  LabelMap map;
  std::set<int> used;
  int largest = 0;
  for (const auto& [value, mu] : labels) {
    if (value == 0) throw PreconditionError("zero cannot be labelled");
    if (mu < 1) throw PreconditionError("labels must be positive");
    if (!used.insert(mu).second) throw PreconditionError("labels must be injective");
    largest = std::max(largest, mu);
  }
  map.label = labels;
  std::vector<std::pair<int, Rational>> by_label;
  for (const auto& [value, mu] : labels) by_label.emplace_back(mu, value);
  std::sort(by_label.begin(), by_label.end());
  for (const auto& [mu, value] : by_label) map.values.push_back(value);
  map.layers = std::max(1, bit_width_of(largest));
  return map;
}

std::vector<int> binary_layers(int label, int layers) {
  if (layers < 1 || layers > 30 || label < 1 || label > (1 << layers) - 1) {
    throw PreconditionError("label " + std::to_string(label) + " does not fit in " + std::to_string(layers) + " layers");
  }
  std::vector<int> bits;
  for (int t = 0; t < layers; ++t) {
    if (label >> t & 1) bits.push_back(t);
  }
  return bits;
}

ColoredGraph build_blg_flat(const SparseEncoding& enc) { return build_blg_flat(enc, label_coefficients(enc)); }

ColoredGraph build_blg_flat(const SparseEncoding& enc, const LabelMap& labels) {
  if (enc.kind != EncodingKind::Flat) throw PreconditionError("Graph 1 needs a flat encoding");
  check_labels(enc, labels);
  const int L = labels.layers;
  ColoredGraph g;
  const auto eq = add_equation_layers(g, enc, L);
  const int constant = g.colour_id("constant");
  const auto vars = variable_colours(g, enc, "var:");
  const auto col = add_column_layer(g, enc, L, "", vars, constant);
  for (std::size_t p = 0; p < enc.size(); ++p) {
    const auto& copies = eq[static_cast<std::size_t>(enc.K[p])];
    for (int t : binary_layers(labels(enc.M[p]), L)) {
      g.add_edge(copies[static_cast<std::size_t>(t)], col[static_cast<std::size_t>(enc.J[p])]);
    }
  }
  g.layers = L + 1;
  return g;
}

ColoredGraph build_blg_tensor(const SparseEncoding& enc) { return build_blg_tensor(enc, label_coefficients(enc)); }

ColoredGraph build_blg_tensor(const SparseEncoding& enc, const LabelMap& labels) {
  if (enc.kind != EncodingKind::Tensor) throw PreconditionError("Graph 2 needs a tensor encoding");
  check_labels(enc, labels);
  const int L = labels.layers;
  ColoredGraph g;
  const auto eq = add_equation_layers(g, enc, L);
  const auto lin_vars = variable_colours(g, enc, "var@0:");
  const auto lin = add_column_layer(g, enc, 0, "^", lin_vars, g.colour_id("constant@0"));
  const int constant1 = g.colour_id("constant@1");
  const auto quad_vars = variable_colours(g, enc, "var@1:");
  const auto quad = add_column_layer(g, enc, 1, "^", quad_vars, constant1);
  for (std::size_t v = 0; v < lin.size(); ++v) g.add_edge(lin[v], quad[v]);

  // Quadratic monomials per equation, and over the whole problem.
  std::vector<std::vector<std::size_t>> quad_entries(static_cast<std::size_t>(enc.num_equations));
  std::set<std::pair<int, int>> all_monomials;
  for (std::size_t p = 0; p < enc.size(); ++p) {
    if (enc.I[p] == 0) continue;
    quad_entries[static_cast<std::size_t>(enc.K[p])].push_back(p);
    all_monomials.emplace(enc.I[p], enc.J[p]);
  }
  auto compact = [&](std::size_t k) {
    std::map<int, int> uses;
    std::set<std::pair<int, int>> own;
    for (std::size_t p : quad_entries[k]) {
      ++uses[enc.I[p]];
      if (enc.J[p] != enc.I[p]) ++uses[enc.J[p]];
      own.emplace(enc.I[p], enc.J[p]);
    }
    for (const auto& [v, count] : uses) {
      if (count > 1) return false;
    }
    for (const auto& [i, j] : all_monomials) {
      if (uses.count(i) && uses.count(j) && !own.count({i, j})) return false;
    }
    return true;
  };

  int term_id = 0;
  for (std::size_t p = 0; p < enc.size(); ++p) {
    const auto& copies = eq[static_cast<std::size_t>(enc.K[p])];
    const auto bits = binary_layers(labels(enc.M[p]), L);
    const int i = enc.I[p], j = enc.J[p];
    if (i == 0) {
      for (int t : bits) g.add_edge(copies[static_cast<std::size_t>(t)], lin[static_cast<std::size_t>(j)]);
      continue;
    }
    if (compact(static_cast<std::size_t>(enc.K[p]))) {
      for (int t : bits) {
        g.add_edge(copies[static_cast<std::size_t>(t)], quad[static_cast<std::size_t>(i)]);
        g.add_edge(copies[static_cast<std::size_t>(t)], quad[static_cast<std::size_t>(j)]);
      }
      g.add_edge(quad[static_cast<std::size_t>(i)], quad[static_cast<std::size_t>(j)]);
      continue;
    }
    const int term = g.add_vertex(i == j ? "square-term" : "bilinear-term", {OriginKind::Term, term_id++, 1});
    g.set_label(term, enc.variable_names[static_cast<std::size_t>(i - 1)] + "*" +
                          enc.variable_names[static_cast<std::size_t>(j - 1)] + "@" +
                          enc.equation_labels[static_cast<std::size_t>(enc.K[p])]);
    for (int t : bits) g.add_edge(copies[static_cast<std::size_t>(t)], term);
    g.add_edge(term, quad[static_cast<std::size_t>(i)]);
    g.add_edge(term, quad[static_cast<std::size_t>(j)]);
  }
  g.layers = L + 2;
  return g;
}

}  // namespace qsym
