#include "qsym/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "qsym/blg.hpp"
#include "qsym/dag.hpp"
#include "qsym/encode.hpp"
#include "qsym/errors.hpp"
#include "qsym/group.hpp"
#include "qsym/io.hpp"
#include "qsym/oracle.hpp"
#include "qsym/relax.hpp"

namespace qsym {
namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw PreconditionError("cannot write '" + path + "'");
  file << text;
}

std::pair<int, int> parse_monomial(const Problem& problem, const std::string& text) {
  std::string a, b;
  if (auto star = text.find('*'); star != std::string::npos) {
    a = text.substr(0, star);
    b = text.substr(star + 1);
  } else if (text.size() > 2 && text.ends_with("^2")) {
    a = b = text.substr(0, text.size() - 2);
  } else {
    throw PreconditionError("monomial '" + text + "' should look like x1*x2 or x1^2");
  }
  const int i = problem.find_variable(a), j = problem.find_variable(b);
  if (i < 0 || j < 0) throw PreconditionError("monomial '" + text + "' names an unknown variable");
  return {i, j};
}

std::string joined(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t p = 0; p < parts.size(); ++p) out += (p ? sep : "") + parts[p];
  return out;
}

std::string point_text(const Point& x) {
  std::vector<std::string> parts;
  for (const auto& v : x) parts.push_back(format_rational(v));
  return "(" + joined(parts, " ") + ")";
}

std::string group_text(const PermGroup& group, const std::vector<std::string>& names) {
  const auto gens = generator_strings(group, names);
  return gens.empty() ? "none" : joined(gens, ", ");
}

int report_detection(const DetectionResult& result, std::ostream& out) {
  out << "representation: " << representation_name(result.representation) << "\n";
  out << "graph: " << result.graph_vertices << " vertices, " << result.graph_edges << " edges, "
      << result.graph_layers << " layers\n";
  out << "generators: " << group_text(result.group, result.names) << "\n";
  const std::string orbit_text = orbit_string(result.orbits, result.names);
  out << "orbits: " << (orbit_text.empty() ? "none" : orbit_text) << "\n";
  out << "group order: " << result.group.order() << "\n";

  const auto names = result.problem.variable_names();
  const auto labels = result.problem.constraint_labels();
  std::vector<std::string> witnesses, failures;
  for (const auto& e : result.verification.entries) {
    if (e.sigma) {
      witnesses.push_back("σ=" + e.sigma->to_cycle_string(labels));
    } else {
      failures.push_back(e.generator.to_cycle_string(names) + ": " + e.failure);
    }
  }
  if (!failures.empty()) {
    out << "verified: no (" << joined(failures, "; ") << ")\n";
    return 3;
  }
  out << "verified: yes";
  if (!witnesses.empty()) out << " (" << joined(witnesses, "; ") << ")";
  out << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Formulation symmetry detection for quadratically constrained quadratic programs", "qsym"};
  app.require_subcommand(1);

  std::string file;
  std::string method = "tensor";
  std::string rep_text = "blg2";
  std::string format = "dot";
  std::string output;
  std::string json_path;
  std::vector<std::string> only;
  bool csv = false, timings = false, originals = false;

  auto* relax = app.add_subcommand("relax", "McCormick linearization; prints the relaxed problem");
  relax->add_option("file", file, "problem file")->required();
  relax->add_option("--only", only, "linearize only these monomials (x1*x2, x1^2)");

  auto* encode = app.add_subcommand("encode", "sparse matrix encoding");
  encode->add_option("file", file, "problem file")->required();
  encode->add_option("--method", method, "tensor or flat")->check(CLI::IsMember({"tensor", "flat"}));
  encode->add_flag("--csv", csv, "emit K,I,J,M rows");

  auto* graph = app.add_subcommand("graph", "export the coloured graph");
  graph->add_option("file", file, "problem file")->required();
  graph->add_option("--rep", rep_text, "blg1, blg2 or dag")->check(CLI::IsMember({"blg1", "blg2", "dag"}));
  graph->add_option("--out", format, "dot or dre")->check(CLI::IsMember({"dot", "dre"}));
  graph->add_option("-o,--output", output, "write to this file instead of stdout");

  auto* detect_cmd = app.add_subcommand("detect", "formulation group");
  detect_cmd->add_option("file", file, "problem file")->required();
  detect_cmd->add_option("--rep", rep_text, "blg1, blg2 or dag")->check(CLI::IsMember({"blg1", "blg2", "dag"}));
  auto* json_opt = detect_cmd->add_option("--json", json_path, "JSON report (to a file when a path is given)")
                       ->expected(0, 1);
  detect_cmd->add_flag("--timings", timings, "include timings in the JSON report");
  detect_cmd->add_flag("--originals", originals, "report only the input variables");

  auto* oracle = app.add_subcommand("oracle", "feasible-set enumeration and brute-force symmetry group");
  oracle->add_option("file", file, "problem file")->required();

  auto* compare = app.add_subcommand("compare", "graph sizes and groups of every representation");
  compare->add_option("file", file, "problem file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "qsym: " << e.what() << "\n";
    return 1;
  }

  try {
    const Problem problem = read_problem_file(file);

    if (*relax) {
      LinearizedProblem lin;
      if (only.empty()) {
        lin = mccormick_relax(problem);
      } else {
        std::vector<std::pair<int, int>> monomials;
        for (const auto& text : only) monomials.push_back(parse_monomial(problem, text));
        lin = relax_subset(problem, monomials);
      }
      out << print_problem(lin.base);
      return 0;
    }

    if (*encode) {
      const Problem normalized = normalize(problem);
      const SparseEncoding enc = method == "tensor" ? tensor_encode(normalized) : flat_encode(normalized);
      out << (csv ? encoding_csv(enc) : encoding_text(enc));
      return 0;
    }

    if (*graph) {
      const ColoredGraph g = representation_graph(problem, parse_representation(rep_text));
      const std::string text = format == "dot" ? write_dot(g) : write_dreadnaut(g);
      if (output.empty()) {
        out << text;
      } else {
        write_file(output, text);
      }
      return 0;
    }

    if (*detect_cmd) {
      const auto result = detect(problem, parse_representation(rep_text), DetectOptions{originals});
      if (json_opt->count() > 0) {
        const std::string json = write_group_json(result, timings);
        if (json_path.empty()) {
          out << json;
          return result.verification.all_verified() ? 0 : 3;
        }
        write_file(json_path, json);
      }
      return report_detection(result, out);
    }

    if (*oracle) {
      const auto feasible = enumerate_feasible(problem);
      const auto names = problem.variable_names();
      out << "feasible: " << feasible.points.size() << " points\n";
      for (const auto& x : feasible.points) out << "  " << point_text(x) << "\n";
      const auto sym = symmetry_group_bruteforce(problem, feasible);
      std::vector<std::string> elements;
      for (const auto& g : sym.elements) elements.push_back(g.to_cycle_string(names));
      out << "symmetry group order: " << sym.elements.size() << "\n";
      out << "symmetry group: " << joined(elements, ", ") << "\n";
      const auto formulation = detect(problem, Representation::BlgTensor);
      out << "formulation group: " << group_text(formulation.group, names) << "\n";
      out << "contained: " << (check_containment(formulation.group, sym.group) ? "yes" : "no") << "\n";
      return 0;
    }

    if (*compare) {
      const auto report = compare_representations(problem);
      for (const auto& row : report.rows) {
        out << representation_name(row.representation) << ": " << row.vertices << " vertices, " << row.edges
            << " edges, generators " << group_text(row.group, report.names) << "\n";
      }
      out << "groups agree: " << (report.groups_agree ? "yes" : "no") << "\n";
      const Problem normalized = normalize(problem);
      const auto bounds = entry_count_bounds(normalized.num_variables(), normalized.num_constraints());
      out << "entry bounds (n=" << normalized.num_variables() << ", m=" << normalized.num_constraints()
          << "): flat " << bounds.flat_worst << ", tensor " << bounds.tensor_worst
          << ", flat smaller: " << (bounds.crossover ? "yes" : "no") << "\n";
      return report.groups_agree ? 0 : 3;
    }
  } catch (const ParseError& e) {
    err << "qsym: " << file << ": " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    err << "qsym: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "qsym: internal error: " << e.what() << "\n";
    return 3;
  }
  return 1;
}

}  // namespace qsym
