#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "segcode/errors.hpp"
#include "segcode/io.hpp"
#include "segcode/strong_iso.hpp"

namespace segcode::cli {

using nlohmann::json;

// ---------------------------------------------------------------------------
// JSON

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.hi, e.lo});
  return {{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  Graph g(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  return g;
}

json coding_sequence_to_json(const CodingSequence& s) {
  json codes = json::array();
  json sigma = json::array();
  for (const auto& c : s.codes()) {
    codes.push_back(c.bits().to_string());
    sigma.push_back({c.hi(), c.lo()});
  }
  return {{"n", s.n()}, {"codes", codes}, {"sigma", sigma}};
}

CodingSequence coding_sequence_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<EdgeCode> codes;
  for (const auto& c : j.at("codes")) codes.push_back(EdgeCode::from_bits(GF2Vector::from_string(c.get<std::string>())));
  return CodingSequence(n, std::move(codes));
}

json matrix_to_json(const GF2Matrix& m) {
  json rows = json::array();
  for (const auto& r : m.row_vectors()) rows.push_back(r.to_string());
  return rows;
}

namespace {

json envelope(const std::string& command) { return {{"schema", kSchemaVersion}, {"command", command}}; }

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string code_list(std::span<const EdgeCode> codes) {
  std::string s;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) s += ' ';
    s += codes[i].bits().to_string();
  }
  return s;
}

std::vector<int> identity_labeling(int n) {
  std::vector<int> id(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) id[static_cast<std::size_t>(v)] = v;
  return id;
}

const std::string& input(const RunConfig& config, std::size_t i) {
  if (i >= config.inputs.size()) throw ParseError("missing input file", 0);
  return config.inputs[i];
}

}  // namespace

// ---------------------------------------------------------------------------
// Subcommands

int cmd_encode(const RunConfig& config, std::ostream& out) {
  const Graph g = io::read_graph(input(config, 0));
  const std::vector<int> labeling = config.labeling.value_or(identity_labeling(g.n()));
  const CodingSequence s = encode(g, labeling);
  if (config.format == OutputFormat::json) {
    json j = envelope("encode");
    j.update(coding_sequence_to_json(s));
    j["labeling"] = labeling;
    emit(out, j);
  } else {
    io::write_coding_sequence(out, s, true);
  }
  return kOk;
}

int cmd_canon(const RunConfig& config, std::ostream& out) {
  const Graph g = io::read_graph(input(config, 0));
  const CanonicalForm form = canonical_code(g, config.canon_cap);
  if (config.format == OutputFormat::json) {
    json j = envelope("canon");
    j.update(coding_sequence_to_json(form.code));
    j["labeling"] = form.labeling;
    emit(out, j);
  } else {
    io::write_coding_sequence(out, form.code, true);
    out << "# labeling " << join(form.labeling) << '\n';
  }
  return kOk;
}

int cmd_props(const RunConfig& config, std::ostream& out) {
  const Graph g = io::read_graph(input(config, 0));
  const CodingSequence s = encode(g);

  const bool connected = is_connected(s);
  std::optional<bool> bipartite;
  if (s.n() >= 2) bipartite = is_bipartite(s);
  std::optional<ReducedSetWitness> hamiltonian;
  if (s.n() >= 3) hamiltonian = find_hamiltonian_cycle(s);
  std::optional<std::size_t> tree_count;
  if (connected) {
    try {
      tree_count = enumerate_spanning_trees(s, [](std::span<const EdgeCode>) {});
    } catch (const CapExceededError&) {
      tree_count.reset();
    }
  }

  if (config.format == OutputFormat::json) {
    json j = envelope("props");
    j["n"] = s.n();
    j["acyclic"] = is_acyclic(s);
    j["tree"] = is_tree(s);
    j["connected"] = connected;
    j["bipartite"] = bipartite ? json(*bipartite) : json(nullptr);
    j["eulerian"] = is_eulerian(s);
    j["hamiltonian"] = hamiltonian.has_value();
    if (hamiltonian) {
      json codes = json::array();
      for (const auto& c : hamiltonian->subset) codes.push_back(c.bits().to_string());
      j["hamiltonian_witness"] = codes;
    } else {
      j["hamiltonian_witness"] = nullptr;
    }
    j["spanning_tree_count"] = tree_count ? json(*tree_count) : json(nullptr);
    emit(out, j);
    return kOk;
  }

  auto yes_no = [](bool b) { return b ? "true" : "false"; };
  out << "acyclic: " << yes_no(is_acyclic(s)) << '\n'
      << "tree: " << yes_no(is_tree(s)) << '\n'
      << "connected: " << yes_no(connected) << '\n'
      << "bipartite: " << (bipartite ? yes_no(*bipartite) : "n/a") << '\n'
      << "eulerian: " << yes_no(is_eulerian(s)) << '\n'
      << "hamiltonian: " << yes_no(hamiltonian.has_value());
  if (hamiltonian) out << " [" << code_list(hamiltonian->subset) << ']';
  out << '\n';
  if (tree_count) out << "spanning_tree_count: " << *tree_count << '\n';
  return kOk;
}

int cmd_matroid(const RunConfig& config, std::ostream& out) {
  const GF2Matrix a = io::read_matrix(input(config, 0));
  const bool as_json = config.format == OutputFormat::json;
  json j = envelope("matroid");
  j["action"] = config.action;

  if (config.action == "validate") {
    std::string error;
    try {
      validate_segment(a);
    } catch (const ZeroColumnError& e) {
      error = e.what();
    } catch (const DuplicateColumnError& e) {
      error = e.what();
    } catch (const NotSegmentError& e) {
      error = e.what();
    }
    if (as_json) {
      j["valid"] = error.empty();
      j["error"] = error.empty() ? json(nullptr) : json(error);
      emit(out, j);
    } else {
      out << (error.empty() ? "valid simple segment binary matroid" : "invalid: " + error) << '\n';
    }
    return kOk;
  }

  const SimpleBinaryMatroid m(a);

  if (config.action == "circuits") {
    const auto cs = circuits(m, config.circuit_cap);
    if (as_json) {
      j["circuits"] = cs;
      emit(out, j);
    } else {
      out << cs.size() << " circuit(s)\n";
      for (const auto& c : cs) {
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i];
        out << '\n';
      }
    }
    return kOk;
  }

  if (config.action == "graphic") {
    const bool bounded = exceeds_segment_bound(m.rows(), m.size());
    const auto realization = is_simple_graphic(m, config.gl_cap);
    if (as_json) {
      j["graphic"] = realization.has_value();
      if (realization) {
        j["graph"] = graph_to_json(realization->graph);
        j["p"] = matrix_to_json(realization->p);
      } else {
        j["reason"] = bounded ? "column bound" : "no nonsingular row transformation";
      }
      emit(out, j);
    } else if (realization) {
      out << "graphic\n";
      io::write_graph(out, realization->graph);
      out << "# P\n";
      for (const auto& r : realization->p.row_vectors()) out << "# " << r.to_string() << '\n';
    } else {
      out << (bounded ? "not graphic (column bound)" : "not graphic") << '\n';
    }
    return kOk;
  }

  if (config.action == "iso") {
    const SimpleBinaryMatroid b(io::read_matrix(input(config, 1)));
    const auto cert = matroid_isomorphic(m, b, config.gl_cap);
    if (as_json) {
      j["isomorphic"] = cert.has_value();
      if (cert) {
        j["p"] = matrix_to_json(cert->p);
        j["q"] = cert->q;
      }
      emit(out, j);
    } else if (cert) {
      out << "isomorphic\nP:\n" << cert->p.to_string() << "Q:";
      for (std::size_t k : cert->q) out << ' ' << k;
      out << '\n';
    } else {
      out << "no isomorphism\n";
    }
    return cert ? kOk : kNegative;
  }

  throw ParseError("unknown matroid action '" + config.action + "'", 0);
}

int cmd_iso(const RunConfig& config, std::ostream& out) {
  const Graph a = io::read_graph(input(config, 0));
  const Graph b = io::read_graph(input(config, 1));
  if (a.n() != b.n()) {
    throw DimensionError("graphs have " + std::to_string(a.n()) + " and " + std::to_string(b.n()) +
                         " vertices");
  }
  const auto witness = graphs_isomorphic(a, b);
  if (config.format == OutputFormat::json) {
    json j = envelope("iso");
    j["isomorphic"] = witness.has_value();
    if (witness) {
      j["permutation"] = std::vector<int>(witness->g.images().begin(), witness->g.images().end());
      j["operator"] = matrix_to_json(witness->t.matrix());
    }
    emit(out, j);
  } else if (witness) {
    out << "isomorphic\npermutation: "
        << join(std::vector<int>(witness->g.images().begin(), witness->g.images().end())) << '\n'
        << "operator:\n"
        << witness->t.matrix().to_string();
  } else {
    out << "not isomorphic\n";
  }
  return witness ? kOk : kNegative;
}

// ---------------------------------------------------------------------------

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coding sequences of graphs: encode, canonicalize, test properties, matroids, isomorphism",
               "segcode"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";
  std::string labeling;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--canon-cap", config.canon_cap, "Largest n for canonical codes")
      ->check(CLI::PositiveNumber);
  app.add_option("--gl-cap", config.gl_cap, "Largest dimension for GL(d,2) searches")
      ->check(CLI::Range(1, 24));
  app.add_option("--circuit-cap", config.circuit_cap, "Largest column count for circuit enumeration")
      ->check(CLI::Range(1, 62));
  app.add_option("--seed", config.seed, "Seed for randomized routines");

  auto* encode_cmd = app.add_subcommand("encode", "Coding sequence of a graph");
  encode_cmd->add_option("graph", config.inputs, "Graph file")->required()->expected(1);
  encode_cmd->add_option("--labeling", labeling, "Comma-separated new label of each vertex");

  auto* canon_cmd = app.add_subcommand("canon", "Canonical code and a witnessing labeling");
  canon_cmd->add_option("graph", config.inputs, "Graph file")->required()->expected(1);

  auto* props_cmd = app.add_subcommand("props", "Graph properties decided from the coding sequence");
  props_cmd->add_option("graph", config.inputs, "Graph file")->required()->expected(1);

  auto* matroid_cmd = app.add_subcommand("matroid", "Binary matroid operations on a matrix file");
  matroid_cmd->add_option("action", config.action, "validate | circuits | graphic | iso")
      ->required()
      ->check(CLI::IsMember({"validate", "circuits", "graphic", "iso"}));
  matroid_cmd->add_option("matrices", config.inputs, "Matrix file(s)")->required()->expected(1, 2);

  auto* iso_cmd = app.add_subcommand("iso", "Graph isomorphism with strong-isomorphism certificate");
  iso_cmd->add_option("graphs", config.inputs, "Two graph files")->required()->expected(2);

  for (auto* opt : {encode_cmd, canon_cmd, props_cmd, matroid_cmd, iso_cmd}) opt->fallthrough();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  config.format = format == "json" ? OutputFormat::json : OutputFormat::text;

  try {
    if (!labeling.empty()) {
      std::vector<int> labels;
      std::stringstream ss(labeling);
      std::string item;
      while (std::getline(ss, item, ',')) {
        try {
          labels.push_back(std::stoi(item));
        } catch (const std::exception&) {
          throw LabelError("invalid labeling entry '" + item + "'");
        }
      }
      config.labeling = std::move(labels);
    }
    if (config.subcommand == "matroid" && config.action == "iso" && config.inputs.size() != 2) {
      throw ParseError("matroid iso needs two matrix files", 0);
    }

    if (config.subcommand == "encode") return cmd_encode(config, out);
    if (config.subcommand == "canon") return cmd_canon(config, out);
    if (config.subcommand == "props") return cmd_props(config, out);
    if (config.subcommand == "matroid") return cmd_matroid(config, out);
    return cmd_iso(config, out);
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << '\n';
    return kCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace segcode::cli
