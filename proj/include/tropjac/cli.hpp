#pragma once

// Command dispatch behind the trop-jac binary. Kept in the library so the test
// suites can drive every command without spawning processes.
//
// Exit codes: 0 success, 1 a verification failed, 2 bad input.

#include <algorithm>
#include <cstdio>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <random>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "tropjac/brute_force.hpp"
#include "tropjac/error.hpp"
#include "tropjac/graph.hpp"
#include "tropjac/homology.hpp"
#include "tropjac/jacobian.hpp"
#include "tropjac/json_io.hpp"
#include "tropjac/random_graph.hpp"
#include "tropjac/tautological.hpp"
#include "tropjac/theta.hpp"

namespace tropjac::cli {

enum class Format { json, text };

struct RunConfig {
  std::string command;     // info, period, circuits, aj, wd-cells, class, verify, degree, theta, corpus, generate
  std::string subcommand;  // e.g. "poincare" for verify
  std::optional<std::string> graph_path;
  std::optional<std::size_t> genus;
  std::optional<std::size_t> d;
  std::optional<std::size_t> k;
  std::optional<std::string> x;
  std::optional<std::string> l;
  std::optional<std::string> edge;
  std::optional<std::string> t;
  std::optional<std::string> vertex;
  std::vector<std::string> points;  // "edge:t" entries summed as a divisor
  std::uint64_t seed = 0;
  Format format = Format::json;
  std::optional<std::string> corpus_dir;
  std::size_t count = 50;
  std::size_t max_genus = 6;
  std::optional<std::string> out_dir;
};

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

namespace detail {

struct Loaded {
  MetricGraph graph;
  CircuitBasis basis;
  PeriodMatrix G;
};

inline Loaded load(const RunConfig& cfg) {
  if (!cfg.graph_path) throw Error(ErrorCode::InvalidInput, "--graph is required for '" + cfg.command + "'");
  MetricGraph graph = validate_and_prune(read_graph_file(*cfg.graph_path));
  CircuitBasis basis = circuit_basis(graph, cfg.seed);
  PeriodMatrix G = period_matrix(graph, basis);
  return {std::move(graph), std::move(basis), std::move(G)};
}

inline std::size_t genus_of(const RunConfig& cfg) {
  if (cfg.genus) return *cfg.genus;
  if (cfg.graph_path) return genus(validate_and_prune(read_graph_file(*cfg.graph_path)));
  throw Error(ErrorCode::InvalidInput, "--genus or --graph is required for '" + cfg.command + "'");
}

inline std::size_t require(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw Error(ErrorCode::InvalidInput, std::string(flag) + " is required");
  return *v;
}

inline Json envelope(const RunConfig& cfg) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = cfg.subcommand.empty() ? cfg.command : cfg.command + " " + cfg.subcommand;
  return doc;
}

inline std::size_t edge_index(const MetricGraph& g, const std::string& id) {
  const auto e = g.find_edge(id);
  if (!e) throw Error(ErrorCode::InvalidInput, "unknown edge '" + id + "' (after leaf pruning)");
  return *e;
}

inline CurvePoint parse_point(const MetricGraph& g, const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos) throw Error(ErrorCode::InvalidInput, "point must be 'edge:t', got '" + text + "'");
  return {edge_index(g, text.substr(0, colon)), parse_rational(text.substr(colon + 1))};
}

inline std::string text_of(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}

inline std::string text_of(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

inline std::string text_of(const BigradedClass& c) {
  if (c.is_zero()) return "0";
  auto join = [](IndexMask m) {
    std::string s;
    for (auto k : indices_of(m)) s += (s.empty() ? "" : ",") + std::to_string(k);
    return "{" + s + "}";
  };
  std::string s;
  for (const auto& [m, coeff] : c.terms()) {
    if (!s.empty()) s += " + ";
    s += coeff.str() + "*c" + join(m.circuits) + "(x)d" + join(m.deltas);
  }
  return s;
}

inline void print_matrix(std::ostream& out, const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) out << text_of(m.row(i)) << "\n";
}

struct FileResult {
  std::string file;
  Json json;
  int status = kOk;
};

inline RatVector random_point(std::mt19937_64& rng, std::size_t g) {
  RatVector x(g);
  for (auto& c : x) {
    const long long den = 1 + static_cast<long long>(rng() % 6);
    const long long num = static_cast<long long>(rng() % (4 * den + 1)) - 2 * den;
    c = Rational(num, den);
  }
  return x;
}

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

// Every identity the library claims, checked on one graph file.
inline FileResult check_graph_file(const std::filesystem::path& path) {
  FileResult res;
  res.file = path.filename().string();
  res.json["file"] = res.file;
  try {
    const MetricGraph graph = validate_and_prune(read_graph_file(path.string()));
    const CircuitBasis basis = circuit_basis(graph);
    const PeriodMatrix G = period_matrix(graph, basis);
    const std::size_t g = G.genus();
    res.json["genus"] = g;
    bool ok = true;

    bool loops = true;
    for (std::size_t k = 0; k < g; ++k) loops = loops && circuit_displacement(graph, basis, k) == G.gram().column(k);
    res.json["abel_jacobi_loops"] = loops;
    ok = ok && loops;

    const VerificationReport report = verify_poincare(g);
    res.json["poincare"] = report.all_passed();
    ok = ok && report.all_passed();

    const auto datum = principal_datum(G);
    std::mt19937_64 rng(fnv1a(res.file));
    Json spots = Json::array();
    for (int trial = 0; trial < 3; ++trial) {
      const RatVector x = random_point(rng, g);
      const auto radius = brute_force::containing_radius(datum, G, x);
      // skip boxes with more than ~2M points
      double points = 1;
      for (std::size_t i = 0; i < g; ++i) points *= static_cast<double>(2 * radius + 1);
      Json spot{{"x", to_json(x)}};
      if (points > 2e6) {
        spot["status"] = "skipped";
      } else {
        const auto fast = theta_value(datum, G, x);
        const auto slow = brute_force::theta_in_box(datum, G, x, radius);
        const bool same = fast.value == slow.value && fast.minimizers == slow.minimizers;
        spot["status"] = same ? "pass" : "fail";
        spot["value"] = to_string(fast.value);
        ok = ok && same;
      }
      spots.push_back(std::move(spot));
    }
    res.json["theta_spot_checks"] = std::move(spots);
    res.status = ok ? kOk : kVerificationFailed;
    res.json["status"] = ok ? "pass" : "fail";
  } catch (const Error& e) {
    res.status = kInputError;
    res.json["status"] = "error";
    res.json["error"] = e.what();
  }
  return res;
}

}  // namespace detail

/// Runs every check on each *.json graph in `dir`, in parallel, reported in filename order.
inline int corpus_run(const std::string& dir, Format format, std::ostream& out, std::ostream& err) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    err << "error: '" << dir << "' is not a directory\n";
    return kInputError;
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    err << "error: no graph files (*.json) in '" << dir << "'\n";
    return kInputError;
  }

  const std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  std::vector<detail::FileResult> results(files.size());
  for (std::size_t start = 0; start < files.size(); start += workers) {
    std::vector<std::future<detail::FileResult>> batch;
    for (std::size_t i = start; i < std::min(files.size(), start + workers); ++i)
      batch.push_back(std::async(std::launch::async, detail::check_graph_file, files[i]));
    for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
  }

  std::size_t passed = 0;
  bool any_failed = false;
  bool any_error = false;
  Json list = Json::array();
  for (const auto& r : results) {
    passed += r.status == kOk;
    any_failed = any_failed || r.status == kVerificationFailed;
    any_error = any_error || r.status == kInputError;
    list.push_back(r.json);
  }
  if (format == Format::json) {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "corpus";
    doc["files"] = std::move(list);
    doc["passed"] = passed;
    doc["total"] = results.size();
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      out << r.file << ": " << r.json["status"].get<std::string>();
      if (r.json.contains("genus")) out << " (genus " << r.json["genus"].get<std::size_t>() << ")";
      if (r.json.contains("error")) out << " - " << r.json["error"].get<std::string>();
      out << "\n";
    }
    out << passed << "/" << results.size() << " passed\n";
  }
  if (any_failed) return kVerificationFailed;
  return any_error ? kInputError : kOk;
}

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const bool json = cfg.format == Format::json;
  Json doc = detail::envelope(cfg);
  int status = kOk;
  try {
    const std::string& cmd = cfg.command;
    const std::string& sub = cfg.subcommand;
    if (cmd == "corpus") {
      if (!cfg.corpus_dir) throw Error(ErrorCode::InvalidInput, "corpus needs a directory");
      return corpus_run(*cfg.corpus_dir, cfg.format, out, err);
    }
    if (cmd == "generate") {
      if (!cfg.out_dir) throw Error(ErrorCode::InvalidInput, "--out is required");
      std::filesystem::create_directories(*cfg.out_dir);
      RandomGraphOptions opt;
      opt.max_genus = cfg.max_genus;
      Json files = Json::array();
      for (std::size_t i = 0; i < cfg.count; ++i) {
        const MetricGraph g = random_metric_graph(cfg.seed * 1000003ull + i, opt);
        char name[32];
        std::snprintf(name, sizeof name, "graph_%03zu.json", i);
        std::ofstream(std::filesystem::path(*cfg.out_dir) / name) << to_json(g).dump(2) << "\n";
        files.push_back(name);
      }
      doc["files"] = std::move(files);
      if (json) out << doc.dump(2) << "\n";
      else out << "wrote " << cfg.count << " graphs to " << *cfg.out_dir << "\n";
      return kOk;
    }

    if (cmd == "info") {
      const auto raw = read_graph_file(*cfg.graph_path);
      const auto ld = detail::load(cfg);
      doc["input_vertices"] = raw.vertex_count();
      doc["input_edges"] = raw.edge_count();
      doc["genus"] = genus(ld.graph);
      doc["basepoint"] = ld.graph.vertices[ld.graph.basepoint];
      doc["graph"] = to_json(ld.graph);
      if (!json)
        out << "vertices " << ld.graph.vertex_count() << " (input " << raw.vertex_count() << ")\nedges "
            << ld.graph.edge_count() << " (input " << raw.edge_count() << ")\ngenus " << genus(ld.graph)
            << "\nbasepoint " << ld.graph.vertices[ld.graph.basepoint] << "\n";
    } else if (cmd == "period") {
      const auto ld = detail::load(cfg);
      doc["period_matrix"] = to_json(ld.G.gram());
      if (!json) detail::print_matrix(out, ld.G.gram());
    } else if (cmd == "circuits") {
      const auto ld = detail::load(cfg);
      doc["basis"] = to_json(ld.graph, ld.basis);
      if (!json)
        for (std::size_t k = 0; k < ld.basis.genus(); ++k) {
          out << "c" << (k + 1) << ":";
          for (std::size_t e = 0; e < ld.graph.edge_count(); ++e)
            if (int w = ld.basis.circuits[k][e]) out << " " << (w > 0 ? "+" : "-") << ld.graph.edges[e].id;
          out << "\n";
        }
    } else if (cmd == "aj") {
      const auto ld = detail::load(cfg);
      TorusPoint p;
      if (cfg.vertex) {
        const auto v = ld.graph.find_vertex(*cfg.vertex);
        if (!v) throw Error(ErrorCode::InvalidInput, "unknown vertex '" + *cfg.vertex + "'");
        p = abel_jacobi_vertex(ld.graph, ld.basis, ld.G, *v);
      } else if (!cfg.points.empty()) {
        std::vector<CurvePoint> pts;
        for (const auto& s : cfg.points) pts.push_back(detail::parse_point(ld.graph, s));
        p = abel_jacobi_divisor(ld.graph, ld.basis, ld.G, pts);
      } else {
        if (!cfg.edge) throw Error(ErrorCode::InvalidInput, "aj needs --vertex, --point or --edge/--t");
        const CurvePoint cp{detail::edge_index(ld.graph, *cfg.edge), cfg.t ? parse_rational(*cfg.t) : Rational(0)};
        p = abel_jacobi(ld.graph, ld.basis, ld.G, cp);
      }
      doc["point"] = to_json(p);
      if (!json) out << detail::text_of(p.coords) << "\n";
    } else if (cmd == "wd-cells") {
      const auto ld = detail::load(cfg);
      const std::size_t d = detail::require(cfg.d, "--d");
      Json cells = Json::array();
      for (const auto& cell : wd_cells(ld.graph, ld.basis, ld.G, d)) {
        cells.push_back(to_json(ld.graph, cell));
        if (!json) {
          out << "cell {";
          for (std::size_t i = 0; i < cell.edges.size(); ++i)
            out << (i ? "," : "") << ld.graph.edges[cell.edges[i]].id;
          out << "} base " << detail::text_of(cell.base.coords) << " generators";
          for (const auto& gen : cell.generators) out << " " << detail::text_of(gen);
          out << " weight " << cell.weight << "\n";
        }
      }
      doc["d"] = d;
      doc["cells"] = std::move(cells);
    } else if (cmd == "class") {
      const std::size_t g = detail::genus_of(cfg);
      BigradedClass c(Side::homology, g);
      if (sub == "wd") c = class_wd(g, detail::require(cfg.d, "--d"));
      else if (sub == "theta-pow") c = class_theta_power(g, detail::require(cfg.k, "--k"));
      else throw Error(ErrorCode::InvalidInput, "class expects 'wd' or 'theta-pow'");
      doc["genus"] = g;
      doc["class"] = to_json(c);
      if (!json) out << detail::text_of(c) << "\n";
    } else if (cmd == "verify") {
      const std::size_t g = detail::genus_of(cfg);
      if (sub == "poincare") {
        const auto report = verify_poincare(g);
        doc["report"] = to_json(report);
        status = report.all_passed() ? kOk : kVerificationFailed;
        if (!json) {
          for (const auto& r : report.records)
            out << "d=" << r.d << " (g-d)!=" << r.factor << " equal=" << (r.equal ? "true" : "false")
                << " pontryagin=" << (r.pontryagin_equal ? "true" : "false") << "\n";
          for (const auto& c : report.degrees)
            out << c.name << " d=" << c.d << " expected " << c.expected << " computed " << c.computed << "\n";
        }
      } else if (sub == "riemann") {
        const bool ok = verify_riemann_homological(g);
        doc["genus"] = g;
        doc["equal"] = ok;
        status = ok ? kOk : kVerificationFailed;
        if (!json) out << "cyc[W_{g-1}] == cyc[Theta]: " << (ok ? "true" : "false") << "\n";
      } else {
        throw Error(ErrorCode::InvalidInput, "verify expects 'poincare' or 'riemann'");
      }
    } else if (cmd == "degree") {
      const std::size_t g = detail::genus_of(cfg);
      BigInt value;
      BigInt expected;
      if (sub == "theta-g") {
        value = degree_theta_g(g);
        expected = factorial(g);
      } else if (sub == "wd-pair") {
        const std::size_t d = detail::require(cfg.d, "--d");
        value = degree_wd_pair(g, d);
        expected = binomial(g, d);
        doc["d"] = d;
      } else {
        throw Error(ErrorCode::InvalidInput, "degree expects 'theta-g' or 'wd-pair'");
      }
      doc["genus"] = g;
      doc["degree"] = value.str();
      doc["expected"] = expected.str();
      status = value == expected ? kOk : kVerificationFailed;
      if (!json) out << value << "\n";
    } else if (cmd == "theta") {
      const auto ld = detail::load(cfg);
      const std::size_t g = ld.G.genus();
      if (sub == "relevant-vectors") {
        Json vecs = Json::array();
        for (const auto& n : voronoi_relevant_vectors(ld.G)) {
          vecs.push_back(to_json(n));
          if (!json) out << detail::text_of(n) << "\n";
        }
        doc["relevant_vectors"] = std::move(vecs);
      } else if (sub == "eval" || sub == "divisor-test") {
        if (!cfg.x) throw Error(ErrorCode::InvalidInput, "--x is required");
        const RatVector x = parse_rational_list(*cfg.x);
        auto datum = principal_datum(ld.G);
        if (cfg.l) datum.linear = parse_rational_list(*cfg.l);
        if (x.size() != g || datum.linear.size() != g)
          throw Error(ErrorCode::InvalidInput, "--x and --l need " + std::to_string(g) + " coordinates");
        const auto value = theta_value(datum, ld.G, x);
        doc["x"] = to_json(x);
        if (sub == "eval") {
          doc["theta"] = to_json(value);
          if (!json) {
            out << "value " << to_string(value.value) << "\nminimizers";
            for (const auto& n : value.minimizers) out << " " << detail::text_of(n);
            out << "\n";
          }
        } else {
          const bool on = value.minimizers.size() >= 2;
          doc["on_theta_divisor"] = on;
          doc["minimizer_count"] = value.minimizers.size();
          if (!json) out << (on ? "on theta divisor" : "not on theta divisor") << "\n";
        }
      } else {
        throw Error(ErrorCode::InvalidInput, "theta expects 'eval', 'divisor-test' or 'relevant-vectors'");
      }
    } else {
      throw Error(ErrorCode::InvalidInput, "unknown command '" + cmd + "'");
    }
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return kInputError;
  }
  if (json) out << doc.dump(2) << "\n";
  return status;
}

}  // namespace tropjac::cli
