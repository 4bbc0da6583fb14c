#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cubrecon/cubical_complex.hpp"
#include "cubrecon/embeddability.hpp"
#include "cubrecon/errors.hpp"
#include "cubrecon/generators.hpp"
#include "cubrecon/homology.hpp"
#include "cubrecon/io.hpp"
#include "cubrecon/manifold.hpp"
#include "cubrecon/reconstruction.hpp"

namespace cubrecon::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // not a manifold, no embedding, nothing reconstructed
inline constexpr int kInputError = 2;
inline constexpr int kContractError = 3;

inline std::string format_group(const DegreeGroup& g) {
  std::string s = std::to_string(g.betti);
  for (auto t : g.torsion) s += "+Z/" + std::to_string(t);
  return s;
}

inline void print_profile(std::ostream& out, const HomologyProfile& p) {
  out << "ring " << to_string(p.ring) << '\n';
  out << "degree betti torsion\n";
  for (std::size_t j = 0; j < p.degrees.size(); ++j) {
    out << j << ' ' << p.degrees[j].betti << ' ';
    if (p.degrees[j].torsion.empty()) {
      out << '-';
    } else {
      for (std::size_t i = 0; i < p.degrees[j].torsion.size(); ++i) out << (i ? "," : "") << p.degrees[j].torsion[i];
    }
    out << '\n';
  }
  out << "betti";
  for (auto b : p.betti()) out << ' ' << b;
  out << '\n';
}

inline void print_manifold_report(std::ostream& out, const ManifoldReport& r) {
  out << "manifold " << (r.is_manifold ? "yes" : "no") << '\n';
  if (r.dimension) out << "dimension " << *r.dimension << '\n';
  if (r.orientable) out << "orientable " << (*r.orientable ? "yes" : "no") << '\n';
  if (r.failing_face) out << "failing-face " << r.failing_face->str() << '\n';
  if (!r.reason.empty()) out << "reason " << r.reason << '\n';
  out << "components " << r.per_component.size() << '\n';
  for (std::size_t i = 0; i < r.per_component.size(); ++i) {
    const auto& c = r.per_component[i];
    out << "component " << i << " manifold " << (c.is_manifold ? "yes" : "no");
    if (c.dimension) out << " dimension " << *c.dimension;
    if (c.orientable) out << " orientable " << (*c.orientable ? "yes" : "no");
    if (c.failing_face) out << " failing-face " << c.failing_face->str();
    out << '\n';
  }
}

inline void print_verdict(std::ostream& out, const CandidateVerdict& v) {
  out << "candidate " << v.face.str() << ' ' << (v.accepted ? "accepted" : "rejected") << ' '
      << to_string(v.criterion);
  if (!v.boundary_present) out << " boundary-missing";
  for (const auto& cd : v.profiles) {
    out << " H" << cd.degree << ' ' << format_group(cd.without_sphere) << (cd.without_sphere == cd.full ? "==" : "!=")
        << format_group(cd.full);
  }
  out << '\n';
}

inline std::optional<Ring> parse_ring(const std::string& s) {
  if (s == "gf2") return Ring::GF2;
  if (s == "int") return Ring::Integer;
  return std::nullopt;
}

inline std::optional<CriterionMode> parse_mode(const std::string& s) {
  if (s == "standard") return CriterionMode::Standard;
  if (s == "tight-gf2") return CriterionMode::TightGf2;
  if (s == "tight-int") return CriterionMode::TightInteger;
  return std::nullopt;
}

// "3" stays a number, "0,1,2" becomes a simplex, anything else is taken as
// a nested generator expression.
inline std::string generator_argument(const std::string& arg) {
  const bool simplex = !arg.empty() && arg.find_first_not_of("0123456789,") == std::string::npos &&
                       arg.find(',') != std::string::npos;
  return simplex ? "{" + arg + "}" : arg;
}

inline std::string generator_expression(const std::string& family, const std::vector<std::string>& params) {
  if (params.empty()) return family;
  std::string expr = family + "(";
  for (std::size_t i = 0; i < params.size(); ++i) expr += (i ? "," : "") + generator_argument(params[i]);
  return expr + ")";
}

// Writes the complex to `path`, or to `out` when no path is given.
inline void emit_complex(const CubicalComplex& c, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    write_complex(out, c);
  } else {
    write_complex_file(path, c);
  }
}

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cubical complexes in hypercubes: homology, manifold checks, skeleton reconstruction, embedding"};
  app.require_subcommand(1);

  std::string file, output, ring_name = "gf2", mode_name = "standard", family;
  std::size_t k = 0, d = 0, d_max = 0, n_max = 0, jobs = 1;
  bool automatic = false, allow_tight = false;
  std::vector<std::string> params;

  auto* homology_cmd = app.add_subcommand("homology", "Per-degree homology of a complex file");
  homology_cmd->add_option("file", file, "Complex file")->required();
  homology_cmd->add_option("--ring", ring_name, "gf2 or int")->check(CLI::IsMember({"gf2", "int"}));

  auto* manifold_cmd = app.add_subcommand("manifold-check", "Homology manifold test (exit 0 iff manifold)");
  manifold_cmd->add_option("file", file, "Complex file")->required();

  auto* skeleton_cmd = app.add_subcommand("skeleton", "Write the k-skeleton of a complex");
  skeleton_cmd->add_option("file", file, "Complex file")->required();
  skeleton_cmd->add_option("-k", k, "Skeleton degree")->required();
  skeleton_cmd->add_option("-o,--output", output, "Output file (default: stdout)");

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "Rebuild a manifold from its k-skeleton");
  reconstruct_cmd->add_option("file", file, "Skeleton complex file")->required();
  reconstruct_cmd->add_option("-k", k, "Degree of the given skeleton")->required();
  auto* d_opt = reconstruct_cmd->add_option("-d", d, "Manifold dimension");
  auto* auto_opt = reconstruct_cmd->add_flag("--auto", automatic, "Search over the dimension");
  reconstruct_cmd->add_option("--dmax", d_max, "Largest dimension tried with --auto");
  reconstruct_cmd->add_option("--mode", mode_name, "standard, tight-gf2 or tight-int")
      ->check(CLI::IsMember({"standard", "tight-gf2", "tight-int"}));
  reconstruct_cmd->add_flag("--allow-tight", allow_tight, "With --auto, also try d = 2k under the tight GF(2) hypothesis");
  reconstruct_cmd->add_option("--jobs", jobs, "Worker threads for candidate evaluation")->check(CLI::PositiveNumber);
  reconstruct_cmd->add_option("-o,--output", output,
                              "Output file (default: stdout, report on stderr); with --auto and several results, "
                              "\".d<d>\" is appended");
  d_opt->excludes(auto_opt);

  auto* embed_cmd = app.add_subcommand("embed", "Find an embedding of a graph into a hypercube graph");
  embed_cmd->add_option("file", file, "Graph file")->required();
  embed_cmd->add_option("--nmax", n_max, "Largest hypercube dimension searched")->required();

  auto* generate_cmd = app.add_subcommand("generate", "Write a named complex or graph");
  generate_cmd->add_option("family", family, "Family name or full expression")->required();
  generate_cmd->add_option("params", params, "Family parameters");
  generate_cmd->add_option("-o,--output", output, "Output file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (homology_cmd->parsed()) {
      const auto parsed = read_complex_file(file);
      print_profile(out, homology(parsed.complex, *parse_ring(ring_name)));
      return kOk;
    }

    if (manifold_cmd->parsed()) {
      const auto parsed = read_complex_file(file);
      const ManifoldReport r = is_homology_manifold(parsed.complex);
      print_manifold_report(out, r);
      return r.is_manifold ? kOk : kNegative;
    }

    if (skeleton_cmd->parsed()) {
      const auto parsed = read_complex_file(file);
      emit_complex(skeleton(parsed.complex, k), output, out);
      return kOk;
    }

    if (reconstruct_cmd->parsed()) {
      const auto parsed = read_complex_file(file);
      const CriterionMode mode = *parse_mode(mode_name);
      if (automatic) {
        if (mode != CriterionMode::Standard) throw ContractError("--auto uses the standard criterion; see --allow-tight");
        if (d_max == 0) throw InputError("--auto needs --dmax");
        const auto results = reconstruct_auto(parsed.complex, k, d_max, allow_tight, jobs);
        std::ostream& report = output.empty() ? err : out;
        report << "results " << results.size() << '\n';
        for (const auto& r : results) {
          report << "result d " << r.d << " faces " << r.complex.size()
                 << (r.needs_tight_hypothesis ? " assumes-tight-hypothesis" : "") << '\n';
          if (output.empty()) {
            write_complex(out, r.complex);
          } else {
            write_complex_file(results.size() == 1 ? output : output + ".d" + std::to_string(r.d), r.complex);
          }
        }
        return results.empty() ? kNegative : kOk;
      }
      if (d_opt->count() == 0) throw InputError("reconstruct needs -d <d> or --auto --dmax <D>");
      ReconstructionConfig cfg;
      cfg.k = k;
      cfg.d = d;
      cfg.mode = mode;
      cfg.jobs = jobs;
      const ReconstructionResult result = reconstruct(parsed.complex, cfg);
      std::ostream& report = output.empty() ? err : out;
      report << "input faces " << parsed.complex.size() << " dimension " << parsed.complex.dimension() << '\n';
      std::size_t accepted = 0;
      for (const auto& v : result.verdicts) {
        print_verdict(report, v);
        accepted += v.accepted ? 1 : 0;
      }
      report << "candidates " << result.verdicts.size() << " accepted " << accepted << '\n';
      report << "result faces " << result.complex.size() << " dimension " << result.complex.dimension() << '\n';
      emit_complex(result.complex, output, out);
      return kOk;
    }

    if (embed_cmd->parsed()) {
      const SimpleGraph g = read_graph_file(file);
      const EmbeddingSearch search = find_graph_embedding(g, n_max);
      if (!search.embedding) {
        out << "no embedding for n <= " << n_max << '\n';
        if (search.odd_cycle) {
          out << "odd cycle";
          for (auto v : *search.odd_cycle) out << ' ' << v;
          out << "\nnot bipartite: no embedding for any n\n";
        }
        return kNegative;
      }
      const HypercubeEmbedding& emb = *search.embedding;
      out << "embedding n " << emb.n << '\n';
      for (std::size_t v = 0; v < g.vertex_count(); ++v) out << "vertex " << v << ' ' << emb.word(v).str() << '\n';
      const EdgeLabelling lab = labelling_from_embedding(emb, g);
      for (std::size_t i = 0; i < g.edges().size(); ++i) {
        out << "edge " << g.edges()[i].first << ' ' << g.edges()[i].second << " label " << lab.labels[i] << '\n';
      }
      const bool ok = verify_labelling_per_component(g, lab);
      out << "labelling " << (ok ? "verified" : "INVALID") << '\n';
      if (!ok) throw ContradictionError("labelling derived from an embedding failed verification");
      return kOk;
    }

    if (generate_cmd->parsed()) {
      const Generated g = generate(parse_generator_spec(generator_expression(family, params)));
      if (const auto* c = std::get_if<CubicalComplex>(&g)) {
        emit_complex(*c, output, out);
      } else if (output.empty()) {
        write_graph(out, std::get<SimpleGraph>(g));
      } else {
        write_graph_file(output, std::get<SimpleGraph>(g));
      }
      return kOk;
    }
  } catch (const ContractError& e) {
    err << "contract violation: " << e.what() << '\n';
    return kContractError;
  } catch (const ContradictionError& e) {
    err << "contract violation: " << e.what() << '\n';
    return kContractError;
  } catch (const ArithmeticError& e) {
    err << "arithmetic limit: " << e.what() << '\n';
    return kContractError;
  } catch (const std::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace cubrecon::cli
