#include "klein/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "klein/abelian.hpp"
#include "klein/covers.hpp"
#include "klein/errors.hpp"
#include "klein/json_io.hpp"
#include "klein/kappa.hpp"
#include "klein/kernel.hpp"
#include "klein/solver.hpp"
#include "klein/topology.hpp"

namespace klein::cli {

using nlohmann::json;

int exit_code(Status status) {
  switch (status) {
    case Status::kOk:
      return 0;
    case Status::kDomainError:
      return 2;
    case Status::kResourceError:
      return 3;
    case Status::kConvergenceError:
      return 4;
    case Status::kVerificationFailure:
      return 5;
  }
  return 2;
}

const char* status_name(Status status) {
  switch (status) {
    case Status::kOk:
      return "ok";
    case Status::kDomainError:
      return "domain-error";
    case Status::kResourceError:
      return "resource-error";
    case Status::kConvergenceError:
      return "convergence-error";
    case Status::kVerificationFailure:
      return "verification-failure";
  }
  return "domain-error";
}

namespace {

enum class Format { kJson, kCsv };

std::uint64_t default_budget() {
  if (const char* env = std::getenv("KLEIN_BUDGET"); env != nullptr && *env != '\0') {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw DomainError(std::string("KLEIN_BUDGET is not a non-negative integer: ") + env);
    }
  }
  return covers::EnumerationOptions{}.budget;
}

// Everything a handler needs besides its own options.
struct Session {
  std::istream& in;
  Format format = Format::kJson;
  std::string output;

  json read(const std::string& path) {
    std::string text;
    if (path == "-") {
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    } else {
      std::ifstream file(path);
      if (!file) throw DomainError("cannot open input file " + path);
      std::ostringstream buf;
      buf << file.rdbuf();
      text = buf.str();
    }
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw DomainError(std::string("input is not valid JSON: ") + e.what());
    }
  }

  void require_json(const char* command) const {
    if (format == Format::kCsv) {
      throw DomainError(std::string("csv output is not available for ") + command);
    }
  }

  json emit(json payload) {
    output = payload.dump() + "\n";
    return payload;
  }
};

json parse_json_flag(const std::string& text, const char* flag) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string(flag) + " is not valid JSON: " + e.what());
  }
}

json kernel_payload(const fp::KernelPresentation& k) {
  json j = io::to_json(k);
  j["abelianization"] = io::to_json(fp::abelianization_invariants(k.presentation()));
  return j;
}

json orbits_json(const covers::PermutationAction& a) { return covers::orbit_decomposition(a); }

repvar::SolveOptions solve_options(double tol, int max_iterations) {
  repvar::SolveOptions opts;
  opts.tol = tol;
  opts.max_iterations = max_iterations;
  return opts;
}

}  // namespace

CommandResult run(const std::vector<std::string>& args, std::istream& in) {
  Session session{in, Format::kJson, {}};
  CLI::App app{"Klein surfaces: topological types, augmented fundamental groups, real covers and "
               "unitary representation varieties.",
               "klein"};
  app.require_subcommand(1);

  std::string format_name = "json";
  std::vector<std::pair<CLI::App*, std::function<json()>>> handlers;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& description,
                  std::function<json()> handler) {
    CLI::App* sub = parent->add_subcommand(name, description);
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    handlers.emplace_back(sub, std::move(handler));
    return sub;
  };

  // types ------------------------------------------------------------------
  CLI::App* types = app.add_subcommand("types", "Topological types (g, k, a)");
  types->require_subcommand(1);
  int genus = 0;
  leaf(types, "enumerate", "All valid types of a given genus", [&] {
        const auto list = topology::enumerate_topological_types(genus);
        json payload = json::array();
        for (const auto& t : list) payload.push_back(io::to_json(t));
        if (session.format == Format::kCsv) {
          session.output = "g,k,a\n";
          for (const auto& t : list) {
            session.output += std::to_string(t.g) + "," + std::to_string(t.k) + "," +
                              std::to_string(t.a) + "\n";
          }
          return payload;
        }
        return session.emit(payload);
      })->add_option("--genus", genus, "Genus g")->required();
  leaf(types, "count", "Number of valid types of a given genus", [&] {
        const int count = topology::count_topological_types(genus);
        if (session.format == Format::kCsv) {
          session.output = "g,count\n" + std::to_string(genus) + "," + std::to_string(count) + "\n";
          return json(count);
        }
        return session.emit(count);
      })->add_option("--genus", genus, "Genus g")->required();

  // surface ----------------------------------------------------------------
  CLI::App* surface = app.add_subcommand("surface", "Quotient surfaces and doubles");
  surface->require_subcommand(1);
  topology::TopologicalType type;
  bool non_orientable = false;
  int handles = 0;
  int boundary = 0;
  std::string surface_input;
  auto read_surface = [&]() {
    if (!surface_input.empty()) return io::parse_compact_surface(session.read(surface_input));
    return topology::CompactSurface{!non_orientable, handles, boundary};
  };
  auto add_surface_flags = [&](CLI::App* sub) {
    sub->add_flag("--non-orientable", non_orientable, "Surface is non-orientable");
    sub->add_option("--handles", handles, "Handles (orientable) or crosscaps (non-orientable)");
    sub->add_option("--boundary", boundary, "Number of boundary circles");
    sub->add_option("--input", surface_input, "CompactSurface JSON file, or - for stdin");
  };
  {
    std::string type_input;
    CLI::App* q = leaf(surface, "quotient", "Quotient surface of a topological type", [&] {
      session.require_json("surface quotient");
      return session.emit(io::to_json(topology::quotient_surface(type)));
    });
    q->add_option("--g", type.g, "Genus")->required();
    q->add_option("--k", type.k, "Number of real circles")->required();
    q->add_option("--a", type.a, "0 dividing, 1 non-dividing")->required();
  }
  add_surface_flags(leaf(surface, "double", "Topological type of the double", [&] {
    session.require_json("surface double");
    return session.emit(io::to_json(topology::double_surface(read_surface())));
  }));
  add_surface_flags(leaf(surface, "euler", "Euler characteristic", [&] {
    session.require_json("surface euler");
    return session.emit(topology::euler_characteristic(read_surface()));
  }));

  // group ------------------------------------------------------------------
  CLI::App* group = app.add_subcommand("group", "Finitely presented groups");
  group->require_subcommand(1);
  int punctures = 0;
  std::string group_input = "-";
  std::string word_text;
  leaf(group, "surface", "Genus-g surface group", [&] {
        session.require_json("group surface");
        return session.emit(io::to_json(fp::surface_group(genus)));
      })->add_option("--genus", genus, "Genus")->required();
  leaf(group, "punctured-sphere", "Fundamental group of the n-punctured sphere", [&] {
        session.require_json("group punctured-sphere");
        return session.emit(io::to_json(fp::punctured_sphere_group(punctures)));
      })->add_option("--punctures", punctures, "Number of punctures")->required();
  leaf(group, "real-line", "Augmented group of the real line minus n points", [&] {
        session.require_json("group real-line");
        return session.emit(io::to_json(fp::real_punctured_line_group(punctures)));
      })->add_option("--punctures", punctures, "Number of punctures")->required();
  leaf(group, "semidirect", "Extension by an involution; input {\"presentation\",\"action\"}", [&] {
        session.require_json("group semidirect");
        const json doc = session.read(group_input);
        if (!doc.is_object() || !doc.contains("presentation") || !doc.contains("action")) {
          throw DomainError("semidirect input needs \"presentation\" and \"action\"");
        }
        std::vector<fp::Word> action;
        for (const json& w : doc.at("action")) action.push_back(io::parse_word(w));
        return session.emit(io::to_json(
            fp::semidirect_with_involution(io::parse_presentation(doc.at("presentation")), action)));
      })->add_option("--input", group_input, "JSON file, or - for stdin");
  leaf(group, "kernel", "Presentation of the kernel of the augmentation", [&] {
        session.require_json("group kernel");
        const auto ap = io::parse_augmented_presentation(session.read(group_input));
        return session.emit(kernel_payload(fp::kernel_presentation(ap)));
      })->add_option("--input", group_input, "AugmentedPresentation JSON, or - for stdin");
  {
    CLI::App* rw = leaf(group, "rewrite", "Rewrite a kernel word in kernel generators", [&] {
      session.require_json("group rewrite");
      const auto ap = io::parse_augmented_presentation(session.read(group_input));
      const fp::Word w = io::parse_word(parse_json_flag(word_text, "--word"));
      const fp::KernelPresentation k = fp::kernel_presentation(ap);
      const fp::Word rewritten = k.rewrite(w);
      return session.emit({{"word", io::to_json(rewritten)},
                           {"expansion", io::to_json(k.expand(rewritten))},
                           {"kernel", io::to_json(k)}});
    });
    rw->add_option("--input", group_input, "AugmentedPresentation JSON, or - for stdin");
    rw->add_option("--word", word_text, "Word as a JSON array of signed generator codes")->required();
  }
  leaf(group, "abelianize", "Abelianization invariants (Smith normal form)", [&] {
        session.require_json("group abelianize");
        return session.emit(
            io::to_json(fp::abelianization_invariants(io::parse_presentation(session.read(group_input)))));
      })->add_option("--input", group_input, "Presentation JSON, or - for stdin");

  // covers -----------------------------------------------------------------
  CLI::App* cov = app.add_subcommand("covers", "Finite covers as permutation actions");
  cov->require_subcommand(1);
  std::size_t degree = 0;
  bool up_to_conjugacy = false;
  std::optional<std::uint64_t> budget;
  std::string covers_input = "-";
  std::string presentation_path;
  {
    CLI::App* en = leaf(cov, "enumerate", "All degree-n actions of a presentation", [&] {
      covers::EnumerationOptions opts;
      opts.up_to_conjugacy = up_to_conjugacy;
      opts.budget = budget ? *budget : default_budget();
      const auto p = io::parse_presentation(session.read(covers_input));
      const auto actions = covers::enumerate_actions(p, degree, opts);
      json payload = json::array();
      for (const auto& a : actions) payload.push_back(io::to_json(a));
      if (session.format == Format::kCsv) {
        std::size_t transitive = 0, galois = 0;
        for (const auto& a : actions) {
          if (covers::is_transitive(a)) {
            ++transitive;
            if (covers::is_galois(a)) ++galois;
          }
        }
        session.output = "degree,actions,transitive,galois\n" + std::to_string(degree) + "," +
                         std::to_string(actions.size()) + "," + std::to_string(transitive) + "," +
                         std::to_string(galois) + "\n";
      } else {
        // One action per line, in canonical order.
        for (const auto& a : payload) session.output += a.dump() + "\n";
      }
      return payload;
    });
    en->add_option("--degree", degree, "Degree n")->required();
    en->add_flag("--up-to-conjugacy", up_to_conjugacy, "One representative per Sym(n) orbit");
    en->add_option("--budget", budget, "Node-expansion budget (default 1e7, env KLEIN_BUDGET)");
    en->add_option("--input", covers_input, "Presentation JSON, or - for stdin");
  }
  {
    CLI::App* cl = leaf(cov, "classify", "Orbits, transitivity and Galois property of an action", [&] {
      session.require_json("covers classify");
      const auto action = io::parse_action(session.read(covers_input));
      if (degree != 0 && degree != action.degree) throw DomainError("--degree does not match the action");
      if (!presentation_path.empty()) {
        const auto p = io::parse_presentation(session.read(presentation_path));
        covers::make_action(p, action.images);
      }
      const bool transitive = covers::is_transitive(action);
      json payload = {{"degree", action.degree}, {"transitive", transitive}, {"orbits", orbits_json(action)}};
      if (transitive) {
        payload["galois"] = covers::is_galois(action);
        json gens = json::array();
        for (const auto& w : covers::stabilizer_schreier_generators(action, 0)) gens.push_back(io::to_json(w));
        payload["stabilizer_generators"] = gens;
      } else {
        payload["galois"] = nullptr;
        payload["stabilizer_generators"] = nullptr;
      }
      return session.emit(payload);
    });
    cl->add_option("--degree", degree, "Expected degree");
    cl->add_option("--input", covers_input, "PermutationAction JSON, or - for stdin");
    cl->add_option("--presentation", presentation_path, "Presentation JSON to validate against");
  }
  {
    CLI::App* rs = leaf(cov, "restrict", "Restrict a real cover to its complex cover", [&] {
      session.require_json("covers restrict");
      const json doc = session.read(covers_input);
      if (!doc.is_object() || !doc.contains("presentation") || !doc.contains("action")) {
        throw DomainError("restrict input needs \"presentation\" and \"action\"");
      }
      const auto ap = io::parse_augmented_presentation(doc.at("presentation"));
      const auto action = covers::make_action(ap.base(), io::parse_action(doc.at("action")).images);
      if (degree != 0 && degree != action.degree) throw DomainError("--degree does not match the action");
      const fp::KernelPresentation k = fp::kernel_presentation(ap);
      const auto restricted = covers::restrict_action_to_kernel(k, action);
      return session.emit({{"kernel", io::to_json(k)},
                           {"action", io::to_json(restricted)},
                           {"orbits", orbits_json(restricted)},
                           {"full_orbits", orbits_json(action)}});
    });
    rs->add_option("--degree", degree, "Expected degree");
    rs->add_option("--input", covers_input, "{\"presentation\": AP, \"action\": A}, or - for stdin");
  }

  // repvar -----------------------------------------------------------------
  CLI::App* rv = app.add_subcommand("repvar", "Unitary representation varieties");
  rv->require_subcommand(1);
  std::size_t dim = 0;
  std::uint64_t seed = 0;
  double tol = 0.0;
  int max_iterations = repvar::SolveOptions{}.max_iterations;
  std::string rep_input = "-";
  std::string real_structure_path;
  std::string sigma_text;
  auto sigma_for = [&](const fp::AugmentedPresentation& ap) {
    return sigma_text.empty() ? repvar::default_sigma(ap)
                              : io::parse_word(parse_json_flag(sigma_text, "--sigma"));
  };
  {
    CLI::App* s = leaf(rv, "solve", "Numerically solve for a rep into U(n)", [&] {
      session.require_json("repvar solve");
      const auto p = io::parse_presentation(session.read(rep_input));
      const double t = tol > 0 ? tol : repvar::SolveOptions{}.tol;
      return session.emit(io::to_json(repvar::solve_rep(p, dim, seed, solve_options(t, max_iterations))));
    });
    s->add_option("--dim", dim, "Dimension n")->required();
    s->add_option("--seed", seed, "Random seed")->required();
    s->add_option("--tol", tol, "Residual tolerance (default 1e-8)");
    s->add_option("--max-iterations", max_iterations, "Iteration cap (default 10000)");
    s->add_option("--input", rep_input, "Presentation JSON, or - for stdin");
  }
  {
    CLI::App* s = leaf(rv, "solve-augmented", "Solve for a rep into U(n) x| Z/2Z", [&] {
      session.require_json("repvar solve-augmented");
      const auto ap = io::parse_augmented_presentation(session.read(rep_input));
      const repvar::RealStructure alpha =
          real_structure_path.empty() ? repvar::RealStructure::identity(std::max<std::size_t>(dim, 1))
                                      : repvar::RealStructure(io::parse_matrix(session.read(real_structure_path)));
      const double t = tol > 0 ? tol : repvar::SolveOptions{}.tol;
      return session.emit(io::to_json(
          repvar::solve_augmented_rep(ap, dim, alpha, seed, solve_options(t, max_iterations))));
    });
    s->add_option("--dim", dim, "Dimension n")->required();
    s->add_option("--seed", seed, "Random seed")->required();
    s->add_option("--tol", tol, "Residual tolerance (default 1e-8)");
    s->add_option("--max-iterations", max_iterations, "Iteration cap (default 10000)");
    s->add_option("--real-structure", real_structure_path, "Matrix JSON for C (default identity)");
    s->add_option("--input", rep_input, "AugmentedPresentation JSON, or - for stdin");
  }
  leaf(rv, "restrict", "Restrict an augmented rep to the kernel", [&] {
        session.require_json("repvar restrict");
        return session.emit(io::to_json(repvar::restrict_rep(io::parse_augmented_rep(session.read(rep_input)))));
      })->add_option("--input", rep_input, "AugmentedUnitaryRep JSON, or - for stdin");
  {
    CLI::App* k = leaf(rv, "kappa", "Apply the involution kappa to a kernel rep", [&] {
      session.require_json("repvar kappa");
      const json doc = session.read(rep_input);
      if (doc.is_object() && doc.contains("signs")) {
        // An augmented rep: kappa of its restriction.
        const auto rep = io::parse_augmented_rep(doc);
        const fp::KernelPresentation kernel = fp::kernel_presentation(rep.presentation);
        const auto chi = repvar::restrict_rep(rep, kernel);
        return session.emit(io::to_json(
            repvar::kappa(chi, rep.presentation, kernel, rep.real_structure, sigma_for(rep.presentation))));
      }
      if (!doc.is_object() || !doc.contains("augmented_presentation") || !doc.contains("rep")) {
        throw DomainError("kappa input needs an augmented rep or {\"augmented_presentation\",\"rep\"}");
      }
      const auto ap = io::parse_augmented_presentation(doc.at("augmented_presentation"));
      const auto chi = io::parse_unitary_rep(doc.at("rep"));
      const repvar::RealStructure alpha = doc.contains("real_structure")
                                              ? repvar::RealStructure(io::parse_matrix(doc.at("real_structure")))
                                              : repvar::RealStructure::identity(chi.dim);
      return session.emit(io::to_json(repvar::kappa(chi, ap, alpha, sigma_for(ap))));
    });
    k->add_option("--input", rep_input, "JSON input, or - for stdin");
    k->add_option("--sigma", sigma_text, "Lift of the involution as a word (default: first odd generator)");
  }
  {
    CLI::App* c = leaf(rv, "conjugate", "Search for a unitary conjugator between two reps", [&] {
      session.require_json("repvar conjugate");
      const json doc = session.read(rep_input);
      if (!doc.is_object() || !doc.contains("rep1") || !doc.contains("rep2")) {
        throw DomainError("conjugate input needs \"rep1\" and \"rep2\"");
      }
      const auto r1 = io::parse_unitary_rep(doc.at("rep1"));
      const auto r2 = io::parse_unitary_rep(doc.at("rep2"));
      const double t = tol > 0 ? tol : 1e-8;
      const auto w = repvar::conjugator_search(r1, r2, t);
      json payload = {{"found", w.has_value()}, {"tolerance", t}};
      if (w) {
        payload["W"] = io::to_json(*w);
        payload["residual"] = repvar::intertwining_residual(r1, r2, *w);
      }
      return session.emit(payload);
    });
    c->add_option("--tol", tol, "Intertwining tolerance (default 1e-8)");
    c->add_option("--input", rep_input, "{\"rep1\": R, \"rep2\": R}, or - for stdin");
  }
  {
    CLI::App* c = leaf(rv, "certify", "Certify that the restriction is fixed by kappa", [&] {
      session.require_json("repvar certify");
      const auto rep = io::parse_augmented_rep(session.read(rep_input));
      const double t = tol > 0 ? tol : 1e-6;
      return session.emit(io::to_json(repvar::verify_fix_kappa(rep, sigma_for(rep.presentation), t)));
    });
    c->add_option("--tol", tol, "Certificate tolerance (default 1e-6)");
    c->add_option("--sigma", sigma_text, "Lift of the involution as a word (default: first odd generator)");
    c->add_option("--input", rep_input, "AugmentedUnitaryRep JSON, or - for stdin");
  }

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    session.format = format_name == "csv" ? Format::kCsv : Format::kJson;
    for (auto& [sub, handler] : handlers) {
      if (sub->parsed()) {
        result.payload = handler();
        result.output = session.output;
        return result;
      }
    }
    throw CLI::CallForHelp();
  } catch (const CLI::CallForHelp&) {
    result.output = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = Status::kDomainError;
    result.diagnostics = std::string(e.what()) + "\n\n" + app.help();
  } catch (const ResourceError& e) {
    result.status = Status::kResourceError;
    result.payload = {{"partial_count", e.partial_count()}};
    result.diagnostics = e.what();
  } catch (const ConvergenceError& e) {
    result.status = Status::kConvergenceError;
    result.payload = {{"best_residual", e.best_residual()}, {"iterations", e.iterations()}};
    result.diagnostics = e.what();
  } catch (const VerificationFailure& e) {
    result.status = Status::kVerificationFailure;
    result.payload = {{"residual", e.residual()}};
    result.diagnostics = e.what();
  } catch (const std::exception& e) {
    result.status = Status::kDomainError;
    result.diagnostics = e.what();
  }
  if (!result.diagnostics.empty() && result.diagnostics.back() != '\n') result.diagnostics += '\n';
  result.diagnostics = std::string("error (") + status_name(result.status) + "): " + result.diagnostics;
  return result;
}

}  // namespace klein::cli
