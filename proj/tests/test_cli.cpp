#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "klein/abelian.hpp"
#include "klein/cli.hpp"
#include "klein/covers.hpp"
#include "klein/json_io.hpp"
#include "klein/kappa.hpp"
#include "klein/kernel.hpp"
#include "klein/solver.hpp"

using namespace klein;
using cli::Status;
using io::json;

namespace {

cli::CommandResult run(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  return cli::run(args, in);
}

std::string write_temp(const std::string& name, const json& j) {
  const auto path = std::filesystem::temp_directory_path() / ("klein_test_" + name + ".json");
  std::ofstream(path) << j.dump();
  return path.string();
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(cli::exit_code(Status::kOk) == 0);
  CHECK(cli::exit_code(Status::kDomainError) == 2);
  CHECK(cli::exit_code(Status::kResourceError) == 3);
  CHECK(cli::exit_code(Status::kConvergenceError) == 4);
  CHECK(cli::exit_code(Status::kVerificationFailure) == 5);
  CHECK(std::string(cli::status_name(Status::kResourceError)) == "resource-error");
}

TEST_CASE("types") {
  const auto r = run({"types", "count", "--genus", "3"});
  CHECK(r.status == Status::kOk);
  CHECK(r.payload == json(6));
  CHECK(r.output == "6\n");

  const auto e = run({"types", "enumerate", "--genus", "2"});
  json expected = json::array();
  for (const auto& t : topology::enumerate_topological_types(2)) expected.push_back(io::to_json(t));
  CHECK(e.payload == expected);

  const auto csv = run({"types", "enumerate", "--genus", "1", "--format", "csv"});
  CHECK(csv.output == "g,k,a\n1,2,0\n1,0,1\n1,1,1\n");
  CHECK(run({"types", "count", "--genus", "-1"}).status == Status::kDomainError);
}

TEST_CASE("usage errors") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {}, {"nope"}, {"types"}, {"types", "count"}, {"types", "count", "--genus", "x"},
           {"types", "count", "--genus", "1", "--bogus"}, {"group", "surface", "--genus", "1", "--format", "xml"}}) {
    const auto r = run(args);
    CHECK(r.status == Status::kDomainError);
    CHECK(r.diagnostics.find("Usage") != std::string::npos);
  }
  const auto help = run({"--help"});
  CHECK(help.status == Status::kOk);
  CHECK(help.output.find("Usage") != std::string::npos);
  CHECK(run({"group", "surface", "--genus", "1", "--format", "csv"}).status == Status::kDomainError);
}

TEST_CASE("surface commands") {
  CHECK(run({"surface", "quotient", "--g", "2", "--k", "3", "--a", "0"}).payload ==
        io::to_json(topology::quotient_surface({2, 3, 0})));
  CHECK(run({"surface", "quotient", "--g", "2", "--k", "2", "--a", "0"}).status == Status::kDomainError);
  CHECK(run({"surface", "double", "--non-orientable", "--handles", "2", "--boundary", "1"}).payload ==
        io::to_json(topology::TopologicalType{2, 1, 1}));
  const std::string s = io::to_json(topology::CompactSurface{true, 1, 2}).dump();
  CHECK(run({"surface", "euler", "--input", "-"}, s).payload == json(-2));
}

TEST_CASE("group commands agree with the library") {
  CHECK(run({"group", "surface", "--genus", "2"}).payload == io::to_json(fp::surface_group(2)));
  CHECK(run({"group", "punctured-sphere", "--punctures", "4"}).payload ==
        io::to_json(fp::punctured_sphere_group(4)));
  const auto ap = fp::real_punctured_line_group(3);
  const auto line = run({"group", "real-line", "--punctures", "3"});
  CHECK(line.payload == io::to_json(ap));

  const auto kernel = run({"group", "kernel"}, line.output);
  REQUIRE(kernel.status == Status::kOk);
  json expected = io::to_json(fp::kernel_presentation(ap));
  expected["abelianization"] = io::to_json(fp::AbelianInvariants{2, {}});
  CHECK(kernel.payload == expected);

  const auto rw = run({"group", "rewrite", "--word", "[2,3]"}, line.output);
  CHECK(rw.payload.at("word") == json::parse("[-1,2]"));
  CHECK(run({"group", "rewrite", "--word", "[2]"}, line.output).status == Status::kDomainError);

  CHECK(run({"group", "abelianize"}, io::to_json(fp::surface_group(3)).dump()).payload ==
        json::parse(R"({"free_rank":6,"torsion":[]})"));

  const json semi = {{"presentation", io::to_json(fp::free_group(1))}, {"action", json::parse("[[-1]]")}};
  CHECK(run({"group", "semidirect"}, semi.dump()).payload ==
        io::to_json(fp::semidirect_with_involution(fp::free_group(1), {fp::Word::generator(0, true)})));
  CHECK(run({"group", "kernel"}, "not json").status == Status::kDomainError);
}

TEST_CASE("covers commands") {
  const std::string f2 = io::to_json(fp::free_group(2)).dump();
  const auto en = run({"covers", "enumerate", "--degree", "2"}, f2);
  REQUIRE(en.status == Status::kOk);
  CHECK(en.payload.size() == 4);
  std::istringstream lines(en.output);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    CHECK(json::parse(line) == en.payload[count]);
    ++count;
  }
  CHECK(count == 4);

  const auto csv = run({"covers", "enumerate", "--degree", "3", "--format", "csv"}, f2);
  CHECK(csv.output == "degree,actions,transitive,galois\n3,36,26,8\n");

  const auto conj = run({"covers", "enumerate", "--degree", "3", "--up-to-conjugacy"}, f2);
  CHECK(conj.payload.size() ==
        covers::enumerate_actions(fp::free_group(2), 3, {.up_to_conjugacy = true}).size());

  const auto budget = run({"covers", "enumerate", "--degree", "5", "--budget", "40"}, f2);
  CHECK(budget.status == Status::kResourceError);
  CHECK(budget.payload.at("partial_count").get<std::uint64_t>() > 0);

  ::setenv("KLEIN_BUDGET", "40", 1);
  CHECK(run({"covers", "enumerate", "--degree", "5"}, f2).status == Status::kResourceError);
  CHECK(run({"covers", "enumerate", "--degree", "2", "--budget", "1000"}, f2).status == Status::kOk);
  ::unsetenv("KLEIN_BUDGET");

  const auto cl = run({"covers", "classify"}, R"({"degree":3,"images":[[1,2,0],[0,1,2]]})");
  CHECK(cl.payload.at("transitive") == true);
  CHECK(cl.payload.at("galois") == true);
  const auto intr = run({"covers", "classify"}, R"({"degree":3,"images":[[1,0,2],[0,1,2]]})");
  CHECK(intr.payload.at("transitive") == false);
  CHECK(intr.payload.at("galois").is_null());

  const json rs = {{"presentation", io::to_json(fp::real_punctured_line_group(3))},
                   {"action", json::parse(R"({"degree":2,"images":[[1,0],[1,0],[1,0]]})")}};
  const auto restricted = run({"covers", "restrict"}, rs.dump());
  REQUIRE(restricted.status == Status::kOk);
  CHECK(restricted.payload.at("orbits").size() == 2);
  CHECK(restricted.payload.at("full_orbits").size() == 1);
}

TEST_CASE("repvar commands agree with the library and are deterministic") {
  const auto ap = fp::real_punctured_line_group(3);
  const std::string in = io::to_json(ap).dump();
  const auto a = run({"repvar", "solve-augmented", "--dim", "2", "--seed", "5"}, in);
  const auto b = run({"repvar", "solve-augmented", "--dim", "2", "--seed", "5"}, in);
  REQUIRE(a.status == Status::kOk);
  CHECK(a.output == b.output);
  const auto lib = repvar::solve_augmented_rep(ap, 2, repvar::RealStructure::identity(2), 5);
  CHECK(a.payload == io::to_json(lib));

  Eigen::MatrixXcd c(2, 2);
  c << 0, 1, 1, 0;
  const std::string cpath = write_temp("c", io::to_json(c));
  const auto twisted = run({"repvar", "solve-augmented", "--dim", "2", "--seed", "5", "--real-structure", cpath}, in);
  CHECK(twisted.payload ==
        io::to_json(repvar::solve_augmented_rep(ap, 2, repvar::RealStructure(c), 5)));

  const auto cert = run({"repvar", "certify"}, a.output);
  REQUIRE(cert.status == Status::kOk);
  CHECK(cert.payload.at("passed") == true);
  CHECK(cert.payload.at("residual").get<double>() < 1e-6);
  CHECK(cert.payload == io::to_json(repvar::verify_fix_kappa(lib, repvar::default_sigma(ap))));

  const auto restricted = run({"repvar", "restrict"}, a.output);
  CHECK(restricted.payload == io::to_json(repvar::restrict_rep(lib)));
  const auto k = run({"repvar", "kappa"}, a.output);
  CHECK(k.payload == io::to_json(repvar::kappa(repvar::restrict_rep(lib), ap,
                                               repvar::RealStructure::identity(2), repvar::default_sigma(ap))));
  const json explicit_input = {{"augmented_presentation", io::to_json(ap)}, {"rep", restricted.payload}};
  CHECK(run({"repvar", "kappa", "--sigma", "[2]"}, explicit_input.dump()).payload ==
        io::to_json(repvar::kappa(repvar::restrict_rep(lib), ap, repvar::RealStructure::identity(2),
                                  fp::Word::generator(1))));

  const json pair = {{"rep1", restricted.payload}, {"rep2", k.payload}};
  const auto conj = run({"repvar", "conjugate"}, pair.dump());
  CHECK(conj.payload.at("found") == true);
  CHECK(conj.payload.at("residual").get<double>() < 1e-8);

  const std::string s2 = io::to_json(fp::surface_group(2)).dump();
  const auto solved = run({"repvar", "solve", "--dim", "2", "--seed", "1"}, s2);
  CHECK(solved.payload == io::to_json(repvar::solve_rep(fp::surface_group(2), 2, 1)));
  const auto capped = run({"repvar", "solve", "--dim", "2", "--seed", "1", "--max-iterations", "1"}, s2);
  CHECK(capped.status == Status::kConvergenceError);
  CHECK(capped.payload.contains("best_residual"));
  CHECK(run({"repvar", "solve", "--seed", "1"}, s2).status == Status::kDomainError);
}
