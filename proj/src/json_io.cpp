#include "klein/json_io.hpp"

#include <string>

#include "klein/errors.hpp"

namespace klein::io {

namespace {

template <typename T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("field \"") + key + "\": " + e.what());
  }
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

json to_json(const topology::TopologicalType& t) { return {{"g", t.g}, {"k", t.k}, {"a", t.a}}; }

json to_json(const topology::CompactSurface& s) {
  return {{"orientable", s.orientable},
          {"handles_or_crosscaps", s.handles_or_crosscaps},
          {"boundary", s.boundary}};
}

json to_json(const fp::Word& w) { return fp::signed_code(w); }

json to_json(const fp::Presentation& p) {
  json relators = json::array();
  for (const fp::Word& r : p.relators()) relators.push_back(to_json(r));
  return {{"generators", p.generator_names()}, {"relators", relators}};
}

json to_json(const fp::AugmentedPresentation& ap) {
  json j = to_json(ap.base());
  j["augmentation"] = ap.augmentation();
  return j;
}

json to_json(const fp::KernelPresentation& k) {
  json words = json::array();
  for (const fp::Word& w : k.generator_words()) words.push_back(to_json(w));
  return {{"presentation", to_json(k.presentation())},
          {"generator_words", words},
          {"transversal", to_json(k.transversal_rep())}};
}

json to_json(const fp::AbelianInvariants& inv) {
  return {{"free_rank", inv.free_rank}, {"torsion", inv.torsion}};
}

json to_json(const covers::PermutationAction& a) {
  return {{"degree", a.degree}, {"images", a.images}};
}

json to_json(const repvar::Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const repvar::UnitaryRep& rep) {
  json mats = json::array();
  for (const auto& m : rep.matrices) mats.push_back(to_json(m));
  return {{"presentation", to_json(rep.presentation)},
          {"dim", rep.dim},
          {"matrices", mats},
          {"residual", rep.residual},
          {"iterations", rep.iterations}};
}

json to_json(const repvar::AugmentedUnitaryRep& rep) {
  json mats = json::array();
  for (const auto& m : rep.matrices) mats.push_back(to_json(m));
  return {{"presentation", to_json(rep.presentation)},
          {"real_structure", to_json(rep.real_structure.matrix())},
          {"dim", rep.dim},
          {"matrices", mats},
          {"signs", rep.signs},
          {"residual", rep.residual},
          {"iterations", rep.iterations}};
}

json to_json(const repvar::Certificate& cert) {
  return {{"W", to_json(cert.w)},
          {"residual", cert.residual},
          {"tolerance", cert.tolerance},
          {"passed", cert.passed}};
}

topology::TopologicalType parse_topological_type(const json& j) {
  return {get<int>(j, "g"), get<int>(j, "k"), get<int>(j, "a")};
}

topology::CompactSurface parse_compact_surface(const json& j) {
  return {get<bool>(j, "orientable"), get<int>(j, "handles_or_crosscaps"), get<int>(j, "boundary")};
}

fp::Word parse_word(const json& j) {
  if (!j.is_array()) throw DomainError("a word must be an array of signed integers");
  std::vector<int> code;
  for (const json& c : j) {
    if (!c.is_number_integer()) throw DomainError("a word must be an array of signed integers");
    code.push_back(c.get<int>());
  }
  return fp::word_from_signed(code);
}

fp::Presentation parse_presentation(const json& j) {
  const auto names = get<std::vector<std::string>>(j, "generators");
  std::vector<fp::Word> relators;
  if (j.contains("relators")) {
    const json& rs = j.at("relators");
    if (!rs.is_array()) throw DomainError("\"relators\" must be an array");
    for (const json& r : rs) relators.push_back(parse_word(r));
  }
  return fp::Presentation(names.size(), std::move(relators), names);
}

fp::AugmentedPresentation parse_augmented_presentation(const json& j) {
  const auto aug = get<std::vector<int>>(j, "augmentation");
  std::vector<std::uint8_t> values;
  for (int a : aug) {
    if (a != 0 && a != 1) throw DomainError("augmentation values must be 0 or 1");
    values.push_back(static_cast<std::uint8_t>(a));
  }
  return fp::AugmentedPresentation(parse_presentation(j), std::move(values));
}

covers::PermutationAction parse_action(const json& j) {
  const auto degree = get<std::size_t>(j, "degree");
  const auto images = get<std::vector<covers::Permutation>>(j, "images");
  if (images.empty()) throw DomainError("an action needs at least one generator image");
  // Shape checks only; relators are checked where a presentation is known.
  const fp::Presentation free = fp::free_group(images.size());
  auto action = covers::make_action(free, images);
  if (action.degree != degree) throw DomainError("\"degree\" does not match the image length");
  return action;
}

repvar::Matrix parse_matrix(const json& j) {
  if (!j.is_array() || j.empty()) throw DomainError("a matrix must be a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = static_cast<Eigen::Index>(j.at(0).size());
  repvar::Matrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const json& row = j.at(static_cast<std::size_t>(r));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw DomainError("matrix rows must have equal length");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const json& z = row.at(static_cast<std::size_t>(c));
      if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
        throw DomainError("matrix entries must be [re, im] pairs");
      }
      m(r, c) = {z[0].get<double>(), z[1].get<double>()};
    }
  }
  return m;
}

namespace {

std::vector<repvar::Matrix> parse_matrices(const json& j) {
  const json& ms = field(j, "matrices");
  if (!ms.is_array() || ms.empty()) throw DomainError("\"matrices\" must be a non-empty array");
  std::vector<repvar::Matrix> out;
  for (const json& m : ms) out.push_back(parse_matrix(m));
  return out;
}

}  // namespace

repvar::UnitaryRep parse_unitary_rep(const json& j) {
  auto rep = repvar::make_unitary_rep(parse_presentation(field(j, "presentation")), parse_matrices(j));
  if (j.contains("dim") && get<std::size_t>(j, "dim") != rep.dim) {
    throw DomainError("\"dim\" does not match the matrices");
  }
  return rep;
}

repvar::AugmentedUnitaryRep parse_augmented_rep(const json& j) {
  auto ap = parse_augmented_presentation(field(j, "presentation"));
  auto matrices = parse_matrices(j);
  const std::size_t dim = static_cast<std::size_t>(matrices.at(0).rows());
  repvar::RealStructure alpha = j.contains("real_structure")
                                    ? repvar::RealStructure(parse_matrix(j.at("real_structure")))
                                    : repvar::RealStructure::identity(dim);
  std::vector<int> signs =
      j.contains("signs") ? get<std::vector<int>>(j, "signs") : repvar::augmentation_signs(ap);
  auto rep = repvar::make_augmented_rep(std::move(ap), std::move(alpha), std::move(matrices),
                                        std::move(signs));
  if (j.contains("dim") && get<std::size_t>(j, "dim") != rep.dim) {
    throw DomainError("\"dim\" does not match the matrices");
  }
  return rep;
}

}  // namespace klein::io
