#include "klein/covers.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

#include "klein/errors.hpp"

namespace klein::covers {

using fp::Letter;
using fp::Word;

Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t x = 0; x < inner.size(); ++x) out[x] = outer[inner[x]];
  return out;
}

Permutation inverse(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[p[x]] = static_cast<std::uint32_t>(x);
  return out;
}

namespace {

bool is_permutation_of_degree(const Permutation& p, std::size_t degree) {
  if (p.size() != degree) return false;
  std::vector<bool> seen(degree, false);
  for (std::uint32_t v : p) {
    if (v >= degree || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

// Applies w to a single point, right-to-left, without materializing the
// permutation.
std::uint32_t apply_word(const std::vector<Permutation>& images,
                         const std::vector<Permutation>& inverses, const Word& w,
                         std::uint32_t x) {
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    x = it->inverse ? inverses[it->gen][x] : images[it->gen][x];
  }
  return x;
}

bool word_is_trivial(const std::vector<Permutation>& images,
                     const std::vector<Permutation>& inverses, const Word& w,
                     std::size_t degree) {
  for (std::uint32_t x = 0; x < degree; ++x) {
    if (apply_word(images, inverses, w, x) != x) return false;
  }
  return true;
}

std::vector<Permutation> conjugate_images(const std::vector<Permutation>& images,
                                          const Permutation& sigma) {
  std::vector<Permutation> out(images.size(), Permutation(sigma.size()));
  for (std::size_t g = 0; g < images.size(); ++g) {
    for (std::size_t x = 0; x < sigma.size(); ++x) out[g][sigma[x]] = sigma[images[g][x]];
  }
  return out;
}

bool is_lex_minimal_in_orbit(const std::vector<Permutation>& images, std::size_t degree) {
  Permutation sigma = identity_permutation(degree);
  while (std::next_permutation(sigma.begin(), sigma.end())) {
    if (conjugate_images(images, sigma) < images) return false;
  }
  return true;
}

class Enumerator {
 public:
  Enumerator(const fp::Presentation& p, std::size_t degree, const EnumerationOptions& options)
      : degree_(degree),
        options_(options),
        images_(p.generator_count()),
        inverses_(p.generator_count()),
        relators_by_last_(p.generator_count()) {
    for (const Word& r : p.relators()) relators_by_last_[r.generator_bound() - 1].push_back(r);
  }

  std::vector<PermutationAction> run() {
    search(0);
    return std::move(found_);
  }

 private:
  void search(std::size_t gen) {
    if (gen == images_.size()) {
      if (!options_.up_to_conjugacy || is_lex_minimal_in_orbit(images_, degree_)) {
        found_.push_back(PermutationAction{degree_, images_});
      }
      return;
    }
    Permutation candidate = identity_permutation(degree_);
    do {
      if (++nodes_ > options_.budget) {
        throw ResourceError("search budget of " + std::to_string(options_.budget) +
                                " node expansions exceeded after " +
                                std::to_string(found_.size()) + " actions",
                            found_.size());
      }
      images_[gen] = candidate;
      inverses_[gen] = inverse(candidate);
      bool ok = true;
      for (const Word& r : relators_by_last_[gen]) {
        if (!word_is_trivial(images_, inverses_, r, degree_)) {
          ok = false;
          break;
        }
      }
      if (ok) search(gen + 1);
    } while (std::next_permutation(candidate.begin(), candidate.end()));
  }

  std::size_t degree_;
  EnumerationOptions options_;
  std::vector<Permutation> images_;
  std::vector<Permutation> inverses_;
  std::vector<std::vector<Word>> relators_by_last_;
  std::vector<PermutationAction> found_;
  std::uint64_t nodes_ = 0;
};

std::vector<Permutation> all_inverses(const PermutationAction& action) {
  std::vector<Permutation> out;
  out.reserve(action.images.size());
  for (const Permutation& p : action.images) out.push_back(inverse(p));
  return out;
}

void require_transitive(const PermutationAction& action) {
  if (!is_transitive(action)) throw DomainError("action is not transitive");
}

}  // namespace

bool satisfies_relators(const fp::Presentation& p, const PermutationAction& action) {
  const auto inverses = all_inverses(action);
  for (const Word& r : p.relators()) {
    if (!word_is_trivial(action.images, inverses, r, action.degree)) return false;
  }
  return true;
}

PermutationAction make_action(const fp::Presentation& p, std::vector<Permutation> images) {
  if (images.size() != p.generator_count()) {
    throw DomainError("expected " + std::to_string(p.generator_count()) + " generator images, got " +
                      std::to_string(images.size()));
  }
  if (images.empty() || images[0].empty()) throw DomainError("degree must be positive");
  const std::size_t degree = images[0].size();
  for (const Permutation& perm : images) {
    if (!is_permutation_of_degree(perm, degree)) {
      throw DomainError("image is not a permutation of {0.." + std::to_string(degree - 1) + "}");
    }
  }
  PermutationAction action{degree, std::move(images)};
  if (!satisfies_relators(p, action)) throw DomainError("action does not satisfy the relators");
  return action;
}

Permutation evaluate_word_perm(const PermutationAction& action, const Word& w) {
  if (w.generator_bound() > action.images.size()) {
    throw DomainError("word uses generator " + std::to_string(w.generator_bound()) +
                      " but the action has " + std::to_string(action.images.size()));
  }
  Permutation out = identity_permutation(action.degree);
  // Left action: process letters right to left, composing on the outside.
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    const Permutation& g = action.images[it->gen];
    out = it->inverse ? compose(inverse(g), out) : compose(g, out);
  }
  return out;
}

std::vector<PermutationAction> enumerate_actions(const fp::Presentation& p, std::size_t degree,
                                                 const EnumerationOptions& options) {
  if (degree == 0) throw DomainError("degree must be positive");
  return Enumerator(p, degree, options).run();
}

std::uint64_t conjugacy_orbit_size(const PermutationAction& action) {
  // |orbit| = n! / |centralizer|.
  std::uint64_t total = 0;
  std::uint64_t centralizer = 0;
  Permutation sigma = identity_permutation(action.degree);
  do {
    ++total;
    if (conjugate_images(action.images, sigma) == action.images) ++centralizer;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total / centralizer;
}

PermutationAction canonical_conjugate(const PermutationAction& action) {
  std::vector<Permutation> best = action.images;
  Permutation sigma = identity_permutation(action.degree);
  while (std::next_permutation(sigma.begin(), sigma.end())) {
    auto c = conjugate_images(action.images, sigma);
    if (c < best) best = std::move(c);
  }
  return PermutationAction{action.degree, std::move(best)};
}

std::vector<std::vector<std::uint32_t>> orbit_decomposition(const PermutationAction& action) {
  // Union-find over the edges x -> g(x).
  std::vector<std::uint32_t> parent = identity_permutation(action.degree);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Permutation& g : action.images) {
    for (std::uint32_t x = 0; x < action.degree; ++x) {
      const std::uint32_t a = find(x);
      const std::uint32_t b = find(g[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<std::uint32_t>> orbits;
  std::vector<std::int64_t> slot(action.degree, -1);
  for (std::uint32_t x = 0; x < action.degree; ++x) {
    const std::uint32_t root = find(x);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::int64_t>(orbits.size());
      orbits.emplace_back();
    }
    orbits[static_cast<std::size_t>(slot[root])].push_back(x);
  }
  return orbits;
}

bool is_transitive(const PermutationAction& action) {
  return orbit_decomposition(action).size() == 1;
}

std::vector<Word> stabilizer_schreier_generators(const PermutationAction& action,
                                                 std::uint32_t point) {
  require_transitive(action);
  if (point >= action.degree) throw DomainError("point out of range");
  // rep[x] satisfies rep[x](point) = x.
  std::vector<Word> rep(action.degree);
  std::vector<bool> reached(action.degree, false);
  std::queue<std::uint32_t> queue;
  reached[point] = true;
  queue.push(point);
  while (!queue.empty()) {
    const std::uint32_t x = queue.front();
    queue.pop();
    for (std::uint32_t g = 0; g < action.images.size(); ++g) {
      const std::uint32_t y = action.images[g][x];
      if (reached[y]) continue;
      reached[y] = true;
      rep[y] = Word::generator(g) * rep[x];
      queue.push(y);
    }
  }
  std::vector<Word> gens;
  for (std::uint32_t x = 0; x < action.degree; ++x) {
    for (std::uint32_t g = 0; g < action.images.size(); ++g) {
      const std::uint32_t y = action.images[g][x];
      Word s = rep[y].inverse() * Word::generator(g) * rep[x];
      if (!s.empty()) gens.push_back(std::move(s));
    }
  }
  return gens;
}

bool is_galois(const PermutationAction& action) {
  require_transitive(action);
  // The cover is regular iff Stab(0) is normal iff Stab(0) fixes every point.
  const auto inverses = all_inverses(action);
  for (const Word& s : stabilizer_schreier_generators(action, 0)) {
    if (!word_is_trivial(action.images, inverses, s, action.degree)) return false;
  }
  return true;
}

PermutationAction restrict_action_to_kernel(const fp::KernelPresentation& kernel,
                                            const PermutationAction& action) {
  PermutationAction out{action.degree, {}};
  for (const Word& w : kernel.generator_words()) out.images.push_back(evaluate_word_perm(action, w));
  return out;
}

PermutationAction restrict_action_to_kernel(const fp::AugmentedPresentation& ap,
                                            const PermutationAction& action) {
  if (!satisfies_relators(ap.base(), action)) throw DomainError("action does not satisfy the relators");
  return restrict_action_to_kernel(fp::kernel_presentation(ap), action);
}

}  // namespace klein::covers
