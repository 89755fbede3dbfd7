#include "klein/kernel.hpp"

#include <algorithm>

#include "klein/errors.hpp"

namespace klein::fp {

namespace {

std::vector<Word> normalize_relators(std::vector<Word> relators) {
  std::vector<Word> out;
  for (Word& r : relators) {
    Word c = r.cyclically_reduced();
    if (c.empty()) continue;
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(std::move(c));
  }
  return out;
}

std::string render(const Word& w, const Presentation& p) {
  if (w.empty()) return "1";
  std::string out;
  for (const Letter& l : w) {
    if (!out.empty()) out += '*';
    out += p.generator_name(l.gen);
    if (l.inverse) out += "^-1";
  }
  return out;
}

}  // namespace

KernelPresentation::KernelPresentation(const AugmentedPresentation& ap)
    : augmentation_(ap.augmentation()),
      t_(ap.first_odd_generator()),
      ambient_count_(ap.generator_count()),
      presentation_(1, {}),
      transversal_(Word::generator(ap.first_odd_generator())) {
  const Word rep[2] = {Word{}, transversal_};

  // Schreier generators rep(c) x_i rep(c + a_i)^{-1}, skipping the tree edge (0, t).
  std::vector<Word> schreier_words;
  for (int c = 0; c < 2; ++c) {
    schreier_index_[c].assign(ambient_count_, -1);
    for (std::uint32_t i = 0; i < ambient_count_; ++i) {
      if (c == 0 && i == t_) continue;
      const int target = c ^ augmentation_[i];
      schreier_index_[c][i] = static_cast<std::int32_t>(schreier_words.size());
      schreier_words.push_back(rep[c] * Word::generator(i) * rep[target].inverse());
    }
  }
  const std::size_t m = schreier_words.size();

  std::vector<Word> relators;
  for (const Word& r : ap.base().relators()) {
    for (int c = 0; c < 2; ++c) relators.push_back(rewrite_schreier(r, c));
  }
  relators = normalize_relators(std::move(relators));

  // Tietze pass: a relator x or x y (x != y) lets us drop x.
  std::vector<Word> sub;
  std::vector<bool> alive(m, true);
  for (std::size_t j = 0; j < m; ++j) sub.push_back(Word::generator(static_cast<std::uint32_t>(j)));
  std::size_t alive_count = m;
  for (bool changed = true; changed && alive_count > 1;) {
    changed = false;
    for (const Word& r : relators) {
      std::uint32_t victim = 0;
      Word replacement;
      if (r.size() == 1) {
        victim = r[0].gen;
      } else if (r.size() == 2 && r[0].gen != r[1].gen) {
        // Drop the generator with the longer ambient word; ties drop the
        // lower index. The relator l_v l_o = 1 gives l_v = l_o^{-1}.
        const std::size_t len0 = schreier_words[r[0].gen].size();
        const std::size_t len1 = schreier_words[r[1].gen].size();
        const bool first = len0 > len1 || (len0 == len1 && r[0].gen < r[1].gen);
        const Letter lv = first ? r[0] : r[1];
        const Letter lo = first ? r[1] : r[0];
        victim = lv.gen;
        replacement = lv.inverse ? Word{lo} : Word{lo.inverted()};
      } else {
        continue;
      }
      std::vector<Word> images;
      for (std::size_t j = 0; j < m; ++j) {
        images.push_back(j == victim ? replacement : Word::generator(static_cast<std::uint32_t>(j)));
      }
      for (Word& s : sub) s = substitute(s, images);
      for (Word& rel : relators) rel = substitute(rel, images);
      relators = normalize_relators(std::move(relators));
      alive[victim] = false;
      --alive_count;
      changed = true;
      break;
    }
  }

  std::vector<Word> renumber(m);
  std::vector<std::string> names;
  const Presentation& ambient = ap.base();
  for (std::size_t j = 0; j < m; ++j) {
    if (!alive[j]) continue;
    renumber[j] = Word::generator(static_cast<std::uint32_t>(generator_words_.size()));
    generator_words_.push_back(schreier_words[j]);
    names.push_back(render(schreier_words[j], ambient));
  }
  for (Word& s : sub) schreier_to_kernel_.push_back(substitute(s, renumber));
  std::vector<Word> kernel_relators;
  for (const Word& r : relators) kernel_relators.push_back(substitute(r, renumber));
  kernel_relators = normalize_relators(std::move(kernel_relators));

  presentation_ = Presentation(generator_words_.size(), std::move(kernel_relators), std::move(names));
}

Word KernelPresentation::rewrite_schreier(const Word& w, int start_coset) const {
  std::vector<Letter> out;
  int c = start_coset;
  for (const Letter& l : w) {
    if (l.gen >= ambient_count_) throw DomainError("word uses a generator outside the presentation");
    if (!l.inverse) {
      const std::int32_t s = schreier_index_[c][l.gen];
      if (s >= 0) out.push_back(Letter{static_cast<std::uint32_t>(s), false});
      c ^= augmentation_[l.gen];
    } else {
      c ^= augmentation_[l.gen];
      const std::int32_t s = schreier_index_[c][l.gen];
      if (s >= 0) out.push_back(Letter{static_cast<std::uint32_t>(s), true});
    }
  }
  if (c != start_coset) throw DomainError("word not in kernel");
  return Word(std::move(out));
}

Word KernelPresentation::rewrite(const Word& w) const {
  return substitute(rewrite_schreier(w, 0), schreier_to_kernel_);
}

Word KernelPresentation::expand(const Word& kernel_word) const {
  return substitute(kernel_word, generator_words_);
}

KernelPresentation kernel_presentation(const AugmentedPresentation& ap) {
  return KernelPresentation(ap);
}

Word rewrite_in_kernel(const AugmentedPresentation& ap, const Word& w) {
  return KernelPresentation(ap).rewrite(w);
}

}  // namespace klein::fp
