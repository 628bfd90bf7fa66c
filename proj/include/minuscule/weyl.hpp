#pragma once

#include "minuscule/cartan.hpp"

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace minuscule {

/// s_i(lambda) = lambda - <h_i, lambda> alpha_i.
inline Weight reflect(const CartanDatum& datum, const Weight& lambda, int i) {
  datum.check_node(i);
  const int c = lambda[i];
  if (c == 0) return lambda;
  Weight out = lambda;
  for (int r = 1; r <= datum.rank(); ++r) out.coords[static_cast<std::size_t>(r - 1)] -= c * datum.a(r, i);
  return out;
}

/// Applies s_{w_1} s_{w_2} ... s_{w_l} to lambda (rightmost letter first).
inline Weight apply_word(const CartanDatum& datum, const Sequence& word, Weight lambda) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) lambda = reflect(datum, lambda, *it);
  return lambda;
}

/// Weyl orbit of an integral weight, closed under every s_i, sorted
/// lexicographically on coordinates.
inline std::vector<Weight> orbit(const CartanDatum& datum, const Weight& lambda) {
  std::set<Weight> seen{lambda};
  std::deque<Weight> frontier{lambda};
  while (!frontier.empty()) {
    Weight mu = std::move(frontier.front());
    frontier.pop_front();
    for (int i = 1; i <= datum.rank(); ++i) {
      if (mu[i] == 0) continue;
      Weight nu = reflect(datum, mu, i);
      if (seen.insert(nu).second) frontier.push_back(std::move(nu));
    }
  }
  return {seen.begin(), seen.end()};
}

inline bool is_dominant(const Weight& w) {
  for (int c : w.coords)
    if (c < 0) return false;
  return true;
}

/// Element of the (finite) Weyl group, stored as its image of rho, which is
/// faithful. A word is cached when the element was built from one.
class WeylElement {
 public:
  static WeylElement identity(const CartanDatum& datum) { return WeylElement(rho(datum), Sequence{}); }

  static WeylElement from_word(const CartanDatum& datum, const Sequence& word) {
    return WeylElement(apply_word(datum, word, rho(datum)), word);
  }

  static WeylElement from_rho_image(Weight image) { return WeylElement(std::move(image), std::nullopt); }

  const Weight& rho_image() const { return rho_image_; }
  const std::optional<Sequence>& cached_word() const { return word_; }

  /// s_i w.
  WeylElement left_multiply(const CartanDatum& datum, int i) const {
    std::optional<Sequence> word;
    if (word_) {
      word = Sequence{i};
      word->insert(word->end(), word_->begin(), word_->end());
    }
    return WeylElement(reflect(datum, rho_image_, i), std::move(word));
  }

  friend bool operator==(const WeylElement& x, const WeylElement& y) { return x.rho_image_ == y.rho_image_; }
  friend bool operator<(const WeylElement& x, const WeylElement& y) { return x.rho_image_ < y.rho_image_; }

 private:
  WeylElement(Weight image, std::optional<Sequence> word) : rho_image_(std::move(image)), word_(std::move(word)) {}

  Weight rho_image_;
  std::optional<Sequence> word_;
};

/// Left descents of w: the nodes i with l(s_i w) < l(w), i.e. <h_i, w rho> < 0.
inline std::vector<int> left_descents(const WeylElement& w) {
  std::vector<int> out;
  const auto& c = w.rho_image().coords;
  for (std::size_t k = 0; k < c.size(); ++k)
    if (c[k] < 0) out.push_back(static_cast<int>(k + 1));
  return out;
}

/// Coxeter length by repeated descent to the dominant chamber.
inline int length(const CartanDatum& datum, const WeylElement& w) {
  Weight x = w.rho_image();
  int len = 0;
  for (;;) {
    int i = 0;
    for (int k = 1; k <= datum.rank(); ++k)
      if (x[k] < 0) {
        i = k;
        break;
      }
    if (i == 0) return len;
    x = reflect(datum, x, i);
    ++len;
  }
}

/// One reduced word, lexicographically smallest (greedy smallest descent).
inline Sequence reduced_word(const CartanDatum& datum, const WeylElement& w) {
  Sequence word;
  Weight x = w.rho_image();
  for (;;) {
    int i = 0;
    for (int k = 1; k <= datum.rank(); ++k)
      if (x[k] < 0) {
        i = k;
        break;
      }
    if (i == 0) return word;
    word.push_back(i);
    x = reflect(datum, x, i);
  }
}

/// w s_i.
inline WeylElement right_multiply(const CartanDatum& datum, const WeylElement& w, int i) {
  Sequence word = w.cached_word() ? *w.cached_word() : reduced_word(datum, w);
  word.push_back(i);
  return WeylElement::from_word(datum, word);
}

/// w(lambda).
inline Weight act(const CartanDatum& datum, const WeylElement& w, const Weight& lambda) {
  const Sequence word = w.cached_word() ? *w.cached_word() : reduced_word(datum, w);
  return apply_word(datum, word, lambda);
}

namespace detail {

inline const std::set<Sequence>& reduced_words_memo(const CartanDatum& datum, const Weight& image,
                                                    std::map<Weight, std::set<Sequence>>& memo) {
  if (auto it = memo.find(image); it != memo.end()) return it->second;
  std::set<Sequence> words;
  bool descended = false;
  for (int i = 1; i <= datum.rank(); ++i) {
    if (image[i] >= 0) continue;
    descended = true;
    for (const auto& tail : reduced_words_memo(datum, reflect(datum, image, i), memo)) {
      Sequence word{i};
      word.insert(word.end(), tail.begin(), tail.end());
      words.insert(std::move(word));
    }
  }
  if (!descended) words.insert(Sequence{});
  return memo.emplace(image, std::move(words)).first->second;
}

}  // namespace detail

/// Every reduced word of w, in lexicographic order. Exponential in l(w):
/// callers bound the length.
inline std::set<Sequence> reduced_words(const CartanDatum& datum, const WeylElement& w) {
  std::map<Weight, std::set<Sequence>> memo;
  return detail::reduced_words_memo(datum, w.rho_image(), memo);
}

/// Number of reduced words, without materializing them.
inline std::uint64_t reduced_word_count(const CartanDatum& datum, const WeylElement& w) {
  std::map<Weight, std::uint64_t> memo;
  auto count = [&](auto&& self, const Weight& image) -> std::uint64_t {
    if (auto it = memo.find(image); it != memo.end()) return it->second;
    std::uint64_t total = 0;
    bool descended = false;
    for (int i = 1; i <= datum.rank(); ++i) {
      if (image[i] >= 0) continue;
      descended = true;
      total += self(self, reflect(datum, image, i));
    }
    if (!descended) total = 1;
    memo.emplace(image, total);
    return total;
  };
  return count(count, w.rho_image());
}

/// Order of s_i s_j.
inline int coxeter_order(const CartanDatum& datum, int i, int j) {
  if (i == j) return 1;
  switch (datum.a(i, j) * datum.a(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
  }
  throw Error("not a finite-type Cartan datum");
}

/// True when `word` contains a factor s_i s_j s_i ... of length m_ij >= 3.
inline bool contains_braid_factor(const CartanDatum& datum, const Sequence& word) {
  for (std::size_t k = 0; k + 1 < word.size(); ++k) {
    const int i = word[k];
    const int j = word[k + 1];
    if (i == j) continue;
    const auto m = static_cast<std::size_t>(coxeter_order(datum, i, j));
    if (m < 3 || k + m > word.size()) continue;
    bool alternating = true;
    for (std::size_t t = 0; t < m && alternating; ++t) alternating = word[k + t] == (t % 2 == 0 ? i : j);
    if (alternating) return true;
  }
  return false;
}

inline bool is_fully_commutative(const CartanDatum& datum, const WeylElement& w) {
  for (const auto& word : reduced_words(datum, w))
    if (contains_braid_factor(datum, word)) return false;
  return true;
}

/// Positive roots of the root system with Cartan matrix `m`, in simple-root
/// coordinates (reflection closure of the simple roots inside Q_+).
inline std::vector<RootVector> positive_roots(const IntMatrix& m) {
  const auto n = m.size();
  std::set<RootVector> seen;
  std::deque<RootVector> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    RootVector r{std::vector<int>(n, 0)};
    r.coeffs[i] = 1;
    seen.insert(r);
    frontier.push_back(r);
  }
  while (!frontier.empty()) {
    RootVector beta = frontier.front();
    frontier.pop_front();
    for (std::size_t j = 0; j < n; ++j) {
      int pair = 0;
      for (std::size_t k = 0; k < n; ++k) pair += m[j][k] * beta.coeffs[k];
      if (pair == 0) continue;
      RootVector gamma = beta;
      gamma.coeffs[j] -= pair;
      bool positive = true;
      for (int c : gamma.coeffs) positive = positive && c >= 0;
      if (!positive) continue;
      if (seen.insert(gamma).second) frontier.push_back(gamma);
    }
  }
  return {seen.begin(), seen.end()};
}

inline std::vector<RootVector> positive_roots(const CartanDatum& datum) { return positive_roots(datum.matrix()); }

/// Positive coroots in simple-coroot coordinates (roots of the transpose).
inline std::vector<RootVector> positive_coroots(const CartanDatum& datum) {
  IntMatrix t = datum.matrix();
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) t[i][j] = datum.matrix()[j][i];
  return positive_roots(t);
}

/// Lambda_i is minuscule iff <alpha^vee, Lambda_i> is in {0, 1} for every
/// positive coroot, i.e. no positive coroot has coefficient > 1 at node i.
inline bool satisfies_minuscule_criterion(const CartanDatum& datum, int i) {
  datum.check_node(i);
  for (const auto& c : positive_coroots(datum))
    if (c.coeffs[static_cast<std::size_t>(i - 1)] > 1) return false;
  return true;
}

}  // namespace minuscule
