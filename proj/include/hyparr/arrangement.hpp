#pragma once

#include <string>
#include <vector>

#include "hyparr/flat.hpp"

namespace hyparr {

template <class F>
struct Hyperplane {
  Vec<F> normal;  // canonical: over Q primitive integer with positive leading
                  // nonzero entry, over F_p leading nonzero entry 1
  F offset;

  bool degenerate() const {
    for (const auto& x : normal)
      if (!FieldOps<F>::is_zero(x)) return false;
    return true;
  }
  friend bool operator==(const Hyperplane& a, const Hyperplane& b) {
    return a.normal == b.normal && a.offset == b.offset;
  }
  friend bool operator!=(const Hyperplane& a, const Hyperplane& b) { return !(a == b); }
};

template <class F>
Hyperplane<F> make_hyperplane(Vec<F> normal, F offset) {
  FieldOps<F>::make_canonical(normal, &offset);
  return {std::move(normal), std::move(offset)};
}

// Degenerate additions are tracked as a flag: the hyperplane list itself only
// ever holds genuine hyperplanes.
enum class Degenerate { None, AmbientMember, EmptyHyperplane };

template <class F>
struct ArrangementT {
  int dim = 0;
  std::vector<Hyperplane<F>> hyperplanes;
  std::vector<int> labels;  // parallel to hyperplanes; 1..m unless inherited
  Degenerate degenerate = Degenerate::None;
  bool multi = false;  // restriction images may repeat hyperplanes
  F like{};            // field context, needed when the list is empty

  int size() const { return static_cast<int>(hyperplanes.size()); }
  int position_of_label(int label) const {
    for (int i = 0; i < size(); ++i)
      if (labels[i] == label) return i;
    throw InputError("unknown label " + std::to_string(label));
  }
};

// Strict constructor for input arrangements: rejects degenerate normals and
// duplicate hyperplanes (after canonicalization), assigns labels 1..m.
template <class F>
ArrangementT<F> make_arrangement(int dim, const std::vector<std::pair<Vec<F>, F>>& rows,
                                 const F& like) {
  if (dim < 1) throw InputError("dimension must be positive");
  ArrangementT<F> a;
  a.dim = dim;
  a.like = like;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].first.size()) != dim)
      throw InputError("hyperplanes[" + std::to_string(i) + "]: normal has wrong length");
    Hyperplane<F> h = make_hyperplane<F>(rows[i].first, rows[i].second);
    if (h.degenerate())
      throw InputError("hyperplanes[" + std::to_string(i) + "]: zero normal");
    for (const auto& g : a.hyperplanes)
      if (g == h)
        throw InputError("hyperplanes[" + std::to_string(i) + "]: duplicate hyperplane");
    a.hyperplanes.push_back(std::move(h));
    a.labels.push_back(static_cast<int>(i) + 1);
  }
  return a;
}

// Multi-arrangement constructor used by restrictions: duplicates allowed,
// labels inherited from the parent.
template <class F>
ArrangementT<F> make_multi(int dim, std::vector<Hyperplane<F>> hs, std::vector<int> labels,
                           const F& like) {
  if (hs.size() != labels.size()) throw std::invalid_argument("make_multi: label mismatch");
  ArrangementT<F> a;
  a.dim = dim;
  a.like = like;
  a.hyperplanes = std::move(hs);
  a.labels = std::move(labels);
  a.multi = true;
  for (const auto& h : a.hyperplanes)
    if (h.degenerate()) throw std::invalid_argument("make_multi: degenerate hyperplane");
  return a;
}

template <class F>
Mat<F> normal_matrix(const ArrangementT<F>& a) {
  Mat<F> m;
  m.reserve(a.hyperplanes.size());
  for (const auto& h : a.hyperplanes) m.push_back(h.normal);
  return m;
}

template <class F>
bool is_essential(const ArrangementT<F>& a) {
  return rank_of_rows<F>(normal_matrix(a)) == a.dim;
}

template <class F>
bool is_linear(const ArrangementT<F>& a) {
  for (const auto& h : a.hyperplanes)
    if (!FieldOps<F>::is_zero(h.offset)) return false;
  return true;
}

using Arrangement = ArrangementT<Rational>;

}  // namespace hyparr
