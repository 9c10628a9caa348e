#include "hyparr/adjoint.hpp"

#include <algorithm>

namespace hyparr {

Arrangement linearize(const Arrangement& a, std::vector<std::vector<int>>* sources) {
  Arrangement lin;
  lin.dim = a.dim;
  lin.like = a.like;
  if (sources) sources->clear();
  for (int i = 0; i < a.size(); ++i) {
    Hyperplane<Rational> h = make_hyperplane<Rational>(a.hyperplanes[i].normal, Rational(0));
    bool found = false;
    for (int j = 0; j < lin.size(); ++j)
      if (lin.hyperplanes[j] == h) {
        if (sources) (*sources)[j].push_back(a.labels[i]);
        found = true;
        break;
      }
    if (!found) {
      lin.hyperplanes.push_back(std::move(h));
      lin.labels.push_back(lin.size());
      if (sources) sources->push_back({a.labels[i]});
    }
  }
  return lin;
}

void vertices_and_lines(const Arrangement& a, std::vector<Vec<Rational>>& vertices,
                        std::vector<Vec<Rational>>& lines) {
  if (!is_essential(a)) throw InputError("induced adjoint requires an essential arrangement");
  vertices.clear();
  lines.clear();
  SemiLattice lat = build_semilattice<Rational>(a);
  for (int i = 0; i < lat.size(); ++i)
    if (lat.dim_of(i) == 0) vertices.push_back(lat.flats[i].point);
  std::sort(vertices.begin(), vertices.end());

  Arrangement lin = linearize(a, nullptr);
  SemiLattice lat0 = build_semilattice<Rational>(lin);
  for (int i = 0; i < lat0.size(); ++i)
    if (lat0.dim_of(i) == 1) {
      Vec<Rational> dir = lat0.flats[i].basis[0];
      FieldOps<Rational>::make_canonical(dir, nullptr);
      lines.push_back(std::move(dir));
    }
  std::sort(lines.begin(), lines.end());
}

AdjointData induced_adjoint(const Arrangement& a) {
  AdjointData adj;
  adj.lin = linearize(a, &adj.lin_sources);
  vertices_and_lines(a, adj.vertices, adj.lines);
  const int d = a.dim;

  adj.tilde.dim = d + 1;
  adj.tilde.like = a.like;
  auto push_tilde = [&](Vec<Rational> normal, char kind, const Vec<Rational>& source) {
    Hyperplane<Rational> h = make_hyperplane<Rational>(std::move(normal), Rational(0));
    for (const auto& g : adj.tilde.hyperplanes)
      if (g == h) return;  // cannot happen between kinds; kept as a guard
    adj.tilde.hyperplanes.push_back(std::move(h));
    int label = adj.tilde.size();
    adj.tilde.labels.push_back(label);
    adj.provenance.push_back({kind, source});
    (kind == 'u' ? adj.part1 : adj.part0).push_back(label);
  };
  for (const auto& u : adj.lines) {
    Vec<Rational> n = u;
    n.push_back(Rational(0));
    push_tilde(std::move(n), 'u', u);
  }
  for (const auto& v : adj.vertices) {
    Vec<Rational> n = v;
    n.push_back(Rational(-1));
    push_tilde(std::move(n), 'v', v);
  }

  adj.sigma.dim = d;
  adj.sigma.like = a.like;
  for (const auto& u : adj.lines) {
    adj.sigma.hyperplanes.push_back(make_hyperplane<Rational>(u, Rational(0)));
    adj.sigma.labels.push_back(adj.sigma.size());
  }

  // bar(A): vertices as linear normals (zero vertex dropped), then the
  // adjoint members, first occurrence wins.
  adj.bar.dim = d;
  adj.bar.like = a.like;
  auto push_bar = [&](const Vec<Rational>& normal) {
    bool zero = true;
    for (const auto& x : normal)
      if (sgn(x) != 0) {
        zero = false;
        break;
      }
    if (zero) return;
    Hyperplane<Rational> h = make_hyperplane<Rational>(normal, Rational(0));
    for (const auto& g : adj.bar.hyperplanes)
      if (g == h) return;
    adj.bar.hyperplanes.push_back(std::move(h));
    adj.bar.labels.push_back(adj.bar.size());
  };
  for (const auto& v : adj.vertices) push_bar(v);
  for (const auto& u : adj.lines) push_bar(u);
  return adj;
}

}  // namespace hyparr
