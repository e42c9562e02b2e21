#include "hexad/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hexad {

std::string to_string(const Simplex& s) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < s.size(); ++i) out << (i ? "," : "") << s[i];
  out << ")";
  return out.str();
}

namespace {

std::string summarize(const std::string& name, const std::vector<Violation>& vs) {
  std::ostringstream out;
  out << "invalid complex '" << name << "': ";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out << "; ";
    out << vs[i].message << " " << to_string(vs[i].simplex);
  }
  return out.str();
}

Simplex drop(const Simplex& s, std::size_t i) {
  Simplex f;
  f.reserve(s.size() - 1);
  for (std::size_t j = 0; j < s.size(); ++j)
    if (j != i) f.push_back(s[j]);
  return f;
}

}  // namespace

ValidationError::ValidationError(const std::string& complex_name, std::vector<Violation> violations)
    : std::runtime_error(summarize(complex_name, violations)), violations_(std::move(violations)) {}

std::vector<Violation> validate(std::size_t vertex_count, const std::vector<std::vector<Simplex>>& simplices_by_dim) {
  std::vector<Violation> out;
  std::vector<std::set<Simplex>> present(simplices_by_dim.size());
  for (std::size_t k = 0; k < simplices_by_dim.size(); ++k) {
    const auto& list = simplices_by_dim[k];
    for (std::size_t i = 0; i < list.size(); ++i) {
      const Simplex& s = list[i];
      if (s.size() != k + 1) {
        out.push_back({s, "wrong vertex count for a " + std::to_string(k) + "-simplex"});
        continue;
      }
      if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
        out.push_back({s, "vertices not strictly increasing"});
      for (int v : s)
        if (v < 0 || static_cast<std::size_t>(v) >= vertex_count)
          out.push_back({s, "unknown vertex " + std::to_string(v) + " in"});
      if (i > 0 && !(list[i - 1] < s)) {
        if (list[i - 1] == s)
          out.push_back({s, "duplicate simplex"});
        else
          out.push_back({s, "simplex list not sorted at"});
      }
      present[k].insert(s);
    }
  }
  if (simplices_by_dim.empty() || simplices_by_dim[0].size() != vertex_count ||
      present[0].size() != vertex_count) {
    for (std::size_t v = 0; v < vertex_count; ++v)
      if (present.empty() || !present[0].count(Simplex{static_cast<int>(v)}))
        out.push_back({Simplex{static_cast<int>(v)}, "missing vertex simplex"});
  }
  for (std::size_t k = 1; k < simplices_by_dim.size(); ++k) {
    if (simplices_by_dim[k].empty()) out.push_back({Simplex{}, "empty simplex list below the top dimension"});
    for (const Simplex& s : simplices_by_dim[k]) {
      if (s.size() != k + 1) continue;
      for (std::size_t i = 0; i < s.size(); ++i) {
        const Simplex f = drop(s, i);
        if (!present[k - 1].count(f))
          out.push_back({s, "missing face " + to_string(f) + " of"});
      }
    }
  }
  return out;
}

SimplicialComplex::SimplicialComplex(std::string name, std::size_t vertex_count,
                                     std::vector<std::vector<Simplex>> simplices_by_dim)
    : name_(std::move(name)) {
  while (!simplices_by_dim.empty() && simplices_by_dim.back().empty()) simplices_by_dim.pop_back();
  if (auto violations = validate(vertex_count, simplices_by_dim); !violations.empty())
    throw ValidationError(name_, std::move(violations));

  for (std::size_t v = 0; v < vertex_count; ++v) vertex_labels_.push_back(std::to_string(v));
  simplices_ = std::move(simplices_by_dim);
  index_.resize(simplices_.size());
  for (std::size_t k = 0; k < simplices_.size(); ++k)
    for (std::size_t i = 0; i < simplices_[k].size(); ++i) index_[k].emplace(simplices_[k][i], i);

  const int dim = dimension();
  for (int k = 1; k <= dim; ++k) {
    IntMatrix b(count(k - 1), count(k));
    const auto& cols = simplices(k);
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < cols[j].size(); ++i) {
        const std::size_t row = index_[k - 1].at(drop(cols[j], i));
        b(row, j) = (i % 2 == 0) ? 1 : -1;
      }
    boundary_.push_back(std::move(b));
  }
  for (int k = -1; k <= dim; ++k) {
    if (k >= 0 && k < dim)
      coboundary_.push_back(boundary_[k].transpose());
    else
      coboundary_.emplace_back(count(k + 1), count(k));
  }
}

SimplicialComplex SimplicialComplex::from_facets(std::string name, std::size_t vertex_count,
                                                 const std::vector<Simplex>& facets) {
  std::vector<Violation> problems;
  std::vector<std::set<Simplex>> faces(1);
  for (std::size_t v = 0; v < vertex_count; ++v) faces[0].insert(Simplex{static_cast<int>(v)});
  std::set<Simplex> seen;
  for (Simplex f : facets) {
    if (f.empty()) {
      problems.push_back({f, "empty facet"});
      continue;
    }
    std::sort(f.begin(), f.end());
    if (std::adjacent_find(f.begin(), f.end()) != f.end()) {
      problems.push_back({f, "repeated vertex in facet"});
      continue;
    }
    if (!seen.insert(f).second) {
      problems.push_back({f, "duplicate facet"});
      continue;
    }
    // Every face with at least two vertices; single vertices come from vertex_count.
    const std::size_t n = f.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(f[i]);
      if (s.size() < 2) continue;
      if (faces.size() < s.size()) faces.resize(s.size());
      faces[s.size() - 1].insert(std::move(s));
    }
  }
  if (!problems.empty()) throw ValidationError(name, std::move(problems));
  std::vector<std::vector<Simplex>> lists;
  for (auto& layer : faces) lists.emplace_back(layer.begin(), layer.end());
  return SimplicialComplex(std::move(name), vertex_count, std::move(lists));
}

std::size_t SimplicialComplex::count(int k) const noexcept {
  if (k < 0 || k > dimension()) return 0;
  return simplices_[static_cast<std::size_t>(k)].size();
}

const std::vector<Simplex>& SimplicialComplex::simplices(int k) const noexcept {
  static const std::vector<Simplex> none;
  if (k < 0 || k > dimension()) return none;
  return simplices_[static_cast<std::size_t>(k)];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  if (s.empty() || s.size() > simplices_.size()) return std::nullopt;
  const auto& idx = index_[s.size() - 1];
  auto it = idx.find(s);
  if (it == idx.end()) return std::nullopt;
  return it->second;
}

std::vector<Simplex> SimplicialComplex::facets() const {
  std::vector<Simplex> out;
  for (int k = 0; k <= dimension(); ++k)
    for (std::size_t j = 0; j < count(k); ++j) {
      bool maximal = true;
      if (k < dimension()) {
        const IntMatrix& cob = coboundary_matrix(k);
        for (std::size_t i = 0; i < cob.rows() && maximal; ++i)
          if (cob(i, j) != 0) maximal = false;
      }
      if (maximal) out.push_back(simplices(k)[j]);
    }
  return out;
}

const IntMatrix& SimplicialComplex::boundary_matrix(int k) const {
  if (k < 1 || k > dimension())
    throw std::out_of_range("boundary_matrix: degree " + std::to_string(k) + " outside 1.." +
                            std::to_string(dimension()));
  return boundary_[static_cast<std::size_t>(k - 1)];
}

const IntMatrix& SimplicialComplex::coboundary_matrix(int k) const {
  if (k < -1 || k > dimension()) return empty_;
  return coboundary_[static_cast<std::size_t>(k + 1)];
}

}  // namespace hexad
