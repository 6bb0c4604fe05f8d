#include "t237/config.hpp"

#include <set>
#include <stdexcept>

namespace t237 {

CurveConfig::CurveConfig(std::vector<std::string> names, std::vector<long> selfint,
                         const std::vector<std::pair<int, int>>& edges)
    : names_(std::move(names)), selfint_(std::move(selfint)) {
  if (names_.empty()) throw std::invalid_argument("CurveConfig: no curves");
  if (names_.size() != selfint_.size())
    throw std::invalid_argument("CurveConfig: names/selfint size mismatch");
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw std::invalid_argument("CurveConfig: duplicate labels");
  adjacency_.assign(rank(), std::vector<long>(rank(), 0));
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= rank() || j >= rank())
      throw std::invalid_argument("CurveConfig: edge index out of range");
    if (i == j) throw std::invalid_argument("CurveConfig: self-edge");
    ++adjacency_[i][j];
    ++adjacency_[j][i];
  }
}

int CurveConfig::index_of(const std::string& name) const {
  for (int i = 0; i < rank(); ++i)
    if (names_[i] == name) return i;
  throw std::invalid_argument("CurveConfig: unknown label \"" + name + "\"");
}

QMatrix CurveConfig::gram() const {
  QMatrix m(rank(), rank());
  for (int i = 0; i < rank(); ++i) {
    m.at(i, i) = Rational(selfint_[i]);
    for (int j = 0; j < rank(); ++j)
      if (i != j) m.at(i, j) = Rational(adjacency_[i][j]);
  }
  return m;
}

QDivisor::QDivisor(std::map<std::string, Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
}

QDivisor QDivisor::single(const std::string& name, const Rational& c) {
  QDivisor d;
  d.set(name, c);
  return d;
}

Rational QDivisor::coeff(const std::string& name) const {
  auto it = coeffs_.find(name);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void QDivisor::set(const std::string& name, const Rational& c) {
  if (c.is_zero())
    coeffs_.erase(name);
  else
    coeffs_[name] = c;
}

QDivisor operator+(const QDivisor& a, const QDivisor& b) {
  QDivisor out = a;
  for (const auto& [name, c] : b.coeffs_) out.set(name, out.coeff(name) + c);
  return out;
}

QDivisor operator*(const Rational& c, const QDivisor& d) {
  QDivisor out;
  if (c.is_zero()) return out;
  for (const auto& [name, v] : d.coeffs_) out.set(name, c * v);
  return out;
}

namespace {

std::vector<int> contracted_indices(const CurveConfig& config,
                                    const std::vector<std::string>& contracted) {
  std::vector<int> idx;
  std::set<int> seen;
  for (const auto& name : contracted) {
    int i = config.index_of(name);
    if (!seen.insert(i).second)
      throw std::invalid_argument("pullback: repeated contracted label \"" + name + "\"");
    idx.push_back(i);
  }
  return idx;
}

QDivisor solve_exceptional_part(const CurveConfig& config, const std::vector<int>& idx,
                                const std::vector<Rational>& rhs) {
  QMatrix sub = config.gram().submatrix(idx, idx);
  if (!sub.is_negative_definite())
    throw std::domain_error("pullback: contracted Gram block is not negative definite");
  std::vector<Rational> v = sub.solve(rhs);
  QDivisor out;
  for (size_t k = 0; k < idx.size(); ++k) out.set(config.names()[idx[k]], v[k]);
  return out;
}

}  // namespace

QDivisor pullback(const CurveConfig& config, const std::vector<std::string>& contracted,
                  const QDivisor& strict) {
  std::vector<int> idx = contracted_indices(config, contracted);
  for (const auto& [name, c] : strict.coeffs()) {
    (void)c;
    int i = config.index_of(name);
    for (int k : idx)
      if (k == i)
        throw std::invalid_argument("pullback: strict part meets contracted curve \"" + name +
                                    "\"");
  }
  QMatrix gram = config.gram();
  std::vector<Rational> rhs(idx.size());
  for (size_t k = 0; k < idx.size(); ++k) {
    Rational pairing(0);
    for (const auto& [name, c] : strict.coeffs()) pairing += c * gram.at(config.index_of(name), idx[k]);
    rhs[k] = -pairing;
  }
  return strict + solve_exceptional_part(config, idx, rhs);
}

QDivisor pullback_canonical(const CurveConfig& config, const std::vector<std::string>& contracted,
                            const QDivisor& k_rep) {
  std::vector<int> idx = contracted_indices(config, contracted);
  QMatrix gram = config.gram();
  std::vector<Rational> rhs(idx.size());
  for (size_t k = 0; k < idx.size(); ++k) {
    Rational k_dot_e = Rational(-2 - config.selfint(idx[k]));  // adjunction on rational curves
    if (!k_rep.is_zero()) {
      Rational via_gram(0);
      for (const auto& [name, c] : k_rep.coeffs()) {
        int i = config.index_of(name);
        if (i == idx[k])
          throw std::invalid_argument("pullback_canonical: K representative meets contracted curve");
        via_gram += c * gram.at(i, idx[k]);
      }
      if (via_gram != k_dot_e)
        throw std::invalid_argument(
            "pullback_canonical: K representative disagrees with adjunction on \"" +
            config.names()[idx[k]] + "\"");
    }
    rhs[k] = -k_dot_e;
  }
  return k_rep + solve_exceptional_part(config, idx, rhs);
}

Rational intersect(const CurveConfig& config, const QDivisor& a, const QDivisor& b) {
  QMatrix gram = config.gram();
  Rational acc(0);
  for (const auto& [na, ca] : a.coeffs())
    for (const auto& [nb, cb] : b.coeffs())
      acc += ca * cb * gram.at(config.index_of(na), config.index_of(nb));
  return acc;
}

Rational self_intersection(const CurveConfig& config, const QDivisor& d) {
  return intersect(config, d, d);
}

}  // namespace t237
