#include "bps/resolution.hpp"

#include <sstream>

#include "bps/errors.hpp"

namespace bps {

BettiTable FreeResolution::betti() const {
  BettiTable b;
  b.ranks.resize(modules.size());
  for (std::size_t i = 0; i < modules.size(); ++i)
    for (int s : modules[i].shifts) b.ranks[i][s]++;
  return b;
}

std::string BettiTable::csv() const {
  std::ostringstream os;
  os << "homological_degree,internal_degree,rank\n";
  for (std::size_t i = 0; i < ranks.size(); ++i)
    for (auto& [d, k] : ranks[i]) os << i << ',' << d << ',' << k << '\n';
  return os.str();
}

FreeResolution minimal_free_resolution(const GradedPresentation& p,
                                       int max_len, const GBLimits& lim) {
  FreeResolution res;
  res.ring = p.ring;

  GradedPresentation q = minimalize(p);
  res.modules.push_back(q.target);
  if (q.relations.empty()) {
    res.minimal = true;
    res.complete = true;
    return res;
  }

  // Thin the relation columns to a minimal generating set of the image.
  std::vector<Vec> cols;
  for (int i : minimal_generator_indices(p.ring, q.relations, q.target, lim))
    cols.push_back(q.relations[i]);

  int step = 0;
  res.complete = true;
  while (!cols.empty()) {
    FreeModule src;
    for (const Vec& c : cols)
      src.shifts.push_back(vec_degree_homog(c, res.modules.back()));
    res.mats.push_back(cols);
    res.modules.push_back(std::move(src));
    ++step;
    if (step >= max_len) {
      res.complete = false;
      break;
    }

    std::vector<Vec> ker =
        kernel(p.ring, res.mats.back(), res.modules[res.modules.size() - 2],
               lim);
    cols.clear();
    if (ker.empty()) break;
    for (int i : minimal_generator_indices(p.ring, ker, res.modules.back(),
                                           lim))
      cols.push_back(ker[i]);
  }

  res.minimal = resolution_is_minimal(res);
  return res;
}

HilbertSeries hilbert_series(const GradedPresentation& p, const GBLimits& lim) {
  FreeResolution res = minimal_free_resolution(p, p.ring.n + 2, lim);
  Laurent num;
  int sign = 1;
  for (const FreeModule& f : res.modules) {
    for (int s : f.shifts) num.add_term(s, Integer(sign));
    sign = -sign;
  }
  return HilbertSeries{num, p.ring.n};
}

bool resolution_composition_is_zero(const FreeResolution& res) {
  for (std::size_t k = 1; k < res.mats.size(); ++k)
    for (const Vec& col : res.mats[k])
      if (!apply_columns(res.ring, res.mats[k - 1], col).is_zero())
        return false;
  return true;
}

bool resolution_is_minimal(const FreeResolution& res) {
  for (const auto& mat : res.mats)
    for (const Vec& col : mat)
      for (const MTerm& t : col.t)
        if (t.m.total() == 0) return false;
  return true;
}

}  // namespace bps
