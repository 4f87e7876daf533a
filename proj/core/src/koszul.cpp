#include "bps/koszul.hpp"

#include <map>

#include "bps/errors.hpp"

namespace bps {

namespace {

void check_data(const KoszulData& data) {
  if (data.r < 1 || data.r > kMaxRank)
    throw BadInput("koszul: rank out of range");
  if (data.b < 1) throw BadInput("koszul: exponent b must be >= 1");
}

}  // namespace

std::vector<Vec> koszul_differential(int k, const KoszulData& data) {
  check_data(data);
  if (k < 1 || k > data.r + 1)
    throw BadInput("koszul_differential: k out of range");
  const PolyRing ring = data.ring();
  std::map<Mask, int> pos;
  {
    int i = 0;
    for (Mask m : data.basis(k - 1)) pos[m] = i++;
  }
  std::vector<Vec> cols;
  for (Mask J : data.basis(k)) {
    std::vector<MTerm> terms;
    for (int j : elements(J)) {
      const Mask rest = J & ~(Mask{1} << (j - 1));
      const int sgn = shuffle_sign(Mask{1} << (j - 1), rest);
      terms.push_back({Monomial::var(j - 1, data.b), pos.at(rest),
                       Rational(sgn)});
    }
    cols.push_back(vec_normalize(ring, std::move(terms)));
  }
  return cols;
}

GradedPresentation koszul_syzygy_presentation(int k, const KoszulData& data) {
  check_data(data);
  if (k < 0 || k > data.r + 1)
    throw BadInput("koszul_syzygy_presentation: k out of range");
  const PolyRing ring = data.ring();
  if (k == data.r + 1)
    return free_presentation(ring, FreeModule::trivial(0));
  FreeModule target =
      FreeModule::trivial(static_cast<int>(data.basis(k).size()));
  if (k == data.r) return free_presentation(ring, target);
  return make_presentation(ring, target, koszul_differential(k + 1, data));
}

}  // namespace bps
