#include "crystals/tropical.hpp"

namespace crystals::trop {

std::vector<std::vector<int64_t>> TropicalFunction::affine_pieces(
    size_t dim) const {
  if (!has_monomial_denominator())
    throw crystals::alg::internal_error(
        "affine_pieces requires a monomial denominator");
  const Exp& nu = vp_.minus.vertices().front();
  std::vector<std::vector<int64_t>> rows;
  rows.reserve(vp_.plus.vertices().size());
  for (const auto& mu : vp_.plus.vertices()) {
    std::vector<int64_t> row(dim, 0);
    Exp d = Exp::sub(mu, nu);
    for (size_t i = 0; i < d.e.size(); ++i) {
      if (d.e[i] == 0) continue;
      if (i >= dim)
        throw crystals::alg::internal_error(
            "affine_pieces: exponent beyond requested dimension");
      row[i] = d.e[i];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

TropicalFunction trop(const PosRF& f) {
  const RF& r = f.rf();
  return TropicalFunction({newton(r.num()), newton(r.den())});
}

TropicalMap trop_map(const std::vector<PosRF>& components) {
  std::vector<TropicalFunction> comps;
  comps.reserve(components.size());
  for (const auto& c : components) comps.push_back(trop(c));
  return TropicalMap(std::move(comps));
}

}  // namespace crystals::trop
