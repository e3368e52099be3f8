#include "kwall/statespace.hpp"

#include <algorithm>
#include <numeric>

namespace kwall {

FermatModel::FermatModel(int d, std::vector<int> weights, std::string name)
    : d_(d), weights_(std::move(weights)), name_(std::move(name)) {
  if (d_ < 1) throw ValidationError("degree d must be positive");
  if (weights_.empty()) throw ValidationError("model needs at least one weight");
  int g = d_;
  for (int w : weights_) {
    if (w < 1) throw ValidationError("weights must be positive");
    if (d_ % w != 0)
      throw ValidationError("not Fermat: weight " + std::to_string(w) +
                            " does not divide d = " + std::to_string(d_));
    g = std::gcd(g, w);
  }
  if (g != 1) throw ValidationError("gcd(w_1, ..., w_N, d) must be 1");
}

Rat FermatModel::total_charge() const {
  Rat q = 0;
  for (int j = 0; j < size(); ++j) q += charge(j);
  return q;
}

bool NarrowSector::contains(int k) const {
  return std::binary_search(indices_.begin(), indices_.end(), k);
}

bool is_narrow(const FermatModel& model, int k) {
  if (k < 0 || k >= model.d()) return false;
  for (int j = 0; j < model.size(); ++j)
    if (frac(model.charge(j) * (k + 1)) == 0) return false;
  return true;
}

NarrowSector narrow_set(const FermatModel& model) {
  std::vector<int> out;
  for (int k = 0; k < model.d(); ++k)
    if (is_narrow(model, k)) out.push_back(k);
  return NarrowSector(std::move(out));
}

namespace {

void require_narrow_index(const FermatModel& model, int k) {
  if (!is_narrow(model, k))
    throw ValidationError("state index " + std::to_string(k) + " is not narrow");
}

}  // namespace

Rat pairing(const FermatModel& model, int i, int j) {
  require_narrow_index(model, i);
  require_narrow_index(model, j);
  return i + j == model.d() - 2 ? Rat(1) : Rat(0);
}

int dual_index(const FermatModel& model, int k) {
  require_narrow_index(model, k);
  return model.d() - 2 - k;
}

int mult_index(const FermatModel& model, int i, int j) {
  const int d = model.d();
  if (i < 0 || i >= d || j < 0 || j >= d)
    throw ValidationError("state index out of range");
  return (i + j) % d;
}

std::pair<int, int> split_l(const FermatModel& model, int l, int j) {
  if (l < 0 || l >= model.d()) throw ValidationError("light index must lie in [0, d-1]");
  const int p = model.period(j);
  return {l / p, l % p};
}

}  // namespace kwall
