#pragma once

// Combinatorial model of a Fermat quasi-homogeneous polynomial: degree d,
// weights w_j, charges q_j = w_j / d, the narrow sector and the pairing on
// the state space spanned by phi_0, ..., phi_{d-1}.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "kwall/errors.hpp"
#include "kwall/rational.hpp"

namespace kwall {

class FermatModel {
 public:
  /// Validates w_j | d for every j and gcd(w_1, ..., w_N, d) = 1.
  FermatModel(int d, std::vector<int> weights, std::string name = "");

  int d() const { return d_; }
  const std::vector<int>& weights() const { return weights_; }
  const std::string& name() const { return name_; }
  int size() const { return static_cast<int>(weights_.size()); }

  Rat charge(int j) const { return make_rat(weights_.at(j), d_); }
  /// q = sum_j q_j.
  Rat total_charge() const;
  /// d / w_j.
  int period(int j) const { return d_ / weights_.at(j); }

  friend bool operator==(const FermatModel&, const FermatModel&) = default;

 private:
  int d_;
  std::vector<int> weights_;
  std::string name_;
};

class NarrowSector {
 public:
  explicit NarrowSector(std::vector<int> indices) : indices_(std::move(indices)) {}
  const std::vector<int>& indices() const { return indices_; }
  bool contains(int k) const;
  std::size_t size() const { return indices_.size(); }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

 private:
  std::vector<int> indices_;
};

/// k with <q_j (k+1)> != 0 for all j.
NarrowSector narrow_set(const FermatModel& model);
bool is_narrow(const FermatModel& model, int k);

/// (phi_i, phi_j) = 1 if i + j = d - 2 else 0; both indices must be narrow.
Rat pairing(const FermatModel& model, int i, int j);
/// d - 2 - k for narrow k.
int dual_index(const FermatModel& model, int k);
/// phi_i * phi_j = phi_{(i + j) mod d}.
int mult_index(const FermatModel& model, int i, int j);
/// (s, r) with l = s * (d / w_j) + r and 0 <= r < d / w_j.
std::pair<int, int> split_l(const FermatModel& model, int l, int j);

inline bool is_zero_value(const Rat& r) { return r == 0; }
template <class S>
  requires requires(const S& s) { s.is_zero(); }
bool is_zero_value(const S& s) {
  return s.is_zero();
}

/// Vector in the extended state space with coefficients in S. Zero entries
/// are never stored.
template <class S>
class StateVector {
 public:
  StateVector() = default;
  StateVector(int k, S value) { set(k, std::move(value)); }

  void set(int k, S value) {
    if (is_zero_value(value))
      c_.erase(k);
    else
      c_[k] = std::move(value);
  }
  void add(int k, const S& value) {
    auto it = c_.find(k);
    if (it == c_.end()) {
      set(k, value);
      return;
    }
    it->second += value;
    if (is_zero_value(it->second)) c_.erase(it);
  }
  const S* get(int k) const {
    auto it = c_.find(k);
    return it == c_.end() ? nullptr : &it->second;
  }
  bool is_zero() const { return c_.empty(); }
  const std::map<int, S>& components() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  StateVector& operator+=(const StateVector& o) {
    for (const auto& [k, v] : o.c_) add(k, v);
    return *this;
  }
  StateVector& operator-=(const StateVector& o) {
    for (const auto& [k, v] : o.c_) add(k, S(-v));
    return *this;
  }
  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  StateVector operator-() const {
    StateVector r;
    for (const auto& [k, v] : c_) r.c_[k] = S(-v);
    return r;
  }
  template <class T>
  StateVector scaled(const T& s) const {
    StateVector r;
    for (const auto& [k, v] : c_) r.set(k, S(v * s));
    return r;
  }
  /// Applies f to every component.
  template <class F>
  StateVector map(F&& f) const {
    StateVector r;
    for (const auto& [k, v] : c_) r.set(k, f(v));
    return r;
  }
  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  std::map<int, S> c_;
};

/// Product in the extended ring: (sum a_i phi_i)(sum b_j phi_j).
template <class S>
StateVector<S> multiply(const FermatModel& model, const StateVector<S>& a,
                        const StateVector<S>& b) {
  StateVector<S> out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) out.add(mult_index(model, i, j), S(x * y));
  return out;
}

/// Throws ValidationError unless every stored index is narrow.
template <class S>
void require_narrow(const FermatModel& model, const StateVector<S>& v) {
  for (const auto& [k, value] : v)
    if (!is_narrow(model, k))
      throw ValidationError("state index " + std::to_string(k) + " is not narrow");
}

/// sum_k v_k * w_{d-2-k}; both supports must be narrow.
template <class S>
S pair_vectors(const FermatModel& model, const StateVector<S>& v, const StateVector<S>& w,
               S zero) {
  require_narrow(model, v);
  require_narrow(model, w);
  S acc = std::move(zero);
  for (const auto& [k, a] : v) {
    if (const S* b = w.get(dual_index(model, k))) acc += S(a * (*b));
  }
  return acc;
}

}  // namespace kwall
