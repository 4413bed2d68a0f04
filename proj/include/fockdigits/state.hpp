#ifndef FOCKDIGITS_STATE_HPP
#define FOCKDIGITS_STATE_HPP

#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "fockdigits/error.hpp"
#include "fockdigits/register.hpp"
#include "fockdigits/tolerances.hpp"

namespace fockdigits {

using Complex = std::complex<double>;

// Sparse vector over the Fock basis. The empty map is the zero vector and
// stands for an annihilated state. Ordered storage keeps serialization and
// iteration deterministic.
class PureState {
 public:
  using AmplitudeMap = std::map<FockIndex, Complex>;

  explicit PureState(Natural dim) : m_dim(dim) {}

  static PureState zero(Natural dim) { return PureState(dim); }

  static PureState basis(Natural dim, FockIndex n) {
    PureState s(dim);
    s.set(n, Complex(1.0, 0.0));
    return s;
  }

  Natural dim() const { return m_dim; }
  const AmplitudeMap& amplitudes() const { return m_amp; }
  bool is_zero() const { return m_amp.empty(); }

  Complex amplitude(FockIndex n) const {
    auto it = m_amp.find(n);
    return it == m_amp.end() ? Complex(0.0, 0.0) : it->second;
  }

  void set(FockIndex n, Complex a) {
    check_index(n);
    if (a == Complex(0.0, 0.0)) {
      m_amp.erase(n);
    } else {
      m_amp[n] = a;
    }
  }

  void accumulate(FockIndex n, Complex a) {
    check_index(n);
    auto [it, inserted] = m_amp.try_emplace(n, a);
    if (!inserted) {
      it->second += a;
      if (it->second == Complex(0.0, 0.0)) {
        m_amp.erase(it);
      }
    }
  }

  PureState& operator+=(const PureState& other) {
    check_dim(other);
    for (const auto& [n, a] : other.m_amp) {
      accumulate(n, a);
    }
    return *this;
  }

  PureState& operator*=(Complex c) {
    if (c == Complex(0.0, 0.0)) {
      m_amp.clear();
      return *this;
    }
    for (auto& [n, a] : m_amp) {
      a *= c;
    }
    return *this;
  }

  friend PureState operator*(Complex c, PureState s) {
    s *= c;
    return s;
  }

  friend PureState operator+(PureState a, const PureState& b) {
    a += b;
    return a;
  }

  // <this|other>, conjugate-linear in *this.
  Complex inner(const PureState& other) const {
    check_dim(other);
    const bool other_smaller = other.m_amp.size() < m_amp.size();
    const AmplitudeMap& walk = other_smaller ? other.m_amp : m_amp;
    Complex sum(0.0, 0.0);
    for (const auto& [n, a] : walk) {
      if (other_smaller) {
        sum += std::conj(amplitude(n)) * a;
      } else {
        sum += std::conj(a) * other.amplitude(n);
      }
    }
    return sum;
  }

  double norm_squared() const {
    double s = 0.0;
    for (const auto& [n, a] : m_amp) {
      s += std::norm(a);
    }
    return s;
  }

  double norm() const { return std::sqrt(norm_squared()); }

  void prune(double eps) {
    for (auto it = m_amp.begin(); it != m_amp.end();) {
      if (std::abs(it->second) <= eps) {
        it = m_amp.erase(it);
      } else {
        ++it;
      }
    }
  }

  // If the state is a single basis vector (all other amplitudes below tol),
  // return its index and amplitude.
  std::optional<std::pair<FockIndex, Complex>> sole_component(
      double tol = kTol.state_purity) const {
    std::optional<std::pair<FockIndex, Complex>> found;
    for (const auto& [n, a] : m_amp) {
      if (std::abs(a) <= tol) {
        continue;
      }
      if (found) {
        return std::nullopt;
      }
      found = {n, a};
    }
    return found;
  }

 private:
  void check_index(FockIndex n) const {
    if (n >= m_dim) {
      throw Error(ErrorKind::OutOfRange,
                  "index " + std::to_string(n) + " not below dim " +
                      std::to_string(m_dim));
    }
  }

  void check_dim(const PureState& other) const {
    if (m_dim != other.m_dim) {
      throw Error(ErrorKind::DimMismatch,
                  "state dims " + std::to_string(m_dim) + " vs " +
                      std::to_string(other.m_dim));
    }
  }

  Natural m_dim;
  AmplitudeMap m_amp;
};

}  // namespace fockdigits

#endif  // FOCKDIGITS_STATE_HPP
