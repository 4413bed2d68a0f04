#ifndef FOCKDIGITS_LINEAR_OPERATOR_HPP
#define FOCKDIGITS_LINEAR_OPERATOR_HPP

#include <complex>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "fockdigits/error.hpp"
#include "fockdigits/state.hpp"
#include "fockdigits/tolerances.hpp"

namespace fockdigits {

// Row-major square complex matrix, used only for materialized operators.
class DenseMatrix {
 public:
  explicit DenseMatrix(Natural dim)
      : m_dim(dim), m_entries(static_cast<std::size_t>(dim * dim)) {}

  Natural dim() const { return m_dim; }

  Complex& at(Natural row, Natural col) {
    return m_entries[static_cast<std::size_t>(row * m_dim + col)];
  }
  const Complex& at(Natural row, Natural col) const {
    return m_entries[static_cast<std::size_t>(row * m_dim + col)];
  }

  DenseMatrix conjugate_transpose() const {
    DenseMatrix out(m_dim);
    for (Natural r = 0; r < m_dim; ++r) {
      for (Natural c = 0; c < m_dim; ++c) {
        out.at(c, r) = std::conj(at(r, c));
      }
    }
    return out;
  }

  PureState multiply(const PureState& psi) const {
    if (psi.dim() != m_dim) {
      throw Error(ErrorKind::DimMismatch, "matrix-vector dims differ");
    }
    PureState out(m_dim);
    for (Natural r = 0; r < m_dim; ++r) {
      Complex sum(0.0, 0.0);
      for (const auto& [c, a] : psi.amplitudes()) {
        sum += at(r, c) * a;
      }
      if (sum != Complex(0.0, 0.0)) {
        out.set(r, sum);
      }
    }
    return out;
  }

 private:
  Natural m_dim;
  std::vector<Complex> m_entries;
};

namespace detail {

struct MatrixCache {
  std::once_flag flag;
  std::unique_ptr<const DenseMatrix> matrix;
};

}  // namespace detail

// An operator is its action on basis columns; a dense matrix is assembled
// on demand and memoized write-once, so infinite-register operators stay
// lazy while small ones can be inspected entrywise.
class LinearOperator {
 public:
  using ColumnAction = std::function<PureState(FockIndex)>;

  LinearOperator(Natural dim, ColumnAction column)
      : m_dim(dim),
        m_column(std::move(column)),
        m_cache(std::make_shared<detail::MatrixCache>()) {}

  static LinearOperator identity(Natural dim) {
    return LinearOperator(dim, [dim](FockIndex j) { return PureState::basis(dim, j); });
  }

  static LinearOperator zero(Natural dim) {
    return LinearOperator(dim, [dim](FockIndex) { return PureState::zero(dim); });
  }

  static LinearOperator diagonal(Natural dim, std::function<Complex(FockIndex)> entry) {
    return LinearOperator(dim, [dim, entry = std::move(entry)](FockIndex j) {
      PureState s(dim);
      s.set(j, entry(j));
      return s;
    });
  }

  static LinearOperator from_matrix(DenseMatrix matrix) {
    auto shared = std::make_shared<const DenseMatrix>(std::move(matrix));
    const Natural dim = shared->dim();
    LinearOperator op(dim, [shared, dim](FockIndex j) {
      PureState s(dim);
      for (Natural r = 0; r < dim; ++r) {
        const Complex& a = shared->at(r, j);
        if (a != Complex(0.0, 0.0)) {
          s.set(r, a);
        }
      }
      return s;
    });
    return op;
  }

  Natural dim() const { return m_dim; }

  PureState column(FockIndex j) const {
    if (j >= m_dim) {
      throw Error(ErrorKind::OutOfRange, "column index out of range");
    }
    return m_column(j);
  }

  PureState apply(const PureState& psi) const {
    if (psi.dim() != m_dim) {
      throw Error(ErrorKind::DimMismatch,
                  "operator dim " + std::to_string(m_dim) + " vs state dim " +
                      std::to_string(psi.dim()));
    }
    PureState out(m_dim);
    for (const auto& [j, a] : psi.amplitudes()) {
      PureState col = m_column(j);
      for (const auto& [r, c] : col.amplitudes()) {
        out.accumulate(r, a * c);
      }
    }
    return out;
  }

  // Lvalue-only: the reference lives inside this operator's cache, so
  // materializing a temporary would dangle.
  const DenseMatrix& materialize(Natural cap = kDefaultMatrixCap) const& {
    if (m_dim > cap) {
      throw Error(ErrorKind::DimTooLarge,
                  "dim " + std::to_string(m_dim) + " above matrix cap " +
                      std::to_string(cap));
    }
    std::call_once(m_cache->flag, [this] {
      auto mat = std::make_unique<DenseMatrix>(m_dim);
      for (Natural j = 0; j < m_dim; ++j) {
        PureState col = m_column(j);
        for (const auto& [r, a] : col.amplitudes()) {
          mat->at(r, j) = a;
        }
      }
      m_cache->matrix = std::move(mat);
    });
    return *m_cache->matrix;
  }

  const DenseMatrix& materialize(Natural cap = kDefaultMatrixCap) const&& = delete;

  // Conjugate transpose of the materialized matrix.
  LinearOperator adjoint(Natural cap = kDefaultMatrixCap) const {
    return from_matrix(materialize(cap).conjugate_transpose());
  }

 private:
  Natural m_dim;
  ColumnAction m_column;
  std::shared_ptr<detail::MatrixCache> m_cache;
};

namespace detail {

inline void check_same_dim(const LinearOperator& a, const LinearOperator& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimMismatch,
                "operator dims " + std::to_string(a.dim()) + " vs " +
                    std::to_string(b.dim()));
  }
}

}  // namespace detail

// (A o B)(psi) = A(B(psi)).
inline LinearOperator compose(const LinearOperator& a, const LinearOperator& b) {
  detail::check_same_dim(a, b);
  return LinearOperator(a.dim(),
                        [a, b](FockIndex j) { return a.apply(b.column(j)); });
}

inline LinearOperator add(const LinearOperator& a, const LinearOperator& b) {
  detail::check_same_dim(a, b);
  return LinearOperator(a.dim(), [a, b](FockIndex j) {
    PureState s = a.column(j);
    s += b.column(j);
    return s;
  });
}

inline LinearOperator scale(Complex c, const LinearOperator& a) {
  return LinearOperator(a.dim(), [c, a](FockIndex j) {
    PureState s = a.column(j);
    s *= c;
    return s;
  });
}

// AB - BA, assembled as a dense matrix.
inline LinearOperator commutator(const LinearOperator& a, const LinearOperator& b,
                                 Natural cap = kDefaultMatrixCap) {
  detail::check_same_dim(a, b);
  const LinearOperator forward = compose(a, b);
  const LinearOperator backward = compose(b, a);
  const DenseMatrix& ab = forward.materialize(cap);
  const DenseMatrix& ba = backward.materialize(cap);
  DenseMatrix out(ab.dim());
  for (Natural r = 0; r < ab.dim(); ++r) {
    for (Natural c = 0; c < ab.dim(); ++c) {
      out.at(r, c) = ab.at(r, c) - ba.at(r, c);
    }
  }
  return LinearOperator::from_matrix(std::move(out));
}

inline PureState apply(const LinearOperator& a, const PureState& psi) {
  return a.apply(psi);
}

}  // namespace fockdigits

#endif  // FOCKDIGITS_LINEAR_OPERATOR_HPP
