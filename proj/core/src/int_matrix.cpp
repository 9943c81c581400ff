#include <sstream>

#include "csamot/matrix.hpp"

namespace csamot {

Integer det_exact(const IntMatrix& input) {
  if (!input.is_square()) throw Error(ErrorKind::NonSquare, "det_exact");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      m.swap_rows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        // Sylvester's identity guarantees this division is exact.
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = v;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

namespace {

// Row/column operations applied simultaneously to the working matrix and to
// the transform that records them.
void add_row_multiple(IntMatrix& m, IntMatrix& left, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) += f * m(src, c);
  for (std::size_t c = 0; c < left.cols(); ++c) left(dst, c) += f * left(src, c);
}

void add_col_multiple(IntMatrix& m, IntMatrix& right, std::size_t dst, std::size_t src, const Integer& f) {
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) += f * m(r, src);
  for (std::size_t r = 0; r < right.rows(); ++r) right(r, dst) += f * right(r, src);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix m = input;
  IntMatrix left = IntMatrix::identity(m.rows());
  IntMatrix right = IntMatrix::identity(m.cols());
  const std::size_t steps = std::min(m.rows(), m.cols());

  for (std::size_t t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero entry in the trailing block becomes the pivot.
      std::size_t pr = m.rows(), pc = m.cols();
      for (std::size_t r = t; r < m.rows(); ++r)
        for (std::size_t c = t; c < m.cols(); ++c)
          if (m(r, c) != 0 && (pr == m.rows() || abs(m(r, c)) < abs(m(pr, pc)))) {
            pr = r;
            pc = c;
          }
      if (pr == m.rows()) break;
      if (pr != t) {
        m.swap_rows(pr, t);
        left.swap_rows(pr, t);
      }
      if (pc != t) {
        m.swap_cols(pc, t);
        right.swap_cols(pc, t);
      }

      bool clean = true;
      for (std::size_t r = t + 1; r < m.rows(); ++r) {
        if (m(r, t) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(r, t).get_mpz_t(), m(t, t).get_mpz_t());
        add_row_multiple(m, left, r, t, -q);
        if (m(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < m.cols(); ++c) {
        if (m(t, c) == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), m(t, c).get_mpz_t(), m(t, t).get_mpz_t());
        add_col_multiple(m, right, c, t, -q);
        if (m(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block; otherwise fold the
      // offending row in and start over.
      std::size_t bad_row = m.rows();
      for (std::size_t r = t + 1; r < m.rows() && bad_row == m.rows(); ++r)
        for (std::size_t c = t + 1; c < m.cols(); ++c)
          if (!mpz_divisible_p(m(r, c).get_mpz_t(), m(t, t).get_mpz_t())) {
            bad_row = r;
            break;
          }
      if (bad_row == m.rows()) break;
      add_row_multiple(m, left, t, bad_row, 1);
    }
    if (m(t, t) < 0) {
      for (std::size_t c = 0; c < m.cols(); ++c) m(t, c) = -m(t, c);
      for (std::size_t c = 0; c < left.cols(); ++c) left(t, c) = -left(t, c);
    }
  }

  SmithForm out;
  out.diagonal.reserve(steps);
  for (std::size_t t = 0; t < steps; ++t) out.diagonal.push_back(m(t, t));
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

bool invertible_over_localization(const IntMatrix& m, const std::set<std::int64_t>& inverted_primes) {
  if (!m.is_square()) throw Error(ErrorKind::NonSquare, "invertible_over_localization");
  return is_unit_over(det_exact(m), inverted_primes);
}

IntMatrix diagonal_matrix(const std::vector<Integer>& diagonal, std::size_t rows, std::size_t cols) {
  IntMatrix d(rows, cols);
  for (std::size_t i = 0; i < diagonal.size() && i < rows && i < cols; ++i) d(i, i) = diagonal[i];
  return d;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace csamot
