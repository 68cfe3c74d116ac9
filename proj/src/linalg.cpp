#include "graphjac/linalg.hpp"

#include <algorithm>
#include <cstdint>

namespace graphjac {

RationalMatrix to_rational(const IntegerMatrix& a) {
  RationalMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  return r;
}

namespace {

void divexact(Integer& x, const Integer& d) {
  mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

struct Echelon {
  int sign = 1;
  std::size_t rank = 0;
  Integer last_pivot = 1;
  std::vector<std::size_t> pivot_cols;
};

// Bareiss forward elimination over the first `ncols` columns of m; any
// further columns are carried along. After the call, row r < rank holds the
// Bareiss row for pivot r and rows >= rank are zero in the first ncols.
//
// Every row not touched at pivot step t would, in textbook Bareiss, be scaled
// by p_t / p_{t-1}. Those factors telescope, so each row records the step it
// was last brought up to date and is rescaled by p_t / p_s only when needed.
Echelon bareiss_forward(IntegerMatrix& m, std::size_t ncols) {
  const std::size_t rows = m.rows();
  Echelon out;
  std::vector<Integer> pivots;
  std::vector<std::int64_t> stamp(rows, -1);
  const Integer one = 1;
  auto pivot_at = [&](std::int64_t t) -> const Integer& {
    return t < 0 ? one : pivots[static_cast<std::size_t>(t)];
  };
  auto refresh = [&](std::size_t i, std::int64_t t) {
    if (stamp[i] == t) return;
    const Integer& num = pivot_at(t);
    const Integer& den = pivot_at(stamp[i]);
    for (auto& x : m.row(i)) {
      if (is_zero(x)) continue;
      x *= num;
      divexact(x, den);
    }
    stamp[i] = t;
  };

  std::size_t r = 0;
  Integer tmp;
  for (std::size_t c = 0; c < ncols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!is_zero(m(i, c))) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    if (piv != r) {
      m.swap_rows(piv, r);
      std::swap(stamp[piv], stamp[r]);
      out.sign = -out.sign;
    }
    const auto t = static_cast<std::int64_t>(pivots.size());
    refresh(r, t - 1);
    const Integer p = m(r, c);
    const Integer& prev = pivot_at(t - 1);
    auto prow = m.row(r);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (is_zero(m(i, c))) continue;
      refresh(i, t - 1);
      const Integer f = m(i, c);
      auto row = m.row(i);
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        const bool xz = is_zero(row[j]);
        const bool yz = is_zero(prow[j]);
        if (xz && yz) continue;
        if (yz) {
          row[j] *= p;
        } else if (xz) {
          row[j] = -f * prow[j];
        } else {
          tmp = f * prow[j];
          row[j] *= p;
          row[j] -= tmp;
        }
        divexact(row[j], prev);
      }
      row[c] = 0;
      stamp[i] = t;
    }
    pivots.push_back(p);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;
  // pivot rows are final as of their own step; the rest must catch up
  const auto last = static_cast<std::int64_t>(pivots.size()) - 1;
  for (std::size_t i = r; i < rows; ++i) refresh(i, last);
  if (!pivots.empty()) out.last_pivot = pivots.back();
  return out;
}

}  // namespace

Integer determinant(const IntegerMatrix& a) {
  if (!a.is_square())
    throw Error(ErrorCode::NotSquare, "determinant of non-square matrix");
  if (a.rows() == 0) return 1;
  IntegerMatrix m = a;
  const Echelon e = bareiss_forward(m, m.cols());
  if (e.rank < m.rows()) return 0;
  return e.sign * e.last_pivot;
}

std::size_t rank(const IntegerMatrix& a) {
  IntegerMatrix m = a;
  return bareiss_forward(m, m.cols()).rank;
}

RationalMatrix ScaledInverse::to_rational() const {
  RationalMatrix r(numerators.rows(), numerators.cols());
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) {
      r(i, j) = Rational(numerators(i, j), denominator);
      r(i, j).canonicalize();
    }
  return r;
}

ScaledInverse invert_scaled(const IntegerMatrix& a) {
  if (!a.is_square())
    throw Error(ErrorCode::NotSquare, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return {IntegerMatrix(0, 0), 1, 1};

  IntegerMatrix m(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n + i) = 1;
  }
  const Echelon e = bareiss_forward(m, n);
  if (e.rank < n) throw Error(ErrorCode::Singular, "matrix is singular");

  // Triangular solve T X = B, scaled by the final pivot P so that Y = P X is
  // integral (it is the adjugate up to sign). Each division is exact.
  const Integer& P = e.last_pivot;
  IntegerMatrix y(n, n);
  Integer acc;
  for (std::size_t ii = n; ii-- > 0;) {
    auto yrow = y.row(ii);
    for (std::size_t j = 0; j < n; ++j) yrow[j] = P * m(ii, n + j);
    for (std::size_t k = ii + 1; k < n; ++k) {
      const Integer& t = m(ii, k);
      if (is_zero(t)) continue;
      auto yk = y.row(k);
      for (std::size_t j = 0; j < n; ++j)
        if (!is_zero(yk[j])) {
          acc = t * yk[j];
          yrow[j] -= acc;
        }
    }
    for (auto& x : yrow)
      if (!is_zero(x)) divexact(x, m(ii, ii));
  }
  ScaledInverse out{std::move(y), P, e.sign * P};
  if (sgn(out.denominator) < 0) {
    out.denominator = -out.denominator;
    for (std::size_t i = 0; i < n; ++i)
      for (auto& x : out.numerators.row(i)) x = -x;
  }
  return out;
}

RationalMatrix invert(const IntegerMatrix& a) {
  return invert_scaled(a).to_rational();
}

RationalMatrix invert(const RationalMatrix& a) {
  if (!a.is_square())
    throw Error(ErrorCode::NotSquare, "inverse of non-square matrix");
  const std::size_t n = a.rows();
  // S A is integral for S = diag(row denominators' lcm); (S A)^{-1} S = A^{-1}
  IntegerMatrix scaled(n, n);
  std::vector<Integer> s(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s[i] = lcm(s[i], a(i, j).get_den());
    for (std::size_t j = 0; j < n; ++j)
      scaled(i, j) = a(i, j).get_num() * (s[i] / a(i, j).get_den());
  }
  RationalMatrix inv = invert(scaled);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      inv(i, j) *= s[j];
      inv(i, j).canonicalize();
    }
  return inv;
}

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> d(std::min(D.rows(), D.cols()));
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = D(i, i);
  return d;
}

namespace {

// Row/column reduction to Smith form, with U and V accumulated alongside.
// Pivots are units whenever one exists in the active block (no further
// reduction or divisibility repair needed); otherwise the smallest entry.
class SmithReducer {
 public:
  explicit SmithReducer(const IntegerMatrix& a)
      : a_(a),
        u_(IntegerMatrix::identity(a.rows())),
        v_(IntegerMatrix::identity(a.cols())) {}

  SmithDecomposition run() {
    const std::size_t steps = std::min(a_.rows(), a_.cols());
    for (std::size_t t = 0; t < steps; ++t) {
      if (!place_pivot(t)) break;
      reduce_at(t);
      if (sgn(a_(t, t)) < 0) {
        for (auto& x : a_.row(t)) x = -x;
        for (auto& x : u_.row(t)) x = -x;
      }
    }
    return {std::move(u_), std::move(a_), std::move(v_)};
  }

 private:
  static bool is_unit(const Integer& x) { return x == 1 || x == -1; }
  static int cmpabs(const Integer& a, const Integer& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
  }

  void swap_rows(std::size_t i, std::size_t j) {
    a_.swap_rows(i, j);
    u_.swap_rows(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a_.swap_cols(i, j);
    v_.swap_cols(i, j);
  }

  // row dst -= q * row src, in A restricted to columns >= from
  void row_sub(std::size_t dst, std::size_t src, const Integer& q,
               std::size_t from) {
    for (std::size_t j = from; j < a_.cols(); ++j)
      if (!is_zero(a_(src, j))) {
        tmp_ = q * a_(src, j);
        a_(dst, j) -= tmp_;
      }
    for (std::size_t j = 0; j < u_.cols(); ++j)
      if (!is_zero(u_(src, j))) {
        tmp_ = q * u_(src, j);
        u_(dst, j) -= tmp_;
      }
  }

  // col dst -= q * col src, in A restricted to rows >= from
  void col_sub(std::size_t dst, std::size_t src, const Integer& q,
               std::size_t from) {
    for (std::size_t i = from; i < a_.rows(); ++i)
      if (!is_zero(a_(i, src))) {
        tmp_ = q * a_(i, src);
        a_(i, dst) -= tmp_;
      }
    for (std::size_t i = 0; i < v_.rows(); ++i)
      if (!is_zero(v_(i, src))) {
        tmp_ = q * v_(i, src);
        v_(i, dst) -= tmp_;
      }
  }

  bool place_pivot(std::size_t t) {
    const std::size_t R = a_.rows(), C = a_.cols();
    // cheap places first: the leading column and row of the block
    for (std::size_t i = t; i < R; ++i)
      if (is_unit(a_(i, t))) {
        swap_rows(i, t);
        return true;
      }
    for (std::size_t j = t; j < C; ++j)
      if (is_unit(a_(t, j))) {
        swap_cols(j, t);
        return true;
      }
    std::size_t bi = R, bj = C;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j) {
        const Integer& x = a_(i, j);
        if (is_zero(x)) continue;
        if (bi == R || cmpabs(x, a_(bi, bj)) < 0) {
          bi = i;
          bj = j;
          if (is_unit(x)) goto found;
        }
      }
    if (bi == R) return false;
  found:
    swap_rows(bi, t);
    swap_cols(bj, t);
    return true;
  }

  void reduce_at(std::size_t t) {
    const std::size_t R = a_.rows(), C = a_.cols();
    Integer q;
    for (;;) {
      const Integer p = a_(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (is_zero(a_(i, t))) continue;
        q = floor_div(a_(i, t), p);
        row_sub(i, t, q, t);
        if (!is_zero(a_(i, t))) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (is_zero(a_(t, j))) continue;
        q = floor_div(a_(t, j), p);
        col_sub(j, t, q, t);
        if (!is_zero(a_(t, j))) clean = false;
      }
      if (!clean) {
        // a remainder smaller than the pivot is left in row or column t
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < R; ++i)
          if (!is_zero(a_(i, t)) && cmpabs(a_(i, t), a_(bi, bj)) < 0) {
            bi = i;
            bj = t;
          }
        for (std::size_t j = t + 1; j < C; ++j)
          if (!is_zero(a_(t, j)) && cmpabs(a_(t, j), a_(bi, bj)) < 0) {
            bi = t;
            bj = j;
          }
        swap_rows(bi, t);
        swap_cols(bj, t);
        continue;
      }
      if (is_unit(p)) return;
      std::size_t bad = R;
      for (std::size_t i = t + 1; i < R && bad == R; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (!is_zero(a_(i, j)) &&
              !mpz_divisible_p(a_(i, j).get_mpz_t(), p.get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == R) return;
      row_sub(t, bad, Integer(-1), t);  // row t += row bad
    }
  }

  IntegerMatrix a_, u_, v_;
  Integer tmp_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntegerMatrix& a) {
  return SmithReducer(a).run();
}

std::optional<IntVector> solve_integer(const SmithDecomposition& snf,
                                       const IntVector& b) {
  const std::size_t R = snf.D.rows(), C = snf.D.cols();
  if (b.size() != R)
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  const IntVector c = snf.U * b;
  IntVector y(C);
  for (std::size_t i = 0; i < R; ++i) {
    const Integer d = i < C ? snf.D(i, i) : Integer(0);
    if (is_zero(d)) {
      if (!is_zero(c[i])) return std::nullopt;
      continue;
    }
    if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    y[i] = c[i] / d;
  }
  return snf.V * y;
}

std::optional<IntVector> solve_integer(const IntegerMatrix& a,
                                       const IntVector& b) {
  if (b.size() != a.rows())
    throw Error(ErrorCode::DimensionMismatch, "right-hand side length");
  return solve_integer(smith_normal_form(a), b);
}

Integer cokernel_order(const SmithDecomposition& snf, const IntVector& b) {
  const std::size_t R = snf.D.rows(), C = snf.D.cols();
  if (b.size() != R)
    throw Error(ErrorCode::DimensionMismatch, "vector length");
  const IntVector c = snf.U * b;
  Integer order = 1;
  for (std::size_t i = 0; i < R; ++i) {
    const Integer d = i < C ? snf.D(i, i) : Integer(0);
    if (is_zero(c[i])) continue;
    if (is_zero(d)) return 0;
    order = lcm(order, d / gcd(d, c[i]));
  }
  return order;
}

}  // namespace graphjac
