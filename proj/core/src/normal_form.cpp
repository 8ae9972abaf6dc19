#include "fgab/normal_form.hpp"

#include "fgab/error.hpp"

#include <algorithm>

namespace fgab {

namespace {

// Keeps A, U, U^-1 and V in lockstep so that U * M * V = A at all times.
struct SnfWorkspace {
  IntMatrix a, u, u_inv, v;

  explicit SnfWorkspace(const IntMatrix& m)
      : a(m),
        u(IntMatrix::identity(m.rows())),
        u_inv(IntMatrix::identity(m.rows())),
        v(IntMatrix::identity(m.cols())) {}

  void add_row(std::size_t dst, std::size_t src, const Integer& k) {
    a.add_row_multiple(dst, src, k);
    u.add_row_multiple(dst, src, k);
    u_inv.add_col_multiple(src, dst, -k);
  }
  void swap_rows(std::size_t i, std::size_t j) {
    a.swap_rows(i, j);
    u.swap_rows(i, j);
    u_inv.swap_cols(i, j);
  }
  void negate_row(std::size_t i) {
    a.negate_row(i);
    u.negate_row(i);
    u_inv.negate_col(i);
  }
  void add_col(std::size_t dst, std::size_t src, const Integer& k) {
    a.add_col_multiple(dst, src, k);
    v.add_col_multiple(dst, src, k);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    a.swap_cols(i, j);
    v.swap_cols(i, j);
  }
};

// Moves the smallest nonzero entry of the trailing block to (k, k).
bool select_pivot(SnfWorkspace& w, std::size_t k) {
  const IntMatrix& a = w.a;
  std::size_t pr = 0, pc = 0;
  bool found = false;
  for (std::size_t i = k; i < a.rows(); ++i)
    for (std::size_t j = k; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      if (!found || cmpabs(a(i, j), a(pr, pc)) < 0) {
        pr = i;
        pc = j;
        found = true;
      }
    }
  if (!found) return false;
  w.swap_rows(k, pr);
  w.swap_cols(k, pc);
  return true;
}

// Smallest nonzero entry among row k and column k, moved to (k, k).
void repivot_cross(SnfWorkspace& w, std::size_t k) {
  const IntMatrix& a = w.a;
  std::size_t best_r = k, best_c = k;
  for (std::size_t i = k + 1; i < a.rows(); ++i)
    if (a(i, k) != 0 && cmpabs(a(i, k), a(best_r, best_c)) < 0) {
      best_r = i;
      best_c = k;
    }
  for (std::size_t j = k + 1; j < a.cols(); ++j)
    if (a(k, j) != 0 && cmpabs(a(k, j), a(best_r, best_c)) < 0) {
      best_r = k;
      best_c = j;
    }
  w.swap_rows(k, best_r);
  w.swap_cols(k, best_c);
}

}  // namespace

SnfResult snf(const IntMatrix& m) {
  SnfWorkspace w(m);
  const std::size_t limit = std::min(m.rows(), m.cols());
  std::size_t k = 0;
  for (; k < limit; ++k) {
    if (!select_pivot(w, k)) break;
    for (;;) {
      bool clean = true;
      for (std::size_t i = k + 1; i < w.a.rows(); ++i) {
        if (w.a(i, k) == 0) continue;
        w.add_row(i, k, -floor_div(w.a(i, k), w.a(k, k)));
        if (w.a(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < w.a.cols(); ++j) {
        if (w.a(k, j) == 0) continue;
        w.add_col(j, k, -floor_div(w.a(k, j), w.a(k, k)));
        if (w.a(k, j) != 0) clean = false;
      }
      if (!clean) {
        repivot_cross(w, k);
        continue;
      }
      // Divisibility: fold an offending row into row k and keep reducing.
      bool offending = false;
      for (std::size_t i = k + 1; i < w.a.rows() && !offending; ++i)
        for (std::size_t j = k + 1; j < w.a.cols(); ++j)
          if (!divides(w.a(k, k), w.a(i, j))) {
            w.add_row(k, i, 1);
            offending = true;
            break;
          }
      if (!offending) break;
    }
    if (w.a(k, k) < 0) w.negate_row(k);
  }

  SnfResult result{w.u, w.a, w.v, w.u_inv, {}};
  for (std::size_t i = 0; i < k; ++i)
    result.invariant_factors.push_back(result.d(i, i));
  return result;
}

HnfResult hnf(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix t = IntMatrix::identity(m.rows());
  std::vector<std::size_t> pivots;
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& k) {
    h.add_row_multiple(dst, src, k);
    t.add_row_multiple(dst, src, k);
  };
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    h.swap_rows(i, j);
    t.swap_rows(i, j);
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    bool has_pivot = false;
    for (;;) {
      std::size_t p = m.rows();
      for (std::size_t i = r; i < m.rows(); ++i)
        if (h(i, c) != 0 && (p == m.rows() || cmpabs(h(i, c), h(p, c)) < 0))
          p = i;
      if (p == m.rows()) break;
      has_pivot = true;
      swap_rows(r, p);
      bool cleared = true;
      for (std::size_t i = r + 1; i < m.rows(); ++i) {
        if (h(i, c) == 0) continue;
        add_row(i, r, -floor_div(h(i, c), h(r, c)));
        if (h(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!has_pivot) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      t.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i)
      if (h(i, c) != 0) add_row(i, r, -floor_div(h(i, c), h(r, c)));
    pivots.push_back(c);
    ++r;
  }
  return HnfResult{h.block(0, 0, r, m.cols()), std::move(t), std::move(pivots)};
}

IntMatrix kernel_lattice(const IntMatrix& m) {
  const std::size_t n = m.cols();
  HnfResult h = hnf(m.transpose());
  const std::size_t rank = h.basis.rows();
  IntMatrix kernel = h.transform.block(rank, 0, n - rank, n);
  if (kernel.rows() == 0) return IntMatrix(0, n);
  return hnf(kernel).basis;
}

std::optional<IntVector> solve(const IntMatrix& m, const IntVector& b) {
  if (b.size() != m.rows()) throw PreconditionError("solve: right-hand side length mismatch");
  SnfResult s = snf(m);
  IntVector c = s.u * std::span<const Integer>(b);
  IntVector y(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i < s.rank()) {
      if (!divides(s.invariant_factors[i], c[i])) return std::nullopt;
      y[i] = c[i] / s.invariant_factors[i];
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v * std::span<const Integer>(y);
}

}  // namespace fgab
