#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include "xxentropy/errors.hpp"

namespace xxent {

/// Adaptive Gauss-Kronrod (G7,K15) integration on a finite interval.
/// Bisects panels until the embedded error estimate satisfies
/// max(abs_tol, rel_tol * |I|) and throws ComputeError if the panel
/// budget runs out.
template <class Func>
double integrate_adaptive(Func&& f, double a, double b, double abs_tol, double rel_tol,
                          int max_panels = 4000) {
  // K15 nodes (positive half) and weights; rows 0..3 carry the G7 subset.
  static constexpr double xk[8] = {
      0.0,
      0.405845151377397166906606412077,
      0.741531185599394439863864773281,
      0.949107912342758524526189684048,
      0.207784955007898467600689403773,
      0.586087235467691130294144838259,
      0.864864423359769072789712788641,
      0.991455371120812639206854697526};
  static constexpr double wk[8] = {
      0.209482141084727828012999174892,
      0.190350578064785409913256402421,
      0.140653259715525918745189590510,
      0.063092092629978553290700663189,
      0.204432940075298892414161999235,
      0.169004726639267902826583426599,
      0.104790010322250183839876322542,
      0.022935322010529224963732008059};
  static constexpr double wg[4] = {
      0.417959183673469387755102040816,
      0.381830050505118944950369775489,
      0.279705391489276667901467771424,
      0.129484966168869693270611432679};

  struct Panel {
    double a, b;
  };
  Panel stack[64];
  int top = 0;
  stack[top++] = {a, b};

  double total = 0.0;
  int used = 0;
  while (top > 0) {
    if (++used > max_panels) throw ComputeError("adaptive quadrature: panel budget exhausted");
    Panel p = stack[--top];
    const double c = 0.5 * (p.a + p.b);
    const double half = 0.5 * (p.b - p.a);

    const double f0 = f(c);
    double k15 = wk[0] * f0;
    double g7 = wg[0] * f0;
    for (int i = 1; i < 8; ++i) {
      const double dx = half * xk[i];
      const double fi = f(c + dx) + f(c - dx);
      k15 += wk[i] * fi;
      if (i < 4) g7 += wg[i] * fi;
    }
    k15 *= half;
    g7 *= half;

    const double err = std::abs(k15 - g7);
    const double tol = std::max(abs_tol * (half / (0.5 * (b - a))), rel_tol * std::abs(k15));
    if (err <= tol || half < 1e-14 * (std::abs(c) + 1.0)) {
      total += k15;
    } else {
      if (top + 2 > 64) throw ComputeError("adaptive quadrature: recursion too deep");
      stack[top++] = {p.a, c};
      stack[top++] = {c, p.b};
    }
  }
  return total;
}

}  // namespace xxent
