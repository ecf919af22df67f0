#include "ucpoly/cut_families.hpp"

#include <algorithm>

namespace ucpoly {

namespace {

long floor_rat(const Rational& q) { return floor_long(q); }

Rational pos(const Rational& q) { return q > 0 ? q : Rational(0); }
long posl(long v) { return v > 0 ? v : 0; }

struct Ctx {
  const GeneratorParams& p;
  const Horizon& h;
  Rational C, Cb, V, Vb;
  int L, ell, T;

  Ctx(const GeneratorParams& gp, const Horizon& hz)
      : p(gp), h(hz), C(gp.c_min), Cb(gp.c_max), V(gp.ramp), Vb(gp.startstop_ramp),
        L(gp.min_up), ell(gp.min_down), T(hz.T) {}

  // y_i - sum_{j=0}^{cap} u_{i-j}, u indices clamped to [2, T]
  void add_D(LinearInequality& row, int i, const Rational& coef, int cap) const {
    if (coef == 0) return;
    if (i < 1 || i > T) throw std::domain_error("time index outside horizon");
    row.add(Y(i), coef);
    for (int j = 0; j <= cap; ++j) {
      int idx = i - j;
      if (idx >= 2 && idx <= T) row.add(U(idx), -coef);
    }
  }

  void add_u(LinearInequality& row, int i, const Rational& coef) const {
    if (coef == 0) return;
    if (i >= 2 && i <= T) row.add(U(i), coef);
  }
};

void check_set_band(const std::vector<int>& S, int lo, int hi) {
  int prev = lo - 1;
  for (int a : S) {
    if (a < lo || a > hi || a <= prev)
      throw std::domain_error("index set outside its band or not strictly increasing");
    prev = a;
  }
}

std::string set_to_string(const std::vector<int>& S) {
  std::string s = "{";
  for (size_t i = 0; i < S.size(); ++i) s += (i ? "," : "") + std::to_string(S[i]);
  return s + "}";
}

}  // namespace

// ---------------------------------------------------------------------------
// Two-period system
// ---------------------------------------------------------------------------

std::vector<LinearInequality> q2_system(const GeneratorParams& p, const Horizon& h, int t) {
  Ctx c(p, h);
  if (t < 2 || t > c.T) throw std::domain_error("window end outside horizon");
  const int t1 = t - 1;
  std::vector<LinearInequality> rows;
  auto push = [&](LinearInequality r, const char* tag) {
    r.family = tag;
    r.params["t"] = t;
    r.normalize();
    rows.push_back(std::move(r));
  };

  LinearInequality logic;  // y_t - y_{t-1} <= u_t
  logic.add(Y(t), 1);
  logic.add(Y(t1), -1);
  logic.add(U(t), -1);
  push(std::move(logic), "q2:logic");

  LinearInequality mu;  // u_t <= y_t
  mu.add(U(t), 1);
  mu.add(Y(t), -1);
  push(std::move(mu), "q2:min_up");

  LinearInequality md;  // y_{t-1} + u_t <= 1
  md.add(Y(t1), 1);
  md.add(U(t), 1);
  md.rhs = 1;
  push(std::move(md), "q2:min_down");

  for (int s : {t1, t}) {
    LinearInequality lb;
    lb.add(X(s), -1);
    lb.add(Y(s), c.C);
    push(std::move(lb), s == t1 ? "q2:lb1" : "q2:lb2");
  }

  LinearInequality x1ub;  // x_{t-1} <= Vb y_{t-1} + (Cb - Vb)(y_t - u_t)
  x1ub.add(X(t1), 1);
  x1ub.add(Y(t1), -c.Vb);
  x1ub.add(Y(t), -(c.Cb - c.Vb));
  x1ub.add(U(t), c.Cb - c.Vb);
  push(std::move(x1ub), "q2:x1_ub");

  LinearInequality x2ub;  // x_t <= Cb y_t - (Cb - Vb) u_t
  x2ub.add(X(t), 1);
  x2ub.add(Y(t), -c.Cb);
  x2ub.add(U(t), c.Cb - c.Vb);
  push(std::move(x2ub), "q2:x2_ub");

  if (c.Cb - c.C - c.V >= 0) {
    LinearInequality ru;  // x_t - x_{t-1} <= (C+V) y_t - C y_{t-1} - (C+V-Vb) u_t
    ru.add(X(t), 1);
    ru.add(X(t1), -1);
    ru.add(Y(t), -(c.C + c.V));
    ru.add(Y(t1), c.C);
    ru.add(U(t), c.C + c.V - c.Vb);
    push(std::move(ru), "q2:ramp_up");

    LinearInequality rd;  // x_{t-1} - x_t <= Vb y_{t-1} - (Vb-V) y_t - (C+V-Vb) u_t
    rd.add(X(t1), 1);
    rd.add(X(t), -1);
    rd.add(Y(t1), -c.Vb);
    rd.add(Y(t), c.Vb - c.V);
    rd.add(U(t), c.C + c.V - c.Vb);
    push(std::move(rd), "q2:ramp_down");
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Three-period systems
// ---------------------------------------------------------------------------

namespace {

// Canonical three-period rows on the window (t-2, t-1, t); names follow the
// local period numbering 1, 2, 3.
struct Q3Rows {
  Ctx c;
  int t;
  int i1, i2, i3;  // global periods

  Q3Rows(const Ctx& ctx, int tt) : c(ctx), t(tt), i1(tt - 2), i2(tt - 1), i3(tt) {}

  LinearInequality tag(LinearInequality r, const std::string& name) const {
    r.family = "q3:" + name;
    r.params["t"] = t;
    r.normalize();
    return r;
  }

  LinearInequality min_up3() const {  // u2 + u3 <= y3
    LinearInequality r;
    r.add(U(i2), 1);
    r.add(U(i3), 1);
    r.add(Y(i3), -1);
    return tag(std::move(r), "min_up3");
  }
  LinearInequality min_down3() const {  // y1 + u2 + u3 <= 1
    LinearInequality r;
    r.add(Y(i1), 1);
    r.add(U(i2), 1);
    r.add(U(i3), 1);
    r.rhs = 1;
    return tag(std::move(r), "min_down3");
  }
  std::vector<LinearInequality> logic() const {
    std::vector<LinearInequality> v;
    for (int s : {i2, i3}) {
      LinearInequality r;
      r.add(Y(s), 1);
      r.add(Y(s - 1), -1);
      r.add(U(s), -1);
      v.push_back(tag(std::move(r), "logic" + std::to_string(s - i1 + 1)));
    }
    return v;
  }
  std::vector<LinearInequality> min_up1() const {  // u <= y on periods 2, 3
    std::vector<LinearInequality> v;
    for (int s : {i2, i3}) {
      LinearInequality r;
      r.add(U(s), 1);
      r.add(Y(s), -1);
      v.push_back(tag(std::move(r), "min_up1_" + std::to_string(s - i1 + 1)));
    }
    return v;
  }
  std::vector<LinearInequality> min_down1() const {  // y_{s-1} + u_s <= 1
    std::vector<LinearInequality> v;
    for (int s : {i2, i3}) {
      LinearInequality r;
      r.add(Y(s - 1), 1);
      r.add(U(s), 1);
      r.rhs = 1;
      v.push_back(tag(std::move(r), "min_down1_" + std::to_string(s - i1 + 1)));
    }
    return v;
  }
  std::vector<LinearInequality> lower_bounds() const {
    std::vector<LinearInequality> v;
    for (int s : {i1, i2, i3}) {
      LinearInequality r;
      r.add(X(s), -1);
      r.add(Y(s), c.C);
      v.push_back(tag(std::move(r), "lb" + std::to_string(s - i1 + 1)));
    }
    return v;
  }

  // x1 <= Vb y1 + V (y2-u2) + (Cb-Vb-V)(y3-u3-u2)
  LinearInequality r5() const {
    LinearInequality r;
    r.add(X(i1), 1);
    r.add(Y(i1), -c.Vb);
    r.add(Y(i2), -c.V);
    r.add(U(i2), c.V);
    r.add(Y(i3), -(c.Cb - c.Vb - c.V));
    r.add(U(i3), c.Cb - c.Vb - c.V);
    r.add(U(i2), c.Cb - c.Vb - c.V);
    return tag(std::move(r), "ub1");
  }
  // x2 <= Vb y2 + (Cb-Vb)(y3-u3-u2)
  LinearInequality r6() const {
    LinearInequality r;
    r.add(X(i2), 1);
    r.add(Y(i2), -c.Vb);
    r.add(Y(i3), -(c.Cb - c.Vb));
    r.add(U(i3), c.Cb - c.Vb);
    r.add(U(i2), c.Cb - c.Vb);
    return tag(std::move(r), "ub2");
  }
  // x3 <= Cb y3 - (Cb-Vb) u3 - (Cb-Vb-V) u2
  LinearInequality r7() const {
    LinearInequality r;
    r.add(X(i3), 1);
    r.add(Y(i3), -c.Cb);
    r.add(U(i3), c.Cb - c.Vb);
    r.add(U(i2), c.Cb - c.Vb - c.V);
    return tag(std::move(r), "ub3");
  }
  // x2 - x1 <= Vb y2 - C y1 + (C+V-Vb)(y3-u3-u2)
  LinearInequality r8() const {
    LinearInequality r;
    r.add(X(i2), 1);
    r.add(X(i1), -1);
    r.add(Y(i2), -c.Vb);
    r.add(Y(i1), c.C);
    r.add(Y(i3), -(c.C + c.V - c.Vb));
    r.add(U(i3), c.C + c.V - c.Vb);
    r.add(U(i2), c.C + c.V - c.Vb);
    return tag(std::move(r), "du21");
  }
  // x3 - x2 <= (C+V) y3 - C y2 - (C+V-Vb) u3
  LinearInequality r9() const {
    LinearInequality r;
    r.add(X(i3), 1);
    r.add(X(i2), -1);
    r.add(Y(i3), -(c.C + c.V));
    r.add(Y(i2), c.C);
    r.add(U(i3), c.C + c.V - c.Vb);
    return tag(std::move(r), "du32");
  }
  // x1 - x2 <= Vb y1 - (Vb-V) y2 - (C+V-Vb) u2
  LinearInequality r10() const {
    LinearInequality r;
    r.add(X(i1), 1);
    r.add(X(i2), -1);
    r.add(Y(i1), -c.Vb);
    r.add(Y(i2), c.Vb - c.V);
    r.add(U(i2), c.C + c.V - c.Vb);
    return tag(std::move(r), "dd12");
  }
  // x2 - x3 <= Vb y2 - C y3 + (C+V-Vb)(y3-u3-u2)
  LinearInequality r11() const {
    LinearInequality r;
    r.add(X(i2), 1);
    r.add(X(i3), -1);
    r.add(Y(i2), -c.Vb);
    r.add(Y(i3), c.C);
    r.add(Y(i3), -(c.C + c.V - c.Vb));
    r.add(U(i3), c.C + c.V - c.Vb);
    r.add(U(i2), c.C + c.V - c.Vb);
    return tag(std::move(r), "dd23");
  }
  // x3 - x1 <= (C+2V) y3 - C y1 - (C+2V-Vb) u3 - (C+V-Vb) u2
  LinearInequality r12() const {
    LinearInequality r;
    r.add(X(i3), 1);
    r.add(X(i1), -1);
    r.add(Y(i3), -(c.C + 2 * c.V));
    r.add(Y(i1), c.C);
    r.add(U(i3), c.C + 2 * c.V - c.Vb);
    r.add(U(i2), c.C + c.V - c.Vb);
    return tag(std::move(r), "du31");
  }
  // x1 - x3 <= Vb y1 - C y3 + V (y2-u2) + (C+V-Vb)(y3-u3-u2)
  LinearInequality r13() const {
    LinearInequality r;
    r.add(X(i1), 1);
    r.add(X(i3), -1);
    r.add(Y(i1), -c.Vb);
    r.add(Y(i3), c.C);
    r.add(Y(i2), -c.V);
    r.add(U(i2), c.V);
    r.add(Y(i3), -(c.C + c.V - c.Vb));
    r.add(U(i3), c.C + c.V - c.Vb);
    r.add(U(i2), c.C + c.V - c.Vb);
    return tag(std::move(r), "dd13");
  }
  // x1 - x2 + x3 <= Vb y1 - (Vb-V) y2 + Vb y3 + (Cb-Vb)(y3-u3-u2)
  LinearInequality r14() const {
    LinearInequality r;
    r.add(X(i1), 1);
    r.add(X(i2), -1);
    r.add(X(i3), 1);
    r.add(Y(i1), -c.Vb);
    r.add(Y(i2), c.Vb - c.V);
    r.add(Y(i3), -c.Vb);
    r.add(Y(i3), -(c.Cb - c.Vb));
    r.add(U(i3), c.Cb - c.Vb);
    r.add(U(i2), c.Cb - c.Vb);
    return tag(std::move(r), "vee");
  }
  // x1 <= Vb y1 + (Cb-Vb)(y2-u2)
  LinearInequality r15c() const {
    LinearInequality r;
    r.add(X(i1), 1);
    r.add(Y(i1), -c.Vb);
    r.add(Y(i2), -(c.Cb - c.Vb));
    r.add(U(i2), c.Cb - c.Vb);
    return tag(std::move(r), "ub1a");
  }
  // x1 <= Vb y1 + V (y2-u2) + (Cb-Vb-V)(y3-u3)
  LinearInequality r15d() const {
    LinearInequality r;
    r.add(X(i1), 1);
    r.add(Y(i1), -c.Vb);
    r.add(Y(i2), -c.V);
    r.add(U(i2), c.V);
    r.add(Y(i3), -(c.Cb - c.Vb - c.V));
    r.add(U(i3), c.Cb - c.Vb - c.V);
    return tag(std::move(r), "ub1b");
  }
  // x2 <= Cb y2 - (Cb-Vb) u2
  LinearInequality r15e() const {
    LinearInequality r;
    r.add(X(i2), 1);
    r.add(Y(i2), -c.Cb);
    r.add(U(i2), c.Cb - c.Vb);
    return tag(std::move(r), "ub2a");
  }
  // x2 <= Vb y2 + (Cb-Vb)(y3-u3)
  LinearInequality r15f() const {
    LinearInequality r;
    r.add(X(i2), 1);
    r.add(Y(i2), -c.Vb);
    r.add(Y(i3), -(c.Cb - c.Vb));
    r.add(U(i3), c.Cb - c.Vb);
    return tag(std::move(r), "ub2b");
  }
  // x3 <= Cb y3 - (Cb-Vb) u3
  LinearInequality r15g() const {
    LinearInequality r;
    r.add(X(i3), 1);
    r.add(Y(i3), -c.Cb);
    r.add(U(i3), c.Cb - c.Vb);
    return tag(std::move(r), "ub3a");
  }
  // x3 <= (Vb+V) y3 - V u3 + (Cb-Vb-V)(y2-u2)
  LinearInequality r15h() const {
    LinearInequality r;
    r.add(X(i3), 1);
    r.add(Y(i3), -(c.Vb + c.V));
    r.add(U(i3), c.V);
    r.add(Y(i2), -(c.Cb - c.Vb - c.V));
    r.add(U(i2), c.Cb - c.Vb - c.V);
    return tag(std::move(r), "ub3b");
  }
  // x2 - x1 <= Vb y2 - C y1 + (C+V-Vb)(y3-u3)
  LinearInequality r15i() const {
    LinearInequality r;
    r.add(X(i2), 1);
    r.add(X(i1), -1);
    r.add(Y(i2), -c.Vb);
    r.add(Y(i1), c.C);
    r.add(Y(i3), -(c.C + c.V - c.Vb));
    r.add(U(i3), c.C + c.V - c.Vb);
    return tag(std::move(r), "du21a");
  }
  // x2 - x1 <= (C+V) y2 - C y1 - (C+V-Vb) u2
  LinearInequality r15j() const {
    LinearInequality r;
    r.add(X(i2), 1);
    r.add(X(i1), -1);
    r.add(Y(i2), -(c.C + c.V));
    r.add(Y(i1), c.C);
    r.add(U(i2), c.C + c.V - c.Vb);
    return tag(std::move(r), "du21b");
  }
  // x2 - x3 <= Vb y2 - (Vb-V) y3 - (C+V-Vb) u3
  LinearInequality r15m() const {
    LinearInequality r;
    r.add(X(i2), 1);
    r.add(X(i3), -1);
    r.add(Y(i2), -c.Vb);
    r.add(Y(i3), c.Vb - c.V);
    r.add(U(i3), c.C + c.V - c.Vb);
    return tag(std::move(r), "dd23a");
  }
  // x2 - x3 <= (C+V) y2 - C y3 - (C+V-Vb) u2
  LinearInequality r15n() const {
    LinearInequality r;
    r.add(X(i2), 1);
    r.add(X(i3), -1);
    r.add(Y(i2), -(c.C + c.V));
    r.add(Y(i3), c.C);
    r.add(U(i2), c.C + c.V - c.Vb);
    return tag(std::move(r), "dd23b");
  }
  // x3 - x1 <= (C+2V) y3 - C y1 - (C+2V-Vb) u3
  LinearInequality r15o() const {
    LinearInequality r;
    r.add(X(i3), 1);
    r.add(X(i1), -1);
    r.add(Y(i3), -(c.C + 2 * c.V));
    r.add(Y(i1), c.C);
    r.add(U(i3), c.C + 2 * c.V - c.Vb);
    return tag(std::move(r), "du31a");
  }
  // x3 - x1 <= (Vb+V) y3 - V u3 - C y1 + (C+V-Vb)(y2-u2)
  LinearInequality r15p() const {
    LinearInequality r;
    r.add(X(i3), 1);
    r.add(X(i1), -1);
    r.add(Y(i3), -(c.Vb + c.V));
    r.add(U(i3), c.V);
    r.add(Y(i1), c.C);
    r.add(Y(i2), -(c.C + c.V - c.Vb));
    r.add(U(i2), c.C + c.V - c.Vb);
    return tag(std::move(r), "du31b");
  }
  // x1 - x3 <= Vb y1 - C y3 + (C+2V-Vb)(y2-u2)
  LinearInequality r15q() const {
    LinearInequality r;
    r.add(X(i1), 1);
    r.add(X(i3), -1);
    r.add(Y(i1), -c.Vb);
    r.add(Y(i3), c.C);
    r.add(Y(i2), -(c.C + 2 * c.V - c.Vb));
    r.add(U(i2), c.C + 2 * c.V - c.Vb);
    return tag(std::move(r), "dd13a");
  }
  // x1 - x3 <= Vb y1 - C y3 + V (y2-u2) + (C+V-Vb)(y3-u3)
  LinearInequality r15r() const {
    LinearInequality r;
    r.add(X(i1), 1);
    r.add(X(i3), -1);
    r.add(Y(i1), -c.Vb);
    r.add(Y(i3), c.C);
    r.add(Y(i2), -c.V);
    r.add(U(i2), c.V);
    r.add(Y(i3), -(c.C + c.V - c.Vb));
    r.add(U(i3), c.C + c.V - c.Vb);
    return tag(std::move(r), "dd13b");
  }
  // (Cb-C-2V)(x1 - Vb y1 - V(y2-u2)) <= (Cb-Vb-V)(x3 - C y3)
  LinearInequality r4a() const {
    const Rational A = c.Cb - c.C - 2 * c.V;
    const Rational B = c.Cb - c.Vb - c.V;
    LinearInequality r;
    r.add(X(i1), A);
    r.add(Y(i1), -A * c.Vb);
    r.add(Y(i2), -A * c.V);
    r.add(U(i2), A * c.V);
    r.add(X(i3), -B);
    r.add(Y(i3), B * c.C);
    return tag(std::move(r), "frac_up");
  }
  // (Cb-C-2V)(x3 - (Vb+V) y3 + V u3) <= (Cb-Vb-V)(x1 - C y1)
  LinearInequality r4b() const {
    const Rational A = c.Cb - c.C - 2 * c.V;
    const Rational B = c.Cb - c.Vb - c.V;
    LinearInequality r;
    r.add(X(i3), A);
    r.add(Y(i3), -A * (c.Vb + c.V));
    r.add(U(i3), A * c.V);
    r.add(X(i1), -B);
    r.add(Y(i1), B * c.C);
    return tag(std::move(r), "frac_dn");
  }
  // x1 - x2 + x3 >= C y1 - (C+V) y2 + C y3  (stored as <=)
  LinearInequality r17() const {
    LinearInequality r;
    r.add(X(i1), -1);
    r.add(X(i2), 1);
    r.add(X(i3), -1);
    r.add(Y(i1), c.C);
    r.add(Y(i2), -(c.C + c.V));
    r.add(Y(i3), c.C);
    return tag(std::move(r), "vee_lb");
  }
  // x3 - x1 <= (C+2V) y3 - C y1 - (C+2V-Vb) u3 + (Cb-C-2V) u2
  LinearInequality r18a() const {
    LinearInequality r;
    r.add(X(i3), 1);
    r.add(X(i1), -1);
    r.add(Y(i3), -(c.C + 2 * c.V));
    r.add(Y(i1), c.C);
    r.add(U(i3), c.C + 2 * c.V - c.Vb);
    r.add(U(i2), -(c.Cb - c.C - 2 * c.V));
    return tag(std::move(r), "jump_up");
  }
  // x1 - x3 <= Vb y1 + (Cb-Vb) y2 - (Cb-2V) y3 - (C+2V-Vb) u2 + (Cb-C-2V) u3
  LinearInequality r18b() const {
    LinearInequality r;
    r.add(X(i1), 1);
    r.add(X(i3), -1);
    r.add(Y(i1), -c.Vb);
    r.add(Y(i2), -(c.Cb - c.Vb));
    r.add(Y(i3), c.Cb - 2 * c.V);
    r.add(U(i2), c.C + 2 * c.V - c.Vb);
    r.add(U(i3), -(c.Cb - c.C - 2 * c.V));
    return tag(std::move(r), "jump_dn");
  }
};

}  // namespace

std::vector<LinearInequality> q3_system(const GeneratorParams& p, int min_up_w, int min_down_w,
                                        const Horizon& h, int t) {
  if (min_up_w < 1 || min_up_w > 2 || min_down_w < 1 || min_down_w > 2)
    throw std::domain_error("three-period systems cover window limits 1 and 2 only");
  Ctx c(p, h);
  if (t < 3 || t > c.T) throw std::domain_error("window end outside horizon");
  Q3Rows q(c, t);
  const auto info = classify(p);
  const bool ge2v = info.reg_2v == TwoVRegime::GE;

  std::vector<LinearInequality> rows;
  auto add = [&rows](LinearInequality r) { rows.push_back(std::move(r)); };
  auto add_all = [&rows](std::vector<LinearInequality> v) {
    for (auto& r : v) rows.push_back(std::move(r));
  };

  // shared scaffolding: up-time rows by window L, down-time rows by window l
  if (min_up_w == 2) add(q.min_up3());
  else add_all(q.min_up1());
  if (min_down_w == 2) add(q.min_down3());
  else add_all(q.min_down1());
  add_all(q.logic());
  add_all(q.lower_bounds());

  if (min_up_w == 2) {
    switch (info.case_id) {
      case ParamCase::Case1:
        add(q.r5());
        add(q.r6());
        add(q.r7());
        add(q.r8());
        add(q.r9());
        add(q.r10());
        add(q.r11());
        if (ge2v) {
          add(q.r12());
          add(q.r13());
        }
        add(q.r14());
        break;
      case ParamCase::Case2:
        add(q.r15c());
        add(q.r6());
        add(q.r15g());
        add(q.r8());
        add(q.r9());
        add(q.r10());
        add(q.r11());
        add(q.r14());
        break;
      case ParamCase::Case3:
        add(q.r15c());
        add(q.r6());
        add(q.r15g());
        break;
      case ParamCase::Case4:
        add(q.r5());
        add(q.r6());
        add(q.r7());
        add(q.r15j());
        add(q.r9());
        add(q.r10());
        add(q.r15m());
        add(q.r12());
        add(q.r13());
        add(q.r14());
        add(q.r17());
        break;
      case ParamCase::Case5:
        add(q.r15c());
        add(q.r6());
        add(q.r15g());
        add(q.r15j());
        add(q.r9());
        add(q.r10());
        add(q.r15m());
        add(q.r14());
        add(q.r17());
        if (ge2v) {
          add(q.r18a());
          add(q.r18b());
        }
        break;
    }
  } else {
    switch (info.case_id) {
      case ParamCase::Case1:
        add(q.r15c());
        add(q.r15d());
        add(q.r15e());
        add(q.r15f());
        add(q.r15g());
        add(q.r15h());
        add(q.r15i());
        add(q.r15j());
        add(q.r9());
        add(q.r10());
        add(q.r15m());
        add(q.r15n());
        if (ge2v) {
          add(q.r15o());
          add(q.r15p());
          add(q.r15q());
          add(q.r15r());
        }
        break;
      case ParamCase::Case2:
        add(q.r15c());
        add(q.r15e());
        add(q.r15f());
        add(q.r15g());
        add(q.r15i());
        add(q.r15j());
        add(q.r9());
        add(q.r10());
        add(q.r15m());
        add(q.r15n());
        break;
      case ParamCase::Case3:
        add(q.r15c());
        add(q.r15e());
        add(q.r15f());
        add(q.r15g());
        break;
      case ParamCase::Case4:
        add(q.r15c());
        add(q.r15d());
        add(q.r15e());
        add(q.r15f());
        add(q.r15g());
        add(q.r15h());
        add(q.r15j());
        add(q.r9());
        add(q.r10());
        add(q.r15m());
        add(q.r13());
        add(q.r12());
        add(q.r4a());
        add(q.r4b());
        break;
      case ParamCase::Case5:
        add(q.r15c());
        add(q.r15e());
        add(q.r15f());
        add(q.r15g());
        add(q.r15j());
        add(q.r9());
        add(q.r10());
        add(q.r15m());
        if (ge2v) {
          add(q.r18a());
          add(q.r18b());
        }
        break;
    }
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Single continuous variable families
// ---------------------------------------------------------------------------

int ineq20_k_max(const GeneratorParams& p) {
  long cap = floor_rat((p.c_max - p.startstop_ramp) / p.ramp) + 2;
  return static_cast<int>(std::min<long>(p.min_up, cap));
}

LinearInequality ineq20(const GeneratorParams& p, const Horizon& h, int t, int k) {
  Ctx c(p, h);
  if (k < 1 || k > ineq20_k_max(p)) throw std::domain_error("k outside its band");
  if (t < k || t > c.T - 1) throw std::domain_error("t outside its band");

  LinearInequality r;
  r.family = "ineq20";
  r.params["t"] = t;
  r.params["k"] = k;
  r.add(X(t), 1);
  r.add(Y(t), -c.Vb);
  r.add(Y(t + 1), -(c.Cb - c.Vb));
  r.add(U(t + 1), c.Cb - c.Vb);
  for (int s = 1; s <= k - 1; ++s) c.add_u(r, t - s + 1, c.Cb - c.Vb - (s - 1) * c.V);
  r.facet_claimed = (k == ineq20_k_max(p)) && (c.L <= 3 || t == c.T - 1);
  r.normalize();
  return r;
}

int ineq21_m_max(const GeneratorParams& p, const Horizon& h, int t) {
  // the band is empty (not clamped to {0}) when (cmax-vbar)/ramp < L-1:
  // otherwise beta goes negative and the row admits violated points
  Rational top = (p.c_max - p.startstop_ramp) / p.ramp - p.min_up + 1;
  if (top < 0) return -1;
  return static_cast<int>(std::min<long>(t - p.min_up - 1, floor_rat(top)));
}

std::pair<int, int> ineq21_n_range(const GeneratorParams& p, const Horizon& h, int t) {
  if (p.min_up == 1) return {0, 0};
  return {std::min(1, h.T - t), std::min(p.min_up - 1, h.T - t)};
}

bool ineq21_condition(const GeneratorParams& p, const Horizon& h, int t, int n) {
  if (n <= h.T - t - 1) return 2 * n >= p.min_up - 1;
  return true;
}

LinearInequality ineq21(const GeneratorParams& p, const Horizon& h, int t, int m, int n,
                        const std::vector<int>& S, bool enforce_condition) {
  Ctx c(p, h);
  if (t < c.L + 1 || t > c.T) throw std::domain_error("t outside its band");
  if (m < 0 || m > ineq21_m_max(p, h, t)) throw std::domain_error("m outside its band");
  auto [n_lo, n_hi] = ineq21_n_range(p, h, t);
  if (n < n_lo || n > n_hi) throw std::domain_error("n outside its band");
  check_set_band(S, t - m + 1, t);
  const bool cond = ineq21_condition(p, h, t, n);
  if (enforce_condition && !cond) throw std::domain_error("facet/validity condition fails");

  LinearInequality r;
  r.family = "ineq21";
  r.params["t"] = t;
  r.params["m"] = m;
  r.params["n"] = n;
  r.set_s = S;
  r.facet_claimed = cond;

  r.add(X(t), 1);
  r.add(Y(t), -c.Vb);
  long sum_gaps = 0;
  int prev = t - m;
  for (int i : S) {
    c.add_D(r, i, -c.V * (i - prev), c.L - 1);
    sum_gaps += i - prev;
    prev = i;
  }
  for (int k = 1; k <= posl(n - 1); ++k) c.add_D(r, t + k, -c.V, c.L - 1);
  const long alpha = m + c.L - 1 - sum_gaps - posl(n - 1);
  c.add_D(r, t + n, -c.V * alpha, c.L - 1);
  const Rational beta = c.Cb - c.Vb - (m + c.L - 1) * c.V;
  c.add_D(r, t - m, -beta, c.L - 1);
  // phi terms
  for (int k = 1; k <= t + c.L - c.T - 1; ++k) c.add_u(r, t - k, -c.V * k);
  for (int k = posl(t + c.L - c.T); k <= c.L - 1; ++k)
    c.add_u(r, t - k, -c.V * std::min(c.L - 1 - k, k));
  r.normalize();
  return r;
}

int ineq24_t_hat(const GeneratorParams& p, int t) {
  const int L = p.min_up;
  const int cap = std::min(t - 2, L - 2);
  if (2 * cap >= L) return t + cap;
  return std::max(t + 1, L + 1);
}

std::pair<int, int> ineq24_m_range(const GeneratorParams& p, const Horizon& h, int t) {
  const int t_hat = ineq24_t_hat(p, t);
  int lo = posl(t_hat - t - 1);
  long hi = std::min<long>(h.T - t - 1, floor_rat((p.c_max - p.startstop_ramp) / p.ramp));
  return {lo, static_cast<int>(hi)};
}

LinearInequality ineq24(const GeneratorParams& p, const Horizon& h, int t, int m,
                        const std::vector<int>& S) {
  Ctx c(p, h);
  if (t < 1 || t > c.T - 1) throw std::domain_error("t outside its band");
  auto [m_lo, m_hi] = ineq24_m_range(p, h, t);
  if (m < m_lo || m > m_hi) throw std::domain_error("m outside its band");
  const int t_hat = ineq24_t_hat(p, t);
  check_set_band(S, t_hat + 1, t + m);

  LinearInequality r;
  r.family = "ineq24";
  r.params["t"] = t;
  r.params["m"] = m;
  r.params["t_hat"] = t_hat;
  r.set_s = S;
  r.facet_claimed = true;

  r.add(X(t), 1);
  r.add(Y(t), -c.Vb);
  for (int i = t + 1; i <= t_hat - 1; ++i) c.add_D(r, i, -c.V, std::min(c.L - 1, i - 2));
  // anchored set S u {t_hat}; successor distances to S u {t+m+1}
  std::vector<int> anchored;
  anchored.push_back(t_hat);
  for (int i : S) anchored.push_back(i);
  std::sort(anchored.begin(), anchored.end());
  anchored.erase(std::unique(anchored.begin(), anchored.end()), anchored.end());
  for (size_t k = 0; k < anchored.size(); ++k) {
    int i = anchored[k];
    int succ = (k + 1 < anchored.size()) ? anchored[k + 1] : t + m + 1;
    c.add_D(r, i, -c.V * (succ - i), c.L - 1);
  }
  c.add_D(r, t + m + 1, -(c.Cb - c.Vb - m * c.V), c.L - 1);
  for (int k = 1; k <= t + c.L - c.T - 1; ++k) c.add_u(r, t - k, -c.V * k);
  for (int k = posl(t + c.L - c.T); k <= std::min(c.L - 1, t - 2); ++k)
    c.add_u(r, t - k, -c.V * std::min(c.L - 1 - k, k));
  r.normalize();
  return r;
}

// ---------------------------------------------------------------------------
// Two continuous variable families
// ---------------------------------------------------------------------------

namespace {

void require_narrow_start(const Ctx& c) {
  if (!(c.Vb < c.C + c.V))
    throw std::domain_error("family requires startstop_ramp < c_min + ramp");
}

}  // namespace

int ineq25_m_max(const GeneratorParams& p, const Horizon& h, int t) {
  return static_cast<int>(
      std::min<long>(t - 1, floor_rat((p.c_max - p.c_min) / p.ramp)));
}

std::pair<int, int> ineq25_n_range(const GeneratorParams& p, const Horizon& h, int t, int m) {
  return {std::min(1, h.T - t), std::min({m, p.min_up, h.T - t})};
}

bool ineq25_26_condition(const GeneratorParams& p, const Horizon& h, int t, int m, int n,
                         bool s_empty) {
  const int L = p.min_up;
  if (2 * std::min(m - 1, L - 2) >= L && n < std::min({m - 1, L - 2, h.T - t})) return false;
  if (s_empty && m <= L - 1 && n <= L - 1 - m && n < std::min({m, L, h.T - t})) return false;
  return true;
}

LinearInequality ineq25_26(const GeneratorParams& p, const Horizon& h, int t, int m, int n,
                           const std::vector<int>& S, bool enforce_condition) {
  Ctx c(p, h);
  require_narrow_start(c);
  if (t < 2 || t > c.T) throw std::domain_error("t outside its band");
  if (m < 1 || m > ineq25_m_max(p, h, t)) throw std::domain_error("m outside its band");
  auto [n_lo, n_hi] = ineq25_n_range(p, h, t, m);
  if (n < n_lo || n > n_hi) throw std::domain_error("n outside its band");
  check_set_band(S, t - m + c.L, t);
  const bool cond = ineq25_26_condition(p, h, t, m, n, S.empty());
  if (enforce_condition && !cond) throw std::domain_error("facet/validity condition fails");

  LinearInequality r;
  r.family = S.empty() ? "ineq25" : "ineq26";
  r.params["t"] = t;
  r.params["m"] = m;
  r.params["n"] = n;
  r.set_s = S;
  // the face degenerates when the ramp span saturates the capacity band
  // exactly, and each S element beyond the anchor past the first costs one
  // dimension (multi-gap rows decompose over the single-gap ones)
  bool degenerate = (Rational(m) * c.V == c.Cb - c.C);
  int beyond_anchor = 0;
  for (int i : S)
    if (i != t - m + c.L) ++beyond_anchor;
  if (beyond_anchor >= 2) degenerate = true;
  r.facet_claimed = cond && !degenerate;

  r.add(X(t), 1);
  r.add(X(t - m), -1);
  r.add(Y(t), -c.Vb);
  r.add(Y(t - m), c.C);
  for (int k = 1; k <= posl(n - 1); ++k)
    c.add_D(r, t + k, -c.V, std::min(c.L - 1, k + m - 1));

  if (S.empty()) {
    const Rational alpha = c.C + (m - posl(n - 1)) * c.V - c.Vb;
    c.add_D(r, t + n, -alpha, std::min(c.L - 1, n + m - 1));
  } else {
    long sum_gaps = 0;
    int prev = t - m + c.L;
    for (int i : S) {
      if (i != t - m + c.L) {
        c.add_D(r, i, -c.V * (i - prev), c.L - 1);
        sum_gaps += i - prev;
      }
      prev = i;
    }
    const long beta = m - 1 - sum_gaps - posl(n - 1);
    c.add_D(r, t + n, -c.V * beta, std::min(c.L - 1, n + m - 1));
    const int q = S.back();
    c.add_D(r, q, -(c.C + c.V - c.Vb), std::min(c.L - 1, q - (t - m) - 1));
  }
  for (int k = 1; k <= std::min(t + c.L - c.T - 1, m - 1); ++k) c.add_u(r, t - k, -c.V * k);
  for (int k = posl(t + c.L - c.T); k <= std::min(c.L - 1, m - 1); ++k)
    c.add_u(r, t - k, -c.V * std::min(c.L - 1 - k, k));
  r.normalize();
  return r;
}

int ineq27_m_max(const GeneratorParams& p, const Horizon& h, int t) {
  return static_cast<int>(
      std::min<long>(h.T - t, floor_rat((p.c_max - p.c_min) / p.ramp)));
}

LinearInequality ineq27(const GeneratorParams& p, const Horizon& h, int t, int m,
                        const std::vector<int>& S1) {
  Ctx c(p, h);
  require_narrow_start(c);
  if (t < 1 || t > c.T - 1) throw std::domain_error("t outside its band");
  if (m < 1 || m > ineq27_m_max(p, h, t)) throw std::domain_error("m outside its band");
  const int t_hat = ineq24_t_hat(p, t);
  const int t_tld = std::min(t_hat, t + m);
  check_set_band(S1, t_tld + 1, t + m);

  LinearInequality r;
  r.family = "ineq27";
  r.params["t"] = t;
  r.params["m"] = m;
  r.params["t_tilde"] = t_tld;
  r.set_s = S1;

  std::vector<int> S;
  S.push_back(t_tld);
  for (int i : S1) S.push_back(i);
  const int q = S.back();
  r.params["q"] = q;
  r.facet_claimed = (!(q == t + m && m <= c.L - 1) || (m >= (c.L + 1) / 2)) &&
                    Rational(m) * c.V != c.Cb - c.C;

  r.add(X(t), 1);
  r.add(X(t + m), -1);
  r.add(Y(t), -c.Vb);
  r.add(Y(t + m), c.C);
  for (int i = t + 1; i <= t_tld - 1; ++i) c.add_D(r, i, -c.V, std::min(c.L - 1, i - 2));
  for (size_t k = 0; k < S.size(); ++k) {
    int i = S[k];
    if (i == t + m) continue;
    int succ = (k + 1 < S.size()) ? S[k + 1] : t + m;
    c.add_D(r, i, -c.V * (succ - i), c.L - 1);
  }
  c.add_D(r, q, -(c.C + c.V - c.Vb), std::min(c.L - 1, q - 2));
  for (int k = 1; k <= t + c.L - c.T - 1; ++k) c.add_u(r, t - k, -c.V * k);
  for (int k = posl(t + c.L - c.T); k <= std::min(c.L - 1, t - 2); ++k)
    c.add_u(r, t - k, -c.V * std::min(c.L - 1 - k, k));
  r.normalize();
  return r;
}

// ---------------------------------------------------------------------------
// Three continuous variable families
// ---------------------------------------------------------------------------

LinearInequality ineq28(const GeneratorParams& p, const Horizon& h, int t) {
  Ctx c(p, h);
  require_narrow_start(c);
  if (c.L < 2) throw std::domain_error("family needs min_up >= 2");
  if (t < std::max(c.L + 1, 3) || t > c.T - 1) throw std::domain_error("t outside its band");

  LinearInequality r;
  r.family = "ineq28";
  r.params["t"] = t;
  r.facet_claimed = c.L == 3 || (c.L == 2 && t == 3);

  r.add(X(t - 2), 1);
  r.add(X(t - 1), -1);
  r.add(X(t), 1);
  r.add(Y(t - 2), -c.Vb);
  r.add(Y(t - 1), c.Vb - c.V);
  r.add(Y(t), -c.Vb);
  // (C+V-Vb)(y_{t+1} - u_{t+1} - y_t)
  r.add(Y(t + 1), -(c.C + c.V - c.Vb));
  r.add(U(t + 1), c.C + c.V - c.Vb);
  r.add(Y(t), c.C + c.V - c.Vb);
  // (Cb-Vb)(y_t - u_t - u_{t-1})
  r.add(Y(t), -(c.Cb - c.Vb));
  r.add(U(t), c.Cb - c.Vb);
  r.add(U(t - 1), c.Cb - c.Vb);
  for (int s = 0; s <= c.L - 3; ++s) c.add_u(r, t - s - 2, c.Cb - c.Vb - s * c.V);
  r.normalize();
  return r;
}

std::pair<int, int> ineq29_m_range(const GeneratorParams& p, const Horizon& h, int t) {
  // the L=2 variant is invalid at m=1 (a start-up in t-2 gives
  // rhs - lhs = vbar - cmin - ramp < 0), so its band starts at 2
  int lo = p.min_up == 2 ? 2 : posl(3 - p.min_up);
  long hi = std::min<long>(posl(t - p.min_up - 1),
                           floor_rat(pos((p.c_max - p.startstop_ramp) / p.ramp - p.min_up + 3)));
  return {lo, static_cast<int>(hi)};
}

std::pair<int, int> ineq29_s_band(const GeneratorParams& p, int t, int m) {
  return {t - m + 1, p.min_up >= 3 ? t - 1 : t - 2};
}

LinearInequality ineq29(const GeneratorParams& p, const Horizon& h, int t, int m,
                        const std::vector<int>& S) {
  Ctx c(p, h);
  if (c.L < 2) throw std::domain_error("family needs min_up >= 2");
  if (t < c.L + 1 || t > c.T) throw std::domain_error("t outside its band");
  auto [m_lo, m_hi] = ineq29_m_range(p, h, t);
  if (m < m_lo || m > m_hi) throw std::domain_error("m outside its band");
  auto [s_lo, s_hi] = ineq29_s_band(p, t, m);
  check_set_band(S, s_lo, s_hi);

  LinearInequality r;
  r.family = "ineq29";
  r.params["t"] = t;
  r.params["m"] = m;
  r.set_s = S;
  r.facet_claimed = (t == c.T);

  r.add(X(t - 2), 1);
  r.add(X(t - 1), -1);
  r.add(X(t), 1);
  r.add(Y(t - 2), -c.Vb);
  r.add(Y(t - 1), c.Vb - c.V);
  r.add(Y(t), -c.Vb);
  long sum_gaps = 0;
  int prev = t - m;
  for (int i : S) {
    c.add_D(r, i, -c.V * (i - prev), c.L - 1);
    sum_gaps += i - prev;
    prev = i;
  }
  if (c.L == 2) c.add_u(r, t - 2, pos(c.C + c.V - c.Vb));  // rhs carries -phi
  const long alpha = posl(m + c.L - 3) - sum_gaps;
  c.add_D(r, t, -c.V * alpha, c.L - 1);
  for (int k = 3; k <= c.L - 1; ++k) c.add_u(r, t - k, -c.V * (k - 2));
  const Rational beta = c.Cb - c.Vb - posl(m + c.L - 3) * c.V;
  c.add_D(r, t - m, -beta, c.L - 1);
  r.normalize();
  return r;
}

std::pair<int, int> ineq30_m_range(const GeneratorParams& p, const Horizon& h, int t) {
  const int t_hat = std::max(t + 1, p.min_up + 1);
  int lo = posl(t_hat - t - 1);
  long hi = std::min<long>(h.T - t - 1, floor_rat((p.c_max - p.startstop_ramp) / p.ramp));
  return {lo, static_cast<int>(hi)};
}

LinearInequality ineq30(const GeneratorParams& p, const Horizon& h, int t, int m,
                        const std::vector<int>& S) {
  Ctx c(p, h);
  require_narrow_start(c);  // wide start-up caps admit violated pulse patterns
  if (t < 3 || t > c.T - 1) throw std::domain_error("t outside its band");
  auto [m_lo, m_hi] = ineq30_m_range(p, h, t);
  if (m < m_lo || m > m_hi) throw std::domain_error("m outside its band");
  const int t_hat = std::max(t + 1, c.L + 1);
  check_set_band(S, t_hat + 1, t + m);

  LinearInequality r;
  r.family = "ineq30";
  r.params["t"] = t;
  r.params["m"] = m;
  r.params["t_hat"] = t_hat;
  r.set_s = S;
  r.facet_claimed = (t == 3 && c.L >= 3);

  r.add(X(t - 2), 1);
  r.add(X(t - 1), -1);
  r.add(X(t), 1);
  r.add(Y(t - 2), -c.Vb);
  r.add(Y(t - 1), c.Vb - c.V);
  r.add(Y(t), -c.Vb);
  for (int i = t + 1; i <= t_hat - 1; ++i) c.add_D(r, i, -c.V, std::min(c.L - 1, i - 2));
  for (int k = 3; k <= std::min(t - 2, c.L - 1); ++k) c.add_u(r, t - k, -c.V * (k - 2));
  std::vector<int> anchored;
  anchored.push_back(t_hat);
  for (int i : S) anchored.push_back(i);
  std::sort(anchored.begin(), anchored.end());
  anchored.erase(std::unique(anchored.begin(), anchored.end()), anchored.end());
  for (size_t k = 0; k < anchored.size(); ++k) {
    int i = anchored[k];
    int succ = (k + 1 < anchored.size()) ? anchored[k + 1] : t + m + 1;
    c.add_D(r, i, -c.V * (succ - i), c.L - 1);
  }
  c.add_D(r, t + m + 1, -(c.Cb - c.Vb - m * c.V), c.L - 1);
  r.normalize();
  return r;
}

std::vector<LinearInequality> extra_vbar_ge(const GeneratorParams& p, const Horizon& h) {
  Ctx c(p, h);
  if (!(c.Vb > c.C + c.V && c.Cb - c.C - c.V > 0 && c.Cb - c.Vb - c.V > 0))
    throw std::domain_error("family requires the wide start-up regime");
  std::vector<LinearInequality> rows;
  for (int t = 2; t <= c.T; ++t) {
    LinearInequality up;  // x_t - x_{t-1} <= (C+V) y_t - C y_{t-1} - (C+V-Vb) u_t
    up.family = "extra_up";
    up.params["t"] = t;
    up.facet_claimed = true;
    up.add(X(t), 1);
    up.add(X(t - 1), -1);
    up.add(Y(t), -(c.C + c.V));
    up.add(Y(t - 1), c.C);
    up.add(U(t), c.C + c.V - c.Vb);
    up.normalize();
    rows.push_back(std::move(up));

    LinearInequality dn;  // x_{t-1} - x_t <= Vb y_{t-1} - (Vb-V) y_t - (C+V-Vb) u_t
    dn.family = "extra_down";
    dn.params["t"] = t;
    dn.facet_claimed = true;
    dn.add(X(t - 1), 1);
    dn.add(X(t), -1);
    dn.add(Y(t - 1), -c.Vb);
    dn.add(Y(t), c.Vb - c.V);
    dn.add(U(t), c.C + c.V - c.Vb);
    dn.normalize();
    rows.push_back(std::move(dn));
  }
  // the alternating row needs a two-period minimum up time: with L = 1 a
  // single-period pulse reaches x = vbar > cmin + ramp and violates it
  for (int t = 1; p.min_up >= 2 && t <= c.T - 2; ++t) {
    LinearInequality vee;  // x_t - x_{t+1} + x_{t+2} >= C y_t - (C+V) y_{t+1} + C y_{t+2}
    vee.family = "extra_vee";
    vee.params["t"] = t;
    vee.facet_claimed = true;
    vee.add(X(t), -1);
    vee.add(X(t + 1), 1);
    vee.add(X(t + 2), -1);
    vee.add(Y(t), c.C);
    vee.add(Y(t + 1), -(c.C + c.V));
    vee.add(Y(t + 2), c.C);
    vee.normalize();
    rows.push_back(std::move(vee));
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Catalog and sweeps
// ---------------------------------------------------------------------------

std::vector<FamilySpec> family_catalog() {
  return {
      {"q2", "two-period window system (hull at T=2)", "t in [2,T]",
       "always (ramp pair only when cmax-cmin-ramp >= 0)", "all rows"},
      {"q3", "three-period window system (hull at T=3)", "t in [3,T], window limits in {1,2}",
       "row list selected by parameter regime", "all rows"},
      {"ineq20", "single-period upper bound with trailing start-up window",
       "1 <= k <= min{L, floor((cmax-vbar)/ramp)+2}, t in [k, T-1]", "always",
       "k at band top; L<=3 all t, else t=T-1"},
      {"ineq21", "exponential upper bound from start-ups before t",
       "t in [L+1,T], m in [0, min{t-L-1, [(cmax-vbar)/ramp-L+1]+}], n by L, S in (t-m, t]",
       "always; gated on 2n >= L-1 when n <= T-t-1", "same condition"},
      {"ineq24", "exponential upper bound from shut-downs after t",
       "t in [1,T-1], m in [[t_hat-t-1]+, min{T-t-1,(cmax-vbar)/ramp}], S in (t_hat, t+m]",
       "always", "whole band"},
      {"ineq25", "ramp-up difference bound, closed form",
       "t in [2,T], m in [1, min{t-1,(cmax-cmin)/ramp}], n in [min{1,T-t}, min{m,L,T-t}]",
       "vbar < cmin + ramp; conditions (i)/(ii)", "same conditions"},
      {"ineq26", "ramp-up difference bound, exponential form", "as ineq25 plus S in [t-m+L, t]",
       "vbar < cmin + ramp; condition (i)", "same condition"},
      {"ineq27", "ramp-down difference bound, exponential form",
       "t in [1,T-1], m in [1, min{T-t,(cmax-cmin)/ramp}], S1 in (t_tilde, t+m]",
       "vbar < cmin + ramp", "q=t+m and m<=L-1 imply m >= floor((L+1)/2)"},
      {"ineq28", "three-period alternating bound, fixed size",
       "t in [max{L+1,3}, T-1]", "vbar < cmin + ramp, L >= 2", "L <= 3"},
      {"ineq29", "three-period alternating bound from start-ups before t",
       "t in [L+1,T], m in [[3-L]+, min{[t-L-1]+, [(cmax-vbar)/ramp-L+3]+}]", "L >= 2", "t = T"},
      {"ineq30", "three-period alternating bound from shut-downs after t",
       "t in [3,T-1], m in [[t_hat-t-1]+, min{T-t-1,(cmax-vbar)/ramp}]", "always", "t = 3"},
      {"extra_up/extra_down/extra_vee", "wide start-up regime ramp and alternating rows",
       "t ranges over the horizon", "vbar > cmin+ramp, cmax-cmin-ramp > 0, cmax-vbar-ramp > 0",
       "all rows"},
  };
}

namespace {

void for_each_subset(int lo, int hi, int band_cap,
                     const std::function<void(const std::vector<int>&)>& fn) {
  int len = hi - lo + 1;
  if (len < 0) len = 0;
  if (len > band_cap) return;
  for (unsigned mask = 0; mask < (1u << len); ++mask) {
    std::vector<int> s;
    for (int b = 0; b < len; ++b)
      if (mask & (1u << b)) s.push_back(lo + b);
    fn(s);
  }
}

}  // namespace

void for_each_family_row(const GeneratorParams& p, const Horizon& h, int band_cap,
                         const std::function<void(const LinearInequality&)>& fn) {
  const int T = h.T;
  const int Lw = std::min(p.min_up, 2);
  const int lw = std::min(p.min_down, 2);

  for (int t = 2; t <= T; ++t)
    for (const auto& r : q2_system(p, h, t)) fn(r);
  for (int t = 3; t <= T; ++t)
    for (const auto& r : q3_system(p, Lw, lw, h, t)) fn(r);

  for (int k = 1; k <= ineq20_k_max(p); ++k)
    for (int t = k; t <= T - 1; ++t) fn(ineq20(p, h, t, k));

  for (int t = p.min_up + 1; t <= T; ++t) {
    auto [n_lo, n_hi] = ineq21_n_range(p, h, t);
    for (int m = 0; m <= ineq21_m_max(p, h, t); ++m)
      for (int n = n_lo; n <= n_hi; ++n) {
        if (!ineq21_condition(p, h, t, n)) continue;
        for_each_subset(t - m + 1, t, band_cap,
                        [&](const std::vector<int>& S) { fn(ineq21(p, h, t, m, n, S)); });
      }
  }

  for (int t = 1; t <= T - 1; ++t) {
    auto [m_lo, m_hi] = ineq24_m_range(p, h, t);
    const int t_hat = ineq24_t_hat(p, t);
    for (int m = m_lo; m <= m_hi; ++m)
      for_each_subset(t_hat + 1, t + m, band_cap,
                      [&](const std::vector<int>& S) { fn(ineq24(p, h, t, m, S)); });
  }

  if (p.startstop_ramp < p.c_min + p.ramp) {
    for (int t = 2; t <= T; ++t)
      for (int m = 1; m <= ineq25_m_max(p, h, t); ++m) {
        auto [n_lo, n_hi] = ineq25_n_range(p, h, t, m);
        for (int n = n_lo; n <= n_hi; ++n)
          for_each_subset(t - m + p.min_up, t, band_cap, [&](const std::vector<int>& S) {
            if (!ineq25_26_condition(p, h, t, m, n, S.empty())) return;
            fn(ineq25_26(p, h, t, m, n, S));
          });
      }
    for (int t = 1; t <= T - 1; ++t)
      for (int m = 1; m <= ineq27_m_max(p, h, t); ++m) {
        const int t_tld = std::min(ineq24_t_hat(p, t), t + m);
        for_each_subset(t_tld + 1, t + m, band_cap,
                        [&](const std::vector<int>& S1) { fn(ineq27(p, h, t, m, S1)); });
      }
    if (p.min_up >= 2)
      for (int t = std::max(p.min_up + 1, 3); t <= T - 1; ++t) fn(ineq28(p, h, t));
  }

  if (p.min_up >= 2)
    for (int t = p.min_up + 1; t <= T; ++t) {
      auto [m_lo, m_hi] = ineq29_m_range(p, h, t);
      for (int m = m_lo; m <= m_hi; ++m) {
        auto [s_lo, s_hi] = ineq29_s_band(p, t, m);
        for_each_subset(s_lo, s_hi, band_cap,
                        [&](const std::vector<int>& S) { fn(ineq29(p, h, t, m, S)); });
      }
    }

  if (p.startstop_ramp < p.c_min + p.ramp)
    for (int t = 3; t <= T - 1; ++t) {
      auto [m_lo, m_hi] = ineq30_m_range(p, h, t);
      const int t_hat = std::max(t + 1, p.min_up + 1);
      for (int m = m_lo; m <= m_hi; ++m)
        for_each_subset(t_hat + 1, t + m, band_cap,
                        [&](const std::vector<int>& S) { fn(ineq30(p, h, t, m, S)); });
    }

  if (p.startstop_ramp > p.c_min + p.ramp && p.c_max - p.c_min - p.ramp > 0 &&
      p.c_max - p.startstop_ramp - p.ramp > 0)
    for (const auto& r : extra_vbar_ge(p, h)) fn(r);
}

}  // namespace ucpoly
