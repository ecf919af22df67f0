#include "ucpoly/types.hpp"

#include <algorithm>
#include <sstream>

namespace ucpoly {

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt n(text.substr(0, slash));
    BigInt d(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(n, d);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(BigInt(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  bool neg = !digits.empty() && digits[0] == '-';
  size_t frac_len = text.size() - dot - 1;
  BigInt n(digits);
  BigInt d = 1;
  for (size_t i = 0; i < frac_len; ++i) d *= 10;
  (void)neg;
  return Rational(n, d);
}

std::string to_string(const VarKey& k) {
  const char* names[] = {"x", "y", "u"};
  return std::string(names[static_cast<int>(k.kind)]) + std::to_string(k.t);
}

void GeneratorParams::validate() const {
  if (!(0 <= c_min && c_min <= startstop_ramp && startstop_ramp <= c_max))
    throw std::invalid_argument("generator limits must satisfy 0 <= c_min <= startstop_ramp <= c_max");
  if (!(ramp > 0)) throw std::invalid_argument("ramp must be positive");
  if (min_up < 1 || min_down < 1) throw std::invalid_argument("min up/down times must be >= 1");
}

GeneratorParams make_params(const Rational& c_min, const Rational& c_max, const Rational& ramp,
                            const Rational& startstop_ramp, int min_up, int min_down) {
  GeneratorParams p;
  p.c_min = c_min;
  p.c_max = c_max;
  p.ramp = ramp;
  p.startstop_ramp = startstop_ramp;
  p.min_up = min_up;
  p.min_down = min_down;
  p.validate();
  return p;
}

std::string to_string(ParamCase c) { return "Case" + std::to_string(static_cast<int>(c)); }
std::string to_string(TwoVRegime r) { return r == TwoVRegime::GE ? "GE" : "LT"; }

CaseInfo classify(const GeneratorParams& p) {
  p.validate();
  if (p.startstop_ramp < p.c_min)
    throw std::invalid_argument("startstop_ramp below c_min is outside the admissible parameter set");
  const Rational& C = p.c_min;
  const Rational& Cb = p.c_max;
  const Rational& V = p.ramp;
  const Rational& Vb = p.startstop_ramp;

  CaseInfo info;
  info.reg_2v = (Cb - C - 2 * V >= 0) ? TwoVRegime::GE : TwoVRegime::LT;

  const bool small_vbar = Vb < C + V;     // start-stop cap below one ramp over c_min
  const bool room_after_start = Cb - Vb - V >= 0;
  const bool wide_band = Cb - C - V >= 0;

  if (small_vbar) {
    if (room_after_start) info.case_id = ParamCase::Case1;
    else if (wide_band) info.case_id = ParamCase::Case2;
    else info.case_id = ParamCase::Case3;
  } else {
    // Vb >= C + V forces Cb - C - V >= 0 (Cb >= Vb).
    if (room_after_start) info.case_id = ParamCase::Case4;
    else info.case_id = ParamCase::Case5;
  }
  return info;
}

Point point_from_schedule(const Schedule& s, const std::vector<Rational>& x, const Horizon& h) {
  Point pt(h);
  for (int t = 1; t <= h.T; ++t) {
    pt.x(t) = x[static_cast<size_t>(t - 1)];
    pt.y(t) = s.yt(t);
  }
  for (int t = 2; t <= h.T; ++t) pt.u(t) = s.ut(t);
  return pt;
}

PointD to_double_point(const Point& p) {
  PointD out(p.horizon);
  for (int i = 0; i < p.z.size(); ++i) out.z[i] = to_double(p.z[i]);
  return out;
}

void LinearInequality::add(const VarKey& k, const Rational& c) {
  if (c == 0) return;
  coeffs.emplace_back(k, c);
}

void LinearInequality::normalize() {
  std::sort(coeffs.begin(), coeffs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<VarKey, Rational>> merged;
  for (auto& [k, c] : coeffs) {
    if (!merged.empty() && merged.back().first == k) merged.back().second += c;
    else merged.emplace_back(k, c);
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const auto& kv) { return kv.second == 0; }),
               merged.end());
  coeffs = std::move(merged);
}

VectorR LinearInequality::dense_row(const Horizon& h) const {
  VectorR row = VectorR::Zero(h.dim());
  for (const auto& [k, c] : coeffs) row[h.index(k)] += c;
  return row;
}

bool LinearInequality::inside(const Horizon& h) const {
  for (const auto& [k, c] : coeffs)
    if (!h.contains(k)) return false;
  return true;
}

std::string LinearInequality::describe() const {
  std::ostringstream os;
  os << family << ": ";
  bool first = true;
  for (const auto& [k, c] : coeffs) {
    if (!first) os << " + ";
    os << to_string(c) << "*" << to_string(k);
    first = false;
  }
  os << " <= " << to_string(rhs);
  return os.str();
}

}  // namespace ucpoly
