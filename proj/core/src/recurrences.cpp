#include "simplexft/recurrences.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "simplexft/errors.hpp"
#include "simplexft/hypergeom.hpp"

namespace simplexft {
namespace {

enum class Family { hyper, s1, s2, sr };

Family family_of(RelationId id) noexcept {
  switch (id) {
  case RelationId::H1:
  case RelationId::H2:
  case RelationId::H3:
    return Family::hyper;
  case RelationId::S1_STAR1:
  case RelationId::S1_STAR2:
  case RelationId::S1_STAR3:
  case RelationId::S1_STAR4:
  case RelationId::S1_STAR6:
  case RelationId::S1_STAR7:
    return Family::s1;
  case RelationId::S2_101:
  case RelationId::S2_102:
  case RelationId::S2_103:
  case RelationId::S2_104:
  case RelationId::S2_106:
  case RelationId::S2_107:
    return Family::s2;
  default:
    return Family::sr;
  }
}

// Throws unless every factor v, v+1, ..., v+k-1 is away from zero.
void guard(RelationId id, Complex v, const char* what, unsigned k = 1) {
  for (unsigned j = 0; j < k; ++j) {
    if (std::abs(v + static_cast<double>(j)) < kDegenerateTolerance) {
      throw DegenerateParameterError(std::string(to_string(id)) + ": denominator " + what + " vanishes");
    }
  }
}

Complex poch(Complex v, unsigned k) { return pochhammer(v, k); }

const HyperRelationParams& hyper(RelationId id, const RelationParams& params) {
  if (const auto* p = std::get_if<HyperRelationParams>(&params)) {
    return *p;
  }
  throw DimensionMismatchError(std::string(to_string(id)) + ": expects 3F2 parameters");
}

const FamilyRelationParams& fam(RelationId id, const RelationParams& params) {
  if (const auto* p = std::get_if<FamilyRelationParams>(&params)) {
    return *p;
  }
  throw DimensionMismatchError(std::string(to_string(id)) + ": expects S-family parameters");
}

// Scalars shared by the family relations. Names follow the 1-based notation:
// A = |a|, A2 = |a^2|, N2 = |n^2| and so on; the *_r values refer to the last axis.
struct FamilyScalars {
  double n1, N2, Nn, a1, b1, A, A2, B, B2;
  Complex x1;
  double nr, ar, ar1, br, br1;
  Complex xr;
};

FamilyScalars scalars(const FamilyRelationParams& p) {
  const SParams& s = p.s;
  const std::size_t r = s.rank();
  FamilyScalars v{};
  v.n1 = s.n[0];
  v.N2 = s.n.tail(1);
  v.Nn = s.n.total();
  v.a1 = s.a[0];
  v.b1 = s.b[0];
  v.A = s.a.total();
  v.A2 = s.a.tail(1);
  v.B = s.b.total();
  v.B2 = s.b.tail(1);
  v.x1 = p.x[0];
  v.nr = s.n[r - 1];
  v.ar = s.a[r - 1];
  v.ar1 = s.a[r];
  v.br = s.b[r - 1];
  v.br1 = s.b[r];
  v.xr = p.x[r - 1];
  return v;
}

// Coefficients of the relations that shift n_1 and b_1 (first axis).
std::vector<Complex> first_axis_n_shift(RelationId id, const FamilyScalars& v) {
  // (*1), (101), T5.14 share one general form.
  const double n1 = v.n1;
  guard(id, n1, "(n_1)_2", 2);
  const Complex h = v.b1 - 1.0 + 0.5 * v.x1;
  const Complex c0 = h / n1;
  const Complex c1 = ((2.0 * v.N2 + v.A2 + v.B2) * (v.N2 + v.A) -
                      (n1 + 2.0 * v.N2 + v.A + v.B - 1.0) * (v.N2 + v.A2 + 0.5 * v.x1)) /
                         poch(n1, 2) +
                     (n1 + 3.0 * v.N2 + v.a1 + 2.0 * v.A2 - v.b1 + v.B2 + 2.0 - 0.5 * v.x1) / n1;
  const Complex c2 = -(n1 + 2.0 * v.N2 + v.A2 + v.B2 + 1.0) * (v.Nn + v.A + 1.0) / poch(n1, 2);
  return {c0, c1, c2};
}

std::vector<Complex> first_axis_b_shift(RelationId id, const FamilyScalars& v) {
  // (*2), (102), T5.15
  const double d = v.n1 + 2.0 * v.N2 + v.A + v.B;
  guard(id, d - 2.0, "(|n| + |n^2| + |a| + |b| - 2)_2", 2);
  const Complex h = v.b1 - 1.0 + 0.5 * v.x1;
  const Complex c0 = -h / (d - 1.0);
  const Complex c1 = ((2.0 * v.N2 + v.A2 + v.B2) * (v.N2 + v.A) + v.n1 * (v.N2 + v.A2 + 0.5 * v.x1)) /
                         poch(d - 2.0, 2) +
                     (v.n1 - v.N2 - v.A2 + 2.0 * v.b1 - 3.0 + 0.5 * v.x1) / (d - 1.0);
  const Complex c2 = -(v.n1 + v.a1 + v.b1 - 2.0) * (v.Nn + v.B - 2.0) / poch(d - 2.0, 2);
  return {c0, c1, c2};
}

std::vector<Complex> last_axis_ab_shift(RelationId id, const FamilyScalars& v) {
  // (*3), (103), T5.16 on the last pair (a_r, a_{r+1}), (b_r, b_{r+1}).
  const Complex u = v.ar1 + 0.5 * v.xr;
  guard(id, u - 1.0, "(a_{r+1} + x_r/2 - 1)_2", 2);
  const double ar_sum = v.ar + v.ar1;
  const double br_sum = v.br + v.br1;
  const Complex c0 = -(v.br - 1.0 + 0.5 * v.xr) / u;
  const Complex c1 = (ar_sum * (v.ar1 + v.br1) + v.nr * (v.nr + ar_sum + br_sum - 1.0)) / poch(u - 1.0, 2) -
                     (ar_sum - v.br + v.br1 + 2.0 - v.xr) / u;
  const Complex c2 = -(v.ar + 1.0 - 0.5 * v.xr) * (v.br1 + 1.0 - 0.5 * v.xr) / poch(u - 1.0, 2);
  return {c0, c1, c2};
}

std::vector<Complex> first_axis_ab_shift(RelationId id, const FamilyScalars& v) {
  // (104), T5.17; (*4) is the rank-1 case up to the misprint handled by the caller.
  const double e = v.N2 + v.A;
  guard(id, e - 1.0, "(|n^2| + |a| - 1)_3", 3);
  const double d = v.n1 + 2.0 * v.N2 + v.A + v.B;
  const Complex c0 = -(v.b1 - 1.0 + 0.5 * v.x1) / (e - 1.0);
  const Complex c1 =
      ((2.0 * v.N2 + 2.0 * v.A + 1.0) * (2.0 * v.N2 + v.A2 + v.B - 2.0 + 0.5 * v.x1) + v.n1 * (d - 1.0)) /
          poch(e - 1.0, 2) -
      (2.0 * v.N2 + v.A + v.B - 1.0) * (v.N2 + v.A2 + 0.5 * v.x1) / poch(e - 1.0, 2) -
      (2.0 * v.N2 + v.A2 + v.B2 - 1.0) / (e - 1.0);
  const Complex c2 = -(v.Nn + v.A + 1.0) * (v.Nn + v.B - 2.0) * (v.a1 + 1.0 - 0.5 * v.x1) / poch(e - 1.0, 3);
  return {c0, c1, c2};
}

std::vector<Complex> last_axis_b_shift(RelationId id, const FamilyScalars& v) {
  // (106), T5.18 on (b_r, b_{r+1}).
  const double e = v.ar1 + v.br1;
  guard(id, e - 1.0, "(a_{r+1} + b_{r+1} - 1)_3", 3);
  const double ar_sum = v.ar + v.ar1;
  const double br_sum = v.br + v.br1;
  const Complex c0 = -(v.br - 1.0 + 0.5 * v.xr) / (e - 1.0);
  const Complex c1 = (v.nr * (v.nr + ar_sum + br_sum - 1.0) - (v.ar1 + 0.5 * v.xr) * (ar_sum + br_sum - 1.0)) /
                         poch(e - 1.0, 2) +
                     (2.0 * e + 1.0) * (ar_sum + v.br - 2.0 + 0.5 * v.xr) / poch(e - 1.0, 2) -
                     (ar_sum - 1.0) / (e - 1.0);
  const Complex c2 = -(v.nr + v.ar + v.br - 2.0) * (v.nr + e + 1.0) * (v.br1 + 1.0 - 0.5 * v.xr) / poch(e - 1.0, 3);
  return {c0, c1, c2};
}

std::vector<Complex> first_axis_a_shift(const FamilyScalars& v) {
  // (*7), (107), T5.19
  return {v.N2 + v.A, -(v.n1 + 2.0 * v.N2 + v.A + v.B - 1.0), v.Nn + v.B - 1.0};
}

// (*4) and (*6) as printed; `corrected` swaps the misprinted factor
// (n_1 + a_1 + a_2 + b_1 + b_2 - 1) for (a_1 + a_2 + b_1 + b_2 - 1).
std::vector<Complex> star4(const FamilyScalars& v, bool corrected) {
  const RelationId id = RelationId::S1_STAR4;
  const double a1 = v.a1, a2 = v.ar1, b1 = v.b1, b2 = v.br1, n1 = v.n1;
  const Complex x = v.x1;
  const double e = a1 + a2;
  guard(id, e - 1.0, "(a_1 + a_2 - 1)_3", 3);
  const double q = n1 + a1 + a2 + b1 + b2;
  const double mid = corrected ? a1 + a2 + b1 + b2 - 1.0 : q - 1.0;
  const Complex c0 = -(b1 - 1.0 + 0.5 * x) / (e - 1.0);
  const Complex c1 = ((2.0 * e + 1.0) * (a2 + b1 + b2 - 2.0 + 0.5 * x) + n1 * (q - 1.0)) / poch(e - 1.0, 2) -
                     mid * (a2 + 0.5 * x) / poch(e - 1.0, 2) - (a2 + b2 - 1.0) / (e - 1.0);
  const Complex c2 = -(n1 + e + 1.0) * (n1 + b1 + b2 - 2.0) * (a1 + 1.0 - 0.5 * x) / poch(e - 1.0, 3);
  return {c0, c1, c2};
}

std::vector<Complex> star6(const FamilyScalars& v, bool corrected) {
  const RelationId id = RelationId::S1_STAR6;
  const double a1 = v.a1, a2 = v.ar1, b1 = v.b1, b2 = v.br1, n1 = v.n1;
  const Complex x = v.x1;
  const double e = a2 + b2;
  guard(id, e - 1.0, "(a_2 + b_2 - 1)_3", 3);
  const double q = n1 + a1 + a2 + b1 + b2;
  const double mid = corrected ? a1 + a2 + b1 + b2 - 1.0 : q - 1.0;
  const Complex c0 = -(b1 - 1.0 + 0.5 * x) / (e - 1.0);
  const Complex c1 = ((2.0 * e + 1.0) * (a1 + a2 + b1 - 2.0 + 0.5 * x) + n1 * (q - 1.0)) / poch(e - 1.0, 2) -
                     mid * (a2 + 0.5 * x) / poch(e - 1.0, 2) - (a1 + a2 - 1.0) / (e - 1.0);
  const Complex c2 = -(n1 + e + 1.0) * (n1 + a1 + b1 - 2.0) * (b2 + 1.0 - 0.5 * x) / poch(e - 1.0, 3);
  return {c0, c1, c2};
}

std::vector<Complex> family_coefficients(RelationId id, const FamilyRelationParams& p, bool corrected) {
  const FamilyScalars v = scalars(p);
  switch (id) {
  case RelationId::S1_STAR1:
  case RelationId::S2_101:
  case RelationId::SR_T514:
    return first_axis_n_shift(id, v);
  case RelationId::S1_STAR2:
  case RelationId::S2_102:
  case RelationId::SR_T515:
    return first_axis_b_shift(id, v);
  case RelationId::S1_STAR3:
  case RelationId::SR_T516:
    return last_axis_ab_shift(id, v);
  case RelationId::S2_103: {
    std::vector<Complex> c = last_axis_ab_shift(id, v);
    if (!corrected) {
      c[2] = -c[2]; // printed with a + sign
    }
    return c;
  }
  case RelationId::S1_STAR4:
    return star4(v, corrected);
  case RelationId::S2_104:
  case RelationId::SR_T517:
    return first_axis_ab_shift(id, v);
  case RelationId::S1_STAR6:
    return star6(v, corrected);
  case RelationId::S2_106:
  case RelationId::SR_T518:
    return last_axis_b_shift(id, v);
  case RelationId::S1_STAR7:
  case RelationId::S2_107:
  case RelationId::SR_T519:
    return first_axis_a_shift(v);
  default:
    break;
  }
  throw DimensionMismatchError(std::string(to_string(id)) + ": not an S-family relation");
}

Complex hyp(double m1, double m2, double m3, double s1, double s2, Complex z) {
  return hyp3f2(m1, m2, m3, s1, s2, z);
}

SParams shifted(const SParams& s, int dn1, std::size_t axis, int da, int db, std::size_t axis2 = 0,
                int da2 = 0, int db2 = 0) {
  SParams out = s;
  out.n[0] = static_cast<unsigned>(static_cast<int>(out.n[0]) + dn1);
  out.a[axis] += da;
  out.b[axis] += db;
  out.a[axis2] += da2;
  out.b[axis2] += db2;
  return out;
}

} // namespace

const char* to_string(RelationId id) noexcept {
  switch (id) {
  case RelationId::H1: return "H1";
  case RelationId::H2: return "H2";
  case RelationId::H3: return "H3";
  case RelationId::S1_STAR1: return "S1_STAR1";
  case RelationId::S1_STAR2: return "S1_STAR2";
  case RelationId::S1_STAR3: return "S1_STAR3";
  case RelationId::S1_STAR4: return "S1_STAR4";
  case RelationId::S1_STAR6: return "S1_STAR6";
  case RelationId::S1_STAR7: return "S1_STAR7";
  case RelationId::S2_101: return "S2_101";
  case RelationId::S2_102: return "S2_102";
  case RelationId::S2_103: return "S2_103";
  case RelationId::S2_104: return "S2_104";
  case RelationId::S2_106: return "S2_106";
  case RelationId::S2_107: return "S2_107";
  case RelationId::SR_T514: return "SR_T514";
  case RelationId::SR_T515: return "SR_T515";
  case RelationId::SR_T516: return "SR_T516";
  case RelationId::SR_T517: return "SR_T517";
  case RelationId::SR_T518: return "SR_T518";
  case RelationId::SR_T519: return "SR_T519";
  }
  return "unknown";
}

std::optional<RelationId> relation_from_string(std::string_view name) {
  for (const RelationId id : kAllRelations) {
    if (name == to_string(id)) {
      return id;
    }
  }
  return std::nullopt;
}

std::size_t term_count(RelationId id) noexcept {
  return id == RelationId::H1 || id == RelationId::H2 ? 4 : 3;
}

void validate(RelationId id, const RelationParams& params) {
  const Family f = family_of(id);
  if (f == Family::hyper) {
    hyper(id, params);
    return;
  }
  const FamilyRelationParams& p = fam(id, params);
  validate_dimensions(p.s);
  const std::size_t r = p.s.rank();
  if (p.x.size() != r) {
    throw DimensionMismatchError(std::string(to_string(id)) + ": need one x per axis");
  }
  if ((f == Family::s1 && r != 1) || (f == Family::s2 && r != 2)) {
    throw DimensionMismatchError(std::string(to_string(id)) + ": needs r = " + (f == Family::s1 ? "1" : "2"));
  }
}

std::vector<TwoPartCoefficient> hyper_coefficient_parts(RelationId id, const HyperRelationParams& p) {
  const double m1 = p.m1, m2 = p.m2, m3 = p.m3, s1 = p.s1, s2 = p.s2;
  switch (id) {
  case RelationId::H1: {
    guard(id, m1 - 1.0, "(m_1 - 1)_2", 2);
    const double p2 = pochhammer(m1 - 1.0, 2u);
    const double b1 = (s1 + s2 + 1.0 - 3.0 * m1) / m1;
    const double b2 = (s1 * s2 + (m1 - 1.0) * (3.0 * m1 - 2.0 * (s1 + s2 + 1.0))) / p2;
    const double b3 = -(m1 - s1 - 1.0) * (m1 - s2 - 1.0) / p2;
    const double c1 = (2.0 * m1 - m2 - m3 - 1.0) / m1;
    const double c2 = -((m1 - 1.0) * (m1 - m2 - m3 - 1.0) + m2 * m3) / p2;
    return {{-1.0, 1.0}, {-b1, -c1}, {-b2, -c2}, {-b3, 0.0}};
  }
  case RelationId::H2: {
    guard(id, s1 - 1.0, "(s_1 - 1)_3", 3);
    const double b1 = (s2 - 2.0 * s1) / (s1 - 1.0);
    const double b2 = (s1 - s2 + 1.0) / (s1 - 1.0);
    const double c1 = (3.0 * s1 - m1 - m2 - m3) / (s1 - 1.0);
    const double c2 = ((2.0 * s1 + 1.0) * (m1 + m2 + m3) - 3.0 * (s1 - 1.0) * (s1 + 2.0) - 7.0 - m1 * m2 -
                       m1 * m3 - m2 * m3) /
                      pochhammer(s1 - 1.0, 2u);
    const double c3 = (s1 - m1 + 1.0) * (s1 - m2 + 1.0) * (s1 - m3 + 1.0) / pochhammer(s1 - 1.0, 3u);
    return {{-1.0, 1.0}, {-b1, -c1}, {-b2, -c2}, {0.0, -c3}};
  }
  case RelationId::H3:
    return {{s1, 0.0}, {m1 - s1, 0.0}, {-m1, 0.0}};
  default:
    break;
  }
  throw DimensionMismatchError(std::string(to_string(id)) + ": not a 3F2 contiguous relation");
}

std::vector<Complex> coefficients(RelationId id, const RelationParams& params) {
  validate(id, params);
  if (family_of(id) == Family::hyper) {
    const HyperRelationParams& p = hyper(id, params);
    std::vector<Complex> out;
    for (const TwoPartCoefficient& c : hyper_coefficient_parts(id, p)) {
      out.push_back(c.at(p.z));
    }
    return out;
  }
  return family_coefficients(id, fam(id, params), false);
}

std::vector<Complex> corrected_coefficients(RelationId id, const RelationParams& params) {
  if (!has_known_misprint(id)) {
    return coefficients(id, params);
  }
  validate(id, params);
  return family_coefficients(id, fam(id, params), true);
}

bool has_known_misprint(RelationId id) noexcept {
  return id == RelationId::S1_STAR4 || id == RelationId::S1_STAR6 || id == RelationId::S2_103;
}

std::string misprint_note(RelationId id) {
  switch (id) {
  case RelationId::S1_STAR4:
  case RelationId::S1_STAR6:
    return "middle coefficient: (n1+a1+a2+b1+b2-1)(a2+x/2) should read (a1+a2+b1+b2-1)(a2+x/2)";
  case RelationId::S2_103:
    return "B3 has the wrong sign: -(a2+1-x2/2)(b3+1-x2/2)/(a3-1+x2/2)_2";
  default:
    return "";
  }
}

std::vector<Complex> terms(RelationId id, const RelationParams& params) {
  validate(id, params);
  if (family_of(id) == Family::hyper) {
    const HyperRelationParams& p = hyper(id, params);
    const double m1 = p.m1, m2 = p.m2, m3 = p.m3, s1 = p.s1, s2 = p.s2;
    const Complex z = p.z;
    switch (id) {
    case RelationId::H1:
      return {hyp(m1 + 1.0, m2, m3, s1, s2, z), hyp(m1, m2, m3, s1, s2, z), hyp(m1 - 1.0, m2, m3, s1, s2, z),
              hyp(m1 - 2.0, m2, m3, s1, s2, z)};
    case RelationId::H2:
      return {hyp(m1, m2, m3, s1 - 1.0, s2, z), hyp(m1, m2, m3, s1, s2, z), hyp(m1, m2, m3, s1 + 1.0, s2, z),
              hyp(m1, m2, m3, s1 + 2.0, s2, z)};
    default:
      return {hyp(m1, m2, m3, s1, s2, z), hyp(m1, m2, m3, s1 + 1.0, s2, z),
              hyp(m1 + 1.0, m2, m3, s1 + 1.0, s2, z)};
    }
  }
  const FamilyRelationParams& p = fam(id, params);
  const SParams& s = p.s;
  const std::size_t last = s.rank() - 1;
  std::vector<SParams> shifts;
  switch (id) {
  case RelationId::S1_STAR1:
  case RelationId::S2_101:
  case RelationId::SR_T514:
    shifts = {s, shifted(s, 1, 0, 0, -1), shifted(s, 2, 0, 0, -2)};
    break;
  case RelationId::S1_STAR2:
  case RelationId::S2_102:
  case RelationId::SR_T515:
    shifts = {s, shifted(s, 0, 0, 0, -1), shifted(s, 0, 0, 0, -2)};
    break;
  case RelationId::S1_STAR3:
  case RelationId::S2_103:
  case RelationId::SR_T516:
    shifts = {s, shifted(s, 0, last, 1, -1, last + 1, -1, 1), shifted(s, 0, last, 2, -2, last + 1, -2, 2)};
    break;
  case RelationId::S1_STAR4:
  case RelationId::S2_104:
  case RelationId::SR_T517:
    shifts = {s, shifted(s, 0, 0, 1, -1), shifted(s, 0, 0, 2, -2)};
    break;
  case RelationId::S1_STAR6:
  case RelationId::S2_106:
  case RelationId::SR_T518:
    shifts = {s, shifted(s, 0, last, 0, -1, last + 1, 0, 1), shifted(s, 0, last, 0, -2, last + 1, 0, 2)};
    break;
  default:
    shifts = {s, shifted(s, 0, 0, 1, 0), shifted(s, 0, 0, 1, -1)};
    break;
  }
  std::vector<Complex> out;
  for (const SParams& q : shifts) {
    out.push_back(s_eval(q, p.x));
  }
  return out;
}

RelationEvaluation evaluate_relation(RelationId id, const RelationParams& params,
                                     const std::vector<Complex>& coefficients) {
  RelationEvaluation ev;
  ev.coefficients = coefficients;
  ev.terms = terms(id, params);
  if (ev.terms.size() != coefficients.size()) {
    throw DimensionMismatchError(std::string(to_string(id)) + ": coefficient count does not match term count");
  }
  for (std::size_t k = 0; k < ev.terms.size(); ++k) {
    const Complex t = coefficients[k] * ev.terms[k];
    ev.sum += t;
    ev.scale = std::max(ev.scale, std::abs(t));
  }
  ev.residual = ev.scale > 0.0 ? std::abs(ev.sum) / ev.scale : 0.0;
  return ev;
}

double residual(RelationId id, const RelationParams& params) {
  return evaluate_relation(id, params, coefficients(id, params)).residual;
}

VerificationReport relation_report(RelationId id, const RelationParams& params,
                                   const std::vector<Complex>& coefficients, double tolerance) {
  const RelationEvaluation ev = evaluate_relation(id, params, coefficients);
  ParamList list;
  if (const auto* h = std::get_if<HyperRelationParams>(&params)) {
    list.add("m1", h->m1).add("m2", h->m2).add("m3", h->m3).add("s1", h->s1).add("s2", h->s2);
    list.add("z", std::vector<double>{h->z.real(), h->z.imag()});
  } else {
    const auto& f = std::get<FamilyRelationParams>(params);
    std::vector<double> xr;
    std::vector<double> xi;
    for (const Complex v : f.x) {
      xr.push_back(v.real());
      xi.push_back(v.imag());
    }
    list.add("r", static_cast<unsigned>(f.s.rank())).add("n", f.s.n).add("a", f.s.a).add("b", f.s.b);
    list.add("x_re", xr).add("x_im", xi);
  }
  return make_report(to_string(id), std::move(list), ev.sum, 0.0, tolerance, ev.scale > 0.0 ? ev.scale : 1.0);
}

namespace {

RelationParams sample_params(RelationId id, Rng& rng, int lo, int hi) {
  const Family f = family_of(id);
  if (f == Family::hyper) {
    HyperRelationParams p;
    p.m1 = rng.uniform(0.7, 2.5);
    p.m2 = -rng.integer(std::max(lo, 1), hi);
    p.m3 = rng.uniform(0.7, 2.5);
    p.s1 = rng.uniform(0.7, 2.5);
    p.s2 = rng.uniform(0.7, 2.5);
    p.z = rng.uniform(-2.0, 2.0);
    return p;
  }
  const std::size_t r = f == Family::s1 ? 1 : f == Family::s2 ? 2 : static_cast<std::size_t>(rng.integer(1, 3));
  const bool needs_n1 = id == RelationId::S1_STAR1 || id == RelationId::S2_101 || id == RelationId::SR_T514;
  std::vector<unsigned> n(r);
  for (std::size_t k = 0; k < r; ++k) {
    n[k] = static_cast<unsigned>(rng.integer(k == 0 && needs_n1 ? std::max(lo, 1) : lo, hi));
  }
  std::vector<double> a(r + 1);
  std::vector<double> b(r + 1);
  for (std::size_t k = 0; k <= r; ++k) {
    a[k] = rng.uniform(0.7, 2.5);
    b[k] = rng.uniform(0.7, 2.5);
  }
  std::vector<Complex> x(r);
  for (std::size_t k = 0; k < r; ++k) {
    x[k] = rng.uniform(-2.0, 2.0);
  }
  return FamilyRelationParams{SParams{MultiIndex(std::move(n)), ParamVector(std::move(a)), ParamVector(std::move(b))},
                              std::move(x)};
}

} // namespace

RelationParams sample_relation_params(RelationId id, Rng& rng) { return sample_params(id, rng, 0, 4); }


namespace {

bool samples_last_axis(RelationId id) noexcept {
  switch (id) {
  case RelationId::S1_STAR3:
  case RelationId::S1_STAR6:
  case RelationId::S2_103:
  case RelationId::S2_106:
  case RelationId::SR_T516:
  case RelationId::SR_T518:
    return true;
  default:
    return false;
  }
}

// Degree in t of D(t) c_k(t).
unsigned fit_degree(RelationId id) noexcept {
  switch (id) {
  case RelationId::H3:
  case RelationId::S1_STAR7:
  case RelationId::S2_107:
  case RelationId::SR_T519:
    return 0;
  case RelationId::S1_STAR3:
  case RelationId::S2_103:
  case RelationId::SR_T516:
    return 2;
  default:
    return 1;
  }
}

// D(t): the t-dependent denominator shared by all coefficients.
Complex fit_denominator(RelationId id, const RelationParams& params, Complex t) {
  switch (id) {
  case RelationId::S1_STAR3:
  case RelationId::S2_103:
  case RelationId::SR_T516: {
    const SParams& s = std::get<FamilyRelationParams>(params).s;
    const Complex u = s.a[s.rank()] + 0.5 * t;
    return (u - 1.0) * u;
  }
  default:
    return 1.0;
  }
}

} // namespace

RelationParams sample_fit_base(RelationId id, Rng& rng) {
  if (family_of(id) == Family::hyper) {
    return sample_params(id, rng, 5, 6);
  }
  RelationParams p = sample_params(id, rng, 3, 4);
  if (fit_degree(id) == 2) {
    // t^q F_k, q <= 2, k = 1, 2 are six functions; degree 4 along t gives room for them.
    SParams& s = std::get<FamilyRelationParams>(p).s;
    s.n[s.rank() - 1] = 4;
  }
  return p;
}

Complex sampling_variable(RelationId id, const RelationParams& params) {
  if (const auto* h = std::get_if<HyperRelationParams>(&params)) {
    return h->z;
  }
  const auto& f = fam(id, params);
  return samples_last_axis(id) ? f.x.back() : f.x.front();
}

RelationParams with_sampling_variable(RelationId id, RelationParams params, Complex t) {
  if (auto* h = std::get_if<HyperRelationParams>(&params)) {
    h->z = t;
    return params;
  }
  auto& f = std::get<FamilyRelationParams>(params);
  (samples_last_axis(id) ? f.x.back() : f.x.front()) = t;
  return params;
}

BruteForceFit brute_force_coefficients(RelationId id, const RelationParams& base, std::size_t sample_count,
                                       std::uint64_t seed) {
  validate(id, base);
  const std::size_t terms_n = term_count(id);
  const std::size_t per = fit_degree(id) + 1;
  const std::size_t unknowns = (terms_n - 1) * per;
  if (sample_count < 2 * unknowns) {
    throw RankDeficientError(std::string(to_string(id)) + ": need at least " + std::to_string(2 * unknowns) +
                             " samples for " + std::to_string(unknowns) + " unknowns");
  }

  struct Sample {
    Complex t;
    Complex denom;
    std::vector<Complex> printed;
    std::vector<Complex> values;
  };
  std::vector<Sample> samples;
  Rng rng(seed);
  std::size_t attempts = 0;
  while (samples.size() < sample_count) {
    if (++attempts > 50 * sample_count) {
      throw RankDeficientError(std::string(to_string(id)) + ": too few admissible sample points");
    }
    const Complex t = rng.uniform(-2.0, 2.0);
    const RelationParams p = with_sampling_variable(id, base, t);
    try {
      Sample s{t, fit_denominator(id, p, t), coefficients(id, p), terms(id, p)};
      if (std::abs(s.denom) < kDegenerateTolerance) {
        continue;
      }
      samples.push_back(std::move(s));
    } catch (const DegenerateParameterError&) {
    } catch (const ZeroDenominatorError&) {
    }
  }

  // Row i: sum_{k>=1} sum_p u_{kp} t^p F_k(t) = -D(t) c_0(t) F_0(t), rows normalised by their largest entry.
  Eigen::MatrixXcd m(samples.size(), unknowns);
  Eigen::VectorXcd rhs(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Sample& s = samples[i];
    double row_scale = std::abs(s.denom * s.printed[0] * s.values[0]);
    for (std::size_t k = 1; k < terms_n; ++k) {
      Complex tp = 1.0;
      for (std::size_t q = 0; q < per; ++q) {
        const Complex entry = tp * s.values[k];
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>((k - 1) * per + q)) = entry;
        row_scale = std::max(row_scale, std::abs(entry));
        tp *= s.t;
      }
    }
    rhs(static_cast<Eigen::Index>(i)) = -s.denom * s.printed[0] * s.values[0];
    if (row_scale > 0.0) {
      m.row(static_cast<Eigen::Index>(i)) /= row_scale;
      rhs(static_cast<Eigen::Index>(i)) /= row_scale;
    }
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(m);
  qr.setThreshold(1e-12);
  if (static_cast<std::size_t>(qr.rank()) < unknowns) {
    throw RankDeficientError(std::string(to_string(id)) + ": samples determine only " + std::to_string(qr.rank()) +
                             " of " + std::to_string(unknowns) + " unknowns");
  }
  const Eigen::VectorXcd u = qr.solve(rhs);
  const auto r_diag = qr.matrixR().diagonal();

  auto fitted_at = [&](Complex t, Complex denom, Complex c0) {
    std::vector<Complex> c{c0};
    for (std::size_t k = 1; k < terms_n; ++k) {
      Complex v = 0.0;
      Complex tp = 1.0;
      for (std::size_t q = 0; q < per; ++q) {
        v += u(static_cast<Eigen::Index>((k - 1) * per + q)) * tp;
        tp *= t;
      }
      c.push_back(v / denom);
    }
    return c;
  };

  BruteForceFit fit;
  fit.unknowns = unknowns;
  fit.samples = samples.size();
  fit.condition = std::abs(r_diag(0)) / std::abs(r_diag(static_cast<Eigen::Index>(unknowns) - 1));
  for (const Sample& s : samples) {
    const std::vector<Complex> c = fitted_at(s.t, s.denom, s.printed[0]);
    Complex sum = 0.0;
    double scale = 0.0;
    Complex printed_sum = 0.0;
    double printed_term = 0.0;
    double printed_scale = 0.0;
    double diff = 0.0;
    for (std::size_t k = 0; k < terms_n; ++k) {
      sum += c[k] * s.values[k];
      scale = std::max(scale, std::abs(c[k] * s.values[k]));
      printed_sum += s.printed[k] * s.values[k];
      printed_term = std::max(printed_term, std::abs(s.printed[k] * s.values[k]));
      printed_scale = std::max(printed_scale, std::abs(s.printed[k]));
      diff = std::max(diff, std::abs(c[k] - s.printed[k]));
    }
    fit.fit_residual = std::max(fit.fit_residual, scale > 0.0 ? std::abs(sum) / scale : 0.0);
    fit.printed_residual =
        std::max(fit.printed_residual, printed_term > 0.0 ? std::abs(printed_sum) / printed_term : 0.0);
    fit.discrepancy = std::max(fit.discrepancy, printed_scale > 0.0 ? diff / printed_scale : diff);
  }

  const Complex t0 = sampling_variable(id, base);
  fit.printed = coefficients(id, base);
  fit.fitted = fitted_at(t0, fit_denominator(id, base, t0), fit.printed[0]);
  return fit;
}

} // namespace simplexft
