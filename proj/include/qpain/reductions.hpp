#pragma once

#include <map>
#include <string>

#include "qpain/flows.hpp"
#include "qpain/printer.hpp"

namespace qpain {

inline std::string report_text(const Report& rep) {
  std::string s = "[" + rep.suite + "]\n";
  for (const auto& l : rep.lines) {
    s += std::string(l.pass ? "  PASS  " : "  FAIL  ") + l.name;
    if (!l.detail.empty()) s += "  :: " + l.detail;
    s += "\n";
  }
  return s;
}

// k = 1 normalization: alpha_0 = 1 - alpha_1 - ... - alpha_l.
inline std::map<Sym, Scalar> knorm_map(const AlgebraSpec& spec) {
  Scalar rest;
  int nalpha = spec.num_gens() - (spec.is_pii() ? 1 : 0);
  for (int j = 1; j < nalpha; ++j) rest += Scalar::alpha(j);
  return {{Sym::alpha(0), Scalar(1L) - rest}};
}

namespace reductions {

inline Element knormed(const Element& e, const AlgebraSpec& spec) {
  return subst_scalars(e, knorm_map(spec));
}

}  // namespace reductions

// Quantum PII in the single variable f2. The self-consistent contiguity of
// the flow with f0 + f1 + f2^2 = t (k = 1, integration constant zero) is
//   f2'' = 2 f2^3 - 2 t f2 + alpha_1 - alpha_0.
// The t-coefficient differs from the force-free classical normalization by a
// time rescaling; (3-2) and the P34 reduction pin this one.
inline Report verify_scalar_PII(bool negative_control = false) {
  auto s = AlgebraSpec::pii();
  FlowSpec fs = FlowSpec::make(s);
  Report rep{"scalar-PII", {}};
  auto f = [&](int i) { return Element::generator(s, i); };
  Element constraint = Element::unit(s, Scalar::t()) - f(1) - nc_mul(f(2), f(2));
  auto elim = [&](const Element& e) {
    return reductions::knormed(subst_generator(e, 0, constraint), s);
  };
  Element f2pp = elim(flow_d_t(fs, flow_d_t(fs, f(2))));
  Scalar a0 = Scalar::alpha(0), a1 = Scalar::alpha(1), t = Scalar::t();
  Scalar cterm = negative_control ? (a1 + a0) : (a1 - a0);
  Element claimed = nc_pow(f(2), 3).scaled(Scalar(2L)) -
                    f(2).scaled(Scalar(2L) * t) + Element::unit(s, cterm);
  Element residual = reductions::knormed(claimed, s) - f2pp;
  if (!negative_control) {
    rep.add("f2'' = 2 f2^3 - 2 t f2 + a1 - a0 (k = 1)", residual.is_zero(),
            residual.is_zero() ? "" : residual.str());
  } else {
    rep.add("control residual is nonzero", !residual.is_zero());
    Element expect = reductions::knormed(
        Element::unit(s, Scalar(2L) * a0), s);
    rep.add("control residual equals 2 a0 (k = 1)", residual == expect,
            residual == expect ? "" : residual.str());
  }
  return rep;
}

inline Report verify_scalar_PII_classical() {
  auto s = AlgebraSpec::pii();
  FlowSpec fs = FlowSpec::make(s);
  Report rep{"scalar-PII-classical", {}};
  auto f = [&](int i) { return Element::generator(s, i); };
  Element constraint = Element::unit(s, Scalar::t()) - f(1) - nc_mul(f(2), f(2));
  std::map<Sym, Scalar> h0{{Sym::hbar(), Scalar()}};
  auto elim = [&](const Element& e) {
    return subst_scalars(reductions::knormed(subst_generator(e, 0, constraint), s), h0);
  };
  Element f2pp = elim(flow_d_t(fs, flow_d_t(fs, f(2))));
  Scalar a0 = Scalar::alpha(0), a1 = Scalar::alpha(1), t = Scalar::t();
  Element claimed = nc_pow(f(2), 3).scaled(Scalar(2L)) -
                    f(2).scaled(Scalar(2L) * t) + Element::unit(s, a1 - a0);
  Element residual = subst_scalars(reductions::knormed(claimed, s), h0) - f2pp;
  rep.add("classical PII form unchanged at hbar = 0", residual.is_zero(),
          residual.is_zero() ? "" : residual.str());
  return rep;
}

// Quantum P34 for f1 in the PII system:
//   f1'' = 1/2 f1' f1^-1 f1' - 4 f1^2 + 2 t f1 - 1/2 (a1^2 - hbar^2) f1^-1.
inline Report verify_scalar_P34(bool negative_control = false) {
  auto s = AlgebraSpec::pii();
  FlowSpec fs = FlowSpec::make(s);
  Report rep{"scalar-P34", {}};
  auto f = [&](int i) { return Element::generator(s, i); };
  Element constraint = Element::unit(s, Scalar::t()) - f(1) - nc_mul(f(2), f(2));
  auto elim = [&](const Element& e) {
    return reductions::knormed(subst_generator(e, 0, constraint), s);
  };
  Element f1p = elim(flow_d_t(fs, f(1)));
  Element f1pp = elim(flow_d_t(fs, flow_d_t(fs, f(1))));
  Element f1inv = inv_power(s, 1, Scalar(), -1);
  Scalar a1 = Scalar::alpha(1), t = Scalar::t(), h = Scalar::hbar();
  Scalar half(Rat(1, 2));
  Scalar coefq = negative_control ? (a1 * a1) : (a1 * a1 - h * h);
  Element rhs = nc_mul(f1p, nc_mul(f1inv, f1p)).scaled(half) -
                nc_pow(f(1), 2).scaled(Scalar(4L)) + f(1).scaled(Scalar(2L) * t) -
                f1inv.scaled(half * coefq);
  Element residual = reductions::knormed(rhs, s) - f1pp;
  if (!negative_control) {
    rep.add("f1'' = 1/2 f1' f1^-1 f1' - 4 f1^2 + 2 t f1 - (a1^2 - hbar^2)/2 f1^-1",
            residual.is_zero(), residual.is_zero() ? "" : residual.str());
  } else {
    rep.add("control residual is nonzero", !residual.is_zero());
    Element expect = f1inv.scaled(-(half * h * h));
    rep.add("control residual equals -hbar^2/2 f1^-1", residual == expect,
            residual == expect ? "" : residual.str());
    rep.add("control residual vanishes at hbar = 0",
            subst_scalars(residual, {{Sym::hbar(), Scalar()}}).is_zero());
  }
  return rep;
}

inline Report verify_scalar_P34_classical() {
  auto s = AlgebraSpec::pii();
  FlowSpec fs = FlowSpec::make(s);
  Report rep{"scalar-P34-classical", {}};
  auto f = [&](int i) { return Element::generator(s, i); };
  Element constraint = Element::unit(s, Scalar::t()) - f(1) - nc_mul(f(2), f(2));
  std::map<Sym, Scalar> h0{{Sym::hbar(), Scalar()}};
  auto elim = [&](const Element& e) {
    return subst_scalars(reductions::knormed(subst_generator(e, 0, constraint), s), h0);
  };
  Element f1p = elim(flow_d_t(fs, f(1)));
  Element f1pp = elim(flow_d_t(fs, flow_d_t(fs, f(1))));
  Element f1inv = inv_power(s, 1, Scalar(), -1);
  Scalar a1 = Scalar::alpha(1), t = Scalar::t();
  Scalar half(Rat(1, 2));
  Element rhs = nc_mul(f1p, nc_mul(f1inv, f1p)).scaled(half) -
                nc_pow(f(1), 2).scaled(Scalar(4L)) + f(1).scaled(Scalar(2L) * t) -
                f1inv.scaled(half * a1 * a1);
  Element residual = subst_scalars(reductions::knormed(rhs, s), h0) - f1pp;
  rep.add("classical P34 with the alpha1^2 coefficient", residual.is_zero(),
          residual.is_zero() ? "" : residual.str());
  return rep;
}

// Quantum PIV for f1 in AL(2), using sum f_i = t (k = 1):
//   f1'' = 1/2 f1' f1^-1 f1' + 3/2 f1^3 - 2 t f1^2
//          + (t^2/2 + a2 - a0) f1 - 1/2 (a1^2 - hbar^2) f1^-1.
inline Report verify_scalar_PIV(bool negative_control = false) {
  auto s = AlgebraSpec::al(2);
  FlowSpec fs = FlowSpec::make(s);
  Report rep{"scalar-PIV", {}};
  auto f = [&](int i) { return Element::generator(s, i); };
  Element constraint = Element::unit(s, Scalar::t()) - f(1) - f(2);
  auto elim = [&](const Element& e) {
    return reductions::knormed(subst_generator(e, 0, constraint), s);
  };
  Element f1p = elim(flow_d_t(fs, f(1)));
  Element f1pp = elim(flow_d_t(fs, flow_d_t(fs, f(1))));
  Element f1inv = inv_power(s, 1, Scalar(), -1);
  Scalar a0 = Scalar::alpha(0), a1 = Scalar::alpha(1), a2 = Scalar::alpha(2);
  Scalar t = Scalar::t(), h = Scalar::hbar(), half(Rat(1, 2));
  Scalar coefq = negative_control ? (a1 * a1) : (a1 * a1 - h * h);
  Element rhs = nc_mul(f1p, nc_mul(f1inv, f1p)).scaled(half) +
                nc_pow(f(1), 3).scaled(Scalar(Rat(3, 2))) -
                nc_pow(f(1), 2).scaled(Scalar(2L) * t) +
                f(1).scaled(half * t * t + a2 - a0) - f1inv.scaled(half * coefq);
  Element residual = reductions::knormed(rhs, s) - f1pp;
  if (!negative_control) {
    rep.add("f1'' = 1/2 f1' f1^-1 f1' + 3/2 f1^3 - 2 t f1^2 + (t^2/2 + a2 - a0) f1 "
            "- (a1^2 - hbar^2)/2 f1^-1",
            residual.is_zero(), residual.is_zero() ? "" : residual.str());
  } else {
    rep.add("control residual is nonzero", !residual.is_zero());
    Element expect = f1inv.scaled(-(half * h * h));
    rep.add("control residual equals -hbar^2/2 f1^-1", residual == expect,
            residual == expect ? "" : residual.str());
  }
  return rep;
}

inline Report verify_scalar_PIV_classical() {
  auto s = AlgebraSpec::al(2);
  FlowSpec fs = FlowSpec::make(s);
  Report rep{"scalar-PIV-classical", {}};
  auto f = [&](int i) { return Element::generator(s, i); };
  Element constraint = Element::unit(s, Scalar::t()) - f(1) - f(2);
  std::map<Sym, Scalar> h0{{Sym::hbar(), Scalar()}};
  auto elim = [&](const Element& e) {
    return subst_scalars(reductions::knormed(subst_generator(e, 0, constraint), s), h0);
  };
  Element f1p = elim(flow_d_t(fs, f(1)));
  Element f1pp = elim(flow_d_t(fs, flow_d_t(fs, f(1))));
  Element f1inv = inv_power(s, 1, Scalar(), -1);
  Scalar a0 = Scalar::alpha(0), a1 = Scalar::alpha(1), a2 = Scalar::alpha(2);
  Scalar t = Scalar::t(), half(Rat(1, 2));
  Element rhs = nc_mul(f1p, nc_mul(f1inv, f1p)).scaled(half) +
                nc_pow(f(1), 3).scaled(Scalar(Rat(3, 2))) -
                nc_pow(f(1), 2).scaled(Scalar(2L) * t) +
                f(1).scaled(half * t * t + a2 - a0) - f1inv.scaled(half * a1 * a1);
  Element residual = subst_scalars(reductions::knormed(rhs, s), h0) - f1pp;
  rep.add("classical PIV form at hbar = 0", residual.is_zero(),
          residual.is_zero() ? "" : residual.str());
  return rep;
}

namespace pvw {

inline Element w_element(const AlgebraSpec& s) {
  return Element::unit(s) -
         inv_power(s, 0, Scalar(), -1).scaled(Scalar::e());
}

}  // namespace pvw

// Quantum PV in the auxiliary variable w = 1 - e^{t/2}/f0, Eq. (5-1) shape.
// Verified with symbolic alternating constants x, y (f0+f2 = xE, f1+f3 = yE);
// the residual vanishes identically at the gauge specialization x = y = 1,
// which is recorded in the report.
inline Report verify_scalar_PV_w() {
  auto s = AlgebraSpec::al(3);
  FlowSpec fs = FlowSpec::make(s);
  Report rep{"scalar-PV-w", {}};
  auto f = [&](int i) { return Element::generator(s, i); };
  Scalar E = Scalar::e(), h = Scalar::hbar(), half(Rat(1, 2));
  Scalar a0 = Scalar::alpha(0), a1 = Scalar::alpha(1), a2 = Scalar::alpha(2),
         a3 = Scalar::alpha(3);
  Scalar X = Scalar::sx(), Y = Scalar::sy();
  Element r2 = Element::unit(s, X * E) - f(0);
  Element r3 = Element::unit(s, Y * E) - f(1);
  auto elim = [&](const Element& e) {
    Element out = subst_generator(e, 3, r3);
    out = subst_generator(out, 2, r2);
    return reductions::knormed(out, s);
  };
  Element w = pvw::w_element(s);
  Element wp = elim(flow_d_t(fs, w));
  Element wpp = elim(flow_d_t(fs, wp));

  Element winv = nc_mul(f(0), inv_power(s, 0, E, -1));  // 1/w
  Element wm1inv = f(0).scaled(-(E.inv()));             // 1/(w-1)
  Element mid = wm1inv + winv.scaled(half);
  Element t1 = nc_mul(wp, nc_mul(mid, wp));
  Element wm1sq = inv_power(s, 0, Scalar(), -2).scaled(E * E);  // (w-1)^2
  Element t2 = nc_mul(wm1sq, w.scaled(half * (a0 * a0 - h * h)) +
                                 winv.scaled(half * (h * h - a2 * a2)));
  Element t3 = w.scaled((a3 - a1) * E * E);
  Element t4 = nc_mul(w, nc_mul(w + Element::unit(s), f(0)))
                   .scaled(half * E * E * E);
  Element rhs = reductions::knormed(t1 + t2 + t3 + t4, s);
  Element residual = rhs - wpp;

  rep.add("residual with symbolic x, y is gauge-dependent (nonzero)",
          !residual.is_zero());
  Element special =
      subst_scalars(residual, {{Sym::x(), Scalar(1L)}, {Sym::y(), Scalar(1L)}});
  rep.add("Eq (5-1) residual vanishes at the recorded specialization x = 1, y = 1",
          special.is_zero(), special.is_zero() ? "" : special.str());
  return rep;
}

}  // namespace qpain
