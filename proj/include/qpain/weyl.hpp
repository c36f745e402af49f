#pragma once

#include <string>
#include <vector>

#include "qpain/fraction.hpp"
#include "qpain/flows.hpp"

namespace qpain {

namespace weyl {

inline std::vector<Letter> all_letters(const AlgebraSpec& spec) {
  std::vector<Letter> ls;
  for (int i = 0; i < spec.num_gens() - (spec.is_pii() ? 1 : 0); ++i)
    ls.push_back(Letter::s(i));
  ls.push_back(Letter::pi());
  ls.push_back(Letter::pi_inv());
  return ls;
}

// Compare two words applied to every generator and every parameter.
inline void check_words_equal(Report& rep, const AlgebraSpec& spec,
                              const std::string& name, const TransformWord& lhs,
                              const TransformWord& rhs) {
  for (int j = 0; j < spec.num_gens(); ++j) {
    Element a = apply_transform(lhs, Element::generator(spec, j));
    Element b = apply_transform(rhs, Element::generator(spec, j));
    Element resid = a - b;
    rep.add(name + " on f" + std::to_string(j), resid.is_zero(),
            resid.is_zero() ? "" : resid.str());
  }
  int nalpha = spec.num_gens() - (spec.is_pii() ? 1 : 0);
  for (int j = 0; j < nalpha; ++j) {
    Scalar a = transform_params(spec, lhs, Scalar::alpha(j));
    Scalar b = transform_params(spec, rhs, Scalar::alpha(j));
    rep.add(name + " on a" + std::to_string(j), a == b,
            a == b ? "" : (a - b).str());
  }
}

// Relation word == identity, where intermediate images leave the safe
// fragment: verified in cleared form through a joint right fraction.
inline void check_word_identity_cleared(Report& rep, const AlgebraSpec& spec,
                                        const std::string& name,
                                        const TransformWord& w) {
  std::vector<Element> gens;
  for (int j = 0; j < spec.num_gens(); ++j)
    gens.push_back(Element::generator(spec, j));
  auto st = RightFractionState::from_elements(spec, gens);
  st.apply_word(w);
  for (int j = 0; j < spec.num_gens(); ++j) {
    Element resid = st.nums[static_cast<std::size_t>(j)] -
                    nc_mul(Element::generator(spec, j), st.den);
    rep.add(name + " on f" + std::to_string(j), resid.is_zero(),
            resid.is_zero() ? "" : resid.str());
  }
  int nalpha = spec.num_gens() - (spec.is_pii() ? 1 : 0);
  for (int j = 0; j < nalpha; ++j) {
    Scalar a = transform_params(spec, w, Scalar::alpha(j));
    Scalar b = Scalar::alpha(j);
    rep.add(name + " on a" + std::to_string(j), a == b,
            a == b ? "" : (a - b).str());
  }
}

}  // namespace weyl

inline Report check_group_relations(const AlgebraSpec& spec) {
  Report rep{"group-relations " + spec.name(), {}};
  const int n = spec.num_gens();
  if (spec.is_pii()) {
    for (int i = 0; i < 2; ++i)
      weyl::check_words_equal(rep, spec, "s" + std::to_string(i) + "^2",
                              {Letter::s(i), Letter::s(i)}, {});
    weyl::check_words_equal(rep, spec, "p^2", {Letter::pi(), Letter::pi()}, {});
    for (int i = 0; i < 2; ++i) {
      weyl::check_words_equal(
          rep, spec, "p s" + std::to_string(i) + " = s" + std::to_string(1 - i) + " p",
          {Letter::pi(), Letter::s(i)}, {Letter::s(1 - i), Letter::pi()});
    }
    return rep;
  }
  for (int i = 0; i < n; ++i)
    weyl::check_words_equal(rep, spec, "s" + std::to_string(i) + "^2",
                            {Letter::s(i), Letter::s(i)}, {});
  {
    TransformWord w(static_cast<std::size_t>(n), Letter::pi());
    weyl::check_words_equal(rep, spec, "p^" + std::to_string(n), w, {});
  }
  for (int i = 0; i < n; ++i) {
    int ip = (i + 1) % n;
    weyl::check_words_equal(
        rep, spec, "p s" + std::to_string(i) + " = s" + std::to_string(ip) + " p",
        {Letter::pi(), Letter::s(i)}, {Letter::s(ip), Letter::pi()});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool adjacent = (j == (i + 1) % n) || (i == (j + 1) % n);
      if (adjacent) continue;
      weyl::check_words_equal(rep, spec,
                              "s" + std::to_string(i) + " s" + std::to_string(j) +
                                  " commute",
                              {Letter::s(i), Letter::s(j)},
                              {Letter::s(j), Letter::s(i)});
    }
  }
  for (int i = 0; i < n; ++i) {
    int ip = (i + 1) % n;
    TransformWord braid;
    for (int r = 0; r < 3; ++r) {
      braid.push_back(Letter::s(i));
      braid.push_back(Letter::s(ip));
    }
    weyl::check_word_identity_cleared(
        rep, spec, "(s" + std::to_string(i) + " s" + std::to_string(ip) + ")^3", braid);
  }
  return rep;
}

inline Report check_preserves_relations(const AlgebraSpec& spec) {
  Report rep{"preserves-relations " + spec.name(), {}};
  for (const Letter& l : weyl::all_letters(spec)) {
    for (int i = 0; i < spec.num_gens(); ++i) {
      for (int j = i + 1; j < spec.num_gens(); ++j) {
        Element a = apply_letter(Element::generator(spec, i), l);
        Element b = apply_letter(Element::generator(spec, j), l);
        Element lhs = nc_commutator(a, b);
        Element rhs = apply_letter(table_commutator(spec, i, j), l);
        Element resid = lhs - rhs;
        rep.add(l.name() + " preserves [f" + std::to_string(i) + ",f" +
                    std::to_string(j) + "]",
                resid.is_zero(), resid.is_zero() ? "" : resid.str());
      }
    }
  }
  return rep;
}

inline Report check_commutes_with_flow(const AlgebraSpec& spec) {
  Report rep{"commutes-with-flow " + spec.name(), {}};
  FlowSpec fs = FlowSpec::make(spec);
  for (const Letter& l : weyl::all_letters(spec)) {
    for (int j = 0; j < spec.num_gens(); ++j) {
      Element lhs = apply_letter(fs.d_gen(j), l);
      Element rhs = flow_d_t(fs, apply_letter(Element::generator(spec, j), l));
      Element resid = lhs - rhs;
      rep.add(l.name() + " vs flow on f" + std::to_string(j), resid.is_zero(),
              resid.is_zero() ? "" : resid.str());
    }
  }
  return rep;
}

}  // namespace qpain
