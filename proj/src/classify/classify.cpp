#include "jordan/classify/classify.hpp"

#include <stdexcept>

#include "jordan/errors.hpp"

namespace jordan {

namespace {

std::string yes(bool b) { return b ? "true" : "false"; }

std::vector<std::pair<std::string, std::string>> predicate_inputs(const FieldPredicates& p) {
  return {{"sqrt5", yes(p.has_sqrt5)},
          {"sqrt-7", yes(p.has_sqrt_minus7)},
          {"omega", yes(p.has_omega)},
          {"-1 sum of two squares", yes(p.minus_one_sum_two_squares)},
          {"formally real", yes(p.formally_real)}};
}

std::size_t slot(SubgroupTypeTag t) {
  if (t == SubgroupTypeTag::A5)
    throw UnsupportedPair("A5 does not occur as fiber or base type on the conic bundle path");
  return static_cast<std::size_t>(t);
}

}  // namespace

std::string Bound::to_string() const {
  return (is_exact() ? "= " : "<= ") + std::to_string(value);
}

Bound bound_max(const Bound& a, const Bound& b) {
  if (a.value != b.value) return a.value > b.value ? a : b;
  return a.is_exact() ? a : b;  // a tie is settled by the exact side
}

Bound bound_max(std::initializer_list<Bound> bounds) {
  if (bounds.size() == 0) throw std::invalid_argument("bound_max of nothing");
  Bound out = *bounds.begin();
  for (const Bound& b : bounds) out = bound_max(out, b);
  return out;
}

bool dominates(const Bound& a, const Bound& b) { return bound_max(a, b) == a; }

// ---------------------------------------------------------------- PGL2

bool a5_in_pgl2(const FieldPredicates& p) { return p.minus_one_sum_two_squares && p.has_sqrt5; }

std::vector<SubgroupTypeTag> pgl2_possible_subgroups(const FieldPredicates& p) {
  std::vector<SubgroupTypeTag> out = {SubgroupTypeTag::Cyclic, SubgroupTypeTag::Dihedral, SubgroupTypeTag::A4,
                                      SubgroupTypeTag::S4};
  if (a5_in_pgl2(p)) out.push_back(SubgroupTypeTag::A5);
  return out;
}

// ---------------------------------------------------------------- conic bundles

ConicBoundTable ConicBoundTable::standard() {
  using T = SubgroupTypeTag;
  ConicBoundTable t;
  for (T f : {T::Cyclic, T::Dihedral}) {
    for (T b : {T::Cyclic, T::Dihedral}) t.set(f, b, 32);
    for (T b : {T::A4, T::S4}) t.set(f, b, 48);
  }
  t.set(T::A4, T::Cyclic, 6);
  t.set(T::A4, T::Dihedral, 12);
  t.set(T::A4, T::A4, 72);
  t.set(T::A4, T::S4, 72);
  t.set(T::S4, T::Cyclic, 6);
  t.set(T::S4, T::Dihedral, 12);
  t.set(T::S4, T::A4, 72);
  t.set(T::S4, T::S4, 36);
  return t;
}

std::uint64_t ConicBoundTable::at(SubgroupTypeTag fiber, SubgroupTypeTag base) const {
  return values_[slot(fiber)][slot(base)];
}

void ConicBoundTable::set(SubgroupTypeTag fiber, SubgroupTypeTag base, std::uint64_t value) {
  values_[slot(fiber)][slot(base)] = value;
}

std::uint64_t conic_bundle_bound(SubgroupTypeTag fiber, SubgroupTypeTag base, const ConicBoundTable& table) {
  return table.at(fiber, base);
}

Bound conic_bundle_cap(const FieldPredicates& p) {
  return a5_in_pgl2(p) ? Bound::at_most(7200) : Bound::at_most(72);
}

// ---------------------------------------------------------------- del Pezzo

Bound jordan_pgl3(const FieldPredicates& p) {
  if (p.has_omega && p.has_sqrt5) return Bound::exact(360);
  if (p.has_sqrt_minus7) return Bound::exact(168);
  return Bound::at_most(60);
}

Bound jordan_p1xp1(const FieldPredicates& p) {
  if (!p.minus_one_sum_two_squares) return Bound::exact(8);
  return p.has_sqrt5 ? Bound::exact(7200) : Bound::exact(72);
}

Bound dp_degree_bound(int degree, const FieldPredicates& p) {
  switch (degree) {
    case 1: return Bound::at_most(60);
    case 2: return bound_max(Bound::at_most(96), jordan_pgl3(p));
    case 3:
    case 4:
    case 5: return Bound::at_most(120);
    case 6: return Bound::at_most(12);
    case 7: return Bound::at_most(60);
    case 8: return bound_max(Bound::at_most(120), jordan_p1xp1(p));
    case 9: return jordan_pgl3(p);
    default: throw DegreeOutOfRange(degree);
  }
}

// 120 is attained: S5 acts on the degree 5 del Pezzo surface over any field.
Bound j_dp(const FieldPredicates& p) {
  return bound_max({jordan_pgl3(p), jordan_p1xp1(p), Bound::exact(120)});
}

// ---------------------------------------------------------------- Cr2

Classification jordan_cr2(const FieldPredicates& p) {
  if (!p.consistent()) throw std::invalid_argument("predicate vector is not realized by any field");
  Classification c;
  c.predicates = p;
  auto& t = c.trace;
  const auto in = predicate_inputs(p);

  t.push_back({"a5_in_pgl2", "A5 < PGL2(K)  <=>  sqrt5 in K and -1 = a^2 + b^2",
               {in[0], in[3]}, yes(a5_in_pgl2(p))});

  const Bound pgl3 = jordan_pgl3(p);
  t.push_back({"pgl3_table",
               "J(PGL3(K)) = 360 if omega, sqrt5 in K; = 168 if sqrt-7 in K otherwise; <= 60 else",
               {in[2], in[0], in[1]}, "J(PGL3(K)) " + pgl3.to_string()});

  const Bound p1 = jordan_p1xp1(p);
  t.push_back({"p1xp1_table",
               "J(Aut(P1 x P1)) = 7200 if sqrt5 in K and -1 = a^2 + b^2; = 72 if only the latter; = 8 else",
               {in[0], in[3]}, "J(Aut(P1 x P1)) " + p1.to_string()});

  t.push_back({"dp_floor", "J(S5) = 120 and S5 acts on the del Pezzo surface of degree 5", {},
               "J_dP(K) >= 120"});

  c.dp = j_dp(p);
  t.push_back({"j_dp", "J_dP(K) = max(J(PGL3(K)), J(Aut(P1 x P1)), 120)",
               {{"pgl3", pgl3.to_string()}, {"p1xp1", p1.to_string()}, {"floor", "= 120"}},
               "J_dP(K) " + c.dp.to_string()});

  c.cap = conic_bundle_cap(p);
  t.push_back({"conic_bundle_cap",
               a5_in_pgl2(p) ? "J_cb(K) <= J(Cr2(algebraic closure)) = 7200"
                             : "J_cb(K) <= 72 when A5 is not in PGL2(K); table entries 32, 48, 72 (6, 12, 36 inside)",
               {in[0], in[3]}, "J_cb(K) " + c.cap.to_string()});

  const Bound total = bound_max(c.dp, c.cap);
  if (!total.is_exact() || (total.value != 7200 && total.value != 168 && total.value != 120))
    throw std::logic_error("classification left the value set: " + total.to_string());
  c.value = total.value;
  t.push_back({"cr2", "J(Cr2(K)) = max(J_dP(K), J_cb(K))",
               {{"J_dP", c.dp.to_string()}, {"J_cb", c.cap.to_string()}},
               "J(Cr2(K)) = " + std::to_string(c.value)});
  return c;
}

Classification jordan_cr2(const FieldDescriptor& k) {
  const FieldPredicates p = field_predicates(k);
  Classification c = jordan_cr2(p);
  auto in = predicate_inputs(p);
  std::string rule;
  switch (k.kind) {
    case FieldKind::RealClosed: rule = "fixed vector for a real closed field"; break;
    case FieldKind::AlgebraicallyClosed: rule = "fixed vector for an algebraically closed field"; break;
    default:
      rule = "sqrt m in K iff m is a subset product of generators mod squares; "
             "-1 = a^2 + b^2 iff K totally imaginary and [K_2 : Q_2] even";
  }
  c.trace.insert(c.trace.begin(), TraceRecord{"field_predicates", rule, {{"field", k.to_string()}},
                                              "sqrt5=" + in[0].second + " sqrt-7=" + in[1].second +
                                                  " omega=" + in[2].second + " sum=" + in[3].second +
                                                  " real=" + in[4].second});
  return c;
}

nlohmann::json trace_to_json(const std::vector<TraceRecord>& trace) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : trace) {
    nlohmann::json inputs = nlohmann::json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    out.push_back({{"statement", r.statement}, {"quote", r.quote}, {"inputs", inputs}, {"conclusion", r.conclusion}});
  }
  return out;
}

nlohmann::json predicates_to_json(const FieldPredicates& p) {
  return {{"has_sqrt5", p.has_sqrt5},
          {"has_sqrt_minus7", p.has_sqrt_minus7},
          {"has_omega", p.has_omega},
          {"minus_one_sum_two_squares", p.minus_one_sum_two_squares},
          {"formally_real", p.formally_real}};
}

nlohmann::json bound_to_json(const Bound& b) {
  return {{"kind", b.is_exact() ? "exact" : "at_most"}, {"value", b.value}};
}

}  // namespace jordan
