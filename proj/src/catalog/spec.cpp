#include <cctype>
#include <limits>

#include "jordan/catalog/catalog.hpp"
#include "jordan/errors.hpp"

namespace jordan {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

SpecPtr make(auto v) { return std::make_shared<const GroupSpec>(GroupSpec{std::move(v)}); }

std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a)
    return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::size_t factorial(std::size_t n) {
  std::size_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r = sat_mul(r, i);
  return r;
}

std::string_view named_string(spec::NamedGroup g) {
  switch (g) {
    case spec::NamedGroup::PSL2F7: return "PSL2F7";
    case spec::NamedGroup::SL25: return "SL25";
    case spec::NamedGroup::WD5: return "WD5";
    case spec::NamedGroup::FermatCubic648: return "Fermat648";
    case spec::NamedGroup::A5wr2: return "A5wr2";
    case spec::NamedGroup::Q8: return "Q8";
    case spec::NamedGroup::SL23: return "SL23";
  }
  return "?";
}

std::size_t named_order(spec::NamedGroup g) {
  switch (g) {
    case spec::NamedGroup::PSL2F7: return 168;
    case spec::NamedGroup::SL25: return 120;
    case spec::NamedGroup::WD5: return 1920;
    case spec::NamedGroup::FermatCubic648: return 648;
    case spec::NamedGroup::A5wr2: return 7200;
    case spec::NamedGroup::Q8: return 8;
    case spec::NamedGroup::SL23: return 24;
  }
  return 0;
}

// ------------------------------------------------------------------ parsing

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  SpecPtr parse() {
    std::vector<std::pair<std::size_t, std::size_t>> pieces;  // [begin, end)
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text_.size(); ++i) {
      if (i == text_.size() || text_[i] == 'x') {
        pieces.emplace_back(start, i);
        start = i + 1;
      }
    }
    SpecPtr result;
    for (auto [b, e] : pieces) {
      SpecPtr atom = parse_atom(b, e);
      result = result ? direct_product(result, atom) : atom;
    }
    return result;
  }

 private:
  [[noreturn]] void fail(std::size_t column, const std::string& msg) const {
    throw ParseError(std::string(text_), column, msg);
  }

  SpecPtr parse_atom(std::size_t b, std::size_t e) const {
    std::string_view s = text_.substr(b, e - b);
    if (s.empty()) fail(b, "empty group name");
    for (auto g : {spec::NamedGroup::PSL2F7, spec::NamedGroup::SL25, spec::NamedGroup::WD5,
                   spec::NamedGroup::FermatCubic648, spec::NamedGroup::A5wr2,
                   spec::NamedGroup::Q8, spec::NamedGroup::SL23})
      if (s == named_string(g)) return named(g);
    if (s == "Klein") return klein();
    if (s.size() > 3 && s.ends_with("wr2")) return wreath_two(parse_atom(b, e - 3));

    const char tag = s.front();
    if (tag != 'C' && tag != 'D' && tag != 'S' && tag != 'A')
      fail(b, "unknown group name '" + std::string(s) + "'");
    if (s.size() == 1) fail(b + 1, "expected a number after '" + std::string(1, tag) + "'");
    std::size_t n = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail(b + i, "expected a digit");
      n = n * 10 + static_cast<std::size_t>(s[i] - '0');
      if (n > 100000) fail(b + i, "parameter too large");
    }
    try {
      switch (tag) {
        case 'C': return cyclic(n);
        case 'D': return dihedral(n);
        case 'S': return symmetric(n);
        default: return alternating(n);
      }
    } catch (const InvalidSpec& err) {
      fail(b + 1, err.what());
    }
  }

  std::string_view text_;
};

// ------------------------------------------------------------------ realization

Permutation perm(std::size_t degree, std::string_view cycles) {
  return Permutation::from_cycles(cycles, degree);
}

std::vector<GroupElement> to_elements(std::vector<Permutation> ps) {
  return {ps.begin(), ps.end()};
}

std::vector<Permutation> perm_generators(const GroupPtr& g) {
  if (g->kind() != ElementKind::Permutation)
    throw InvalidSpec("construction needs a permutation group factor");
  std::vector<Permutation> out;
  for (const auto& x : g->generators()) out.push_back(x.as_permutation());
  return out;
}

std::size_t degree_of(const GroupPtr& g) {
  return g->element(g->identity()).as_permutation().degree();
}

// 2x2 matrix over F_p acting on the p^2 - 1 nonzero vectors; vector (x, y)
// is point x*p + y - 1.
Permutation matrix_on_vectors(int p, int a, int b, int c, int d) {
  const auto n = static_cast<std::size_t>(p * p - 1);
  std::vector<std::uint16_t> img(n);
  auto md = [p](int v) { return ((v % p) + p) % p; };
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y) {
      if (x == 0 && y == 0) continue;
      int nx = md(a * x + b * y);
      int ny = md(c * x + d * y);
      img[static_cast<std::size_t>(x * p + y - 1)] = static_cast<std::uint16_t>(nx * p + ny - 1);
    }
  return Permutation(std::move(img));
}

std::vector<Permutation> symmetric_generators(std::size_t n) {
  if (n <= 1) return {Permutation::identity(1)};
  std::string cycle = "(";
  for (std::size_t i = 1; i <= n; ++i) cycle += std::to_string(i) + (i < n ? " " : ")");
  if (n == 2) return {perm(2, "(1 2)")};
  return {perm(n, cycle), perm(n, "(1 2)")};
}

std::vector<Permutation> alternating_generators(std::size_t n) {
  if (n <= 2) return {Permutation::identity(std::max<std::size_t>(n, 1))};
  std::vector<Permutation> gens;
  for (std::size_t k = 3; k <= n; ++k) gens.push_back(perm(n, "(1 2 " + std::to_string(k) + ")"));
  return gens;
}

std::vector<Permutation> wreath_generators(const std::vector<Permutation>& base, std::size_t d) {
  std::vector<Permutation> gens;
  for (const auto& p : base) gens.push_back(p.embedded(0, 2 * d));
  for (const auto& p : base) gens.push_back(p.embedded(d, 2 * d));
  std::vector<std::uint16_t> swap(2 * d);
  for (std::size_t i = 0; i < d; ++i) {
    swap[i] = static_cast<std::uint16_t>(i + d);
    swap[i + d] = static_cast<std::uint16_t>(i);
  }
  gens.emplace_back(std::move(swap));
  return gens;
}

GroupPtr build_semidirect(const std::vector<int>& moduli, const GroupPtr& acting,
                          std::shared_ptr<const ModuleAction> action, std::size_t cap) {
  std::vector<GroupElement> gens;
  const std::size_t r = moduli.size();
  const Permutation id = Permutation::identity(degree_of(acting));
  for (std::size_t i = 0; i < r; ++i) {
    std::vector<int> e(r, 0);
    e[i] = 1;
    gens.emplace_back(SemidirectPair(e, id, action));
  }
  for (const auto& q : perm_generators(acting))
    gens.emplace_back(SemidirectPair(std::vector<int>(r, 0), q, action));
  return FiniteGroup::closure(std::move(gens), cap);
}

// (Z/3)^4 modulo the diagonal, with S4 permuting coordinates. A class is
// stored by its representative with last coordinate 0.
GroupPtr fermat_cubic(std::size_t cap) {
  GroupPtr s4 = build(*symmetric(4), cap);
  std::unordered_map<Permutation, ActionMatrix, PermutationHash> table;
  for (const auto& el : s4->elements()) {
    const Permutation& sigma = el.as_permutation();
    ActionMatrix m(3, std::vector<int>(3, 0));
    for (std::size_t j = 0; j < 3; ++j) {
      std::vector<int> w(4, 0);
      w[sigma(j)] = 1;  // sigma sends e_j to e_sigma(j)
      for (std::size_t i = 0; i < 3; ++i) m[i][j] = w[i] - w[3];
    }
    table.emplace(sigma, std::move(m));
  }
  std::vector<int> moduli{3, 3, 3};
  return build_semidirect(moduli, s4, ModuleAction::from_table(moduli, std::move(table)), cap);
}

GroupPtr build_named(spec::NamedGroup which, std::size_t cap) {
  switch (which) {
    case spec::NamedGroup::PSL2F7:
      // t -> t+1 and t -> -1/t on F_7 u {inf}; point k+1 is t = k, 8 is inf.
      return FiniteGroup::closure(
          to_elements({perm(8, "(1 2 3 4 5 6 7)"), perm(8, "(1 8)(2 7)(3 4)(5 6)")}), cap);
    case spec::NamedGroup::SL25:
      return FiniteGroup::closure(
          to_elements({matrix_on_vectors(5, 1, 1, 0, 1), matrix_on_vectors(5, 0, -1, 1, 0)}), cap);
    case spec::NamedGroup::SL23:
      return FiniteGroup::closure(
          to_elements({matrix_on_vectors(3, 1, 1, 0, 1), matrix_on_vectors(3, 0, -1, 1, 0)}), cap);
    case spec::NamedGroup::Q8:
      return FiniteGroup::closure(
          to_elements({matrix_on_vectors(3, 0, -1, 1, 0), matrix_on_vectors(3, 1, 1, 1, -1)}), cap);
    case spec::NamedGroup::WD5:
      // Signed points +i -> i, -i -> i+5; S5 acts diagonally, (1 6)(2 7)
      // flips the signs of the first two coordinates.
      return FiniteGroup::closure(to_elements({perm(10, "(1 2 3 4 5)(6 7 8 9 10)"),
                                               perm(10, "(1 2)(6 7)"), perm(10, "(1 6)(2 7)")}),
                                  cap);
    case spec::NamedGroup::FermatCubic648:
      return fermat_cubic(cap);
    case spec::NamedGroup::A5wr2:
      return FiniteGroup::closure(to_elements(wreath_generators(alternating_generators(5), 5)),
                                  cap);
  }
  throw InvalidSpec("unknown named group");
}

}  // namespace

// ------------------------------------------------------------------ constructors

SpecPtr cyclic(std::size_t n) {
  if (n < 1) throw InvalidSpec("cyclic group needs n >= 1");
  return make(spec::Cyclic{n});
}

SpecPtr dihedral(std::size_t order) {
  if (order % 2 != 0 || order < 4)
    throw InvalidSpec("dihedral group D<2n> needs an even order 2n with n >= 2");
  return make(spec::Dihedral{order / 2});
}

SpecPtr symmetric(std::size_t n) {
  if (n < 1) throw InvalidSpec("symmetric group needs n >= 1");
  return make(spec::Symmetric{n});
}

SpecPtr alternating(std::size_t n) {
  if (n < 1) throw InvalidSpec("alternating group needs n >= 1");
  return make(spec::Alternating{n});
}

SpecPtr klein() { return make(spec::Klein{}); }

SpecPtr direct_product(SpecPtr a, SpecPtr b) {
  if (!a || !b) throw InvalidSpec("direct product of a missing factor");
  return make(spec::DirectProduct{std::move(a), std::move(b)});
}

SpecPtr semidirect(std::vector<int> moduli, SpecPtr acting, std::vector<ActionMatrix> matrices) {
  if (moduli.empty() || !acting) throw InvalidSpec("semidirect product needs a module and a group");
  for (int m : moduli)
    if (m < 1) throw InvalidSpec("moduli must be positive");
  return make(spec::Semidirect{std::move(moduli), std::move(acting), std::move(matrices)});
}

SpecPtr wreath_two(SpecPtr base) {
  if (!base) throw InvalidSpec("wreath product of a missing group");
  return make(spec::WreathTwo{std::move(base)});
}

SpecPtr named(spec::NamedGroup which) { return make(spec::Named{which}); }

SpecPtr parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

std::string to_string(const GroupSpec& s) {
  return std::visit(
      overloaded{
          [](const spec::Cyclic& c) { return "C" + std::to_string(c.n); },
          [](const spec::Dihedral& d) { return "D" + std::to_string(2 * d.n); },
          [](const spec::Symmetric& x) { return "S" + std::to_string(x.n); },
          [](const spec::Alternating& x) { return "A" + std::to_string(x.n); },
          [](const spec::Klein&) { return std::string("Klein"); },
          [](const spec::DirectProduct& p) { return to_string(*p.left) + "x" + to_string(*p.right); },
          [](const spec::Semidirect& p) {
            std::string m;
            for (int x : p.moduli) m += (m.empty() ? "" : ",") + std::to_string(x);
            return "Semidirect(" + m + ";" + to_string(*p.acting) + ")";
          },
          [](const spec::WreathTwo& w) { return to_string(*w.base) + "wr2"; },
          [](const spec::Named& n) { return std::string(named_string(n.which)); },
      },
      s.value);
}

std::size_t symbolic_order(const GroupSpec& s) {
  return std::visit(
      overloaded{
          [](const spec::Cyclic& c) { return c.n; },
          [](const spec::Dihedral& d) { return 2 * d.n; },
          [](const spec::Symmetric& x) { return factorial(x.n); },
          [](const spec::Alternating& x) { return x.n <= 2 ? std::size_t{1} : factorial(x.n) / 2; },
          [](const spec::Klein&) { return std::size_t{4}; },
          [](const spec::DirectProduct& p) {
            return sat_mul(symbolic_order(*p.left), symbolic_order(*p.right));
          },
          [](const spec::Semidirect& p) {
            std::size_t r = symbolic_order(*p.acting);
            for (int m : p.moduli) r = sat_mul(r, static_cast<std::size_t>(m));
            return r;
          },
          [](const spec::WreathTwo& w) {
            std::size_t b = symbolic_order(*w.base);
            return sat_mul(sat_mul(b, b), 2);
          },
          [](const spec::Named& n) { return named_order(n.which); },
      },
      s.value);
}

GroupPtr build(const GroupSpec& s, std::size_t cap) {
  if (symbolic_order(s) > cap) throw CapExceeded(cap);
  return std::visit(
      overloaded{
          [&](const spec::Cyclic& c) -> GroupPtr {
            if (c.n == 1) return FiniteGroup::closure({Permutation::identity(1)}, cap);
            std::vector<std::uint16_t> img(c.n);
            for (std::size_t i = 0; i < c.n; ++i) img[i] = static_cast<std::uint16_t>((i + 1) % c.n);
            return FiniteGroup::closure({Permutation(std::move(img))}, cap);
          },
          [&](const spec::Dihedral& d) -> GroupPtr {
            if (d.n == 2)
              return FiniteGroup::closure(to_elements({perm(4, "(1 2)(3 4)"), perm(4, "(1 3)(2 4)")}),
                                          cap);
            std::vector<std::uint16_t> rot(d.n), refl(d.n);
            for (std::size_t i = 0; i < d.n; ++i) {
              rot[i] = static_cast<std::uint16_t>((i + 1) % d.n);
              refl[i] = static_cast<std::uint16_t>((d.n - i) % d.n);
            }
            return FiniteGroup::closure(
                to_elements({Permutation(std::move(rot)), Permutation(std::move(refl))}), cap);
          },
          [&](const spec::Symmetric& x) {
            return FiniteGroup::closure(to_elements(symmetric_generators(x.n)), cap);
          },
          [&](const spec::Alternating& x) {
            return FiniteGroup::closure(to_elements(alternating_generators(x.n)), cap);
          },
          [&](const spec::Klein&) {
            return FiniteGroup::closure(to_elements({perm(4, "(1 2)(3 4)"), perm(4, "(1 3)(2 4)")}),
                                        cap);
          },
          [&](const spec::DirectProduct& p) {
            GroupPtr a = build(*p.left, cap);
            GroupPtr b = build(*p.right, cap);
            const std::size_t da = degree_of(a), db = degree_of(b);
            std::vector<GroupElement> gens;
            for (const auto& g : perm_generators(a)) gens.emplace_back(g.embedded(0, da + db));
            for (const auto& g : perm_generators(b)) gens.emplace_back(g.embedded(da, da + db));
            return FiniteGroup::closure(std::move(gens), cap);
          },
          [&](const spec::Semidirect& p) {
            GroupPtr acting = build(*p.acting, cap);
            auto action = ModuleAction::from_generators(p.moduli, perm_generators(acting), p.matrices);
            return build_semidirect(p.moduli, acting, std::move(action), cap);
          },
          [&](const spec::WreathTwo& w) {
            GroupPtr base = build(*w.base, cap);
            return FiniteGroup::closure(
                to_elements(wreath_generators(perm_generators(base), degree_of(base))), cap);
          },
          [&](const spec::Named& n) { return build_named(n.which, cap); },
      },
      s.value);
}

}  // namespace jordan
