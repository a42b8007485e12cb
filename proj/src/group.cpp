#include "gq/group.hpp"

#include <algorithm>

namespace gq {

static ExactMatrix diag_powers(const FieldPtr& F, const FieldElement& eps,
                               const std::vector<int>& exps) {
  ExactMatrix m(F, (int)exps.size(), (int)exps.size());
  for (int i = 0; i < (int)exps.size(); ++i) m.set(i, i, eps.pow(exps[i]));
  return m;
}

// perm[i] = image index of basis vector i (0-based): e_i |-> e_{perm[i]}
static ExactMatrix perm_matrix(const FieldPtr& F, const std::vector<int>& perm) {
  ExactMatrix m(F, (int)perm.size(), (int)perm.size());
  for (int i = 0; i < (int)perm.size(); ++i) m.set(perm[i], i, F->one());
  return m;
}

static ExactMatrix mat_pow(const ExactMatrix& m, int e) {
  ExactMatrix acc = ExactMatrix::identity(m.field(), m.rows());
  for (int i = 0; i < e; ++i) acc = acc * m;
  return acc;
}

static void require(bool ok, const std::string& what) {
  if (!ok) throw RelationFailed(what);
}

static std::vector<ExactMatrix> closure(const std::vector<ExactMatrix>& gens,
                                        int guard = 200) {
  std::vector<ExactMatrix> elems{ExactMatrix::identity(gens[0].field(), gens[0].rows())};
  size_t next = 0;
  while (next < elems.size()) {
    ExactMatrix cur = elems[next++];
    for (const auto& g : gens) {
      ExactMatrix prod = g * cur;
      if (std::find(elems.begin(), elems.end(), prod) == elems.end()) {
        elems.push_back(std::move(prod));
        if ((int)elems.size() > guard)
          throw RelationFailed("group closure exceeded guard");
      }
    }
  }
  return elems;
}

// dihedral relations: t^7 = s^2 = 1, s t s = t^{-1}
static void check_dihedral7(const ExactMatrix& t, const ExactMatrix& s) {
  auto id = ExactMatrix::identity(t.field(), t.rows());
  require(mat_pow(t, 7) == id, "t^7 != 1");
  require(s * s == id, "s^2 != 1");
  require(s * t * s == mat_pow(t, 6), "s t s != t^-1");
}

GroupAction make_group(const std::string& name, FieldPtr field) {
  bool needs_eps = (name != "D7_perm");
  if (!field) field = needs_eps ? Field::cyclotomic(7) : Field::rationals();
  if (needs_eps && !field->has_root_of_unity(7))
    throw FieldTooSmall("no 7th root of unity in the chosen field");

  GroupAction G;
  G.name = name;
  G.field = field;
  FieldElement eps = needs_eps ? field->root_of_unity(7) : field->one();

  if (name == "D7_rho6" || name == "D7_gr36") {
    // tau: v_i -> eps^i v_i; sigma: v_i -> v_{7-i} on V6
    G.dim = 6;
    auto tau = diag_powers(field, eps, {1, 2, 3, 4, 5, 6});
    auto sigma = perm_matrix(field, {5, 4, 3, 2, 1, 0});
    check_dihedral7(tau, sigma);
    G.gen_names = {"tau", "sigma"};
    G.gens = {tau, sigma};
  } else if (name == "D7_rho7") {
    // tau: v_i -> eps^{i-1} v_i; sigma fixes v_1 and swaps v_i <-> v_{9-i}
    G.dim = 7;
    auto tau = diag_powers(field, eps, {0, 1, 2, 3, 4, 5, 6});
    auto sigma = perm_matrix(field, {0, 6, 5, 4, 3, 2, 1});
    check_dihedral7(tau, sigma);
    G.gen_names = {"tau", "sigma"};
    G.gens = {tau, sigma};
  } else if (name == "Z7") {
    G.dim = 7;
    auto tau = diag_powers(field, eps, {0, 1, 2, 3, 4, 5, 6});
    require(mat_pow(tau, 7) == ExactMatrix::identity(field, 7), "t^7 != 1");
    G.gen_names = {"tau"};
    G.gens = {tau};
  } else if (name == "F21" || name == "G42") {
    // coordinates x_1..x_6, y_1..y_6, z
    // a: x_i -> eps^i x_i, y_i -> eps^i y_i, z -> z
    // b: index doubling (F21) or tripling (G42) mod 7 on both blocks
    G.dim = 13;
    int mult = (name == "F21") ? 2 : 3;
    std::vector<int> exps;
    for (int blk = 0; blk < 2; ++blk)
      for (int i = 1; i <= 6; ++i) exps.push_back(i);
    exps.push_back(0);
    auto a = diag_powers(field, eps, exps);
    std::vector<int> perm(13);
    for (int blk = 0; blk < 2; ++blk)
      for (int i = 1; i <= 6; ++i)
        perm[blk * 6 + (i - 1)] = blk * 6 + (mult * i % 7) - 1;
    perm[12] = 12;
    auto b = perm_matrix(field, perm);
    // the order-6 normalizer also flips the sign of z
    if (name == "G42") b.set(12, 12, -field->one());
    auto id = ExactMatrix::identity(field, 13);
    int bord = (name == "F21") ? 3 : 6;
    require(mat_pow(a, 7) == id, "a^7 != 1");
    require(mat_pow(b, bord) == id, "b order wrong");
    // conjugation b^-1 a b = a^mult, i.e. a b = b a^mult
    require(a * b == b * mat_pow(a, mult), "a b != b a^m");
    G.gen_names = {"a", "b"};
    G.gens = {a, b};
  } else if (name == "D7_perm") {
    // coordinates x_1..x_7, y_1..y_7; alpha cycles indices, w0 reverses
    // 1..6 fixing 7, acting the same way on both blocks
    G.dim = 14;
    std::vector<int> cyc(14), rev(14);
    for (int blk = 0; blk < 2; ++blk)
      for (int i = 1; i <= 7; ++i) {
        cyc[blk * 7 + (i - 1)] = blk * 7 + (i % 7);
        rev[blk * 7 + (i - 1)] = blk * 7 + ((i == 7) ? 6 : (6 - i));
      }
    auto alpha = perm_matrix(field, cyc);
    auto w0 = perm_matrix(field, rev);
    check_dihedral7(alpha, w0);
    G.gen_names = {"alpha", "w0"};
    G.gens = {alpha, w0};
  } else {
    throw UnknownGroup("unknown group: " + name);
  }

  G.elements = closure(G.gens);
  int expected = 14;
  if (name == "Z7") expected = 7;
  else if (name == "F21") expected = 21;
  else if (name == "G42") expected = 42;
  require(G.order() == expected, "unexpected group order");
  return G;
}

std::vector<std::vector<FieldElement>> invariant_subspace(
    const std::vector<ExactMatrix>& gens,
    const std::vector<FieldElement>& characters) {
  if (gens.empty()) return {};
  if (!characters.empty() && characters.size() != gens.size())
    throw FieldError("one character value per generator expected");
  const FieldPtr& F = gens[0].field();
  int n = gens[0].rows();
  ExactMatrix stacked(F, 0, n);
  for (size_t g = 0; g < gens.size(); ++g) {
    FieldElement chi = characters.empty() ? F->one() : characters[g];
    stacked = stacked.vstack(gens[g] - ExactMatrix::identity(F, n).scaled(chi));
  }
  return stacked.kernel_basis();
}

// action of g on V (x) wedge^2 V*, in the contraction-domain ordering
static ExactMatrix section_action(const ExactMatrix& g) {
  const FieldPtr& F = g.field();
  int n = g.rows();
  ExactMatrix wdual = induced_action(g.inverse().transpose(), 2);
  int nw = wdual.rows();
  ExactMatrix a(F, nw * n, nw * n);
  for (int p = 0; p < nw; ++p)
    for (int q = 0; q < nw; ++q) {
      if (wdual.at(p, q).is_zero()) continue;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          FieldElement v = wdual.at(p, q) * g.at(i, j);
          if (!v.is_zero()) a.set(p * n + i, q * n + j, v);
        }
    }
  return a;
}

InvariantFamily invariant_q1_family(FieldPtr field) {
  if (!field) field = Field::cyclotomic(7);
  if (!field->has_root_of_unity(7))
    throw FieldTooSmall("no 7th root of unity in the chosen field");
  const int n = 6;
  auto grp = make_group("D7_rho6", field);
  ExactMatrix a_tau = section_action(grp.gens[0]);
  ExactMatrix a_sig = section_action(grp.gens[1]);
  int dim = a_tau.rows();
  auto id = ExactMatrix::identity(field, dim);
  // tau-invariant, sigma-antiinvariant (the sigma-fixed space is zero once
  // the wedge re-sorting signs are tracked), inside ker(contraction)
  ExactMatrix eqs = (a_tau - id).vstack(a_sig + id).vstack(contraction_matrix(field, n));
  auto kernel = eqs.kernel_basis();
  if (kernel.size() != 6)
    throw FieldError("invariant family has unexpected dimension " +
                     std::to_string(kernel.size()));

  // named parameters, each supported on a sigma-paired pair of slots
  struct Slot { int i, j, k; };
  const std::vector<std::pair<Slot, Slot>> pairs = {
      {{1, 2, 6}, {6, 1, 5}},  // c_2_6
      {{1, 3, 5}, {6, 2, 4}},  // c_3_5
      {{2, 3, 6}, {5, 1, 4}},  // c_3_6
      {{2, 4, 5}, {5, 2, 3}},  // c_4_5
      {{3, 1, 2}, {4, 5, 6}},  // c_1_2
      {{3, 4, 6}, {4, 1, 3}},  // c_4_6
  };
  const std::vector<std::string> names = {"c_2_6", "c_3_5", "c_3_6",
                                          "c_4_5", "c_1_2", "c_4_6"};
  // combine kernel vectors so parameter r has coefficient delta_{rs} at the
  // first slot of pair s
  ExactMatrix lead(field, 6, 6);
  for (int r = 0; r < 6; ++r)
    for (int s = 0; s < 6; ++s) {
      const Slot& sl = pairs[s].first;
      lead.set(r, s, kernel[r][contraction_position(sl.i, sl.j, sl.k, n)]);
    }
  ExactMatrix inv = lead.inverse();  // throws if the slots do not separate

  InvariantFamily fam;
  fam.field = field;
  fam.params = names;
  for (int s = 0; s < 6; ++s) {
    std::vector<FieldElement> v(dim, field->zero());
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < dim; ++c) v[c] = v[c] + inv.at(r, s) * kernel[r][c];
    std::map<std::array<int, 3>, FieldElement> entries;
    for (auto& idx : wedge_basis(2, n)) {
      for (int i = 1; i <= n; ++i) {
        const FieldElement& c = v[contraction_position(i, idx[0], idx[1], n)];
        if (!c.is_zero()) entries[{i, idx[0], idx[1]}] = c;
      }
    }
    if (entries.size() != 2)
      throw FieldError("family basis vector is not two-slot");
    fam.basis.emplace_back(field, n, std::move(entries));
  }
  return fam;
}

QuotientBundleSection InvariantFamily::at(const std::vector<FieldElement>& values) const {
  if (values.size() != basis.size())
    throw FieldError("one value per parameter expected");
  std::map<std::array<int, 3>, FieldElement> entries;
  for (size_t s = 0; s < basis.size(); ++s)
    for (auto& [slot, c] : basis[s].entries()) {
      auto it = entries.find(slot);
      FieldElement add = c * values[s];
      if (it == entries.end()) entries[slot] = add;
      else it->second = it->second + add;
    }
  for (auto it = entries.begin(); it != entries.end();)
    it = it->second.is_zero() ? entries.erase(it) : std::next(it);
  return QuotientBundleSection(field, basis[0].n(), std::move(entries));
}

std::vector<FieldElement> InvariantFamily::random_values(std::mt19937_64& rng) const {
  std::vector<FieldElement> v;
  for (size_t i = 0; i < params.size(); ++i)
    v.push_back(field->random_small_nonzero(rng));
  return v;
}

std::vector<FieldElement> apply_section(const QuotientBundleSection& s,
                                        const std::vector<FieldElement>& a,
                                        const std::vector<FieldElement>& b) {
  const FieldPtr& F = s.field();
  int n = s.n();
  std::vector<FieldElement> out(n, F->zero());
  for (auto& [slot, c] : s.entries()) {
    auto [i, j, k] = slot;
    out[i - 1] = out[i - 1] + c * (a[j - 1] * b[k - 1] - a[k - 1] * b[j - 1]);
  }
  return out;
}

std::map<int, std::vector<std::array<int, 3>>> gr36_eigenvalue_classes() {
  std::map<int, std::vector<std::array<int, 3>>> classes;
  for (auto& idx : wedge_basis(3, 6))
    classes[(idx[0] + idx[1] + idx[2]) % 7].push_back({idx[0], idx[1], idx[2]});
  return classes;
}

}  // namespace gq
