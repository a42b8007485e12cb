#include "gq/models.hpp"

#include <json.hpp>

#include "gq/skew.hpp"

namespace gq {

std::vector<SparsePoly> VarietyModel::equations() const {
  std::vector<SparsePoly> eqs = linear;
  eqs.insert(eqs.end(), quadrics.begin(), quadrics.end());
  eqs.insert(eqs.end(), cubics.begin(), cubics.end());
  return eqs;
}

static int xpos(int i, int j, int n) { return wedge_position({i, j}, n); }

static void check_tau_weight(const SparsePoly& form,
                             const std::vector<WedgeIndex>& labels) {
  int weight = -1;
  for (auto& [m, c] : form.terms()) {
    for (int v = 0; v < (int)m.size(); ++v) {
      if (m[v] == 0) continue;
      int w = (labels[v][0] + labels[v][1]) % 7;
      if (weight < 0) weight = w;
      else if (w != weight)
        throw FieldError("linear form is not tau-homogeneous");
    }
  }
}

// c ordered {c_2_6, c_3_5, c_3_6, c_4_5, c_1_2, c_4_6}
static const char* kCNames[6] = {"c_2_6", "c_3_5", "c_3_6", "c_4_5", "c_1_2", "c_4_6"};

static std::vector<SparsePoly> z_linear_forms(const RingPtr& ring,
                                              const std::vector<FieldElement>& c) {
  if (c.size() != 6) throw ZeroParameter("six parameters expected");
  for (auto& v : c)
    if (v.is_zero()) throw ZeroParameter("zero model parameter");
  // rows: target x_{1,k}, then (c-index, pair) twice
  struct Row {
    int k, c1, j1, k1, c2, j2, k2;
  };
  static const Row rows[6] = {
      {7, 0, 2, 6, 1, 3, 5}, {6, 2, 2, 5, 3, 3, 4}, {5, 5, 2, 4, 4, 6, 7},
      {4, 4, 2, 3, 5, 5, 7}, {3, 2, 4, 7, 3, 5, 6}, {2, 0, 3, 7, 1, 4, 6}};
  std::vector<SparsePoly> forms;
  auto labels = wedge_basis(2, 7);
  for (const Row& r : rows) {
    SparsePoly f = SparsePoly::variable(ring, xpos(1, r.k, 7)) -
                   SparsePoly::variable(ring, xpos(r.j1, r.k1, 7)).scaled(c[r.c1]) -
                   SparsePoly::variable(ring, xpos(r.j2, r.k2, 7)).scaled(c[r.c2]);
    check_tau_weight(f, labels);
    forms.push_back(std::move(f));
  }
  return forms;
}

static SparsePoly hyperplane_form(const RingPtr& ring, const Hyperplane& h) {
  if (h[0].is_zero() && h[1].is_zero() && h[2].is_zero())
    throw ZeroParameter("zero hyperplane");
  return SparsePoly::variable(ring, xpos(2, 7, 7)).scaled(h[0]) +
         SparsePoly::variable(ring, xpos(3, 6, 7)).scaled(h[1]) +
         SparsePoly::variable(ring, xpos(4, 5, 7)).scaled(h[2]);
}

static void record_c(VarietyModel& m, const std::vector<FieldElement>& c) {
  for (int i = 0; i < 6; ++i) m.params[kCNames[i]] = c[i];
}

static void record_h(VarietyModel& m, const std::string& tag, const Hyperplane& h) {
  m.params[tag + "_2_7"] = h[0];
  m.params[tag + "_3_6"] = h[1];
  m.params[tag + "_4_5"] = h[2];
}

VarietyModel build_Z(FieldPtr field, const std::vector<FieldElement>& c) {
  auto spec = make_grassmannian(field, 2, 7);
  VarietyModel m;
  m.name = "Z";
  m.ring = spec.ring;
  m.linear = z_linear_forms(spec.ring, c);
  m.quadrics = spec.quadrics;
  record_c(m, c);
  m.expected_dim = 4;
  m.expected_degree = 42;
  m.canonical_degree = -1;
  return m;
}

VarietyModel build_W_Z(FieldPtr field, const std::vector<FieldElement>& c,
                       const Hyperplane& h) {
  VarietyModel m = build_Z(std::move(field), c);
  m.name = "W_Z";
  m.linear.push_back(hyperplane_form(m.ring, h));
  record_h(m, "h1", h);
  m.expected_dim = 3;
  m.canonical_degree = 0;
  return m;
}

VarietyModel build_S_Z(FieldPtr field, const std::vector<FieldElement>& c,
                       const Hyperplane& h1, const Hyperplane& h2) {
  VarietyModel m = build_Z(std::move(field), c);
  m.name = "S_Z";
  m.linear.push_back(hyperplane_form(m.ring, h1));
  m.linear.push_back(hyperplane_form(m.ring, h2));
  record_h(m, "h1", h1);
  record_h(m, "h2", h2);
  m.expected_dim = 2;
  m.canonical_degree = 1;
  return m;
}

std::pair<FieldElement, FieldElement> derive_eps(const Hyperplane& h1,
                                                 const Hyperplane& h2) {
  FieldElement det = h1[0] * h2[1] - h1[1] * h2[0];
  if (det.is_zero())
    throw DegenerateHyperplanes("hyperplanes do not separate x_2_7, x_3_6");
  // solve h[0] e1 + h[1] e2 = -h[2] for both hyperplanes
  FieldElement e1 = (-h1[2] * h2[1] + h2[2] * h1[1]) / det;
  FieldElement e2 = (-h1[0] * h2[2] + h2[0] * h1[2]) / det;
  return {e1, e2};
}

VarietyModel build_S_format(FieldPtr field, const std::vector<FieldElement>& mu,
                            const FieldElement& eps1, const FieldElement& eps2) {
  if (mu.size() != 6) throw ZeroParameter("six parameters expected");
  for (auto& v : mu)
    if (v.is_zero()) throw ZeroParameter("zero model parameter");
  // the 13 surviving coordinates: 2 <= i < j <= 7 minus (2,7) and (3,6)
  std::vector<std::pair<int, int>> pairs;
  for (int i = 2; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j)
      if (!(i == 2 && j == 7) && !(i == 3 && j == 6)) pairs.push_back({i, j});
  std::vector<std::string> names;
  int idx[8][8] = {};
  for (int v = 0; v < (int)pairs.size(); ++v) {
    auto [i, j] = pairs[v];
    names.push_back("x_" + std::to_string(i) + "_" + std::to_string(j));
    idx[i][j] = v;
  }
  RingPtr ring = PolyRing::make(field, names);
  auto var = [&](int i, int j) { return SparsePoly::variable(ring, idx[i][j]); };

  SkewMatrix M(ring, 7);
  // first row couples the mu parameters in the weight-matched pairs
  M.set(0, 1, var(3, 7).scaled(mu[0]) + var(4, 6).scaled(mu[1]));
  M.set(0, 2, var(4, 7).scaled(mu[2]) + var(5, 6).scaled(mu[3]));
  M.set(0, 3, var(2, 3).scaled(mu[4]) + var(5, 7).scaled(mu[5]));
  M.set(0, 4, var(2, 4).scaled(mu[5]) + var(6, 7).scaled(mu[4]));
  M.set(0, 5, var(2, 5).scaled(mu[2]) + var(3, 4).scaled(mu[3]));
  M.set(0, 6, var(2, 6).scaled(mu[0]) + var(3, 5).scaled(mu[1]));
  for (int i = 2; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      if (i == 2 && j == 7) M.set(i - 1, j - 1, var(4, 5).scaled(eps1));
      else if (i == 3 && j == 6) M.set(i - 1, j - 1, var(4, 5).scaled(eps2));
      else M.set(i - 1, j - 1, var(i, j));
    }

  VarietyModel m;
  m.name = "S_fmt";
  m.ring = ring;
  m.quadrics = M.sub_pfaffians(4);
  m.matrix.assign(7, std::vector<SparsePoly>(7, SparsePoly::zero(ring)));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m.matrix[i][j] = M.entry(i, j);
  for (int i = 0; i < 6; ++i) m.params["mu_" + std::to_string(i + 1)] = mu[i];
  m.params["eps_1"] = eps1;
  m.params["eps_2"] = eps2;
  m.expected_dim = 2;
  m.expected_degree = 42;
  m.canonical_degree = 1;
  return m;
}

std::vector<FieldElement> transfer_point(const QuotientBundleSection& lam,
                                         const std::vector<FieldElement>& a,
                                         const std::vector<FieldElement>& b) {
  const FieldPtr& F = lam.field();
  auto img = apply_section(lam, a, b);
  std::vector<FieldElement> out(21, F->zero());
  for (int i = 1; i <= 6; ++i) out[xpos(1, i + 1, 7)] = img[i - 1];
  for (int j = 1; j <= 6; ++j)
    for (int k = j + 1; k <= 6; ++k)
      out[xpos(j + 1, k + 1, 7)] = a[j - 1] * b[k - 1] - a[k - 1] * b[j - 1];
  return out;
}

VarietyModel transfer_Y_to_Z(const QuotientBundleSection& lam) {
  if (lam.entries().empty()) throw ZeroParameter("zero section");
  auto spec = make_grassmannian(lam.field(), 2, 7);
  VarietyModel m;
  m.name = "Z";
  m.ring = spec.ring;
  for (int i = 6; i >= 1; --i) {
    SparsePoly f = SparsePoly::variable(spec.ring, xpos(1, i + 1, 7));
    for (auto& [slot, c] : lam.entries())
      if (slot[0] == i)
        f = f - SparsePoly::variable(spec.ring, xpos(slot[1] + 1, slot[2] + 1, 7))
                    .scaled(c);
    m.linear.push_back(std::move(f));
  }
  m.quadrics = spec.quadrics;
  m.expected_dim = 4;
  m.expected_degree = 42;
  m.canonical_degree = -1;
  return m;
}

VarietyModel build_Y_quadrics(const QuotientBundleSection& lam) {
  if (lam.entries().empty()) throw ZeroParameter("zero section");
  auto spec = make_grassmannian(lam.field(), 2, 6);
  RingPtr ring = spec.ring;
  // third-row entries of the rank-2 matrix: r_m = sum c_{m,u,v} p_{u,v}
  std::vector<SparsePoly> r(7, SparsePoly::zero(ring));
  for (auto& [slot, c] : lam.entries())
    r[slot[0]] = r[slot[0]] +
                 SparsePoly::variable(ring, xpos(slot[1], slot[2], 6)).scaled(c);
  VarietyModel m;
  m.name = "Y";
  m.ring = ring;
  m.quadrics = spec.quadrics;
  for (auto& t : wedge_basis(3, 6)) {
    int j = t[0], k = t[1], l = t[2];
    m.quadrics.push_back(r[j] * SparsePoly::variable(ring, xpos(k, l, 6)) -
                         r[k] * SparsePoly::variable(ring, xpos(j, l, 6)) +
                         r[l] * SparsePoly::variable(ring, xpos(j, k, 6)));
  }
  m.expected_dim = 4;
  m.canonical_degree = -1;
  return m;
}

static std::array<int, 3> alpha_partner(const std::array<int, 3>& t) {
  WedgeIndex w = {7 - t[0], 7 - t[1], 7 - t[2]};
  sort_sign(w);
  return {w[0], w[1], w[2]};
}

VarietyModel build_T_gr36(FieldPtr field,
                          const std::map<std::array<int, 3>, FieldElement>& alpha) {
  auto spec = make_grassmannian(field, 3, 6);
  auto labels = wedge_basis(3, 6);
  for (auto& t : labels) {
    std::array<int, 3> key = {t[0], t[1], t[2]};
    auto it = alpha.find(key);
    auto ip = alpha.find(alpha_partner(key));
    if (it == alpha.end() || ip == alpha.end() || !(it->second == ip->second))
      throw AsymmetricAlpha("alpha not symmetric under i -> 7-i");
  }
  VarietyModel m;
  m.name = "T36";
  m.ring = spec.ring;
  for (int res = 0; res < 7; ++res) {
    SparsePoly f = SparsePoly::zero(spec.ring);
    for (int v = 0; v < (int)labels.size(); ++v) {
      auto& t = labels[v];
      if ((t[0] + t[1] + t[2]) % 7 != res) continue;
      f = f + SparsePoly::variable(spec.ring, v).scaled(alpha.at({t[0], t[1], t[2]}));
    }
    m.linear.push_back(std::move(f));
  }
  m.quadrics = spec.quadrics;

  // sigma-stability of the linear span (tau-stability holds per residue class)
  ExactMatrix sigma(field, 6, 6);
  for (int i = 1; i <= 6; ++i) sigma.set(7 - i - 1, i - 1, field->one());
  ExactMatrix w = induced_action(sigma, 3);
  ExactMatrix coeffs(field, 7, (int)labels.size());
  for (int rix = 0; rix < 7; ++rix)
    for (auto& [mono, cf] : m.linear[rix].terms())
      for (int v = 0; v < (int)mono.size(); ++v)
        if (mono[v]) coeffs.set(rix, v, cf);
  if (!same_row_span(coeffs, coeffs.vstack(coeffs * w)))
    throw AsymmetricAlpha("linear span not involution-stable");

  for (auto& [t, v] : alpha)
    m.params["alpha_" + std::to_string(t[0]) + "_" + std::to_string(t[1]) + "_" +
             std::to_string(t[2])] = v;
  m.expected_dim = 2;
  m.expected_degree = 42;
  m.canonical_degree = 1;
  return m;
}

std::map<std::array<int, 3>, FieldElement> random_T_alpha(FieldPtr field,
                                                          std::mt19937_64& rng) {
  std::map<std::array<int, 3>, FieldElement> alpha;
  for (auto& t : wedge_basis(3, 6)) {
    std::array<int, 3> key = {t[0], t[1], t[2]};
    if (alpha.count(key)) continue;
    FieldElement v = field->random_small_nonzero(rng);
    alpha[key] = v;
    alpha[alpha_partner(key)] = v;
  }
  return alpha;
}

DualModels build_dual(FieldPtr field, const std::vector<FieldElement>& c,
                      const Hyperplane& h) {
  if (h[0].is_zero())
    throw DegenerateHyperplanes("hyperplane must involve x_2_7");
  auto g27ring = make_grassmannian(field, 2, 7).ring;
  auto forms = z_linear_forms(g27ring, c);
  Hyperplane hn = {field->one(), h[1] / h[0], h[2] / h[0]};
  // order the seven spanning forms by tau-weight 1..6, then weight 0; the
  // form monic in x_{1,k} has weight k-1, and z_linear_forms descends from
  // x_{1,7} to x_{1,2}
  std::vector<SparsePoly> span(7, SparsePoly::zero(g27ring));
  for (int t = 0; t < 6; ++t) span[5 - t] = forms[t];
  span[6] = hyperplane_form(g27ring, hn);

  DualModels out;
  out.datum.hdual = ExactMatrix(field, 7, 21);
  for (int r = 0; r < 7; ++r)
    for (auto& [mono, cf] : span[r].terms())
      for (int v = 0; v < 21; ++v)
        if (mono[v]) out.datum.hdual.set(r, v, cf);
  out.datum.annihilator = out.datum.hdual.kernel_basis();
  if (out.datum.annihilator.size() != 14)
    throw AnnihilatorDimensionMismatch("annihilator dimension is not 14");

  // the P^6 of eigenvalue representatives: x_{1,k} carries weight k-1,
  // x_{2,7} weight 0
  std::vector<std::string> names;
  for (int k = 2; k <= 7; ++k) names.push_back("x_1_" + std::to_string(k));
  names.push_back("x_2_7");
  RingPtr dring = PolyRing::make(field, names);

  SkewMatrix omega(dring, 7);
  for (int i = 1; i <= 7; ++i)
    for (int j = i + 1; j <= 7; ++j) {
      SparsePoly e = SparsePoly::zero(dring);
      for (int r = 0; r < 7; ++r) {
        const FieldElement& cf = out.datum.hdual.at(r, xpos(i, j, 7));
        if (!cf.is_zero()) e = e + SparsePoly::variable(dring, r).scaled(cf);
      }
      omega.set(i - 1, j - 1, std::move(e));
    }

  VarietyModel dual;
  dual.name = "dual";
  dual.ring = dring;
  dual.cubics = omega.sub_pfaffians(6);
  dual.matrix.assign(7, std::vector<SparsePoly>(7, SparsePoly::zero(dring)));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) dual.matrix[i][j] = omega.entry(i, j);
  record_c(dual, c);
  record_h(dual, "h", hn);
  dual.expected_dim = 3;
  dual.expected_degree = 14;
  dual.canonical_degree = 0;

  // each cubic must be homogeneous for the weight grading of the dual ring
  std::vector<int> wt = {1, 2, 3, 4, 5, 6, 0};
  for (auto& cu : dual.cubics) {
    int w = -1;
    for (auto& [mono, cf] : cu.terms()) {
      int s = 0;
      for (int v = 0; v < 7; ++v) s += mono[v] * wt[v];
      if (w < 0) w = s % 7;
      else if (s % 7 != w) throw FieldError("dual cubic not weight-homogeneous");
    }
  }

  // Campedelli slice: x_2_7 = 0
  std::vector<std::string> cnames(names.begin(), names.end() - 1);
  RingPtr cring = PolyRing::make(field, cnames);
  std::vector<SparsePoly> images;
  for (int v = 0; v < 6; ++v) images.push_back(SparsePoly::variable(cring, v));
  images.push_back(SparsePoly::zero(cring));
  VarietyModel camp;
  camp.name = "campedelli";
  camp.ring = cring;
  for (auto& cu : dual.cubics) camp.cubics.push_back(cu.substitute(images));
  camp.matrix.assign(7, std::vector<SparsePoly>(7, SparsePoly::zero(cring)));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      camp.matrix[i][j] = dual.matrix[i][j].substitute(images);
  camp.params = dual.params;
  camp.expected_dim = 2;
  camp.expected_degree = 14;
  camp.canonical_degree = 1;

  out.dual = std::move(dual);
  out.campedelli = std::move(camp);
  return out;
}

VarietyModel build_appendixA_reid(FieldPtr field,
                                  const std::vector<FieldElement>& lambda6,
                                  bool as_printed) {
  if (lambda6.size() != 6) throw ZeroParameter("six parameters expected");
  for (auto& v : lambda6)
    if (v.is_zero()) throw ZeroParameter("zero model parameter");
  std::vector<std::string> names;
  for (int i = 1; i <= 6; ++i) names.push_back("x_" + std::to_string(i));
  for (int i = 1; i <= 6; ++i) names.push_back("y_" + std::to_string(i));
  names.push_back("z");
  RingPtr ring = PolyRing::make(field, names);
  auto x = [&](int i) { return SparsePoly::variable(ring, i - 1); };
  auto y = [&](int i) { return SparsePoly::variable(ring, 5 + i); };
  auto z = SparsePoly::variable(ring, 12);
  auto L = [&](int i) { return lambda6[i - 1]; };

  SkewMatrix M(ring, 7);
  const int first_row[6] = {1, 3, 2, 6, 4, 5};
  for (int j = 0; j < 6; ++j)
    M.set(0, j + 1, x(first_row[j]) + y(first_row[j]));
  M.set(1, 2, x(4));
  M.set(1, 3, y(3).scaled(L(3)));
  M.set(1, 4, z);
  M.set(1, 5, -y(5).scaled(L(5)));
  M.set(1, 6, -x(6));
  M.set(2, 3, x(5));
  M.set(2, 4, y(2).scaled(L(2)));
  // as published the (3,6) slot reads +z, but then the index-doubling
  // normalizer does not preserve any member of the family: the three z slots
  // transform with signs (+,-,-) under the induced row 3-cycle, which no
  // scalar rescaling can absorb.  With -z here the family is carried to
  // itself (lambda_{2i} <- lambda_i) and the constant-lambda members become
  // genuinely invariant, so the corrected sign is the default.
  M.set(2, 5, as_printed ? z : -z);
  M.set(2, 6, -y(1).scaled(L(1)));
  M.set(3, 4, x(1));
  M.set(3, 5, y(6).scaled(L(6)));
  M.set(3, 6, z);
  M.set(4, 5, x(3));
  M.set(4, 6, y(4).scaled(L(4)));
  M.set(5, 6, x(2));

  VarietyModel m;
  m.name = as_printed ? "appA1_printed" : "appA1";
  m.ring = ring;
  m.quadrics = M.sub_pfaffians(4);
  m.matrix.assign(7, std::vector<SparsePoly>(7, SparsePoly::zero(ring)));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m.matrix[i][j] = M.entry(i, j);
  for (int i = 1; i <= 6; ++i) m.params["lambda_" + std::to_string(i)] = L(i);
  m.expected_dim = 2;
  m.expected_degree = 42;
  m.canonical_degree = 1;
  return m;
}

VarietyModel build_appendixA_altd7(FieldPtr field, const FieldElement& lambda,
                                   const FieldElement& mu) {
  if (lambda.is_zero() || mu.is_zero()) throw ZeroParameter("zero model parameter");
  std::vector<std::string> names;
  for (int i = 1; i <= 7; ++i) names.push_back("x_" + std::to_string(i));
  for (int i = 1; i <= 7; ++i) names.push_back("y_" + std::to_string(i));
  RingPtr ring = PolyRing::make(field, names);
  auto lx = [&](int i) { return SparsePoly::variable(ring, i - 1).scaled(lambda); };
  auto my = [&](int i) { return SparsePoly::variable(ring, 6 + i).scaled(mu); };
  auto mx = [&](int i) { return SparsePoly::variable(ring, i - 1).scaled(mu); };

  SkewMatrix M(ring, 7);
  M.set(0, 1, lx(6) + my(6));
  M.set(0, 2, lx(2));
  M.set(0, 3, mx(5));
  M.set(0, 4, my(1));
  M.set(0, 5, lx(4));
  M.set(0, 6, lx(7) + my(7));
  M.set(1, 2, lx(5) + my(5));
  M.set(1, 3, lx(1));
  M.set(1, 4, my(4));
  M.set(1, 5, my(7));
  M.set(1, 6, lx(3));
  M.set(2, 3, lx(4) + my(4));
  M.set(2, 4, lx(7));
  M.set(2, 5, my(3));
  M.set(2, 6, my(6));
  M.set(3, 4, lx(3) + my(3));
  M.set(3, 5, lx(6));
  M.set(3, 6, my(2));
  M.set(4, 5, lx(2) + my(2));
  M.set(4, 6, lx(5));
  M.set(5, 6, lx(1) + my(1));

  VarietyModel m;
  m.name = "appA2";
  m.ring = ring;
  SparsePoly H = SparsePoly::zero(ring);
  for (int i = 1; i <= 7; ++i) H = H + lx(i) + my(i);
  m.linear.push_back(std::move(H));
  m.quadrics = M.sub_pfaffians(4);
  m.matrix.assign(7, std::vector<SparsePoly>(7, SparsePoly::zero(ring)));
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m.matrix[i][j] = M.entry(i, j);
  m.params["lambda"] = lambda;
  m.params["mu"] = mu;
  m.expected_dim = 2;
  m.expected_degree = 42;
  m.canonical_degree = 1;
  return m;
}

std::string model_to_json(const VarietyModel& m) {
  nlohmann::json j;
  j["name"] = m.name;
  j["variables"] = m.ring->vars;
  nlohmann::json params = nlohmann::json::object();
  for (auto& [k, v] : m.params) params[k] = v.str();
  j["parameters"] = params;
  auto strs = [](const std::vector<SparsePoly>& ps) {
    std::vector<std::string> out;
    for (auto& p : ps) out.push_back(p.str());
    return out;
  };
  j["linear"] = strs(m.linear);
  j["quadrics"] = strs(m.quadrics);
  j["cubics"] = strs(m.cubics);
  if (!m.matrix.empty()) {
    std::vector<std::vector<std::string>> rows;
    for (auto& row : m.matrix) rows.push_back(strs(row));
    j["matrix"] = rows;
  }
  j["expected"] = {{"dim", m.expected_dim},
                   {"degree", m.expected_degree},
                   {"canonical_degree", m.canonical_degree}};
  return j.dump(2);
}

}  // namespace gq
