#include "gq/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace gq {

// indices encoded in a variable label, e.g. "x_3_6" -> {3, 6}, "z" -> {}
static std::vector<int> label_indices(const std::string& name) {
  std::vector<int> out;
  size_t pos = 0;
  while ((pos = name.find('_', pos)) != std::string::npos) {
    ++pos;
    size_t end = pos;
    while (end < name.size() && isdigit(name[end])) ++end;
    if (end > pos) out.push_back(std::stoi(name.substr(pos, end - pos)));
    pos = end;
  }
  return out;
}

ExactMatrix two_form_matrix(const SparsePoly& form, int n) {
  FieldPtr F = form.ring()->field;
  ExactMatrix omega(F, n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) omega.set(r, c, F->zero());
  for (auto& [mono, cf] : form.terms()) {
    if (mono_degree(mono) != 1) throw EmptySystem("form is not linear");
    int v = 0;
    while (!mono[v]) ++v;
    auto idx = label_indices(form.ring()->vars[v]);
    if (idx.size() != 2) throw EmptySystem("variable is not a pair coordinate");
    omega.set(idx[0] - 1, idx[1] - 1, cf);
    omega.set(idx[1] - 1, idx[0] - 1, -cf);
  }
  return omega;
}

RegularityReport sigma_regularity(const std::vector<ExactMatrix>& forms,
                                  const std::vector<std::vector<FieldElement>>& probes) {
  if (forms.empty()) throw EmptySystem("no 2-forms given");
  int n = forms[0].rows();
  FieldPtr F = forms[0].field();
  RegularityReport rep;
  rep.n = n;
  for (auto& w : probes) {
    ExactMatrix stacked(F, (int)forms.size(), n);
    for (int k = 0; k < (int)forms.size(); ++k) {
      auto row = forms[k].apply(w);
      for (int c = 0; c < n; ++c) stacked.set(k, c, row[c]);
    }
    rep.dims.push_back(n - stacked.rank());
  }
  rep.generic_dim = *std::min_element(rep.dims.begin(), rep.dims.end());
  rep.generic_excess = rep.generic_dim - 1;
  for (int i = 0; i < (int)rep.dims.size(); ++i)
    if (rep.dims[i] > rep.generic_dim) rep.exceptional.push_back(i);
  return rep;
}

RegularityReport sigma_regularity_random(const std::vector<ExactMatrix>& forms,
                                         int probes, std::mt19937_64& rng) {
  if (forms.empty()) throw EmptySystem("no 2-forms given");
  FieldPtr F = forms[0].field();
  std::vector<std::vector<FieldElement>> ws;
  for (int t = 0; t < probes; ++t) {
    std::vector<FieldElement> w;
    for (int i = 0; i < forms[0].rows(); ++i) w.push_back(F->random_element(rng));
    ws.push_back(std::move(w));
  }
  return sigma_regularity(forms, ws);
}

ExactMatrix plane_from_plucker(const GrassmannianSpec& gr,
                               const std::vector<FieldElement>& point) {
  int k = gr.k, n = gr.n;
  FieldPtr F = gr.ring->field;
  int pos = -1;
  for (int i = 0; i < (int)point.size() && pos < 0; ++i)
    if (!point[i].is_zero()) pos = i;
  if (pos < 0) throw NoChartContains("zero Pluecker vector");
  FieldElement inv = point[pos].inverse();
  const WedgeIndex& pivot = gr.labels[pos];

  ExactMatrix plane(F, k, n);
  for (int r = 0; r < k; ++r)
    for (int l = 1; l <= n; ++l) {
      WedgeIndex idx = pivot;
      idx[r] = l;
      int sgn = sort_sign(idx);
      if (sgn == 0)
        plane.set(r, l - 1, (l == pivot[r]) ? F->one() : F->zero());
      else
        plane.set(r, l - 1,
                  point[wedge_position(idx, n)] * inv *
                      F->from_int(sgn));
    }
  auto back = plucker_point(plane).dense();
  for (int i = 0; i < (int)point.size(); ++i)
    if (back[i] != point[i] * inv)
      throw NoChartContains("Pluecker vector is not decomposable");
  return plane;
}

SmoothVerdict smooth_at(const VarietyModel& model, const GrassmannianSpec& gr,
                        const std::vector<FieldElement>& point) {
  for (auto& f : model.equations())
    if (!f.evaluate(point).is_zero())
      throw PointNotOnModel("an equation does not vanish at the point");
  ExactMatrix plane = plane_from_plucker(gr, point);
  int pos = -1;
  for (int i = 0; i < (int)point.size() && pos < 0; ++i)
    if (!point[i].is_zero()) pos = i;
  std::vector<int> pivots(gr.labels[pos].begin(), gr.labels[pos].end());
  ChartData chart = make_chart(gr, pivots);
  std::vector<char> is_pivot(gr.n + 1, 0);
  for (int p : pivots) is_pivot[p] = 1;
  std::vector<FieldElement> vals;
  for (int r = 0; r < gr.k; ++r)
    for (int c = 1; c <= gr.n; ++c)
      if (!is_pivot[c]) vals.push_back(plane.at(r, c - 1));
  auto pulled = chart_pullback(gr, chart, model.equations());
  int rank = jacobian_rank_at(pulled, vals);
  int codim = gr.k * (gr.n - gr.k) - model.expected_dim;
  if (rank == codim) return SmoothVerdict::Smooth;
  if (rank < codim) return SmoothVerdict::Singular;
  return SmoothVerdict::Inconclusive;
}

SmoothVerdict smooth_at_cone(const VarietyModel& model,
                             const std::vector<FieldElement>& point) {
  auto eqs = model.equations();
  for (auto& f : eqs)
    if (!f.evaluate(point).is_zero())
      throw PointNotOnModel("an equation does not vanish at the point");
  int rank = jacobian_rank_at(eqs, point);
  int codim = model.ring->nvars() - 1 - model.expected_dim;
  if (rank == codim) return SmoothVerdict::Smooth;
  if (rank < codim) return SmoothVerdict::Singular;
  return SmoothVerdict::Inconclusive;
}

// ---- compiled mod-p census ----

namespace {

struct FastTerm {
  std::uint64_t c;
  std::vector<std::pair<int, int>> pows;  // (var, exponent)
};

struct FastSystem {
  std::uint64_t p = 0;
  int nvars = 0;
  std::vector<std::vector<FastTerm>> polys;
};

FastSystem compile_mod_p(const std::vector<SparsePoly>& eqs) {
  FastSystem sys;
  FieldPtr F = eqs.at(0).ring()->field;
  if (F->characteristic() == 0 || F->degree() != 1)
    throw CensusTooLarge("census needs a prime field");
  sys.p = F->characteristic();
  sys.nvars = eqs[0].ring()->nvars();
  for (auto& e : eqs) {
    std::vector<FastTerm> terms;
    for (auto& [mono, cf] : e.terms()) {
      FastTerm t;
      t.c = cf.mod_coeffs()[0];
      for (int v = 0; v < (int)mono.size(); ++v)
        if (mono[v]) t.pows.push_back({v, mono[v]});
      terms.push_back(std::move(t));
    }
    if (!terms.empty()) sys.polys.push_back(std::move(terms));
  }
  // cheapest polynomials first: most points fail early
  std::sort(sys.polys.begin(), sys.polys.end(),
            [](auto& a, auto& b) { return a.size() < b.size(); });
  return sys;
}

bool vanishes_all(const FastSystem& sys, const std::vector<std::uint64_t>& x) {
  for (auto& poly : sys.polys) {
    std::uint64_t acc = 0;
    for (auto& t : poly) {
      std::uint64_t v = t.c;
      for (auto& [var, e] : t.pows) {
        if (x[var] == 0) {
          v = 0;
          break;
        }
        for (int i = 0; i < e; ++i) v = v * x[var] % sys.p;
      }
      acc = (acc + v) % sys.p;
    }
    if (acc != 0) return false;
  }
  return true;
}

}  // namespace

Census projective_census(const std::vector<SparsePoly>& eqs, std::size_t point_cap) {
  FastSystem sys = compile_mod_p(eqs);
  double total = (std::pow((double)sys.p, sys.nvars) - 1) / (double)(sys.p - 1);
  if (total > 2.5e8) throw CensusTooLarge("projective census too large");
  Census out;
  out.prime = sys.p;
  std::vector<std::uint64_t> x(sys.nvars, 0);
  for (int lead = 0; lead < sys.nvars; ++lead) {
    std::fill(x.begin(), x.end(), 0);
    x[lead] = 1;
    while (true) {
      if (vanishes_all(sys, x)) {
        ++out.count;
        if (out.points.size() < point_cap) out.points.push_back(x);
      }
      int i = sys.nvars - 1;
      while (i > lead && x[i] == sys.p - 1) x[i--] = 0;
      if (i == lead) break;
      ++x[i];
    }
  }
  return out;
}

static std::vector<FieldElement> all_field_elements(const FieldPtr& F) {
  std::uint64_t p = F->characteristic();
  int d = F->degree();
  std::vector<FieldElement> out = {F->zero()};
  FieldElement g = (d > 1) ? F->generator() : F->one();
  for (int pos = 0; pos < d; ++pos) {
    FieldElement basis = g.pow(pos);
    std::vector<FieldElement> next;
    for (auto& e : out)
      for (std::uint64_t c = 0; c < p; ++c)
        next.push_back(e + basis * F->from_int((long)c));
    out = std::move(next);
  }
  return out;
}

std::uint64_t projective_census_generic(const std::vector<SparsePoly>& eqs) {
  FieldPtr F = eqs.at(0).ring()->field;
  if (F->characteristic() == 0) throw CensusTooLarge("field is infinite");
  int n = eqs[0].ring()->nvars();
  double q = std::pow((double)F->characteristic(), F->degree());
  if ((std::pow(q, n) - 1) / (q - 1) > 3.0e6)
    throw CensusTooLarge("generic census too large");
  auto elems = all_field_elements(F);
  std::uint64_t count = 0;
  std::vector<FieldElement> x(n, F->zero());
  std::vector<int> digit(n, 0);
  for (int lead = 0; lead < n; ++lead) {
    std::fill(digit.begin(), digit.end(), 0);
    std::fill(x.begin(), x.end(), F->zero());
    x[lead] = F->one();
    while (true) {
      bool ok = true;
      for (auto& e : eqs)
        if (!e.evaluate(x).is_zero()) {
          ok = false;
          break;
        }
      if (ok) ++count;
      int i = n - 1;
      while (i > lead && digit[i] == (int)elems.size() - 1) {
        digit[i] = 0;
        x[i] = elems[0];
        --i;
      }
      if (i == lead) break;
      ++digit[i];
      x[i] = elems[digit[i]];
    }
  }
  return count;
}

std::vector<SparsePoly> restrict_to_span(const std::vector<SparsePoly>& eqs,
                                         const ExactMatrix& basis_cols,
                                         const std::string& prefix) {
  FieldPtr F = basis_cols.field();
  int d = basis_cols.cols();
  std::vector<std::string> names;
  for (int i = 0; i < d; ++i) names.push_back(prefix + "_" + std::to_string(i));
  RingPtr tring = PolyRing::make(F, names);
  std::vector<SparsePoly> images;
  for (int i = 0; i < basis_cols.rows(); ++i) {
    SparsePoly im = SparsePoly::zero(tring);
    for (int r = 0; r < d; ++r)
      im = im + SparsePoly::variable(tring, r).scaled(basis_cols.at(i, r));
    images.push_back(std::move(im));
  }
  std::vector<SparsePoly> out;
  for (auto& e : eqs) {
    SparsePoly r = e.substitute(images);
    if (!r.is_zero()) out.push_back(std::move(r));
  }
  return out;
}

std::vector<int> tau_weights(const RingPtr& ring) {
  std::vector<int> out;
  for (auto& name : ring->vars) {
    int s = 0;
    for (int i : label_indices(name)) s += i;
    out.push_back(((s % 7) + 7) % 7);
  }
  return out;
}

ExactMatrix label_involution(const RingPtr& ring, const std::vector<int>& image) {
  FieldPtr F = ring->field;
  int nv = ring->nvars();
  std::map<std::string, int> lookup;
  for (int v = 0; v < nv; ++v) lookup[ring->vars[v]] = v;
  ExactMatrix m(F, nv, nv);
  for (int r = 0; r < nv; ++r)
    for (int c = 0; c < nv; ++c) m.set(r, c, F->zero());
  for (int v = 0; v < nv; ++v) {
    auto idx = label_indices(ring->vars[v]);
    WedgeIndex mapped;
    for (int i : idx) {
      if (i < 1 || i > (int)image.size()) throw BadRange("label index out of range");
      mapped.push_back(image[i - 1]);
    }
    int sgn = sort_sign(mapped);
    if (sgn == 0) throw BadRange("permutation collapses a label");
    std::string prefix = ring->vars[v].substr(0, ring->vars[v].find('_'));
    std::string target = prefix;
    for (int i : mapped) target += "_" + std::to_string(i);
    auto it = lookup.find(target);
    if (it == lookup.end())
      throw BadRange("label set not closed under the permutation: " + target);
    m.set(it->second, v, F->from_int(sgn));
  }
  return m;
}

// ---- fixed loci of the diagonal order-7 elements ----

FixedLocusSummary fixed_locus_cyclic(const VarietyModel& model, int power) {
  FieldPtr F = model.ring->field;
  if (!F->has_root_of_unity(7))
    throw FieldLacksRoot("the working field has no primitive 7th root of unity");
  int nv = model.ring->nvars();
  auto weights = tau_weights(model.ring);
  FixedLocusSummary sum;
  sum.element = "tau^" + std::to_string(((power % 7) + 7) % 7);

  std::map<int, std::vector<int>> by_weight;
  for (int v = 0; v < nv; ++v) by_weight[weights[v]].push_back(v);
  auto eqs = model.equations();

  for (auto& [w, cls] : by_weight) {
    sum.classes.push_back(cls);
    std::vector<char> in_class(nv, 0);
    for (int v : cls) in_class[v] = 1;

    // coordinate points of the class, checked exactly
    for (int v : cls) {
      std::vector<FieldElement> pt(nv, F->zero());
      pt[v] = F->one();
      bool on = true;
      int bad = -1;
      for (int k = 0; k < (int)eqs.size() && on; ++k)
        if (!eqs[k].evaluate(pt).is_zero()) {
          on = false;
          bad = k;
        }
      if (on) {
        sum.points.push_back(pt);
        sum.transcript.push_back("coordinate point " + model.ring->vars[v] +
                                 ": on the model");
      } else {
        sum.transcript.push_back("coordinate point " + model.ring->vars[v] +
                                 ": excluded by equation " + std::to_string(bad));
      }
    }

    // equations with the complement of the class set to zero
    std::vector<SparsePoly> cut;
    {
      std::vector<SparsePoly> images;
      for (int i = 0; i < nv; ++i)
        images.push_back(in_class[i] ? SparsePoly::variable(model.ring, i)
                                     : SparsePoly::zero(model.ring));
      for (auto& e : eqs) {
        SparsePoly r = e.substitute(images);
        if (!r.is_zero()) cut.push_back(std::move(r));
      }
    }

    // supports of size >= 2: look for an equation that restricts to a single
    // monomial, which cannot vanish when every support coordinate is nonzero
    if ((int)cls.size() <= 6) {
      for (std::uint32_t mask = 1; mask < (1u << cls.size()); ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        std::vector<char> in_sup(nv, 0);
        std::string supname;
        for (int b = 0; b < (int)cls.size(); ++b)
          if (mask & (1u << b)) {
            in_sup[cls[b]] = 1;
            supname += (supname.empty() ? "" : ",") + model.ring->vars[cls[b]];
          }
        std::vector<SparsePoly> images;
        for (int i = 0; i < nv; ++i)
          images.push_back(in_sup[i] ? SparsePoly::variable(model.ring, i)
                                     : SparsePoly::zero(model.ring));
        bool witnessed = false;
        for (auto& e : cut) {
          SparsePoly r = e.substitute(images);
          if (r.num_terms() == 1) {
            sum.transcript.push_back("support {" + supname +
                                     "}: excluded by the monomial " + r.str());
            witnessed = true;
            break;
          }
        }
        if (!witnessed) {
          sum.transcript.push_back("support {" + supname + "}: no monomial witness");
          sum.resolved = false;
        }
      }
    } else {
      sum.resolved = false;
      sum.transcript.push_back("class too large for support enumeration");
    }

    // census corroboration over a prime field
    if (F->characteristic() != 0 && F->degree() == 1 && !cls.empty()) {
      ExactMatrix B(F, nv, (int)cls.size());
      for (int i = 0; i < nv; ++i)
        for (int r = 0; r < (int)cls.size(); ++r)
          B.set(i, r, (i == cls[r]) ? F->one() : F->zero());
      auto rest = restrict_to_span(eqs, B);
      std::uint64_t cnt;
      if (rest.empty()) {
        double q = (double)F->characteristic();
        cnt = (std::uint64_t)((std::pow(q, (int)cls.size()) - 1) / (q - 1));
      } else {
        cnt = projective_census(rest, 0).count;
      }
      sum.census[F->characteristic()] += cnt;
    }
  }
  return sum;
}

FreeActionCertificate certify_free_action(const VarietyModel& model) {
  FreeActionCertificate cert;
  cert.free = true;
  for (int k = 1; k <= 6; ++k) {
    auto sum = fixed_locus_cyclic(model, k);
    bool fixed_free = sum.empty() && sum.resolved;
    for (auto& [p, c] : sum.census) fixed_free = fixed_free && c == 0;
    cert.free = cert.free && fixed_free;
    cert.elements.push_back(std::move(sum));
  }
  return cert;
}

// ---- eigenspace analysis for involutions and other semisimple elements ----

namespace {

ExactMatrix columns_matrix(const FieldPtr& F,
                           const std::vector<std::vector<FieldElement>>& cols) {
  int n = cols.empty() ? 0 : (int)cols[0].size();
  ExactMatrix m(F, n, (int)cols.size());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < (int)cols.size(); ++c) m.set(r, c, cols[c][r]);
  return m;
}

long small_int(const mpq_class& q) {
  return (q.get_den() == 1) ? q.get_num().get_si() : -1;
}

// residue degrees of a reduced zero-dimensional homogeneous ideal, from the
// split characteristic polynomial of multiplication by a generic linear form
std::map<int, int> point_degree_split(const std::vector<SparsePoly>& gens,
                                      int expected, std::mt19937_64& rng,
                                      std::vector<std::string>& notes) {
  RingPtr ring = gens.at(0).ring();
  FieldPtr F = ring->field;
  for (int attempt = 0; attempt < 8; ++attempt) {
    SparsePoly ell = SparsePoly::zero(ring);
    for (int v = 0; v < ring->nvars(); ++v)
      ell = ell + SparsePoly::variable(ring, v).scaled(
                      attempt == 0 ? F->one() : F->random_element(rng));
    if (ell.is_zero()) continue;
    std::vector<SparsePoly> aff;
    try {
      aff = dehomogenize(gens, ell);
    } catch (const FieldError&) {
      continue;
    }
    try {
      auto gb = buchberger(aff, ring->nvars() + 2);
      auto qb = quotient_basis(gb);
      if ((int)qb.size() != expected) continue;  // points at infinity of ell
      SparsePoly g = SparsePoly::zero(gb.ring);
      for (int v = 0; v < gb.ring->nvars(); ++v)
        g = g + SparsePoly::variable(gb.ring, v).scaled(F->random_element(rng));
      auto cp = char_poly(mult_matrix(gb, qb, g));
      auto dd = distinct_degree_split(cp);
      int total = 0;
      for (auto& [d, k] : dd) total += d * k;
      if (total != expected) continue;  // g failed to separate the points
      std::map<int, int> out;
      for (auto& [d, k] : dd) out[d] += k;
      return out;
    } catch (const FieldError& err) {
      notes.push_back(std::string("degree split attempt failed: ") + err.what());
    }
  }
  notes.push_back("residue degrees not certified after 8 attempts");
  return {};
}

// map a prime-field polynomial system into F_{p^k}
std::vector<SparsePoly> lift_to_extension(const std::vector<SparsePoly>& eqs,
                                          const FieldPtr& ext) {
  RingPtr src = eqs.at(0).ring();
  RingPtr dst = PolyRing::make(ext, src->vars);
  std::vector<SparsePoly> out;
  for (auto& e : eqs) {
    SparsePoly r(dst);
    for (auto& [mono, cf] : e.terms())
      r.add_term(mono, ext->from_int((long)cf.mod_coeffs()[0]));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

EigenspaceReport analyze_eigenspace(const VarietyModel& model, const ExactMatrix& g,
                                    const FieldElement& chi, std::uint64_t seed) {
  FieldPtr F = model.ring->field;
  int nv = model.ring->nvars();
  std::mt19937_64 rng(seed);
  EigenspaceReport rep;
  rep.eigenvalue = chi;

  ExactMatrix shifted = g - ExactMatrix::identity(F, nv).scaled(chi);
  ExactMatrix B = columns_matrix(F, shifted.kernel_basis());
  rep.ambient_dim = B.cols();
  if (rep.ambient_dim == 0) {
    rep.classification = "empty";
    return rep;
  }

  // solve the model's linear forms on the eigenspace
  ExactMatrix B2 = B;
  if (!model.linear.empty()) {
    ExactMatrix C(F, (int)model.linear.size(), B.cols());
    auto lin = restrict_to_span(model.linear, B, "u");
    for (int r = 0; r < (int)C.rows(); ++r)
      for (int c = 0; c < C.cols(); ++c) C.set(r, c, F->zero());
    for (int r = 0; r < (int)lin.size(); ++r)
      for (auto& [mono, cf] : lin[r].terms())
        for (int v = 0; v < (int)mono.size(); ++v)
          if (mono[v]) C.set(r, v, cf);
    ExactMatrix K = columns_matrix(F, C.kernel_basis());
    if (K.cols() == 0) {
      rep.cut_dim = 0;
      rep.classification = "empty";
      return rep;
    }
    B2 = B * K;
  }
  rep.cut_dim = B2.cols();

  std::vector<SparsePoly> higher = model.quadrics;
  for (auto& c : model.cubics) higher.push_back(c);
  auto rest = restrict_to_span(higher, B2);
  if (rest.empty()) {
    rep.classification = "linear(" + std::to_string(rep.cut_dim - 1) + ")";
    rep.notes.push_back("no equations survive: the whole eigenspace slice");
    return rep;
  }

  Census census;
  bool have_census = false;
  if (F->characteristic() != 0 && F->degree() == 1) {
    double total = (std::pow((double)F->characteristic(), rep.cut_dim) - 1) /
                   (double)(F->characteristic() - 1);
    if (total <= 2.5e8) {
      census = projective_census(rest, 4096);
      rep.rational_points = census.count;
      rep.sample = census.points;
      have_census = true;
    } else {
      rep.notes.push_back("rational census skipped: eigenspace too large");
    }
  }

  auto sat = saturate_irrelevant(rest, rep.cut_dim + 2);
  auto gb = buchberger(sat, rep.cut_dim + 2);
  for (auto& b : gb.basis)
    if (b.degree() == 0) {
      rep.classification = "empty";
      return rep;
    }
  rep.hilbert = gb.hilbert_poly();

  if (rep.hilbert.size() == 1) {
    rep.finite_count = small_int(rep.hilbert[0]);
    rep.classification = "finite(" + std::to_string(rep.finite_count) + ")";
    if (F->characteristic() != 0)
      rep.point_degrees =
          point_degree_split(sat, (int)rep.finite_count, rng, rep.notes);
    return rep;
  }
  if (rep.hilbert.size() != 2) {
    rep.classification = "component of dimension >= 2";
    return rep;
  }

  rep.curve_degree = (int)small_int(rep.hilbert[1]);
  long constant = small_int(rep.hilbert[0]);

  if (rep.curve_degree == 2) {
    // recover the plane of the conic from rational points
    rep.classification = "curve(2)";
    if (have_census && census.points.size() >= 5) {
      std::vector<std::vector<FieldElement>> pts;
      for (auto& p : census.points) {
        std::vector<FieldElement> v;
        for (auto c : p) v.push_back(F->from_int((long)c));
        pts.push_back(std::move(v));
      }
      int best = -1;
      std::vector<int> plane_idx;
      int m = std::min((int)pts.size(), 30);
      for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b)
          for (int c = b + 1; c < m; ++c) {
            ExactMatrix span = columns_matrix(F, {pts[a], pts[b], pts[c]});
            if (span.rank() != 3) continue;
            int hits = 0;
            for (auto& q : pts) {
              ExactMatrix ext = columns_matrix(F, {pts[a], pts[b], pts[c], q});
              if (ext.rank() == 3) ++hits;
            }
            if (hits > best) {
              best = hits;
              plane_idx = {a, b, c};
            }
          }
      if (best >= 5) {
        rep.span_dim = 2;
        ExactMatrix S = columns_matrix(
            F, {pts[plane_idx[0]], pts[plane_idx[1]], pts[plane_idx[2]]});
        auto in_plane = restrict_to_span(rest, S, "s");
        rep.span_census[1] = projective_census(in_plane, 0).count;
        FieldPtr ext2 = Field::extension(F->characteristic(), 2);
        rep.span_census[2] = projective_census_generic(lift_to_extension(in_plane, ext2));

        // saturate away the plane to isolate the finite part
        ExactMatrix ann = columns_matrix(F, S.transpose().kernel_basis());
        RingPtr tring = rest[0].ring();
        SparsePoly ell = SparsePoly::zero(tring);
        for (int v = 0; v < rep.cut_dim; ++v)
          ell = ell + SparsePoly::variable(tring, v).scaled(ann.at(v, 0));
        auto away = saturate_irrelevant(saturate_linear_form(sat, ell, rep.cut_dim + 2),
                                        rep.cut_dim + 2);
        auto gba = buchberger(away, rep.cut_dim + 2);
        auto ha = gba.hilbert_poly();
        bool unit = false;
        for (auto& b : gba.basis) unit = unit || b.degree() == 0;
        if (!unit && ha.size() == 1) {
          rep.finite_count = small_int(ha[0]);
          rep.classification = "curve(2)+finite(" + std::to_string(rep.finite_count) + ")";
          if (F->characteristic() != 0)
            rep.point_degrees =
                point_degree_split(away, (int)rep.finite_count, rng, rep.notes);
        } else if (unit) {
          rep.classification = "curve(2)";
        } else {
          rep.notes.push_back("residual component off the plane is not finite");
        }
      } else {
        rep.notes.push_back("no plane through 5 of the rational points");
      }
    } else {
      rep.notes.push_back("too few rational points to recover the conic plane");
    }
    return rep;
  }

  // higher-degree curve: span of the rational points, Hasse-window note
  if (constant == 0) {
    rep.classification = "curve(" + std::to_string(rep.curve_degree) + ")";
  } else {
    rep.finite_count = constant;
    rep.classification = "curve(" + std::to_string(rep.curve_degree) + ")+finite(" +
                         std::to_string(rep.finite_count) + ")";
    rep.notes.push_back(
        "finite part read from the constant term assuming a chi(O)=0 curve");
  }
  if (have_census) {
    std::vector<std::vector<FieldElement>> pts;
    for (auto& p : census.points) {
      std::vector<FieldElement> v;
      for (auto c : p) v.push_back(F->from_int((long)c));
      pts.push_back(std::move(v));
    }
    if (!pts.empty()) rep.span_dim = columns_matrix(F, pts).rank() - 1;
    double p = (double)F->characteristic();
    double window = 2 * rep.curve_degree * std::sqrt(p);  // crude genus bound
    if (std::abs((double)census.count - (p + 1)) <= window + rep.finite_count)
      rep.notes.push_back("rational count within the Hasse window of p+1");
    else
      rep.notes.push_back("rational count outside the Hasse window of p+1");
  }
  return rep;
}

InvolutionFixedLocus fixed_locus_involution(const VarietyModel& model,
                                            const ExactMatrix& sigma,
                                            std::uint64_t seed) {
  FieldPtr F = model.ring->field;
  int nv = model.ring->nvars();
  if (!(sigma * sigma == ExactMatrix::identity(F, nv)))
    throw NotInvolution("the matrix does not square to the identity");
  InvolutionFixedLocus out;
  out.plus = analyze_eigenspace(model, sigma, F->one(), seed);
  out.minus = analyze_eigenspace(model, sigma, -F->one(), seed + 1);
  size_t len = std::max(out.plus.hilbert.size(), out.minus.hilbert.size());
  out.total_hilbert.assign(len, 0);
  for (size_t i = 0; i < out.plus.hilbert.size(); ++i)
    out.total_hilbert[i] += out.plus.hilbert[i];
  for (size_t i = 0; i < out.minus.hilbert.size(); ++i)
    out.total_hilbert[i] += out.minus.hilbert[i];
  return out;
}

InvarianceCertificate ideal_invariance(const std::vector<SparsePoly>& polys,
                                       const ExactMatrix& g) {
  if (polys.empty()) throw MixedDegrees("no generators");
  RingPtr ring = polys[0].ring();
  FieldPtr F = ring->field;
  int deg = polys[0].degree();
  for (auto& p : polys)
    if (p.is_zero() || !p.is_homogeneous() || p.degree() != deg)
      throw MixedDegrees("generators must be homogeneous of one degree");
  if (g.rows() != ring->nvars() || g.cols() != ring->nvars())
    throw BadRange("group element does not match the coordinate count");

  std::vector<SparsePoly> images;
  for (int i = 0; i < ring->nvars(); ++i) {
    SparsePoly im = SparsePoly::zero(ring);
    for (int j = 0; j < ring->nvars(); ++j)
      im = im + SparsePoly::variable(ring, j).scaled(g.at(i, j));
    images.push_back(std::move(im));
  }
  std::vector<SparsePoly> moved;
  for (auto& p : polys) moved.push_back(p.substitute(images));

  std::map<Mono, int> mono_index;
  for (auto& p : polys)
    for (auto& [m, c] : p.terms())
      if (!mono_index.count(m)) mono_index[m] = (int)mono_index.size();
  for (auto& p : moved)
    for (auto& [m, c] : p.terms())
      if (!mono_index.count(m)) mono_index[m] = (int)mono_index.size();

  ExactMatrix M(F, (int)mono_index.size(), (int)polys.size());
  for (int r = 0; r < M.rows(); ++r)
    for (int c = 0; c < M.cols(); ++c) M.set(r, c, F->zero());
  for (int c = 0; c < (int)polys.size(); ++c)
    for (auto& [m, cf] : polys[c].terms()) M.set(mono_index[m], c, cf);

  InvarianceCertificate cert;
  cert.change = ExactMatrix(F, (int)polys.size(), (int)polys.size());
  for (int r = 0; r < (int)moved.size(); ++r) {
    std::vector<FieldElement> b((size_t)mono_index.size(), F->zero());
    for (auto& [m, cf] : moved[r].terms()) b[mono_index[m]] = cf;
    auto x = M.solve(b);
    if (!x) {
      cert.invariant = false;
      cert.change = ExactMatrix();
      return cert;
    }
    for (int c = 0; c < (int)polys.size(); ++c) cert.change.set(r, c, (*x)[c]);
  }
  cert.invariant = true;
  return cert;
}

}  // namespace gq
