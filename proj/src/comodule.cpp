#include "hopfpi/comodule.hpp"

#include <atomic>
#include <deque>
#include <stdexcept>
#include <thread>

#include "hopfpi/tensor.hpp"

namespace hopfpi {

namespace {

std::string nm(const PiComodule& m, int a) { return m.over->group->name(a); }

std::string col_str(const Matrix& v) {
  std::string s = "[";
  for (int i = 0; i < v.rows(); ++i) {
    if (i) s += ", ";
    s += v.at(i, 0).str();
  }
  return s + "]";
}

}  // namespace

int PiComodule::total_dim() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

bool PiComodule::operator==(const PiComodule& other) const {
  return over && other.over && *over == *other.over && dims == other.dims &&
         theta == other.theta;
}

Report shape_report(const PiComodule& m) {
  Report r("comodule shapes");
  const PiCoalgebra& c = *m.over;
  const int n = c.order();
  if (static_cast<int>(m.dims.size()) != n || static_cast<int>(m.theta.size()) != n * n) {
    r.add("shape_family", false, "family size does not match group order");
    return r;
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const Matrix& t = m.Theta(a, b);
      const int rows = m.dims[a] * c.dims[b], cols = m.dims[c.group->mul(a, b)];
      r.add(check_label("shape_theta", {nm(m, a), nm(m, b)}),
            t.rows() == rows && t.cols() == cols,
            std::to_string(t.rows()) + "x" + std::to_string(t.cols()) + ", expected " +
                std::to_string(rows) + "x" + std::to_string(cols));
    }
  }
  return r;
}

Report verify_comodule(const PiComodule& m) {
  Report shapes = shape_report(m);
  if (!shapes.ok()) return shapes;

  Report r("comodule axioms");
  const PiCoalgebra& c = *m.over;
  const int n = c.order();
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int g = 0; g < n; ++g) {
        // (theta_{a,b} (x) I_g) theta_{ab,g} = (I_a (x) Delta_{b,g}) theta_{a,bg}
        const Matrix lhs =
            mul_kron_right_id(m.Theta(a, b), c.dims[g], m.Theta(c.group->mul(a, b), g));
        const Matrix rhs =
            mul_kron_left_id(m.dims[a], c.Delta(b, g), m.Theta(a, c.group->mul(b, g)));
        r.add(check_label("comodule_coassoc", {nm(m, a), nm(m, b), nm(m, g)}), lhs == rhs);
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    const Matrix tri = mul_kron_left_id(m.dims[a], c.counit, m.Theta(a, 0));
    r.add("comodule_counit(" + nm(m, a) + ")", tri.is_identity());
  }
  return r;
}

Report verify_hopf_comodule(const HopfPiComodule& hm) {
  Report r = verify_comodule(hm.comodule);
  if (!r.ok()) return r;

  const PiComodule& m = hm.comodule;
  const HopfPiCoalgebra& h = *hm.hopf;
  const int n = m.order();
  if (!(*m.over == h.coalg)) {
    r.add("base", false, "comodule base coalgebra differs from the hopf family");
    return r;
  }
  if (static_cast<int>(hm.actions.size()) != n) {
    r.add("shape_family", false, "action family size does not match group order");
    return r;
  }
  const FieldSpec f = m.field();
  for (int a = 0; a < n; ++a) {
    const int md = m.dims[a], hd = h.dim(a);
    const Matrix& act = hm.actions[a];
    if (act.rows() != md || act.cols() != md * hd) {
      r.add("shape_action(" + nm(m, a) + ")", false,
            std::to_string(act.rows()) + "x" + std::to_string(act.cols()));
      return r;
    }
    r.add("module_assoc(" + nm(m, a) + ")",
          act * kron(act, Matrix::identity(f, hd)) ==
              act * kron(Matrix::identity(f, md), h.mul[a]));
    r.add("module_unit(" + nm(m, a) + ")",
          (act * kron(Matrix::identity(f, md), h.unit[a])).is_identity());
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const int ab = m.over->group->mul(a, b);
      // theta_{a,b} rho_{ab} = (rho_a (x) mul_b)(I (x) flip (x) I)
      //                        (theta_{a,b} (x) Delta_{a,b})
      const Matrix lhs = m.Theta(a, b) * hm.actions[ab];
      const PairwiseBilinear pb(hm.actions[a], m.dims[a], h.dim(a), h.mul[b], h.dim(b),
                                h.dim(b));
      bool pass = true;
      std::string where;
      for (int i = 0; i < m.dims[ab] && pass; ++i) {
        const Matrix ti = m.Theta(a, b).column_at(i);
        for (int j = 0; j < h.dim(ab); ++j) {
          const Matrix rhs = pb.apply(ti, h.coalg.Delta(a, b).column_at(j));
          if (!(lhs.column_at(i * h.dim(ab) + j) == rhs)) {
            pass = false;
            where = "basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
            break;
          }
        }
      }
      r.add(check_label("compat", {nm(m, a), nm(m, b)}), pass, where);
    }
  }
  return r;
}

PiComodule regular_comodule(CoalgebraPtr c) {
  PiComodule m;
  m.over = std::move(c);
  m.dims = m.over->dims;
  m.theta = m.over->delta;
  return m;
}

HopfPiComodule regular_hopf_comodule(HopfPtr h) {
  HopfPiComodule hm;
  hm.hopf = h;
  hm.comodule = regular_comodule(CoalgebraPtr(h, &h->coalg));
  hm.actions = h->mul;
  return hm;
}

CoalgebraPtr identity_slice(const PiCoalgebra& c) {
  auto slice = std::make_shared<PiCoalgebra>();
  slice->group = std::make_shared<GroupTable>(GroupTable::trivial());
  slice->field = c.field;
  slice->dims = {c.dims[0]};
  slice->delta = {c.Delta(0, 0)};
  slice->counit = c.counit;
  return slice;
}

PiComodule line_comodule(CoalgebraPtr slice, const Matrix& g) {
  if (slice->order() != 1) throw std::invalid_argument("line comodules live over a trivial-group slice");
  if (g.rows() != slice->dims[0] || g.cols() != 1) {
    throw std::invalid_argument("group-like column has the wrong shape");
  }
  PiComodule m;
  m.over = std::move(slice);
  m.dims = {1};
  m.theta = {g};
  return m;
}

PiComodule direct_sum(const PiComodule& m, const PiComodule& n, SumBlocks* blocks) {
  if (!(*m.over == *n.over)) {
    throw std::invalid_argument("direct sum requires the same base coalgebra");
  }
  const PiCoalgebra& c = *m.over;
  const FieldSpec f = c.field;
  const int ord = c.order();

  SumBlocks local;
  SumBlocks& bl = blocks ? *blocks : local;
  bl = SumBlocks{};
  for (int a = 0; a < ord; ++a) {
    const int md = m.dims[a], nd = n.dims[a];
    Matrix il(f, md + nd, md), ir(f, md + nd, nd);
    Matrix pl(f, md, md + nd), pr(f, nd, md + nd);
    for (int i = 0; i < md; ++i) {
      il.set_int(i, i, 1);
      pl.set_int(i, i, 1);
    }
    for (int i = 0; i < nd; ++i) {
      ir.set_int(md + i, i, 1);
      pr.set_int(i, md + i, 1);
    }
    bl.into_left.push_back(std::move(il));
    bl.into_right.push_back(std::move(ir));
    bl.onto_left.push_back(std::move(pl));
    bl.onto_right.push_back(std::move(pr));
  }

  PiComodule s;
  s.over = m.over;
  s.dims.resize(ord);
  for (int a = 0; a < ord; ++a) s.dims[a] = m.dims[a] + n.dims[a];
  s.theta.reserve(ord * ord);
  for (int a = 0; a < ord; ++a) {
    for (int b = 0; b < ord; ++b) {
      const int ab = c.group->mul(a, b);
      Matrix t = mul_kron_right_id(bl.into_left[a], c.dims[b], m.Theta(a, b)) * bl.onto_left[ab] +
                 mul_kron_right_id(bl.into_right[a], c.dims[b], n.Theta(a, b)) * bl.onto_right[ab];
      s.theta.push_back(std::move(t));
    }
  }
  return s;
}

Report check_intertwining(const PiComodule& m, const PiComodule& n, const MatrixFamily& f) {
  Report r("intertwining");
  if (!(*m.over == *n.over)) {
    r.add("base", false, "different base coalgebras");
    return r;
  }
  const PiCoalgebra& c = *m.over;
  const int ord = c.order();
  if (static_cast<int>(f.size()) != ord) {
    r.add("shape_family", false, "family size does not match group order");
    return r;
  }
  for (int a = 0; a < ord; ++a) {
    if (f[a].rows() != n.dims[a] || f[a].cols() != m.dims[a]) {
      r.add("shape_F(" + nm(m, a) + ")", false,
            std::to_string(f[a].rows()) + "x" + std::to_string(f[a].cols()));
      return r;
    }
  }
  for (int a = 0; a < ord; ++a) {
    for (int b = 0; b < ord; ++b) {
      const int ab = c.group->mul(a, b);
      r.add(check_label("intertwines", {nm(m, a), nm(m, b)}),
            n.Theta(a, b) * f[ab] == mul_kron_right_id(f[a], c.dims[b], m.Theta(a, b)));
    }
  }
  return r;
}

Report check_equivalence_witness(const PiComodule& m, const PiComodule& n,
                                 const MatrixFamily& f) {
  Report r = check_intertwining(m, n, f);
  if (!r.ok()) return r;
  for (int a = 0; a < m.order(); ++a) {
    const bool square = f[a].rows() == f[a].cols();
    r.add("invertible(" + nm(m, a) + ")", square && inverse(f[a]).has_value());
  }
  return r;
}

Matrix IntertwinerSpace::component(const Matrix& flat, int a) const {
  Matrix f(flat.field(), rows[a], cols[a]);
  for (int i = 0; i < rows[a]; ++i) {
    for (int j = 0; j < cols[a]; ++j) f.set(i, j, flat.at(offset[a] + i * cols[a] + j, 0));
  }
  return f;
}

Matrix IntertwinerSpace::flatten(const MatrixFamily& f) const {
  FieldSpec field = f.empty() ? FieldSpec::rationals() : f[0].field();
  Matrix flat(field, total, 1);
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (int i = 0; i < rows[a]; ++i) {
      for (int j = 0; j < cols[a]; ++j) flat.set(offset[a] + i * cols[a] + j, 0, f[a].at(i, j));
    }
  }
  return flat;
}

IntertwinerSpace find_intertwiner_space(const PiComodule& m, const PiComodule& n) {
  if (!(*m.over == *n.over)) {
    throw std::invalid_argument("intertwiners require the same base coalgebra");
  }
  const PiCoalgebra& c = *m.over;
  const FieldSpec field = c.field;
  const int ord = c.order();

  IntertwinerSpace sp;
  sp.rows.resize(ord);
  sp.cols.resize(ord);
  sp.offset.resize(ord);
  for (int a = 0; a < ord; ++a) {
    sp.rows[a] = n.dims[a];
    sp.cols[a] = m.dims[a];
    sp.offset[a] = sp.total;
    sp.total += n.dims[a] * m.dims[a];
  }

  int total_rows = 0;
  for (int a = 0; a < ord; ++a) {
    for (int b = 0; b < ord; ++b) {
      total_rows += n.dims[a] * c.dims[b] * m.dims[c.group->mul(a, b)];
    }
  }

  Matrix eq(field, total_rows, sp.total);
  int base = 0;
  for (int a = 0; a < ord; ++a) {
    for (int b = 0; b < ord; ++b) {
      const int ab = c.group->mul(a, b);
      const Matrix& tn = n.Theta(a, b);
      const Matrix& tm = m.Theta(a, b);
      const int cb = c.dims[b];
      // (theta^N F_{ab})[t, jc] - ((F_a (x) I) theta^M)[t, jc] = 0
      for (int t = 0; t < n.dims[a] * cb; ++t) {
        for (int jc = 0; jc < m.dims[ab]; ++jc) {
          const int row = base + t * m.dims[ab] + jc;
          for (int rr = 0; rr < n.dims[ab]; ++rr) {
            const Scalar v = tn.at(t, rr);
            if (!v.is_zero()) eq.add_scaled_entry(row, sp.offset[ab] + rr * m.dims[ab] + jc, v);
          }
          const int i = t / cb, k = t % cb;
          for (int u = 0; u < m.dims[a]; ++u) {
            const Scalar v = tm.at(u * cb + k, jc);
            if (!v.is_zero())
              eq.add_scaled_entry(row, sp.offset[a] + i * m.dims[a] + u, v.negated());
          }
        }
      }
      base += n.dims[a] * cb * m.dims[ab];
    }
  }
  sp.space = kernel_basis(eq);
  return sp;
}

std::vector<CoactionOperator> coaction_operators(const PiComodule& m) {
  const PiCoalgebra& c = *m.over;
  const int ord = c.order();
  std::vector<CoactionOperator> ops;
  for (int a = 0; a < ord; ++a) {
    for (int b = 0; b < ord; ++b) {
      const int cb = c.dims[b];
      for (int j = 0; j < cb; ++j) {
        std::vector<int> idx(m.dims[a]);
        for (int i = 0; i < m.dims[a]; ++i) idx[i] = i * cb + j;
        ops.push_back({a, b, j, m.Theta(a, b).select_rows(idx)});
      }
    }
  }
  return ops;
}

bool family_is_zero(const SubcomoduleFamily& f) {
  for (const Subspace& s : f)
    if (s.dim() != 0) return false;
  return true;
}

bool family_is_full(const PiComodule& m, const SubcomoduleFamily& f) {
  for (int a = 0; a < m.order(); ++a)
    if (f[a].dim() != m.dims[a]) return false;
  return true;
}

std::vector<int> family_dims(const SubcomoduleFamily& f) {
  std::vector<int> d;
  d.reserve(f.size());
  for (const Subspace& s : f) d.push_back(s.dim());
  return d;
}

namespace {

struct ClosureEngine {
  const PiComodule& m;
  std::vector<CoactionOperator> ops;
  std::vector<std::vector<int>> by_source;  // component -> operator indices

  explicit ClosureEngine(const PiComodule& mod) : m(mod), ops(coaction_operators(mod)) {
    by_source.resize(m.order());
    for (std::size_t i = 0; i < ops.size(); ++i) {
      by_source[m.over->group->mul(ops[i].a, ops[i].b)].push_back(static_cast<int>(i));
    }
  }

  SubcomoduleFamily close(int comp, const Matrix& seed) const {
    std::vector<SpanBuilder> span;
    span.reserve(m.order());
    for (int a = 0; a < m.order(); ++a) span.emplace_back(m.field(), m.dims[a]);
    std::deque<std::pair<int, Matrix>> work;
    if (span[comp].insert(seed)) work.emplace_back(comp, seed);
    while (!work.empty()) {
      auto [c, v] = std::move(work.front());
      work.pop_front();
      for (int oi : by_source[c]) {
        Matrix w = ops[oi].op * v;
        if (span[ops[oi].a].insert(w)) work.emplace_back(ops[oi].a, std::move(w));
      }
    }
    SubcomoduleFamily out;
    out.reserve(m.order());
    for (const SpanBuilder& sb : span) out.push_back(sb.snapshot());
    return out;
  }
};

/// Deterministic seed list for the simplicity scan. In the exhaustive
/// regime this enumerates one representative per projective point
/// (first nonzero coordinate normalized to 1), walking components in group
/// order and coordinates lexicographically.
struct SeedPlan {
  bool exhaustive = false;
  std::vector<std::pair<int, Matrix>> seeds;  // (component, vector)
};

SeedPlan plan_seeds(const PiComodule& m, std::int64_t cap) {
  SeedPlan plan;
  const FieldSpec f = m.field();

  bool all_lines = true;
  for (int d : m.dims)
    if (d > 1) all_lines = false;

  __int128 total = 0;
  if (f.is_prime()) {
    for (int d : m.dims) {
      __int128 cnt = 0, pw = 1;
      for (int k = 0; k < d; ++k) {
        cnt += pw;
        pw *= f.p;
        if (cnt > cap) break;
      }
      total += cnt;
      if (total > cap) break;
    }
  }

  if (all_lines || (f.is_prime() && total <= cap)) {
    plan.exhaustive = true;
    for (int comp = 0; comp < m.order(); ++comp) {
      const int d = m.dims[comp];
      if (d == 0) continue;
      if (all_lines && !f.is_prime()) {
        plan.seeds.emplace_back(comp, Matrix::from_rows(f, {{1}}));
        continue;
      }
      // Leading-one representatives: leading position ascending, then the
      // trailing coordinates as base-p digits, most significant first.
      for (int lead = 0; lead < d; ++lead) {
        std::int64_t block = 1;
        for (int k = lead + 1; k < d; ++k) block *= f.p;
        for (std::int64_t idx = 0; idx < block; ++idx) {
          Matrix v(f, d, 1);
          v.set_int(lead, 0, 1);
          std::int64_t rem = idx, pw = block;
          for (int pos = lead + 1; pos < d; ++pos) {
            pw /= f.p;
            v.set_int(pos, 0, rem / pw);
            rem %= pw;
          }
          plan.seeds.emplace_back(comp, std::move(v));
        }
      }
    }
    return plan;
  }

  // Heuristic regime: basis vectors and pairwise sums per component.
  for (int comp = 0; comp < m.order(); ++comp) {
    const int d = m.dims[comp];
    for (int i = 0; i < d; ++i) {
      Matrix v(f, d, 1);
      v.set_int(i, 0, 1);
      plan.seeds.emplace_back(comp, std::move(v));
    }
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        Matrix v(f, d, 1);
        v.set_int(i, 0, 1);
        v.set_int(j, 0, 1);
        plan.seeds.emplace_back(comp, std::move(v));
      }
    }
  }
  return plan;
}

}  // namespace

SubcomoduleFamily subcomodule_closure(const PiComodule& m, int comp, const Matrix& seed) {
  if (comp < 0 || comp >= m.order()) throw std::invalid_argument("seed component out of range");
  if (seed.rows() != m.dims[comp] || seed.cols() != 1) {
    throw std::invalid_argument("seed vector does not fit component " +
                                m.over->group->name(comp));
  }
  return ClosureEngine(m).close(comp, seed);
}

Report check_subcomodule(const PiComodule& m, const SubcomoduleFamily& f) {
  Report r("subcomodule closure");
  if (static_cast<int>(f.size()) != m.order()) {
    r.add("shape_family", false, "family size does not match group order");
    return r;
  }
  for (int a = 0; a < m.order(); ++a) {
    if (f[a].ambient() != m.dims[a]) {
      r.add("shape_space(" + nm(m, a) + ")", false, "ambient dimension mismatch");
      return r;
    }
  }
  const PiCoalgebra& c = *m.over;
  for (int a = 0; a < m.order(); ++a) {
    for (int b = 0; b < m.order(); ++b) {
      const int ab = c.group->mul(a, b), cb = c.dims[b];
      bool pass = true;
      std::string where;
      for (int j = 0; j < cb && pass; ++j) {
        std::vector<int> idx(m.dims[a]);
        for (int i = 0; i < m.dims[a]; ++i) idx[i] = i * cb + j;
        const Matrix img = m.Theta(a, b).select_rows(idx) * f[ab].basis_columns();
        if (!f[a].contains(img)) {
          pass = false;
          where = "functional j=" + std::to_string(j);
        }
      }
      r.add(check_label("closed", {nm(m, a), nm(m, b)}), pass, where);
    }
  }
  return r;
}

std::string SimplicityVerdict::describe(const GroupTable& pi) const {
  if (simple) {
    std::string s = "simple (" + method + ", " + std::to_string(seeds_tested) + " seeds";
    if (!exact) s += "; not exhaustive over this field";
    return s + ")";
  }
  std::string s = "not simple: seed " + col_str(witness_seed) + " in component " +
                  pi.name(witness_component) + " closes to a proper family of dims (";
  std::vector<int> d = family_dims(witness);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

SimplicityVerdict is_simple(const PiComodule& m, const SimplicityOptions& opt) {
  if (m.total_dim() == 0) throw std::invalid_argument("simplicity of the zero comodule is undefined");

  const ClosureEngine engine(m);
  const SeedPlan plan = plan_seeds(m, opt.seed_cap);
  const auto total = static_cast<std::int64_t>(plan.seeds.size());

  // First failing seed in plan order; closures are schedule-independent,
  // so the minimum over failing indices is as well.
  std::atomic<std::int64_t> first_fail{total};
  const int nthreads = std::max(1, std::min<int>(opt.threads, 64));
  auto worker = [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t i = lo; i < hi; ++i) {
      if (i >= first_fail.load(std::memory_order_relaxed)) break;
      const auto& [comp, seed] = plan.seeds[static_cast<std::size_t>(i)];
      if (!family_is_full(m, engine.close(comp, seed))) {
        std::int64_t cur = first_fail.load();
        while (i < cur && !first_fail.compare_exchange_weak(cur, i)) {
        }
        break;
      }
    }
  };
  if (nthreads == 1 || total < 2) {
    worker(0, total);
  } else {
    const std::int64_t chunk = (total + nthreads - 1) / nthreads;
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) {
      const std::int64_t lo = t * chunk;
      if (lo >= total) break;
      pool.emplace_back(worker, lo, std::min(total, lo + chunk));
    }
    for (auto& th : pool) th.join();
  }

  SimplicityVerdict v;
  v.method = plan.exhaustive ? "exhaustive" : "heuristic";
  v.seeds_tested = total;
  const std::int64_t fail = first_fail.load();
  if (fail < total) {
    const auto& [comp, seed] = plan.seeds[static_cast<std::size_t>(fail)];
    v.simple = false;
    v.exact = true;  // a concrete proper subcomodule is exact evidence
    v.witness_component = comp;
    v.witness_seed = seed;
    v.witness = engine.close(comp, seed);
  } else {
    v.simple = true;
    v.exact = plan.exhaustive;
  }
  return v;
}

}  // namespace hopfpi
