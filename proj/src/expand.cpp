#include "hahnroot/expand.hpp"

#include <algorithm>
#include <stdexcept>

#include "hahnroot/ore.hpp"

namespace hahnroot {

std::string to_string(NodeStatus s) {
  switch (s) {
    case NodeStatus::live:
      return "live";
    case NodeStatus::exact_root:
      return "exact_root";
    case NodeStatus::accumulating:
      return "accumulating";
    case NodeStatus::budget_exhausted:
      return "budget_exhausted";
  }
  return "unknown";
}

HahnSeries BranchNode::prefix() const {
  if (unexpanded_multiplicity == 0 || !next_exponent_bound) return HahnSeries(w.terms());
  return HahnSeries(w.terms(), *next_exponent_bound);
}

namespace {

/// Chain of fields F_0 -> F_1 -> ... with the embeddings actually used.
class Tower {
 public:
  explicit Tower(FieldPtr base) { fields_.push_back(std::move(base)); }

  const FieldPtr& top() const { return fields_.back(); }

  void extend(const RootSet& rs) {
    if (rs.field->same_as(*top())) return;
    fields_.push_back(rs.field);
    up_.push_back(rs.embedding);
  }

  /// Embedding from the level holding `ctx` to the top.
  Embedding to_top(const FieldPtr& ctx) const {
    std::size_t k = 0;
    while (k < fields_.size() && !fields_[k]->same_as(*ctx)) ++k;
    if (k == fields_.size()) throw std::logic_error("field is not part of the tower");
    Embedding e = Embedding::identity(fields_[k]);
    for (; k + 1 < fields_.size(); ++k) e = e.then(up_[k]);
    return e;
  }

  FF lift(const FF& x) const { return x.ctx()->same_as(*top()) ? x : to_top(x.ctx())(x); }
  TermPoly lift(const TermPoly& x) const { return x.ctx()->same_as(*top()) ? x : x.mapped(to_top(x.ctx())); }

 private:
  std::vector<FieldPtr> fields_;
  std::vector<Embedding> up_;
};

/// Taylor coefficients c_i = D^(i)F(w) of the normalized polynomial.
struct Work {
  TermPoly w;
  std::vector<TermPoly> c;
};

struct Point {
  unsigned i;
  Exponent v;
};

struct Edge {
  unsigned a;
  unsigned b;
  Exponent r;
};

struct Child {
  Step step;
  unsigned multiplicity;
  Work work;
};

class Engine {
 public:
  Engine(const Poly& f, const FieldPtr& field) : f_(f), tower_(field) {
    if (f.degree() < 1) throw std::invalid_argument("expansion needs a polynomial of degree at least 1");
    if (f.ctx()->k() != 1 && !f.ctx()->same_as(*field)) {
      throw std::invalid_argument("coefficients must lie in F_p(t)");
    }
    // F = f * D / a_n has coefficients in F_q[t]; D clears the denominators
    // of f / a_n.
    const Poly g = f.monic();
    FFPoly D = FFPoly::constant(FF::one(f.ctx()));
    for (const auto& c : g.coeffs()) {
      FFPoly d = dense_in_t(c.den());
      D = (D * d) / gcd(D, d);
    }
    const RatFun Dr(from_dense_in_t(D), TermPoly::constant(FF::one(f.ctx())));
    const Embedding into = Embedding::between(f.ctx(), field);
    for (const auto& c : g.coeffs()) {
      const RatFun x = c * Dr;
      if (!(x.den().is_monomial() && x.den().lowest().exp == 0)) throw std::logic_error("denominator not cleared");
      F_.push_back(x.num().mapped(into));
    }
    scale_ = *leading_term(f.leading() / Dr);
    scale_.c = into(scale_.c);
    additive_ = is_additive(f);
  }

  Tower& tower() { return tower_; }
  bool additive() const { return additive_; }
  unsigned degree() const { return static_cast<unsigned>(F_.size() - 1); }

  Work at(const TermPoly& w) const {
    Work out{w, {}};
    const auto n = F_.size();
    const auto p = tower_.top()->p();
    std::vector<TermPoly> F;
    for (const auto& c : F_) F.push_back(tower_.lift(c));
    std::vector<TermPoly> powers{TermPoly::constant(FF::one(w.ctx()))};
    for (std::size_t k = 1; k < n; ++k) powers.push_back(powers.back() * w);
    for (std::size_t i = 0; i < n; ++i) {
      TermPoly ci(w.ctx());
      for (std::size_t j = i; j < n; ++j) {
        const auto b = binomial_mod(mpz_class(static_cast<unsigned long>(j)), mpz_class(static_cast<unsigned long>(i)), p);
        if (b != 0 && !F[j].is_zero()) ci += (F[j] * powers[j - i]).scaled(FF(w.ctx(), b));
      }
      out.c.push_back(std::move(ci));
    }
    return out;
  }

  void lift(Work& x) const {
    x.w = tower_.lift(x.w);
    for (auto& c : x.c) c = tower_.lift(c);
  }

  /// c'_i = sum_j C(j, i) c_j delta^(j-i) with delta = zeta t^r.
  Work shifted(const Work& x, const FF& zeta, const Exponent& r) const {
    Work out{x.w + TermPoly::monomial(zeta, r), {}};
    const auto n = x.c.size();
    const auto p = zeta.ctx()->p();
    for (std::size_t i = 0; i < n; ++i) {
      TermPoly ci(zeta.ctx());
      FF zpow = FF::one(zeta.ctx());
      for (std::size_t j = i; j < n; ++j) {
        const auto b = binomial_mod(mpz_class(static_cast<unsigned long>(j)), mpz_class(static_cast<unsigned long>(i)), p);
        if (b != 0 && !x.c[j].is_zero()) {
          ci += x.c[j].times_monomial(zpow * FF(zeta.ctx(), b), Exponent(static_cast<long>(j - i)) * r);
        }
        zpow *= zeta;
      }
      out.c.push_back(std::move(ci));
    }
    return out;
  }

  FF scale() const { return tower_.lift(scale_.c); }

  /// Residual, lines and the multiplicity of w as a root, in f's
  /// normalization.
  void describe(const Work& x, BranchNode& node) const {
    node.w = HahnSeries(x.w);
    node.lines.clear();
    const FF s = scale();
    for (std::size_t i = 1; i < x.c.size(); ++i) {
      if (x.c[i].is_zero()) continue;
      node.lines.push_back({static_cast<unsigned>(i), x.c[i].valuation() + scale_.v, x.c[i].lowest().coeff * s});
    }
    if (x.c[0].is_zero()) {
      node.residual_valuation.reset();
      unsigned mu0 = 0;
      while (x.c[mu0].is_zero()) ++mu0;
      node.root_multiplicity = mu0;
      node.status = NodeStatus::exact_root;
    } else {
      node.residual_valuation = x.c[0].valuation() + scale_.v;
    }
  }

  /// Lower hull edges of (i, v(c_i)) from the first nonzero c_i, keeping
  /// those with r > last_r.
  static std::vector<Edge> edges(const Work& x, const std::optional<Exponent>& last_r) {
    std::vector<Point> hull;
    for (unsigned i = 0; i < x.c.size(); ++i) {
      if (x.c[i].is_zero()) continue;
      Point pt{i, x.c[i].valuation()};
      while (hull.size() >= 2) {
        const Point& o = hull[hull.size() - 2];
        const Point& a = hull.back();
        const Exponent cross = Exponent(static_cast<long>(a.i - o.i)) * (pt.v - o.v) - (a.v - o.v) * Exponent(static_cast<long>(pt.i - o.i));
        if (cross > 0) break;
        hull.pop_back();
      }
      hull.push_back(pt);
    }
    std::vector<Edge> out;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
      Exponent r = -(hull[k + 1].v - hull[k].v) / Exponent(static_cast<long>(hull[k + 1].i - hull[k].i));
      r.canonicalize();
      if (last_r && r <= *last_r) continue;
      out.push_back({hull[k].i, hull[k + 1].i, r});
    }
    return out;
  }

  /// Children for every kept edge; extends the tower as needed and lifts x.
  std::vector<Child> children(Work& x, const std::optional<Exponent>& last_r) {
    std::vector<Child> out;
    for (const auto& e : edges(x, last_r)) {
      lift(x);
      const Exponent base = x.c[e.a].valuation();
      std::vector<FF> coeffs;
      for (unsigned i = e.a; i <= e.b; ++i) {
        const bool on_edge = !x.c[i].is_zero() && x.c[i].valuation() == base - Exponent(static_cast<long>(i - e.a)) * e.r;
        coeffs.push_back(on_edge ? x.c[i].lowest().coeff : FF::zero(tower_.top()));
      }
      const RootSet rs = poly_roots(FFPoly(tower_.top(), std::move(coeffs)));
      tower_.extend(rs);
      lift(x);
      for (const auto& root : rs.roots) {
        Work next = shifted(x, root.value, e.r);
        Step st{e.r, root.value, e.a, e.b, 0};
        if (!next.c[0].is_zero()) {
          const Exponent v_new = next.c[0].valuation();
          for (unsigned i = 1; i < x.c.size(); ++i) {
            if (!x.c[i].is_zero() && x.c[i].valuation() + Exponent(static_cast<long>(i)) * e.r == v_new) {
              st.value_line = i;
              break;
            }
          }
        }
        out.push_back({st, root.multiplicity, std::move(next)});
      }
    }
    return out;
  }

  void grow(BranchNode& node, Work& x, unsigned budget) {
    lift(x);
    describe(x, node);
    const unsigned remaining = node.multiplicity - node.root_multiplicity;
    if (remaining == 0) return;
    if (node.depth() >= budget) {
      node.unexpanded_multiplicity = remaining;
      const auto es = edges(x, node.last_r);
      if (es.empty()) throw std::logic_error("unexpanded roots without a continuing edge");
      Exponent lo = es.front().r;
      for (const auto& e : es) lo = std::min(lo, e.r);
      node.next_exponent_bound = lo;
      if (node.status != NodeStatus::exact_root) node.status = NodeStatus::budget_exhausted;
      return;
    }
    auto kids = children(x, node.last_r);
    unsigned total = 0;
    for (const auto& k : kids) total += k.multiplicity;
    if (total != remaining) throw std::logic_error("children do not account for the node multiplicity");
    node.children.reserve(kids.size());
    for (auto& k : kids) {
      BranchNode child;
      child.last_r = k.step.r;
      child.multiplicity = k.multiplicity;
      child.step = k.step;
      node.children.push_back(std::move(child));
    }
    for (std::size_t i = 0; i < kids.size(); ++i) grow(node.children[i], kids[i].work, budget);
  }

  /// Moves every coefficient of the subtree into the top field.
  void lift_tree(BranchNode& node) const {
    node.w = HahnSeries(tower_.lift(node.w.terms()));
    for (auto& l : node.lines) l.b = tower_.lift(l.b);
    if (node.step) node.step->zeta = tower_.lift(node.step->zeta);
    for (auto& c : node.children) lift_tree(c);
    std::sort(node.children.begin(), node.children.end(), [](const BranchNode& a, const BranchNode& b) {
      if (a.step->r != b.step->r) return a.step->r < b.step->r;
      return a.step->zeta < b.step->zeta;
    });
  }

 private:
  Poly f_;
  Tower tower_;
  std::vector<TermPoly> F_;
  LeadingTerm scale_;
  bool additive_ = false;
};

void collect_chains(const BranchNode& node, std::vector<const BranchNode*>& path,
                    std::vector<std::vector<const BranchNode*>>& out) {
  path.push_back(&node);
  if (node.terminal_multiplicity() > 0) out.push_back(path);
  for (const auto& c : node.children) collect_chains(c, path, out);
  path.pop_back();
}

void mark_accumulations(const Poly& f, BranchNode& node, std::vector<const BranchNode*>& path) {
  path.push_back(&node);
  if (node.status == NodeStatus::budget_exhausted) {
    node.accumulation = accumulation_analysis(f, path);
    if (node.accumulation) node.status = NodeStatus::accumulating;
  }
  for (auto& c : node.children) mark_accumulations(f, c, path);
  path.pop_back();
}

const NewtonLine* find_line(const BranchNode& n, unsigned i) {
  for (const auto& l : n.lines) {
    if (l.i == i) return &l;
  }
  return nullptr;
}

}  // namespace

std::vector<ApproximationTerm> approximation_terms(const Poly& f, const HahnSeries& w) {
  if (!w.is_exact()) throw std::invalid_argument("approximation terms need an exact w");
  Engine eng(f, w.ctx());
  Work x = eng.at(w.terms());
  if (x.c[0].is_zero()) throw std::domain_error("w is already a root");
  std::optional<Exponent> after;
  if (!w.is_zero()) after = w.terms().highest().exp;
  auto es = Engine::edges(x, std::nullopt);
  std::vector<ApproximationTerm> out;
  if (es.empty() || es.front().a != 0) return out;
  if (after && es.front().r <= *after) return out;
  const Exponent r = es.front().r;
  for (auto& k : eng.children(x, std::nullopt)) {
    if (k.step.r == r) out.push_back({r, k.step.zeta, k.multiplicity});
  }
  for (auto& a : out) a.zeta = eng.tower().lift(a.zeta);
  return out;
}

std::vector<BranchNode> branch_step(const Poly& f, const BranchNode& node) {
  if (!node.w.is_exact()) throw std::invalid_argument("branch_step needs an exact w");
  Engine eng(f, node.w.ctx());
  Work x = eng.at(node.w.terms());
  BranchNode self;
  eng.describe(x, self);
  auto kids = eng.children(x, node.last_r);
  if (node.multiplicity != 0) {
    unsigned total = self.root_multiplicity;
    for (const auto& k : kids) total += k.multiplicity;
    if (total != node.multiplicity) throw std::logic_error("children do not account for the node multiplicity");
  }
  std::vector<BranchNode> out;
  for (auto& k : kids) {
    BranchNode child;
    child.last_r = k.step.r;
    child.multiplicity = k.multiplicity;
    child.step = k.step;
    eng.lift(k.work);
    eng.describe(k.work, child);
    out.push_back(std::move(child));
  }
  for (auto& c : out) {
    c.w = HahnSeries(eng.tower().lift(c.w.terms()));
    for (auto& l : c.lines) l.b = eng.tower().lift(l.b);
    c.step->zeta = eng.tower().lift(c.step->zeta);
  }
  std::sort(out.begin(), out.end(), [](const BranchNode& a, const BranchNode& b) {
    if (a.step->r != b.step->r) return a.step->r < b.step->r;
    return a.step->zeta < b.step->zeta;
  });
  return out;
}

ExpansionTree expand_roots(const Poly& f, unsigned depth) {
  if (depth == 0) throw std::invalid_argument("depth must be at least 1");
  Engine eng(f, f.ctx());
  BranchNode root;
  root.multiplicity = eng.degree();
  Work x = eng.at(TermPoly(f.ctx()));
  eng.grow(root, x, depth);
  eng.lift_tree(root);
  ExpansionTree tree{f, depth, eng.tower().top(), std::move(root)};
  std::vector<const BranchNode*> path;
  mark_accumulations(f, tree.root, path);
  return tree;
}

std::optional<Accumulation> accumulation_analysis(const Poly& f, const std::vector<const BranchNode*>& chain) {
  constexpr std::size_t kMinRun = 4;
  if (chain.size() < kMinRun + 1) return std::nullopt;
  const BranchNode& leaf = *chain.back();
  if (!leaf.residual_valuation) return std::nullopt;
  const Step& last = *leaf.step;
  const unsigned l = last.edge_high, m = last.value_line;
  if (m == 0 || l == m) return std::nullopt;
  std::size_t run = 0;
  for (std::size_t k = chain.size() - 1; k >= 1; --k) {
    const Step& s = *chain[k]->step;
    if (s.edge_high != l || s.value_line != m) break;
    ++run;
  }
  if (run < kMinRun) return std::nullopt;

  // The two lines must carry the same data at the leaf and at every parent
  // of the run.
  const NewtonLine* ll = find_line(leaf, l);
  const NewtonLine* lm = find_line(leaf, m);
  if (!ll || !lm) return std::nullopt;
  for (std::size_t k = chain.size() - 1 - run; k < chain.size(); ++k) {
    const NewtonLine* a = find_line(*chain[k], l);
    const NewtonLine* b = find_line(*chain[k], m);
    if (!a || !b || a->rho != ll->rho || !(a->b == ll->b) || b->rho != lm->rho || !(b->b == lm->b)) return std::nullopt;
  }
  Exponent r_star = (lm->rho - ll->rho) / Exponent(static_cast<long>(l) - static_cast<long>(m));
  r_star.canonicalize();

  // Exponents must increase towards r_star from below.
  for (std::size_t k = chain.size() - run; k < chain.size(); ++k) {
    const Exponent& r = chain[k]->step->r;
    if (r >= r_star) return std::nullopt;
    if (k > 1 && chain[k - 1]->step && r <= chain[k - 1]->step->r) return std::nullopt;
  }

  const auto gj = gamma_J(leaf.lines, r_star);
  const FieldPtr& field = leaf.w.ctx();
  std::vector<FF> eq(gj.J.back() + 1, FF::zero(field));
  for (unsigned j : gj.J) eq[j] = find_line(leaf, j)->b;
  FFPoly equation(field, std::move(eq));
  const RootSet rs = poly_roots(equation);
  std::vector<FF> prefix;
  for (const auto& c : leaf.w.coefficients()) prefix.push_back(rs.embedding(c));
  Accumulation acc{r_star, gj.J, equation, rs.field, {}, l, m, is_additive(f)};
  for (const auto& root : rs.roots) acc.solutions.push_back({root.value, expands_at(prefix, root.value)});
  return acc;
}

std::vector<std::vector<const BranchNode*>> terminal_chains(const BranchNode& root) {
  std::vector<std::vector<const BranchNode*>> out;
  std::vector<const BranchNode*> path;
  collect_chains(root, path, out);
  return out;
}

}  // namespace hahnroot
