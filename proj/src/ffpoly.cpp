#include "hahnroot/ffpoly.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hahnroot {

FFPoly::FFPoly(FieldPtr ctx, std::vector<FF> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) { trim(); }

FFPoly FFPoly::constant(const FF& c) { return FFPoly(c.ctx(), {c}); }

FFPoly FFPoly::monomial(const FF& c, std::size_t degree) {
  std::vector<FF> cs(degree + 1, FF::zero(c.ctx()));
  cs[degree] = c;
  return FFPoly(c.ctx(), std::move(cs));
}

FFPoly FFPoly::linear_root(const FF& a) { return FFPoly(a.ctx(), {-a, FF::one(a.ctx())}); }

void FFPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FF FFPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : FF::zero(ctx_); }

FF FFPoly::leading() const {
  if (c_.empty()) return FF::zero(ctx_);
  return c_.back();
}

FFPoly FFPoly::monic() const {
  if (c_.empty()) return *this;
  FF inv = c_.back().inverse();
  FFPoly r = *this;
  for (auto& c : r.c_) c *= inv;
  return r;
}

FFPoly FFPoly::derivative() const {
  std::vector<FF> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * FF(ctx_, static_cast<std::int64_t>(i)));
  return FFPoly(ctx_, std::move(d));
}

FF FFPoly::operator()(const FF& x) const {
  FF r = FF::zero(ctx_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

FFPoly FFPoly::operator-() const {
  FFPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

FFPoly& FFPoly::operator+=(const FFPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FF::zero(ctx_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

FFPoly& FFPoly::operator-=(const FFPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), FF::zero(ctx_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

FFPoly operator*(const FFPoly& a, const FFPoly& b) {
  if (a.is_zero() || b.is_zero()) return FFPoly(a.ctx_);
  std::vector<FF> r(a.c_.size() + b.c_.size() - 1, FF::zero(a.ctx_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return FFPoly(a.ctx_, std::move(r));
}

FFPoly operator*(const FFPoly& a, const FF& c) {
  FFPoly r = a;
  for (auto& x : r.c_) x *= c;
  r.trim();
  return r;
}

bool operator==(const FFPoly& a, const FFPoly& b) { return a.c_ == b.c_; }

std::pair<FFPoly, FFPoly> FFPoly::divmod(const FFPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  FFPoly r = *this;
  if (r.degree() < d.degree()) return {FFPoly(ctx_), r};
  const auto dn = static_cast<std::size_t>(d.degree());
  std::vector<FF> q(r.c_.size() - dn, FF::zero(ctx_));
  FF inv = d.leading().inverse();
  for (std::size_t i = r.c_.size(); i-- > dn;) {
    FF c = r.c_[i] * inv;
    if (c.is_zero()) continue;
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) r.c_[i - dn + j] -= c * d.c_[j];
  }
  r.trim();
  return {FFPoly(ctx_, std::move(q)), r};
}

FFPoly FFPoly::mapped(const Embedding& e) const {
  std::vector<FF> cs;
  cs.reserve(c_.size());
  for (const auto& c : c_) cs.push_back(e(c));
  return FFPoly(e.to(), std::move(cs));
}

std::string FFPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const auto& c = c_[i];
    if (c.is_zero()) continue;
    if (!first) os << "+";
    first = false;
    std::string cs = c.str();
    const bool compound = cs.find('+') != std::string::npos;
    if (i == 0) {
      os << cs;
      continue;
    }
    if (!c.is_one()) os << (compound ? "(" + cs + ")" : cs) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

FFPoly gcd(FFPoly a, FFPoly b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FFPoly powmod(const FFPoly& base, const mpz_class& e, const FFPoly& m) {
  FFPoly result = FFPoly::constant(FF::one(m.ctx())) % m;
  FFPoly b = base % m;
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

namespace {

FFPoly variable(const FieldPtr& ctx) { return FFPoly::monomial(FF::one(ctx), 1); }

/// Distinct roots of a squarefree g that splits into linear factors.
void split_linear(const FFPoly& g, std::mt19937_64& rng, std::vector<FF>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    auto m = g.monic();
    out.push_back(-m.coeff(0));
    return;
  }
  const auto& ctx = g.ctx();
  const std::uint32_t p = ctx->p();
  const mpz_class q = ctx->order();
  const FFPoly x = variable(ctx);
  for (;;) {
    std::vector<std::uint32_t> coords(ctx->k());
    for (auto& c : coords) c = static_cast<std::uint32_t>(rng() % p);
    FF a = FF::from_coords(ctx, coords);
    if (a.is_zero()) continue;
    FFPoly h(ctx);
    if (p == 2) {
      // Absolute trace of a*X, which takes values in F_2 on the roots.
      FFPoly y = (x * a) % g;
      FFPoly t = y;
      for (unsigned i = 1; i < ctx->k(); ++i) {
        y = (y * y) % g;
        t += y;
      }
      h = t;
    } else {
      mpz_class e = (q - 1) / 2;
      h = powmod(x + FFPoly::constant(a), e, g) - FFPoly::constant(FF::one(ctx));
    }
    FFPoly d = gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, rng, out);
      split_linear(g / d, rng, out);
      return;
    }
  }
}

/// Distinct roots of g lying in g's own coefficient field.
std::vector<FF> roots_in_field(const FFPoly& g) {
  const auto& ctx = g.ctx();
  const mpz_class q = ctx->order();
  FFPoly m = g.monic();
  FFPoly xq = powmod(variable(ctx), q, m);
  FFPoly lin = gcd(m, xq - variable(ctx));
  std::vector<FF> out;
  if (lin.degree() <= 0) return out;
  if (q <= (1 << 16)) {
    const auto n = q.get_ui();
    for (unsigned long i = 0; i < n; ++i) {
      FF z = FF::from_index(ctx, i);
      if (lin(z).is_zero()) out.push_back(z);
    }
  } else {
    std::mt19937_64 rng(0x5eed0000u + static_cast<unsigned>(lin.degree()));
    split_linear(lin, rng, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_irreducible(const FFPoly& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const auto& ctx = f.ctx();
  FFPoly m = f.monic();
  const mpz_class q = ctx->order();
  const FFPoly x = variable(ctx);
  FFPoly h = x;
  for (int i = 1; i <= n / 2; ++i) {
    h = powmod(h, q, m);
    if (gcd(m, h - x).degree() > 0) return false;
  }
  return true;
}

std::vector<unsigned> factor_degrees(const FFPoly& g) {
  if (g.degree() < 1) throw std::invalid_argument("factor_degrees needs a nonconstant polynomial");
  const auto& ctx = g.ctx();
  const mpz_class q = ctx->order();
  const FFPoly x = variable(ctx);
  FFPoly a = g.monic();
  FFPoly h = x % a;
  std::vector<unsigned> degrees;
  for (unsigned d = 1; a.degree() > 0; ++d) {
    h = powmod(h, q, a);
    FFPoly common = gcd(a, h - x);
    if (common.degree() > 0) {
      degrees.push_back(d);
      for (;;) {
        FFPoly c = gcd(a, common);
        if (c.degree() <= 0) break;
        a = a / c;
      }
      if (a.degree() > 0) h = h % a;
    }
  }
  return degrees;
}

RootSet poly_roots(const FFPoly& g) {
  if (g.is_zero()) throw std::invalid_argument("poly_roots: zero polynomial has no well-defined root set");
  if (g.degree() < 1) throw std::invalid_argument("poly_roots: constant polynomial");
  const auto& ctx = g.ctx();
  unsigned l = 1;
  for (auto d : factor_degrees(g)) l = std::lcm(l, d);
  FieldPtr target = l == 1 ? ctx : FieldCtx::extension(ctx->p(), ctx->k() * l);
  Embedding emb = l == 1 ? Embedding::identity(ctx) : Embedding::between(ctx, target);
  FFPoly h = g.mapped(emb).monic();
  std::vector<RootWithMultiplicity> roots;
  for (const auto& r : roots_in_field(h)) {
    unsigned mult = 0;
    FFPoly lin = FFPoly::linear_root(r);
    for (;;) {
      auto [quo, rem] = h.divmod(lin);
      if (!rem.is_zero()) break;
      h = std::move(quo);
      ++mult;
    }
    roots.push_back({r, mult});
  }
  if (h.degree() != 0) throw std::logic_error("poly_roots: polynomial did not split in its splitting field");
  return RootSet{target, emb, std::move(roots)};
}

FrobeniusSolution frobenius_solve(const std::map<unsigned, FF>& b, const FF& c) {
  const FieldPtr& ctx = c.ctx();
  std::map<unsigned, FF> nz;
  for (const auto& [j, v] : b) {
    if (!v.ctx()->same_as(*ctx)) throw std::invalid_argument("frobenius_solve: mixed fields");
    if (!v.is_zero()) nz.emplace(j, v);
  }
  if (nz.empty()) {
    if (c.is_zero()) throw std::invalid_argument("frobenius_solve: all coefficients zero and c = 0");
    return FrobeniusSolution{false, ctx, Embedding::identity(ctx), {}};
  }
  const unsigned jmin = nz.begin()->first;
  const unsigned jmax = nz.rbegin()->first;
  const unsigned want = jmax - jmin;  // dimension of the kernel over the closure
  const std::uint64_t p = ctx->p();
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    x %= p;
    while (e) {
      if (e & 1) r = r * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return r;
  };
  for (unsigned mult = 1;; ++mult) {
    FieldPtr field = mult == 1 ? ctx : FieldCtx::extension(ctx->p(), ctx->k() * mult);
    Embedding emb = mult == 1 ? Embedding::identity(ctx) : Embedding::between(ctx, field);
    const unsigned K = field->k();
    auto apply = [&](const FF& z) {
      FF acc = FF::zero(field);
      FF zp = z;
      unsigned j = 0;
      for (const auto& [idx, coef] : nz) {
        while (j < idx) {
          zp = zp.frobenius();
          ++j;
        }
        acc += emb(coef) * zp;
      }
      return acc;
    };
    // Augmented K x (K+1) system over F_p: columns are L(e_i), then c.
    std::vector<std::vector<std::uint64_t>> a(K, std::vector<std::uint64_t>(K + 1, 0));
    for (unsigned i = 0; i < K; ++i) {
      std::vector<std::uint32_t> e(K, 0);
      e[i] = 1;
      FF img = apply(FF::from_coords(field, e));
      for (unsigned r = 0; r < K; ++r) a[r][i] = img.coords()[r];
    }
    FF cc = emb(c);
    for (unsigned r = 0; r < K; ++r) a[r][K] = cc.coords()[r];
    std::vector<int> pivot_of_row;
    std::vector<bool> is_pivot(K, false);
    unsigned row = 0;
    for (unsigned col = 0; col < K && row < K; ++col) {
      unsigned sel = row;
      while (sel < K && a[sel][col] == 0) ++sel;
      if (sel == K) continue;
      std::swap(a[sel], a[row]);
      auto iv = inv(a[row][col]);
      for (auto& v : a[row]) v = v * iv % p;
      for (unsigned r = 0; r < K; ++r) {
        if (r == row || a[r][col] == 0) continue;
        auto f = a[r][col];
        for (unsigned cidx = 0; cidx <= K; ++cidx) a[r][cidx] = (a[r][cidx] + p * p - f * a[row][cidx]) % p;
      }
      pivot_of_row.push_back(static_cast<int>(col));
      is_pivot[col] = true;
      ++row;
    }
    bool consistent = true;
    for (unsigned r = row; r < K; ++r) consistent = consistent && a[r][K] == 0;
    const unsigned dim = K - row;
    if (!consistent || dim != want) continue;
    std::vector<std::uint32_t> part(K, 0);
    for (unsigned r = 0; r < row; ++r) part[pivot_of_row[r]] = static_cast<std::uint32_t>(a[r][K]);
    std::vector<std::vector<std::uint32_t>> basis;
    for (unsigned col = 0; col < K; ++col) {
      if (is_pivot[col]) continue;
      std::vector<std::uint32_t> v(K, 0);
      v[col] = 1;
      for (unsigned r = 0; r < row; ++r) v[pivot_of_row[r]] = static_cast<std::uint32_t>((p - a[r][col]) % p);
      basis.push_back(std::move(v));
    }
    std::vector<FF> sols;
    std::uint64_t total = 1;
    for (unsigned i = 0; i < dim; ++i) total *= p;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::vector<std::uint64_t> v(part.begin(), part.end());
      std::uint64_t r = idx;
      for (const auto& bv : basis) {
        std::uint64_t coef = r % p;
        r /= p;
        for (unsigned i = 0; i < K; ++i) v[i] = (v[i] + coef * bv[i]) % p;
      }
      std::vector<std::uint32_t> v32(v.begin(), v.end());
      sols.push_back(FF::from_coords(field, std::move(v32)));
    }
    std::sort(sols.begin(), sols.end());
    return FrobeniusSolution{true, field, emb, std::move(sols)};
  }
}

}  // namespace hahnroot
