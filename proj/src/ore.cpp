#include "hahnroot/ore.hpp"

#include <stdexcept>

#include "hahnroot/ffpoly.hpp"

namespace hahnroot {

namespace {

FFPoly dense(const TermPoly& a) { return dense_in_t(a); }

RatFun from_dense(const FFPoly& a) { return RatFun(from_dense_in_t(a), TermPoly::constant(FF::one(a.ctx()))); }

FFPoly lcm(const FFPoly& a, const FFPoly& b) { return (a * b) / gcd(a, b); }

Poly frobenius(const Poly& a, std::uint32_t p) {
  if (a.is_zero()) return a;
  std::vector<RatFun> cs(a.coeffs().size() * p - (p - 1), RatFun(a.ctx()));
  for (std::size_t j = 0; j < a.coeffs().size(); ++j) cs[j * p] = a.coeffs()[j].pow(p);
  return Poly(a.ctx(), std::move(cs));
}

using Row = std::vector<FFPoly>;

void make_primitive(Row& row) {
  FFPoly g(row.front().ctx());
  for (const auto& x : row) g = gcd(g, x);
  if (g.degree() <= 0) return;
  for (auto& x : row) x = x / g;
}

}  // namespace

AdditivePolynomial::AdditivePolynomial(FieldPtr ctx, std::map<unsigned, RatFun> coeffs) : ctx_(std::move(ctx)) {
  for (auto& [i, c] : coeffs) {
    if (!c.is_zero()) coeffs_.emplace(i, std::move(c));
  }
  if (coeffs_.empty()) throw std::invalid_argument("additive polynomial must be nonzero");
}

std::vector<unsigned> AdditivePolynomial::support() const {
  std::vector<unsigned> out;
  for (const auto& [i, c] : coeffs_) out.push_back(i);
  return out;
}

Poly AdditivePolynomial::to_poly() const {
  Poly out(ctx_);
  mpz_class e;
  for (const auto& [i, c] : coeffs_) {
    mpz_ui_pow_ui(e.get_mpz_t(), p(), i);
    if (!e.fits_ulong_p() || e > 1000000) throw std::overflow_error("additive polynomial degree too large to expand");
    out += Poly::monomial(c, e.get_ui());
  }
  return out;
}

AdditivePolynomial addpol(const Poly& f) {
  if (f.degree() < 1) throw std::invalid_argument("addpol needs a polynomial of degree at least 1");
  if (f.ctx()->k() != 1) throw std::invalid_argument("addpol needs coefficients in F_p(t)");
  const auto& fp = f.ctx();
  const std::uint32_t p = fp->p();
  const Poly g = f.monic();
  const auto n = static_cast<std::size_t>(g.degree());

  // Column i holds X^(p^i) mod g.
  std::vector<Poly> cols;
  cols.push_back(Poly::X(fp).divmod(g).second);
  for (std::size_t i = 1; i <= n; ++i) cols.push_back(frobenius(cols.back(), p).divmod(g).second);

  // Rows are coefficients of X^j; scaling a row by its denominator lcm
  // leaves the kernel unchanged.
  std::vector<Row> rows;
  for (std::size_t j = 0; j < n; ++j) {
    FFPoly den = FFPoly::constant(FF::one(fp));
    for (const auto& c : cols) den = lcm(den, dense(c.coeff(j).den()));
    Row row;
    for (const auto& c : cols) {
      const RatFun x = c.coeff(j);
      row.push_back(dense(x.num()) * (den / dense(x.den())));
    }
    rows.push_back(std::move(row));
  }

  // Fraction-free row echelon form over F_p[t].
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c <= n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][c].is_zero()) continue;
      const FFPoly a = rows[r][c], b = rows[k][c];
      for (std::size_t j = c; j <= n; ++j) rows[k][j] = rows[k][j] * a - rows[r][j] * b;
      make_primitive(rows[k]);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::size_t free_col = 0;
  while (free_col < pivot_col.size() && pivot_col[free_col] == free_col) ++free_col;

  // Kernel vector with a_free = 1 and every other free variable 0; pivots
  // right of free_col are then forced to 0.
  std::vector<RatFun> a(free_col + 1, RatFun(fp));
  a[free_col] = RatFun(FF::one(fp));
  for (std::size_t k = free_col; k-- > 0;) {
    const auto c = pivot_col[k];
    RatFun s(fp);
    for (std::size_t j = c + 1; j <= free_col; ++j) {
      if (!rows[k][j].is_zero() && !a[j].is_zero()) s += from_dense(rows[k][j]) * a[j];
    }
    a[c] = -s / from_dense(rows[k][c]);
  }

  // Clear denominators, make primitive, normalize the top coefficient.
  FFPoly den = FFPoly::constant(FF::one(fp));
  for (const auto& x : a) den = lcm(den, dense(x.den()));
  Row polys;
  for (const auto& x : a) polys.push_back(dense(x.num()) * (den / dense(x.den())));
  make_primitive(polys);
  const FF lead_inv = polys.back().leading().inverse();
  std::map<unsigned, RatFun> coeffs;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (!polys[i].is_zero()) coeffs.emplace(static_cast<unsigned>(i), from_dense(polys[i] * lead_inv));
  }
  return AdditivePolynomial(fp, std::move(coeffs));
}

bool is_additive(const Poly& P) {
  const std::uint32_t p = P.ctx()->p();
  for (std::size_t e = 0; e < P.coeffs().size(); ++e) {
    if (P.coeffs()[e].is_zero()) continue;
    std::size_t x = e;
    if (x == 0) return false;
    while (x % p == 0) x /= p;
    if (x != 1) return false;
  }
  return true;
}

}  // namespace hahnroot
