#include "hahnroot/hasse.hpp"

#include <stdexcept>

namespace hahnroot {

Poly::Poly(FieldPtr ctx, std::vector<RatFun> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::constant(const RatFun& c) { return Poly(c.ctx(), {c}); }

Poly Poly::monomial(const RatFun& c, std::size_t degree) {
  std::vector<RatFun> cs(degree + 1, RatFun(c.ctx()));
  cs[degree] = c;
  return Poly(c.ctx(), std::move(cs));
}

RatFun Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RatFun(ctx_); }

const RatFun& Poly::leading() const {
  if (c_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), RatFun(ctx_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.ctx_);
  std::vector<RatFun> cs(a.c_.size() + b.c_.size() - 1, RatFun(a.ctx_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (!b.c_[j].is_zero()) cs[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return Poly(a.ctx_, std::move(cs));
}

Poly operator*(const Poly& a, const RatFun& c) {
  Poly r = a;
  for (auto& x : r.c_) x *= c;
  r.trim();
  return r;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return false;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!(a.c_[i] == b.c_[i])) return false;
  }
  return true;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = *this;
  if (rem.degree() < d.degree()) return {Poly(ctx_), rem};
  std::vector<RatFun> q(rem.c_.size() - d.c_.size() + 1, RatFun(ctx_));
  const RatFun inv = d.leading().inverse();
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    const std::size_t shift = static_cast<std::size_t>(rem.degree() - d.degree());
    RatFun c = rem.leading() * inv;
    q[shift] = c;
    for (std::size_t i = 0; i < d.c_.size(); ++i) rem.c_[i + shift] -= c * d.c_[i];
    rem.trim();
  }
  return {Poly(ctx_, std::move(q)), rem};
}

Poly Poly::monic() const { return *this * leading().inverse(); }

RatFun Poly::operator()(const RatFun& x) const {
  if (!x.ctx()->same_as(*ctx_)) return mapped(Embedding::between(ctx_, x.ctx()))(x);
  RatFun r(ctx_);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

Poly Poly::mapped(const Embedding& e) const {
  std::vector<RatFun> cs;
  cs.reserve(c_.size());
  for (const auto& c : c_) cs.push_back(c.mapped(e));
  return Poly(e.to(), std::move(cs));
}

std::uint32_t binomial_mod(const mpz_class& n, const mpz_class& k, std::uint32_t p) {
  if (k < 0 || k > n) return 0;
  mpz_class nn = n, kk = k;
  std::uint64_t result = 1;
  while (kk > 0 || nn > 0) {
    const unsigned long ni = mpz_fdiv_ui(nn.get_mpz_t(), p);
    const unsigned long ki = mpz_fdiv_ui(kk.get_mpz_t(), p);
    if (ki > ni) return 0;
    // C(ni, ki) mod p with ni < p, from the multiplicative formula.
    std::uint64_t num = 1, den = 1;
    for (unsigned long j = 0; j < ki; ++j) {
      num = num * ((ni - j) % p) % p;
      den = den * ((j + 1) % p) % p;
    }
    // den is a unit mod p; invert by Fermat.
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    result = result * (num * inv % p) % p;
    mpz_fdiv_q_ui(nn.get_mpz_t(), nn.get_mpz_t(), p);
    mpz_fdiv_q_ui(kk.get_mpz_t(), kk.get_mpz_t(), p);
  }
  return static_cast<std::uint32_t>(result);
}

Poly hasse_derivative(const Poly& f, unsigned k) {
  if (f.degree() < static_cast<int>(k)) return Poly(f.ctx());
  const std::uint32_t p = f.ctx()->p();
  std::vector<RatFun> cs;
  for (std::size_t j = 0; j + k < f.coeffs().size(); ++j) {
    const auto b = binomial_mod(mpz_class(static_cast<unsigned long>(j + k)), mpz_class(k), p);
    cs.push_back(b == 0 ? RatFun(f.ctx()) : f.coeffs()[j + k] * RatFun(FF(f.ctx(), b)));
  }
  return Poly(f.ctx(), std::move(cs));
}

std::vector<RatFun> taylor_coeffs(const Poly& f, const RatFun& lambda) {
  std::vector<RatFun> out;
  for (int k = 0; k <= std::max(f.degree(), 0); ++k) out.push_back(hasse_derivative(f, static_cast<unsigned>(k))(lambda));
  return out;
}

RatFun evaluate(const Poly& f, const RatFun& w) { return f(w); }

RatFun evaluate(const Poly& f, const HahnSeries& w) { return f(w.to_ratfun()); }

std::vector<NewtonLine> newton_data(const Poly& f, const HahnSeries& w) {
  std::vector<NewtonLine> lines;
  const RatFun x = w.to_ratfun();
  for (int i = 1; i <= f.degree(); ++i) {
    const auto lt = leading_term(hasse_derivative(f, static_cast<unsigned>(i))(x));
    if (lt) lines.push_back({static_cast<unsigned>(i), lt->v, lt->c});
  }
  return lines;
}

GammaJ gamma_J(std::span<const NewtonLine> lines, const std::optional<Exponent>& r) {
  if (lines.empty()) throw std::invalid_argument("gamma_J needs at least one line");
  GammaJ out;
  if (!r) {
    for (const auto& l : lines) out.J.push_back(l.i);
    return out;
  }
  for (const auto& l : lines) {
    const Exponent g = l.rho + Exponent(l.i) * *r;
    if (!out.gamma || g < *out.gamma) {
      out.gamma = g;
      out.J = {l.i};
    } else if (g == *out.gamma) {
      out.J.push_back(l.i);
    }
  }
  return out;
}

}  // namespace hahnroot
