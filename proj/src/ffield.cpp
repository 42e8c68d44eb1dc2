#include "hahnroot/ffield.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "hahnroot/ffpoly.hpp"

namespace hahnroot {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldCtx::FieldCtx(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), k_(static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {}

FieldPtr FieldCtx::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (p >= (1u << 31)) throw std::invalid_argument("characteristic too large");
  return FieldPtr(new FieldCtx(p, {0, 1}));
}

FieldPtr FieldCtx::extension(std::uint32_t p, unsigned k) {
  if (k == 0) throw std::invalid_argument("extension degree must be positive");
  auto base = prime(p);
  if (k == 1) return base;
  mpz_class count;
  mpz_ui_pow_ui(count.get_mpz_t(), p, k);
  if (!count.fits_ulong_p()) throw std::invalid_argument("extension degree too large");
  const std::uint64_t n = count.get_ui();
  // Index i encodes (c_0, ..., c_{k-1}) with c_0 least significant, so
  // increasing i is lexicographic order read from c_{k-1} down.
  for (std::uint64_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> mod(k + 1, 0);
    std::uint64_t r = i;
    for (unsigned j = 0; j < k; ++j) {
      mod[j] = static_cast<std::uint32_t>(r % p);
      r /= p;
    }
    mod[k] = 1;
    if (mod[0] == 0) continue;
    std::vector<FF> cs;
    cs.reserve(k + 1);
    for (auto c : mod) cs.emplace_back(base, static_cast<std::int64_t>(c));
    if (is_irreducible(FFPoly(base, std::move(cs)))) return FieldPtr(new FieldCtx(p, std::move(mod)));
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldPtr FieldCtx::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  auto base = prime(p);
  if (modulus.size() < 2 || modulus.back() % p != 1) {
    throw std::invalid_argument("modulus must be monic of degree >= 1");
  }
  std::vector<FF> cs;
  for (auto& c : modulus) {
    c %= p;
    cs.emplace_back(base, static_cast<std::int64_t>(c));
  }
  if (modulus.size() == 2) {
    // Any linear modulus gives F_p; keep the canonical representation.
    return base;
  }
  if (!is_irreducible(FFPoly(base, std::move(cs)))) throw std::invalid_argument("modulus is not irreducible");
  return FieldPtr(new FieldCtx(p, std::move(modulus)));
}

mpz_class FieldCtx::order() const {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p_, k_);
  return q;
}

std::string FieldCtx::name() const { return "F_" + order().get_str(); }

std::string FieldCtx::description() const {
  if (k_ == 1) return "F_" + std::to_string(p_);
  std::vector<std::uint32_t> coords(modulus_.begin(), modulus_.end());
  std::ostringstream os;
  os << "F_" << p_ << "[s]/(";
  bool first = true;
  for (int i = static_cast<int>(k_); i >= 0; --i) {
    auto c = coords[i];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << "s";
      if (i > 1) os << "^" << i;
    }
  }
  os << ")";
  return os.str();
}

std::vector<std::uint32_t> FieldCtx::add(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b) const {
  std::vector<std::uint32_t> r(k_);
  for (unsigned i = 0; i < k_; ++i) {
    std::uint64_t s = std::uint64_t{a[i]} + b[i];
    r[i] = static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  return r;
}

std::vector<std::uint32_t> FieldCtx::sub(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b) const {
  std::vector<std::uint32_t> r(k_);
  for (unsigned i = 0; i < k_; ++i) {
    r[i] = a[i] >= b[i] ? a[i] - b[i] : static_cast<std::uint32_t>(std::uint64_t{a[i]} + p_ - b[i]);
  }
  return r;
}

std::vector<std::uint32_t> FieldCtx::mul(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b) const {
  if (k_ == 1) {
    return {static_cast<std::uint32_t>(std::uint64_t{a[0]} * b[0] % p_)};
  }
  std::vector<std::uint64_t> t(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (a[i] == 0) continue;
    for (unsigned j = 0; j < k_; ++j) {
      t[i + j] = (t[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
    }
  }
  for (unsigned i = 2 * k_ - 2; i >= k_; --i) {
    std::uint64_t c = t[i];
    if (c == 0) continue;
    t[i] = 0;
    for (unsigned j = 0; j < k_; ++j) {
      // subtract c * modulus[j] at position i - k + j
      std::uint64_t m = c * modulus_[j] % p_;
      auto& slot = t[i - k_ + j];
      slot = (slot + p_ - m) % p_;
    }
  }
  std::vector<std::uint32_t> r(k_);
  for (unsigned i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>(t[i]);
  return r;
}

// ---------------------------------------------------------------- FF

FF::FF(FieldPtr ctx, std::int64_t value) : ctx_(std::move(ctx)), c_(ctx_->k(), 0) {
  std::int64_t p = ctx_->p();
  std::int64_t v = value % p;
  if (v < 0) v += p;
  c_[0] = static_cast<std::uint32_t>(v);
}

FF::FF(FieldPtr ctx, std::vector<std::uint32_t> coords, int) : ctx_(std::move(ctx)), c_(std::move(coords)) {}

FF FF::generator(FieldPtr ctx) {
  std::vector<std::uint32_t> c(ctx->k(), 0);
  if (ctx->k() == 1) {
    // s is a root of the linear modulus s + m_0.
    c[0] = (ctx->p() - ctx->modulus()[0]) % ctx->p();
  } else {
    c[1] = 1;
  }
  return FF(std::move(ctx), std::move(c), 0);
}

FF FF::from_coords(FieldPtr ctx, std::vector<std::uint32_t> coords) {
  if (coords.size() != ctx->k()) throw std::invalid_argument("coordinate vector has wrong length");
  for (auto& c : coords) c %= ctx->p();
  return FF(std::move(ctx), std::move(coords), 0);
}

FF FF::from_index(FieldPtr ctx, std::uint64_t index) {
  std::vector<std::uint32_t> c(ctx->k());
  for (auto& x : c) {
    x = static_cast<std::uint32_t>(index % ctx->p());
    index /= ctx->p();
  }
  return FF(std::move(ctx), std::move(c), 0);
}

bool FF::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](auto x) { return x == 0; });
}

bool FF::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  return std::all_of(c_.begin() + 1, c_.end(), [](auto x) { return x == 0; });
}

bool FF::in_prime_field() const {
  return std::all_of(c_.begin() + 1, c_.end(), [](auto x) { return x == 0; });
}

std::uint32_t FF::prime_value() const {
  if (!in_prime_field()) throw std::domain_error("element is not in the prime field");
  return c_[0];
}

void FF::check_same(const FF& o) const {
  if (!ctx_ || !o.ctx_) throw std::logic_error("uninitialised field element");
  if (ctx_ != o.ctx_ && !ctx_->same_as(*o.ctx_)) throw std::invalid_argument("field elements from different fields");
}

FF FF::operator-() const {
  FF r = zero(ctx_);
  r.c_ = ctx_->sub(r.c_, c_);
  return r;
}

FF& FF::operator+=(const FF& o) {
  check_same(o);
  c_ = ctx_->add(c_, o.c_);
  return *this;
}

FF& FF::operator-=(const FF& o) {
  check_same(o);
  c_ = ctx_->sub(c_, o.c_);
  return *this;
}

FF& FF::operator*=(const FF& o) {
  check_same(o);
  c_ = ctx_->mul(c_, o.c_);
  return *this;
}

FF& FF::operator/=(const FF& o) { return *this *= o.inverse(); }

FF FF::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  mpz_class e = ctx_->order() - 2;
  return pow(e);
}

FF FF::pow(const mpz_class& e) const {
  if (e < 0) return inverse().pow(mpz_class(-e));
  FF result = one(ctx_);
  FF base = *this;
  const auto bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result *= result;
    if (mpz_tstbit(e.get_mpz_t(), i)) result *= base;
  }
  return result;
}

unsigned FF::degree() const {
  FF y = *this;
  for (unsigned d = 1; d <= ctx_->k(); ++d) {
    y = y.frobenius();
    if (y == *this) return d;
  }
  throw std::logic_error("element degree exceeds field degree");
}

std::string FF::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i) {
    auto c = c_[i];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << "s";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) return "0";
  return os.str();
}

bool operator==(const FF& a, const FF& b) {
  if (a.ctx_ != b.ctx_ && (!a.ctx_ || !b.ctx_ || !a.ctx_->same_as(*b.ctx_))) return false;
  return a.c_ == b.c_;
}

std::strong_ordering operator<=>(const FF& a, const FF& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;) {
    if (a.c_[i] != b.c_[i]) return a.c_[i] <=> b.c_[i];
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------- Embedding

Embedding::Embedding(FieldPtr from, FieldPtr to, FF image)
    : from_(std::move(from)), to_(std::move(to)), image_(std::move(image)) {}

Embedding Embedding::identity(FieldPtr ctx) {
  FF g = FF::generator(ctx);
  return Embedding(ctx, ctx, g);
}

Embedding Embedding::between(FieldPtr from, FieldPtr to) {
  if (from->p() != to->p()) throw std::invalid_argument("embedding across characteristics");
  if (to->k() % from->k() != 0) throw std::invalid_argument("source degree does not divide target degree");
  if (from->same_as(*to)) return identity(from);
  std::vector<FF> mod;
  for (auto c : from->modulus()) mod.emplace_back(to, static_cast<std::int64_t>(c));
  FFPoly m(to, std::move(mod));
  auto set = poly_roots(m);
  if (!set.field->same_as(*to) || set.roots.empty()) throw std::logic_error("modulus does not split in target field");
  return Embedding(from, to, set.roots.front().value);
}

FF Embedding::operator()(const FF& x) const {
  if (!x.ctx()->same_as(*from_)) throw std::invalid_argument("element is not in the embedding's source field");
  if (is_identity()) return FF::from_coords(to_, x.coords());
  // Horner in the image of s.
  FF r = FF::zero(to_);
  const auto& c = x.coords();
  for (std::size_t i = c.size(); i-- > 0;) {
    r = r * image_ + FF(to_, static_cast<std::int64_t>(c[i]));
  }
  return r;
}

std::optional<FF> Embedding::restrict(const FF& y) const {
  if (!y.ctx()->same_as(*to_)) throw std::invalid_argument("element is not in the embedding's target field");
  const unsigned k = from_->k();
  const unsigned K = to_->k();
  const std::uint64_t p = to_->p();
  // Columns: coordinates of image^i; augmented with y.
  std::vector<std::vector<std::uint64_t>> a(K, std::vector<std::uint64_t>(k + 1, 0));
  FF pw = FF::one(to_);
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned r = 0; r < K; ++r) a[r][i] = pw.coords()[r];
    pw *= image_;
  }
  for (unsigned r = 0; r < K; ++r) a[r][k] = y.coords()[r];
  auto inv = [p](std::uint64_t x) {
    std::uint64_t r = 1, b = x % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::vector<int> pivot_col;
  unsigned row = 0;
  for (unsigned col = 0; col < k && row < K; ++col) {
    unsigned sel = row;
    while (sel < K && a[sel][col] == 0) ++sel;
    if (sel == K) continue;
    std::swap(a[sel], a[row]);
    auto iv = inv(a[row][col]);
    for (auto& v : a[row]) v = v * iv % p;
    for (unsigned r = 0; r < K; ++r) {
      if (r == row || a[r][col] == 0) continue;
      auto f = a[r][col];
      for (unsigned c = 0; c <= k; ++c) a[r][c] = (a[r][c] + p * p - f * a[row][c]) % p;
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  for (unsigned r = row; r < K; ++r) {
    if (a[r][k] != 0) return std::nullopt;
  }
  std::vector<std::uint32_t> x(k, 0);
  for (unsigned r = 0; r < row; ++r) x[pivot_col[r]] = static_cast<std::uint32_t>(a[r][k]);
  return FF::from_coords(from_, std::move(x));
}

Embedding Embedding::then(const Embedding& next) const {
  if (!to_->same_as(*next.from_)) throw std::invalid_argument("embeddings do not compose");
  return Embedding(from_, next.to_, next(image_));
}

}  // namespace hahnroot

namespace hahnroot {

namespace {

/// Parses "2*s^2+s+1" into low-to-high coefficients (unreduced).
std::vector<std::int64_t> parse_s_poly(const std::string& text) {
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  }
  if (t.empty()) throw std::invalid_argument("empty field element");
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  while (i < t.size()) {
    std::int64_t sign = 1;
    if (t[i] == '+' || t[i] == '-') {
      sign = t[i] == '-' ? -1 : 1;
      ++i;
    }
    std::int64_t coef = 1;
    bool have_num = false;
    std::size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (i > start) {
      coef = std::stoll(t.substr(start, i - start));
      have_num = true;
    }
    std::size_t power = 0;
    if (i < t.size() && t[i] == '*') {
      if (!have_num) throw std::invalid_argument("bad field element '" + text + "'");
      ++i;
    }
    if (i < t.size() && t[i] == 's') {
      ++i;
      power = 1;
      if (i < t.size() && t[i] == '^') {
        ++i;
        start = i;
        while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
        if (i == start) throw std::invalid_argument("bad field element '" + text + "'");
        power = std::stoul(t.substr(start, i - start));
      }
    } else if (!have_num) {
      throw std::invalid_argument("bad field element '" + text + "'");
    }
    if (i < t.size() && t[i] != '+' && t[i] != '-') throw std::invalid_argument("bad field element '" + text + "'");
    if (out.size() <= power) out.resize(power + 1, 0);
    out[power] += sign * coef;
  }
  return out;
}

}  // namespace

FieldPtr parse_field(const std::string& description) {
  const auto bracket = description.find('[');
  if (description.rfind("F_", 0) != 0) throw std::invalid_argument("bad field '" + description + "'");
  const std::string pstr = description.substr(2, bracket == std::string::npos ? std::string::npos : bracket - 2);
  const auto p = static_cast<std::uint32_t>(std::stoul(pstr));
  if (bracket == std::string::npos) return FieldCtx::prime(p);
  const auto open = description.find('(', bracket);
  const auto close = description.rfind(')');
  if (open == std::string::npos || close == std::string::npos || close < open) {
    throw std::invalid_argument("bad field '" + description + "'");
  }
  auto coeffs = parse_s_poly(description.substr(open + 1, close - open - 1));
  std::vector<std::uint32_t> mod;
  for (auto c : coeffs) mod.push_back(static_cast<std::uint32_t>(((c % p) + p) % p));
  return FieldCtx::with_modulus(p, std::move(mod));
}

FF FF::parse(const FieldPtr& ctx, const std::string& text) {
  auto coeffs = parse_s_poly(text);
  FF s = generator(ctx);
  FF r = zero(ctx);
  for (std::size_t i = coeffs.size(); i-- > 0;) r = r * s + FF(ctx, coeffs[i]);
  return r;
}

}  // namespace hahnroot
