#include "ultrazeta/field_scalar.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "ultrazeta/errors.hpp"

namespace ultrazeta {

FieldScalar FieldScalar::zero(FieldSpec field) {
  FieldScalar x;
  x.field_ = field;
  return x;
}

FieldScalar FieldScalar::from_integer(FieldSpec field, const Integer& v) {
  FieldScalar x = zero(field);
  if (field.kind == FieldKind::Qp) {
    x.r_ = v;
  } else {
    x.c_ = {static_cast<unsigned>(mpz_fdiv_ui(v.get_mpz_t(), field.p))};
    x.trim();
  }
  return x;
}

FieldScalar FieldScalar::from_digits(FieldSpec field, long low, const std::vector<unsigned>& digits) {
  FieldScalar x = zero(field);
  if (field.kind == FieldKind::Qp) {
    Integer acc = 0;
    for (std::size_t i = digits.size(); i-- > 0;) acc = acc * field.p + digits[i];
    x.r_ = Rational(acc) * q_pow(field.p, low);
  } else {
    x.low_ = low;
    x.c_ = digits;
    x.trim();
  }
  return x;
}

FieldScalar FieldScalar::pi_power(FieldSpec field, long k) { return from_digits(field, k, {1}); }

bool FieldScalar::is_zero() const { return field_.kind == FieldKind::Qp ? r_ == 0 : c_.empty(); }

std::optional<long> FieldScalar::ord() const {
  if (is_zero()) return std::nullopt;
  if (field_.kind == FieldKind::Qp) return ord_p(r_, field_.p);
  return low_;
}

Rational FieldScalar::char_fraction() const {
  if (is_zero()) return Rational(0);
  const unsigned p = field_.p;
  if (field_.kind == FieldKind::LaurentFp) {
    if (low_ > -1 || low_ + static_cast<long>(c_.size()) <= -1) return Rational(0);
    return Rational(c_[static_cast<std::size_t>(-1 - low_)], p);
  }
  Integer den = r_.get_den();
  Integer pk = 1;
  while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
    den /= p;
    pk *= p;
  }
  if (pk == 1) return Rational(0);
  Integer inv, c;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pk.get_mpz_t());
  c = Integer(r_.get_num()) * inv;
  mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
  Rational out(c, pk);
  out.canonicalize();
  return out;
}

void FieldScalar::trim() {
  std::size_t first = 0;
  while (first < c_.size() && c_[first] == 0) ++first;
  if (first == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  low_ += static_cast<long>(first);
  c_.erase(c_.begin(), c_.begin() + static_cast<long>(first));
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FieldScalar operator+(const FieldScalar& a, const FieldScalar& b) {
  if (a.field_.kind == FieldKind::Qp) {
    FieldScalar r = FieldScalar::zero(a.field_);
    r.r_ = a.r_ + b.r_;
    return r;
  }
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const unsigned p = a.field_.p;
  long low = std::min(a.low_, b.low_);
  long high = std::max(a.low_ + static_cast<long>(a.c_.size()), b.low_ + static_cast<long>(b.c_.size()));
  FieldScalar r = FieldScalar::zero(a.field_);
  r.low_ = low;
  r.c_.assign(static_cast<std::size_t>(high - low), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) r.c_[static_cast<std::size_t>(a.low_ - low) + i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) {
    unsigned& slot = r.c_[static_cast<std::size_t>(b.low_ - low) + i];
    slot = (slot + b.c_[i]) % p;
  }
  for (unsigned& v : r.c_) v %= p;
  r.trim();
  return r;
}

FieldScalar operator-(const FieldScalar& a, const FieldScalar& b) {
  if (a.field_.kind == FieldKind::Qp) {
    FieldScalar r = FieldScalar::zero(a.field_);
    r.r_ = a.r_ - b.r_;
    return r;
  }
  FieldScalar nb = b;
  for (unsigned& v : nb.c_) v = (a.field_.p - v) % a.field_.p;
  return a + nb;
}

FieldScalar operator*(const FieldScalar& a, const FieldScalar& b) {
  FieldScalar r = FieldScalar::zero(a.field_);
  if (a.field_.kind == FieldKind::Qp) {
    r.r_ = a.r_ * b.r_;
    return r;
  }
  if (a.is_zero() || b.is_zero()) return r;
  const unsigned long p = a.field_.p;
  r.low_ = a.low_ + b.low_;
  std::vector<unsigned long> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] = (acc[i + j] + 1UL * a.c_[i] * b.c_[j]) % p;
  r.c_.assign(acc.begin(), acc.end());
  r.trim();
  return r;
}

FieldScalar evaluate(const IntPolynomial& h, const std::vector<FieldScalar>& x) {
  const FieldSpec field = x.empty() ? FieldSpec{} : x.front().field();
  unsigned deg = h.degree();
  std::vector<std::vector<FieldScalar>> powers(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    powers[i].push_back(FieldScalar::from_integer(field, 1));
    for (unsigned k = 1; k <= deg; ++k) powers[i].push_back(powers[i].back() * x[i]);
  }
  FieldScalar total = FieldScalar::zero(field);
  for (auto& [e, c] : h.terms()) {
    FieldScalar t = FieldScalar::from_integer(field, c);
    if (t.is_zero()) continue;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (e[i] > 0) t = t * powers[i][e[i]];
    total = total + t;
  }
  return total;
}

long box_level_sum(const Box& box) {
  long s = 0;
  for (long l : box.level) s += l;
  return s;
}

std::vector<Box> split_box(const Box& box, int var) {
  const FieldSpec field = box.center[static_cast<std::size_t>(var)].field();
  std::vector<Box> out;
  out.reserve(field.p);
  long k = box.level[static_cast<std::size_t>(var)];
  for (unsigned d = 0; d < field.p; ++d) {
    Box child = box;
    if (d != 0) child.center[static_cast<std::size_t>(var)] = box.center[static_cast<std::size_t>(var)] + FieldScalar::from_digits(field, k, {d});
    child.level[static_cast<std::size_t>(var)] = k + 1;
    out.push_back(std::move(child));
  }
  return out;
}

TaylorData::TaylorData(const IntPolynomial& h) : h_(h) {
  for (const Exponent& beta : derivative_multi_indices(h.n(), h.degree())) {
    IntPolynomial d = h.hasse_derivative(beta);
    if (d.is_zero()) continue;
    betas_.push_back(beta);
    derivs_.push_back(std::move(d));
  }
}

BoxClass classify_box(const TaylorData& data, const Box& box) {
  constexpr long kInf = std::numeric_limits<long>::max();
  auto value_ord = evaluate(data.polynomial(), box.center).ord();
  long ord_a = value_ord ? *value_ord : kInf;
  long e1 = kInf, e2 = kInf;
  std::vector<long> coef_ord(data.betas().size(), kInf);
  for (std::size_t b = 0; b < data.betas().size(); ++b) {
    auto o = evaluate(data.derivatives()[b], box.center).ord();
    if (!o) continue;
    const Exponent& beta = data.betas()[b];
    long shift = 0;
    unsigned total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
      shift += static_cast<long>(beta[i]) * box.level[i];
      total += beta[i];
    }
    coef_ord[b] = *o + shift;
    (total == 1 ? e1 : e2) = std::min(total == 1 ? e1 : e2, coef_ord[b]);
  }
  long nonconst = std::min(e1, e2);
  if (nonconst == kInf) {
    if (ord_a == kInf) throw ValidationError("polynomial vanishes identically");
    return {BoxStatus::Constant, ord_a, ord_a, 0};
  }
  if (ord_a < nonconst) return {BoxStatus::Constant, ord_a, ord_a, 0};
  if (e1 < e2) {
    int var = 0;
    for (std::size_t b = 0; b < data.betas().size(); ++b) {
      if (coef_ord[b] != e1) continue;
      const Exponent& beta = data.betas()[b];
      if (std::accumulate(beta.begin(), beta.end(), 0U) != 1) continue;
      var = static_cast<int>(std::find(beta.begin(), beta.end(), 1U) - beta.begin());
      break;
    }
    return {BoxStatus::Hensel, e1, e1, var};
  }
  // Refine the coarsest coordinate occurring in a dominant coefficient.
  int var = -1;
  for (std::size_t b = 0; b < data.betas().size(); ++b) {
    if (coef_ord[b] != nonconst) continue;
    const Exponent& beta = data.betas()[b];
    for (std::size_t i = 0; i < beta.size(); ++i) {
      if (beta[i] == 0) continue;
      if (var < 0 || box.level[i] < box.level[static_cast<std::size_t>(var)]) var = static_cast<int>(i);
    }
  }
  return {BoxStatus::Split, 0, std::min(ord_a, nonconst), var};
}

}  // namespace ultrazeta
