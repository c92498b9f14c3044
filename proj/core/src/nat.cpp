#include "truthlab/nat.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace truthlab {

Nat::Nat(uint64_t v) {
  if (v) limbs_.push_back(static_cast<uint32_t>(v));
  if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
}

void Nat::normalize() {
  while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

size_t Nat::bit_length() const {
  if (limbs_.empty()) return 0;
  uint32_t top = limbs_.back();
  size_t b = 0;
  while (top) {
    ++b;
    top >>= 1;
  }
  return (limbs_.size() - 1) * 32 + b;
}

bool Nat::bit(size_t i) const {
  size_t limb = i / 32;
  if (limb >= limbs_.size()) return false;
  return (limbs_[limb] >> (i % 32)) & 1u;
}

std::optional<uint64_t> Nat::to_u64() const {
  if (limbs_.size() > 2) return std::nullopt;
  uint64_t v = 0;
  if (limbs_.size() > 1) v = static_cast<uint64_t>(limbs_[1]) << 32;
  if (!limbs_.empty()) v |= limbs_[0];
  return v;
}

std::strong_ordering Nat::operator<=>(const Nat& o) const {
  if (limbs_.size() != o.limbs_.size())
    return limbs_.size() <=> o.limbs_.size();
  for (size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
  }
  return std::strong_ordering::equal;
}

Nat& Nat::operator+=(const Nat& o) {
  uint64_t carry = 0;
  size_t n = std::max(limbs_.size(), o.limbs_.size());
  limbs_.resize(n, 0);
  for (size_t i = 0; i < n; ++i) {
    uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
    limbs_[i] = static_cast<uint32_t>(s);
    carry = s >> 32;
  }
  if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
  return *this;
}

Nat& Nat::operator-=(const Nat& o) {
  assert(*this >= o && "Nat subtraction would underflow");
  int64_t borrow = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    int64_t d = static_cast<int64_t>(limbs_[i]) - borrow -
                (i < o.limbs_.size() ? o.limbs_[i] : 0);
    if (d < 0) {
      d += (int64_t{1} << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<uint32_t>(d);
  }
  assert(borrow == 0);
  normalize();
  return *this;
}

Nat Nat::operator+(const Nat& o) const {
  Nat r = *this;
  r += o;
  return r;
}

Nat Nat::operator-(const Nat& o) const {
  Nat r = *this;
  r -= o;
  return r;
}

Nat Nat::operator*(const Nat& o) const {
  if (is_zero() || o.is_zero()) return Nat{};
  Nat r;
  r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t carry = 0;
    for (size_t j = 0; j < o.limbs_.size(); ++j) {
      uint64_t cur = r.limbs_[i + j] +
                     static_cast<uint64_t>(limbs_[i]) * o.limbs_[j] + carry;
      r.limbs_[i + j] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
    }
    size_t k = i + o.limbs_.size();
    while (carry) {
      uint64_t cur = r.limbs_[k] + carry;
      r.limbs_[k] = static_cast<uint32_t>(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  r.normalize();
  return r;
}

Nat Nat::operator<<(size_t bits) const {
  if (is_zero()) return Nat{};
  size_t limbshift = bits / 32, s = bits % 32;
  Nat r;
  r.limbs_.assign(limbs_.size() + limbshift + 1, 0);
  for (size_t i = 0; i < limbs_.size(); ++i) {
    uint64_t v = static_cast<uint64_t>(limbs_[i]) << s;
    r.limbs_[i + limbshift] |= static_cast<uint32_t>(v);
    r.limbs_[i + limbshift + 1] |= static_cast<uint32_t>(v >> 32);
  }
  r.normalize();
  return r;
}

Nat Nat::operator>>(size_t bits) const {
  size_t limbshift = bits / 32, s = bits % 32;
  if (limbshift >= limbs_.size()) return Nat{};
  Nat r;
  r.limbs_.assign(limbs_.size() - limbshift, 0);
  for (size_t i = 0; i < r.limbs_.size(); ++i) {
    uint64_t v = limbs_[i + limbshift] >> s;
    if (s && i + limbshift + 1 < limbs_.size())
      v |= static_cast<uint64_t>(limbs_[i + limbshift + 1]) << (32 - s);
    r.limbs_[i] = static_cast<uint32_t>(v);
  }
  r.normalize();
  return r;
}

void Nat::divmod(const Nat& a, const Nat& b, Nat& q, Nat& r) {
  if (b.is_zero()) throw std::domain_error("Nat division by zero");
  if (a < b) {
    q = Nat{};
    r = a;
    return;
  }
  // small-divisor fast path
  if (b.limbs_.size() <= 2) {
    uint64_t d = *b.to_u64();
    Nat quot;
    quot.limbs_.assign(a.limbs_.size(), 0);
    unsigned __int128 rem = 0;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
      unsigned __int128 cur = (rem << 32) | a.limbs_[i];
      quot.limbs_[i] = static_cast<uint32_t>(cur / d);
      rem = cur % d;
    }
    quot.normalize();
    q = std::move(quot);
    r = Nat{static_cast<uint64_t>(rem)};
    return;
  }
  // Knuth algorithm D, base 2^32
  size_t shift = 0;
  {
    uint32_t top = b.limbs_.back();
    while (!(top & 0x80000000u)) {
      top <<= 1;
      ++shift;
    }
  }
  Nat bn = b << shift;
  Nat an = a << shift;
  const size_t n = bn.limbs_.size();
  std::vector<uint32_t> u = an.limbs_;
  u.push_back(0);
  const size_t m = u.size() - 1 - n;
  std::vector<uint32_t> quot(m + 1, 0);
  const uint64_t base = uint64_t{1} << 32;
  for (size_t j = m + 1; j-- > 0;) {
    uint64_t top = (uint64_t{u[j + n]} << 32) | u[j + n - 1];
    uint64_t qhat = top / bn.limbs_[n - 1];
    uint64_t rhat = top % bn.limbs_[n - 1];
    while (qhat >= base ||
           qhat * bn.limbs_[n - 2] > ((rhat << 32) | u[j + n - 2])) {
      --qhat;
      rhat += bn.limbs_[n - 1];
      if (rhat >= base) break;
    }
    int64_t borrow = 0;
    uint64_t carry = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t p = qhat * bn.limbs_[i] + carry;
      carry = p >> 32;
      int64_t t = int64_t{u[i + j]} - int64_t(p & 0xffffffffull) - borrow;
      u[i + j] = static_cast<uint32_t>(t);
      borrow = t < 0 ? 1 : 0;
    }
    int64_t t = int64_t{u[j + n]} - int64_t(carry) - borrow;
    u[j + n] = static_cast<uint32_t>(t);
    if (t < 0) {
      --qhat;
      uint64_t carry2 = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t s = uint64_t{u[i + j]} + bn.limbs_[i] + carry2;
        u[i + j] = static_cast<uint32_t>(s);
        carry2 = s >> 32;
      }
      u[j + n] = static_cast<uint32_t>(u[j + n] + carry2);
    }
    quot[j] = static_cast<uint32_t>(qhat);
  }
  Nat qq, rr;
  qq.limbs_ = std::move(quot);
  qq.normalize();
  rr.limbs_.assign(u.begin(), u.begin() + n);
  rr.normalize();
  q = std::move(qq);
  r = rr >> shift;
}

Nat Nat::operator/(const Nat& o) const {
  Nat q, r;
  divmod(*this, o, q, r);
  return q;
}

Nat Nat::operator%(const Nat& o) const {
  Nat q, r;
  divmod(*this, o, q, r);
  return r;
}

std::string Nat::to_decimal() const {
  if (is_zero()) return "0";
  std::string out;
  Nat cur = *this;
  const Nat chunk{1000000000u};
  while (!cur.is_zero()) {
    Nat q, r;
    divmod(cur, chunk, q, r);
    uint64_t digits = r.to_u64().value_or(0);
    std::string part = std::to_string(digits);
    if (!q.is_zero()) part = std::string(9 - part.size(), '0') + part;
    out = part + out;
    cur = std::move(q);
  }
  return out;
}

Nat Nat::from_decimal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty decimal string");
  Nat r;
  for (char c : s) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("bad digit in decimal string");
    r = r * Nat{10} + Nat{static_cast<uint64_t>(c - '0')};
  }
  return r;
}

static uint64_t isqrt_u64(uint64_t v) {
  if (v == 0) return 0;
  auto s = static_cast<uint64_t>(std::sqrt(static_cast<double>(v)));
  while (s > 0 && s > v / s) --s;
  while ((s + 1) <= v / (s + 1)) ++s;
  return s;
}

Nat isqrt(const Nat& z) {
  if (auto small = z.to_u64()) return Nat{isqrt_u64(*small)};
  // recurse on the top half of the bits: the seed then carries ~half the
  // result's bits, so one or two Newton steps at full precision finish
  size_t bl = z.bit_length();
  size_t k = (bl / 4) + 1;
  Nat x = (isqrt(z >> (2 * k)) + Nat{1}) << k;
  while (true) {
    Nat next = (x + z / x) >> 1;
    if (next >= x) break;
    x = std::move(next);
  }
  while (x * x > z) x -= Nat{1};
  return x;
}

Nat cantor_pair(const Nat& x, const Nat& y) {
  Nat w = x + y;
  return ((w * (w + Nat{1})) >> 1) + y;
}

std::pair<Nat, Nat> cantor_unpair(const Nat& z) {
  // w = floor((sqrt(8z+1) - 1) / 2), then y = z - w(w+1)/2, x = w - y
  Nat w = (isqrt((z << 3) + Nat{1}) - Nat{1}) >> 1;
  Nat t = (w * (w + Nat{1})) >> 1;
  Nat y = z - t;
  Nat x = w - y;
  return {std::move(x), std::move(y)};
}

}  // namespace truthlab
