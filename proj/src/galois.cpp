// Copyright 2026 The tracecode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tracecode/galois.hpp"

#include <algorithm>
#include <string>

#include "tracecode/errors.hpp"

namespace tracecode {

namespace {

using Poly = std::vector<std::uint32_t>;  // ascending coefficients mod p

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
    // Fermat; p is prime and a != 0 mod p.
    std::uint64_t result = 1, base = a % p;
    std::uint64_t k = p - 2;
    while (k > 0) {
        if (k & 1) result = result * base % p;
        base = base * base % p;
        k >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

/// Remainder of a modulo b (b nonzero, not necessarily monic).
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    const std::uint32_t lead_inv = inv_mod_prime(b.back(), p);
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        const std::uint64_t factor = std::uint64_t{a.back()} * lead_inv % p;
        for (std::size_t i = 0; i <= db; ++i) {
            const std::uint64_t sub = factor * b[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

/// Packed-integer arithmetic modulo a monic polynomial, used only while the
/// tables are being built.
class PackedRing {
 public:
    PackedRing(std::uint32_t p, Poly modulus) : p_(p), modulus_(std::move(modulus)) {
        e_ = static_cast<unsigned>(modulus_.size() - 1);
        if (p_ == 2) {
            mask_ = 0;
            for (unsigned i = 0; i <= e_; ++i) {
                if (modulus_[i]) mask_ |= std::uint64_t{1} << i;
            }
        }
    }

    Poly unpack(std::uint64_t a) const {
        Poly d(e_, 0);
        for (unsigned i = 0; i < e_; ++i) {
            d[i] = static_cast<std::uint32_t>(a % p_);
            a /= p_;
        }
        return d;
    }

    std::uint64_t pack(const Poly& d) const {
        std::uint64_t a = 0;
        for (std::size_t i = d.size(); i-- > 0;) a = a * p_ + d[i];
        return a;
    }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        if (p_ == 2) {
            std::uint64_t r = 0;
            for (unsigned i = 0; i < e_; ++i) {
                if ((b >> i) & 1) r ^= a << i;
            }
            for (int i = 2 * static_cast<int>(e_) - 2; i >= static_cast<int>(e_); --i) {
                if ((r >> i) & 1) r ^= mask_ << (i - e_);
            }
            return r;
        }
        const Poly da = unpack(a), db = unpack(b);
        Poly prod(2 * e_, 0);
        for (unsigned i = 0; i < e_; ++i) {
            if (da[i] == 0) continue;
            for (unsigned j = 0; j < e_; ++j) {
                prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
            }
        }
        Poly r = poly_mod(std::move(prod), modulus_, p_);
        r.resize(e_, 0);
        return pack(r);
    }

    std::uint64_t pow(std::uint64_t a, std::uint64_t k) const {
        std::uint64_t result = 1;
        while (k > 0) {
            if (k & 1) result = mul(result, a);
            a = mul(a, a);
            k >>= 1;
        }
        return result;
    }

 private:
    std::uint32_t p_;
    unsigned e_;
    Poly modulus_;
    std::uint64_t mask_ = 0;
};

bool has_full_order(const PackedRing& ring, std::uint64_t a, std::uint64_t group_order,
                    const std::vector<std::uint64_t>& primes) {
    if (ring.pow(a, group_order) != 1) return false;
    for (std::uint64_t r : primes) {
        if (ring.pow(a, group_order / r) == 1) return false;
    }
    return true;
}

std::uint64_t checked_power(std::uint64_t base, unsigned e) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < e; ++i) {
        v *= base;
        if (v > kMaxFieldOrder) return kMaxFieldOrder + 1;
    }
    return v;
}

}  // namespace

bool is_prime(std::uint64_t x) {
    if (x < 2) return false;
    for (std::uint64_t d = 2; d * d <= x; ++d) {
        if (x % d == 0) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t x) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            out.push_back(d);
            while (x % d == 0) x /= d;
        }
    }
    if (x > 1) out.push_back(x);
    return out;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly_in) {
    Poly poly(poly_in.begin(), poly_in.end());
    trim(poly);
    if (poly.size() < 2) return false;
    const std::size_t deg = poly.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        // Every monic divisor candidate of degree d.
        const std::uint64_t count = checked_power(p, static_cast<unsigned>(d));
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly divisor(d + 1, 0);
            std::uint64_t v = low;
            for (std::size_t i = 0; i < d; ++i) {
                divisor[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            divisor[d] = 1;
            if (poly_mod(poly, divisor, p).empty()) return false;
        }
    }
    return true;
}

std::shared_ptr<const FieldCtx> make_field(std::uint32_t p, unsigned e,
                                           std::optional<std::vector<std::uint32_t>> modulus,
                                           std::optional<Elem> generator) {
    if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not prime");
    if (e == 0) throw PreconditionError("extension degree must be positive");
    const std::uint64_t order = checked_power(p, e);
    if (order > kMaxFieldOrder) {
        throw PreconditionError("field " + std::to_string(p) + "^" + std::to_string(e) +
                                " exceeds the table limit of 2^20 elements");
    }
    const std::uint64_t group = order - 1;
    const std::vector<std::uint64_t> primes = prime_divisors(group);

    Poly mod;
    Elem gen = 0;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != e + 1 || mod.back() != 1) {
            throw PreconditionError("modulus must be monic of degree " + std::to_string(e));
        }
        for (auto c : mod) {
            if (c >= p) throw PreconditionError("modulus coefficient out of range");
        }
        if (!is_irreducible(p, mod)) throw PreconditionError("modulus is reducible");
        PackedRing ring(p, mod);
        if (generator) {
            if (*generator >= order || !has_full_order(ring, *generator, group, primes)) {
                throw PreconditionError("supplied generator is not primitive");
            }
            gen = *generator;
        } else {
            for (std::uint64_t a = 1; a < order; ++a) {
                if (has_full_order(ring, a, group, primes)) {
                    gen = static_cast<Elem>(a);
                    break;
                }
            }
        }
    } else {
        // Smallest primitive polynomial; its root x generates the group.
        bool found = false;
        for (std::uint64_t low = 0; low < order && !found; ++low) {
            Poly candidate(e + 1, 0);
            std::uint64_t v = low;
            for (unsigned i = 0; i < e; ++i) {
                candidate[i] = static_cast<std::uint32_t>(v % p);
                v /= p;
            }
            candidate[e] = 1;
            if (candidate[0] == 0) continue;
            PackedRing ring(p, candidate);
            const std::uint64_t x = e == 1 ? (p - candidate[0]) % p : p;
            if (x == 0 || !has_full_order(ring, x, group, primes)) continue;
            if (!is_irreducible(p, candidate)) continue;
            mod = candidate;
            gen = static_cast<Elem>(x);
            found = true;
        }
        if (!found) throw VerificationError("no primitive polynomial found");
        if (generator && *generator != gen) {
            PackedRing ring(p, mod);
            if (*generator >= order || !has_full_order(ring, *generator, group, primes)) {
                throw PreconditionError("supplied generator is not primitive");
            }
            gen = *generator;
        }
    }

    std::shared_ptr<FieldCtx> ctx(new FieldCtx());
    ctx->p_ = p;
    ctx->e_ = e;
    ctx->order_ = static_cast<std::uint32_t>(order);
    ctx->modulus_ = mod;
    ctx->generator_ = gen;
    ctx->exp_.assign(2 * group, 0);
    ctx->log_.assign(order, 0);
    std::vector<bool> seen(order, false);
    PackedRing ring(p, mod);
    std::uint64_t cur = 1;
    for (std::uint64_t k = 0; k < group; ++k) {
        if (cur == 0 || seen[cur]) throw VerificationError("generator does not have full order");
        seen[cur] = true;
        ctx->exp_[k] = static_cast<Elem>(cur);
        ctx->exp_[k + group] = static_cast<Elem>(cur);
        ctx->log_[cur] = static_cast<std::uint32_t>(k);
        cur = ring.mul(cur, gen);
    }
    if (cur != 1) throw VerificationError("generator power does not close the cycle");
    return ctx;
}

Elem FieldCtx::add_digits(Elem a, Elem b, std::uint32_t scale) const {
    Elem out = 0, place = 1;
    for (unsigned i = 0; i < e_; ++i) {
        const std::uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        out += place * static_cast<Elem>((da + std::uint64_t{scale} * db) % p_);
        place *= p_;
    }
    return out;
}

Elem FieldCtx::inv(Elem a) const {
    if (a == 0) throw PreconditionError("inversion of zero");
    const std::uint32_t l = log_[a];
    return exp_[(order_ - 1 - l) % (order_ - 1)];
}

Elem FieldCtx::pow(Elem a, std::int64_t k) const {
    if (a == 0) {
        if (k == 0) return 1;
        if (k < 0) throw PreconditionError("negative power of zero");
        return 0;
    }
    const std::int64_t group = order_ - 1;
    std::int64_t r = k % group;
    if (r < 0) r += group;
    const std::uint64_t l = (std::uint64_t{log_[a]} * static_cast<std::uint64_t>(r)) % group;
    return exp_[l];
}

Elem FieldCtx::frobenius(Elem a, std::uint64_t q) const {
    std::uint64_t t = q;
    while (t > 1 && t % p_ == 0) t /= p_;
    if (q == 0 || t != 1) throw PreconditionError("frobenius exponent must be a power of the characteristic");
    if (a == 0) return 0;
    const std::uint64_t group = order_ - 1;
    return exp_[(std::uint64_t{log_[a]} * (q % group)) % group];
}

std::uint32_t FieldCtx::log(Elem a) const {
    if (a == 0) throw PreconditionError("logarithm of zero");
    return log_[a];
}

std::vector<std::uint32_t> FieldCtx::coefficients(Elem a) const {
    std::vector<std::uint32_t> out(e_);
    for (unsigned i = 0; i < e_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

Elem FieldCtx::from_coefficients(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() > e_) throw PreconditionError("too many coefficients");
    Elem a = 0;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        if (coeffs[i] >= p_) throw PreconditionError("coefficient out of range");
        a = a * p_ + coeffs[i];
    }
    return a;
}

std::uint64_t element_order(const FieldCtx& ctx, Elem a) {
    if (a == 0) throw PreconditionError("zero has no multiplicative order");
    std::uint64_t order = ctx.order() - 1;
    for (std::uint64_t r : prime_divisors(order)) {
        while (order % r == 0 && ctx.pow(a, static_cast<std::int64_t>(order / r)) == 1) order /= r;
    }
    return order;
}

FieldElement::FieldElement(const FieldCtx& ctx, Elem value) : ctx_(&ctx), value_(value) {
    if (!ctx.contains(value)) throw PreconditionError("element outside its field");
}

namespace {
const FieldCtx& common_ctx(const FieldElement& a, const FieldElement& b) {
    if (&a.ctx() != &b.ctx()) throw PreconditionError("field context mismatch");
    return a.ctx();
}
}  // namespace

FieldElement FieldElement::inv() const { return {*ctx_, ctx_->inv(value_)}; }
FieldElement FieldElement::pow(std::int64_t k) const { return {*ctx_, ctx_->pow(value_, k)}; }
FieldElement FieldElement::frobenius(std::uint64_t q) const { return {*ctx_, ctx_->frobenius(value_, q)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    const auto& ctx = common_ctx(a, b);
    return {ctx, ctx.add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    const auto& ctx = common_ctx(a, b);
    return {ctx, ctx.sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    const auto& ctx = common_ctx(a, b);
    return {ctx, ctx.mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    const auto& ctx = common_ctx(a, b);
    return {ctx, ctx.div(a.value_, b.value_)};
}
bool operator==(const FieldElement& a, const FieldElement& b) { return &a.ctx() == &b.ctx() && a.value_ == b.value_; }

FieldElement nth_root_of_unity(const FieldCtx& ctx, std::uint64_t n) {
    const std::uint64_t group = ctx.order() - 1;
    if (n == 0 || group % n != 0) {
        throw PreconditionError(std::to_string(n) + " does not divide the multiplicative group order " +
                                std::to_string(group));
    }
    return {ctx, ctx.exp(group / n)};
}

unsigned subfield_exponent(const FieldCtx& ctx, std::uint64_t q) {
    unsigned f = 0;
    std::uint64_t t = q;
    while (t > 1 && t % ctx.characteristic() == 0) {
        t /= ctx.characteristic();
        ++f;
    }
    if (q < 2 || t != 1 || ctx.degree() % f != 0) {
        throw PreconditionError(std::to_string(q) + " is not a subfield size of GF(" + std::to_string(ctx.order()) +
                                ")");
    }
    return f;
}

std::size_t rank_over_subfield(const FieldCtx& ctx, std::uint64_t q, std::span<const Elem> elements) {
    const unsigned f = subfield_exponent(ctx, q);
    const std::uint32_t p = ctx.characteristic();
    const Elem u = ctx.exp((ctx.order() - 1) / (q - 1));
    // F_p-span of {a * u^t} has dimension f times the F_q-dimension.
    std::vector<std::vector<std::uint32_t>> rows;
    for (Elem a : elements) {
        Elem ut = 1;
        for (unsigned t = 0; t < f; ++t) {
            rows.push_back(ctx.coefficients(ctx.mul(a, ut)));
            ut = ctx.mul(ut, u);
        }
    }
    std::size_t rank = 0;
    const unsigned cols = ctx.degree();
    for (unsigned c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const std::uint32_t inv = inv_mod_prime(rows[rank][c], p);
        for (auto& v : rows[rank]) v = static_cast<std::uint32_t>(std::uint64_t{v} * inv % p);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const std::uint64_t factor = rows[r][c];
            for (unsigned k = 0; k < cols; ++k) {
                rows[r][k] = static_cast<std::uint32_t>((rows[r][k] + p - factor * rows[rank][k] % p) % p);
            }
        }
        ++rank;
    }
    return rank / f;
}

namespace {
std::uint64_t ipow(std::uint64_t base, unsigned e) {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < e; ++i) v *= base;
    return v;
}
}  // namespace

SubfieldBasis make_subfield_basis(const FieldCtx& ctx, std::uint64_t q, unsigned s, std::vector<Elem> elements) {
    const unsigned f = subfield_exponent(ctx, q);
    const unsigned m = ctx.degree() / f;
    if (s == 0 || m % s != 0) {
        throw PreconditionError("subfield degree " + std::to_string(s) + " does not divide " + std::to_string(m));
    }
    if (elements.size() != s) throw PreconditionError("basis must have exactly s elements");
    const std::uint64_t qs = ipow(q, s);
    for (Elem a : elements) {
        if (!ctx.contains(a) || ctx.frobenius(a, qs) != a) {
            throw PreconditionError("basis element outside GF(" + std::to_string(qs) + ")");
        }
    }
    if (rank_over_subfield(ctx, q, elements) != s) throw PreconditionError("basis elements are dependent");
    return SubfieldBasis{q, s, std::move(elements)};
}

SubfieldBasis subfield_power_basis(const FieldCtx& ctx, std::uint64_t q, unsigned s) {
    const unsigned f = subfield_exponent(ctx, q);
    const unsigned m = ctx.degree() / f;
    if (s == 0 || m % s != 0) {
        throw PreconditionError("subfield degree " + std::to_string(s) + " does not divide " + std::to_string(m));
    }
    const std::uint64_t qs = ipow(q, s);
    const Elem w = ctx.exp((ctx.order() - 1) / (qs - 1));
    std::vector<Elem> elements;
    Elem cur = 1;
    for (unsigned i = 0; i < s; ++i) {
        elements.push_back(cur);
        cur = ctx.mul(cur, w);
    }
    return make_subfield_basis(ctx, q, s, std::move(elements));
}

SubfieldEmbedding::SubfieldEmbedding(std::shared_ptr<const FieldCtx> ctx, std::uint64_t q)
    : ctx_(std::move(ctx)), q_(static_cast<std::uint32_t>(q)) {
    const unsigned f = subfield_exponent(*ctx_, q);
    const std::uint32_t p = ctx_->characteristic();
    stride_ = (ctx_->order() - 1) / (q_ - 1);
    const Elem w = ctx_->exp(stride_);
    std::vector<Elem> powers(f);
    Elem cur = 1;
    for (unsigned i = 0; i < f; ++i) {
        powers[i] = cur;
        cur = ctx_->mul(cur, w);
    }
    embedded_.assign(q_, 0);
    by_power_.assign(q_ - 1, q_);
    for (std::uint32_t sym = 0; sym < q_; ++sym) {
        Elem x = 0;
        std::uint32_t v = sym;
        for (unsigned i = 0; i < f; ++i) {
            const std::uint32_t digit = v % p;
            v /= p;
            for (std::uint32_t c = 0; c < digit; ++c) x = ctx_->add(x, powers[i]);
        }
        embedded_[sym] = x;
        if (sym == 0) continue;
        if (x == 0) throw VerificationError("subfield power basis is dependent");
        const std::uint32_t l = ctx_->log(x);
        if (l % stride_ != 0) throw VerificationError("embedded symbol outside the subfield");
        if (by_power_[l / stride_] != q_) throw VerificationError("subfield embedding is not injective");
        by_power_[l / stride_] = sym;
    }
}

std::optional<std::uint32_t> SubfieldEmbedding::project(Elem a) const {
    if (a == 0) return 0u;
    const std::uint32_t l = ctx_->log(a);
    if (l % stride_ != 0) return std::nullopt;
    return by_power_[l / stride_];
}

}  // namespace tracecode
