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

#ifndef TRACECODE_GALOIS_HPP
#define TRACECODE_GALOIS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace tracecode {

/// A field element in packed form: the base-p digits of the integer are the
/// coefficients (lowest degree first) of its polynomial representative.
using Elem = std::uint32_t;

/// Largest supported field order. Tables are dense, so this bounds memory.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

/// Arithmetic context for GF(p^e) backed by discrete log tables.
///
/// Immutable after construction and safe to share between threads. Elements
/// are plain `Elem` values; `FieldElement` wraps one with a context reference
/// when mixing contexts must be caught.
class FieldCtx {
 public:
    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return e_; }
    std::uint32_t order() const { return order_; }
    /// Monic modulus, coefficients in ascending degree (size e + 1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    /// Primitive element, i.e. a generator of the multiplicative group.
    Elem generator() const { return generator_; }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return a ^ b;
        return add_digits(a, b, 1);
    }
    Elem sub(Elem a, Elem b) const {
        if (p_ == 2) return a ^ b;
        return add_digits(a, b, p_ - 1);
    }
    Elem neg(Elem a) const { return sub(0, a); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// a^k with negative k allowed for nonzero a; 0^0 = 1.
    Elem pow(Elem a, std::int64_t k) const;
    /// x^q. q must be a power of the characteristic.
    Elem frobenius(Elem a, std::uint64_t q) const;
    /// generator^k for any k >= 0.
    Elem exp(std::uint64_t k) const { return exp_[k % (order_ - 1)]; }
    /// Discrete log base the generator. Zero has no logarithm.
    std::uint32_t log(Elem a) const;

    /// Base-p coefficients of `a`, lowest degree first, size e.
    std::vector<std::uint32_t> coefficients(Elem a) const;
    Elem from_coefficients(std::span<const std::uint32_t> coeffs) const;
    bool contains(Elem a) const { return a < order_; }

 private:
    friend std::shared_ptr<const FieldCtx> make_field(std::uint32_t p, unsigned e,
                                                      std::optional<std::vector<std::uint32_t>> modulus,
                                                      std::optional<Elem> generator);

    FieldCtx() = default;
    Elem add_digits(Elem a, Elem b, std::uint32_t scale) const;

    std::uint32_t p_ = 0;
    unsigned e_ = 0;
    std::uint32_t order_ = 0;
    std::vector<std::uint32_t> modulus_;
    Elem generator_ = 0;
    std::vector<Elem> exp_;           // length 2 * (order - 1)
    std::vector<std::uint32_t> log_;  // log_[0] unused
};

/// Builds GF(p^e). Without a modulus the lexicographically smallest primitive
/// polynomial is used (coefficient vectors compared from the x^(e-1) term
/// down), so the generator is x. A supplied modulus only needs to be
/// irreducible; the generator is then the smallest packed element of full
/// order unless `generator` pins it.
std::shared_ptr<const FieldCtx> make_field(std::uint32_t p, unsigned e,
                                           std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                                           std::optional<Elem> generator = std::nullopt);

/// Trial division against every monic polynomial of degree 1..deg/2.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

bool is_prime(std::uint64_t x);
std::vector<std::uint64_t> prime_divisors(std::uint64_t x);

/// Multiplicative order of a nonzero element.
std::uint64_t element_order(const FieldCtx& ctx, Elem a);

/// An element tagged with its context. Arithmetic between different contexts
/// throws `PreconditionError`.
class FieldElement {
 public:
    FieldElement(const FieldCtx& ctx, Elem value);

    Elem value() const { return value_; }
    const FieldCtx& ctx() const { return *ctx_; }
    bool is_zero() const { return value_ == 0; }

    FieldElement inv() const;
    FieldElement pow(std::int64_t k) const;
    FieldElement frobenius(std::uint64_t q) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
    const FieldCtx* ctx_;
    Elem value_;
};

/// alpha = generator^((order-1)/n), a primitive n-th root of unity.
FieldElement nth_root_of_unity(const FieldCtx& ctx, std::uint64_t n);

/// Returns f with q = p^f, f dividing e. Throws otherwise.
unsigned subfield_exponent(const FieldCtx& ctx, std::uint64_t q);

/// An F_q-basis of the subfield F_{q^s} of the context field.
struct SubfieldBasis {
    std::uint64_t base_size = 0;  // q
    unsigned sub_degree = 0;      // s
    std::vector<Elem> elements;
};

/// {1, w, ..., w^(s-1)} with w = generator^((q^m-1)/(q^s-1)).
SubfieldBasis subfield_power_basis(const FieldCtx& ctx, std::uint64_t q, unsigned s);

/// Validates membership in F_{q^s} and F_q-independence of `elements`.
SubfieldBasis make_subfield_basis(const FieldCtx& ctx, std::uint64_t q, unsigned s, std::vector<Elem> elements);

/// Dimension over F_q of the F_q-span of `elements`.
std::size_t rank_over_subfield(const FieldCtx& ctx, std::uint64_t q, std::span<const Elem> elements);

/// F_q realized inside the context field as the fixed set of x -> x^q, with
/// symbols numbered by coordinates in the power basis {1, w, ..., w^(f-1)}
/// over F_p (w generating F_q^*). Symbol index digits are those coordinates in
/// base p, so symbol addition is digit-wise.
class SubfieldEmbedding {
 public:
    SubfieldEmbedding(std::shared_ptr<const FieldCtx> ctx, std::uint64_t q);

    const std::shared_ptr<const FieldCtx>& field() const { return ctx_; }
    std::uint32_t size() const { return q_; }
    Elem embed(std::uint32_t symbol) const { return embedded_[symbol]; }
    /// Symbol of `a`, or nullopt when a^q != a.
    std::optional<std::uint32_t> project(Elem a) const;

 private:
    std::shared_ptr<const FieldCtx> ctx_;
    std::uint32_t q_;
    std::uint32_t stride_;                 // (order-1)/(q-1)
    std::vector<Elem> embedded_;           // symbol -> element
    std::vector<std::uint32_t> by_power_;  // t -> symbol of w^t
};

}  // namespace tracecode

#endif
