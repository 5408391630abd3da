#pragma once
// Table-driven arithmetic for GF(p^e), p prime, p^e <= 2^20.
//
// Element encoding: the integer v in [0, q) stands for the coefficient tuple
// (a_0, ..., a_{e-1}) of 1, x, ..., x^{e-1} via base-p digits of v (a_0 least
// significant). Addition is therefore digit-wise mod p and independent of the
// modulus polynomial; multiplication goes through discrete log/exp tables for
// a fixed primitive element.
//
// The modulus is the first monic degree-e polynomial, candidates ordered by
// the base-p integer encoding of their non-leading coefficients, whose root x
// generates the multiplicative group. That root is the primitive element all
// tables are built from, so construction is bit-deterministic for fixed (p,e).

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace covercode::gf {

using Elem = std::uint32_t;

class Field {
public:
    static constexpr std::uint64_t kMaxOrder = 1ull << 20;
    // Full q*q addition table kept when q is at most this (8 MiB of u16).
    static constexpr std::uint32_t kAddTableCap = 2048;

    Field(std::uint32_t p, std::uint32_t e);

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t order() const { return q_; }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[std::size_t(a) * q_ + b];
        return add_slow(a, b);
    }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg_[b]); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    Elem inv(Elem a) const { return inv_[a]; }
    Elem div(Elem a, Elem b) const { return mul(a, inv_[b]); }
    Elem pow(Elem a, std::uint64_t n) const;

    // a + b*c in one call; the hottest compound op in span enumeration.
    Elem axpy(Elem a, Elem b, Elem c) const { return add(a, mul(b, c)); }

    Elem exp(std::uint32_t k) const { return exp_[k % (q_ - 1)]; }
    std::uint32_t log(Elem a) const { return log_[a]; }  // a != 0
    Elem primitive() const { return exp_[1 % (q_ - 1)]; }

    // Monic modulus, coefficients c_0..c_e with c_e = 1.
    const std::vector<Elem>& modulus() const { return modulus_; }

    // Multiplicative order of a nonzero element.
    std::uint32_t element_order(Elem a) const;

    std::string header() const;  // "q <p>^<e>"

    bool operator==(const Field& o) const { return p_ == o.p_ && e_ == o.e_; }

private:
    Elem add_slow(Elem a, Elem b) const;

    std::uint32_t p_, e_, q_;
    std::vector<Elem> modulus_;
    std::vector<Elem> exp_, log_, neg_, inv_;
    std::vector<std::uint16_t> add_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Cached, shared construction; fields are immutable so sharing is safe.
FieldPtr field_create(std::uint32_t p, std::uint32_t e);
// Convenience: q must be a prime power.
FieldPtr field_of_order(std::uint32_t q);

// Factor q as p^e; returns false if q is not a prime power.
bool prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& e);

// Field homomorphism GF(q) -> GF(q^m). The image of the subfield's primitive
// element a is g^{j*(q^m-1)/(q-1)} for the least j making the image a root of
// the subfield's modulus; mapping a^k to that root's k-th power then preserves
// both operations of the canonical tables on each side.
struct Embedding {
    FieldPtr sub;
    FieldPtr sup;
    std::uint64_t index_factor;   // (q^m - 1) / (q - 1)
    std::vector<Elem> map;        // size q

    Elem operator()(Elem x) const { return map[x]; }
};

Embedding subfield_embedding(const FieldPtr& sub, const FieldPtr& sup);

}  // namespace covercode::gf
