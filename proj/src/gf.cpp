#include "covercode/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace covercode::gf {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> fs;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Dense polynomial over GF(p), coefficient i = coefficient of x^i.
using Poly = std::vector<std::uint32_t>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a*b mod f, all coefficients mod p, deg f = e, f monic.
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
    const std::size_t e = f.size() - 1;
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += std::uint64_t(a[i]) * b[j];
    }
    for (auto& c : prod) c %= p;
    // reduce top-down with x^e = -(f_0 + f_1 x + ... + f_{e-1} x^{e-1})
    for (std::size_t d = prod.size(); d-- > e;) {
        const std::uint64_t top = prod[d];
        if (!top) continue;
        prod[d] = 0;
        for (std::size_t i = 0; i < e; ++i)
            prod[d - e + i] = (prod[d - e + i] + top * (p - f[i])) % p;
    }
    Poly out;
    out.reserve(e);
    for (std::size_t i = 0; i < std::min(e, prod.size()); ++i)
        out.push_back(static_cast<std::uint32_t>(prod[i]));
    poly_trim(out);
    return out;
}

Poly poly_powmod(Poly base, std::uint64_t n, const Poly& f, std::uint32_t p) {
    Poly result{1};
    while (n) {
        if (n & 1) result = poly_mulmod(result, base, f, p);
        base = poly_mulmod(base, base, f, p);
        n >>= 1;
    }
    return result;
}

bool poly_is_one(const Poly& a) { return a.size() == 1 && a[0] == 1; }

// x has multiplicative order q-1 in GF(p)[x]/(f); this certifies at once that
// f is irreducible and that x is primitive (a quotient by a reducible modulus
// has fewer than q-1 units).
bool x_is_primitive(const Poly& f, std::uint32_t p, std::uint32_t q,
                    const std::vector<std::uint32_t>& qm1_factors) {
    const Poly x{0, 1};
    if (!poly_is_one(poly_powmod(x, q - 1, f, p))) return false;
    for (std::uint32_t ell : qm1_factors)
        if (poly_is_one(poly_powmod(x, (q - 1) / ell, f, p))) return false;
    return true;
}

}  // namespace

Elem Field::add_slow(Elem a, Elem b) const {
    // digit-wise mod p; only reached for odd p with q above the table cap
    Elem out = 0, mult = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        const Elem d = (a % p_ + b % p_) % p_;
        out += d * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

Elem Field::pow(Elem a, std::uint64_t n) const {
    if (n == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t k = (std::uint64_t(log_[a]) * (n % (q_ - 1))) % (q_ - 1);
    return exp_[static_cast<std::uint32_t>(k)];
}

std::uint32_t Field::element_order(Elem a) const {
    if (a == 0) throw std::invalid_argument("element_order: zero element");
    std::uint32_t ord = q_ - 1;
    for (std::uint32_t ell : prime_factors(q_ - 1)) {
        while (ord % ell == 0 && pow(a, ord / ell) == 1) ord /= ell;
    }
    return ord;
}

std::string Field::header() const {
    return "q " + std::to_string(p_) + "^" + std::to_string(e_);
}

Field::Field(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
    if (!is_prime(p)) throw std::invalid_argument("field_create: p = " + std::to_string(p) + " is not prime");
    if (e == 0) throw std::invalid_argument("field_create: exponent must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > kMaxOrder)
            throw std::invalid_argument("field_create: p^e exceeds the order cap 2^20");
    }
    q_ = static_cast<std::uint32_t>(q);

    const auto qm1_factors = prime_factors(q_ - 1);

    if (e_ == 1) {
        // monic x + c, scanned by ascending c; the root is -c
        std::uint32_t root = 0;
        bool found = false;
        for (std::uint32_t c = 0; c < p_ && !found; ++c) {
            const std::uint32_t r = (p_ - c) % p_;
            if (r == 0) continue;
            bool primitive = true;
            if (q_ > 2) {
                for (std::uint32_t ell : qm1_factors) {
                    // r^((q-1)/ell) via plain modular exponentiation
                    std::uint64_t acc = 1, base = r, n = (q_ - 1) / ell;
                    while (n) {
                        if (n & 1) acc = acc * base % p_;
                        base = base * base % p_;
                        n >>= 1;
                    }
                    if (acc == 1) {
                        primitive = false;
                        break;
                    }
                }
            }
            if (primitive) {
                modulus_ = {c, 1};
                root = r;
                found = true;
            }
        }
        if (!found) throw std::logic_error("field_create: no primitive root found");
        exp_.assign(q_, 0);
        log_.assign(q_, 0);
        std::uint64_t v = 1;
        for (std::uint32_t k = 0; k + 1 < q_; ++k) {
            exp_[k] = static_cast<Elem>(v);
            log_[v] = k;
            v = v * root % p_;
        }
        if (q_ > 1 && v != 1) throw std::logic_error("field_create: primitive root period mismatch");
    } else {
        // scan monic candidates x^e + sum c_i x^i by ascending digit encoding
        Poly f(e_ + 1, 0);
        f[e_] = 1;
        bool found = false;
        for (std::uint32_t code = 1; code < q_ && !found; ++code) {
            std::uint32_t c = code;
            for (std::uint32_t i = 0; i < e_; ++i) {
                f[i] = c % p_;
                c /= p_;
            }
            if (f[0] == 0) continue;  // x divides f
            if (x_is_primitive(f, p_, q_, qm1_factors)) found = true;
        }
        if (!found) throw std::logic_error("field_create: no primitive polynomial found");
        modulus_.assign(f.begin(), f.end());

        // exp table by repeated multiplication with x; encoding is base-p digits
        exp_.assign(q_, 0);
        log_.assign(q_, 0);
        const std::uint32_t top_unit = q_ / p_;  // p^{e-1}
        std::vector<std::uint32_t> digits(e_);
        std::uint32_t v = 1;
        for (std::uint32_t k = 0; k + 1 < q_; ++k) {
            if (k > 0 && v == 1) throw std::logic_error("field_create: x not primitive (table build)");
            exp_[k] = v;
            log_[v] = k;
            // v <- v*x mod f
            const std::uint32_t lead = v / top_unit;
            std::uint32_t shifted = (v - lead * top_unit) * p_;
            if (lead) {
                // subtract lead * (f_0 + f_1 x + ...)
                std::uint32_t s = shifted, mult = 1, out = 0;
                for (std::uint32_t i = 0; i < e_; ++i) {
                    const std::uint32_t d =
                        (s % p_ + (p_ - modulus_[i] % p_) * lead % p_) % p_;
                    out += d * mult;
                    s /= p_;
                    mult *= p_;
                }
                shifted = out;
            }
            v = shifted;
        }
        if (v != 1) throw std::logic_error("field_create: primitive element period mismatch");
    }

    neg_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        std::uint32_t out = 0, mult = 1, x = a;
        for (std::uint32_t i = 0; i < e_; ++i) {
            out += ((p_ - x % p_) % p_) * mult;
            x /= p_;
            mult *= p_;
        }
        neg_[a] = out;
    }
    inv_.assign(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a) inv_[a] = exp_[(q_ - 1 - log_[a]) % (q_ - 1)];

    if (p_ != 2 && q_ <= kAddTableCap) {
        add_table_.assign(std::size_t(q_) * q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b)
                add_table_[std::size_t(a) * q_ + b] = static_cast<std::uint16_t>(add_slow(a, b));
    }
}

namespace {
std::mutex g_cache_mutex;
std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> g_cache;
}  // namespace

FieldPtr field_create(std::uint32_t p, std::uint32_t e) {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto& slot = g_cache[{p, e}];
    if (!slot) slot = std::make_shared<Field>(p, e);
    return slot;
}

bool prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& e) {
    if (q < 2) return false;
    std::uint32_t n = q;
    for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            return n == 1;
        }
    }
    p = q;
    e = 1;
    return true;
}

FieldPtr field_of_order(std::uint32_t q) {
    std::uint32_t p, e;
    if (!prime_power(q, p, e))
        throw std::invalid_argument("field_of_order: " + std::to_string(q) + " is not a prime power");
    return field_create(p, e);
}

Embedding subfield_embedding(const FieldPtr& sub, const FieldPtr& sup) {
    if (sub->p() != sup->p() || sup->e() % sub->e() != 0)
        throw std::invalid_argument("subfield_embedding: order of the big field is not a power of the small one");
    const std::uint32_t q = sub->order();
    const std::uint64_t Q = sup->order();
    const std::uint64_t factor = (Q - 1) / (q - 1);

    Embedding emb;
    emb.sub = sub;
    emb.sup = sup;
    emb.index_factor = factor;
    emb.map.assign(q, 0);
    emb.map[0] = 0;

    if (q == 2) {
        emb.map[1] = 1;
        return emb;
    }

    // prime-field constants inside sup, for evaluating the sub modulus there
    std::vector<Elem> prime_const(sub->p(), 0);
    for (std::uint32_t k = 1; k < sub->p(); ++k) prime_const[k] = sup->add(prime_const[k - 1], 1);

    // image of the sub primitive element: least power g^{j*factor} that is a
    // root of the sub modulus (j runs over the subfield's exponents)
    const auto& f = sub->modulus();
    std::uint64_t root_log = 0;
    bool found = false;
    for (std::uint32_t j = 1; j < q && !found; ++j) {
        const std::uint64_t lg = (std::uint64_t(j) * factor) % (Q - 1);
        const Elem y = sup->exp(static_cast<std::uint32_t>(lg));
        // Horner
        Elem acc = prime_const[f[sub->e()] % sub->p()];
        for (std::uint32_t i = sub->e(); i-- > 0;) acc = sup->add(sup->mul(acc, y), prime_const[f[i] % sub->p()]);
        if (acc == 0) {
            root_log = lg;
            found = true;
        }
    }
    if (!found) throw std::logic_error("subfield_embedding: no root of the sub modulus in the big field");

    for (std::uint32_t k = 0; k + 1 < q; ++k) {
        const std::uint64_t lg = (root_log * k) % (Q - 1);
        emb.map[sub->exp(k)] = sup->exp(static_cast<std::uint32_t>(lg));
    }
    return emb;
}

}  // namespace covercode::gf
