#include "rlc/galois.hpp"

#include <algorithm>
#include <numeric>

namespace rlc {
namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Polynomials over F_p are encoded as base-p digit strings, same as field
// element indices. Degree of the zero polynomial is -1.
int poly_deg(std::uint64_t a, std::uint32_t p) {
    int d = -1;
    for (int i = 0; a; ++i, a /= p) d = i;
    return d;
}

std::uint32_t poly_coeff(std::uint64_t a, std::uint32_t p, int i) {
    for (int j = 0; j < i; ++j) a /= p;
    return static_cast<std::uint32_t>(a % p);
}

std::uint64_t poly_scale_x(std::uint64_t a, std::uint32_t p, int shift) {
    std::uint64_t s = 1;
    for (int i = 0; i < shift; ++i) s *= p;
    return a * s;
}

std::uint64_t poly_add(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
    std::uint64_t r = 0, place = 1;
    while (a || b) {
        r += ((a % p + b % p) % p) * place;
        a /= p;
        b /= p;
        place *= p;
    }
    return r;
}

std::uint64_t poly_mul_raw(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
    std::uint64_t r = 0;
    int db = poly_deg(b, p);
    for (int i = 0; i <= db; ++i) {
        std::uint32_t c = poly_coeff(b, p, i);
        if (c == 0) continue;
        std::uint64_t term = 0, place = 1;
        std::uint64_t x = a;
        while (x) {
            term += ((x % p) * c % p) * place;
            x /= p;
            place *= p;
        }
        r = poly_add(r, poly_scale_x(term, p, i), p);
    }
    return r;
}

// Remainder of a modulo a monic polynomial given by its digit encoding.
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t mod, std::uint32_t p) {
    const int dm = poly_deg(mod, p);
    int da = poly_deg(a, p);
    while (da >= dm) {
        std::uint32_t lead = poly_coeff(a, p, da);
        // a -= lead * x^(da-dm) * mod
        std::uint64_t sub = poly_scale_x(poly_mul_raw(mod, lead, p), p, da - dm);
        // subtraction = add (p-1)*sub coefficientwise
        std::uint64_t negsub = poly_mul_raw(sub, p - 1, p);
        a = poly_add(a, negsub, p);
        da = poly_deg(a, p);
    }
    return a;
}

bool poly_irreducible(std::uint64_t mod, std::uint32_t p, std::uint32_t m) {
    // Trial division by every monic polynomial of degree 1..m/2. Feasible for
    // the q <= 2^16 cap this module enforces.
    for (std::uint32_t d = 1; 2 * d <= m; ++d) {
        std::uint64_t lead = poly_scale_x(1, p, d);
        std::uint64_t count = lead; // p^d monic candidates of degree d
        for (std::uint64_t low = 0; low < count; ++low) {
            std::uint64_t cand = lead + low;
            if (poly_mod(mod, cand, p) == 0) return false;
        }
    }
    return true;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> fs;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

std::uint32_t Field::poly_mul(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t mod = 0, place = 1;
    for (std::uint32_t c : modulus_) {
        mod += static_cast<std::uint64_t>(c) * place;
        place *= p_;
    }
    std::uint64_t prod = poly_mul_raw(a, b, p_);
    return static_cast<std::uint32_t>(poly_mod(prod, mod, p_));
}

std::uint32_t Field::add_digitwise(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t r = 0, place = 1;
    while (a || b) {
        r += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return r;
}

std::uint32_t Field::neg_digitwise(std::uint32_t a) const {
    std::uint32_t r = 0, place = 1;
    while (a) {
        std::uint32_t d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * place;
        a /= p_;
        place *= p_;
    }
    return r;
}

void Field::build_tables() {
    // Multiplication during table construction goes through polynomial
    // arithmetic (prime fields use modular multiplication directly).
    auto slow_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
        if (m_ == 1) return static_cast<std::uint32_t>(std::uint64_t(a) * b % p_);
        return poly_mul(a, b);
    };

    const std::uint32_t order = q_ - 1;
    const auto factors = prime_factors(order);
    std::uint32_t gen = 0;
    for (std::uint32_t cand = 2; cand < q_ && gen == 0; ++cand) {
        bool ok = true;
        for (std::uint32_t r : factors) {
            std::uint32_t e = order / r;
            std::uint32_t acc = 1, base = cand;
            while (e) {
                if (e & 1) acc = slow_mul(acc, base);
                base = slow_mul(base, base);
                e >>= 1;
            }
            if (acc == 1) {
                ok = false;
                break;
            }
        }
        if (ok) gen = cand;
    }
    if (gen == 0) gen = 1; // q == 2: the trivial group

    exp_.assign(order, 0);
    log_.assign(q_, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < order; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = slow_mul(cur, gen);
    }

    if (p_ != 2 && m_ > 1) {
        neg_table_.assign(q_, 0);
        for (std::uint32_t a = 0; a < q_; ++a) neg_table_[a] = neg_digitwise(a);
        if (q_ <= 1024) {
            add_table_.assign(static_cast<std::size_t>(q_) * q_, 0);
            for (std::uint32_t a = 0; a < q_; ++a)
                for (std::uint32_t b = 0; b < q_; ++b)
                    add_table_[a * q_ + b] = add_digitwise(a, b);
        }
    }
}

std::shared_ptr<const Field> Field::make(std::uint32_t p) { return make(p, 1); }

std::shared_ptr<const Field> Field::make(std::uint32_t p, std::uint32_t m,
                                         std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) fail(Errc::NonPrimeCharacteristic, "p = " + std::to_string(p) + " is not prime");
    if (m < 1) fail(Errc::BadInput, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxQ) fail(Errc::FieldTooLarge, "p^m exceeds 2^16");
    }

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->m_ = m;
    f->q_ = static_cast<std::uint32_t>(q);

    if (m > 1) {
        if (modulus.empty()) {
            // Lexicographically smallest monic irreducible of degree m,
            // scanning low coefficients (c_{m-1},...,c_0) in ascending value.
            std::uint64_t lead = 1;
            for (std::uint32_t i = 0; i < m; ++i) lead *= p;
            std::uint64_t found = 0;
            for (std::uint64_t low = 0; low < lead && !found; ++low)
                if (poly_irreducible(lead + low, p, m)) found = lead + low;
            modulus.assign(m + 1, 0);
            std::uint64_t x = found;
            for (std::uint32_t i = 0; i <= m; ++i, x /= p)
                modulus[i] = static_cast<std::uint32_t>(x % p);
        } else {
            if (modulus.size() != m + 1 || modulus.back() != 1)
                fail(Errc::BadInput, "modulus must be monic of degree m");
            for (std::uint32_t c : modulus)
                if (c >= p) fail(Errc::BadInput, "modulus coefficient out of range");
            std::uint64_t enc = 0, place = 1;
            for (std::uint32_t c : modulus) {
                enc += static_cast<std::uint64_t>(c) * place;
                place *= p;
            }
            if (!poly_irreducible(enc, p, m))
                fail(Errc::ReducibleModulus, "modulus is reducible over F_p");
        }
        f->modulus_ = std::move(modulus);
    }

    f->build_tables();
    return f;
}

std::uint32_t Field::pow(std::uint32_t a, std::int64_t e) const {
    if (a == 0) {
        if (e < 0) fail(Errc::InvertZero, "0 to a negative power");
        return e == 0 ? 1 : 0;
    }
    const std::int64_t order = q_ - 1;
    std::int64_t r = e % order;
    if (r < 0) r += order;
    std::uint64_t idx = static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r) % order;
    return exp_[idx];
}

std::vector<std::uint32_t> Field::elements() const {
    std::vector<std::uint32_t> e(q_);
    std::iota(e.begin(), e.end(), 0u);
    return e;
}

} // namespace rlc
