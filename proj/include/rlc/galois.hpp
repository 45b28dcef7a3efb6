#ifndef RLC_GALOIS_HPP
#define RLC_GALOIS_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "rlc/error.hpp"

namespace rlc {

// Exact arithmetic in F_q for prime powers q = p^m <= 2^16.
//
// Elements are canonical integer indices in [0, q): index i encodes the
// polynomial whose F_p coefficients are the base-p digits of i (low digit =
// constant term), reduced modulo a monic irreducible polynomial of degree m.
// Index 0 is the additive identity and index 1 the multiplicative identity.
//
// Multiplication and inversion run off precomputed discrete-log tables over a
// fixed primitive element; addition is an XOR for characteristic 2, a modular
// add for prime fields, and a table/digitwise add otherwise. A Field is
// immutable after construction and safe to share across threads.
class Field {
  public:
    static constexpr std::uint32_t kMaxQ = 1u << 16;

    // Prime field F_p.
    static std::shared_ptr<const Field> make(std::uint32_t p);
    // Extension field F_{p^m}. The modulus, when given, lists the m+1
    // coefficients c_0..c_m of a monic irreducible polynomial over F_p
    // (c_m = 1). When omitted and m > 1, the lexicographically smallest
    // irreducible polynomial for (p, m) is used, so outputs are identical
    // in every run.
    static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t m,
                                             std::vector<std::uint32_t> modulus = {});

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    // Empty for m == 1, otherwise c_0..c_m.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        if (p_ == 2) return a ^ b;
        if (m_ == 1) {
            std::uint32_t s = a + b;
            return s >= q_ ? s - q_ : s;
        }
        if (!add_table_.empty()) return add_table_[a * q_ + b];
        return add_digitwise(a, b);
    }

    std::uint32_t neg(std::uint32_t a) const {
        if (p_ == 2) return a;
        if (m_ == 1) return a == 0 ? 0 : q_ - a;
        if (!neg_table_.empty()) return neg_table_[a];
        return neg_digitwise(a);
    }

    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        std::uint32_t s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }

    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) fail(Errc::InvertZero, "inverse of zero");
        std::uint32_t l = log_[a];
        return exp_[l == 0 ? 0 : q_ - 1 - l];
    }

    std::uint32_t pow(std::uint32_t a, std::int64_t e) const;

    // All q elements in index order 0, 1, ..., q-1.
    std::vector<std::uint32_t> elements() const;

    bool same_as(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

  private:
    Field() = default;
    void build_tables();
    std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t add_digitwise(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg_digitwise(std::uint32_t a) const;

    std::uint32_t p_ = 0, m_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, 0 <= i < q-1
    std::vector<std::uint32_t> log_;  // log_[exp_[i]] = i, log_[0] unused
    std::vector<std::uint32_t> add_table_;
    std::vector<std::uint32_t> neg_table_;
};

using FieldPtr = std::shared_ptr<const Field>;

inline void require_same_field(const Field& a, const Field& b) {
    if (!a.same_as(b)) fail(Errc::MixedFields, "operands from different fields");
}

// Convenience value type pairing an element index with its field. The bulk
// containers (Vector/Matrix) store raw indices instead.
class Element {
  public:
    Element(FieldPtr f, std::uint32_t index) : f_(std::move(f)), i_(index) {}
    std::uint32_t index() const { return i_; }
    const FieldPtr& field() const { return f_; }

    friend Element operator+(const Element& a, const Element& b) {
        require_same_field(*a.f_, *b.f_);
        return Element(a.f_, a.f_->add(a.i_, b.i_));
    }
    friend Element operator*(const Element& a, const Element& b) {
        require_same_field(*a.f_, *b.f_);
        return Element(a.f_, a.f_->mul(a.i_, b.i_));
    }
    friend Element operator-(const Element& a) { return Element(a.f_, a.f_->neg(a.i_)); }
    Element inverse() const { return Element(f_, f_->inv(i_)); }
    friend bool operator==(const Element& a, const Element& b) {
        return a.f_->same_as(*b.f_) && a.i_ == b.i_;
    }

  private:
    FieldPtr f_;
    std::uint32_t i_;
};

} // namespace rlc

#endif
