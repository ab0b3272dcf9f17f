#pragma once

// Exact arithmetic for prime-power fields F_{p^m} and quadratic extensions
// F_{q^2} / F_q.
//
// Elements are plain integers: a field element with power-basis coordinates
// (c_0, ..., c_{m-1}) over F_p is encoded as sum c_i p^i, so 0 and 1 encode
// themselves. An extension element a + e*b (a, b in the base field, e the
// residue of the extension variable) is encoded as a + q*b, which makes the
// base field a prefix of the extension's encodings.

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mdsconv/errors.hpp"

namespace mdsconv {

using Elem = std::uint32_t;

/// Polynomial over F_p or over a field, coefficient list in ascending order.
using Poly = std::vector<Elem>;

struct FieldOptions {
    /// Build add/mul/log tables. Results are identical either way.
    bool tables = true;
};

class Field {
public:
    /// Throws NotPrime, DegreeMismatch, ReducibleModulus, InvalidParams.
    Field(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus = std::nullopt,
          FieldOptions options = {});

    unsigned p() const noexcept { return p_; }
    unsigned m() const noexcept { return m_; }
    Elem q() const noexcept { return q_; }
    Elem order() const noexcept { return q_; }
    /// Monic modulus over F_p, ascending, length m+1.
    const std::vector<unsigned>& modulus() const noexcept { return modulus_; }
    /// Primitive element: smallest encoding of multiplicative order q-1.
    Elem theta() const noexcept { return theta_; }
    bool has_tables() const noexcept { return !exp_.empty(); }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    bool contains(Elem a) const noexcept { return a < q_; }

    Elem add(Elem a, Elem b) const noexcept {
        if (!add_.empty()) return add_[a * q_ + b];
        if (p_ == 2) return a ^ b;
        return add_digits(a, b, false);
    }
    Elem sub(Elem a, Elem b) const noexcept {
        if (!add_.empty()) return add_[a * q_ + neg_[b]];
        if (p_ == 2) return a ^ b;
        return add_digits(a, b, true);
    }
    Elem neg(Elem a) const noexcept {
        if (!neg_.empty()) return neg_[a];
        if (p_ == 2) return a;
        return add_digits(0, a, true);
    }
    Elem mul(Elem a, Elem b) const noexcept {
        if (!mul_.empty()) return mul_[a * q_ + b];
        if (a == 0 || b == 0) return 0;
        if (!exp_.empty()) return exp_[log_[a] + log_[b]];
        return mul_reference(a, b);
    }
    /// Throws DivisionByZero.
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    /// Any integer exponent; negative exponents need a nonzero base.
    Elem pow(Elem a, std::int64_t e) const;
    /// Multiplicative order of a nonzero element.
    std::uint64_t order_of(Elem a) const;

    /// Polynomial multiplication modulo the modulus; never uses tables.
    Elem mul_reference(Elem a, Elem b) const noexcept;

    std::vector<unsigned> coords(Elem a) const;
    Elem from_coords(const std::vector<unsigned>& c) const;
    /// theta^i as an element.
    Elem theta_pow(std::int64_t i) const { return pow(theta_, i); }

    /// Symbolic form in the power basis, ascending: "1+t^2", "2t", "0".
    std::string render(Elem a) const;

    bool same_as(const Field& other) const noexcept {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

private:
    Elem add_digits(Elem a, Elem b, bool subtract) const noexcept;
    void build_tables();

    unsigned p_;
    unsigned m_;
    Elem q_;
    std::vector<unsigned> modulus_;
    Elem theta_ = 1;
    std::vector<Elem> exp_;  // length 2(q-1) so log sums need no reduction
    std::vector<Elem> log_;
    std::vector<Elem> add_;  // q*q, only for q <= 256
    std::vector<Elem> mul_;
    std::vector<Elem> neg_;
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus = std::nullopt,
                    FieldOptions options = {});

/// Field of order q with the default modulus; q must be a prime power.
FieldPtr make_field_of_order(unsigned q, FieldOptions options = {});

/// (p, m) with q = p^m, or nullopt if q is not a prime power.
std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned q);

bool is_prime(unsigned n);

/// Irreducibility over F_p by trial division against monic polynomials of
/// degree <= deg/2.
bool is_irreducible_mod_p(const std::vector<unsigned>& poly, unsigned p);

/// A field element bound to its field. Mixing fields throws FieldMismatch.
class Element {
public:
    Element(FieldPtr field, Elem value);

    Elem enc() const noexcept { return value_; }
    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }

    Element operator+(const Element& o) const;
    Element operator-(const Element& o) const;
    Element operator*(const Element& o) const;
    Element operator/(const Element& o) const;
    Element operator-() const { return {field_, field_->neg(value_)}; }
    Element inv() const { return {field_, field_->inv(value_)}; }
    Element pow(std::int64_t e) const { return {field_, field_->pow(value_, e)}; }

    bool operator==(const Element& o) const { return field_->same_as(*o.field_) && value_ == o.value_; }

    std::string render() const { return field_->render(value_); }

private:
    void check_same(const Element& o) const;

    FieldPtr field_;
    Elem value_;
};

struct ExtFieldOptions {
    /// Monic quadratic t^2 + c1 t + c0 given as {c0, c1}.
    std::optional<std::array<Elem, 2>> modulus;
    /// Encoding (a + q*b) of a primitive element to use instead of the default.
    std::optional<Elem> theta_ext;
    bool tables = true;
};

/// Quadratic extension F_{q^2} of a base field F_q with basis (1, e).
class ExtField {
public:
    /// Throws ReducibleModulus, NotPrimitive.
    explicit ExtField(FieldPtr base, ExtFieldOptions options = {});

    const Field& base() const noexcept { return *base_; }
    const FieldPtr& base_ptr() const noexcept { return base_; }
    Elem order() const noexcept { return order_; }
    Elem base_order() const noexcept { return base_->q(); }
    /// {c0, c1} of the modulus t^2 + c1 t + c0.
    std::array<Elem, 2> modulus() const noexcept { return modulus_; }

    Elem theta() const noexcept { return theta_; }
    /// theta^(q-1), a primitive (q+1)-th root of unity.
    Elem beta() const noexcept { return beta_; }
    /// The basis element e (residue of t).
    Elem e() const noexcept { return base_->q(); }
    bool has_tables() const noexcept { return !exp_.empty(); }

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    bool contains(Elem a) const noexcept { return a < order_; }

    Elem compose(Elem a, Elem b) const noexcept { return a + base_->q() * b; }
    std::pair<Elem, Elem> decompose(Elem x) const noexcept { return {x % base_->q(), x / base_->q()}; }
    bool in_base(Elem x) const noexcept { return x < base_->q(); }

    Elem add(Elem x, Elem y) const noexcept;
    Elem sub(Elem x, Elem y) const noexcept;
    Elem neg(Elem x) const noexcept;
    Elem mul(Elem x, Elem y) const noexcept {
        if (x == 0 || y == 0) return 0;
        if (!exp_.empty()) return exp_[log_[x] + log_[y]];
        return mul_reference(x, y);
    }
    Elem mul_reference(Elem x, Elem y) const noexcept;
    Elem inv(Elem x) const;
    Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }
    Elem pow(Elem x, std::int64_t e) const;
    std::uint64_t order_of(Elem x) const;
    /// Frobenius x -> x^q.
    Elem conj(Elem x) const { return pow(x, base_->q()); }

    /// "a+(b)e" with base-field renderings of a and b.
    std::string render(Elem x) const;

private:
    void build_tables();

    FieldPtr base_;
    Elem order_;
    std::array<Elem, 2> modulus_{};
    Elem theta_ = 0;
    Elem beta_ = 0;
    std::vector<Elem> exp_;
    std::vector<Elem> log_;
};

using ExtFieldPtr = std::shared_ptr<const ExtField>;

ExtFieldPtr make_ext_field(FieldPtr base, ExtFieldOptions options = {});

template <class F>
concept FieldLike = requires(const F& f, Elem a, Elem b, std::int64_t e) {
    { f.order() } -> std::convertible_to<Elem>;
    { f.add(a, b) } -> std::same_as<Elem>;
    { f.sub(a, b) } -> std::same_as<Elem>;
    { f.neg(a) } -> std::same_as<Elem>;
    { f.mul(a, b) } -> std::same_as<Elem>;
    { f.inv(a) } -> std::same_as<Elem>;
    { f.pow(a, e) } -> std::same_as<Elem>;
    { f.render(a) } -> std::convertible_to<std::string>;
};

// Univariate polynomials over a FieldLike. Zero polynomial is the empty list.
namespace poly {

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) {
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != 0) return static_cast<int>(i);
    return -1;
}

template <FieldLike F>
Poly add(const F& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f.add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

template <FieldLike F>
Poly sub(const F& f, const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = f.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
    trim(r);
    return r;
}

template <FieldLike F>
Poly mul(const F& f, const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
    trim(r);
    return r;
}

template <FieldLike F>
Poly scale(const F& f, const Poly& a, Elem c) {
    Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(a[i], c);
    trim(r);
    return r;
}

template <FieldLike F>
Elem eval(const F& f, const Poly& a, Elem x) {
    Elem acc = 0;
    for (std::size_t i = a.size(); i-- > 0;) acc = f.add(f.mul(acc, x), a[i]);
    return acc;
}

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
template <FieldLike F>
std::pair<Poly, Poly> divmod(const F& f, Poly a, const Poly& b) {
    const int db = degree(b);
    if (db < 0) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    trim(a);
    Poly quot;
    const Elem lead_inv = f.inv(b[db]);
    int da = degree(a);
    if (da >= db) quot.assign(da - db + 1, 0);
    while (da >= db) {
        const Elem c = f.mul(a[da], lead_inv);
        const int shift = da - db;
        quot[shift] = c;
        for (int i = 0; i <= db; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
        trim(a);
        da = degree(a);
    }
    trim(quot);
    return {quot, a};
}

/// Monic gcd; gcd(0, 0) = 0.
template <FieldLike F>
Poly gcd(const F& f, Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(f, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.empty()) return a;
    return scale(f, a, f.inv(a.back()));
}

/// Expanded product of (x - r) over the given roots.
template <FieldLike F>
Poly from_roots(const F& f, const std::vector<Elem>& roots) {
    Poly acc{1};
    for (Elem r : roots) acc = mul(f, acc, Poly{f.neg(r), 1});
    return acc;
}

}  // namespace poly

}  // namespace mdsconv
