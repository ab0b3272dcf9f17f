#include "mdsconv/galois.hpp"

#include <numeric>

namespace mdsconv {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::ReducibleModulus: return "ReducibleModulus";
        case ErrorCode::DegreeMismatch: return "DegreeMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::FieldMismatch: return "FieldMismatch";
        case ErrorCode::NotPrimitive: return "NotPrimitive";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::DuplicateRoots: return "DuplicateRoots";
        case ErrorCode::DuplicatePoints: return "DuplicatePoints";
        case ErrorCode::ZeroMultiplier: return "ZeroMultiplier";
        case ErrorCode::SearchBudgetExceeded: return "SearchBudgetExceeded";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::RowCountExceeded: return "RowCountExceeded";
        case ErrorCode::PropertyViolation: return "PropertyViolation";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::NotMaximalDegreeRow: return "NotMaximalDegreeRow";
        case ErrorCode::ParityConditionViolated: return "ParityConditionViolated";
        case ErrorCode::OddFieldSize: return "OddFieldSize";
        case ErrorCode::InternalInvariant: return "InternalInvariant";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

constexpr Elem kMaxOrder = 1u << 16;

// Polynomials over F_p with unsigned coefficients, ascending.
using PPoly = std::vector<unsigned>;

void trim_p(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod_p(unsigned a, unsigned p) {
    // p is prime, so a^(p-2).
    unsigned long long r = 1, b = a % p;
    for (unsigned e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return static_cast<unsigned>(r);
}

PPoly rem_p(PPoly a, const PPoly& b, unsigned p) {
    trim_p(a);
    const int db = static_cast<int>(b.size()) - 1;
    const unsigned lead_inv = inv_mod_p(b.back(), p);
    while (static_cast<int>(a.size()) - 1 >= db) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const unsigned c = a.back() * lead_inv % p;
        for (int i = 0; i <= db; ++i) a[shift + i] = (a[shift + i] + p - c * b[i] % p) % p;
        trim_p(a);
    }
    return a;
}

std::vector<unsigned> digits_of(unsigned long long enc, unsigned p, unsigned count) {
    std::vector<unsigned> d(count, 0);
    for (unsigned i = 0; i < count; ++i) {
        d[i] = static_cast<unsigned>(enc % p);
        enc /= p;
    }
    return d;
}

}  // namespace

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::optional<std::pair<unsigned, unsigned>> prime_power(unsigned q) {
    if (q < 2) return std::nullopt;
    unsigned p = 2;
    while (q % p != 0) ++p;
    unsigned m = 0;
    unsigned r = q;
    while (r % p == 0) {
        r /= p;
        ++m;
    }
    if (r != 1) return std::nullopt;
    return std::make_pair(p, m);
}

bool is_irreducible_mod_p(const std::vector<unsigned>& poly, unsigned p) {
    PPoly f = poly;
    trim_p(f);
    const int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1) return false;
    for (int d = 1; d <= deg / 2; ++d) {
        unsigned long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (unsigned long long enc = 0; enc < count; ++enc) {
            PPoly g = digits_of(enc, p, d);
            g.push_back(1);
            if (rem_p(f, g, p).empty()) return false;
        }
    }
    return true;
}

Field::Field(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus, FieldOptions options)
    : p_(p), m_(m) {
    require(is_prime(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    require(m >= 1, ErrorCode::InvalidParams, "extension degree must be >= 1");
    unsigned long long q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        require(q <= kMaxOrder, ErrorCode::InvalidParams, "field order above 2^16 is not supported");
    }
    q_ = static_cast<Elem>(q);

    if (modulus) {
        PPoly mod = *modulus;
        require(mod.size() == m + 1 && mod.back() != 0, ErrorCode::DegreeMismatch,
                "modulus degree must equal m = " + std::to_string(m));
        for (unsigned c : mod) require(c < p, ErrorCode::InvalidParams, "modulus coefficient outside F_p");
        require(mod.back() == 1, ErrorCode::InvalidParams, "modulus must be monic");
        require(is_irreducible_mod_p(mod, p), ErrorCode::ReducibleModulus, "modulus is reducible over F_p");
        modulus_ = std::move(mod);
    } else {
        // Smallest integer encoding sum c_i p^i among monic irreducibles.
        for (unsigned long long enc = q; enc < 2 * q; ++enc) {
            PPoly cand = digits_of(enc, p, m + 1);
            if (is_irreducible_mod_p(cand, p)) {
                modulus_ = std::move(cand);
                break;
            }
        }
    }

    if (options.tables) build_tables();

    // Smallest encoding with full multiplicative order.
    theta_ = 1;
    for (Elem a = 1; a < q_; ++a) {
        if (order_of(a) == q_ - 1) {
            theta_ = a;
            break;
        }
    }
    if (options.tables) {
        // Re-base the log tables on theta so log_[theta] == 1.
        exp_.assign(2 * (q_ - 1), 0);
        log_.assign(q_, 0);
        Elem x = 1;
        for (Elem i = 0; i < q_ - 1; ++i) {
            exp_[i] = exp_[i + q_ - 1] = x;
            log_[x] = i;
            x = mul_reference(x, theta_);
        }
        if (q_ <= 256) {
            mul_.assign(q_ * q_, 0);
            for (Elem a = 1; a < q_; ++a)
                for (Elem b = 1; b < q_; ++b) mul_[a * q_ + b] = exp_[log_[a] + log_[b]];
        }
    }
}

void Field::build_tables() {
    if (q_ <= 256) {
        neg_.assign(q_, 0);
        for (Elem a = 0; a < q_; ++a) neg_[a] = (p_ == 2) ? a : add_digits(0, a, true);
        add_.assign(q_ * q_, 0);
        for (Elem a = 0; a < q_; ++a)
            for (Elem b = 0; b < q_; ++b) add_[a * q_ + b] = (p_ == 2) ? (a ^ b) : add_digits(a, b, false);
    }
}

Elem Field::add_digits(Elem a, Elem b, bool subtract) const noexcept {
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        const unsigned da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        const unsigned d = subtract ? (da + p_ - db) % p_ : (da + db) % p_;
        r += d * scale;
        scale *= p_;
    }
    return r;
}

Elem Field::mul_reference(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    const auto da = digits_of(a, p_, m_), db = digits_of(b, p_, m_);
    PPoly prod(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i)
        for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    const PPoly r = rem_p(prod, modulus_, p_);
    Elem enc = 0, scale = 1;
    for (unsigned c : r) {
        enc += c * scale;
        scale *= p_;
    }
    return enc;
}

Elem Field::inv(Elem a) const {
    require(a != 0, ErrorCode::DivisionByZero, "inverse of zero");
    if (!exp_.empty()) return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
    return pow(a, static_cast<std::int64_t>(q_) - 2);
}

Elem Field::pow(Elem a, std::int64_t e) const {
    if (a == 0) {
        require(e >= 0, ErrorCode::DivisionByZero, "negative power of zero");
        return e == 0 ? 1 : 0;
    }
    const std::int64_t n = q_ - 1;
    std::int64_t r = e % n;
    if (r < 0) r += n;
    if (!exp_.empty()) return exp_[(static_cast<std::uint64_t>(log_[a]) * r) % n];
    Elem acc = 1, base = a;
    for (auto k = static_cast<std::uint64_t>(r); k; k >>= 1) {
        if (k & 1) acc = mul_reference(acc, base);
        base = mul_reference(base, base);
    }
    return acc;
}

std::uint64_t Field::order_of(Elem a) const {
    require(a != 0, ErrorCode::DivisionByZero, "order of zero");
    const std::uint64_t n = q_ - 1;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0 && pow(a, static_cast<std::int64_t>(d)) == 1) return d;
    return n;
}

std::vector<unsigned> Field::coords(Elem a) const { return digits_of(a, p_, m_); }

Elem Field::from_coords(const std::vector<unsigned>& c) const {
    require(c.size() <= m_, ErrorCode::InvalidParams, "too many coordinates");
    Elem enc = 0, scale = 1;
    for (unsigned d : c) {
        require(d < p_, ErrorCode::InvalidParams, "coordinate outside F_p");
        enc += d * scale;
        scale *= p_;
    }
    return enc;
}

std::string Field::render(Elem a) const {
    if (m_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    std::string out;
    const auto c = coords(a);
    for (unsigned i = 0; i < m_; ++i) {
        if (c[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) out += std::to_string(c[i]);
        out += "t";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

FieldPtr make_field(unsigned p, unsigned m, std::optional<std::vector<unsigned>> modulus, FieldOptions options) {
    return std::make_shared<const Field>(p, m, std::move(modulus), options);
}

FieldPtr make_field_of_order(unsigned q, FieldOptions options) {
    const auto pm = prime_power(q);
    require(pm.has_value(), ErrorCode::InvalidParams, std::to_string(q) + " is not a prime power");
    return make_field(pm->first, pm->second, std::nullopt, options);
}

Element::Element(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
    require(field_ != nullptr, ErrorCode::InvalidParams, "null field");
    require(field_->contains(value_), ErrorCode::InvalidParams, "encoding outside the field");
}

void Element::check_same(const Element& o) const {
    require(field_->same_as(*o.field_), ErrorCode::FieldMismatch, "operands belong to different fields");
}

Element Element::operator+(const Element& o) const {
    check_same(o);
    return {field_, field_->add(value_, o.value_)};
}

Element Element::operator-(const Element& o) const {
    check_same(o);
    return {field_, field_->sub(value_, o.value_)};
}

Element Element::operator*(const Element& o) const {
    check_same(o);
    return {field_, field_->mul(value_, o.value_)};
}

Element Element::operator/(const Element& o) const {
    check_same(o);
    return {field_, field_->div(value_, o.value_)};
}

// ---------------------------------------------------------------------------

ExtField::ExtField(FieldPtr base, ExtFieldOptions options) : base_(std::move(base)) {
    require(base_ != nullptr, ErrorCode::InvalidParams, "null base field");
    const Elem q = base_->q();
    require(static_cast<unsigned long long>(q) * q <= kMaxOrder, ErrorCode::InvalidParams,
            "extension order above 2^16 is not supported");
    order_ = q * q;

    // t^2 + c1 t + c0 is irreducible iff it has no root in the base field.
    auto irreducible = [&](Elem c0, Elem c1) {
        for (Elem x = 0; x < q; ++x) {
            const Elem v = base_->add(base_->add(base_->mul(x, x), base_->mul(c1, x)), c0);
            if (v == 0) return false;
        }
        return true;
    };
    if (options.modulus) {
        const auto [c0, c1] = *options.modulus;
        require(c0 < q && c1 < q, ErrorCode::InvalidParams, "modulus coefficient outside base field");
        require(irreducible(c0, c1), ErrorCode::ReducibleModulus, "quadratic modulus has a root in the base field");
        modulus_ = {c0, c1};
    } else {
        bool found = false;
        for (Elem enc = 0; enc < q * q && !found; ++enc) {
            const Elem c0 = enc % q, c1 = enc / q;
            if (irreducible(c0, c1)) {
                modulus_ = {c0, c1};
                found = true;
            }
        }
    }

    if (options.theta_ext) {
        const Elem t = *options.theta_ext;
        require(t < order_ && t != 0, ErrorCode::NotPrimitive, "theta_ext override outside the field or zero");
        require(order_of(t) == order_ - 1, ErrorCode::NotPrimitive, "theta_ext override is not primitive");
        theta_ = t;
    } else {
        for (Elem x = 1; x < order_; ++x) {
            if (order_of(x) == order_ - 1) {
                theta_ = x;
                break;
            }
        }
    }
    if (options.tables) build_tables();
    beta_ = pow(theta_, static_cast<std::int64_t>(q) - 1);
}

void ExtField::build_tables() {
    exp_.assign(2 * (order_ - 1), 0);
    log_.assign(order_, 0);
    Elem x = 1;
    for (Elem i = 0; i < order_ - 1; ++i) {
        exp_[i] = exp_[i + order_ - 1] = x;
        log_[x] = i;
        x = mul_reference(x, theta_);
    }
}

Elem ExtField::add(Elem x, Elem y) const noexcept {
    const auto [a, b] = decompose(x);
    const auto [c, d] = decompose(y);
    return compose(base_->add(a, c), base_->add(b, d));
}

Elem ExtField::sub(Elem x, Elem y) const noexcept {
    const auto [a, b] = decompose(x);
    const auto [c, d] = decompose(y);
    return compose(base_->sub(a, c), base_->sub(b, d));
}

Elem ExtField::neg(Elem x) const noexcept {
    const auto [a, b] = decompose(x);
    return compose(base_->neg(a), base_->neg(b));
}

Elem ExtField::mul_reference(Elem x, Elem y) const noexcept {
    const Field& f = *base_;
    const auto [a, b] = decompose(x);
    const auto [c, d] = decompose(y);
    // e^2 = -c1 e - c0
    const Elem bd = f.mul(b, d);
    const Elem re = f.sub(f.mul(a, c), f.mul(bd, modulus_[0]));
    const Elem im = f.sub(f.add(f.mul(a, d), f.mul(b, c)), f.mul(bd, modulus_[1]));
    return compose(re, im);
}

Elem ExtField::inv(Elem x) const {
    require(x != 0, ErrorCode::DivisionByZero, "inverse of zero");
    if (!exp_.empty()) return exp_[(order_ - 1 - log_[x]) % (order_ - 1)];
    return pow(x, static_cast<std::int64_t>(order_) - 2);
}

Elem ExtField::pow(Elem x, std::int64_t e) const {
    if (x == 0) {
        require(e >= 0, ErrorCode::DivisionByZero, "negative power of zero");
        return e == 0 ? 1 : 0;
    }
    const std::int64_t n = order_ - 1;
    std::int64_t r = e % n;
    if (r < 0) r += n;
    if (!exp_.empty()) return exp_[(static_cast<std::uint64_t>(log_[x]) * r) % n];
    Elem acc = 1, base = x;
    for (auto k = static_cast<std::uint64_t>(r); k; k >>= 1) {
        if (k & 1) acc = mul_reference(acc, base);
        base = mul_reference(base, base);
    }
    return acc;
}

std::uint64_t ExtField::order_of(Elem x) const {
    require(x != 0, ErrorCode::DivisionByZero, "order of zero");
    const std::uint64_t n = order_ - 1;
    for (std::uint64_t d = 1; d <= n; ++d)
        if (n % d == 0 && pow(x, static_cast<std::int64_t>(d)) == 1) return d;
    return n;
}

std::string ExtField::render(Elem x) const {
    const auto [a, b] = decompose(x);
    if (b == 0) return base_->render(a);
    const std::string eb = (b == 1) ? "e" : "(" + base_->render(b) + ")e";
    if (a == 0) return eb;
    return base_->render(a) + "+" + eb;
}

ExtFieldPtr make_ext_field(FieldPtr base, ExtFieldOptions options) {
    return std::make_shared<const ExtField>(std::move(base), options);
}

}  // namespace mdsconv
