#include "mtcodes/poly.hpp"

#include <algorithm>

namespace mtcodes {

namespace {

void check_same_field(const Poly& f, const Poly& g) {
    if (!(f.field() == g.field())) raise(errc::field_mismatch, "polynomials over distinct fields");
}

}  // namespace

Poly Poly::constant(const PrimeField& f, std::int64_t c) {
    Poly p(f);
    const std::uint32_t r = f.reduce_int(c);
    if (r != 0) p.c_.push_back(static_cast<std::uint16_t>(r));
    return p;
}

Poly Poly::monomial(const PrimeField& f, std::uint32_t deg, std::int64_t c) {
    Poly p(f);
    const std::uint32_t r = f.reduce_int(c);
    if (r != 0) {
        p.c_.assign(deg + 1, 0);
        p.c_[deg] = static_cast<std::uint16_t>(r);
    }
    return p;
}

Poly Poly::binomial_xn_minus_a(const PrimeField& f, std::uint32_t n, std::uint32_t a_residue) {
    Poly p(f);
    p.c_.assign(n + 1, 0);
    p.c_[0] = static_cast<std::uint16_t>(f.neg(a_residue % f.p()));
    p.c_[n] = 1;
    p.trim();  // n = 0 with a = 1 collapses to zero
    return p;
}

Poly Poly::from_coeffs(const PrimeField& f, const std::vector<std::int64_t>& coeffs) {
    Poly p(f);
    p.c_.reserve(coeffs.size());
    for (std::int64_t v : coeffs) p.c_.push_back(static_cast<std::uint16_t>(f.reduce_int(v)));
    p.trim();
    return p;
}

Poly Poly::from_residues(const PrimeField& f, std::vector<std::uint16_t> coeffs) {
    Poly p(f);
    for (std::uint16_t v : coeffs)
        if (v >= f.p()) raise(errc::out_of_range, "residue exceeds modulus");
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

std::uint32_t Poly::eval(std::uint32_t x) const noexcept {
    std::uint32_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::operator+(const Poly& rhs) const {
    check_same_field(*this, rhs);
    Poly out(field_);
    out.c_.resize(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < out.c_.size(); ++i)
        out.c_[i] = static_cast<std::uint16_t>(field_.add(coeff(i), rhs.coeff(i)));
    out.trim();
    return out;
}

Poly Poly::operator-(const Poly& rhs) const {
    check_same_field(*this, rhs);
    Poly out(field_);
    out.c_.resize(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < out.c_.size(); ++i)
        out.c_[i] = static_cast<std::uint16_t>(field_.sub(coeff(i), rhs.coeff(i)));
    out.trim();
    return out;
}

Poly Poly::operator*(const Poly& rhs) const {
    check_same_field(*this, rhs);
    Poly out(field_);
    if (is_zero() || rhs.is_zero()) return out;
    std::vector<std::uint32_t> acc(c_.size() + rhs.c_.size() - 1, 0);
    const std::uint32_t p = field_.p();
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        const std::uint32_t ci = c_[i];
        for (std::size_t j = 0; j < rhs.c_.size(); ++j)
            acc[i + j] = (acc[i + j] + ci * rhs.c_[j]) % p;
    }
    out.c_.resize(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out.c_[i] = static_cast<std::uint16_t>(acc[i]);
    out.trim();
    return out;
}

Poly Poly::operator-() const { return scaled(field_.neg(1)); }

Poly Poly::scaled(std::uint32_t s) const {
    Poly out(field_);
    s %= field_.p();
    if (s == 0) return out;
    out.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        out.c_[i] = static_cast<std::uint16_t>(field_.mul(c_[i], s));
    return out;
}

Poly Poly::monic() const {
    if (is_zero() || c_.back() == 1) return *this;
    return scaled(field_.inv(c_.back()));
}

std::pair<Poly, Poly> poly_divmod(const Poly& f, const Poly& g) {
    check_same_field(f, g);
    if (g.is_zero()) raise(errc::division_by_zero_poly, "division by the zero polynomial");
    const PrimeField& fld = f.field();
    if (f.degree() < g.degree()) return {Poly::zero(fld), f};

    std::vector<std::uint16_t> rem(f.coeffs());
    const int dg = g.degree();
    std::vector<std::uint16_t> quo(static_cast<std::size_t>(f.degree() - dg) + 1, 0);
    const std::uint32_t inv_lc = fld.inv(g.leading_coeff());

    for (int i = f.degree(); i >= dg; --i) {
        const std::uint32_t c = fld.mul(rem[static_cast<std::size_t>(i)], inv_lc);
        if (c == 0) continue;
        quo[static_cast<std::size_t>(i - dg)] = static_cast<std::uint16_t>(c);
        for (int j = 0; j <= dg; ++j) {
            auto& r = rem[static_cast<std::size_t>(i - dg + j)];
            r = static_cast<std::uint16_t>(fld.sub(r, fld.mul(c, g.coeff(static_cast<std::size_t>(j)))));
        }
    }
    return {Poly::from_residues(fld, std::move(quo)), Poly::from_residues(fld, std::move(rem))};
}

Poly poly_gcd(const Poly& f, const Poly& g) {
    check_same_field(f, g);
    if (f.is_zero() && g.is_zero()) raise(errc::both_zero, "gcd(0, 0) is undefined");
    Poly a = f, b = g;
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

ExtGcdResult poly_ext_gcd(const Poly& f, const Poly& g) {
    check_same_field(f, g);
    if (f.is_zero() && g.is_zero()) raise(errc::both_zero, "gcd(0, 0) is undefined");
    const PrimeField& fld = f.field();
    Poly r0 = f, r1 = g;
    Poly s0 = Poly::one(fld), s1 = Poly::zero(fld);
    Poly t0 = Poly::zero(fld), t1 = Poly::one(fld);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Poly s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Poly t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const std::uint32_t c = fld.inv(r0.leading_coeff());
    return {r0.scaled(c), s0.scaled(c), t0.scaled(c)};
}

Poly poly_powmod(const Poly& base, std::uint64_t e, const Poly& modulus) {
    if (modulus.degree() < 1) raise(errc::constant_modulus, "powmod modulus must be nonconstant");
    Poly acc = poly_divmod(Poly::one(base.field()), modulus).second;
    Poly b = poly_divmod(base, modulus).second;
    while (e > 0) {
        if (e & 1) acc = poly_divmod(acc * b, modulus).second;
        e >>= 1;
        if (e) b = poly_divmod(b * b, modulus).second;
    }
    return acc;
}

Poly poly_powmod_bits(const Poly& base, const std::vector<bool>& e_bits, const Poly& modulus) {
    if (modulus.degree() < 1) raise(errc::constant_modulus, "powmod modulus must be nonconstant");
    Poly acc = poly_divmod(Poly::one(base.field()), modulus).second;
    const Poly b = poly_divmod(base, modulus).second;
    for (bool bit : e_bits) {
        acc = poly_divmod(acc * acc, modulus).second;
        if (bit) acc = poly_divmod(acc * b, modulus).second;
    }
    return acc;
}

Poly reduce_mod_binomial(const Poly& f, std::uint32_t n, std::uint32_t a_residue) {
    if (n == 0) raise(errc::constant_modulus, "binomial modulus needs n >= 1");
    const PrimeField& fld = f.field();
    const std::uint32_t a = a_residue % fld.p();
    if (f.degree() < static_cast<int>(n)) return f;
    std::vector<std::uint16_t> c(f.coeffs());
    for (std::size_t i = c.size(); i-- > n;) {
        if (c[i] == 0) continue;
        c[i - n] = static_cast<std::uint16_t>(fld.add(c[i - n], fld.mul(a, c[i])));
        c[i] = 0;
    }
    c.resize(n);
    return Poly::from_residues(fld, std::move(c));
}

Poly poly_lcm(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) return Poly::zero(f.field());
    const Poly d = poly_gcd(f, g);
    return poly_divmod(f * g, d).first.monic();
}

bool poly_divides(const Poly& g, const Poly& f) {
    if (g.is_zero()) return f.is_zero();
    return poly_divmod(f, g).second.is_zero();
}

bool poly_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
}

std::string coeff_array_string(const Poly& p) {
    std::string out = "[";
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.coeffs()[i]);
    }
    out += ']';
    return out;
}

}  // namespace mtcodes
