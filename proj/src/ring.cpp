#include "fia/ring.hpp"

#include <regex>

namespace fia {

RingSpec RingSpec::rationals()
{
    RingSpec s;
    s.kind_ = RingKind::Rationals;
    return s;
}

RingSpec RingSpec::residues(Int modulus)
{
    if (modulus < 2)
        throw Error("residue modulus must be >= 2");
    RingSpec s;
    s.kind_ = RingKind::Residues;
    s.modulus_ = std::move(modulus);
    return s;
}

RingSpec RingSpec::parse(const std::string& selector)
{
    if (selector == "z")
        return integers();
    if (selector == "q")
        return rationals();
    if (selector.rfind("zmod:", 0) == 0) {
        const std::string m = selector.substr(5);
        if (m.empty() || m.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad modulus in ring selector '" + selector + "'");
        return residues(Int(m));
    }
    throw ParseError("unknown ring selector '" + selector + "' (expected z, q or zmod:<m>)");
}

std::string RingSpec::selector() const
{
    switch (kind_) {
    case RingKind::Integers:
        return "z";
    case RingKind::Rationals:
        return "q";
    case RingKind::Residues:
        return "zmod:" + modulus_.str();
    }
    throw Error("corrupt ring spec");
}

RingElem::RingElem(RingSpec spec, Int value) : spec_(std::move(spec)), num_(std::move(value))
{
    canonicalize();
}

RingElem RingElem::fraction(const RingSpec& spec, Int num, Int den)
{
    if (den == 0)
        throw Error("zero denominator");
    if (spec.kind() != RingKind::Rationals)
        throw Error("fractions are only available over the rationals");
    RingElem e;
    e.spec_ = spec;
    e.num_ = std::move(num);
    e.den_ = std::move(den);
    e.canonicalize();
    return e;
}

RingElem RingElem::parse(const RingSpec& spec, const std::string& text)
{
    static const std::regex pat(R"(^([+-]?[0-9]+)(?:/([0-9]+))?$)");
    std::smatch m;
    if (!std::regex_match(text, m, pat))
        throw ParseError("bad scalar '" + text + "'");
    Int num(m[1].str());
    if (m[2].matched) {
        if (spec.kind() != RingKind::Rationals)
            throw ParseError("fraction '" + text + "' in a non-rational ring");
        Int den(m[2].str());
        return fraction(spec, std::move(num), std::move(den));
    }
    return RingElem(spec, std::move(num));
}

std::string RingElem::str() const
{
    if (den_ == 1)
        return num_.str();
    return num_.str() + "/" + den_.str();
}

void RingElem::canonicalize()
{
    switch (spec_.kind()) {
    case RingKind::Integers:
        if (den_ != 1)
            throw Error("non-integer value over Z");
        break;
    case RingKind::Rationals: {
        if (den_ == 0)
            throw Error("zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int g = boost::multiprecision::gcd(num_ < 0 ? Int(-num_) : num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
        if (num_ == 0)
            den_ = 1;
        break;
    }
    case RingKind::Residues: {
        if (den_ != 1)
            throw Error("non-integer value over Z/m");
        num_ %= spec_.modulus();
        if (num_ < 0)
            num_ += spec_.modulus();
        break;
    }
    }
}

void RingElem::require_same(const RingElem& other) const
{
    if (!(spec_ == other.spec_))
        throw Error("ring spec mismatch: " + spec_.selector() + " vs " + other.spec_.selector());
}

RingElem RingElem::operator+(const RingElem& other) const
{
    require_same(other);
    RingElem r;
    r.spec_ = spec_;
    r.num_ = num_ * other.den_ + other.num_ * den_;
    r.den_ = den_ * other.den_;
    r.canonicalize();
    return r;
}

RingElem RingElem::operator-(const RingElem& other) const
{
    return *this + (-other);
}

RingElem RingElem::operator*(const RingElem& other) const
{
    require_same(other);
    RingElem r;
    r.spec_ = spec_;
    r.num_ = num_ * other.num_;
    r.den_ = den_ * other.den_;
    r.canonicalize();
    return r;
}

RingElem RingElem::operator-() const
{
    RingElem r;
    r.spec_ = spec_;
    r.num_ = -num_;
    r.den_ = den_;
    r.canonicalize();
    return r;
}

namespace {

// Extended gcd: returns g = gcd(a, b) and x with a*x = g (mod b).
Int mod_inverse(Int a, const Int& m)
{
    a %= m;
    if (a < 0)
        a += m;
    Int old_r = a, r = m;
    Int old_x = 1, x = 0;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_x - q * x;
        old_x = x;
        x = tmp;
    }
    if (old_r != 1)
        throw Error("element " + a.str() + " is not invertible mod " + m.str());
    old_x %= m;
    if (old_x < 0)
        old_x += m;
    return old_x;
}

}  // namespace

RingElem RingElem::div_int(const Int& n) const
{
    if (n <= 0)
        throw Error("div_int expects a positive integer");
    switch (spec_.kind()) {
    case RingKind::Integers:
        if (n != 1)
            throw Error(n.str() + " is not invertible in Z");
        return *this;
    case RingKind::Rationals: {
        RingElem r;
        r.spec_ = spec_;
        r.num_ = num_;
        r.den_ = den_ * n;
        r.canonicalize();
        return r;
    }
    case RingKind::Residues: {
        Int inv = mod_inverse(n, spec_.modulus());
        RingElem r;
        r.spec_ = spec_;
        r.num_ = num_ * inv;
        r.canonicalize();
        return r;
    }
    }
    throw Error("corrupt ring spec");
}

}  // namespace fia
