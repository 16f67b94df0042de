#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace fia {

using Int = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ParseError : Error {
    using Error::Error;
};

enum class RingKind { Integers, Rationals, Residues };

/// Selector for a commutative unital coefficient ring: Z, Q or Z/m.
class RingSpec {
public:
    RingSpec() : kind_(RingKind::Integers) {}

    static RingSpec integers() { return RingSpec(); }
    static RingSpec rationals();
    static RingSpec residues(Int modulus);  // modulus >= 2
    static RingSpec parse(const std::string& selector);  // "z" | "q" | "zmod:<m>"

    RingKind kind() const { return kind_; }
    const Int& modulus() const { return modulus_; }
    std::string selector() const;

    bool operator==(const RingSpec&) const = default;

private:
    RingKind kind_;
    Int modulus_;  // zero unless residues
};

/// An exact scalar held in canonical form: plain integer, reduced fraction
/// with positive denominator, or residue in [0, m).
class RingElem {
public:
    RingElem() = default;  // zero over Z

    RingElem(RingSpec spec, Int value);
    static RingElem zero(const RingSpec& spec) { return RingElem(spec, 0); }
    static RingElem one(const RingSpec& spec) { return RingElem(spec, 1); }
    static RingElem fraction(const RingSpec& spec, Int num, Int den);
    static RingElem parse(const RingSpec& spec, const std::string& text);

    const RingSpec& spec() const { return spec_; }
    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    std::string str() const;

    RingElem operator+(const RingElem& other) const;
    RingElem operator-(const RingElem& other) const;
    RingElem operator*(const RingElem& other) const;
    RingElem operator-() const;

    /// Multiply by 1/n for a positive integer n; fails when n has no inverse.
    RingElem div_int(const Int& n) const;

    bool operator==(const RingElem&) const = default;

private:
    void canonicalize();
    void require_same(const RingElem& other) const;

    RingSpec spec_;
    Int num_ = 0;
    Int den_ = 1;
};

}  // namespace fia
