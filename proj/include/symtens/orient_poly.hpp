#pragma once

#include <symtens/scalar.hpp>

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

namespace symtens {

using VarId = int;

// Exact 3x3 rotation (or reflection-composed) matrix, row-major.
struct RotMat {
    std::array<Scalar, 9> m{};

    static RotMat identity();
    const Scalar& at(int i, int j) const { return m[3 * i + j]; }
    Scalar& at(int i, int j) { return m[3 * i + j]; }

    RotMat operator*(const RotMat& o) const;
    RotMat transposed() const;
    bool is_orthogonal() const;
    Scalar det() const;
    bool operator==(const RotMat& o) const { return m == o.m; }
};

// Numeric counterpart for float-only groups and quadrature.
struct RotMatD {
    std::array<double, 9> m{};

    static RotMatD identity();
    static RotMatD from_euler(double alpha, double beta, double gamma);
    double at(int i, int j) const { return m[3 * i + j]; }
    RotMatD operator*(const RotMatD& o) const;
    bool is_orthogonal(double tol = 1e-12) const;
    double det() const;
};

RotMatD to_numeric(const RotMat& r);

// Exponents of the nine matrix entries of one rotation variable.
using Exp9 = std::array<std::uint8_t, 9>;

// Monomial in the entries of one or more rotation-matrix variables.
// Parts are sorted by variable id and never hold an all-zero exponent block.
struct EntryMono {
    std::vector<std::pair<VarId, Exp9>> parts;

    bool operator==(const EntryMono& o) const { return parts == o.parts; }
    int degree_in(VarId v) const;
    int total_degree() const;
};

struct EntryMonoHash {
    size_t operator()(const EntryMono& m) const;
};

// Sparse polynomial in rotation-matrix entries with exact coefficients.
class OrientPoly {
public:
    static constexpr int kDegreeCap = 16;  // per variable

    OrientPoly() = default;
    static OrientPoly constant(Scalar c);
    static OrientPoly entry(VarId v, int i, int j);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::unordered_map<EntryMono, Scalar, EntryMonoHash>& terms() const { return terms_; }

    // Exact value when the polynomial is a constant; throws otherwise.
    Scalar constant_value() const;

    int degree_in(VarId v) const;
    std::vector<VarId> variables() const;

    void add_term(const EntryMono& mono, const Scalar& c);

    OrientPoly& operator+=(const OrientPoly& o);
    OrientPoly& operator-=(const OrientPoly& o);
    OrientPoly operator-() const;
    friend OrientPoly operator+(OrientPoly a, const OrientPoly& b) { return a += b; }
    friend OrientPoly operator-(OrientPoly a, const OrientPoly& b) { return a -= b; }
    friend OrientPoly operator*(const OrientPoly& a, const OrientPoly& b);

    OrientPoly scaled(const Scalar& c) const;

    bool operator==(const OrientPoly& o) const;

    // Deterministic rendering (variables ascending, monomials graded-lex).
    std::string str() const;

private:
    std::unordered_map<EntryMono, Scalar, EntryMonoHash> terms_;
};

// g with g(p) = f(p s) for all p, realized by the linear entry substitution
// (p s)_{ij} = sum_k p_{ik} s_{kj}.  s must be exactly orthogonal.
OrientPoly right_substitute(const OrientPoly& f, VarId var, const RotMat& s);

// Renames variables; `mapping` pairs are (old, new) and must be injective.
OrientPoly rename_vars(const OrientPoly& f, const std::vector<std::pair<VarId, VarId>>& mapping);

// Exact normalized Haar moment of a single-variable entry monomial.
// The pi-component of the assembled integral must cancel; violation throws
// internal_error.
Rational entry_monomial_moment(const Exp9& e);

// Integrates out one rotation variable against the normalized Haar measure.
OrientPoly haar_integral(const OrientPoly& f, VarId var);

// Full evaluation; every variable of f must be assigned.
double eval_numeric(const OrientPoly& f, const std::map<VarId, RotMatD>& assignment);

}  // namespace symtens
