#pragma once

#include <symtens/orient_poly.hpp>

#include <map>
#include <string>
#include <vector>

namespace symtens {

// Monomial m1^a m2^b m3^c; keys are ordered graded-lex so every container
// iteration below is deterministic.
struct Mono3 {
    std::uint8_t a = 0, b = 0, c = 0;

    int order() const { return a + b + c; }
    int get(int i) const { return i == 0 ? a : (i == 1 ? b : c); }
    void set(int i, int v) { (i == 0 ? a : (i == 1 ? b : c)) = static_cast<std::uint8_t>(v); }

    friend bool operator==(const Mono3& x, const Mono3& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c;
    }
    friend bool operator<(const Mono3& x, const Mono3& y) {
        if (x.order() != y.order()) return x.order() < y.order();
        if (x.a != y.a) return x.a > y.a;
        if (x.b != y.b) return x.b > y.b;
        return x.c > y.c;
    }
};

// All monomials of the given total order, graded-lex.
std::vector<Mono3> monomials_of_order(int k);

inline Integer multiset_factorial(const Mono3& m) {
    return factorial(m.a) * factorial(m.b) * factorial(m.c);
}

template <class R>
struct RingOps;

template <>
struct RingOps<Scalar> {
    static bool is_zero(const Scalar& x) { return x.is_zero(); }
    static Scalar scale(const Scalar& x, const Scalar& c) { return x * c; }
};

template <>
struct RingOps<OrientPoly> {
    static bool is_zero(const OrientPoly& x) { return x.is_zero(); }
    static OrientPoly scale(const OrientPoly& x, const Scalar& c) { return x.scaled(c); }
};

// Symmetric tensor of fixed order in the monomial basis.  The coefficient of
// m1^a m2^b m3^c is the coefficient of x1^a x2^b x3^c in the associated
// homogeneous form; components follow via comp = coef * a!b!c!/k!.
// R = Scalar gives constant tensors, R = OrientPoly tensor-valued functions
// of rotation variables (tensor fields).
template <class R>
class SymPoly {
public:
    explicit SymPoly(int order = 0) : order_(order) {}

    int order() const { return order_; }
    bool is_zero() const { return coef_.empty(); }
    const std::map<Mono3, R>& coefs() const { return coef_; }

    void add_coef(const Mono3& m, const R& v) {
        if (m.order() != order_) throw internal_error("SymPoly: monomial order mismatch");
        if (RingOps<R>::is_zero(v)) return;
        auto it = coef_.find(m);
        if (it == coef_.end()) {
            coef_.emplace(m, v);
            return;
        }
        it->second += v;
        if (RingOps<R>::is_zero(it->second)) coef_.erase(it);
    }

    R coef(const Mono3& m) const {
        auto it = coef_.find(m);
        return it == coef_.end() ? R() : it->second;
    }

    R component(const Mono3& m) const {
        auto it = coef_.find(m);
        if (it == coef_.end()) return R();
        Rational f(multiset_factorial(m), factorial(order_));
        f.canonicalize();
        return RingOps<R>::scale(it->second, Scalar(f));
    }

    SymPoly& operator+=(const SymPoly& o) {
        if (o.order_ != order_) throw internal_error("SymPoly: order mismatch in +=");
        for (const auto& [m, v] : o.coef_) add_coef(m, v);
        return *this;
    }
    SymPoly& operator-=(const SymPoly& o) {
        if (o.order_ != order_) throw internal_error("SymPoly: order mismatch in -=");
        for (const auto& [m, v] : o.coef_) add_coef(m, RingOps<R>::scale(v, Scalar(-1)));
        return *this;
    }
    friend SymPoly operator+(SymPoly x, const SymPoly& y) { return x += y; }
    friend SymPoly operator-(SymPoly x, const SymPoly& y) { return x -= y; }

    SymPoly scaled(const Scalar& c) const {
        SymPoly r(order_);
        if (c.is_zero()) return r;
        for (const auto& [m, v] : coef_) r.coef_.emplace(m, RingOps<R>::scale(v, c));
        return r;
    }

    // Symmetrized tensor product = product of the associated forms.
    friend SymPoly operator*(const SymPoly& x, const SymPoly& y) {
        SymPoly r(x.order_ + y.order_);
        for (const auto& [mx, vx] : x.coef_)
            for (const auto& [my, vy] : y.coef_) {
                Mono3 m;
                m.a = static_cast<std::uint8_t>(mx.a + my.a);
                m.b = static_cast<std::uint8_t>(mx.b + my.b);
                m.c = static_cast<std::uint8_t>(mx.c + my.c);
                r.add_coef(m, vx * vy);
            }
        return r;
    }

    bool operator==(const SymPoly& o) const { return order_ == o.order_ && coef_ == o.coef_; }

private:
    int order_;
    std::map<Mono3, R> coef_;
};

using SymTensor = SymPoly<Scalar>;
using TensorField = SymPoly<OrientPoly>;

// Mixed product with a constant symmetric tensor (e.g. powers of the
// identity tensor multiplying a field).
template <class R>
SymPoly<R> mixed_product(const SymPoly<R>& x, const SymTensor& y) {
    SymPoly<R> r(x.order() + y.order());
    for (const auto& [mx, vx] : x.coefs())
        for (const auto& [my, vy] : y.coefs()) {
            Mono3 m;
            m.a = static_cast<std::uint8_t>(mx.a + my.a);
            m.b = static_cast<std::uint8_t>(mx.b + my.b);
            m.c = static_cast<std::uint8_t>(mx.c + my.c);
            r.add_coef(m, RingOps<R>::scale(vx, vy));
        }
    return r;
}

// Contraction of one index pair; defined for order >= 2.
template <class R>
SymPoly<R> trace(const SymPoly<R>& u) {
    const int k = u.order();
    if (k < 2) throw config_error("trace: order must be at least 2");
    SymPoly<R> r(k - 2);
    Rational denom(Integer(k) * (k - 1));
    for (const Mono3& lam : monomials_of_order(k - 2)) {
        R acc{};
        bool any = false;
        for (int i = 0; i < 3; ++i) {
            Mono3 up = lam;
            up.set(i, lam.get(i) + 2);
            R c = u.coef(up);
            if (RingOps<R>::is_zero(c)) continue;
            Rational f(Integer(lam.get(i) + 2) * (lam.get(i) + 1));
            f /= denom;
            f.canonicalize();
            acc += RingOps<R>::scale(c, Scalar(f));
            any = true;
        }
        if (any) r.add_coef(lam, acc);
    }
    return r;
}

// The identity tensor i = m1^2 + m2^2 + m3^2.
SymTensor identity_tensor();

// Basis monomial m1^k1 m2^k2 m3^k3.
SymTensor mono_tensor(int k1, int k2, int k3);

// u * i^q.
template <class R>
SymPoly<R> times_identity_pow(const SymPoly<R>& u, int q) {
    SymPoly<R> r = u;
    for (int t = 0; t < q; ++t) r = mixed_product(r, identity_tensor());
    return r;
}

// Frobenius dot via the multinomial weight on monomial coefficients.
Scalar frobenius_dot(const SymTensor& u, const SymTensor& v);

bool is_traceless(const SymTensor& u);

// u = result.first + i * result.second with result.first traceless; the
// completion solves the trace condition exactly in the monomial basis.
std::pair<SymTensor, SymTensor> harmonic_split(const SymTensor& u);

SymTensor traceless_project(const SymTensor& u);

// Action of an exact orthogonal matrix on a constant tensor (substitution
// x -> s^T x on the associated form).
SymTensor rotate_sym(const SymTensor& u, const RotMat& s);

// Orthogonal basis of order-k symmetric traceless tensors: Gram-Schmidt
// without normalization over traceless-projected monomials in graded-lex
// order, dependents skipped.  Deterministic; cached per order.
const std::vector<SymTensor>& basis_w(int k);

// Tensor field p -> (p o u) in the entries of the given rotation variable.
TensorField rotate_to_field(const SymTensor& u, VarId var = 0);

// Evaluate a tensor field at an exact rotation, yielding a constant tensor.
SymTensor eval_field(const TensorField& f, const RotMat& s);

// Dot of two equal-order fields (or field and constant) as a polynomial.
OrientPoly field_dot(const TensorField& x, const TensorField& y);
OrientPoly field_dot(const TensorField& x, const SymTensor& y);

// w^k_{ij}(p) = W^k_i . W^k_j(p), a degree-k entry polynomial.
OrientPoly pair_w(int k, int i, int j, VarId var = 0);

// Dense order-k tensor (3^k components); oracle-side representation.
class DenseTensor {
public:
    explicit DenseTensor(int order);

    int order() const { return order_; }
    size_t size() const { return v_.size(); }

    // idx holds k values in {0,1,2}.
    Scalar& at(const std::vector<int>& idx);
    const Scalar& at(const std::vector<int>& idx) const;
    Scalar& flat(size_t i) { return v_[i]; }
    const Scalar& flat(size_t i) const { return v_[i]; }

    DenseTensor& operator+=(const DenseTensor& o);
    DenseTensor& operator-=(const DenseTensor& o);
    DenseTensor scaled(const Scalar& c) const;
    bool is_zero() const;

    static DenseTensor epsilon();
    static DenseTensor from_sym(const SymTensor& u);

    friend bool operator==(const DenseTensor& x, const DenseTensor& y) {
        return x.order_ == y.order_ && x.v_ == y.v_;
    }

private:
    int order_;
    std::vector<Scalar> v_;
};

// Average over all index permutations, in monomial-basis form.
SymTensor symmetrize(const DenseTensor& x);

// Canonical scaling for presentation: integer primitive coefficients with a
// positive leading (graded-lex greatest) monomial.
SymTensor canonical_scale(const SymTensor& u);

// Monomial rendering; order <= 2 tensors fold the trace part into "i" and
// normalize the leading coefficient to one (e.g. "m1^2 - 1/3 i").
std::string tensor_str(const SymTensor& u);

}  // namespace symtens
