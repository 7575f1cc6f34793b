#include <symtens/orient_poly.hpp>
#include <symtens/trig_moments.hpp>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

namespace symtens {

RotMat RotMat::identity() {
    RotMat r;
    for (int i = 0; i < 3; ++i) r.at(i, i) = Scalar(1);
    return r;
}

RotMat RotMat::operator*(const RotMat& o) const {
    RotMat r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Scalar s(0);
            for (int k = 0; k < 3; ++k) s += at(i, k) * o.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

RotMat RotMat::transposed() const {
    RotMat r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = at(j, i);
    return r;
}

bool RotMat::is_orthogonal() const {
    RotMat p = *this * transposed();
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (p.at(i, j) != Scalar(i == j ? 1 : 0)) return false;
    return true;
}

Scalar RotMat::det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

RotMatD RotMatD::identity() {
    RotMatD r;
    r.m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    return r;
}

RotMatD RotMatD::from_euler(double alpha, double beta, double gamma) {
    double ca = std::cos(alpha), sa = std::sin(alpha);
    double cb = std::cos(beta), sb = std::sin(beta);
    double cg = std::cos(gamma), sg = std::sin(gamma);
    RotMatD r;
    r.m = {ca,      -sa * cg,               sa * sg,
           sa * cb, ca * cb * cg - sb * sg, -ca * cb * sg - sb * cg,
           sa * sb, ca * sb * cg + cb * sg, -ca * sb * sg + cb * cg};
    return r;
}

RotMatD RotMatD::operator*(const RotMatD& o) const {
    RotMatD r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += at(i, k) * o.at(k, j);
            r.m[3 * i + j] = s;
        }
    return r;
}

bool RotMatD::is_orthogonal(double tol) const {
    RotMatD p = *this * RotMatD{{m[0], m[3], m[6], m[1], m[4], m[7], m[2], m[5], m[8]}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (std::abs(p.at(i, j) - (i == j ? 1.0 : 0.0)) > tol) return false;
    return true;
}

double RotMatD::det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

RotMatD to_numeric(const RotMat& r) {
    RotMatD d;
    for (int i = 0; i < 9; ++i) d.m[i] = r.m[i].to_double();
    return d;
}

int EntryMono::degree_in(VarId v) const {
    for (const auto& [var, e] : parts) {
        if (var != v) continue;
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    return 0;
}

int EntryMono::total_degree() const {
    int d = 0;
    for (const auto& [var, e] : parts)
        for (auto x : e) d += x;
    return d;
}

size_t EntryMonoHash::operator()(const EntryMono& m) const {
    size_t h = 1469598103934665603ull;
    auto mix = [&h](size_t x) {
        h ^= x;
        h *= 1099511628211ull;
    };
    for (const auto& [var, e] : m.parts) {
        mix(static_cast<size_t>(var) + 0x9e37);
        for (auto x : e) mix(x);
    }
    return h;
}

OrientPoly OrientPoly::constant(Scalar c) {
    OrientPoly p;
    if (!c.is_zero()) p.terms_.emplace(EntryMono{}, std::move(c));
    return p;
}

OrientPoly OrientPoly::entry(VarId v, int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 3) throw config_error("OrientPoly::entry: index out of range");
    EntryMono m;
    Exp9 e{};
    e[3 * (i - 1) + (j - 1)] = 1;
    m.parts.emplace_back(v, e);
    OrientPoly p;
    p.terms_.emplace(std::move(m), Scalar(1));
    return p;
}

Scalar OrientPoly::constant_value() const {
    if (terms_.empty()) return Scalar(0);
    if (terms_.size() != 1 || !terms_.begin()->first.parts.empty())
        throw internal_error("OrientPoly: constant_value of a non-constant");
    return terms_.begin()->second;
}

int OrientPoly::degree_in(VarId v) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree_in(v));
    return d;
}

std::vector<VarId> OrientPoly::variables() const {
    std::vector<VarId> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& [var, e] : m.parts)
            if (std::find(vs.begin(), vs.end(), var) == vs.end()) vs.push_back(var);
    std::sort(vs.begin(), vs.end());
    return vs;
}

void OrientPoly::add_term(const EntryMono& mono, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

OrientPoly& OrientPoly::operator+=(const OrientPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

OrientPoly& OrientPoly::operator-=(const OrientPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

OrientPoly OrientPoly::operator-() const {
    OrientPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

namespace {

EntryMono merge_monomials(const EntryMono& a, const EntryMono& b) {
    EntryMono r;
    auto ia = a.parts.begin(), ib = b.parts.begin();
    while (ia != a.parts.end() || ib != b.parts.end()) {
        if (ib == b.parts.end() || (ia != a.parts.end() && ia->first < ib->first)) {
            r.parts.push_back(*ia++);
        } else if (ia == a.parts.end() || ib->first < ia->first) {
            r.parts.push_back(*ib++);
        } else {
            Exp9 e{};
            int deg = 0;
            for (int k = 0; k < 9; ++k) {
                e[k] = static_cast<std::uint8_t>(ia->second[k] + ib->second[k]);
                deg += e[k];
            }
            if (deg > OrientPoly::kDegreeCap)
                throw config_error("OrientPoly: per-variable degree cap exceeded");
            r.parts.emplace_back(ia->first, e);
            ++ia;
            ++ib;
        }
    }
    return r;
}

}  // namespace

OrientPoly operator*(const OrientPoly& a, const OrientPoly& b) {
    OrientPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) r.add_term(merge_monomials(ma, mb), ca * cb);
    return r;
}

OrientPoly OrientPoly::scaled(const Scalar& c) const {
    OrientPoly r;
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

bool OrientPoly::operator==(const OrientPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (const auto& [m, c] : terms_) {
        auto it = o.terms_.find(m);
        if (it == o.terms_.end() || !(it->second == c)) return false;
    }
    return true;
}

std::string OrientPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<const EntryMono*> keys;
    keys.reserve(terms_.size());
    for (const auto& [m, c] : terms_) keys.push_back(&m);
    std::sort(keys.begin(), keys.end(), [](const EntryMono* x, const EntryMono* y) {
        int dx = x->total_degree(), dy = y->total_degree();
        if (dx != dy) return dx < dy;
        return x->parts < y->parts;
    });
    std::ostringstream os;
    bool first = true;
    for (const EntryMono* m : keys) {
        const Scalar& c = terms_.at(*m);
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (const auto& [var, e] : m->parts)
            for (int k = 0; k < 9; ++k) {
                if (e[k] == 0) continue;
                os << "*p" << (var + 1) << "_" << (k / 3 + 1) << (k % 3 + 1);
                if (e[k] > 1) os << "^" << int(e[k]);
            }
    }
    return os.str();
}

OrientPoly right_substitute(const OrientPoly& f, VarId var, const RotMat& s) {
    if (!s.is_orthogonal()) throw config_error("right_substitute: matrix is not orthogonal");
    OrientPoly result;
    for (const auto& [mono, coef] : f.terms()) {
        const Exp9* block = nullptr;
        EntryMono rest;
        for (const auto& part : mono.parts) {
            if (part.first == var) block = &part.second;
            else rest.parts.push_back(part);
        }
        if (!block) {
            result.add_term(mono, coef);
            continue;
        }
        // Expand prod_{ij} (sum_k p_{ik} s_{kj})^{e_ij} over the affected
        // variable only, then splice the untouched factors back in.
        std::unordered_map<EntryMono, Scalar, EntryMonoHash> acc;
        {
            EntryMono one;
            acc.emplace(one, Scalar(1));
        }
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int e = (*block)[3 * i + j];
                for (int t = 0; t < e; ++t) {
                    std::unordered_map<EntryMono, Scalar, EntryMonoHash> next;
                    for (const auto& [m, c] : acc)
                        for (int k = 0; k < 3; ++k) {
                            if (s.at(k, j).is_zero()) continue;
                            EntryMono lm;
                            Exp9 le{};
                            le[3 * i + k] = 1;
                            lm.parts.emplace_back(var, le);
                            EntryMono merged = merge_monomials(m, lm);
                            Scalar val = c * s.at(k, j);
                            auto it = next.find(merged);
                            if (it == next.end()) next.emplace(std::move(merged), std::move(val));
                            else {
                                it->second += val;
                                if (it->second.is_zero()) next.erase(it);
                            }
                        }
                    acc = std::move(next);
                }
            }
        for (const auto& [m, c] : acc) result.add_term(merge_monomials(rest, m), coef * c);
    }
    return result;
}

OrientPoly rename_vars(const OrientPoly& f, const std::vector<std::pair<VarId, VarId>>& mapping) {
    OrientPoly r;
    for (const auto& [mono, coef] : f.terms()) {
        EntryMono m;
        m.parts = mono.parts;
        for (auto& [var, e] : m.parts)
            for (const auto& [from, to] : mapping)
                if (var == from) {
                    var = to;
                    break;
                }
        std::sort(m.parts.begin(), m.parts.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (size_t i = 1; i < m.parts.size(); ++i)
            if (m.parts[i - 1].first == m.parts[i].first)
                throw internal_error("rename_vars: mapping is not injective");
        r.add_term(m, coef);
    }
    return r;
}

namespace {

// One Euler-angle product term of a matrix entry: sign and exponents of
// (cos a, sin a, cos b, sin b, cos g, sin g).
struct TrigTerm {
    int sign;
    std::array<int, 6> e;
};

const std::array<std::vector<TrigTerm>, 9>& entry_table() {
    static const std::array<std::vector<TrigTerm>, 9> table = {{
        {{+1, {1, 0, 0, 0, 0, 0}}},                          // p11 = ca
        {{-1, {0, 1, 0, 0, 1, 0}}},                          // p12 = -sa cg
        {{+1, {0, 1, 0, 0, 0, 1}}},                          // p13 = sa sg
        {{+1, {0, 1, 1, 0, 0, 0}}},                          // p21 = sa cb
        {{+1, {1, 0, 1, 0, 1, 0}}, {-1, {0, 0, 0, 1, 0, 1}}},  // p22
        {{-1, {1, 0, 1, 0, 0, 1}}, {-1, {0, 0, 0, 1, 1, 0}}},  // p23
        {{+1, {0, 1, 0, 1, 0, 0}}},                          // p31 = sa sb
        {{+1, {1, 0, 0, 1, 1, 0}}, {+1, {0, 0, 1, 0, 0, 1}}},  // p32
        {{-1, {1, 0, 0, 1, 0, 1}}, {+1, {0, 0, 1, 0, 1, 0}}},  // p33
    }};
    return table;
}

Rational compute_entry_monomial_moment(const Exp9& e) {
    // Expand the entry power product into trigonometric monomials, binomial
    // coefficients included, then integrate factor by factor.  The alpha
    // integral carries the sin(a) Haar density and the 1/(8 pi^2)
    // normalization is split as pi * pi / 8 over the three factors.
    struct Partial {
        Integer coef;
        std::array<int, 6> e;
    };
    std::vector<Partial> acc{{Integer(1), {0, 0, 0, 0, 0, 0}}};
    const auto& table = entry_table();
    for (int k = 0; k < 9; ++k) {
        int n = e[k];
        if (n == 0) continue;
        const auto& opts = table[k];
        std::vector<Partial> next;
        if (opts.size() == 1) {
            next = std::move(acc);
            for (auto& p : next) {
                if (opts[0].sign < 0 && n % 2 == 1) p.coef = -p.coef;
                for (int t = 0; t < 6; ++t) p.e[t] += n * opts[0].e[t];
            }
        } else {
            for (int j = 0; j <= n; ++j) {
                Integer c = binomial(n, j);
                if (opts[0].sign < 0 && j % 2 == 1) c = -c;
                if (opts[1].sign < 0 && (n - j) % 2 == 1) c = -c;
                for (const auto& p : acc) {
                    Partial q = p;
                    q.coef *= c;
                    for (int t = 0; t < 6; ++t) q.e[t] += j * opts[0].e[t] + (n - j) * opts[1].e[t];
                    next.push_back(std::move(q));
                }
            }
        }
        acc = std::move(next);
    }

    PiLinear total;
    for (const auto& p : acc) {
        Rational cb = circle_moment(p.e[2], p.e[3]);
        if (sgn(cb) == 0) continue;
        Rational cg = circle_moment(p.e[4], p.e[5]);
        if (sgn(cg) == 0) continue;
        PiLinear ia = alpha_moment(p.e[0], p.e[1] + 1);
        Rational f = Rational(p.coef) * cb * cg / 8;
        f.canonicalize();
        total += Scalar(f) * ia;
    }
    if (!total.pi_free())
        throw internal_error("haar_integral: pi-component failed to cancel");
    return total.c0.rational();
}

}  // namespace

Rational entry_monomial_moment(const Exp9& e) {
    struct Exp9Hash {
        size_t operator()(const Exp9& x) const {
            size_t h = 1469598103934665603ull;
            for (auto v : x) {
                h ^= v;
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    static std::unordered_map<Exp9, Rational, Exp9Hash> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
    }
    Rational v = compute_entry_monomial_moment(e);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(e, std::move(v)).first->second;
}

OrientPoly haar_integral(const OrientPoly& f, VarId var) {
    OrientPoly result;
    for (const auto& [mono, coef] : f.terms()) {
        const Exp9* block = nullptr;
        EntryMono rest;
        for (const auto& part : mono.parts) {
            if (part.first == var) block = &part.second;
            else rest.parts.push_back(part);
        }
        if (!block) {
            result.add_term(mono, coef);
            continue;
        }
        Rational mu = entry_monomial_moment(*block);
        if (sgn(mu) != 0) result.add_term(rest, coef * Scalar(mu));
    }
    return result;
}

double eval_numeric(const OrientPoly& f, const std::map<VarId, RotMatD>& assignment) {
    double total = 0;
    for (const auto& [mono, coef] : f.terms()) {
        double v = coef.to_double();
        for (const auto& [var, e] : mono.parts) {
            auto it = assignment.find(var);
            if (it == assignment.end()) throw config_error("eval_numeric: unassigned variable");
            for (int k = 0; k < 9; ++k)
                for (int t = 0; t < e[k]; ++t) v *= it->second.m[k];
        }
        total += v;
    }
    return total;
}

}  // namespace symtens
