#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qreduce/algebra.hpp"

namespace qreduce {

/// Integral highest weight of a Verma module over U_q(gl(N)).
struct HighestWeight {
    std::vector<long long> comps;

    int rank() const { return static_cast<int>(comps.size()); }
    bool operator==(const HighestWeight& o) const { return comps == o.comps; }
};

/// Exponent signature of a lowering-only PBW monomial (one entry per positive
/// root in normal order).
using LowerMonomial = std::vector<int>;

/// Finite linear combination of lowering monomials applied to the highest
/// vector of a Verma module with numeric integral highest weight.
class VermaVector {
public:
    VermaVector(const AlgebraContext& ctx, HighestWeight hw)
        : ctx_(&ctx), hw_(std::move(hw)) {
        if (hw_.rank() != ctx.rank())
            throw IndexError("VermaVector: weight length must equal rank");
    }

    static VermaVector highest(const AlgebraContext& ctx, HighestWeight hw) {
        VermaVector v(ctx, std::move(hw));
        v.terms_[LowerMonomial(ctx.root_count(), 0)] = QRat(1);
        return v;
    }

    static VermaVector monomial_vector(const AlgebraContext& ctx, HighestWeight hw,
                                       LowerMonomial m, QRat c = QRat(1)) {
        VermaVector v(ctx, std::move(hw));
        v.add_term(std::move(m), std::move(c));
        return v;
    }

    const AlgebraContext& context() const { return *ctx_; }
    const HighestWeight& highest_weight() const { return hw_; }
    const std::map<LowerMonomial, QRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(LowerMonomial m, QRat c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(std::move(m), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend VermaVector operator+(const VermaVector& a, const VermaVector& b) {
        VermaVector r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend VermaVector operator-(const VermaVector& a, const VermaVector& b) {
        VermaVector r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    VermaVector scaled(const QRat& s) const {
        VermaVector r(*ctx_, hw_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }

    bool operator==(const VermaVector& o) const {
        return hw_ == o.hw_ && terms_ == o.terms_;
    }
    bool operator!=(const VermaVector& o) const { return !(*this == o); }

    /// Weight of a monomial component: highest weight shifted by the letters.
    std::vector<long long> term_weight(const LowerMonomial& m) const {
        std::vector<long long> w = hw_.comps;
        for (int r = 0; r < ctx_->root_count(); ++r) {
            const Root& rt = ctx_->root(r);
            w[rt.i - 1] -= m[r];
            w[rt.j - 1] += m[r];
        }
        return w;
    }

    int max_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) {
            int s = 0;
            for (int e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.to_string() << ")";
            bool any = false;
            for (int r = 0; r < ctx_->root_count(); ++r)
                if (m[r] > 0) {
                    os << "*e" << ctx_->root(r).j << ctx_->root(r).i;
                    if (m[r] > 1) os << "^" << m[r];
                    any = true;
                }
            os << (any ? "*v" : "*v");
        }
        return os.str();
    }

private:
    const AlgebraContext* ctx_;
    HighestWeight hw_;
    std::map<LowerMonomial, QRat> terms_;
};

/// Action of an algebra element on a Verma vector: normal-order against each
/// lowering monomial, kill terms with surviving raising part, evaluate Cartan
/// coefficients at the shifted weight.
inline VermaVector act(const AlgebraContext& ctx, const AlgebraElement& g,
                       const VermaVector& v) {
    VermaVector out(ctx, v.highest_weight());
    const std::vector<long long>& lambda = v.highest_weight().comps;
    for (const auto& [vm, vc] : v.terms()) {
        PBWKey vkey{vm, std::vector<int>(ctx.root_count(), 0)};
        AlgebraElement vel = AlgebraElement::monomial(ctx, vkey, ctx.cr_one());
        AlgebraElement prod = multiply(ctx, g, vel);
        for (const auto& [rk, rc] : prod.terms()) {
            bool has_raising = false;
            for (int e : rk.high)
                if (e > 0) {
                    has_raising = true;
                    break;
                }
            if (has_raising) continue;
            out.add_term(rk.low, vc * rc.eval(lambda));
        }
    }
    return out;
}

inline VermaVector act_generator(const AlgebraContext& ctx, int a, int b,
                                 const VermaVector& v) {
    return act(ctx, AlgebraElement::generator(ctx, a, b), v);
}

/// All lowering monomials with weight offset mu - lambda and total degree at
/// most maxdeg, in canonical (lexicographic signature) order.
inline std::vector<LowerMonomial> weight_space_basis(const AlgebraContext& ctx,
                                                     const HighestWeight& lambda,
                                                     const std::vector<long long>& mu,
                                                     int maxdeg) {
    if (maxdeg < 0) throw IndexError("weight_space_basis: maxdeg >= 0 required");
    std::vector<long long> target(ctx.rank());
    for (int k = 0; k < ctx.rank(); ++k) target[k] = mu[k] - lambda.comps[k];
    std::vector<LowerMonomial> out;
    LowerMonomial cur(ctx.root_count(), 0);
    std::vector<long long> acc(ctx.rank(), 0);

    auto matches = [&]() {
        for (int k = 0; k < ctx.rank(); ++k)
            if (acc[k] != target[k]) return false;
        return true;
    };
    // depth-first over root exponents
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == ctx.root_count()) {
            if (matches()) out.push_back(cur);
            return;
        }
        const Root& rt = ctx.root(pos);
        for (int e = 0; used + e <= maxdeg; ++e) {
            cur[pos] = e;
            acc[rt.i - 1] -= e;
            acc[rt.j - 1] += e;
            self(self, pos + 1, used + e);
            acc[rt.i - 1] += e;
            acc[rt.j - 1] -= e;
        }
        cur[pos] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

/// Enumerate all lowering monomials of total degree <= maxdeg.
inline std::vector<LowerMonomial> all_lowering_monomials(const AlgebraContext& ctx,
                                                         int maxdeg) {
    std::vector<LowerMonomial> out;
    LowerMonomial cur(ctx.root_count(), 0);
    auto rec = [&](auto&& self, int pos, int used) -> void {
        if (pos == ctx.root_count()) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; used + e <= maxdeg; ++e) {
            cur[pos] = e;
            self(self, pos + 1, used + e);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, 0);
    return out;
}

/// Module-level Shapovalov pairing: coefficient of the highest vector in
/// involution(u2) . u1 . v.
inline QRat contravariant_form(const AlgebraContext& ctx, const LowerMonomial& u1,
                               const LowerMonomial& u2, const HighestWeight& lambda,
                               InvolutionKind kind, QMode q_mode, int split_n = 0) {
    VermaVector w = VermaVector::monomial_vector(ctx, lambda, u1);
    PBWKey k2{u2, std::vector<int>(ctx.root_count(), 0)};
    AlgebraElement m2 = AlgebraElement::monomial(ctx, k2, ctx.cr_one());
    AlgebraElement m2star = involution(ctx, m2, kind, q_mode, split_n);
    VermaVector r = act(ctx, m2star, w);
    LowerMonomial empty(ctx.root_count(), 0);
    auto it = r.terms().find(empty);
    return it == r.terms().end() ? QRat(0) : it->second;
}

} // namespace qreduce
