#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qreduce/cartan_rat.hpp"

namespace qreduce {

/// Positive root eps_i - eps_j, 1 <= i < j <= N.
struct Root {
    int i = 0;
    int j = 0;
    bool operator==(const Root& o) const { return i == o.i && j == o.j; }
};

enum class InvolutionKind { Compact, Noncompact };
enum class QMode { Real, Circular };

/// A letter of the Cartan-Weyl alphabet: a root vector, raising (e_ij) or
/// lowering (e_ji). Encoded as 2*rootIndex + (raising ? 1 : 0).
using Letter = int;

inline constexpr Letter make_letter(int root_idx, bool raising) {
    return 2 * root_idx + (raising ? 1 : 0);
}
inline constexpr int letter_root(Letter l) { return l >> 1; }
inline constexpr bool letter_raising(Letter l) { return (l & 1) != 0; }

/// PBW monomial signature: exponents of lowering and raising root vectors in
/// the fixed normal order. The Cartan part lives in the coefficient.
struct PBWKey {
    std::vector<int> low;
    std::vector<int> high;

    bool operator<(const PBWKey& o) const {
        if (low != o.low) return low < o.low;
        return high < o.high;
    }
    bool operator==(const PBWKey& o) const { return low == o.low && high == o.high; }

    int total_degree() const {
        int d = 0;
        for (int e : low) d += e;
        for (int e : high) d += e;
        return d;
    }
    bool is_scalar() const { return total_degree() == 0; }
};

class AlgebraElement;

/// The quantum algebra U_q(gl(N)) presented as a PBW rewriting engine over the
/// fixed normal ordering (1,2) < (1,3) < (2,3) < (1,4) < ... of positive roots.
class AlgebraContext {
public:
    explicit AlgebraContext(int N, int degree_cap = 64) : N_(N), degree_cap_(degree_cap) {
        if (N < 2) throw InvalidRank("make_algebra: need N >= 2");
        for (int j = 2; j <= N; ++j)
            for (int i = 1; i < j; ++i) roots_.push_back(Root{i, j});
        root_index_.assign(N + 1, std::vector<int>(N + 1, -1));
        for (size_t k = 0; k < roots_.size(); ++k)
            root_index_[roots_[k].i][roots_[k].j] = static_cast<int>(k);
    }

    int rank() const { return N_; }
    int degree_cap() const { return degree_cap_; }
    int root_count() const { return static_cast<int>(roots_.size()); }
    const std::vector<Root>& roots() const { return roots_; }
    const Root& root(int idx) const { return roots_[idx]; }

    int root_index(int i, int j) const {
        if (i < 1 || j < 1 || i >= j || j > N_) throw IndexError("root_index: bad root");
        return root_index_[i][j];
    }

    /// Weight of e_ab as a shift of the Cartan vector (1-based a, b).
    std::vector<long long> letter_weight(Letter l) const {
        const Root& r = roots_[letter_root(l)];
        std::vector<long long> w(N_, 0);
        if (letter_raising(l)) {
            w[r.i - 1] = 1;
            w[r.j - 1] = -1;
        } else {
            w[r.i - 1] = -1;
            w[r.j - 1] = 1;
        }
        return w;
    }

    std::vector<long long> word_weight(const std::vector<Letter>& word) const {
        std::vector<long long> w(N_, 0);
        for (Letter l : word) {
            const Root& r = roots_[letter_root(l)];
            int s = letter_raising(l) ? 1 : -1;
            w[r.i - 1] += s;
            w[r.j - 1] -= s;
        }
        return w;
    }

    CartanRat cr_one() const { return CartanRat::constant(N_, 1); }
    CartanRat cr_int(long long v) const { return CartanRat::constant(N_, v); }
    CartanRat cr_q(long long e) const {
        return CartanRat::from_qrat(N_, QRat::q_power(e));
    }
    /// Monomial q^{qe} * t_a * t_b^{-1} (1-based; 0 skips the slot).
    CartanRat cr_mono(long long qe, int a, int b) const {
        std::vector<int> te(N_, 0);
        if (a > 0) te[a - 1] += 1;
        if (b > 0) te[b - 1] -= 1;
        return CartanRat::q_monomial(N_, qe, std::move(te));
    }
    /// (t_i/t_j - t_j/t_i)/(q - q^{-1}), the Cartan term of [e_ij, e_ji].
    CartanRat cartan_h(int i, int j) const {
        return (cr_mono(0, i, j) - cr_mono(0, j, i)) /
               (cr_q(1) - cr_q(-1));
    }

    using RuleRHS = std::vector<std::pair<std::vector<Letter>, CartanRat>>;

    /// Straightening rule for an out-of-order adjacent pair x*y; the CartanRat
    /// stands to the right of its word.
    const RuleRHS& pair_rule(Letter x, Letter y) const {
        auto key = std::make_pair(x, y);
        auto it = rule_cache_.find(key);
        if (it != rule_cache_.end()) return it->second;
        return rule_cache_.emplace(key, build_rule(x, y)).first->second;
    }

private:
    RuleRHS build_rule(Letter x, Letter y) const {
        const Root B = roots_[letter_root(x)];
        const Root A = roots_[letter_root(y)];
        const bool xr = letter_raising(x);
        const bool yr = letter_raising(y);
        RuleRHS rhs;
        auto word2 = [](Letter a, Letter b) { return std::vector<Letter>{a, b}; };

        if (xr && yr) {
            // raising pair, root(y) < root(x) in normal order
            if (A.j == B.i) { // chain (i,j)(j,l): E_jl E_ij = q E_ij E_jl - q E_il
                rhs.push_back({word2(y, x), cr_q(1)});
                rhs.push_back({{make_letter(root_index(A.i, B.j), true)}, -cr_q(1)});
            } else if (A.j < B.i || (B.i < A.i && A.j < B.j)) {
                // separated or nested: plain commute
                rhs.push_back({word2(y, x), cr_one()});
            } else if (A.i == B.i || A.j == B.j) {
                // shared endpoint: E_x E_y = q^{-1} E_y E_x
                rhs.push_back({word2(y, x), cr_q(-1)});
            } else {
                // crossing: yi < xi < yj < xj
                rhs.push_back({word2(y, x), cr_one()});
                Letter e1 = make_letter(root_index(B.i, A.j), true);
                Letter e2 = make_letter(root_index(A.i, B.j), true);
                rhs.push_back({word2(e1, e2), -(cr_q(1) - cr_q(-1))});
            }
            return rhs;
        }

        if (!xr && !yr) {
            // lowering pair, root(y) < root(x)
            if (A.j == B.i) { // F_jl F_ij = q F_ij F_jl + F_il
                rhs.push_back({word2(y, x), cr_q(1)});
                rhs.push_back({{make_letter(root_index(A.i, B.j), false)}, cr_one()});
            } else if (A.j < B.i || (B.i < A.i && A.j < B.j)) {
                rhs.push_back({word2(y, x), cr_one()});
            } else if (A.i == B.i || A.j == B.j) {
                rhs.push_back({word2(y, x), cr_q(-1)});
            } else {
                rhs.push_back({word2(y, x), cr_one()});
                Letter f1 = make_letter(root_index(B.i, A.j), false);
                Letter f2 = make_letter(root_index(A.i, B.j), false);
                rhs.push_back({word2(f1, f2), -(cr_q(1) - cr_q(-1))});
            }
            return rhs;
        }

        // x raising (root B), y lowering (root A): always moves F left.
        rhs.push_back({word2(y, x), cr_one()});
        if (A == B) {
            rhs.push_back({{}, cartan_h(B.i, B.j)});
            return rhs;
        }
        if (B.j <= A.i || A.j <= B.i) return rhs;                 // separated or touching
        if ((B.i < A.i && A.j < B.j) || (A.i < B.i && B.j < A.j)) // strictly nested
            return rhs;
        if (A.i == B.i) {
            if (A.j < B.j) {
                // E_il F_ij = F_ij E_il - E_jl t_j / t_i
                Letter e = make_letter(root_index(A.j, B.j), true);
                rhs.push_back({{e}, -cr_mono(0, A.j, B.i)});
            } else {
                // E_ij F_il = F_il E_ij - F_jl q t_i / t_j
                Letter f = make_letter(root_index(B.j, A.j), false);
                rhs.push_back({{f}, -cr_mono(1, B.i, B.j)});
            }
            return rhs;
        }
        if (A.j == B.j) {
            if (A.i < B.i) {
                // E_kl F_il = F_il E_kl + F_ik t_l / t_k
                Letter f = make_letter(root_index(A.i, B.i), false);
                rhs.push_back({{f}, cr_mono(0, B.j, B.i)});
            } else {
                // E_il F_kl = F_kl E_il + E_ik q^{-1} t_k / t_l
                Letter e = make_letter(root_index(B.i, A.i), true);
                rhs.push_back({{e}, cr_mono(-1, A.i, B.j)});
            }
            return rhs;
        }
        if (A.i < B.i && B.i < A.j && A.j < B.j) {
            // E_jl F_ik = F_ik E_jl + (q - q^{-1}) F_ij E_kl t_k / t_j
            Letter f = make_letter(root_index(A.i, B.i), false);
            Letter e = make_letter(root_index(A.j, B.j), true);
            rhs.push_back({word2(f, e), (cr_q(1) - cr_q(-1)) * cr_mono(0, A.j, B.i)});
            return rhs;
        }
        // B.i < A.i < B.j < A.j
        // E_ik F_jl = F_jl E_ik + (q^{-1} - q) F_kl E_ij t_j / t_k
        Letter f = make_letter(root_index(B.j, A.j), false);
        Letter e = make_letter(root_index(B.i, A.i), true);
        rhs.push_back({word2(f, e), (cr_q(-1) - cr_q(1)) * cr_mono(0, A.i, B.j)});
        return rhs;
    }

    int N_;
    int degree_cap_;
    std::vector<Root> roots_;
    std::vector<std::vector<int>> root_index_;
    mutable std::map<std::pair<Letter, Letter>, RuleRHS> rule_cache_;
};

/// Finite sum of PBW-canonical terms (lowering monomial) * CartanRat * (raising
/// monomial), keyed by the exponent signature.
class AlgebraElement {
public:
    AlgebraElement() = default;
    explicit AlgebraElement(const AlgebraContext& ctx) : ctx_(&ctx) {}

    static AlgebraElement zero(const AlgebraContext& ctx) { return AlgebraElement(ctx); }

    static AlgebraElement one(const AlgebraContext& ctx) {
        AlgebraElement e(ctx);
        e.add_term(PBWKey{std::vector<int>(ctx.root_count(), 0),
                          std::vector<int>(ctx.root_count(), 0)},
                   ctx.cr_one());
        return e;
    }

    static AlgebraElement scalar(const AlgebraContext& ctx, CartanRat c) {
        AlgebraElement e(ctx);
        e.add_term(PBWKey{std::vector<int>(ctx.root_count(), 0),
                          std::vector<int>(ctx.root_count(), 0)},
                   std::move(c));
        return e;
    }

    /// Single root vector e_ab (a != b, 1-based).
    static AlgebraElement generator(const AlgebraContext& ctx, int a, int b) {
        if (a == b) throw IndexError("generator: a != b required");
        AlgebraElement e(ctx);
        PBWKey k{std::vector<int>(ctx.root_count(), 0),
                 std::vector<int>(ctx.root_count(), 0)};
        if (a < b)
            k.high[ctx.root_index(a, b)] = 1;
        else
            k.low[ctx.root_index(b, a)] = 1;
        e.add_term(std::move(k), ctx.cr_one());
        return e;
    }

    /// q^{+e_aa} or q^{-e_aa}.
    static AlgebraElement cartan_power(const AlgebraContext& ctx, int a, int sign) {
        std::vector<int> te(ctx.rank(), 0);
        te[a - 1] = sign > 0 ? 1 : -1;
        return scalar(ctx, CartanRat::q_monomial(ctx.rank(), 0, std::move(te)));
    }

    static AlgebraElement monomial(const AlgebraContext& ctx, PBWKey key, CartanRat c) {
        AlgebraElement e(ctx);
        e.add_term(std::move(key), std::move(c));
        return e;
    }

    const AlgebraContext& context() const { return *ctx_; }
    const std::map<PBWKey, CartanRat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int max_total_degree() const {
        int d = 0;
        for (const auto& [k, c] : terms_) d = std::max(d, k.total_degree());
        return d;
    }

    void add_term(PBWKey key, CartanRat c) {
        if (c.is_zero()) return;
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            terms_.emplace(std::move(key), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
        AlgebraElement r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, c);
        return r;
    }
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
        AlgebraElement r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k, -c);
        return r;
    }
    AlgebraElement operator-() const {
        AlgebraElement r(*ctx_);
        for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
        return r;
    }
    AlgebraElement scaled(const CartanRat& s) const {
        AlgebraElement r(*ctx_);
        for (const auto& [k, c] : terms_) r.add_term(k, c * s);
        return r;
    }
    AlgebraElement scaled_q(const QRat& s) const {
        return scaled(CartanRat::from_qrat(ctx_->rank(), s));
    }

    /// Semantic equality (per-term cross-multiplied coefficient comparison).
    bool equals(const AlgebraElement& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin();
        auto jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt) {
            if (!(it->first == jt->first)) return false;
            if (!it->second.equals(jt->second)) return false;
        }
        return true;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.to_string() << ")";
            for (int r = 0; r < ctx_->root_count(); ++r)
                if (k.low[r] > 0) {
                    os << "*e" << ctx_->root(r).j << ctx_->root(r).i;
                    if (k.low[r] > 1) os << "^" << k.low[r];
                }
            for (int r = 0; r < ctx_->root_count(); ++r)
                if (k.high[r] > 0) {
                    os << "*e" << ctx_->root(r).i << ctx_->root(r).j;
                    if (k.high[r] > 1) os << "^" << k.high[r];
                }
        }
        return os.str();
    }

private:
    const AlgebraContext* ctx_ = nullptr;
    std::map<PBWKey, CartanRat> terms_;
};

namespace detail {

inline std::vector<Letter> key_letters(const AlgebraContext& ctx, const PBWKey& k) {
    std::vector<Letter> w;
    for (int r = 0; r < ctx.root_count(); ++r)
        for (int e = 0; e < k.low[r]; ++e) w.push_back(make_letter(r, false));
    for (int r = 0; r < ctx.root_count(); ++r)
        for (int e = 0; e < k.high[r]; ++e) w.push_back(make_letter(r, true));
    return w;
}

/// True if x may stand immediately left of y in a canonical word.
inline bool pair_in_order(Letter x, Letter y) {
    const bool xr = letter_raising(x);
    const bool yr = letter_raising(y);
    if (!xr && yr) return true;
    if (xr && !yr) return false;
    return letter_root(x) <= letter_root(y);
}

/// Straighten word * coeff into PBW canonical terms, accumulating into out.
inline void normalize_word(const AlgebraContext& ctx, std::vector<Letter> word,
                           CartanRat coeff, AlgebraElement& out) {
    std::vector<std::pair<std::vector<Letter>, CartanRat>> work;
    work.emplace_back(std::move(word), std::move(coeff));
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        int viol = -1;
        for (size_t p = 0; p + 1 < w.size(); ++p)
            if (!pair_in_order(w[p], w[p + 1])) {
                viol = static_cast<int>(p);
                break;
            }
        if (viol < 0) {
            PBWKey key{std::vector<int>(ctx.root_count(), 0),
                       std::vector<int>(ctx.root_count(), 0)};
            std::vector<long long> ew(ctx.rank(), 0);
            for (Letter l : w) {
                if (letter_raising(l)) {
                    key.high[letter_root(l)] += 1;
                    const Root& r = ctx.root(letter_root(l));
                    ew[r.i - 1] += 1;
                    ew[r.j - 1] -= 1;
                } else {
                    key.low[letter_root(l)] += 1;
                }
            }
            // move the right-standing coefficient left across the raising block
            std::vector<long long> neg(ew.size());
            for (size_t k = 0; k < ew.size(); ++k) neg[k] = -ew[k];
            out.add_term(std::move(key), c.shifted(neg));
            continue;
        }
        const auto& rhs = ctx.pair_rule(w[viol], w[viol + 1]);
        std::vector<Letter> suffix(w.begin() + viol + 2, w.end());
        std::vector<long long> sw = ctx.word_weight(suffix);
        for (const auto& [sub, sc] : rhs) {
            std::vector<Letter> nw(w.begin(), w.begin() + viol);
            nw.insert(nw.end(), sub.begin(), sub.end());
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            work.emplace_back(std::move(nw), sc.shifted(sw) * c);
        }
    }
}

} // namespace detail

/// Factory honoring the spec's make_algebra contract.
inline AlgebraContext make_algebra(int N, int degree_cap = 64) {
    return AlgebraContext(N, degree_cap);
}

/// Product in PBW canonical form. Throws DegreeCapExceeded beyond the
/// context's configured bound.
inline AlgebraElement multiply(const AlgebraContext& ctx, const AlgebraElement& a,
                               const AlgebraElement& b) {
    AlgebraElement out(ctx);
    for (const auto& [ka, ca] : a.terms()) {
        std::vector<Letter> wa = detail::key_letters(ctx, ka);
        for (const auto& [kb, cb] : b.terms()) {
            std::vector<Letter> wb = detail::key_letters(ctx, kb);
            if (static_cast<int>(wa.size() + wb.size()) > ctx.degree_cap())
                throw DegreeCapExceeded("multiply: degree cap exceeded");
            // a's Cartan sits between a's blocks: push it right across a's
            // raising block and the whole of b; b's across b's raising block.
            std::vector<long long> shift_a(ctx.rank(), 0);
            std::vector<long long> shift_b(ctx.rank(), 0);
            for (int r = 0; r < ctx.root_count(); ++r) {
                const Root& rt = ctx.root(r);
                long long ha = ka.high[r];
                long long hb = kb.high[r];
                long long lb = kb.low[r];
                shift_a[rt.i - 1] += ha + hb - lb;
                shift_a[rt.j - 1] += -ha - hb + lb;
                shift_b[rt.i - 1] += hb;
                shift_b[rt.j - 1] += -hb;
            }
            CartanRat coeff = ca.shifted(shift_a) * cb.shifted(shift_b);
            std::vector<Letter> w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            detail::normalize_word(ctx, std::move(w), std::move(coeff), out);
        }
    }
    return out;
}

/// Composite root vector via the q-commutator through index k:
/// e_ab = [e_ak, e_kb]_{q^{-1}} for a < b, e_ab = [e_ak, e_kb]_q for a > b.
inline AlgebraElement composite_root_vector(const AlgebraContext& ctx, int a, int b,
                                            int k = 0) {
    int lo = std::min(a, b);
    int hi = std::max(a, b);
    if (k == 0) k = lo + 1;
    if (!(1 <= lo && lo < k && k < hi && hi <= ctx.rank()))
        throw IndexError("composite_root_vector: need lo < k < hi within rank");
    AlgebraElement x = AlgebraElement::generator(ctx, a, k);
    AlgebraElement y = AlgebraElement::generator(ctx, k, b);
    long long qpow = a < b ? -1 : 1;
    return multiply(ctx, x, y) - multiply(ctx, y, x).scaled(ctx.cr_q(qpow));
}

/// Weight of a PBW monomial as an integer vector.
inline std::vector<long long> weight(const AlgebraContext& ctx, const PBWKey& k) {
    std::vector<long long> w(ctx.rank(), 0);
    for (int r = 0; r < ctx.root_count(); ++r) {
        const Root& rt = ctx.root(r);
        long long net = static_cast<long long>(k.high[r]) - k.low[r];
        w[rt.i - 1] += net;
        w[rt.j - 1] -= net;
    }
    return w;
}

namespace detail {

/// Expansion of a Cartan-Weyl letter into words over simple (adjacent-root)
/// letters, by unfolding the defining q-commutators.
inline std::vector<std::pair<std::vector<Letter>, QRat>> chevalley_expansion(
    const AlgebraContext& ctx, Letter l) {
    const Root& r = ctx.root(letter_root(l));
    const bool raising = letter_raising(l);
    if (r.j == r.i + 1) return {{{l}, QRat(1)}};
    Letter head = make_letter(ctx.root_index(r.i, r.i + 1), raising);
    Letter tail = make_letter(ctx.root_index(r.i + 1, r.j), raising);
    auto ta = chevalley_expansion(ctx, raising ? head : tail);
    auto tb = chevalley_expansion(ctx, raising ? tail : head);
    // raising: e_ij = e_{i,i+1} e_{i+1,j} - q^{-1} e_{i+1,j} e_{i,i+1}
    // lowering: e_ji = e_{j,i+1} e_{i+1,i} - q e_{i+1,i} e_{j,i+1}
    QRat qf = raising ? QRat::q_power(-1) : QRat::q_power(1);
    std::vector<std::pair<std::vector<Letter>, QRat>> out;
    for (const auto& [wa, ca] : ta)
        for (const auto& [wb, cb] : tb) {
            std::vector<Letter> w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.push_back({std::move(w), ca * cb});
            std::vector<Letter> v = wb;
            v.insert(v.end(), wa.begin(), wa.end());
            out.push_back({std::move(v), -(qf * ca * cb)});
        }
    return out;
}

} // namespace detail

namespace detail {

/// Image of a single Cartan-Weyl letter under the involution, via its
/// Chevalley expansion (reversed, simple letters swapped, scalars conjugated).
inline AlgebraElement letter_involution(const AlgebraContext& ctx, Letter l,
                                        InvolutionKind kind, QMode q_mode,
                                        int split_n) {
    AlgebraElement li(ctx);
    for (const auto& [w, coef] : chevalley_expansion(ctx, l)) {
        AlgebraElement term = AlgebraElement::one(ctx);
        QRat sign(1);
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            const Root& rt = ctx.root(letter_root(*it));
            bool to_raising = !letter_raising(*it);
            if (kind == InvolutionKind::Noncompact && rt.i == split_n) sign = -sign;
            term = multiply(ctx, term,
                            AlgebraElement::generator(ctx, to_raising ? rt.i : rt.j,
                                                      to_raising ? rt.j : rt.i));
        }
        QRat cimg = q_mode == QMode::Circular ? coef.bar() : coef;
        li = li + term.scaled_q(cimg * sign);
    }
    return li;
}

} // namespace detail

/// Antilinear antihomomorphism: the compact Cartan involution (star) or the
/// noncompact u(n, N-n) involution with its sign on the n-th simple pair.
/// Composite letters are expanded into Chevalley words first, so the real-q
/// variant lands on the primed composite vectors automatically.
inline AlgebraElement involution(const AlgebraContext& ctx, const AlgebraElement& a,
                                 InvolutionKind kind, QMode q_mode, int split_n = 0) {
    if (kind == InvolutionKind::Noncompact &&
        !(1 <= split_n && split_n < ctx.rank()))
        throw InvalidSplit("involution: noncompact split index out of range");
    AlgebraElement result(ctx);
    for (const auto& [key, c] : a.terms()) {
        // (F C E)^* = E^* C^* F^*, blocks reversed letterwise.
        CartanRat cc = q_mode == QMode::Circular ? c.bar() : c;
        AlgebraElement img = AlgebraElement::one(ctx);
        for (int r = ctx.root_count() - 1; r >= 0; --r)
            for (int e = 0; e < key.high[r]; ++e)
                img = multiply(ctx, img,
                               detail::letter_involution(ctx, make_letter(r, true),
                                                         kind, q_mode, split_n));
        img = multiply(ctx, img, AlgebraElement::scalar(ctx, cc));
        for (int r = ctx.root_count() - 1; r >= 0; --r)
            for (int e = 0; e < key.low[r]; ++e)
                img = multiply(ctx, img,
                               detail::letter_involution(ctx, make_letter(r, false),
                                                         kind, q_mode, split_n));
        result = result + img;
    }
    return result;
}

} // namespace qreduce
