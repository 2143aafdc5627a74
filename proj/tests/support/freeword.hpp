#pragma once

// Test-only brute-force realization of Verma modules using nothing but the
// Chevalley defining relations. Vectors are kept as free words in the simple
// lowering generators applied to the highest vector; no PBW data enters, so
// this is an independent oracle for the rewriting engine.

#include <map>
#include <vector>

#include "qreduce/algebra.hpp"
#include "qreduce/qrat.hpp"

namespace qreduce::testsupport {

// A free word lists simple lowering indices k (meaning e_{k+1,k}), leftmost
// letter acting last.
using FWord = std::vector<int>;

struct FreeVector {
    int N = 0;
    std::vector<long long> lambda;
    std::map<FWord, QRat> terms;

    void add(const FWord& w, const QRat& c) {
        if (c.is_zero()) return;
        auto it = terms.find(w);
        if (it == terms.end()) {
            terms.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    bool is_zero() const { return terms.empty(); }
};

inline FreeVector free_highest(int N, std::vector<long long> lambda) {
    FreeVector v;
    v.N = N;
    v.lambda = std::move(lambda);
    v.terms[{}] = QRat(1);
    return v;
}

inline std::vector<long long> fword_weight(const FreeVector& v, const FWord& w) {
    std::vector<long long> mu = v.lambda;
    for (int k : w) {
        mu[k - 1] -= 1;
        mu[k] += 1;
    }
    return mu;
}

// e_{k+1,k} action: prepend.
inline FreeVector act_f(int k, const FreeVector& v) {
    FreeVector r;
    r.N = v.N;
    r.lambda = v.lambda;
    for (const auto& [w, c] : v.terms) {
        FWord nw;
        nw.reserve(w.size() + 1);
        nw.push_back(k);
        nw.insert(nw.end(), w.begin(), w.end());
        r.add(nw, c);
    }
    return r;
}

// e_{k,k+1} action via [e_k, f_m] = delta_km (K_k K_{k+1}^{-1} - ...)/(q-q^{-1}).
inline FreeVector act_e(int k, const FreeVector& v) {
    FreeVector r;
    r.N = v.N;
    r.lambda = v.lambda;
    for (const auto& [w, c] : v.terms) {
        for (size_t p = 0; p < w.size(); ++p) {
            if (w[p] != k) continue;
            FWord rest(w.begin() + p + 1, w.end());
            std::vector<long long> mu = v.lambda;
            for (int m : rest) {
                mu[m - 1] -= 1;
                mu[m] += 1;
            }
            QRat h = qbracket(mu[k - 1] - mu[k]);
            FWord nw(w.begin(), w.begin() + p);
            nw.insert(nw.end(), rest.begin(), rest.end());
            r.add(nw, c * h);
        }
    }
    return r;
}

// q^{s e_aa} action (diagonal).
inline FreeVector act_k(int a, long long s, const FreeVector& v) {
    FreeVector r;
    r.N = v.N;
    r.lambda = v.lambda;
    for (const auto& [w, c] : v.terms)
        r.add(w, c * QRat::q_power(s * fword_weight(v, w)[a - 1]));
    return r;
}

// Action of an AlgebraElement through its Chevalley-word expansion. The middle
// Cartan coefficient is evaluated on the weight of whatever stands right of it.
inline FreeVector act_element(const AlgebraContext& ctx, const AlgebraElement& g,
                              const FreeVector& v) {
    FreeVector out;
    out.N = v.N;
    out.lambda = v.lambda;
    for (const auto& [key, cart] : g.terms()) {
        // raising block first (rightmost acts first)
        std::vector<std::pair<std::vector<int>, QRat>> combos = {{{}, QRat(1)}};
        auto fold_letter = [&](Letter l) {
            std::vector<std::pair<std::vector<int>, QRat>> next;
            for (const auto& [wl, cl] : detail::chevalley_expansion(ctx, l))
                for (const auto& [acc, ca] : combos) {
                    std::vector<int> seq;
                    // encode simple letters as +k (raising e_{k,k+1}) / -k
                    for (Letter s : wl) {
                        const Root& rt = ctx.root(letter_root(s));
                        seq.push_back(letter_raising(s) ? rt.i : -rt.i);
                    }
                    seq.insert(seq.end(), acc.begin(), acc.end());
                    next.push_back({std::move(seq), cl * ca});
                }
            combos = std::move(next);
        };
        // assemble full word: F-block letters, then Cartan marker, then E-block
        // (apply E first on the vector, then Cartan, then F).
        std::vector<Letter> eblock;
        std::vector<Letter> fblock;
        for (int r = 0; r < ctx.root_count(); ++r) {
            for (int e = 0; e < key.high[r]; ++e) eblock.push_back(make_letter(r, true));
            for (int e = 0; e < key.low[r]; ++e) fblock.push_back(make_letter(r, false));
        }
        for (auto it = eblock.rbegin(); it != eblock.rend(); ++it) fold_letter(*it);
        // combos now realize the raising block; apply to v, then Cartan, then F.
        for (const auto& [seq, cw] : combos) {
            FreeVector cur = v;
            for (auto it = seq.rbegin(); it != seq.rend() && !cur.is_zero(); ++it)
                cur = *it > 0 ? act_e(*it, cur) : act_f(-*it, cur);
            if (cur.is_zero()) continue;
            // Cartan coefficient per weight component
            FreeVector stage;
            stage.N = cur.N;
            stage.lambda = cur.lambda;
            for (const auto& [w, c] : cur.terms)
                stage.add(w, c * cart.eval(fword_weight(cur, w)));
            // lowering block via expansions
            std::vector<std::pair<std::vector<int>, QRat>> fcombos = {{{}, QRat(1)}};
            auto fold_low = [&](Letter l) {
                std::vector<std::pair<std::vector<int>, QRat>> next;
                for (const auto& [wl, cl] : detail::chevalley_expansion(ctx, l))
                    for (const auto& [acc, ca] : fcombos) {
                        std::vector<int> seq2;
                        for (Letter s : wl) {
                            const Root& rt = ctx.root(letter_root(s));
                            seq2.push_back(letter_raising(s) ? rt.i : -rt.i);
                        }
                        seq2.insert(seq2.end(), acc.begin(), acc.end());
                        next.push_back({std::move(seq2), cl * ca});
                    }
                fcombos = std::move(next);
            };
            for (auto it = fblock.rbegin(); it != fblock.rend(); ++it) fold_low(*it);
            for (const auto& [seq2, cw2] : fcombos) {
                FreeVector res = stage;
                for (auto it = seq2.rbegin(); it != seq2.rend() && !res.is_zero(); ++it)
                    res = *it > 0 ? act_e(*it, res) : act_f(-*it, res);
                for (const auto& [w, c] : res.terms) out.add(w, c * cw * cw2);
            }
        }
    }
    return out;
}

// Zero test in the module: pair against every raising word of matching content.
// Valid for weights where no small bracket [phi_ij + s] vanishes.
inline bool is_zero_module_vector(const FreeVector& v) {
    if (v.is_zero()) return true;
    // group terms by letter content (multiset)
    std::map<std::vector<int>, FreeVector> by_content;
    for (const auto& [w, c] : v.terms) {
        std::vector<int> content(v.N, 0);
        for (int k : w) content[k - 1] += 1;
        auto& fv = by_content[content];
        fv.N = v.N;
        fv.lambda = v.lambda;
        fv.add(w, c);
    }
    for (auto& [content, fv] : by_content) {
        // enumerate all raising words with this content and pair
        std::vector<int> remaining = content;
        FWord word;
        bool nonzero = false;
        auto rec = [&](auto&& self) -> void {
            if (nonzero) return;
            bool done = true;
            for (int k = 1; k <= v.N - 1; ++k)
                if (remaining[k - 1] > 0) done = false;
            if (done) {
                FreeVector cur = fv;
                for (auto it = word.rbegin(); it != word.rend() && !cur.is_zero(); ++it)
                    cur = act_e(*it, cur);
                auto it0 = cur.terms.find({});
                if (it0 != cur.terms.end() && !it0->second.is_zero()) nonzero = true;
                return;
            }
            for (int k = 1; k <= v.N - 1 && !nonzero; ++k) {
                if (remaining[k - 1] == 0) continue;
                remaining[k - 1] -= 1;
                word.push_back(k);
                self(self);
                word.pop_back();
                remaining[k - 1] += 1;
            }
        };
        rec(rec);
        if (nonzero) return false;
    }
    return true;
}

inline bool equal_module_vectors(const FreeVector& a, const FreeVector& b) {
    FreeVector d = a;
    for (const auto& [w, c] : b.terms) d.add(w, -c);
    return is_zero_module_vector(d);
}

} // namespace qreduce::testsupport
