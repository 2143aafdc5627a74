#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "qreduce/errors.hpp"

namespace qreduce {

/// Integral affine expression in the Cartan symbols e_11..e_NN.
class AffineExpr {
public:
    AffineExpr() = default;

    AffineExpr(std::vector<int> coeffs, long long constant)
        : coeffs_(std::move(coeffs)), constant_(constant) {}

    static AffineExpr constant_expr(int nvars, long long c) {
        return AffineExpr(std::vector<int>(nvars, 0), c);
    }

    /// phi_{ij} = e_ii - e_jj + j - i (1-based i, j).
    static AffineExpr phi(int i, int j, int nvars) {
        if (i < 1 || j < 1 || i > nvars || j > nvars)
            throw IndexError("phi: index out of range");
        std::vector<int> c(nvars, 0);
        c[i - 1] += 1;
        c[j - 1] -= 1;
        return AffineExpr(std::move(c), j - i);
    }

    int nvars() const { return static_cast<int>(coeffs_.size()); }
    const std::vector<int>& coeffs() const { return coeffs_; }
    long long constant() const { return constant_; }

    bool is_constant() const {
        for (int c : coeffs_)
            if (c != 0) return false;
        return true;
    }

    AffineExpr operator+(long long s) const { return AffineExpr(coeffs_, constant_ + s); }
    AffineExpr operator-(long long s) const { return AffineExpr(coeffs_, constant_ - s); }

    AffineExpr operator-() const {
        std::vector<int> c(coeffs_.size());
        for (size_t k = 0; k < coeffs_.size(); ++k) c[k] = -coeffs_[k];
        return AffineExpr(std::move(c), -constant_);
    }

    friend AffineExpr operator+(const AffineExpr& a, const AffineExpr& b) {
        std::vector<int> c(a.coeffs_.size());
        for (size_t k = 0; k < c.size(); ++k) c[k] = a.coeffs_[k] + b.coeffs_[k];
        return AffineExpr(std::move(c), a.constant_ + b.constant_);
    }

    bool operator==(const AffineExpr& o) const {
        return coeffs_ == o.coeffs_ && constant_ == o.constant_;
    }

    long long eval(const std::vector<long long>& weight) const {
        long long v = constant_;
        for (size_t k = 0; k < coeffs_.size(); ++k) v += coeffs_[k] * weight[k];
        return v;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool any = false;
        for (size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0) continue;
            if (any) os << (coeffs_[k] > 0 ? "+" : "");
            if (coeffs_[k] == -1)
                os << "-";
            else if (coeffs_[k] != 1)
                os << coeffs_[k] << "*";
            os << "e" << (k + 1) << (k + 1);
            any = true;
        }
        if (constant_ != 0 || !any) {
            if (any && constant_ > 0) os << "+";
            os << constant_;
        }
        return os.str();
    }

private:
    std::vector<int> coeffs_;
    long long constant_ = 0;
};

} // namespace qreduce
