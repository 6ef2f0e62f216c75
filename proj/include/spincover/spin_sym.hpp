#pragma once

// Exact spin character values of the double covers of S_n and A_n, via the
// Murnaghan-Nakayama recursions with the classical special values on the
// strict-type classes.
//
// Conventions (the +- anchors, fixed once for the whole library):
//  * on the plus-tagged class of type lambda (strict, negative sign), the plus
//    character takes the value +i^{(n-l+1)/2} sqrt(lambda_1 lambda_2 .../2);
//  * on the a-half of the alternating class of type lambda (strict, positive
//    sign), xi-bar^+ - xi-bar^- = +i^{(n-l)/2} sqrt(lambda_1 lambda_2 ...);
//  * plus-tagged classes are the classes of the canonical representatives
//    (odd-order lifts of the canonical permutation for all-odd types, sign-0
//    canonical lifts otherwise).
// Values match the minus cover (t_j^2 = z) at the canonical representatives;
// the table itself is cover-independent.

#include <map>
#include <tuple>

#include "spincover/covers.hpp"
#include "spincover/cyclo.hpp"
#include "spincover/partitions.hpp"

namespace spincover {

struct SpinCharLabel {
    StrictPartition lambda;
    int variant = 0;  // 0 self-associate; +1 / -1 for an associate pair

    bool operator==(const SpinCharLabel&) const = default;
    bool operator<(const SpinCharLabel& o) const {
        if (lambda != o.lambda) return lambda < o.lambda;
        return variant < o.variant;
    }
};

// Spin character labels of S~_n per Schur's theorem.
inline std::vector<SpinCharLabel> sym_spin_labels(int n) {
    std::vector<SpinCharLabel> out;
    for (const auto& lambda : partitions::strict_partitions(n)) {
        if (partitions::sigma(lambda) == 1) out.push_back({lambda, 0});
        else {
            out.push_back({lambda, +1});
            out.push_back({lambda, -1});
        }
    }
    return out;
}

// Spin character labels of A~_n (restrictions / constituents).
inline std::vector<SpinCharLabel> alt_spin_labels(int n) {
    std::vector<SpinCharLabel> out;
    for (const auto& lambda : partitions::strict_partitions(n)) {
        if (partitions::sigma(lambda) == -1) out.push_back({lambda, 0});
        else {
            out.push_back({lambda, +1});
            out.push_back({lambda, -1});
        }
    }
    return out;
}

class SpinSymTable {
public:
    // (-1)^{(q^2-1)/8} as a plain sign.
    static int q_sign(int q) { return ((static_cast<long>(q) * q - 1) / 8) % 2 ? -1 : 1; }

    // xi_lambda^{(variant)} on the S~_n class (pi, tag).
    CycloNum value(const StrictPartition& lambda, int variant, const Partition& pi, Tag tag) {
        if (partitions::size_of(lambda) != partitions::size_of(pi))
            throw std::domain_error("spin char: size mismatch");
        if ((variant == 0) != (partitions::sigma(lambda) == 1))
            throw std::domain_error("spin char: variant incompatible with sigma(lambda)");
        if (tag == Tag::minus) return -value_plus(lambda, variant, pi);
        return value_plus(lambda, variant, pi);
    }

    // xi-bar_lambda^{(variant)} on the A~_n class model.
    CycloNum alt_value(const StrictPartition& lambda, int variant, const AltClassLabel& cls) {
        if (partitions::size_of(lambda) != partitions::size_of(cls.type))
            throw std::domain_error("alt spin char: size mismatch");
        if (partitions::sigma(cls.type) != 1)
            throw std::domain_error("alt spin char: class not in the alternating cover");
        if ((variant == 0) != (partitions::sigma(lambda) == -1))
            throw std::domain_error("alt spin char: variant incompatible with sigma(lambda)");
        if (cls.zTag == 0) return CycloNum();  // fully merged classes carry no spin values
        int v = variant;
        if (cls.half == 2) v = -v;  // the b-half is the odd conjugate of the a-half
        CycloNum val = alt_value_plus(lambda, v, cls.type);
        return cls.zTag < 0 ? -val : val;
    }

    // Degree by Schur's bar-length formula (test oracle).
    static BigInt degree_oracle(const StrictPartition& lambda) {
        int n = partitions::size_of(lambda), l = partitions::length(lambda);
        Rational deg(1);
        // n! / (prod lambda_i!) * prod_{i<j} (li - lj)/(li + lj), times 2^{floor((n-l)/2)}.
        BigInt nf = 1;
        for (int k = 2; k <= n; ++k) nf *= k;
        deg *= Rational(nf);
        for (int part : lambda) {
            BigInt pf = 1;
            for (int k = 2; k <= part; ++k) pf *= k;
            deg /= Rational(pf);
        }
        for (int i = 0; i < l; ++i)
            for (int j = i + 1; j < l; ++j)
                deg *= Rational(lambda[i] - lambda[j], lambda[i] + lambda[j]);
        for (int k = 0; k < (n - l) / 2; ++k) deg *= 2;
        deg.canonicalize();
        if (deg.get_den() != 1) throw std::logic_error("degree oracle: non-integer degree");
        return deg.get_num();
    }

private:
    std::map<std::tuple<StrictPartition, int, Partition>, CycloNum> memo_;
    std::map<std::tuple<StrictPartition, int, Partition>, CycloNum> altMemo_;

    // Value at the canonical (plus-tagged) representative of type pi.
    CycloNum value_plus(const StrictPartition& lambda, int variant, const Partition& pi) {
        if (lambda.empty()) return CycloNum(1);
        auto key = std::make_tuple(lambda, variant, pi);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        CycloNum result;
        if (!partitions::all_parts_odd(pi)) {
            if (partitions::sigma(lambda) == -1 && pi == lambda) {
                int n = partitions::size_of(lambda), l = partitions::length(lambda);
                long prod = 1;
                for (int part : lambda) prod *= part;
                CycloNum base = i_power((n - l + 1) / 2) * CycloNum::sqrt_integer(prod / 2);
                result = variant > 0 ? base : -base;
            }
            // otherwise zero (vanishing part of the special-value theorem)
        } else {
            int q = pi.front();
            Partition rest(pi.begin() + 1, pi.end());
            int s = q_sign(q);
            CycloNum rootq = i_power((q - 1) / 2) * CycloNum::sqrt_odd(q);
            for (const auto& bar : partitions::remove_q_bars(lambda, q)) {
                const StrictPartition& mu = bar.result;
                int sl = partitions::sigma(lambda), sm = partitions::sigma(mu);
                int m = (sl == 1 && sm == -1) ? 1 : 0;
                CycloNum alpha((bar.leg % 2 ? -1 : 1) * (m ? 2 : 1));
                if (sm == 1) {
                    // a = s * alpha, single self-associate target.
                    result += CycloNum(s) * alpha * value_plus(mu, 0, rest);
                } else if (sl == 1) {
                    CycloNum a = CycloNum(Rational(s, 2)) * alpha;
                    result += a * (value_plus(mu, +1, rest) + value_plus(mu, -1, rest));
                } else {
                    for (int eta : {+1, -1}) {
                        CycloNum a = CycloNum(Rational(s, 2)) *
                                     (alpha + CycloNum(variant * eta) * rootq);
                        result += a * value_plus(mu, eta, rest);
                    }
                }
            }
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

    // Alternating-side value at the canonical representative (a-half).
    CycloNum alt_value_plus(const StrictPartition& lambda, int variant, const Partition& pi) {
        if (lambda.empty()) return CycloNum(1);
        auto key = std::make_tuple(lambda, variant, pi);
        auto it = altMemo_.find(key);
        if (it != altMemo_.end()) return it->second;
        CycloNum result;
        int sl = partitions::sigma(lambda);
        if (sl == -1) {
            // Restriction of either member of the pair; unsplit classes give 0.
            Tag tag = partitions::all_parts_odd(pi) ? Tag::plus : Tag::unsplit;
            result = value(lambda, +1, pi, tag);
        } else if (pi == lambda) {
            int n = partitions::size_of(lambda), l = partitions::length(lambda);
            long prod = 1;
            for (int part : lambda) prod *= part;
            CycloNum diff = i_power((n - l) / 2) * CycloNum::sqrt_integer(prod);
            CycloNum sum;  // xi_lambda at the containing S~-class
            if (partitions::all_parts_odd(lambda)) sum = value_plus(lambda, 0, lambda);
            result = (sum + CycloNum(variant) * diff) * CycloNum(Rational(1, 2));
        } else if (partitions::all_parts_odd(pi)) {
            int q = pi.front();
            Partition rest(pi.begin() + 1, pi.end());
            int s = q_sign(q);
            CycloNum rootq = i_power((q - 1) / 2) * CycloNum::sqrt_odd(q);
            for (const auto& bar : partitions::remove_q_bars(lambda, q)) {
                const StrictPartition& mu = bar.result;
                int sm = partitions::sigma(mu);
                int m = (sl == 1 && sm == -1) ? 1 : 0;
                CycloNum alpha((bar.leg % 2 ? -1 : 1) * (m ? 2 : 1));
                if (sm == -1) {
                    CycloNum a = CycloNum(Rational(s, 2)) * alpha;
                    result += a * alt_value_plus(mu, 0, rest);
                } else {
                    for (int eta : {+1, -1}) {
                        CycloNum a = CycloNum(Rational(s, 2)) *
                                     (alpha + CycloNum(variant * eta) * rootq);
                        result += a * alt_value_plus(mu, eta, rest);
                    }
                }
            }
        }
        altMemo_.emplace(std::move(key), result);
        return result;
    }
};

}  // namespace spincover
