#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_M), the value domain of all
// character computations in this library.  Elements are stored as sparse
// polynomials in the power basis of Q[x]/Phi_M(x); no floating point is used
// anywhere except in the numeric embedding helpers (test oracles / display).
//
// Stored conductors are canonical: never = 2 (mod 4), and a cheap descent by
// the gcd of the exponents runs after every operation, so rationals always
// end up at conductor 1.  Full minimization is available on demand.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace spincover {

using Rational = mpq_class;
using BigInt = mpz_class;

namespace cyclo_detail {

inline std::vector<std::pair<long, int>> factorize(long m) {
    std::vector<std::pair<long, int>> fac;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            int e = 0;
            while (m % p == 0) { m /= p; ++e; }
            fac.emplace_back(p, e);
        }
    }
    if (m > 1) fac.emplace_back(m, 1);
    return fac;
}

inline long euler_phi(long m) {
    long r = m;
    for (auto [p, e] : factorize(m)) r = r / p * (p - 1);
    return r;
}

using ZPoly = std::vector<BigInt>;  // dense, lowest degree first

inline void zpoly_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZPoly zpoly_div_exact(const ZPoly& num, const ZPoly& den) {
    ZPoly rem = num, quot(num.size(), BigInt(0));
    zpoly_trim(rem);
    while (rem.size() >= den.size()) {
        const BigInt& lead = rem.back();
        if (lead % den.back() != 0) throw std::logic_error("cyclo: inexact poly division");
        BigInt c = lead / den.back();
        size_t shift = rem.size() - den.size();
        quot[shift] = c;
        for (size_t i = 0; i < den.size(); ++i) rem[shift + i] -= c * den[i];
        zpoly_trim(rem);
    }
    if (!rem.empty()) throw std::logic_error("cyclo: nonzero remainder in exact division");
    zpoly_trim(quot);
    return quot;
}

// Phi_M(x), cached write-once.  (x^M - 1) / prod_{d|M, d<M} Phi_d(x).
inline const ZPoly& cyclotomic_poly(long m) {
    static std::map<long, ZPoly> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    for (long d = 1; d <= m; ++d) {
        if (m % d != 0 || cache.count(d)) continue;
        ZPoly num(d + 1, BigInt(0));
        num[0] = -1;
        num[d] = 1;
        for (long e = 1; e < d; ++e)
            if (d % e == 0) num = zpoly_div_exact(num, cache.at(e));
        cache.emplace(d, std::move(num));
    }
    return cache.at(m);
}

}  // namespace cyclo_detail

class CycloNum {
public:
    CycloNum() : conductor_(1) {}
    CycloNum(const Rational& r) : conductor_(1) {
        Rational c = r;
        c.canonicalize();
        if (c != 0) coords_[0] = c;
    }
    CycloNum(long num, long den) : CycloNum(Rational(num, den)) {}
    CycloNum(long num) : CycloNum(Rational(num)) {}
    CycloNum(int num) : CycloNum(Rational(num)) {}

    static CycloNum root_of_unity(long m, long k) {
        if (m < 1) throw std::domain_error("cyclo: conductor must be positive");
        k %= m;
        if (k < 0) k += m;
        CycloNum z;
        z.assign(m, {{k, Rational(1)}}, true);
        return z;
    }

    static CycloNum i() { return root_of_unity(4, 1); }
    static CycloNum sqrt2() { return root_of_unity(8, 1) + root_of_unity(8, 7); }

    // Positive real sqrt(q) for odd q >= 1 via quadratic Gauss sums: for an odd
    // prime p, sum_j (j|p) zeta_p^j = sqrt(p) if p = 1 (mod 4), i*sqrt(p) if
    // p = 3 (mod 4), with the embedding zeta_M = e^{2 pi i / M}.
    static CycloNum sqrt_odd(long q) {
        if (q <= 0 || q % 2 == 0) throw std::domain_error("sqrt_odd: argument must be odd and positive");
        CycloNum result(1);
        for (auto [p, e] : cyclo_detail::factorize(q)) {
            for (int j = 0; j < e / 2; ++j) result *= CycloNum(p);
            if (e % 2) result *= sqrt_prime(p);
        }
        return result;
    }

    static CycloNum sqrt_integer(long n) {
        if (n <= 0) throw std::domain_error("sqrt_integer: argument must be positive");
        int twos = 0;
        while (n % 2 == 0) { n /= 2; ++twos; }
        CycloNum r = sqrt_odd(n);
        for (int j = 0; j < twos / 2; ++j) r *= CycloNum(2);
        if (twos % 2) r *= sqrt2();
        return r;
    }

    long conductor() const { return conductor_; }
    bool is_zero() const { return coords_.empty(); }
    bool is_rational() const { return conductor_ == 1; }
    Rational rational_value() const {
        if (coords_.empty()) return Rational(0);
        CycloNum c = minimized();
        if (c.conductor_ != 1) throw std::domain_error("cyclo: value is not rational");
        return c.coords_.begin()->second;
    }
    const std::map<long, Rational>& coords() const { return coords_; }

    friend CycloNum operator+(const CycloNum& a, const CycloNum& b) {
        long L = std::lcm(a.conductor_, b.conductor_);
        std::map<long, Rational> sum;
        long fa = L / a.conductor_, fb = L / b.conductor_;
        for (const auto& [e, c] : a.coords_) sum[e * fa] += c;
        for (const auto& [e, c] : b.coords_) sum[e * fb] += c;
        CycloNum r;
        r.assign(L, std::move(sum), true);
        return r;
    }

    friend CycloNum operator-(const CycloNum& a, const CycloNum& b) { return a + (-b); }

    CycloNum operator-() const {
        CycloNum r = *this;
        for (auto& [e, c] : r.coords_) c = -c;
        return r;
    }

    friend CycloNum operator*(const CycloNum& a, const CycloNum& b) {
        if (a.is_zero() || b.is_zero()) return CycloNum();
        long L = std::lcm(a.conductor_, b.conductor_);
        long fa = L / a.conductor_, fb = L / b.conductor_;
        std::map<long, Rational> prod;
        for (const auto& [ea, ca] : a.coords_)
            for (const auto& [eb, cb] : b.coords_) prod[ea * fa + eb * fb] += ca * cb;
        CycloNum r;
        r.assign(L, std::move(prod), true);
        return r;
    }

    friend CycloNum operator/(const CycloNum& a, const CycloNum& b) { return a * b.inverse(); }

    CycloNum& operator+=(const CycloNum& o) { return *this = *this + o; }
    CycloNum& operator-=(const CycloNum& o) { return *this = *this - o; }
    CycloNum& operator*=(const CycloNum& o) { return *this = *this * o; }
    CycloNum& operator/=(const CycloNum& o) { return *this = *this / o; }

    CycloNum inverse() const {
        if (is_zero()) throw std::domain_error("cyclo: division by zero");
        if (conductor_ == 1) return CycloNum(Rational(1) / coords_.begin()->second);
        // Extended Euclid in Q[x]: u*a + v*Phi_M = r (unit), a^{-1} = u/r.
        long phi = cyclo_detail::euler_phi(conductor_);
        std::vector<Rational> r1(phi, Rational(0));
        for (const auto& [e, c] : coords_) r1[e] = c;
        const auto& phiPoly = cyclo_detail::cyclotomic_poly(conductor_);
        std::vector<Rational> r0(phiPoly.size());
        for (size_t j = 0; j < phiPoly.size(); ++j) r0[j] = Rational(phiPoly[j]);

        auto trim = [](std::vector<Rational>& p) { while (!p.empty() && p.back() == 0) p.pop_back(); };
        trim(r0);
        trim(r1);
        std::vector<Rational> u0, u1{Rational(1)};
        while (r1.size() > 1) {
            std::vector<Rational> q(r0.size() - r1.size() + 1, Rational(0));
            std::vector<Rational> r2 = r0;
            while (r2.size() >= r1.size()) {
                Rational c = r2.back() / r1.back();
                size_t shift = r2.size() - r1.size();
                q[shift] += c;
                for (size_t j = 0; j < r1.size(); ++j) r2[shift + j] -= c * r1[j];
                trim(r2);
            }
            std::vector<Rational> u2 = u0;
            size_t need = q.size() + u1.size() - 1;
            if (u2.size() < need) u2.resize(need, Rational(0));
            for (size_t j = 0; j < q.size(); ++j) {
                if (q[j] == 0) continue;
                for (size_t k = 0; k < u1.size(); ++k) u2[j + k] -= q[j] * u1[k];
            }
            trim(u2);
            r0 = std::move(r1);
            r1 = std::move(r2);
            u0 = std::move(u1);
            u1 = std::move(u2);
            if (r1.empty()) throw std::logic_error("cyclo: zero divisor in inverse");
        }
        Rational lead = r1[0];
        std::map<long, Rational> inv;
        for (size_t j = 0; j < u1.size(); ++j)
            if (u1[j] != 0) inv[static_cast<long>(j)] = u1[j] / lead;
        CycloNum r;
        r.assign(conductor_, std::move(inv), true);
        return r;
    }

    // Galois automorphism zeta_M -> zeta_M^s, gcd(s, M) = 1.
    CycloNum galois(long s) const {
        long m = conductor_;
        s %= m;
        if (s < 0) s += m;
        if (m == 1 || s == 1) return *this;
        if (std::gcd(s, m) != 1) throw std::domain_error("cyclo: galois exponent not coprime to conductor");
        std::map<long, Rational> img;
        for (const auto& [e, c] : coords_) img[(e * s) % m] += c;
        CycloNum r;
        r.assign(m, std::move(img), true);
        return r;
    }

    CycloNum conjugate() const { return conductor_ == 1 ? *this : galois(conductor_ - 1); }

    bool operator==(const CycloNum& o) const {
        if (conductor_ == o.conductor_) return coords_ == o.coords_;
        return (*this - o).is_zero();
    }
    bool operator!=(const CycloNum& o) const { return !(*this == o); }

    CycloNum lifted_to(long L) const {
        if (L % conductor_ != 0) throw std::domain_error("cyclo: lift target not a multiple of conductor");
        long f = L / conductor_;
        std::map<long, Rational> raw;
        for (const auto& [e, c] : coords_) raw[e * f] = c;
        CycloNum r;
        r.assign(L, std::move(raw), false);
        return r;
    }

    // True iff every coordinate in the integral power basis of Z[zeta_M] has
    // denominator coprime to p; realizes membership in the p-local ring R.
    bool is_p_integral(long p) const {
        CycloNum c = minimized();
        for (const auto& [e, q] : c.coords_)
            if (mpz_divisible_ui_p(q.get_den().get_mpz_t(), static_cast<unsigned long>(p))) return false;
        return true;
    }

    void minimize_conductor() {
        bool changed = true;
        while (changed && conductor_ > 1) {
            changed = false;
            for (auto [p, e] : cyclo_detail::factorize(conductor_)) {
                long target = conductor_ / p;
                if (target > 1 && target % 4 == 2) target /= 2;
                if (target == conductor_) continue;
                if (try_descend(target)) { changed = true; break; }
            }
        }
    }

    CycloNum minimized() const {
        CycloNum c = *this;
        c.minimize_conductor();
        return c;
    }

    // Canonical complex embedding zeta_M = e^{2 pi i / M} (display / oracles).
    std::complex<double> to_complex() const {
        long double re = 0, im = 0;
        const long double tau = 6.283185307179586476925286766559L;
        for (const auto& [e, c] : coords_) {
            long double v = static_cast<long double>(c.get_d());
            long double ang = tau * static_cast<long double>(e) / static_cast<long double>(conductor_);
            re += v * std::cos(ang);
            im += v * std::sin(ang);
        }
        return {static_cast<double>(re), static_cast<double>(im)};
    }

    // Exact expression string: sum of "c*z(M)^k" terms; rationals plain.
    std::string to_string() const {
        CycloNum c = minimized();
        if (c.coords_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [e, q] : c.coords_) {
            Rational val = q;
            if (first) {
                if (val < 0) { out << "-"; val = -val; }
            } else {
                out << (val < 0 ? " - " : " + ");
                if (val < 0) val = -val;
            }
            first = false;
            if (e == 0) {
                out << val.get_str();
            } else {
                if (val != 1) out << val.get_str() << "*";
                out << "z(" << c.conductor_ << ")";
                if (e != 1) out << "^" << e;
            }
        }
        return out.str();
    }

    static CycloNum parse(const std::string& text) {
        CycloNum total;
        size_t pos = 0;
        auto skipws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
        skipws();
        if (pos == text.size()) throw std::invalid_argument("cyclo parse: empty input");
        bool firstTerm = true;
        while (pos < text.size()) {
            skipws();
            if (pos == text.size()) break;
            int sign = 1;
            if (text[pos] == '+' || text[pos] == '-') {
                sign = text[pos] == '-' ? -1 : 1;
                ++pos;
                skipws();
            } else if (!firstTerm) {
                throw std::invalid_argument("cyclo parse: expected +/- between terms");
            }
            firstTerm = false;
            Rational coeff(1);
            bool haveCoeff = false;
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                size_t start = pos;
                while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
                coeff = Rational(text.substr(start, pos - start));
                coeff.canonicalize();
                haveCoeff = true;
                skipws();
                if (pos < text.size() && text[pos] == '*') { ++pos; skipws(); }
            }
            if (pos < text.size() && text[pos] == 'z') {
                ++pos;
                skipws();
                if (pos >= text.size() || text[pos] != '(') throw std::invalid_argument("cyclo parse: expected (");
                ++pos;
                size_t close = text.find(')', pos);
                if (close == std::string::npos) throw std::invalid_argument("cyclo parse: expected )");
                long m = std::stol(text.substr(pos, close - pos));
                pos = close + 1;
                long k = 1;
                skipws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skipws();
                    size_t start = pos;
                    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
                    if (start == pos) throw std::invalid_argument("cyclo parse: missing exponent");
                    k = std::stol(text.substr(start, pos - start));
                }
                total += CycloNum(Rational(sign) * coeff) * root_of_unity(m, k);
            } else if (haveCoeff) {
                total += CycloNum(Rational(sign) * coeff);
            } else {
                throw std::invalid_argument("cyclo parse: malformed term");
            }
            skipws();
        }
        return total;
    }

private:
    long conductor_;
    std::map<long, Rational> coords_;  // exponent -> coefficient, 0 <= e < phi(M)

    static CycloNum sqrt_prime(long p) {
        CycloNum g;
        std::map<long, Rational> terms;
        for (long j = 1; j < p; ++j) terms[j] = Rational(legendre(j, p));
        g.assign(p, std::move(terms), true);
        if (p % 4 == 1) return g;
        return root_of_unity(4, 3) * g;  // -i * (i sqrt p)
    }

    static int legendre(long a, long p) {
        long r = 1, base = a % p, e = (p - 1) / 2;
        while (e) {
            if (e & 1) r = (r * base) % p;
            base = (base * base) % p;
            e >>= 1;
        }
        return r == 1 ? 1 : -1;
    }

    // Normalize a raw exponent->coefficient map at conductor m and store it.
    // Folds exponents mod m, moves off conductors = 2 (mod 4), reduces mod
    // Phi_m, drops zeros; when descend is set, also applies the gcd descent.
    void assign(long m, std::map<long, Rational>&& raw, bool descend) {
        while (true) {
            std::map<long, Rational> folded;
            for (auto& [e, c] : raw) {
                if (c == 0) continue;
                long ee = e % m;
                if (ee < 0) ee += m;
                folded[ee] += c;
            }
            if (m > 2 && m % 4 == 2) {
                // zeta_{2k}^e = zeta_k^{e/2} (e even), -zeta_k^{(e+k)/2} (e odd).
                long k = m / 2;
                std::map<long, Rational> down;
                for (auto& [e, c] : folded) {
                    if (e % 2 == 0) down[(e / 2) % k] += c;
                    else down[((e + k) / 2) % k] -= c;
                }
                raw = std::move(down);
                m = k;
                continue;
            }
            if (m == 2) {
                std::map<long, Rational> down;
                for (auto& [e, c] : folded) {
                    if (e % 2 == 0) down[0] += c;
                    else down[0] -= c;
                }
                raw = std::move(down);
                m = 1;
                continue;
            }
            long phi = (m == 1) ? 1 : cyclo_detail::euler_phi(m);
            long maxExp = folded.empty() ? 0 : folded.rbegin()->first;
            if (maxExp >= phi) {
                std::vector<Rational> dense(maxExp + 1, Rational(0));
                for (auto& [e, c] : folded) dense[e] = c;
                const auto& phiPoly = cyclo_detail::cyclotomic_poly(m);
                long deg = static_cast<long>(phiPoly.size()) - 1;
                for (long e = maxExp; e >= deg; --e) {
                    if (dense[e] == 0) continue;
                    Rational c = dense[e];
                    dense[e] = 0;
                    for (long j = 0; j < deg; ++j)
                        if (phiPoly[j] != 0) dense[e - deg + j] -= c * Rational(phiPoly[j]);
                }
                folded.clear();
                for (long e = 0; e < deg && e < static_cast<long>(dense.size()); ++e)
                    if (dense[e] != 0) folded[e] = dense[e];
            }
            for (auto it = folded.begin(); it != folded.end();) {
                if (it->second == 0) it = folded.erase(it);
                else ++it;
            }
            if (folded.empty()) {
                conductor_ = 1;
                coords_.clear();
                return;
            }
            if (descend && m > 1) {
                long g = m;
                for (const auto& [e, c] : folded) g = std::gcd(g, e);
                if (g > 1) {
                    std::map<long, Rational> down;
                    for (auto& [e, c] : folded) down[e / g] = c;
                    raw = std::move(down);
                    m = m / g;
                    continue;
                }
            }
            conductor_ = m;
            coords_ = std::move(folded);
            return;
        }
    }

    // Exact descent to conductor target (target | conductor_); true on success.
    bool try_descend(long target) {
        if (target < 1 || conductor_ % target != 0 || target == conductor_) return false;
        if (coords_.empty()) { conductor_ = 1; return true; }
        if (target == 1) {
            // Reduced form of a rational is the bare constant at any conductor.
            if (coords_.size() == 1 && coords_.begin()->first == 0) { conductor_ = 1; return true; }
            return false;
        }
        for (long s = 1 + target; s < conductor_; s += target) {
            if (std::gcd(s, conductor_) != 1) continue;
            if (!(galois(s) == *this)) return false;
        }
        long phiT = cyclo_detail::euler_phi(target);
        long phiM = cyclo_detail::euler_phi(conductor_);
        long step = conductor_ / target;
        // Columns: coordinates of zeta_M^{j*step} reduced mod Phi_M.
        std::vector<std::vector<Rational>> mat(phiM, std::vector<Rational>(phiT + 1, Rational(0)));
        for (long j = 0; j < phiT; ++j) {
            CycloNum basis;
            basis.assign(conductor_, {{j * step, Rational(1)}}, false);
            if (basis.conductor_ != conductor_) throw std::logic_error("cyclo: descent basis left conductor");
            for (const auto& [e, c] : basis.coords_) mat[e][j] = c;
        }
        for (const auto& [e, c] : coords_) mat[e][phiT] = c;
        long row = 0;
        std::vector<long> pivotCol;
        for (long col = 0; col < phiT && row < phiM; ++col) {
            long pr = -1;
            for (long r = row; r < phiM; ++r)
                if (mat[r][col] != 0) { pr = r; break; }
            if (pr < 0) continue;
            std::swap(mat[row], mat[pr]);
            Rational inv = Rational(1) / mat[row][col];
            for (long c = col; c <= phiT; ++c) mat[row][c] *= inv;
            for (long r = 0; r < phiM; ++r) {
                if (r == row || mat[r][col] == 0) continue;
                Rational f = mat[r][col];
                for (long c = col; c <= phiT; ++c) mat[r][c] -= f * mat[row][c];
            }
            pivotCol.push_back(col);
            ++row;
        }
        std::map<long, Rational> down;
        for (long r = 0; r < row; ++r)
            if (mat[r][phiT] != 0) down[pivotCol[r]] = mat[r][phiT];
        CycloNum candidate;
        candidate.assign(target, std::move(down), true);
        if (!(candidate == *this)) return false;
        *this = candidate;
        return true;
    }
};

inline CycloNum operator*(long a, const CycloNum& b) { return CycloNum(a) * b; }
inline CycloNum operator*(const CycloNum& a, long b) { return a * CycloNum(b); }
inline CycloNum operator+(long a, const CycloNum& b) { return CycloNum(a) + b; }
inline CycloNum operator-(long a, const CycloNum& b) { return CycloNum(a) - b; }

// i^k as an exact value.
inline CycloNum i_power(long k) {
    k %= 4;
    if (k < 0) k += 4;
    switch (k) {
        case 0: return CycloNum(1);
        case 1: return CycloNum::i();
        case 2: return CycloNum(-1);
        default: return -CycloNum::i();
    }
}

}  // namespace spincover
