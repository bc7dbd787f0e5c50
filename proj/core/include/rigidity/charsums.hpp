#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace rigidity::charsums {

/// Exact element of Z[zeta_p], p an odd prime, stored on the basis
/// zeta^0..zeta^{p-2}; zeta^{p-1} is eliminated via the vanishing sum
/// 1 + zeta + ... + zeta^{p-1} = 0. Equality is coefficientwise.
class CycInt {
public:
    CycInt(long long p, std::vector<long long> coeffs);

    /// Zero element of Z[zeta_p].
    static CycInt zero(long long p);
    /// c * zeta^k (k arbitrary, reduced mod p).
    static CycInt monomial(long long p, long long k, long long c = 1);
    /// Rational integer n.
    static CycInt integer(long long p, long long n);

    long long prime() const { return p_; }
    const std::vector<long long>& coeffs() const { return coeffs_; }

    bool operator==(const CycInt& o) const { return p_ == o.p_ && coeffs_ == o.coeffs_; }
    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator*(const CycInt& o) const;
    CycInt operator-() const;

    bool is_zero() const;

    /// Galois twist zeta -> zeta^t, t coprime to p.
    CycInt galois(long long t) const;

    /// zeta -> exp(2 pi i t / p).
    std::complex<double> embed(long long t = 1) const;

    std::string to_string() const;

private:
    long long p_;
    std::vector<long long> coeffs_; // length p-1
};

/// Multiplicative character exponent relative to the smallest primitive root
/// of F_q (q an odd prime): chi(g^k) = zeta_{q-1}^{e k}. e = 0 is trivial.
struct MultCharExponent {
    long long q;
    long long e; // reduced to [0, q-2]

    MultCharExponent(long long q_, long long e_);
};

long long smallest_primitive_root(long long q);
bool is_prime(long long n);

struct SumOptions {
    unsigned long long work_cap = 100000000ULL; // inner iterations
    int jobs = 1;
};

/// Kl_n(p; a) = sum over x_1...x_n = a in F_p^x of psi(x_1 + ... + x_n),
/// psi the exponent-1 character x -> zeta^x. Exact.
CycInt kloosterman(int n, long long p, long long a, const SumOptions& opts = {});

/// The same sum enumerated over the matrix moduli family: parameters
/// (a_0..a_{n-1}) in (F_p^x)^n with (-1)^n a_0...a_{n-1} = a, summand
/// psi(a_0 + ... + a_{n-1}). Equals kloosterman(n, p, (-1)^n a).
CycInt kloosterman_via_moduli(int n, long long p, long long a, const SumOptions& opts = {});

struct WeilReport {
    int n = 0;
    long long p = 0;
    double bound = 0;     // n * p^{(n-1)/2}
    double max_abs = 0;   // over all a and all embeddings
    double max_ratio = 0; // max_abs / bound
    bool ok = false;      // max_abs <= bound + 1e-6
};

/// |Kl_n(p; a)| <= n p^{(n-1)/2} at every complex embedding, slack 1e-6.
WeilReport weil_check(int n, long long p, const SumOptions& opts = {});

/// Condition (chi gen): no signed combination of the exponents vanishes
/// mod q-1, i.e. every product prod chi_x^{eps(x)} is nontrivial.
bool genericity_sl2(const std::vector<MultCharExponent>& exponents, long long q);

/// Central character existence: prod chi_x(-1) = 1, i.e. sum of exponents
/// even (q odd).
bool central_char_condition(const std::vector<MultCharExponent>& exponents, long long q);

/// 2x2 matrix over F_p[tau]/tau^N with det = 1 mod tau^N.
class TruncMat {
public:
    TruncMat(long long p, int trunc_order,
             std::vector<std::vector<long long>> a_b_c_d); // four coefficient rows

    static TruncMat identity(long long p, int trunc_order);

    long long prime() const { return p_; }
    int order() const { return n_; }
    /// Entry polynomials in reading order a, b, c, d; coefficient k of
    /// entry e is entry(e)[k].
    const std::vector<long long>& entry(int e) const { return ent_[e]; }

    TruncMat operator*(const TruncMat& o) const;
    bool operator==(const TruncMat& o) const { return p_ == o.p_ && n_ == o.n_ && ent_ == o.ent_; }

private:
    long long p_;
    int n_;
    std::vector<std::vector<long long>> ent_;
};

/// The I+ projection (b mod tau, coefficient of tau in c). Requires the I+
/// shape a = d = 1 mod tau, c = 0 mod tau, N >= 2. A homomorphism to (F_p^2, +).
std::pair<long long, long long> kloosterman_projection(const TruncMat& m);

/// The order-3/2 character coefficient b_1 + c_2. Requires the displayed
/// shape a = d = 1 mod tau, c = b(0) tau mod tau^2, N >= 3.
long long airy_phi(const TruncMat& m);

} // namespace rigidity::charsums
