#include "rigidity/charsums.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace rigidity::charsums {

namespace {

long long mod_norm(long long x, long long m) { return ((x % m) + m) % m; }

long long mod_pow(long long b, long long e, long long m) {
    long long r = 1 % m;
    b = mod_norm(b, m);
    while (e > 0) {
        if (e & 1) r = (__int128)r * b % m;
        b = (__int128)b * b % m;
        e >>= 1;
    }
    return r;
}

long long mod_inv(long long a, long long p) { return mod_pow(a, p - 2, p); }

void require_odd_prime(long long p, const char* what) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument(std::string(what) + " requires an odd prime");
}

} // namespace

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long long smallest_primitive_root(long long q) {
    require_odd_prime(q, "primitive root");
    long long phi = q - 1;
    std::vector<long long> prime_factors;
    long long m = phi;
    for (long long d = 2; d * d <= m; ++d)
        if (m % d == 0) {
            prime_factors.push_back(d);
            while (m % d == 0) m /= d;
        }
    if (m > 1) prime_factors.push_back(m);
    for (long long g = 2; g < q; ++g) {
        bool ok = true;
        for (long long f : prime_factors)
            if (mod_pow(g, phi / f, q) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw std::logic_error("no primitive root found");
}

CycInt::CycInt(long long p, std::vector<long long> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    require_odd_prime(p, "CycInt");
    if (coeffs_.size() != static_cast<size_t>(p - 1))
        throw std::invalid_argument("CycInt coefficient vector must have length p-1");
}

CycInt CycInt::zero(long long p) { return CycInt(p, std::vector<long long>(p - 1, 0)); }

CycInt CycInt::monomial(long long p, long long k, long long c) {
    CycInt z = zero(p);
    k = mod_norm(k, p);
    if (k < p - 1) {
        z.coeffs_[k] += c;
    } else {
        for (long long i = 0; i < p - 1; ++i) z.coeffs_[i] -= c;
    }
    return z;
}

CycInt CycInt::integer(long long p, long long n) { return monomial(p, 0, n); }

bool CycInt::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](long long c) { return c == 0; });
}

CycInt CycInt::operator+(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("CycInt prime mismatch");
    CycInt r = *this;
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    return r;
}

CycInt CycInt::operator-(const CycInt& o) const { return *this + (-o); }

CycInt CycInt::operator-() const {
    CycInt r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("CycInt prime mismatch");
    std::vector<long long> full(p_, 0); // exponents 0..p-1
    for (long long i = 0; i < p_ - 1; ++i) {
        if (coeffs_[i] == 0) continue;
        for (long long j = 0; j < p_ - 1; ++j)
            full[(i + j) % p_] += coeffs_[i] * o.coeffs_[j];
    }
    std::vector<long long> red(p_ - 1);
    for (long long k = 0; k < p_ - 1; ++k) red[k] = full[k] - full[p_ - 1];
    return CycInt(p_, std::move(red));
}

CycInt CycInt::galois(long long t) const {
    if (mod_norm(t, p_) == 0) throw std::invalid_argument("Galois twist must be coprime to p");
    CycInt r = zero(p_);
    for (long long i = 0; i < p_ - 1; ++i)
        if (coeffs_[i] != 0) r = r + monomial(p_, i * t, coeffs_[i]);
    return r;
}

std::complex<double> CycInt::embed(long long t) const {
    std::complex<double> acc{0.0, 0.0};
    const double tau = 2.0 * 3.14159265358979323846;
    for (long long i = 0; i < p_ - 1; ++i) {
        if (coeffs_[i] == 0) continue;
        double ang = tau * static_cast<double>(mod_norm(i * t, p_)) / static_cast<double>(p_);
        acc += static_cast<double>(coeffs_[i]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

std::string CycInt::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coeffs_[i]);
    }
    return s + "]";
}

MultCharExponent::MultCharExponent(long long q_, long long e_) : q(q_) {
    require_odd_prime(q_, "character exponent");
    e = mod_norm(e_, q_ - 1);
}

namespace {

// Sum of psi(x_1 + ... + x_n) over tuples in (F_p^x)^{n-1} with last
// coordinate forced: exponent histogram, parallel over x_1.
std::vector<long long> forced_product_histogram(int n, long long p, long long target,
                                                const SumOptions& opts) {
    // target is the required product x_1 ... x_n.
    double work = std::pow(static_cast<double>(p - 1), n - 1);
    if (work > static_cast<double>(opts.work_cap))
        throw std::invalid_argument("work cap exceeded for p=" + std::to_string(p) +
                                    ", n=" + std::to_string(n));
    auto body = [&](long long x1_lo, long long x1_hi, std::vector<long long>& hist) {
        std::vector<long long> x(std::max(0, n - 1), 1);
        for (long long x1 = x1_lo; x1 < x1_hi; ++x1) {
            if (n == 1) {
                hist[mod_norm(target, p)] += 1;
                break;
            }
            x[0] = x1;
            // odometer over x_2..x_{n-1}
            for (size_t k = 1; k < x.size(); ++k) x[k] = 1;
            for (;;) {
                long long prod = 1, sum = 0;
                for (long long xi : x) {
                    prod = prod * xi % p;
                    sum += xi;
                }
                long long xn = target % p * mod_inv(prod, p) % p;
                hist[mod_norm(sum + xn, p)] += 1;
                size_t k = 1;
                while (k < x.size() && ++x[k] == p) {
                    x[k] = 1;
                    ++k;
                }
                if (k >= x.size()) break;
            }
        }
    };

    std::vector<long long> hist(p, 0);
    int jobs = std::max(1, opts.jobs);
    if (n <= 2 || jobs == 1) {
        body(1, n == 1 ? 2 : p, hist);
    } else {
        std::vector<std::vector<long long>> parts(jobs, std::vector<long long>(p, 0));
        std::vector<std::thread> pool;
        long long span = p - 1, chunk = (span + jobs - 1) / jobs;
        for (int t = 0; t < jobs; ++t) {
            long long lo = 1 + t * chunk, hi = std::min<long long>(p, lo + chunk);
            if (lo < hi) pool.emplace_back(body, lo, hi, std::ref(parts[t]));
        }
        for (auto& th : pool) th.join();
        for (const auto& part : parts)
            for (long long i = 0; i < p; ++i) hist[i] += part[i];
    }
    return hist;
}

CycInt histogram_to_cyc(long long p, const std::vector<long long>& hist) {
    CycInt acc = CycInt::zero(p);
    for (long long s = 0; s < p; ++s)
        if (hist[s]) acc = acc + CycInt::monomial(p, s, hist[s]);
    return acc;
}

} // namespace

CycInt kloosterman(int n, long long p, long long a, const SumOptions& opts) {
    require_odd_prime(p, "Kloosterman sum");
    if (n < 1) throw std::invalid_argument("Kloosterman sum needs n >= 1");
    if (mod_norm(a, p) == 0) throw std::invalid_argument("Kloosterman sum needs a nonzero");
    return histogram_to_cyc(p, forced_product_histogram(n, p, mod_norm(a, p), opts));
}

CycInt kloosterman_via_moduli(int n, long long p, long long a, const SumOptions& opts) {
    require_odd_prime(p, "Kloosterman sum");
    if (n < 1) throw std::invalid_argument("Kloosterman sum needs n >= 1");
    if (mod_norm(a, p) == 0) throw std::invalid_argument("Kloosterman sum needs a nonzero");
    // (-1)^n a_0 ... a_{n-1} = a, so the parameters multiply to (-1)^n a.
    long long target = mod_norm((n % 2 == 0 ? a : -a), p);
    return histogram_to_cyc(p, forced_product_histogram(n, p, target, opts));
}

WeilReport weil_check(int n, long long p, const SumOptions& opts) {
    WeilReport rep;
    rep.n = n;
    rep.p = p;
    rep.bound = n * std::pow(static_cast<double>(p), (n - 1) / 2.0);
    for (long long a = 1; a < p; ++a) {
        CycInt kl = kloosterman(n, p, a, opts);
        for (long long t = 1; t < p; ++t) rep.max_abs = std::max(rep.max_abs, std::abs(kl.embed(t)));
    }
    rep.max_ratio = rep.max_abs / rep.bound;
    rep.ok = rep.max_abs <= rep.bound + 1e-6;
    return rep;
}

bool genericity_sl2(const std::vector<MultCharExponent>& exponents, long long q) {
    require_odd_prime(q, "genericity condition");
    for (const auto& e : exponents)
        if (e.q != q) throw std::invalid_argument("exponent modulus mismatch");
    size_t s = exponents.size();
    for (unsigned long long mask = 0; mask < (1ULL << s); ++mask) {
        long long acc = 0;
        for (size_t i = 0; i < s; ++i)
            acc += (mask & (1ULL << i)) ? -exponents[i].e : exponents[i].e;
        if (mod_norm(acc, q - 1) == 0) return false;
    }
    return true;
}

bool central_char_condition(const std::vector<MultCharExponent>& exponents, long long q) {
    require_odd_prime(q, "central character condition");
    long long sum = 0;
    for (const auto& e : exponents) {
        if (e.q != q) throw std::invalid_argument("exponent modulus mismatch");
        sum += e.e;
    }
    return sum % 2 == 0;
}

TruncMat::TruncMat(long long p, int trunc_order, std::vector<std::vector<long long>> a_b_c_d)
    : p_(p), n_(trunc_order), ent_(std::move(a_b_c_d)) {
    if (!is_prime(p)) throw std::invalid_argument("TruncMat needs a prime p");
    if (n_ < 1) throw std::invalid_argument("TruncMat needs truncation order >= 1");
    if (ent_.size() != 4) throw std::invalid_argument("TruncMat needs entries a, b, c, d");
    for (auto& e : ent_) {
        if (static_cast<int>(e.size()) != n_)
            throw std::invalid_argument("TruncMat entry must have trunc_order coefficients");
        for (auto& c : e) c = mod_norm(c, p_);
    }
    // det = ad - bc = 1 mod tau^N
    for (int k = 0; k < n_; ++k) {
        long long det_k = 0;
        for (int i = 0; i <= k; ++i) {
            det_k += ent_[0][i] * ent_[3][k - i];
            det_k -= ent_[1][i] * ent_[2][k - i];
        }
        if (mod_norm(det_k, p_) != (k == 0 ? 1 : 0))
            throw std::invalid_argument("TruncMat determinant is not 1 mod tau^N");
    }
}

TruncMat TruncMat::identity(long long p, int trunc_order) {
    std::vector<std::vector<long long>> e(4, std::vector<long long>(trunc_order, 0));
    e[0][0] = e[3][0] = 1;
    return TruncMat(p, trunc_order, std::move(e));
}

TruncMat TruncMat::operator*(const TruncMat& o) const {
    if (p_ != o.p_ || n_ != o.n_) throw std::invalid_argument("TruncMat shape mismatch");
    auto mul = [&](const std::vector<long long>& x, const std::vector<long long>& y) {
        std::vector<long long> r(n_, 0);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; i + j < n_; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p_;
        return r;
    };
    auto add = [&](std::vector<long long> x, const std::vector<long long>& y) {
        for (int i = 0; i < n_; ++i) x[i] = (x[i] + y[i]) % p_;
        return x;
    };
    const auto &a = ent_[0], &b = ent_[1], &c = ent_[2], &d = ent_[3];
    const auto &e = o.ent_[0], &f = o.ent_[1], &g = o.ent_[2], &h = o.ent_[3];
    std::vector<std::vector<long long>> out(4);
    out[0] = add(mul(a, e), mul(b, g));
    out[1] = add(mul(a, f), mul(b, h));
    out[2] = add(mul(c, e), mul(d, g));
    out[3] = add(mul(c, f), mul(d, h));
    return TruncMat(p_, n_, std::move(out));
}

std::pair<long long, long long> kloosterman_projection(const TruncMat& m) {
    if (m.order() < 2) throw std::invalid_argument("projection needs truncation order >= 2");
    const auto &a = m.entry(0), &c = m.entry(2), &d = m.entry(3);
    if (a[0] != 1 || d[0] != 1 || c[0] != 0)
        throw std::invalid_argument("matrix is not in the I+ shape");
    return {m.entry(1)[0], c[1]};
}

long long airy_phi(const TruncMat& m) {
    if (m.order() < 3) throw std::invalid_argument("Airy map needs truncation order >= 3");
    const auto &a = m.entry(0), &b = m.entry(1), &c = m.entry(2), &d = m.entry(3);
    if (a[0] != 1 || d[0] != 1 || c[0] != 0 || c[1] != b[0])
        throw std::invalid_argument("matrix is not in the Airy shape");
    return (b[1] + c[2]) % m.prime();
}

} // namespace rigidity::charsums
