#include "rigidity/affroots.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace rigidity::affroots {

using rootsys::Root;
using rootsys::RootSystem;

bool AffineRoot::gradient_is_zero() const {
    for (int c : gradient)
        if (c != 0) return false;
    return true;
}

AffineWeylElt::AffineWeylElt(const RootSystem& rs) : rs_(&rs) {
    translation_.assign(rs.rank(), 0);
    perm_.resize(rs.roots().size());
    std::iota(perm_.begin(), perm_.end(), 0);
}

AffineWeylElt AffineWeylElt::simple_reflection(const RootSystem& rs, int i) {
    AffineWeylElt e(rs);
    if (i < 0 || i > rs.rank()) throw std::invalid_argument("affine reflection index out of range");
    const auto& roots = rs.roots();
    if (i >= 1) {
        for (size_t k = 0; k < roots.size(); ++k)
            e.perm_[k] = rs.root_index(rs.reflect(i - 1, roots[k]));
    } else {
        const Root& theta = rs.highest_root();
        for (size_t k = 0; k < roots.size(); ++k)
            e.perm_[k] = rs.root_index(rs.reflect_by(theta, roots[k]));
        auto tv = rs.coroot_coords(theta);
        for (int j = 0; j < rs.rank(); ++j) e.translation_[j] = -tv[j];
    }
    return e;
}

AffineWeylElt AffineWeylElt::translation(const RootSystem& rs, std::vector<long long> lambda) {
    if (static_cast<int>(lambda.size()) != rs.rank())
        throw std::invalid_argument("translation rank mismatch");
    AffineWeylElt e(rs);
    e.translation_ = std::move(lambda);
    return e;
}

bool AffineWeylElt::is_identity() const {
    for (long long c : translation_)
        if (c != 0) return false;
    for (size_t k = 0; k < perm_.size(); ++k)
        if (perm_[k] != static_cast<int>(k)) return false;
    return true;
}

Root AffineWeylElt::apply_finite(const Root& r) const {
    return rs_->roots()[perm_[rs_->root_index(r)]];
}

std::vector<long long> AffineWeylElt::apply_finite_to_coroot(const std::vector<long long>& c) const {
    std::vector<long long> out(rs_->rank(), 0);
    for (int i = 0; i < rs_->rank(); ++i) {
        if (c[i] == 0) continue;
        Root img = rs_->roots()[perm_[rs_->root_index(rs_->simple_root(i))]];
        auto cc = rs_->coroot_coords(img);
        for (int j = 0; j < rs_->rank(); ++j) out[j] += c[i] * cc[j];
    }
    return out;
}

AffineWeylElt AffineWeylElt::operator*(const AffineWeylElt& o) const {
    if (rs_ != o.rs_) throw std::invalid_argument("affine Weyl elements from different systems");
    AffineWeylElt r(*rs_);
    auto wl2 = apply_finite_to_coroot(o.translation_);
    for (int j = 0; j < rs_->rank(); ++j) r.translation_[j] = translation_[j] + wl2[j];
    for (size_t k = 0; k < perm_.size(); ++k) r.perm_[k] = perm_[o.perm_[k]];
    return r;
}

AffineWeylElt AffineWeylElt::inverse() const {
    AffineWeylElt r(*rs_);
    for (size_t k = 0; k < perm_.size(); ++k) r.perm_[perm_[k]] = static_cast<int>(k);
    std::vector<long long> neg(translation_);
    for (auto& c : neg) c = -c;
    r.translation_ = r.apply_finite_to_coroot(neg); // -w^{-1} lambda
    return r;
}

bool is_positive(const AffineRoot& a) {
    if (a.level > 0) return true;
    if (a.level < 0) return false;
    Root g{a.gradient};
    return g.is_positive();
}

AffineRoot affine_simple_root(const RootSystem& rs, int i) {
    if (i < 0 || i > rs.rank()) throw std::invalid_argument("affine simple index out of range");
    if (i == 0) return AffineRoot{rs.highest_root().negated().coords, 1};
    return AffineRoot{rs.simple_root(i - 1).coords, 0};
}

AffineRoot act(const AffineWeylElt& w, const AffineRoot& a) {
    if (a.gradient_is_zero()) {
        if (a.level == 0) throw std::invalid_argument("(0,0) is not an affine root");
        return a;
    }
    const RootSystem& rs = w.system();
    Root img = w.apply_finite(Root{a.gradient});
    rootsys::Coweight lam = rs.coweight_from_coroot_coords(w.translation_part());
    long long lev = a.level + rs.pair(lam, img);
    return AffineRoot{img.coords, static_cast<int>(lev)};
}

std::vector<AffineRoot> inversion_set(const AffineWeylElt& w) {
    const RootSystem& rs = w.system();
    AffineWeylElt winv = w.inverse();
    rootsys::Coweight lam = rs.coweight_from_coroot_coords(w.translation_part());
    long long window = 0;
    for (const Root& a : rs.roots()) window = std::max(window, std::llabs(rs.pair(lam, a)));
    window += 1;

    std::vector<AffineRoot> inv;
    for (const Root& a : rs.roots()) {
        int n0 = a.is_positive() ? 0 : 1;
        for (long long n = n0; n <= window; ++n) {
            AffineRoot ar{a.coords, static_cast<int>(n)};
            if (!is_positive(act(winv, ar))) inv.push_back(ar);
        }
    }
    std::sort(inv.begin(), inv.end());
    return inv;
}

long long length(const AffineWeylElt& w) { return static_cast<long long>(inversion_set(w).size()); }

std::optional<int> simple_descent(const AffineWeylElt& w) {
    const RootSystem& rs = w.system();
    AffineWeylElt winv = w.inverse();
    for (int i = 0; i <= rs.rank(); ++i)
        if (!is_positive(act(winv, affine_simple_root(rs, i)))) return i;
    return std::nullopt;
}

RelevanceReport kloosterman_relevant(const AffineWeylElt& w) {
    RelevanceReport rep;
    rep.witness = simple_descent(w);
    rep.relevant = !rep.witness.has_value();
    return rep;
}

} // namespace rigidity::affroots
