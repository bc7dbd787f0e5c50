#pragma once

#include "rigidity/rootsys.hpp"

#include <optional>
#include <vector>

namespace rigidity::affroots {

/// Affine root alpha + n. An all-zero gradient is the zero symbol (torus
/// direction); the pair (0, 0) is excluded.
struct AffineRoot {
    std::vector<int> gradient; // simple-root coordinates; all zero = zero symbol
    int level = 0;

    bool gradient_is_zero() const;
    bool operator==(const AffineRoot& o) const { return gradient == o.gradient && level == o.level; }
    bool operator<(const AffineRoot& o) const {
        if (level != o.level) return level < o.level;
        return gradient < o.gradient;
    }
};

/// Element (lambda, w) of W_aff = Z Phi^vee x| W. The translation lives in the
/// coroot lattice (simply-connected convention); the finite part is stored as
/// a permutation of the ordered root list of the ambient system.
///
/// Group law: (l1, w1)(l2, w2) = (l1 + w1 l2, w1 w2).
/// Action on affine roots: (l, w) sends a+n to wa + n + <l, wa>.
class AffineWeylElt {
public:
    /// Identity element.
    explicit AffineWeylElt(const rootsys::RootSystem& rs);

    /// Affine simple reflection s_i, i in 0..rank (0 is the affine node:
    /// s_0 = s_theta . t_{theta^vee} = (-theta^vee, s_theta)).
    static AffineWeylElt simple_reflection(const rootsys::RootSystem& rs, int i);

    /// Pure translation by lambda (simple-coroot coordinates).
    static AffineWeylElt translation(const rootsys::RootSystem& rs, std::vector<long long> lambda);

    const rootsys::RootSystem& system() const { return *rs_; }
    const std::vector<long long>& translation_part() const { return translation_; }
    const std::vector<int>& root_permutation() const { return perm_; }

    bool is_identity() const;
    bool operator==(const AffineWeylElt& o) const {
        return translation_ == o.translation_ && perm_ == o.perm_;
    }

    AffineWeylElt operator*(const AffineWeylElt& o) const;
    AffineWeylElt inverse() const;

    /// Image of a root under the finite part w.
    rootsys::Root apply_finite(const rootsys::Root& r) const;

    /// Image of a coroot-lattice vector under the finite part w.
    std::vector<long long> apply_finite_to_coroot(const std::vector<long long>& c) const;

private:
    const rootsys::RootSystem* rs_;
    std::vector<long long> translation_; // coroot coordinates
    std::vector<int> perm_;              // root index permutation
};

bool is_positive(const AffineRoot& a);

/// Affine simple root alpha_i: i = 0 gives -theta + 1, i >= 1 gives alpha_i + 0.
AffineRoot affine_simple_root(const rootsys::RootSystem& rs, int i);

/// (l, w) . (a + n) = wa + (n + <l, wa>). Zero gradients are fixed.
AffineRoot act(const AffineWeylElt& w, const AffineRoot& a);

/// The positive affine roots sent negative by w^{-1}. Sorted, deterministic.
///
/// Level window: an inversion a = alpha + n of w = (lambda, .) satisfies
/// 0 <= n <= max_alpha |<lambda, alpha>|: positivity of a forces n >= 0, and
/// act(w^{-1}, alpha + n) = w^{-1}alpha + (n - <lambda, alpha>) is negative
/// only if n <= <lambda, alpha>. The search below scans one level beyond.
std::vector<AffineRoot> inversion_set(const AffineWeylElt& w);

/// Coxeter length = |inversion_set(w)|.
long long length(const AffineWeylElt& w);

/// Smallest i with w^{-1}(alpha_i) negative; nullopt iff w is the identity.
std::optional<int> simple_descent(const AffineWeylElt& w);

struct RelevanceReport {
    bool relevant = false;                // true iff w is the identity
    std::optional<int> witness;           // descent index when irrelevant
};

/// The unit coset test: w indexes a relevant point iff its inversion set is
/// empty. When it is not, the witnessing affine simple root is the U_{alpha_i}
/// on which the Artin-Schreier pullback is nontrivial.
RelevanceReport kloosterman_relevant(const AffineWeylElt& w);

} // namespace rigidity::affroots
