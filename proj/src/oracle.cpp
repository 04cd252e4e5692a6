#include "chx/oracle.hpp"

#include <algorithm>
#include <map>

namespace chx {

long FiniteModule::size() const {
    long s = 1;
    for (long a : factors) s *= a;
    return s;
}

std::vector<long> FiniteModule::add(const std::vector<long>& a, const std::vector<long>& b) const {
    std::vector<long> r(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) r[i] = (a[i] + b[i]) % factors[i];
    return r;
}

std::vector<long> FiniteModule::negate(const std::vector<long>& a) const {
    std::vector<long> r(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) r[i] = (factors[i] - a[i]) % factors[i];
    return r;
}

std::vector<long> FiniteModule::scale(long c, const std::vector<long>& a) const {
    std::vector<long> r(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) {
        long cc = c % factors[i];
        if (cc < 0) cc += factors[i];
        r[i] = (cc * a[i]) % factors[i];
    }
    return r;
}

std::vector<long> FiniteModule::element_at(long index) const {
    std::vector<long> r(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) {
        r[i] = index % factors[i];
        index /= factors[i];
    }
    return r;
}

long FiniteModule::index_of(const std::vector<long>& a) const {
    long idx = 0;
    for (size_t i = factors.size(); i-- > 0;) idx = idx * factors[i] + a[i];
    return idx;
}

FiniteModule finite_module(const Presentation& P) {
    if (P.ring.is_z())
        throw std::invalid_argument("finite_module: only Z/m presentations have a finite carrier");
    FiniteModule M;
    M.ring = P.ring;
    M.m = static_cast<long>(P.ring.modulus()->get_si());
    M.gen_images.assign(P.gens, {});
    if (P.gens == 0) return M;

    // Diagonalize the relation lattice: with R = U diag(d) V, the coordinate
    // change z = V x turns the relations into d_i z_i = 0.
    SnfResult s = snf(P.effective_relations());
    std::vector<int> kept;
    for (int i = 0; i < P.gens; ++i) {
        Int di = i < static_cast<int>(s.d.size()) ? s.d[i] : Int(0);
        if (di == 0 || di > M.m)
            throw std::logic_error("finite_module: carrier factor not bounded by the modulus");
        if (di > 1) {
            kept.push_back(i);
            M.factors.push_back(static_cast<long>(di.get_si()));
        }
    }
    for (int j = 0; j < P.gens; ++j) {
        std::vector<long> img(kept.size());
        for (size_t t = 0; t < kept.size(); ++t) {
            Int v = s.V.at(kept[t], j) % M.factors[t];
            if (v < 0) v += M.factors[t];
            img[t] = static_cast<long>(v.get_si());
        }
        M.gen_images[j] = std::move(img);
    }
    return M;
}

ValidationReport check_tables(const FiniteModule& M) {
    ValidationReport rep;
    long n = M.size();
    long limit = std::min<long>(n, 64);
    auto el = [&](long i) { return M.element_at(i); };
    for (long i = 0; i < limit; ++i) {
        std::vector<long> a = el(i);
        if (M.index_of(a) != i) rep.failures.push_back("element indexing does not round-trip");
        if (M.add(a, M.zero()) != a) rep.failures.push_back("zero is not an identity");
        if (M.add(a, M.negate(a)) != M.zero()) rep.failures.push_back("negation fails");
        if (M.scale(M.m, a) != M.zero()) rep.failures.push_back("modulus does not annihilate");
        for (long j = 0; j < limit; ++j) {
            std::vector<long> b = el(j);
            if (M.add(a, b) != M.add(b, a)) rep.failures.push_back("addition not commutative");
            for (long k = 0; k < limit; ++k)
                if (M.add(M.add(a, b), el(k)) != M.add(a, M.add(b, el(k))))
                    rep.failures.push_back("addition not associative");
        }
        for (long c = 0; c < M.m; ++c)
            for (long j = 0; j < limit; ++j) {
                std::vector<long> b = el(j);
                if (M.scale(c, M.add(a, b)) != M.add(M.scale(c, a), M.scale(c, b)))
                    rep.failures.push_back("scalar action not distributive");
            }
        if (!rep.failures.empty()) return rep;
    }
    return rep;
}

ExtensionEnumeration ext1_bruteforce(const FiniteModule& A, const FiniteModule& B, long cap) {
    if (!(A.ring == B.ring))
        throw std::invalid_argument("ext1_bruteforce: modules over different rings");
    if (A.size() * B.size() > cap)
        throw std::length_error("ext1_bruteforce: refusing carrier of size " +
                                std::to_string(A.size() * B.size()) + " (cap " +
                                std::to_string(cap) + ")");

    long nB = B.size();
    size_t k = A.factors.size();

    // Per invariant factor a_i of A: the admissible values of a_i * e_i (the
    // lift's a_i-fold sum must be annihilated by m / a_i so that E is a
    // Z/m-module), and the canonical representative of each coset of a_i * B
    // (the orbit of the exhaustive isomorphism shifts e_i -> e_i + b).
    std::vector<std::vector<long>> allowed(k);
    std::vector<std::vector<long>> canon(k, std::vector<long>(nB));
    for (size_t i = 0; i < k; ++i) {
        long a = A.factors[i], q = A.m / a;
        std::vector<long> shifted(nB);
        for (long t = 0; t < nB; ++t) {
            std::vector<long> tv = B.element_at(t);
            if (B.scale(q, tv) == B.zero()) allowed[i].push_back(t);
            shifted[t] = B.index_of(B.scale(a, tv));
        }
        for (long t = 0; t < nB; ++t) {
            std::vector<long> tv = B.element_at(t);
            long best = t;
            for (long s : shifted) best = std::min(best, B.index_of(B.add(tv, B.element_at(s))));
            canon[i][t] = best;
        }
    }

    ExtensionEnumeration out;
    std::map<std::vector<long>, std::vector<long>> classes;  // signature -> first tuple
    std::vector<size_t> odo(k, 0);
    while (true) {
        std::vector<long> tuple(k), sig(k);
        for (size_t i = 0; i < k; ++i) {
            tuple[i] = allowed[i][odo[i]];
            sig[i] = canon[i][tuple[i]];
        }
        classes.try_emplace(std::move(sig), std::move(tuple));
        size_t i = 0;
        for (; i < k; ++i) {
            if (++odo[i] < allowed[i].size()) break;
            odo[i] = 0;
        }
        if (i == k) break;
    }
    out.class_count = static_cast<long>(classes.size());
    for (const auto& [sig, tuple] : classes) {
        std::vector<std::vector<long>> rep;
        for (long t : tuple) rep.push_back(B.element_at(t));
        out.representatives.push_back(std::move(rep));
    }
    return out;
}

bool lifting_bruteforce(const FiniteModule& P, long cap) {
    if (P.size() > cap)
        throw std::length_error("lifting_bruteforce: refusing carrier of size " +
                                std::to_string(P.size()) + " (cap " + std::to_string(cap) + ")");
    size_t k = P.factors.size();
    // A section of the free cover (Z/m)^k -> P sends the generator of the
    // i-th factor to some x with a_i * x = 0 in the free module and image
    // the generator again; the coordinates of x can be searched separately.
    for (size_t i = 0; i < k; ++i) {
        long a = P.factors[i];
        for (size_t j = 0; j < k; ++j) {
            long want = i == j ? 1 : 0;
            bool found = false;
            for (long x = 0; x < P.m && !found; ++x)
                found = (a * x) % P.m == 0 && x % P.factors[j] == want;
            if (!found) return false;
        }
    }
    return true;
}

}  // namespace chx
