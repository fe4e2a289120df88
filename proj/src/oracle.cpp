#include "qteich/oracle.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

namespace qteich {

ParamSpec ParamSpec::parse(const std::string& s) {
    if (s == "random") return any();
    if (s == "1") return q_power(0);
    static const std::regex re(R"(q(\^?(-?\d+))?)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw InvalidInput("bad parameter '" + s + "' (use random, 1, q, q3, q^-2)");
    return q_power(m[2].matched ? std::stoi(m[2].str()) : 1);
}

std::string ParamSpec::str() const {
    if (random) return "random";
    if (qexp == 0) return "1";
    return "q^" + std::to_string(qexp);
}

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Equal:
            return "equal";
        case VerdictKind::NotEqual:
            return "notequal";
        case VerdictKind::Inconclusive:
            return "inconclusive";
    }
    return "?";
}

std::vector<int> triangle_support(const Expr& e) {
    std::set<int> t;
    for (int g : e.generators()) t.insert(g / 2);
    return {t.begin(), t.end()};
}

namespace {

struct PairInfo {
    std::vector<int> support;
    int dim_exponent = 0;
};

template <class F>
struct TrialValues {
    typename F::Elem a, b;
    std::vector<typename F::Elem> y0, z0;
};

template <class F, class Rng>
TrialValues<F> draw(const F& f, const TrialConfig& cfg, int triangles, Rng& rng) {
    TrialValues<F> v;
    v.a = cfg.a.random ? f.random_nonzero(rng) : f.q_power(cfg.a.qexp);
    v.b = cfg.b.random ? f.random_nonzero(rng) : f.q_power(cfg.b.qexp);
    for (int t = 0; t < triangles; ++t) {
        v.y0.push_back(f.random_nonzero(rng));
        v.z0.push_back(f.random_nonzero(rng));
    }
    return v;
}

enum class Outcome { Equal, NotEqual, Singular };

// Compares every pair (or only `only` if >= 0); sets *bad to the first
// differing pair.
template <class F>
Outcome run_trial(const F& f, int N, const std::vector<ExprPair>& pairs, const std::vector<PairInfo>& info,
                  const TrialValues<F>& v, int only, int* bad) {
    std::map<std::vector<int>, std::unique_ptr<KashaevRep<F>>> reps;
    try {
        for (int p = 0; p < static_cast<int>(pairs.size()); ++p) {
            if (only >= 0 && p != only) continue;
            auto& rep = reps[info[p].support];
            if (!rep) rep = std::make_unique<KashaevRep<F>>(f, N, info[p].support, v.y0, v.z0, v.a, v.b);
            auto lhs = rep->eval(pairs[p].first);
            auto rhs = rep->eval(pairs[p].second);
            if (!equal(f, lhs, rhs)) {
                *bad = p;
                return Outcome::NotEqual;
            }
        }
    } catch (const SingularMatrix&) {
        return Outcome::Singular;
    }
    return Outcome::Equal;
}

int ipow(int base, int e) {
    long r = 1;
    for (int k = 0; k < e; ++k) {
        r *= base;
        if (r > (1L << 30)) return 1 << 30;
    }
    return static_cast<int>(r);
}

// Re-runs one pair over Q(zeta_2N) with small random rationals.
bool certify(const std::vector<ExprPair>& pairs, const std::vector<PairInfo>& info, int pair, int witness_N,
             int triangles, const TrialConfig& cfg, std::mt19937_64& rng) {
    const int e = info[pair].dim_exponent;
    int N = witness_N;
    if (ipow(N, e) > cfg.certify_max_dim) N = 3;
    if (ipow(N, e) > cfg.certify_max_dim) return false;
    CyclotomicField K(N);
    for (int attempt = 0; attempt < 8; ++attempt) {
        auto v = draw(K, cfg, triangles, rng);
        int bad = -1;
        auto out = run_trial(K, N, pairs, info, v, pair, &bad);
        if (out == Outcome::NotEqual) return true;
    }
    return false;
}

template <class F>
F make_field(int N);
template <>
PrimeField make_field<PrimeField>(int N) {
    return PrimeField(N);
}
template <>
CyclotomicField make_field<CyclotomicField>(int N) {
    return CyclotomicField(N);
}

template <class F>
Verdict compare_with(const std::vector<ExprPair>& pairs, const std::vector<PairInfo>& info, int triangles,
                     const TrialConfig& cfg) {
    Verdict v;
    std::mt19937_64 rng(cfg.seed);
    int retries = 0;
    int max_exp = 0;
    for (const auto& pi : info) max_exp = std::max(max_exp, pi.dim_exponent);
    for (int N : cfg.sizes) {
        if (N < 2) throw InvalidInput("representation size must be at least 2");
        if (ipow(N, max_exp) > cfg.max_dim) {
            v.trials.push_back({N, cfg.a.str(), cfg.b.str(), "skipped"});
            continue;
        }
        F f = make_field<F>(N);
        for (int s = 0; s < cfg.samples;) {
            auto vals = draw(f, cfg, triangles, rng);
            int bad = -1;
            auto out = run_trial(f, N, pairs, info, vals, -1, &bad);
            TrialRecord rec{N, f.str(vals.a), f.str(vals.b), ""};
            if (out == Outcome::Singular) {
                rec.result = "singular";
                v.trials.push_back(rec);
                ++v.singular;
                if (++retries > cfg.max_retries) {
                    v.kind = VerdictKind::Inconclusive;
                    return v;
                }
                continue;
            }
            ++s;
            if (out == Outcome::NotEqual) {
                rec.result = "notequal";
                v.trials.push_back(rec);
                Witness w{N, f.describe(), rec.a, rec.b, bad, false};
                if constexpr (std::is_same_v<F, CyclotomicField>)
                    w.certified = true;
                else
                    w.certified = certify(pairs, info, bad, N, triangles, cfg, rng);
                v.witness = w;
                v.kind = VerdictKind::NotEqual;
                return v;
            }
            rec.result = "equal";
            v.trials.push_back(rec);
            ++v.successes;
        }
    }
    v.kind = v.successes >= cfg.min_successes ? VerdictKind::Equal : VerdictKind::Inconclusive;
    return v;
}

}  // namespace

Verdict compare_pairs(const std::vector<ExprPair>& pairs, const TrialConfig& cfg) {
    std::vector<PairInfo> info;
    int triangles = 0;
    for (const auto& [l, r] : pairs) {
        std::set<int> t;
        for (int x : triangle_support(l)) t.insert(x);
        for (int x : triangle_support(r)) t.insert(x);
        PairInfo pi;
        pi.support.assign(t.begin(), t.end());
        pi.dim_exponent = static_cast<int>(pi.support.size());
        if (!t.empty()) triangles = std::max(triangles, *t.rbegin() + 1);
        info.push_back(std::move(pi));
    }
    if (cfg.backend == Backend::Exact) return compare_with<CyclotomicField>(pairs, info, triangles, cfg);
    return compare_with<PrimeField>(pairs, info, triangles, cfg);
}

Verdict expr_equal(const Expr& lhs, const Expr& rhs, const TrialConfig& cfg) { return compare_pairs({{lhs, rhs}}, cfg); }

Verdict maps_equal(const SubstitutionMap& lhs, const SubstitutionMap& rhs, const TrialConfig& cfg) {
    if (lhs.size() != rhs.size()) throw InvalidInput("maps have different source algebras");
    std::vector<ExprPair> pairs;
    for (int g = 0; g < lhs.size(); ++g) pairs.emplace_back(lhs[g], rhs[g]);
    return compare_pairs(pairs, cfg);
}

}  // namespace qteich
