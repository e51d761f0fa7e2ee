#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <thread>

#include "gl2w.hpp"
#include "oracle.hpp"

namespace gl2w::suites {

using oracle::Report;

struct Config {
    int p = 5;
    int f = 2;
    std::optional<bool> reducible;        // unset: both cases
    std::optional<std::vector<int>> r;    // unset: every generic r
    long twist = 0;
    int jobs = 1;
    std::uint64_t seed = 1;
};

using Task = std::function<Report()>;

// runs tasks on `jobs` threads; the result is concatenated in task order
inline Report run_tasks(const std::vector<Task>& tasks, int jobs) {
    std::vector<Report> out(tasks.size());
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i; (i = next++) < tasks.size();) out[i] = tasks[i]();
    };
    const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    std::vector<std::thread> th;
    for (int t = 1; t < n; ++t) th.emplace_back(work);
    work();
    for (auto& t : th) t.join();
    Report r;
    for (const auto& x : out) r.append(x);
    return r;
}

inline std::vector<GaloisParams> galois_params(const Params& P, const Config& c) {
    std::vector<GaloisParams> out;
    if (c.r) {
        for (bool red : {true, false}) {
            if (c.reducible && *c.reducible != red) continue;
            GaloisParams g{red, *c.r, c.twist};
            if (!is_generic(P, g)) throw domain_error("Galois parameter is not generic");
            out.push_back(g);
        }
        return out;
    }
    for (auto g : all_generic(P)) {
        if (c.reducible && *c.reducible != g.reducible) continue;
        g.twist = c.twist;
        out.push_back(g);
    }
    return out;
}

inline std::string rho_inst(const Params& P, const GaloisParams& g) {
    std::string s = "p=" + std::to_string(P.p) + " f=" + std::to_string(P.f) + (g.reducible ? " red" : " irr") + " r=(";
    for (size_t i = 0; i < g.r.size(); ++i) s += (i ? "," : "") + std::to_string(g.r[i]);
    return s + ")";
}

// characters used by the oracle sweeps: chi of (2,1,..,1), chi of (1,p-2,..)(x)det^2 and one s-invariant character
inline std::vector<ICharacter> sample_chars(const Params& P) {
    std::vector<int> a(P.f, 1), b(P.f, P.p - 2);
    a[0] = P.f == 1 ? 3 : 2;
    b[0] = 1;
    return {chi_of_weight(P, make_weight(P, a, 0)), chi_of_weight(P, make_weight(P, b, 2)), make_char(P, 1, 1)};
}

inline void need_oracle(const Params& P) {
    if (P.q > 343) throw domain_error("oracle suites need q <= 343");
}

// ---- jh ----

// sigma: the weight multiset of Ind chi^s from the module oracle against jh_of_induced
inline std::vector<Task> jh_oracle_tasks(const oracle::Context& G, std::uint64_t seed) {
    const Params& P = G->P;
    const long m = P.qm1();
    std::vector<ICharacter> chis;
    if (m * m <= 36) {
        for (long a = 0; a < m; ++a)
            for (long b = 0; b < m; ++b) chis.push_back(make_char(P, a, b));
    } else {
        std::mt19937_64 rng(seed);
        for (long a = 0; a < m; a += std::max<long>(1, m / 4)) chis.push_back(make_char(P, a, a));
        while (chis.size() < 28) {
            auto c = make_char(P, static_cast<long>(rng() % m), static_cast<long>(rng() % m));
            if (std::find(chis.begin(), chis.end(), c) == chis.end()) chis.push_back(c);
        }
    }
    std::vector<Task> t;
    for (const auto& chi : chis)
        t.push_back([G, chi] {
            const Params& P = G->P;
            Report r;
            auto got = oracle::jh_multiset(oracle::induce(oracle::char_module(G, conjugate_char(chi))));
            r.add("JH(Ind chi^s)", "p=" + std::to_string(P.p) + " f=" + std::to_string(P.f) + " chi=" + to_string(chi),
                  oracle::to_string(weights_of(jh_of_induced(P, chi).factors)), oracle::to_string(got));
            return r;
        });
    return t;
}

// dims of the JH factors add up to q+1 whenever every normal-form digit is in [1, p-2]
inline Report jh_dimension_identity(const Params& P) {
    Report r;
    long checked = 0, bad = 0;
    std::string first_bad;
    for (long a = 0; a < P.qm1(); ++a)
        for (long b = 0; b < P.qm1(); ++b) {
            ICharacter chi = make_char(P, a, b);
            auto s = char_normal_form(P, chi).s;
            if (!std::all_of(s.begin(), s.end(), [&](int x) { return x >= 1 && x <= P.p - 2; })) continue;
            ++checked;
            if (total_dim(jh_of_induced(P, chi).factors) != P.q + 1 && !bad++) first_bad = to_string(chi);
        }
    r.add("sum of JH dims = q+1",
          "p=" + std::to_string(P.p) + " f=" + std::to_string(P.f) + " chars=" + std::to_string(checked),
          "0 failures", bad ? std::to_string(bad) + " failures, first " + first_bad : "0 failures");
    return r;
}

inline Report suite_jh(const Config& c) {
    Params P(c.p, c.f);
    Report r = jh_dimension_identity(P);
    if (P.q <= 125) r.append(run_tasks(jh_oracle_tasks(oracle::make_context(P), c.seed), c.jobs));
    return r;
}

// ---- W = Ind Pi(E_j(chi)) ----

inline Report suite_witt(const Config& c) {
    Params P(c.p, c.f);
    need_oracle(P);
    auto G = oracle::make_context(P);
    std::vector<Task> t;
    for (const auto& chi : sample_chars(P))
        for (int j = 0; j < P.f; ++j) t.push_back([G, chi, j] { return oracle::verify_witt(G, chi, j); });
    return run_tasks(t, c.jobs);
}

inline Report suite_uplus(const Config& c) {
    Params P(c.p, c.f);
    need_oracle(P);
    auto G = oracle::make_context(P);
    std::vector<Task> t;
    for (const auto& chi : sample_chars(P))
        for (int j = 0; j < P.f; ++j)
            t.push_back([G, chi, j] {
                Report r;
                for (long k = 0; k < G->P.q; ++k) r.append(oracle::verify_uplus(G, chi, j, k));
                return r;
            });
    return run_tasks(t, c.jobs);
}

inline Report suite_calculH(const Config& c) {
    Params P(c.p, c.f);
    need_oracle(P);
    auto G = oracle::make_context(P);
    std::mt19937_64 rng(c.seed);
    std::vector<Task> t;
    for (const auto& chi : sample_chars(P))
        for (int j = 0; j < P.f; ++j) {
            std::vector<std::pair<std::map<long, int>, std::map<long, int>>> combos = {
                {{{0, 1}}, {{1, 1}}}, {{}, {{P.q - 1, 1}}}};
            for (int n = 0; n < 3; ++n) {
                std::map<long, int> a, b;
                for (int i = 0; i < 3; ++i) {
                    long k = static_cast<long>(rng() % P.q);
                    int coef = 1 + static_cast<int>(rng() % (P.q - 1));
                    (rng() % 2 ? a : b)[k] = coef;
                }
                combos.push_back({a, b});
            }
            for (const auto& [a, b] : combos)
                t.push_back([G, chi, j, a, b] { return oracle::verify_calcul_H(G, chi, j, a, b); });
        }
    return run_tasks(t, c.jobs);
}

inline Report suite_indej(const Config& c) {
    Params P(c.p, c.f);
    need_oracle(P);
    auto G = oracle::make_context(P);
    std::vector<Task> t;
    for (const auto& chi : sample_chars(P))
        for (int j = 0; j < P.f; ++j) {
            auto s = char_normal_form(P, char_times_alpha_power(P, chi, j, -1)).s;
            if (s[j] > P.p - 2 || oracle::ind_ej_degenerate(G, chi, j)) continue;
            t.push_back([G, chi, j] { return oracle::verify_ind_ej(G, chi, j); });
        }
    return run_tasks(t, c.jobs);
}

inline std::vector<Task> womega_tasks(const oracle::Context& G, const ICharacter& chi) {
    const Params& P = G->P;
    std::vector<Task> t;
    for (int j = 0; j < P.f; ++j)
        for (const auto& om : jh_of_induced(P, char_times_alpha_power(P, chi, j, -1)).factors)
            t.push_back([G, chi, j, om] { return oracle::verify_W_omega(G, chi, j, om); });
    return t;
}

inline Report suite_womega(const Config& c) {
    Params P(c.p, c.f);
    need_oracle(P);
    auto G = oracle::make_context(P);
    std::vector<Task> t;
    for (const auto& chi : sample_chars(P)) {
        auto x = womega_tasks(G, chi);
        t.insert(t.end(), x.begin(), x.end());
    }
    return run_tasks(t, c.jobs);
}

// ---- combinatorics of D(rho) and D0(rho) ----

inline Report diamond_counts(const Params& P, const GaloisParams& g) {
    Report r;
    const std::string inst = rho_inst(P, g);
    auto D = diamond_set(P, g);
    r.add("|D(rho)| = 2^f", inst, std::to_string(1L << P.f), std::to_string(D.size()));
    std::vector<Weight> all;
    for (const auto& d : D)
        for (const auto& x : d0_factors(P, g, d)) all.push_back(x.weight);
    std::sort(all.begin(), all.end());
    r.add_bool("D0(rho) multiplicity one", inst, std::adjacent_find(all.begin(), all.end()) == all.end());
    return r;
}

inline Report suite_combination(const Config& c) {
    Params P(c.p, c.f);
    if (P.f < 2) throw domain_error("couples need f >= 2");
    std::vector<Task> t;
    for (const auto& g : galois_params(P, c))
        t.push_back([P, g] {
            Report r = diamond_counts(P, g);
            for (const auto& d : diamond_set(P, g))
                for (int j = 0; j < P.f; ++j) {
                    auto rep = verify_combination(P, g, d, j);
                    if (!rep.couples) continue;
                    std::string got = rep.ok() ? "ok" : rep.failures.front();
                    r.add("couples (+1,j): delta, S_lambda, lambda, S(theta), J(xi)",
                          rho_inst(P, g) + " sigma=" + to_string(d.weight) + " j=" + std::to_string(j), "ok", got);
                }
            return r;
        });
    return run_tasks(t, c.jobs);
}

// ---- f = 2, irreducible ----

inline Report suite_f2(const Config& c) {
    Params P(c.p, 2);
    Config c2 = c;
    c2.reducible = false;
    std::vector<Task> t;
    auto G = P.q <= 125 ? oracle::make_context(P) : nullptr;
    for (const auto& g : galois_params(P, c2)) {
        if (g.r[1] > P.p - 3) continue;
        t.push_back([P, g] {
            Report r;
            auto chk = f2_tables_check(P, g);
            r.add("f=2 table: sigma_i, S_i, last column, delta", rho_inst(P, g), "ok",
                  chk.ok ? "ok" : chk.failures.front());
            return r;
        });
        if (G && g.r[1] <= P.p - 4)
            t.push_back([G, g] {
                const Params& P = G->P;
                Report r;
                auto x = oracle::example_f2_subrep(G, g.r[0], g.r[1]);
                std::vector<std::vector<Weight>> want = {{x.sigma4}, {sigma_s(P, x.sigma3)}, {x.omega}};
                std::string ws, gs;
                for (const auto& l : want) ws += oracle::to_string(l);
                for (const auto& l : x.layers) gs += oracle::to_string(l);
                r.add("image of W_omega: sigma_4 -- sigma_3^[s] -- omega", rho_inst(P, g), ws, gs);
                return r;
            });
    }
    return run_tasks(t, c.jobs);
}

// ---- the special weight and J(xi) of its tau_j ----

// brute force: the Diamond weight with mu_lambda = (p-3-y, ..., p-3-y) and sigma^[s] in D
inline std::optional<DiamondWeight> special_by_search(const Params& P, const GaloisParams& g) {
    auto D = diamond_set(P, g);
    for (const auto& d : D) {
        Tuple m = mu_of_lambda(family_of(g), d.lambda);
        if (std::all_of(m.begin(), m.end(), [](Sym a) { return a == Sym::P3MX; }) &&
            find_by_weight(D, sigma_s(P, d.weight)))
            return d;
    }
    return std::nullopt;
}

inline Report suite_special(const Config& c) {
    Params P(c.p, c.f);
    Config c2 = c;
    c2.reducible = P.f % 2 == 0;
    if (P.f < 3) throw domain_error("special weight needs f >= 3");
    std::vector<Task> t;
    for (const auto& g : galois_params(P, c2))
        t.push_back([P, g] {
            Report r;
            const std::string inst = rho_inst(P, g);
            auto s = find_special_sigma(P, g);
            auto b = special_by_search(P, g);
            r.add("special sigma: lambda", inst, tuple_name(special_lambda(P, g)), tuple_name(s.lambda));
            r.add("special sigma: search agrees", inst, to_string(s.weight), b ? to_string(b->weight) : "none");
            for (int j = 0; j < P.f; ++j) {
                auto tau = special_tau(P, g, s, j);
                auto x = xi_and_J(P, g, s, tau);
                r.add("J(xi) of tau_j = {0..f-1} minus {j-2}", inst + " j=" + std::to_string(j),
                      subset_name(full_set(P.f) & ~bit(P.idx(j - 2)), P.f), subset_name(x.J, P.f));
            }
            return r;
        });
    return run_tasks(t, c.jobs);
}

// ---- structure modules ----

inline Report s1s2_instance(const oracle::Context& G, const Weight& sigma, int j) {
    const Params& P = G->P;
    Report r;
    const int jm = P.idx(j - 1), s1 = sigma.r[jm] + 1;
    auto tau = plus_partner(P, sigma, j);
    const ICharacter cs = chi_of_weight(P, sigma);
    auto M = oracle::e_two_char_module(G, cs, chi_of_weight(P, *tau), j, s1);
    const std::string inst = "p=" + std::to_string(P.p) + " sigma=" + to_string(sigma) + " j=" + std::to_string(j);
    r.add("E_{j-1}(chi,chi',s+1): dim s+3", inst, std::to_string(s1 + 2), std::to_string(M.dim));
    std::vector<ICharacter> all;
    for (const auto& l : oracle::socle_series_I(M)) all.insert(all.end(), l.begin(), l.end());
    std::sort(all.begin(), all.end());
    r.add_bool("E_{j-1}(chi,chi',s+1): multiplicity one", inst, std::adjacent_find(all.begin(), all.end()) == all.end());
    r.add("E_{j-1}(chi,chi',s+1): U+ Loewy length s+2", inst, std::to_string(s1 + 1),
          std::to_string(oracle::restricted_loewy(M, oracle::Unipotent::plus)));
    auto v = oracle::eigenvector(M, char_times_alpha_power(P, cs, jm, -s1));
    r.add_bool("S1 condition for the top vector", inst, v && oracle::verify_S1_condition(M, *v).holds);
    return r;
}

inline Report chain_instance(const oracle::Context& G, const ICharacter& chi, int j, int s) {
    const Params& P = G->P;
    auto M = oracle::ej_chain_module(G, chi, j, s);
    std::vector<std::vector<ICharacter>> want;
    for (int i = 0; i <= s; ++i) want.push_back({char_times_alpha_power(P, chi, j, -i)});
    std::string ws, gs;
    for (const auto& l : want) ws += oracle::to_string(l);
    for (const auto& l : oracle::socle_series_I(M)) gs += oracle::to_string(l);
    Report r;
    r.add("E_j(chi,s): uniserial ladder chi, chi alpha^{-p^j}, ...", oracle::chi_inst(P, chi, j) + " s=" + std::to_string(s),
          ws, gs);
    return r;
}

inline Report suite_s1s2(const Config& c) {
    Params P(c.p, c.f);
    need_oracle(P);
    if (P.f < 2) throw domain_error("couples need f >= 2");
    auto G = oracle::make_context(P);
    std::vector<Task> t;
    std::vector<int> r(P.f, 0);
    for (;;) {
        Weight s = make_weight(P, r, c.twist);
        for (int j = 0; j < P.f; ++j)
            if (plus_partner(P, s, j) && s.r[j] >= 1 && s.r[P.idx(j - 1)] + 1 <= P.p - 1)
                t.push_back([G, s, j] { return s1s2_instance(G, s, j); });
        int i = 0;
        while (i < P.f && ++r[i] > P.p - 1) r[i++] = 0;
        if (i == P.f) break;
    }
    for (const auto& chi : sample_chars(P))
        for (int j = 0; j < P.f; ++j)
            for (int s = 0; s <= P.p - 1; ++s) t.push_back([G, chi, j, s] { return chain_instance(G, chi, j, s); });
    return run_tasks(t, c.jobs);
}

inline const std::vector<std::pair<std::string, std::function<Report(const Config&)>>>& registry() {
    static const std::vector<std::pair<std::string, std::function<Report(const Config&)>>> r = {
        {"jh", suite_jh},           {"witt", suite_witt},   {"uplus", suite_uplus},
        {"calculH", suite_calculH}, {"indej", suite_indej}, {"womega", suite_womega},
        {"combination", suite_combination}, {"f2", suite_f2}, {"special", suite_special},
        {"s1s2", suite_s1s2}};
    return r;
}

} // namespace gl2w::suites
