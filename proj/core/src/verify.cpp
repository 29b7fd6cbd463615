#include "qgaps/verify.hpp"

#include "qgaps/counting.hpp"
#include "qgaps/figurate.hpp"
#include "qgaps/series.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qgaps {

namespace {

struct SidePair {
    std::vector<mpz_class> lhs;
    std::vector<mpz_class> rhs;
};

using CheckFn = std::function<SidePair(long n_max, int r, MemoTable& table)>;

// --- convolution-side helpers (memoized p plus figurate shifts) -------------

// sum over k >= 0 of sign(k) * p(n - shift(k)), cut off once shift exceeds
// n_max; shift must be nondecreasing and unbounded
std::vector<mpz_class> shifted_p_sum(long n_max, MemoTable& table,
                                     const std::function<long(long)>& shift,
                                     const std::function<int(long)>& sign) {
    std::vector<mpz_class> pv = table.prefix(n_max);
    std::vector<mpz_class> out(n_max + 1);
    for (long k = 0;; ++k) {
        long s = shift(k);
        if (s > n_max)
            break;
        int sg = sign(k); // 0 drops the term entirely
        if (sg > 0)
            for (long n = s; n <= n_max; ++n)
                out[n] += pv[n - s];
        else if (sg < 0)
            for (long n = s; n <= n_max; ++n)
                out[n] -= pv[n - s];
    }
    return out;
}

std::vector<mpz_class> scaled(std::vector<mpz_class> v, long factor) {
    for (auto& x : v)
        x *= factor;
    return v;
}

std::vector<mpz_class> added(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

std::vector<mpz_class> subtracted(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

std::vector<mpz_class> parity_of(std::vector<mpz_class> v) {
    for (auto& x : v)
        x = ((x % 2) != 0) ? 1 : 0;
    return v;
}

// pentagonal-shift sum with the recurrence signs, optionally keeping only the
// terms whose pentagonal shift is even
std::vector<mpz_class> pentagonal_p_sum(long n_max, MemoTable& table, bool even_shifts_only) {
    return shifted_p_sum(
        n_max, table, [](long k) { return gen_pentagonal(k); },
        [even_shifts_only](long k) {
            if (even_shifts_only && gen_pentagonal(k) % 2 != 0)
                return 0; // dropped term
            return ((k + 1) / 2) % 2 == 0 ? 1 : -1;
        });
}

// indicator of n being twice a generalized pentagonal number
std::vector<mpz_class> twice_pentagonal_indicator(long n_max) {
    std::vector<mpz_class> out(n_max + 1);
    for (long k = 0;; ++k) {
        long v = 2 * gen_pentagonal(k);
        if (v > n_max)
            break;
        out[v] = 1;
    }
    return out;
}

// generating series of the gap-drop counts G_r: partitions whose parts below
// some m each repeat at least r times while m itself appears exactly r-1
// times correspond to staircase removals, giving the numerator
// sum_m (q^P(r+2,-m) - q^(P(r+2,-m)+m)) over the p-series
FormalPowerSeries gap_drop_series(int r, long order) {
    FormalPowerSeries num(order);
    for (long m = 1;; ++m) {
        long c = polygonal(r + 2, -m);
        if (c > order)
            break;
        num.coeff(c) += 1;
        if (c + m <= order)
            num.coeff(c + m) -= 1;
    }
    return num * euler_product(1, 1, order).inverse();
}

std::vector<mpz_class> series_coeffs(const FormalPowerSeries& s) {
    return s.coeffs();
}

// --- the check recipes -------------------------------------------------------

SidePair check_er(long n_max, int, MemoTable& table) {
    SidePair sp;
    sp.lhs = pentagonal_p_sum(n_max, table, false);
    sp.rhs.assign(n_max + 1, 0);
    sp.rhs[0] = 1;
    return sp;
}

SidePair check_bis1(long n_max, int, MemoTable& table) {
    SidePair sp;
    sp.lhs = pentagonal_p_sum(n_max, table, true);
    sp.rhs = mod32_avoiding_table(n_max);
    return sp;
}

SidePair check_eq1(long n_max, int, MemoTable&) {
    SidePair sp;
    sp.lhs = series_coeffs(theta_triangular(-1, n_max));
    FormalPowerSeries rhs = euler_product(1, 1, n_max) * euler_product(2, 4, n_max).inverse();
    sp.rhs = series_coeffs(rhs);
    return sp;
}

SidePair check_t0(long n_max, int r, MemoTable& table) {
    SidePair sp;
    sp.lhs = shifted_p_sum(
        n_max, table, [r](long k) { return r * triangular(k); }, [](long) { return 1; });
    sp.rhs = series_coeffs(gap_sum_series(r, n_max));
    return sp;
}

// T1, clause (i): indices 4k and 4k+3; clause (ii): 4k+1 and 4k+2.
// Compared in doubled form: 2*LHS == S_r +/- U_r.
SidePair check_t1(long n_max, int r, MemoTable& table, bool first_clause) {
    long res_a = first_clause ? 0 : 1;
    long res_b = first_clause ? 3 : 2;
    auto part_a = shifted_p_sum(
        n_max, table, [r, res_a](long k) { return r * triangular(4 * k + res_a); },
        [](long) { return 1; });
    auto part_b = shifted_p_sum(
        n_max, table, [r, res_b](long k) { return r * triangular(4 * k + res_b); },
        [](long) { return 1; });
    SidePair sp;
    sp.lhs = scaled(added(std::move(part_a), part_b), 2);
    auto s_series = series_coeffs(gap_sum_series(r, n_max));
    auto u_dp = mod4r_avoiding_table(n_max, r);
    sp.rhs = first_clause ? added(std::move(s_series), u_dp)
                          : subtracted(std::move(s_series), u_dp);
    return sp;
}

SidePair check_parity(long n_max, int r, MemoTable& table) {
    SidePair sp;
    sp.lhs = parity_of(shifted_p_sum(
        n_max, table, [r](long k) { return r * triangular(k); }, [](long) { return 1; }));
    sp.rhs = parity_of(mod4r_avoiding_table(n_max, r));
    return sp;
}

SidePair check_cor1(long n_max, int r, MemoTable& table) {
    SidePair sp;
    sp.lhs = shifted_p_sum(
        n_max, table, [r](long k) { return r * triangular(k); },
        [](long k) { return triangular(k) % 2 == 0 ? 1 : -1; });
    sp.rhs = mod4r_avoiding_table(n_max, r);
    return sp;
}

SidePair check_c1(long n_max, int, MemoTable& table) {
    SidePair sp;
    sp.lhs = shifted_p_sum(
        n_max, table, [](long k) { return triangular(k); },
        [](long k) { return triangular(k) % 2 == 0 ? 1 : -1; });
    auto qdist = distinct_count_table(n_max / 2);
    sp.rhs.assign(n_max + 1, 0);
    for (long n = 0; n <= n_max; n += 2)
        sp.rhs[n] = qdist[n / 2];
    return sp;
}

SidePair check_c6(long n_max, int, MemoTable& table) {
    SidePair sp;
    sp.lhs = parity_of(shifted_p_sum(
        n_max, table, [](long k) { return triangular(k); }, [](long) { return 1; }));
    sp.rhs = twice_pentagonal_indicator(n_max);
    return sp;
}

SidePair check_t2(long n_max, int r, MemoTable& table) {
    SidePair sp;
    sp.lhs = shifted_p_sum(
        n_max, table, [r](long k) { return polygonal(r + 2, -k); }, [](long) { return 1; });
    sp.rhs = added(series_coeffs(gap_sum_series(r, n_max)),
                   series_coeffs(gap_drop_series(r, n_max)));
    return sp;
}

SidePair check_eq11(long n_max, int, MemoTable& table) {
    auto squares = shifted_p_sum(
        n_max, table, [](long k) { return (k + 1) * (k + 1); },
        [](long k) { return (k + 1) % 2 == 0 ? 1 : -1; });
    std::vector<mpz_class> pv = table.prefix(n_max);
    SidePair sp;
    sp.lhs = added(std::move(pv), scaled(std::move(squares), 2));
    sp.rhs = series_coeffs(euler_product(1, 2, n_max)); // (q;q^2)inf = gf of p_e - p_o
    return sp;
}

// doubled form: 2*p_e(n) from the convolution vs p-series + (q;q^2)
SidePair check_eq12(long n_max, int, MemoTable& table) {
    auto squares = shifted_p_sum(
        n_max, table, [](long k) { return (k + 1) * (k + 1); },
        [](long k) { return (k + 1) % 2 == 0 ? 1 : -1; });
    std::vector<mpz_class> pv = table.prefix(n_max);
    SidePair sp;
    sp.lhs = scaled(added(std::move(pv), std::move(squares)), 2);
    sp.rhs = added(series_coeffs(euler_product(1, 1, n_max).inverse()),
                   series_coeffs(euler_product(1, 2, n_max)));
    return sp;
}

// quadrupled form: 4*sum p(n - square) == 2*S_2 + 2*G_2 +/- (p-series + (q;q^2))
SidePair check_sq(long n_max, int, MemoTable& table, bool even_squares) {
    auto conv = shifted_p_sum(
        n_max, table,
        [even_squares](long k) {
            long root = even_squares ? 2 * k : 2 * k + 1;
            return root * root;
        },
        [](long) { return 1; });
    SidePair sp;
    sp.lhs = scaled(std::move(conv), 4);
    auto core = added(scaled(series_coeffs(gap_sum_series(2, n_max)), 2),
                      scaled(series_coeffs(gap_drop_series(2, n_max)), 2));
    auto pe2 = added(series_coeffs(euler_product(1, 1, n_max).inverse()),
                     series_coeffs(euler_product(1, 2, n_max)));
    sp.rhs = even_squares ? added(std::move(core), pe2) : subtracted(std::move(core), pe2);
    return sp;
}

// doubled form: 2*sum p(n - shift) == S_3 + G_3 +/- R
SidePair check_rank(long n_max, int, MemoTable& table, bool first_clause) {
    auto conv = shifted_p_sum(
        n_max, table,
        [first_clause](long k) {
            return first_clause ? k * (6 * k + 1) : (2 * k + 1) * (3 * k + 2);
        },
        [](long) { return 1; });
    SidePair sp;
    sp.lhs = scaled(std::move(conv), 2);
    auto core = added(series_coeffs(gap_sum_series(3, n_max)),
                      series_coeffs(gap_drop_series(3, n_max)));
    auto rdp = nonneg_rank_table(n_max);
    sp.rhs = first_clause ? added(std::move(core), rdp) : subtracted(std::move(core), rdp);
    return sp;
}

SidePair check_r10(long n_max, int, MemoTable& table) {
    SidePair sp;
    sp.lhs = shifted_p_sum(
        n_max, table, [](long k) { return k * (3 * k + 1) / 2; },
        [](long k) { return k % 2 == 0 ? 1 : -1; });
    sp.rhs = nonneg_rank_table(n_max);
    return sp;
}

SidePair check_crank(long n_max, int, MemoTable& table) {
    SidePair sp;
    sp.lhs = shifted_p_sum(
        n_max, table, [](long k) { return triangular(k); },
        [](long k) { return k % 2 == 0 ? 1 : -1; });
    sp.rhs = nonneg_crank_table(n_max);
    return sp;
}

SidePair check_crank_par(long n_max, int, MemoTable& table) {
    SidePair sp;
    sp.lhs = parity_of(shifted_p_sum(
        n_max, table, [](long k) { return triangular(k); },
        [](long k) { return k % 2 == 0 ? 1 : -1; }));
    sp.rhs = twice_pentagonal_indicator(n_max);
    return sp;
}

// doubled form: 2*sum (-1)^k p(n - T_{k+2*floor(k/2)+offset}) == C +/- U_1
SidePair check_crank_u1(long n_max, MemoTable& table, bool first_clause) {
    long offset = first_clause ? 0 : 2;
    auto conv = shifted_p_sum(
        n_max, table,
        [offset](long k) { return triangular(k + 2 * (k / 2) + offset); },
        [](long k) { return k % 2 == 0 ? 1 : -1; });
    SidePair sp;
    sp.lhs = scaled(std::move(conv), 2);
    auto cdp = nonneg_crank_table(n_max);
    auto u1 = mod4r_avoiding_table(n_max, 1);
    sp.rhs = first_clause ? added(std::move(cdp), u1) : subtracted(std::move(cdp), u1);
    return sp;
}

// T0 with a deliberately wrong value planted on the right-hand side; used to
// prove the harness can fail
SidePair check_corrupted_t0(long n_max, int r, MemoTable& table) {
    SidePair sp = check_t0(n_max, r, table);
    long where = std::min(3L, n_max);
    sp.rhs[where] += 1;
    return sp;
}

// --- registry ----------------------------------------------------------------

struct CheckDef {
    bool parameterized;
    CheckFn fn;
};

const std::map<std::string, CheckDef>& check_map() {
    static const std::map<std::string, CheckDef> m = {
        {"ER", {false, check_er}},
        {"BIS1", {false, check_bis1}},
        {"EQ1", {false, check_eq1}},
        {"T0", {true, check_t0}},
        {"T1i", {true, [](long n, int r, MemoTable& t) { return check_t1(n, r, t, true); }}},
        {"T1ii", {true, [](long n, int r, MemoTable& t) { return check_t1(n, r, t, false); }}},
        {"PARITY", {true, check_parity}},
        {"COR1", {true, check_cor1}},
        {"C1", {false, check_c1}},
        {"C6", {false, check_c6}},
        {"T2", {true, check_t2}},
        {"EQ11", {false, check_eq11}},
        {"EQ12", {false, check_eq12}},
        {"SQ-EVEN", {false, [](long n, int r, MemoTable& t) { return check_sq(n, r, t, true); }}},
        {"SQ-ODD", {false, [](long n, int r, MemoTable& t) { return check_sq(n, r, t, false); }}},
        {"RANK-I", {false, [](long n, int r, MemoTable& t) { return check_rank(n, r, t, true); }}},
        {"RANK-II", {false, [](long n, int r, MemoTable& t) { return check_rank(n, r, t, false); }}},
        {"R10", {false, check_r10}},
        {"CRANK", {false, check_crank}},
        {"CRANK-PAR", {false, check_crank_par}},
        {"CRANK-U1i", {false, [](long n, int, MemoTable& t) { return check_crank_u1(n, t, true); }}},
        {"CRANK-U1ii", {false, [](long n, int, MemoTable& t) { return check_crank_u1(n, t, false); }}},
        {"T0-corrupted-test-double", {true, check_corrupted_t0}},
    };
    return m;
}

} // namespace

const std::vector<IdentityDescriptor>& identity_registry() {
    static const std::vector<IdentityDescriptor> reg = {
        {"ER", "sum_k (-1)^ceil(k/2) p(n - G_k) = [n = 0]", false, {"ER"}, 500},
        {"BIS1", "sum over even G_k of (-1)^ceil(k/2) p(n - G_k) = L(n)", false, {"BIS1"}},
        {"EQ1", "sum_k (-q)^(T_k) = (q;q) / (q^2;q^4), coefficient by coefficient", false, {"EQ1"}},
        {"T0", "sum_k p(n - r T_k) = S_r(n)", true, {"T0"}},
        {"T1",
         "2 sum_k (p(n - r T_{4k}) + p(n - r T_{4k+3})) = S_r(n) + U_r(n); "
         "2 sum_k (p(n - r T_{4k+1}) + p(n - r T_{4k+2})) = S_r(n) - U_r(n)",
         true,
         {"T1i", "T1ii"}},
        {"PARITY", "S_r(n) and U_r(n) have the same parity", true, {"PARITY"}},
        {"COR1", "sum_k (-1)^(T_k) p(n - r T_k) = U_r(n)", true, {"COR1"}},
        {"C1", "sum_k (-1)^(T_k) p(n - T_k) = q(n/2) for even n, 0 for odd n", false, {"C1"}},
        {"C6", "S_1(n) is odd exactly when n is twice a generalized pentagonal number", false, {"C6"}},
        {"T2", "sum_k p(n - P(r+2,-k)) = S_r(n) + G_r(n)", true, {"T2"}},
        {"EQ11", "p(n) + 2 sum_{k>=1} (-1)^k p(n - k^2) = p_e(n) - p_o(n)", false, {"EQ11"}},
        {"EQ12", "p_e(n) = p(n) + sum_{k>=1} (-1)^k p(n - k^2)", false, {"EQ12"}},
        {"SQ-EVEN", "2 sum_k p(n - (2k)^2) = S_2(n) + G_2(n) + p_e(n)", false, {"SQ-EVEN"}},
        {"SQ-ODD", "2 sum_k p(n - (2k+1)^2) = S_2(n) + G_2(n) - p_e(n)", false, {"SQ-ODD"}},
        {"RANK-I", "2 sum_k p(n - k(6k+1)) = S_3(n) + G_3(n) + R(n)", false, {"RANK-I"}},
        {"RANK-II", "2 sum_k p(n - (2k+1)(3k+2)) = S_3(n) + G_3(n) - R(n)", false, {"RANK-II"}},
        {"R10", "sum_k (-1)^k p(n - k(3k+1)/2) = R(n)", false, {"R10"}},
        {"CRANK", "sum_k (-1)^k p(n - T_k) = C(n)", false, {"CRANK"}},
        {"CRANK-PAR", "C(n) is odd exactly when n is twice a generalized pentagonal number",
         false, {"CRANK-PAR"}},
        {"CRANK-U1",
         "2 sum_k (-1)^k p(n - T_{k + 2 floor(k/2)}) = C(n) + U_1(n); "
         "2 sum_k (-1)^k p(n - T_{k + 2 floor(k/2) + 2}) = C(n) - U_1(n)",
         false,
         {"CRANK-U1i", "CRANK-U1ii"}},
    };
    return reg;
}

IdentityReport verify_identity(const std::string& id, long n_max,
                               const std::set<int>* r_set, MemoTable& table) {
    if (n_max < 0)
        throw std::invalid_argument("verify_identity: n_max must be non-negative");

    // resolve to a clause list: a registry entry, one of its clauses, or the
    // corrupted self-test
    std::vector<std::string> clause_ids;
    bool parameterized = false;
    const auto& reg = identity_registry();
    auto entry = std::find_if(reg.begin(), reg.end(),
                              [&](const IdentityDescriptor& d) { return d.id == id; });
    if (entry != reg.end()) {
        clause_ids = entry->clauses;
        parameterized = entry->parameterized;
    } else {
        auto it = check_map().find(id);
        if (it == check_map().end())
            throw std::invalid_argument("verify_identity: unknown identity '" + id + "'");
        clause_ids = {id};
        parameterized = it->second.parameterized;
    }

    if (!parameterized && r_set != nullptr)
        throw std::invalid_argument("verify_identity: identity '" + id + "' takes no r set");

    std::vector<int> r_values;
    if (parameterized) {
        if (r_set != nullptr) {
            for (int r : *r_set) {
                if (r < 1)
                    throw std::invalid_argument("verify_identity: r values must be >= 1");
                r_values.push_back(r);
            }
            if (r_values.empty())
                throw std::invalid_argument("verify_identity: empty r set");
        } else {
            r_values = {1, 2, 3, 4, 5, 6};
        }
    } else {
        r_values = {};
    }

    auto t0 = std::chrono::steady_clock::now();

    // evaluate every clause/r table up front, then scan n ascending, r
    // ascending, clause order last
    std::vector<int> eval_rs = parameterized ? r_values : std::vector<int>{0};
    std::vector<std::vector<SidePair>> tables(clause_ids.size());
    for (std::size_t c = 0; c < clause_ids.size(); ++c) {
        const CheckFn& fn = check_map().at(clause_ids[c]).fn;
        for (int r : eval_rs)
            tables[c].push_back(fn(n_max, r, table));
    }

    IdentityReport rep;
    rep.id = id;
    rep.n_max = n_max;
    rep.r_values = r_values;
    rep.pass = true;

    for (long n = 0; n <= n_max && rep.pass; ++n) {
        for (std::size_t ri = 0; ri < eval_rs.size() && rep.pass; ++ri) {
            for (std::size_t c = 0; c < clause_ids.size(); ++c) {
                const SidePair& sp = tables[c][ri];
                if (sp.lhs[n] != sp.rhs[n]) {
                    IdentityMismatch mm;
                    mm.n = n;
                    if (parameterized)
                        mm.r = eval_rs[ri];
                    mm.lhs = sp.lhs[n].get_str();
                    mm.rhs = sp.rhs[n].get_str();
                    rep.first_mismatch = mm;
                    rep.pass = false;
                    break;
                }
            }
        }
    }

    auto t1 = std::chrono::steady_clock::now();
    rep.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

std::string report_line(const IdentityReport& rep) {
    std::ostringstream os;
    os << rep.id << ' ' << (rep.pass ? "PASS" : "FAIL");
    if (!rep.pass && rep.first_mismatch) {
        os << " at n=" << rep.first_mismatch->n;
        if (rep.first_mismatch->r)
            os << " r=" << *rep.first_mismatch->r;
        os << ": lhs=" << rep.first_mismatch->lhs << " rhs=" << rep.first_mismatch->rhs;
    }
    os << " n=0.." << rep.n_max;
    if (!rep.r_values.empty()) {
        os << " r=";
        for (std::size_t i = 0; i < rep.r_values.size(); ++i) {
            if (i)
                os << ',';
            os << rep.r_values[i];
        }
    }
    os.setf(std::ios::fixed);
    os.precision(1);
    os << " (" << rep.elapsed_ms << " ms)";
    return os.str();
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string report_json(const IdentityReport& rep) {
    std::ostringstream os;
    os << "{\"id\":\"" << json_escape(rep.id) << "\",\"n_max\":" << rep.n_max << ",\"r\":[";
    for (std::size_t i = 0; i < rep.r_values.size(); ++i) {
        if (i)
            os << ',';
        os << rep.r_values[i];
    }
    os << "],\"status\":\"" << (rep.pass ? "pass" : "fail") << "\",\"first_mismatch\":";
    if (rep.first_mismatch) {
        os << "{\"n\":" << rep.first_mismatch->n << ",\"r\":";
        if (rep.first_mismatch->r)
            os << *rep.first_mismatch->r;
        else
            os << "null";
        os << ",\"lhs\":\"" << rep.first_mismatch->lhs << "\",\"rhs\":\""
           << rep.first_mismatch->rhs << "\"}";
    } else {
        os << "null";
    }
    os.setf(std::ios::fixed);
    os.precision(3);
    os << ",\"elapsed_ms\":" << rep.elapsed_ms << "}";
    return os.str();
}

} // namespace qgaps
