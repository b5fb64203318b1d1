// SPDX-License-Identifier: Apache-2.0
#include "ecpat/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

namespace ecpat {

std::string pattern_kind_name(PatternKind k) {
    switch (k) {
        case PatternKind::AP: return "ap";
        case PatternKind::GP: return "gp";
        case PatternKind::Orbit: return "orbit";
        case PatternKind::AdditiveShift: return "additive-shift";
        case PatternKind::MultiplicativeShift: return "multiplicative-shift";
        case PatternKind::Intersection: return "intersection";
    }
    return "?";
}

namespace {

std::vector<Rational> finite_sorted(const ValueSet& x, const char* op) {
    std::vector<Rational> v;
    v.reserve(x.values.size());
    for (const P1Value& p : x.values) {
        if (p.is_infinity()) throw error(std::string(op) + " needs a set of finite values");
        v.push_back(p.finite());
    }
    return v;  // std::set order is already ascending
}

} // namespace

PatternReport longest_ap(const ValueSet& x) {
    if (x.values.empty()) throw empty_set_error("no values to search for a progression");
    std::vector<Rational> v = finite_sorted(x, "arithmetic-progression search");
    size_t n = v.size();

    PatternReport report;
    report.kind = PatternKind::AP;
    if (n == 1) {
        report.length = 1;
        report.witnesses = {P1Value(v[0])};
        return report;
    }

    std::map<Rational, size_t> index;
    for (size_t i = 0; i < n; ++i) index[v[i]] = i;

    // len[i][j]: longest progression ending with (v[i], v[j]); it extends
    // the progression ending with (v[k], v[i]) where v[k] = 2 v[i] - v[j].
    std::vector<std::vector<unsigned>> len(n, std::vector<unsigned>(n, 0));
    size_t best_i = 0, best_j = 1;
    unsigned best_len = 0;
    auto better = [&](size_t i, size_t j) {
        if (len[i][j] != best_len) return len[i][j] > best_len;
        Rational cand_a = v[j] - v[i];
        Rational best_a = v[best_j] - v[best_i];
        if (!(cand_a == best_a)) return cand_a < best_a;
        // same length and difference: prefer the smaller start value
        Rational cand_start = v[j] - Rational(static_cast<long>(len[i][j] - 1)) * cand_a;
        Rational best_start = v[best_j] - Rational(static_cast<long>(best_len - 1)) * best_a;
        return cand_start < best_start;
    };
    for (size_t j = 1; j < n; ++j) {
        for (size_t i = 0; i < j; ++i) {
            Rational prev = v[i] + v[i] - v[j];
            auto it = index.find(prev);
            len[i][j] = (it != index.end() && it->second < i) ? len[it->second][i] + 1 : 2;
            if (better(i, j)) {
                best_len = len[i][j];
                best_i = i;
                best_j = j;
            }
        }
    }

    Rational a = v[best_j] - v[best_i];
    Rational start = v[best_j] - Rational(static_cast<long>(best_len - 1)) * a;
    report.length = best_len;
    report.parameter = a;
    Rational w = start;
    for (unsigned k = 0; k < best_len; ++k, w += a) report.witnesses.emplace_back(w);
    return report;
}

PatternReport longest_gp(const ValueSet& x) {
    if (x.values.empty()) throw empty_set_error("no values to search for a progression");
    std::vector<Rational> all = finite_sorted(x, "geometric-progression search");
    std::vector<Rational> v;
    for (const Rational& r : all)
        if (!r.is_zero()) v.push_back(r);
    size_t n = v.size();

    PatternReport report;
    report.kind = PatternKind::GP;
    if (n == 0) {
        report.length = 0;
        return report;
    }
    if (n == 1) {
        report.length = 1;
        report.witnesses = {P1Value(v[0])};
        return report;
    }

    std::map<Rational, size_t> index;
    for (size_t i = 0; i < n; ++i) index[v[i]] = i;

    // chain_len(i, j): longest progression ending with (v[i], v[j]) whose
    // ratio v[j]/v[i] has |ratio| > 1. Walking backwards strictly shrinks
    // |value|, so the recursion is well founded.
    std::map<std::pair<size_t, size_t>, unsigned> memo;
    std::function<unsigned(size_t, size_t)> chain_len = [&](size_t i, size_t j) -> unsigned {
        auto key = std::make_pair(i, j);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Rational q = v[j] / v[i];
        Rational prev = v[i] / q;
        unsigned out = 2;
        if (auto it = index.find(prev); it != index.end()) out = chain_len(it->second, i) + 1;
        memo[key] = out;
        return out;
    };

    unsigned best_len = 1;
    std::optional<std::pair<size_t, size_t>> best;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Rational q = v[j] / v[i];
            if (q.abs() <= Rational(1)) continue;  // normalized direction only
            unsigned l = chain_len(i, j);
            bool take = false;
            if (l > best_len)
                take = true;
            else if (l == best_len && best) {
                Rational bq = v[best->second] / v[best->first];
                if (q < bq)
                    take = true;
                else if (q == bq) {
                    // equal ratio: compare start values
                    Rational cand_start = v[j], best_start = v[best->second];
                    for (unsigned k = 1; k < l; ++k) cand_start /= q;
                    for (unsigned k = 1; k < best_len; ++k) best_start /= bq;
                    take = cand_start < best_start;
                }
            }
            if (take) {
                best_len = l;
                best = {i, j};
            }
        }
    }

    report.length = best_len;
    if (!best) {
        // no admissible ratio at all: any single element is the answer
        report.witnesses = {P1Value(v[0])};
        report.length = 1;
        return report;
    }
    Rational q = v[best->second] / v[best->first];
    Rational start = v[best->second];
    for (unsigned k = 1; k < best_len; ++k) start /= q;
    report.parameter = q;
    Rational w = start;
    for (unsigned k = 0; k < best_len; ++k, w *= q) report.witnesses.emplace_back(w);
    return report;
}

PatternReport longest_orbit(const ValueSet& x, const OrbitMap& f) {
    if (x.values.empty()) throw empty_set_error("no values to search for an orbit");
    std::vector<P1Value> v(x.values.begin(), x.values.end());
    size_t n = v.size();
    std::map<P1Value, size_t> index;
    for (size_t i = 0; i < n; ++i) index[v[i]] = i;

    constexpr long kOutside = -1;
    std::vector<long> succ(n, kOutside);
    for (size_t i = 0; i < n; ++i) {
        P1Value img = orbit_map_apply(f, v[i]);
        if (auto it = index.find(img); it != index.end()) succ[i] = static_cast<long>(it->second);
    }

    // Longest chain of distinct vertices in the functional graph: walk
    // from each vertex once; a walk entering a cycle of length c within X
    // contributes tail + c.
    std::vector<unsigned> len(n, 0);
    std::vector<int> state(n, 0);  // 0 new, 1 on current walk, 2 finished
    std::vector<long> order(n, -1);
    for (size_t start = 0; start < n; ++start) {
        if (state[start] != 0) continue;
        std::vector<size_t> walk;
        size_t cur = start;
        while (true) {
            if (state[cur] == 1) {
                // found a cycle inside the current walk
                size_t pos = static_cast<size_t>(order[cur]);
                unsigned cycle = static_cast<unsigned>(walk.size() - pos);
                for (size_t k = pos; k < walk.size(); ++k) len[walk[k]] = cycle;
                for (size_t k = pos; k-- > 0;) len[walk[k]] = len[walk[k + 1]] + 1;
                break;
            }
            if (state[cur] == 2) {
                for (size_t k = walk.size(); k-- > 0;)
                    len[walk[k]] = (k + 1 < walk.size() ? len[walk[k + 1]] : len[cur]) + 1;
                break;
            }
            state[cur] = 1;
            order[cur] = static_cast<long>(walk.size());
            walk.push_back(cur);
            long nxt = succ[cur];
            if (nxt == kOutside) {
                len[cur] = 1;
                for (size_t k = walk.size() - 1; k-- > 0;) len[walk[k]] = len[walk[k + 1]] + 1;
                break;
            }
            cur = static_cast<size_t>(nxt);
        }
        for (size_t k : walk) state[k] = 2;
    }

    size_t best = 0;
    for (size_t i = 1; i < n; ++i)
        if (len[i] > len[best]) best = i;  // ties keep the smallest start (canonical order)

    PatternReport report;
    report.kind = PatternKind::Orbit;
    report.length = len[best];
    report.parameter = f;
    P1Value cur = v[best];
    for (unsigned k = 0; k < len[best]; ++k) {
        report.witnesses.push_back(cur);
        cur = orbit_map_apply(f, cur);
    }
    return report;
}

ValueSet shift_intersection(const ValueSet& x, const Rational& a) {
    if (a.is_zero()) throw zero_shift_error();
    ValueSet out;
    out.provenance = "values v of X with v + " + a.to_string() + " in X";
    for (const P1Value& v : x.values) {
        P1Value shifted = v.is_infinity() ? v : P1Value(v.finite() + a);
        if (x.contains(shifted)) out.values.insert(v);
    }
    return out;
}

ValueSet scaling_intersection(const ValueSet& x, const Rational& q, bool exclude_fixed) {
    if (q.is_zero() || q == Rational(1) || q == Rational(-1)) throw bad_ratio_error();
    ValueSet out;
    out.provenance = "values v of X with " + q.to_string() + "*v in X";
    for (const P1Value& v : x.values) {
        if (exclude_fixed && v == P1Value(Rational(0))) continue;
        P1Value scaled = v.is_infinity() ? v : P1Value(v.finite() * q);
        if (x.contains(scaled)) out.values.insert(v);
    }
    return out;
}

std::pair<Rational, ValueSet> best_additive_shift(const ValueSet& x) {
    if (x.values.size() < 2) throw empty_set_error("need at least two values to pick a shift");
    std::vector<Rational> v = finite_sorted(x, "shift search");
    std::map<Rational, size_t> counts;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) ++counts[v[j] - v[i]];
    const Rational* best = nullptr;
    size_t best_count = 0;
    for (const auto& [a, c] : counts) {
        if (c > best_count) {  // map order ties toward the smaller difference
            best_count = c;
            best = &a;
        }
    }
    return {*best, shift_intersection(x, *best)};
}

double implied_constant(long n, int rank) {
    if (n < 1 || rank < 0) throw error("implied constant needs n >= 1 and rank >= 0");
    double raw = std::pow(static_cast<double>(n), 1.0 / (1.0 + rank));
    return std::round(raw * 1e6) / 1e6;
}

bool report_replays(const PatternReport& report, const ValueSet* ambient) {
    if (report.length != report.witnesses.size()) return false;
    for (size_t i = 0; i < report.witnesses.size(); ++i)
        for (size_t j = i + 1; j < report.witnesses.size(); ++j)
            if (report.witnesses[i] == report.witnesses[j]) return false;

    switch (report.kind) {
        case PatternKind::AP: {
            if (report.witnesses.size() < 2) return true;
            if (!report.parameter) return false;
            const Rational& a = std::get<Rational>(*report.parameter);
            if (a.is_zero()) return false;
            for (size_t i = 0; i + 1 < report.witnesses.size(); ++i) {
                if (report.witnesses[i].is_infinity()) return false;
                if (!(P1Value(report.witnesses[i].finite() + a) == report.witnesses[i + 1]))
                    return false;
            }
            return true;
        }
        case PatternKind::GP: {
            if (report.witnesses.size() < 2) return true;
            if (!report.parameter) return false;
            const Rational& q = std::get<Rational>(*report.parameter);
            if (q.is_zero() || q == Rational(1) || q == Rational(-1)) return false;
            for (size_t i = 0; i + 1 < report.witnesses.size(); ++i) {
                if (report.witnesses[i].is_infinity()) return false;
                if (report.witnesses[i].finite().is_zero()) return false;
                if (!(P1Value(report.witnesses[i].finite() * q) == report.witnesses[i + 1]))
                    return false;
            }
            return true;
        }
        case PatternKind::Orbit: {
            if (!report.parameter) return false;
            const OrbitMap& f = std::get<OrbitMap>(*report.parameter);
            for (size_t i = 0; i + 1 < report.witnesses.size(); ++i)
                if (!(orbit_map_apply(f, report.witnesses[i]) == report.witnesses[i + 1]))
                    return false;
            return true;
        }
        case PatternKind::AdditiveShift: {
            if (!ambient || !report.parameter) return false;
            const Rational& a = std::get<Rational>(*report.parameter);
            for (const P1Value& v : report.witnesses) {
                if (!ambient->contains(v)) return false;
                P1Value shifted = v.is_infinity() ? v : P1Value(v.finite() + a);
                if (!ambient->contains(shifted)) return false;
            }
            return true;
        }
        case PatternKind::MultiplicativeShift: {
            if (!ambient || !report.parameter) return false;
            const Rational& q = std::get<Rational>(*report.parameter);
            for (const P1Value& v : report.witnesses) {
                if (!ambient->contains(v)) return false;
                P1Value scaled = v.is_infinity() ? v : P1Value(v.finite() * q);
                if (!ambient->contains(scaled)) return false;
            }
            return true;
        }
        case PatternKind::Intersection: {
            if (!ambient) return false;
            for (const P1Value& v : report.witnesses)
                if (!ambient->contains(v)) return false;
            return true;
        }
    }
    return false;
}

} // namespace ecpat
