#pragma once

/*
 * The invertible two-step recursion on the group and its exact solutions.
 *
 *   R_{N+1} = Q_N R_N Q_{N-1} R_{N-1} Q_{N-1}^-1 R_N^-1 Q_N^-1        (map)
 *
 * Substituting S_N := R_N Q_{N-1} R_{N-1} Q_{N-2} splits the map into
 *
 *   R_{N+1} = S_{N+1} R_{N-1} S_{N+1}^-1                              (a)
 *   S_{N+1} = Q_N S_N Q_{N-2}^-1                                      (b)
 *
 * which telescope to closed products.  Note (a) couples R indices two
 * apart, so the solved product for R_{2K} contains the even-index S's
 * only:
 *
 *   R_{2K} = S_{2K} S_{2K-2} ... S_2 R_0 S_2^-1 ... S_{2K-2}^-1 S_{2K}^-1
 *   S_N    = Q_{N-1} ... Q_1 S_1 Q_{-1}^-1 ... Q_{N-3}^-1
 *
 * (a consecutive-index product S_{2K} S_{2K-1} ... S_2 does not reproduce
 * the map; the direct-iteration tests reject it).  For constant Q_N = Q the
 * whole orbit collapses to conjugations of the initial data:
 *
 *   R_{2K}         = Q^2K P^K R_0  P^-K Q^-2K,   P  := Q^-1 R_1 Q R_0
 *   Q^-1 R_{2K+1} Q = Q^2K P^K R~_1 P^-K Q^-2K,  R~_1 := Q^-1 R_1 Q
 *
 * (the odd line conjugates by P^K, i.e. carries P^-K on the right; a
 * variant with P^+K on both sides fails the direct-iteration check).
 */

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "strobe/qsequence.hpp"
#include "strobe/su2.hpp"

namespace strobe {

// State of the two-step recursion: r_prev = R_{n-1}, r_curr = R_n.
struct MapState {
    std::int64_t n = 1;
    GroupElement r_prev;
    GroupElement r_curr;
};

inline MapState initial_state(const GroupElement& r0, const GroupElement& r1) {
    return {1, r0, r1};
}

inline MapState step(const MapState& st, const QSequence& qs) {
    const GroupElement qn = qs.at(st.n);
    const GroupElement qm = qs.at(st.n - 1);
    GroupElement next = mul(qn, st.r_curr, qm, st.r_prev, inverse(qm), inverse(st.r_curr),
                            inverse(qn));
    return {st.n + 1, st.r_curr, renormalize(next)};
}

// Exact inverse of step(): recovers R_{n-2} from (R_{n-1}, R_n).
inline MapState step_back(const MapState& st, const QSequence& qs) {
    const GroupElement qm = qs.at(st.n - 1);
    const GroupElement qk = qs.at(st.n - 2);
    GroupElement prev = mul(inverse(qk), inverse(st.r_prev), inverse(qm), st.r_curr, qm,
                            st.r_prev, qk);
    return {st.n - 1, renormalize(prev), st.r_prev};
}

// R_0 .. R_{n_max} by direct iteration, renormalized each step.
inline std::vector<GroupElement> direct_orbit(const GroupElement& r0, const GroupElement& r1,
                                              const QSequence& qs, std::int64_t n_max) {
    std::vector<GroupElement> orbit;
    orbit.reserve(static_cast<std::size_t>(n_max) + 1);
    orbit.push_back(r0);
    if (n_max >= 1) orbit.push_back(r1);
    MapState st = initial_state(r0, r1);
    for (std::int64_t n = 2; n <= n_max; ++n) {
        st = step(st, qs);
        orbit.push_back(st.r_curr);
    }
    return orbit;
}

struct SRecord {
    std::int64_t n = 1;
    GroupElement s;
};

// S_n = R_n Q_{n-1} R_{n-1} Q_{n-2}, n >= 1.
inline SRecord s_of(const GroupElement& r_n, const GroupElement& r_prev, const QSequence& qs,
                    std::int64_t n) {
    if (n < 1) throw std::invalid_argument("s_of: requires n >= 1");
    return {n, mul(r_n, qs.at(n - 1), r_prev, qs.at(n - 2))};
}

// One application of (b): S_{n+1} = Q_n S_n Q_{n-2}^-1.
inline SRecord s_advance(const SRecord& rec, const QSequence& qs) {
    return {rec.n + 1, renormalize(mul(qs.at(rec.n), rec.s, inverse(qs.at(rec.n - 2))))};
}

struct RsPair {
    GroupElement r_next;  // R_{n+1}
    GroupElement s_next;  // S_{n+1}
};

// One application of the reduced pair (a)+(b) at index n = s.n:
// input (R_{n-1}, S_n), output (R_{n+1}, S_{n+1}).
inline RsPair rs_step(const GroupElement& r_prev, const SRecord& s, const QSequence& qs) {
    const SRecord s_next = s_advance(s, qs);
    return {renormalize(conjugate(s_next.s, r_prev)), s_next.s};
}

// Even-index orbit R_0, R_2, ..., R_{2(count-1)} generated from the reduced
// recursions alone.  S advances through every index; R picks up the even
// ones via (a).
inline std::vector<GroupElement> rs_orbit_even(const GroupElement& r0, const GroupElement& r1,
                                               const QSequence& qs, std::int64_t count) {
    std::vector<GroupElement> orbit;
    orbit.reserve(static_cast<std::size_t>(count));
    orbit.push_back(r0);
    SRecord s = s_of(r1, r0, qs, 1);
    GroupElement r_even = r0;
    for (std::int64_t k = 1; k < count; ++k) {
        while (s.n < 2 * k) s = s_advance(s, qs);
        r_even = renormalize(conjugate(s.s, r_even));
        orbit.push_back(r_even);
    }
    return orbit;
}

// Closed product for S_n seeded at S_1 (n >= 2):
// S_n = Q_{n-1} ... Q_1 S_1 Q_{-1}^-1 ... Q_{n-3}^-1.
inline GroupElement closed_s(std::int64_t n, const SRecord& s1, const QSequence& qs) {
    if (s1.n != 1) throw std::invalid_argument("closed_s: seed must be S_1");
    if (n < 2) throw std::invalid_argument("closed_s: requires n >= 2");
    GroupElement left = GroupElement::identity();
    for (std::int64_t i = n - 1; i >= 1; --i) left = mul(left, qs.at(i));
    GroupElement right = GroupElement::identity();
    for (std::int64_t i = -1; i <= n - 3; ++i) right = mul(right, inverse(qs.at(i)));
    return renormalize(mul(left, s1.s, right));
}

// Even-index S values S_2, S_4, ..., S_{2k}, generated by (b) from initial data.
inline std::vector<GroupElement> s_even_list(const GroupElement& r0, const GroupElement& r1,
                                             const QSequence& qs, std::int64_t k) {
    std::vector<GroupElement> out;
    out.reserve(static_cast<std::size_t>(k));
    SRecord s = s_of(r1, r0, qs, 1);
    for (std::int64_t j = 1; j <= k; ++j) {
        while (s.n < 2 * j) s = s_advance(s, qs);
        out.push_back(s.s);
    }
    return out;
}

// R_{2K} = S_{2K} S_{2K-2} ... S_2 R_0 S_2^-1 ... S_{2K-2}^-1 S_{2K}^-1.
// s_even[j] must hold S_{2(j+1)}.
inline GroupElement closed_r_even(std::int64_t k, const GroupElement& r0,
                                  std::span<const GroupElement> s_even) {
    if (k < 1) throw std::invalid_argument("closed_r_even: requires K >= 1");
    if (static_cast<std::int64_t>(s_even.size()) < k) {
        throw std::out_of_range("closed_r_even: S list has " + std::to_string(s_even.size()) +
                                " entries, need " + std::to_string(k));
    }
    GroupElement conj = GroupElement::identity();
    for (std::int64_t j = k - 1; j >= 0; --j) conj = mul(conj, s_even[static_cast<std::size_t>(j)]);
    return renormalize(conjugate(conj, r0));
}

enum class Parity { Even, Odd };

// R_1 consistent with a prescribed P under constant Q: R_1 = Q P R_0^-1 Q^-1.
inline GroupElement r1_from(const GroupElement& q, const GroupElement& p, const GroupElement& r0) {
    return mul(q, p, inverse(r0), inverse(q));
}

// R~_1 = Q^-1 R_1 Q.
inline GroupElement r1_tilde_from(const GroupElement& q, const GroupElement& r1) {
    return mul(inverse(q), r1, q);
}

// Constant-Q closed solution.  Even parity returns R_{2K}; odd parity
// returns R_{2K+1} (the conjugation Q R~_{2K+1} Q^-1 is applied
// internally, so both parities are directly comparable with the orbit).
inline GroupElement simplified_solution(std::int64_t k, Parity parity, const GroupElement& q,
                                        const GroupElement& p, const GroupElement& r0,
                                        const GroupElement& r1_tilde) {
    const GroupElement a = mul(pow_real(q, 2.0 * static_cast<double>(k)),
                               pow_real(p, static_cast<double>(k)));
    if (parity == Parity::Even) {
        return renormalize(conjugate(a, r0));
    }
    return renormalize(mul(q, conjugate(a, r1_tilde), inverse(q)));
}

// Local coordinates c = (angle/2) * axis of each orbit element; degenerate
// axis flags propagate from the decomposition.
struct Coordinate {
    Vec3 c;
    bool degenerate = false;
};

inline std::vector<Coordinate> parameter_orbit(std::span<const GroupElement> orbit) {
    std::vector<Coordinate> out;
    out.reserve(orbit.size());
    for (const GroupElement& g : orbit) {
        const AxisAngleDecomp aa = axis_angle_of(g);
        out.push_back({(0.5 * aa.angle) * aa.axis, aa.degenerate});
    }
    return out;
}

}  // namespace strobe
