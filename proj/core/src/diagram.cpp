#include "lch/diagram.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <deque>
#include <functional>
#include <optional>
#include <set>

namespace lch {

namespace {

int out_slot(const LagrangianDiagram& d, const GaussEntry& e) {
    if (e.over) return 0;
    return d.crossings[e.crossing].sign > 0 ? 1 : 3;
}

int in_slot(const LagrangianDiagram& d, const GaussEntry& e) {
    if (e.over) return 2;
    return d.crossings[e.crossing].sign > 0 ? 3 : 1;
}

// Quadrant j is positive when half-edge j is over and j+1 is under.
bool slot_is_over(int s) { return s % 2 == 0; }
bool quadrant_positive(int j) { return slot_is_over(j) && !slot_is_over((j + 1) % 4); }

struct Darts {
    std::vector<std::size_t> arrive_c, arrive_s;
    std::vector<std::array<std::size_t, 4>> leave;  // dart leaving crossing c from slot s
    std::vector<int> turn;                          // signed turning per dart, 0 if unknown

    std::size_t next_in_face(std::size_t dart) const {
        return leave[arrive_c[dart]][(arrive_s[dart] + 3) % 4];
    }
};

Darts build_darts(const LagrangianDiagram& d) {
    const std::size_t m = d.gauss.size();
    Darts g;
    g.arrive_c.resize(2 * m);
    g.arrive_s.resize(2 * m);
    g.turn.assign(2 * m, 0);
    g.leave.assign(d.crossings.size(), {SIZE_MAX, SIZE_MAX, SIZE_MAX, SIZE_MAX});
    for (std::size_t e = 0; e < m; ++e) {
        const auto& a = d.gauss[e];
        const auto& b = d.gauss[(e + 1) % m];
        const int so = out_slot(d, a), si = in_slot(d, b);
        g.leave[a.crossing][so] = 2 * e;
        g.arrive_c[2 * e] = b.crossing;
        g.arrive_s[2 * e] = si;
        g.leave[b.crossing][si] = 2 * e + 1;
        g.arrive_c[2 * e + 1] = a.crossing;
        g.arrive_s[2 * e + 1] = so;
        if (!d.turning.empty()) {
            g.turn[2 * e] = d.turning[e];
            g.turn[2 * e + 1] = -d.turning[e];
        }
    }
    return g;
}

void check_structure(const LagrangianDiagram& d) {
    const std::size_t n = d.crossings.size();
    std::set<std::string> names;
    for (const auto& c : d.crossings) {
        if (c.name.empty()) throw Error("crossing with empty name");
        if (!names.insert(c.name).second) throw Error("crossing " + c.name + " declared twice");
        if (c.sign != 1 && c.sign != -1) throw Error("crossing " + c.name + " has no sign");
    }
    std::vector<int> overs(n, 0), unders(n, 0);
    for (const auto& e : d.gauss) {
        if (e.crossing >= n) throw Error("gauss entry refers to an unknown crossing");
        (e.over ? overs : unders)[e.crossing]++;
    }
    for (std::size_t c = 0; c < n; ++c)
        if (overs[c] != 1 || unders[c] != 1)
            throw Error("crossing " + d.crossings[c].name + " must be visited once over and once under");
    if (d.gauss.empty()) {
        if (d.turning.size() > 1) throw Error("a crossingless diagram has one edge");
    } else if (!d.turning.empty() && d.turning.size() != d.gauss.size()) {
        throw Error("turning data must cover every edge or none");
    }
    if (!d.corners.empty() && d.corners.size() != n) throw Error("corner data size mismatch");
}

bool is_negative_kink(const LagrangianDiagram& d, std::size_t i) {
    const std::size_t m = d.gauss.size();
    const auto r = d.gauss[i].crossing;
    return d.gauss[(i + 1) % m].crossing == r && d.crossings[r].sign == -1;
}

bool has_negative_kink(const LagrangianDiagram& d) {
    for (std::size_t i = 0; i < d.gauss.size(); ++i)
        if (is_negative_kink(d, i)) return true;
    return false;
}

}  // namespace

std::string quadrant_pattern(const LagrangianDiagram& d, std::size_t crossing) {
    if (crossing >= d.crossings.size()) throw Error("no such crossing");
    std::string s;
    for (int j = 0; j < 4; ++j) s += quadrant_positive(j) ? '+' : '-';
    return s;
}

PlanarMap embed(const LagrangianDiagram& d) {
    check_structure(d);
    PlanarMap pm;
    const std::size_t m = d.gauss.size();
    if (m == 0) {
        pm.planar = true;
        return pm;
    }
    auto g = build_darts(d);
    pm.slot_edge.assign(d.crossings.size(), {});
    for (std::size_t c = 0; c < d.crossings.size(); ++c)
        for (int s = 0; s < 4; ++s) pm.slot_edge[c][s] = g.leave[c][s];
    pm.face_of_dart.assign(2 * m, SIZE_MAX);
    for (std::size_t start = 0; start < 2 * m; ++start) {
        if (pm.face_of_dart[start] != SIZE_MAX) continue;
        std::vector<std::size_t> cyc;
        std::size_t x = start;
        do {
            pm.face_of_dart[x] = pm.faces.size();
            cyc.push_back(x);
            x = g.next_in_face(x);
        } while (x != start);
        pm.faces.push_back(std::move(cyc));
    }
    pm.planar = pm.faces.size() == d.crossings.size() + 2;
    if (!d.turning.empty()) {
        for (const auto& f : pm.faces) {
            int t = static_cast<int>(f.size());
            for (auto x : f) t += g.turn[x];
            pm.face_turning.push_back(t);
        }
        for (std::size_t i = 0; i < pm.faces.size(); ++i) {
            if (pm.face_turning[i] != -4) continue;
            if (pm.outer != SIZE_MAX) {
                pm.outer = SIZE_MAX;
                break;
            }
            pm.outer = i;
        }
    }
    return pm;
}

void validate(const LagrangianDiagram& d) {
    auto pm = embed(d);
    if (!pm.planar) throw Error("gauss code does not describe a planar curve");
    if (!d.turning.empty() && !d.gauss.empty()) {
        int outer = 0;
        for (int t : pm.face_turning) {
            if (t == -4) ++outer;
            else if (t != 4) throw Error("turning data inconsistent: a face turns by " + std::to_string(t));
        }
        if (outer != 1) throw Error("turning data must leave exactly one unbounded face");
    }
    if (d.gauss.empty() && d.turning.size() == 1 && std::abs(d.turning[0]) != 4)
        throw Error("a crossingless diagram turns by +-4");
    for (std::size_t c = 0; c < d.corners.size(); ++c)
        if (!d.corners[c].empty() && d.corners[c] != quadrant_pattern(d, c))
            throw Error("corner pattern of " + d.crossings[c].name + " disagrees with its over/under data");
}

int tb(const LagrangianDiagram& d) {
    int w = 0;
    for (const auto& c : d.crossings) w += c.sign;
    return w;
}

int rotation(const LagrangianDiagram& d) {
    if (d.turning.empty()) throw Error("rotation needs turning data");
    int t = 0;
    for (int x : d.turning) t += x;
    if (t % 4 != 0) throw Error("total turning is not a whole number of turns");
    return t / 4;
}

DiskEnumeration enumerate_disks(const LagrangianDiagram& d, std::size_t walk_cap) {
    validate(d);
    DiskEnumeration out;
    const std::size_t m = d.gauss.size();
    out.walk_cap = walk_cap ? walk_cap : 4 * d.crossings.size();
    if (m == 0) return out;
    if (d.turning.empty()) throw Error("disk enumeration needs turning data");
    auto g = build_darts(d);
    auto pm = embed(d);

    std::vector<int> used(2 * m, 0);
    std::vector<std::size_t> path;
    std::vector<std::size_t> negs;

    auto windings_ok = [&]() {
        std::vector<long> w(pm.faces.size(), LONG_MIN);
        std::deque<std::size_t> q{pm.outer};
        w[pm.outer] = 0;
        while (!q.empty()) {
            auto f = q.front();
            q.pop_front();
            for (auto x : pm.faces[f]) {
                auto h = pm.face_of_dart[x ^ 1];
                long v = w[f] - used[x] + used[x ^ 1];
                if (w[h] == LONG_MIN) {
                    w[h] = v;
                    q.push_back(h);
                } else if (w[h] != v) {
                    return false;
                }
            }
        }
        return std::all_of(w.begin(), w.end(), [](long v) { return v >= 0; });
    };

    for (std::size_t a = 0; a < d.crossings.size(); ++a) {
        for (int j = 0; j < 4; ++j) {
            if (!quadrant_positive(j)) continue;
            std::function<void(std::size_t, int)> walk = [&](std::size_t dart, int turning) {
                if (path.size() >= out.walk_cap) {
                    out.cap_hit = true;
                    return;
                }
                used[dart]++;
                path.push_back(dart);
                turning += g.turn[dart];
                const std::size_t c = g.arrive_c[dart], s = g.arrive_s[dart];
                if (c == a && (s + 3) % 4 == static_cast<std::size_t>(j)) {
                    if (turning + 1 + static_cast<int>(negs.size()) == 4 && windings_ok())
                        out.disks.push_back({a, negs});
                }
                auto straight = g.leave[c][(s + 2) % 4];
                if (!used[straight]) walk(straight, turning);
                const int q = static_cast<int>((s + 3) % 4);
                if (!quadrant_positive(q)) {
                    auto left = g.leave[c][q];
                    if (!used[left]) {
                        negs.push_back(c);
                        walk(left, turning);
                        negs.pop_back();
                    }
                }
                path.pop_back();
                used[dart]--;
            };
            walk(g.leave[a][j], 0);
        }
    }
    return out;
}

DGA dga_from_disks(const LagrangianDiagram& d, const std::vector<DiskCount>& disks) {
    const int rot = d.turning.empty() ? 0 : rotation(d);
    DGA dga(2 * std::abs(rot));
    for (const auto& c : d.crossings) dga.add(c.name, c.grading);
    for (const auto& disk : disks) {
        Word w;
        for (auto b : disk.word) w.push_back(static_cast<Letter>(b));
        dga.d[disk.positive].toggle(w);
    }
    auto problems = check_dga(dga);
    if (!problems.empty()) {
        std::string msg = "diagram produced an invalid DGA:";
        for (const auto& p : problems) msg += "\n  " + p;
        throw Error(msg);
    }
    return dga;
}

DGA dga_from_diagram(const LagrangianDiagram& d) {
    auto en = enumerate_disks(d);
    if (en.cap_hit) throw Error("disk walk cap reached; enumeration incomplete");
    return dga_from_disks(d, en.disks);
}

LagrangianDiagram reverse(const LagrangianDiagram& d) {
    LagrangianDiagram r = d;
    const std::size_t m = d.gauss.size();
    std::reverse(r.gauss.begin(), r.gauss.end());
    if (m > 0 && !d.turning.empty()) {
        for (std::size_t j = 0; j < m; ++j) r.turning[j] = -d.turning[(2 * m - 2 - j) % m];
    } else if (!d.turning.empty()) {
        r.turning[0] = -d.turning[0];
    }
    for (auto& s : r.corners)
        if (!s.empty()) s = s.substr(2) + s.substr(0, 2);
    return r;
}

// Reflect the plane and exchange over/under: the result is again the
// projection of a Legendrian knot, with the same knot type.
LagrangianDiagram mirror(const LagrangianDiagram& d) {
    LagrangianDiagram r = d;
    for (auto& e : r.gauss) e.over = !e.over;
    for (auto& t : r.turning) t = -t;
    return r;
}

LagrangianDiagram rotate_basepoint(const LagrangianDiagram& d, std::size_t shift) {
    LagrangianDiagram r = d;
    const std::size_t m = d.gauss.size();
    if (m == 0) return r;
    shift %= m;
    std::rotate(r.gauss.begin(), r.gauss.begin() + static_cast<long>(shift), r.gauss.end());
    if (!r.turning.empty())
        std::rotate(r.turning.begin(), r.turning.begin() + static_cast<long>(shift), r.turning.end());
    return r;
}

LagrangianDiagram t2k_diagram(int k) {
    if (k < 1) throw Error("t2k_diagram needs k >= 1");
    const int n = 2 * k - 1;
    LagrangianDiagram d;
    d.crossings.push_back({"a1", 1, -1});
    for (int j = 1; j <= n; ++j) d.crossings.push_back({"a" + std::to_string(j + 1), 0, +1});
    d.crossings.push_back({"a" + std::to_string(2 * k + 1), 1, -1});
    const std::size_t r1 = 0, r2 = static_cast<std::size_t>(n + 1);
    auto twist = [](int j) { return static_cast<std::size_t>(j); };
    // first pass through the twists: T_j is under when n-j is even
    auto first_over = [n](int j) { return (n - j) % 2 != 0; };

    d.gauss.push_back({r1, true});
    d.gauss.push_back({r1, false});
    d.turning.push_back(3);
    d.turning.push_back(0);
    for (int j = n; j >= 1; --j) {
        d.gauss.push_back({twist(j), first_over(j)});
        if (j > 1) d.turning.push_back(first_over(j) ? 1 : -1);
    }
    d.turning.push_back(2);
    d.gauss.push_back({r2, false});
    d.gauss.push_back({r2, true});
    d.turning.push_back(-3);
    d.turning.push_back(0);
    for (int j = n; j >= 1; --j) {
        d.gauss.push_back({twist(j), !first_over(j)});
        if (j > 1) d.turning.push_back(!first_over(j) ? 1 : -1);
    }
    d.turning.push_back(-2);
    validate(d);
    return d;
}

LagrangianDiagram connected_sum(const LagrangianDiagram& d1, const LagrangianDiagram& d2) {
    validate(d1);
    validate(d2);
    if (d1.turning.empty() || d2.turning.empty()) throw Error("connected sum needs turning data");
    if (d2.gauss.empty()) {
        throw Error("connected sum with a crossingless diagram is not supported");
    }
    if (!has_negative_kink(d1) && has_negative_kink(d2)) return connected_sum(d2, d1);
    const std::size_t m1 = d1.gauss.size(), m2 = d2.gauss.size();
    auto pm1 = embed(d1);
    auto pm2 = embed(d2);

    for (std::size_t i = 0; i < m1; ++i) {
        if (!is_negative_kink(d1, i)) continue;
        const auto r = d1.gauss[i].crossing;
        for (std::size_t e2 = 0; e2 < m2; ++e2) {
            if (pm2.face_of_dart[2 * e2] != pm2.outer && pm2.face_of_dart[2 * e2 + 1] != pm2.outer) continue;

            LagrangianDiagram s;
            std::vector<std::size_t> map1(d1.crossings.size(), SIZE_MAX);
            for (std::size_t c = 0; c < d1.crossings.size(); ++c) {
                if (c == r) continue;
                map1[c] = s.crossings.size();
                s.crossings.push_back(d1.crossings[c]);
            }
            std::set<std::string> names;
            for (const auto& c : s.crossings) names.insert(c.name);
            const std::size_t off = s.crossings.size();
            for (auto c : d2.crossings) {
                while (names.count(c.name)) c.name += "'";
                names.insert(c.name);
                s.crossings.push_back(c);
            }
            // S1: entries i+2 .. i-1 of d1, then S2: entries e2+1 .. e2 of d2
            std::vector<int> base_turn;
            std::vector<std::size_t> d1_darts;  // former d1 edges kept, as new edge indices
            for (std::size_t t = 0; t + 2 < m1; ++t) {
                const std::size_t k = (i + 2 + t) % m1;
                s.gauss.push_back({map1[d1.gauss[k].crossing], d1.gauss[k].over});
                if (t + 3 < m1) {
                    d1_darts.push_back(s.gauss.size() - 1);
                    base_turn.push_back(d1.turning[k]);
                }
            }
            const std::size_t x_edge = base_turn.size();
            base_turn.push_back(0);
            for (std::size_t t = 0; t < m2; ++t) {
                const std::size_t k = (e2 + 1 + t) % m2;
                s.gauss.push_back({off + d2.gauss[k].crossing, d2.gauss[k].over});
                if (t + 1 < m2) base_turn.push_back(d2.turning[k]);
            }
            const std::size_t y_edge = base_turn.size();
            base_turn.push_back(0);

            std::vector<std::size_t> d1_outer_edges;
            for (std::size_t t = 0; t < d1_darts.size(); ++t) {
                const std::size_t k = (i + 2 + t) % m1;
                if (pm1.face_of_dart[2 * k] == pm1.outer || pm1.face_of_dart[2 * k + 1] == pm1.outer)
                    d1_outer_edges.push_back(d1_darts[t]);
            }

            // the replaced stretch of d1 and the cut edge of d2 together turn by
            // as much as the two joining edges
            const int budget = d1.turning[(i + m1 - 1) % m1] + d1.turning[i] + d1.turning[(i + 1) % m1] + d2.turning[e2];
            std::vector<int> xs;
            for (int x = -12; x <= 12; ++x) xs.push_back(x);
            std::stable_sort(xs.begin(), xs.end(), [budget](int a, int b) {
                return std::abs(a) + std::abs(budget - a) < std::abs(b) + std::abs(budget - b);
            });
            std::optional<LagrangianDiagram> fallback;
            for (int x : xs) {
                s.turning = base_turn;
                s.turning[x_edge] = x;
                s.turning[y_edge] = budget - x;
                try {
                    validate(s);
                } catch (const Error&) {
                    continue;
                }
                auto pm = embed(s);
                bool keeps_outer = d1_outer_edges.empty();
                for (auto e : d1_outer_edges)
                    if (pm.face_of_dart[2 * e] == pm.outer || pm.face_of_dart[2 * e + 1] == pm.outer)
                        keeps_outer = true;
                if (keeps_outer) return s;
                if (!fallback) fallback = s;
            }
            if (fallback) return *fallback;
        }
    }
    throw Error("no negative kink to splice along");
}

}  // namespace lch
