#include "lch/charalg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>

namespace lch {

namespace {

using TermSet = std::set<Word, DeglexLess>;

void toggle(TermSet& s, Word w) {
    auto [it, inserted] = s.insert(std::move(w));
    if (!inserted) s.erase(it);
}

// Leftmost occurrence of `pat` in `w`, or npos.
std::size_t find_sub(const Word& w, const Word& pat) {
    if (pat.size() > w.size()) return std::string::npos;
    auto it = std::search(w.begin(), w.end(), pat.begin(), pat.end());
    return it == w.end() && !pat.empty() ? std::string::npos : static_cast<std::size_t>(it - w.begin());
}

Poly reduce(const std::vector<const Rule*>& rules, const Poly& p, int* height) {
    TermSet work(p.terms().begin(), p.terms().end());
    std::vector<Word> done;
    int h = 0;
    while (!work.empty()) {
        auto it = std::prev(work.end());
        Word t = *it;
        work.erase(it);
        const Rule* hit = nullptr;
        std::size_t pos = 0;
        for (const Rule* r : rules) {
            pos = find_sub(t, r->lead);
            if (pos != std::string::npos) {
                hit = r;
                break;
            }
        }
        if (!hit) {
            done.push_back(std::move(t));
            continue;
        }
        h = std::max(h, hit->height + static_cast<int>(t.size() - hit->lead.size()));
        for (const auto& r : hit->rest.terms()) {
            Word v(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(pos));
            v.insert(v.end(), r.begin(), r.end());
            v.insert(v.end(), t.begin() + static_cast<std::ptrdiff_t>(pos + hit->lead.size()), t.end());
            toggle(work, std::move(v));
        }
    }
    if (height) *height = std::max(*height, h);
    return Poly(std::move(done));
}

class Completer {
public:
    explicit Completer(int bound) : bound_(bound) {}

    RewriteSystem run(const std::vector<Poly>& ideal) {
        for (const auto& p : ideal)
            if (!p.is_zero()) pending_.push_back({p, static_cast<int>(p.degree())});
        while (!unit_ && (!pending_.empty() || !pairs_.empty())) {
            if (!pending_.empty()) {
                auto [p, h] = pending_.front();
                pending_.pop_front();
                add(p, h);
                continue;
            }
            Pair pr = pairs_.top();
            pairs_.pop();
            auto a = alive_.find(pr.a), b = alive_.find(pr.b);
            if (a == alive_.end() || b == alive_.end()) continue;
            const Entry& A = rules_[a->second];
            const Entry& B = rules_[b->second];
            std::size_t ulen = A.rule.lead.size() - pr.overlap;
            Word u(A.rule.lead.begin(), A.rule.lead.begin() + static_cast<std::ptrdiff_t>(ulen));
            Word v(B.rule.lead.begin() + static_cast<std::ptrdiff_t>(pr.overlap), B.rule.lead.end());
            Poly s = A.rule.rest * Poly::word(v) + Poly::word(u) * B.rule.rest;
            int h = std::max(A.rule.height + static_cast<int>(v.size()), B.rule.height + static_cast<int>(u.size()));
            add(s, h);
        }
        RewriteSystem rs;
        rs.degree_bound = bound_;
        rs.unit = unit_;
        bool complete = true;
        for (const auto& [a, b] : truncated_)
            if (alive_.count(a) && alive_.count(b)) complete = false;
        rs.complete_up_to_bound = unit_ || complete;
        for (const auto& e : rules_)
            if (alive_.count(e.id) && alive_.at(e.id) == index_of(e)) rs.rules.push_back(e.rule);
        return rs;
    }

private:
    struct Entry {
        Rule rule;
        std::uint64_t id;
        bool dead = false;
    };
    struct Pair {
        std::size_t len;
        std::uint64_t seq;
        std::uint64_t a, b;
        std::size_t overlap;
        bool operator<(const Pair& o) const {
            // priority_queue pops the largest: invert for shortest-first.
            if (len != o.len) return len > o.len;
            return seq > o.seq;
        }
    };

    int bound_;
    bool unit_ = false;
    std::vector<Entry> rules_;  // insertion order; dead entries kept as tombstones
    std::map<std::uint64_t, std::size_t> alive_;
    std::deque<std::pair<Poly, int>> pending_;
    std::priority_queue<Pair> pairs_;
    std::set<std::pair<std::uint64_t, std::uint64_t>> truncated_;
    std::uint64_t next_id_ = 0, seq_ = 0;

    std::size_t index_of(const Entry& e) const { return static_cast<std::size_t>(&e - rules_.data()); }

    std::vector<const Rule*> live_rules() const {
        std::vector<const Rule*> out;
        for (const auto& e : rules_)
            if (!e.dead) out.push_back(&e.rule);
        return out;
    }

    void enqueue_overlaps(const Entry& A, const Entry& B) {
        const Word& a = A.rule.lead;
        const Word& b = B.rule.lead;
        std::size_t max_s = std::min(a.size(), b.size());
        for (std::size_t s = 1; s < max_s || (s == max_s && false); ++s) {
            if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(s), a.end(), b.begin())) continue;
            std::size_t len = a.size() + b.size() - s;
            if (static_cast<int>(len) > bound_) {
                truncated_.insert({A.id, B.id});
                continue;
            }
            pairs_.push({len, seq_++, A.id, B.id, s});
        }
    }

    void kill(Entry& e) {
        e.dead = true;
        alive_.erase(e.id);
    }

    void add(const Poly& p, int h) {
        int height = h;
        Poly f = reduce(live_rules(), p, &height);
        if (f.is_zero()) return;
        if (f.lead().empty()) {
            unit_ = true;
            for (auto& e : rules_)
                if (!e.dead) kill(e);
            Entry u{{Word{}, Poly{}, height}, next_id_++};
            rules_.push_back(u);
            alive_[u.id] = rules_.size() - 1;
            pending_.clear();
            return;
        }
        Rule nr{f.lead(), f + Poly::word(f.lead()), height};
        // Rules whose lead contains the new lead go back to the queue.
        for (auto& e : rules_) {
            if (e.dead) continue;
            if (find_sub(e.rule.lead, nr.lead) != std::string::npos) {
                pending_.push_back({Poly::word(e.rule.lead) + e.rule.rest, e.rule.height});
                kill(e);
            }
        }
        rules_.push_back({nr, next_id_++});
        alive_[rules_.back().id] = rules_.size() - 1;
        std::vector<std::size_t> fresh{rules_.size() - 1};
        // Inter-reduce right-hand sides; a changed rule gets a new id so its
        // overlaps are re-examined.
        for (std::size_t i = 0; i + 1 < rules_.size(); ++i) {
            if (rules_[i].dead) continue;
            int rh = rules_[i].rule.height;
            Poly r = reduce(live_rules(), rules_[i].rule.rest, &rh);
            if (r == rules_[i].rule.rest) continue;
            Rule changed{rules_[i].rule.lead, r, rh};
            kill(rules_[i]);
            rules_.push_back({changed, next_id_++});
            alive_[rules_.back().id] = rules_.size() - 1;
            fresh.push_back(rules_.size() - 1);
        }
        for (std::size_t fi : fresh) {
            if (rules_[fi].dead) continue;
            for (auto& e : rules_) {
                if (e.dead) continue;
                std::size_t ei = index_of(e);
                bool other_fresh = std::find(fresh.begin(), fresh.end(), ei) != fresh.end();
                if (other_fresh && ei < fi) continue;  // pair handled from the other side
                enqueue_overlaps(rules_[fi], e);
                if (ei != fi) enqueue_overlaps(e, rules_[fi]);
            }
        }
    }
};

}  // namespace

RewriteSystem complete(const std::vector<Poly>& ideal, int degree_bound) {
    return Completer(degree_bound).run(ideal);
}

Poly normal_form(const RewriteSystem& rs, const Poly& p, int* height) {
    std::vector<const Rule*> rules;
    rules.reserve(rs.rules.size());
    for (const auto& r : rs.rules) rules.push_back(&r);
    return reduce(rules, p, height);
}

std::string to_string(Tri t) {
    switch (t) {
        case Tri::yes: return "yes";
        case Tri::no_up_to_bound: return "no-up-to-bound";
        case Tri::unknown: return "unknown";
    }
    return "?";
}

Tri contains_unit(const RewriteSystem& rs) {
    if (normal_form(rs, Poly::one()).is_zero()) return Tri::yes;
    return rs.complete_up_to_bound ? Tri::no_up_to_bound : Tri::unknown;
}

bool verify_rank_witness(const RewriteSystem& rs, const RankWitness& w) {
    auto shape_ok = [](const std::vector<std::vector<Poly>>& M, int r, int c) {
        if (static_cast<int>(M.size()) != r) return false;
        for (const auto& row : M)
            if (static_cast<int>(row.size()) != c) return false;
        return true;
    };
    if (w.m <= 0 || w.n <= 0 || !shape_ok(w.A, w.m, w.n) || !shape_ok(w.B, w.n, w.m))
        throw Error("rank witness: dimension mismatch");
    if (w.m <= w.n) return false;
    for (int i = 0; i < w.m; ++i)
        for (int j = 0; j < w.m; ++j) {
            Poly e = i == j ? Poly::one() : Poly::zero();
            for (int k = 0; k < w.n; ++k) e += w.A[i][k] * w.B[k][j];
            if (!normal_form(rs, e).is_zero()) return false;
        }
    return true;
}

RankWitness fact51_witness(const Poly& x, const Poly& y, const Poly& p, const Poly& q) {
    Poly c = Poly::one() + y * x;
    RankWitness w;
    w.m = 2;
    w.n = 1;
    w.A = {{x}, {p * c}};
    w.B = {{y, c * q}};
    return w;
}

namespace {

std::vector<Word> words_of_length(std::size_t ngens, std::size_t len) {
    std::vector<Word> out{Word{}};
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<Word> next;
        next.reserve(out.size() * ngens);
        for (const auto& w : out)
            for (std::size_t g = 0; g < ngens; ++g) {
                Word v = w;
                v.push_back(static_cast<Letter>(g));
                next.push_back(std::move(v));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

bool brute_member(const std::vector<Poly>& ideal, const Poly& p, int max_len, std::size_t ngens) {
    if (max_len < 0) return p.is_zero();
    if (p.degree() > static_cast<std::size_t>(max_len)) return false;
    std::size_t budget = 4'000'000;
    std::map<Word, std::vector<Word>, DeglexLess> pivots;  // lead -> sorted terms
    auto eliminate = [&](std::vector<Word> v) {
        // v sorted ascending by deglex, pairs cancelled
        while (!v.empty()) {
            auto it = pivots.find(v.back());
            if (it == pivots.end()) {
                Word lead = v.back();
                pivots.emplace(std::move(lead), std::move(v));
                return;
            }
            std::vector<Word> out;
            out.reserve(v.size() + it->second.size());
            std::set_symmetric_difference(v.begin(), v.end(), it->second.begin(), it->second.end(),
                                          std::back_inserter(out), DeglexLess{});
            v = std::move(out);
        }
    };
    std::vector<std::vector<Word>> by_len;
    for (const auto& r : ideal) {
        if (r.is_zero()) continue;
        int room = max_len - static_cast<int>(r.degree());
        for (int lw = 0; lw <= room; ++lw) {
            while (by_len.size() <= static_cast<std::size_t>(room)) by_len.push_back(words_of_length(ngens, by_len.size()));
            for (int lv = 0; lw + lv <= room; ++lv) {
                for (const auto& w : by_len[lw])
                    for (const auto& v : by_len[lv]) {
                        if (budget-- == 0) throw Error("brute_member: resource limit exceeded");
                        std::vector<Word> terms;
                        terms.reserve(r.size());
                        for (const auto& t : r.terms()) {
                            Word x = w;
                            x.insert(x.end(), t.begin(), t.end());
                            x.insert(x.end(), v.begin(), v.end());
                            terms.push_back(std::move(x));
                        }
                        // w t v preserves deglex order of the terms t
                        eliminate(std::move(terms));
                    }
            }
        }
    }
    std::vector<Word> v = p.terms();
    while (!v.empty()) {
        auto it = pivots.find(v.back());
        if (it == pivots.end()) return false;
        std::vector<Word> out;
        std::set_symmetric_difference(v.begin(), v.end(), it->second.begin(), it->second.end(),
                                      std::back_inserter(out), DeglexLess{});
        v = std::move(out);
    }
    return true;
}

}  // namespace lch
