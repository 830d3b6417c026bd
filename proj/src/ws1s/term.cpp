/* term.cpp -- hash-consed terms, subsumption, pruning, membership, denotation */

#include "ws1s/term.hpp"

#include <algorithm>

namespace ws1s {

bool term_less(TermRef a, TermRef b) {
    if (a == b) return false;
    if (a->level != b->level) return a->level < b->level;
    if (a->kind != b->kind) return a->kind < b->kind;
    if (a->kind == TermKind::Base) return a->base.lex_less(b->base);
    return std::lexicographical_compare(a->children.begin(), a->children.end(),
                                        b->children.begin(), b->children.end(), term_less);
}

std::size_t TermPool::KeyHash::operator()(const Key& k) const {
    std::size_t h = static_cast<std::size_t>(k.kind);
    h = h * 1099511628211ull ^ k.base.hash();
    for (TermRef c : k.children) h = h * 1099511628211ull ^ std::hash<const void*>()(c);
    return h;
}

TermRef TermPool::intern(Term&& t) {
    Key key{t.kind, t.base, t.children};
    auto it = interned_.find(key);
    if (it != interned_.end()) return it->second;
    if (nodes_.size() >= budget_) throw ResourceLimitError("term-node budget exceeded");
    t.id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(std::move(t));
    TermRef ref = &nodes_.back();
    interned_.emplace(std::move(key), ref);
    return ref;
}

TermRef TermPool::base(StateSet s) {
    Term t;
    t.kind = TermKind::Base;
    t.level = 0;
    t.base = std::move(s);
    return intern(std::move(t));
}

std::vector<TermRef> TermPool::prune(std::vector<TermRef> children, bool keep_minimal) {
    std::sort(children.begin(), children.end(), term_less);
    children.erase(std::unique(children.begin(), children.end()), children.end());

    std::vector<TermRef> kept;
    for (TermRef c : children) {
        bool dominated = false;
        for (TermRef k : kept) {
            // up nodes keep minimal generators, down nodes keep maximal
            if (keep_minimal ? subsumes(k, c) : subsumes(c, k)) {
                dominated = true;
                break;
            }
        }
        if (dominated) continue;
        std::erase_if(kept, [&](TermRef k) {
            return keep_minimal ? subsumes(c, k) : subsumes(k, c);
        });
        kept.push_back(c);
    }
    std::sort(kept.begin(), kept.end(), term_less);
    return kept;
}

TermRef TermPool::up(std::vector<TermRef> children) {
    if (children.empty()) throw std::invalid_argument("up node needs at least one child");
    for (TermRef c : children)
        if (c->level != children.front()->level || c->level % 2 != 0)
            throw std::invalid_argument("up node children must share an even level");
    Term t;
    t.kind = TermKind::Up;
    t.level = static_cast<std::uint16_t>(children.front()->level + 1);
    t.children = prune(std::move(children), /*keep_minimal=*/true);
    return intern(std::move(t));
}

TermRef TermPool::down(std::vector<TermRef> children) {
    if (children.empty()) throw std::invalid_argument("down node needs at least one child");
    for (TermRef c : children)
        if (c->level != children.front()->level || c->level % 2 != 1)
            throw std::invalid_argument("down node children must share an odd level");
    Term t;
    t.kind = TermKind::Down;
    t.level = static_cast<std::uint16_t>(children.front()->level + 1);
    t.children = prune(std::move(children), /*keep_minimal=*/false);
    return intern(std::move(t));
}

bool TermPool::subsumes(TermRef a, TermRef b) {
    if (a->level != b->level)
        throw std::invalid_argument("subsumes: level mismatch");
    if (a == b) return true;
    auto memo = subsume_memo_.find({a, b});
    if (memo != subsume_memo_.end()) return memo->second;

    bool result;
    if (a->kind == TermKind::Base) {
        result = a->base.subset_of(b->base);
    } else if (a->kind == TermKind::Down) {
        // down X <= down Y  iff  every X generator fits under some Y generator
        result = std::all_of(a->children.begin(), a->children.end(), [&](TermRef x) {
            return std::any_of(b->children.begin(), b->children.end(),
                               [&](TermRef y) { return subsumes(x, y); });
        });
    } else {
        // up X <= up Y  iff  every Y generator is above some X generator
        result = std::all_of(b->children.begin(), b->children.end(), [&](TermRef y) {
            return std::any_of(a->children.begin(), a->children.end(),
                               [&](TermRef x) { return subsumes(x, y); });
        });
    }
    subsume_memo_.emplace(std::make_pair(a, b), result);
    return result;
}

std::vector<TermRef> prune_children(TermPool& pool, std::vector<TermRef> children,
                                    TermKind constructor) {
    return pool.prune_siblings(std::move(children), constructor == TermKind::Up);
}

bool member_initial(TermRef t, const StateSet& initial) {
    if (t->level < 1) throw std::invalid_argument("member_initial: level must be >= 1");
    if (t->kind == TermKind::Down)
        return std::any_of(t->children.begin(), t->children.end(),
                           [&](TermRef c) { return member_initial(c, initial); });
    if (t->level > 1)
        return std::all_of(t->children.begin(), t->children.end(),
                           [&](TermRef c) { return member_initial(c, initial); });
    // level-1 up node: the initial set must meet every generator
    return std::all_of(t->children.begin(), t->children.end(),
                       [&](TermRef c) { return initial.intersects(c->base); });
}

std::string render_term(TermRef t, const std::vector<std::string>* names) {
    if (t->kind == TermKind::Base) {
        std::string out = "{";
        bool first = true;
        t->base.for_each([&](State s) {
            if (!first) out += ",";
            first = false;
            out += names ? (*names)[s] : std::to_string(s);
        });
        return out + "}";
    }
    std::string out = t->kind == TermKind::Up ? "↑⊗{" : "↓{";  // ↑⊗ / ↓
    for (std::size_t i = 0; i < t->children.size(); ++i) {
        if (i > 0) out += ",";
        out += render_term(t->children[i], names);
    }
    return out + "}";
}

// ---------------------------------------------------------------------------
// explicit denotation
// ---------------------------------------------------------------------------

namespace {

void guard_size(std::size_t n, std::size_t guard) {
    if (n > guard) throw ResourceLimitError("denotation expansion exceeds size guard");
}

/// All subsets of the given element set.
ElemSet power_elems(const ElemSet& universe, std::size_t guard) {
    std::vector<Elem> items(universe.begin(), universe.end());
    if (items.size() >= 24) throw ResourceLimitError("denotation expansion exceeds size guard");
    guard_size(std::size_t{1} << items.size(), guard);
    ElemSet out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << items.size()); ++mask) {
        Elem e;
        for (std::size_t i = 0; i < items.size(); ++i)
            if (mask & (std::size_t{1} << i)) e.members.insert(items[i]);
        out.insert(std::move(e));
    }
    return out;
}

}  // namespace

ElemSet level_universe(unsigned level, State q0_size, std::size_t guard) {
    ElemSet cur;
    for (State s = 0; s < q0_size; ++s) cur.insert(Elem{static_cast<int>(s), {}});
    for (unsigned l = 0; l < level; ++l) cur = power_elems(cur, guard);
    return cur;
}

ElemSet denote(TermRef t, State q0_size, std::size_t guard) {
    if (t->kind == TermKind::Base) {
        ElemSet out;
        t->base.for_each([&](State s) { out.insert(Elem{static_cast<int>(s), {}}); });
        return out;
    }
    std::vector<ElemSet> kids;
    kids.reserve(t->children.size());
    for (TermRef c : t->children) kids.push_back(denote(c, q0_size, guard));

    if (t->kind == TermKind::Down) {
        // all subsets of some generator
        ElemSet out;
        for (const ElemSet& k : kids) {
            for (const Elem& e : power_elems(k, guard)) out.insert(e);
            guard_size(out.size(), guard);
        }
        return out;
    }
    // up node: elements of the level universe meeting every generator
    ElemSet universe = level_universe(t->level, q0_size, guard);
    ElemSet out;
    for (const Elem& r : universe) {
        bool all = true;
        for (const ElemSet& k : kids) {
            bool meets = std::any_of(r.members.begin(), r.members.end(),
                                     [&](const Elem& m) { return k.count(m) != 0; });
            if (!meets) {
                all = false;
                break;
            }
        }
        if (all) out.insert(r);
    }
    return out;
}

}  // namespace ws1s
